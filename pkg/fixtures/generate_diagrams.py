"""Regenerate the diagram fixtures from builder recipes.

Run ``python fixtures/generate_diagrams.py`` from the repository root.
The test suite checks that the files on disk match these recipes.
"""
from __future__ import annotations

import sys
from pathlib import Path

from mgrkit.diagram import format_diagram, strands

HERE = Path(__file__).resolve().parent
OTHER = {"left": "right", "right": "left"}

# files that are written by hand because they are meant to be rejected
HANDWRITTEN = {
    "theta_sink.d": (
        "# a theta whose three edges all point into one vertex\n"
        "arc a b c\n"
        "vertex cyclic a:in c:in b:in\n"
        "vertex cyclic a:out b:out c:out\n"
    ),
    "undeclared_arc.d": "arc a b\ncrossing a b z +\n",
    "dangling.d": "arc a b\ncrossing a b b +\narc c\nvertex split a c c\n",
}


def theta_twisted(i: int, j: int, k: int):
    """Theta with i, j, k curls on its three edges (negative: the other crossing)."""
    b = strands("d")
    for _ in range(abs(k)):
        b.twist(0, "left" if k > 0 else "right")
    b.fork(0)
    for _ in range(abs(i)):
        b.twist(0, "left" if i > 0 else "right")
    for _ in range(abs(j)):
        b.twist(1, "left" if j > 0 else "right")
    return b.join(0).close()


def single():
    out = {
        "circle.d": strands("d").close(),
        "two_circles.d": strands("dd").close(),
        "hopf.d": strands("dd").cross(0, "left").cross(0, "left").close(),
        "theta.d": strands("d").fork(0).join(0).close(),
        # a circle linked once with the right edge of a theta
        "clasp.d": strands("d").fork(0).cap(2, "ud").cross(1, "left").cross(2, "right").cup(1).join(0).close(),
        # two theta edges cross once: the ribbon surface is a punctured torus
        "theta_crossed.d": strands("d").fork(0).cross(0, "left").join(0).close(),
    }
    for twists in [(1, 0, 0), (1, 1, 1), (2, -1, 1), (0, -2, 3)]:
        name = "theta_twist_{}_{}_{}.d".format(*twists).replace("-", "m")
        out[name] = theta_twisted(*twists)
    return out


def move_pairs():
    pairs = {}
    # R2: two strands, then the same strand passing over twice
    for ori in ["dd", "du", "ud", "uu"]:
        for ov in ["left", "right"]:
            pairs[f"r2_{ori}_{ov}"] = (
                strands(ori).close(),
                strands(ori).cross(0, ov).cross(0, OTHER[ov]).close(),
            )
    for ori in ["dd", "du"]:
        for ov in ["left", "right"]:
            pairs[f"r2_theta_circle_{ori}_{ov}"] = (
                strands(ori).fork(0).join(0).close(),
                strands(ori).fork(0).cross(1, ov).cross(1, OTHER[ov]).join(0).close(),
            )
    # R3: the braid relation between three strands
    for ori in ["ddd", "dud", "udu", "uuu"]:
        for ov in ["left", "right"]:
            pairs[f"r3_{ori}_{ov}"] = (
                strands(ori).cross(0, ov).cross(1, ov).cross(0, ov).close(),
                strands(ori).cross(1, ov).cross(0, ov).cross(1, ov).close(),
            )
    for ov in ["left", "right"]:
        def r3_theta(first):
            b = strands("dd").fork(0)
            seq = [0, 1, 0] if first else [1, 0, 1]
            for p in seq:
                b.cross(p, ov)
            for p in [0, 1, 0]:
                b.cross(p, "right")
            return b.join(0).close()
        pairs[f"r3_theta_{ov}"] = (r3_theta(True), r3_theta(False))

    # R5: a strand passing a vertex
    def restore_join(b):
        return b.fork(1).cross(0, "left").cross(1, "left")

    def restore_fork(b):
        return b.join(0).cross(0, "right")

    for ori in ["ddd", "ddu", "uud", "uuu"]:
        for ov in ["left", "right"]:
            pairs[f"r5_join_{ori}_{ov}"] = (
                restore_join(strands(ori).join(0).cross(0, ov)).close(),
                restore_join(strands(ori).cross(1, ov).cross(0, ov).join(1)).close(),
            )
    for ori in ["dd", "du", "ud", "uu"]:
        for ov in ["left", "right"]:
            pairs[f"r5_fork_{ori}_{ov}"] = (
                restore_fork(strands(ori).cross(0, ov).fork(0)).close(),
                restore_fork(strands(ori).fork(1).cross(0, ov).cross(1, ov)).close(),
            )

    # R6: re-bracketing three strands, and the two shapes of an IH move
    for ori in ["ddd", "uuu"]:
        pairs[f"r6_merge_assoc_{ori}"] = (
            strands(ori).join(0).join(0).fork(0).fork(0).close(),
            strands(ori).join(1).join(0).fork(0).fork(0).close(),
        )
        pairs[f"r6_split_assoc_{ori}"] = (
            strands(ori).join(0).join(0).fork(0).fork(0).close(),
            strands(ori).join(0).join(0).fork(0).fork(1).close(),
        )
    for ori in ["dd", "uu"]:
        pairs[f"r6_ih_right_{ori}"] = (
            strands(ori).join(0).fork(0).close(),
            strands(ori).fork(0).join(1).close(),
        )
        pairs[f"r6_ih_left_{ori}"] = (
            strands(ori).join(0).fork(0).close(),
            strands(ori).fork(1).join(0).close(),
        )
    return pairs


def render() -> dict[str, str]:
    """Relative path -> file text for every generated fixture."""
    files = {}
    for name, D in single().items():
        files[f"diagrams/{name}"] = format_diagram(D)
    for name, text in HANDWRITTEN.items():
        files[f"diagrams/{name}"] = text
    for name, (a, b) in move_pairs().items():
        files[f"diagrams/moves/{name}.before.d"] = format_diagram(a)
        files[f"diagrams/moves/{name}.after.d"] = format_diagram(b)
    return files


def main() -> int:
    for rel, text in render().items():
        path = HERE / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    print(f"wrote {len(render())} files under {HERE / 'diagrams'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
