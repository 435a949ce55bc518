"""Y-oriented diagrams of oriented spatial surfaces.

A diagram is a set of oriented arcs joined at crossings and trivalent
vertices.  Every arc has a tail (start) and a head (end); a head is an
under-crossing entry or an incoming vertex end, a tail is an
under-crossing exit or an outgoing vertex end.  An arc with neither is a
closed loop that only passes over other strands.

File format (``#`` starts a comment)::

    arc a b c
    circle p q                 # closed strand, arcs in traversal order
    crossing <over> <under_in> <under_out> +|-
    vertex merge <in_left> <in_right> <out>
    vertex split <in> <out_left> <out_right>
    vertex cyclic a:in b:out c:in   # ends in counterclockwise order

Sign ``+`` means the under strand runs along the over strand's normal
(its direction turned a quarter counterclockwise), so the colour of
``under_out`` is ``under_in * over``; ``-`` uses the inverse operation.

At a merge the counterclockwise order of ends is ``in_left, out,
in_right`` and the out colour is ``in_left . in_right``.  At a split it is
``in, out_left, out_right`` and the in colour is ``out_left . out_right``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import DiagramError, ParseError, YOrientationError

_ARC = re.compile(r"[A-Za-z0-9_.']+")


@dataclass(frozen=True)
class Crossing:
    over: str
    under_in: str
    under_out: str
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True)
class Vertex:
    """A trivalent vertex; ``ends`` lists ``(arc, 'in'|'out')`` counterclockwise."""

    ends: tuple[tuple[str, str], ...]

    @property
    def n_in(self) -> int:
        return sum(1 for _, r in self.ends if r == "in")

    @property
    def is_merge(self) -> bool:
        return self.n_in == 2

    def _rotated(self, role: str) -> tuple[str, str, str]:
        k = next(i for i, (_, r) in enumerate(self.ends) if r == role)
        return tuple(self.ends[(k + j) % 3][0] for j in range(3))

    @property
    def roles(self) -> tuple[str, str, str]:
        """``(in_left, in_right, out)`` for a merge, ``(in, out_left, out_right)`` for a split."""
        if self.is_merge:
            out, right, left = self._rotated("out")
            return left, right, out
        return self._rotated("in")

    @classmethod
    def merge(cls, left: str, right: str, out: str) -> "Vertex":
        return cls(((left, "in"), (out, "out"), (right, "in")))

    @classmethod
    def split(cls, inc: str, left: str, right: str) -> "Vertex":
        return cls(((inc, "in"), (left, "out"), (right, "out")))

    def __str__(self) -> str:
        if self.is_merge:
            return "vertex merge {} {} {}".format(*self.roles)
        return "vertex split {} {} {}".format(*self.roles)


@dataclass(frozen=True)
class Edge:
    """Arcs chained through under-crossings, from one vertex end to another."""

    arcs: tuple[str, ...]
    tail: int
    head: int


@dataclass(frozen=True, eq=False)
class SurfaceDiagram:
    arcs: tuple[str, ...]
    crossings: tuple[Crossing, ...]
    vertices: tuple[Vertex, ...]
    circles: tuple[tuple[str, ...], ...] = ()
    edges: tuple[Edge, ...] = ()
    _index: dict = field(default_factory=dict, repr=False)

    @classmethod
    def build(cls, arcs, crossings=(), vertices=(), declared_circles=()) -> "SurfaceDiagram":
        """Validate the data and derive edges and circle components."""
        arcs = tuple(arcs)
        crossings = tuple(crossings)
        vertices = tuple(vertices)
        _check(arcs, crossings, vertices, declared_circles)
        edges, circles = _chains(arcs, crossings, vertices)
        _match_declared(circles, declared_circles)
        return cls(arcs, crossings, vertices, circles, edges, {a: i for i, a in enumerate(arcs)})

    def arc_index(self, arc: str) -> int:
        return self._index[arc]

    def __repr__(self) -> str:
        return (f"SurfaceDiagram(arcs={len(self.arcs)}, crossings={len(self.crossings)}, "
                f"vertices={len(self.vertices)}, circles={len(self.circles)})")


def _check(arcs, crossings, vertices, declared_circles):
    declared = set()
    for a in arcs:
        if a in declared:
            raise DiagramError(f"arc {a!r} is declared twice")
        declared.add(a)

    def known(a, where):
        if a not in declared:
            raise DiagramError(f"{where} refers to undeclared arc {a!r}")

    for k, c in enumerate(crossings):
        for a in (c.over, c.under_in, c.under_out):
            known(a, f"crossing {k + 1}")
    for k, v in enumerate(vertices):
        if len(v.ends) != 3:
            raise DiagramError(f"vertex {k + 1} has {len(v.ends)} ends, expected 3")
        for a, role in v.ends:
            known(a, f"vertex {k + 1}")
            if role not in ("in", "out"):
                raise DiagramError(f"vertex {k + 1}: end role must be 'in' or 'out', got {role!r}")
        if v.n_in == 3:
            raise YOrientationError(f"vertex {k + 1} is a sink (all three ends point in)")
        if v.n_in == 0:
            raise YOrientationError(f"vertex {k + 1} is a source (all three ends point out)")
    for circ in declared_circles:
        for a in circ:
            known(a, "circle")

    heads = {a: [] for a in arcs}
    tails = {a: [] for a in arcs}
    for k, c in enumerate(crossings):
        heads[c.under_in].append(f"crossing {k + 1}")
        tails[c.under_out].append(f"crossing {k + 1}")
    for k, v in enumerate(vertices):
        for a, role in v.ends:
            (heads if role == "in" else tails)[a].append(f"vertex {k + 1}")
    for a in arcs:
        h, t = heads[a], tails[a]
        if len(h) > 1:
            raise DiagramError(f"the end of arc {a!r} is used twice ({', '.join(h)})")
        if len(t) > 1:
            raise DiagramError(f"the start of arc {a!r} is used twice ({', '.join(t)})")
        if len(h) != len(t):
            which = "end" if not h else "start"
            raise DiagramError(f"arc {a!r} has a dangling {which}")


def _chains(arcs, crossings, vertices):
    # successor of an arc through the crossing where it passes under
    nxt = {c.under_in: c.under_out for c in crossings}
    head_vertex = {}
    tail_vertex = {}
    for k, v in enumerate(vertices):
        for a, role in v.ends:
            (head_vertex if role == "in" else tail_vertex)[a] = k
    used = set()
    edges = []
    for k, v in enumerate(vertices):
        for a, role in v.ends:
            if role != "out":
                continue
            chain = [a]
            used.add(a)
            while chain[-1] not in head_vertex:
                b = nxt[chain[-1]]
                chain.append(b)
                used.add(b)
            edges.append(Edge(tuple(chain), k, head_vertex[chain[-1]]))
    circles = []
    for a in arcs:
        if a in used:
            continue
        chain = [a]
        used.add(a)
        while chain[-1] in nxt and nxt[chain[-1]] != a:
            b = nxt[chain[-1]]
            chain.append(b)
            used.add(b)
        circles.append(tuple(chain))
    return tuple(edges), tuple(circles)


def _canon(cycle):
    cycle = tuple(cycle)
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


def _match_declared(circles, declared):
    found = {_canon(c) for c in circles}
    for circ in declared:
        if _canon(circ) not in found:
            raise DiagramError(f"declared circle {' '.join(circ)} is not a closed strand of the diagram")


# text format


def parse_diagram(text: str) -> SurfaceDiagram:
    arcs: list[str] = []
    seen: set[str] = set()
    crossings = []
    vertices = []
    circles = []

    def add_arc(a, lineno):
        if not _ARC.fullmatch(a):
            raise ParseError(f"bad arc name {a!r}", lineno)
        if a not in seen:
            seen.add(a)
            arcs.append(a)

    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        head, args = toks[0], toks[1:]
        try:
            if head == "arc":
                if not args:
                    raise ParseError("'arc' needs at least one name", lineno)
                for a in args:
                    if a in seen:
                        raise DiagramError(f"arc {a!r} is declared twice")
                    add_arc(a, lineno)
            elif head == "circle":
                if not args:
                    raise ParseError("'circle' needs at least one arc", lineno)
                for a in args:
                    add_arc(a, lineno)
                circles.append(tuple(args))
            elif head == "crossing":
                if len(args) != 4 or args[3] not in ("+", "-"):
                    raise ParseError("expected 'crossing <over> <under_in> <under_out> +|-'", lineno)
                crossings.append((lineno, Crossing(args[0], args[1], args[2], 1 if args[3] == "+" else -1)))
            elif head == "vertex":
                if not args:
                    raise ParseError("'vertex' needs a kind", lineno)
                kind, ends = args[0], args[1:]
                if kind in ("merge", "split"):
                    if len(ends) != 3:
                        raise ParseError(f"'vertex {kind}' needs three arcs", lineno)
                    v = Vertex.merge(*ends) if kind == "merge" else Vertex.split(*ends)
                elif kind == "cyclic":
                    parsed = []
                    for e in ends:
                        a, sep, role = e.partition(":")
                        if not sep or role not in ("in", "out"):
                            raise ParseError(f"cyclic vertex ends look like 'a:in' or 'a:out', got {e!r}", lineno)
                        parsed.append((a, role))
                    if len(parsed) != 3:
                        raise ParseError("'vertex cyclic' needs three ends", lineno)
                    v = Vertex(tuple(parsed))
                else:
                    raise ParseError(f"unknown vertex kind {kind!r}", lineno)
                vertices.append((lineno, v))
            else:
                raise ParseError(f"unknown directive {head!r}", lineno)
        except DiagramError as e:
            raise type(e)(f"line {lineno}: {e}") from None

    # report undeclared arcs with the offending line
    for lineno, c in crossings:
        for a in (c.over, c.under_in, c.under_out):
            if a not in seen:
                raise DiagramError(f"line {lineno}: crossing refers to undeclared arc {a!r}")
    for lineno, v in vertices:
        for a, _ in v.ends:
            if a not in seen:
                raise DiagramError(f"line {lineno}: vertex refers to undeclared arc {a!r}")
    return SurfaceDiagram.build(arcs, [c for _, c in crossings], [v for _, v in vertices], circles)


def format_diagram(D: SurfaceDiagram) -> str:
    in_circle = {a for c in D.circles for a in c}
    lines = []
    plain = [a for a in D.arcs if a not in in_circle]
    if plain:
        lines.append("arc " + " ".join(plain))
    for c in D.circles:
        lines.append("circle " + " ".join(c))
    for c in D.crossings:
        lines.append(f"crossing {c.over} {c.under_in} {c.under_out} {'+' if c.sign > 0 else '-'}")
    for v in D.vertices:
        lines.append(str(v))
    return "\n".join(lines) + "\n"
