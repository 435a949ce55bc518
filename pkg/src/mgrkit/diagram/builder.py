"""Build diagrams row by row from vertical strands.

Strands sit at integer positions and are drawn from top to bottom; each
carries an orientation, ``'d'`` (downwards) or ``'u'`` (upwards).  The
operations below act on adjacent positions, and :meth:`close` joins the
bottom of every remaining strand to the top of the same position by a
path around the right-hand side, as in a braid closure.  Crossing signs
and vertex rotations are computed from this planar picture, which keeps
every generated diagram consistent with the conventions of
:mod:`.model`.
"""
from __future__ import annotations

from .model import Crossing, SurfaceDiagram, Vertex


class StrandBuilder:
    def __init__(self, orientations: str = "d"):
        self._parent: dict[int, int] = {}
        self._next = 0
        self.crossings: list[tuple[int, int, int, int]] = []
        self.vertices: list[tuple[tuple[int, str], ...]] = []
        self.strands: list[tuple[int, str]] = [(self._new(), o) for o in orientations]
        self.top = list(self.strands)

    def _new(self) -> int:
        a = self._next
        self._next += 1
        self._parent[a] = a
        return a

    def _find(self, a: int) -> int:
        while self._parent[a] != a:
            self._parent[a] = self._parent[self._parent[a]]
            a = self._parent[a]
        return a

    def _union(self, a: int, b: int):
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            self._parent[max(ra, rb)] = min(ra, rb)

    def cross(self, i: int, over: str = "left") -> "StrandBuilder":
        """Swap strands i and i+1; ``over`` names the strand that passes over."""
        (la, lo), (ra, ro) = self.strands[i], self.strands[i + 1]
        # screen directions: the left strand moves down-right, the right one down-left
        ld = (1, -1) if lo == "d" else (-1, 1)
        rd = (-1, -1) if ro == "d" else (1, 1)
        if over == "left":
            (oa, od), (ua, uo_, ud) = (la, ld), (ra, ro, rd)
        elif over == "right":
            (oa, od), (ua, uo_, ud) = (ra, rd), (la, lo, ld)
        else:
            raise ValueError("over must be 'left' or 'right'")
        normal = (-od[1], od[0])
        sign = 1 if normal[0] * ud[0] + normal[1] * ud[1] > 0 else -1
        fresh = self._new()
        # the arc above is the incoming one for a downward strand
        ui, uo = (ua, fresh) if uo_ == "d" else (fresh, ua)
        self.crossings.append((oa, ui, uo, sign))
        if over == "left":
            self.strands[i:i + 2] = [(fresh, ro), (la, lo)]
        else:
            self.strands[i:i + 2] = [(ra, ro), (fresh, lo)]
        return self

    def join(self, i: int, orientation: str | None = None) -> "StrandBuilder":
        """Strands i and i+1 meet at a vertex and continue as one strand."""
        (la, lo), (ra, ro) = self.strands[i], self.strands[i + 1]
        if orientation is None:
            if lo != ro:
                raise ValueError("mixed orientations above a join need an explicit orientation")
            orientation = lo
        b = self._new()
        role = {"d": "in", "u": "out"}
        below = {"d": "out", "u": "in"}
        # counterclockwise: upper-left, bottom, upper-right
        self.vertices.append(((la, role[lo]), (b, below[orientation]), (ra, role[ro])))
        self.strands[i:i + 2] = [(b, orientation)]
        return self

    def fork(self, i: int, orientations: str | None = None) -> "StrandBuilder":
        """Strand i ends at a vertex from which two strands continue."""
        a, o = self.strands[i]
        lo, ro = orientations if orientations is not None else (o, o)
        la, ra = self._new(), self._new()
        above = {"d": "in", "u": "out"}
        role = {"d": "out", "u": "in"}
        # counterclockwise: top, lower-left, lower-right
        self.vertices.append(((a, above[o]), (la, role[lo]), (ra, role[ro])))
        self.strands[i:i + 1] = [(la, lo), (ra, ro)]
        return self

    def cap(self, i: int, orientations: str = "ud") -> "StrandBuilder":
        """Insert a turning strand (an upside-down U) at positions i, i+1."""
        if orientations not in ("ud", "du"):
            raise ValueError("a cap joins one upward and one downward strand")
        a = self._new()
        self.strands[i:i] = [(a, orientations[0]), (a, orientations[1])]
        return self

    def cup(self, i: int) -> "StrandBuilder":
        """Join strands i and i+1 at the bottom (a U turn)."""
        (la, lo), (ra, ro) = self.strands[i], self.strands[i + 1]
        if lo == ro:
            raise ValueError("a cup joins strands of opposite orientation")
        self._union(la, ra)
        del self.strands[i:i + 2]
        return self

    def twist(self, i: int, over: str = "left") -> "StrandBuilder":
        """A curl on strand i, i.e. a full twist of its band."""
        o = self.strands[i][1]
        self.cap(i + 1, "ud" if o == "d" else "du")
        self.cross(i, over)
        return self.cup(i)

    def close(self) -> SurfaceDiagram:
        if len(self.strands) != len(self.top):
            raise ValueError("closure needs as many strands at the bottom as at the top")
        for (a, o), (b, p) in zip(self.strands, self.top):
            if o != p:
                raise ValueError("closure strands must keep their orientation")
            self._union(a, b)
        return self._finish()

    def finish(self) -> SurfaceDiagram:
        """Finish without closure; every strand must already be capped off."""
        if self.strands or self.top:
            raise ValueError("open strands remain; use close()")
        return self._finish()

    def _finish(self) -> SurfaceDiagram:
        roots = sorted({self._find(a) for a in self._parent})
        name = {r: f"a{k + 1}" for k, r in enumerate(roots)}
        n = lambda a: name[self._find(a)]  # noqa: E731
        crossings = [Crossing(n(o), n(ui), n(uo), s) for o, ui, uo, s in self.crossings]
        vertices = [Vertex(tuple((n(a), r) for a, r in ends)) for ends in self.vertices]
        return SurfaceDiagram.build([name[r] for r in roots], crossings, vertices)


def strands(orientations: str = "d") -> StrandBuilder:
    return StrandBuilder(orientations)
