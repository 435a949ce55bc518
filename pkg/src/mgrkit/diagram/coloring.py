"""Colorings of diagrams by MGRs, G-flows, and per-flow counts."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..algebra.groups import FiniteGroup
from ..errors import InvalidOperation
from ..family import GFamily, MultipleGroupRack, associated_mgr, trivial_gfamily
from ..multiset import CountMultiset
from .engine import Constraint, ConstraintProblem
from .model import Crossing, SurfaceDiagram, Vertex


@dataclass(frozen=True)
class Flow:
    """Group elements indexed like ``arcs``."""

    arcs: tuple[str, ...]
    values: tuple[int, ...]

    def __getitem__(self, arc: str) -> int:
        return self.values[self.arcs.index(arc)]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.arcs, self.values))


class _MgrTables:
    def __init__(self, M: MultipleGroupRack):
        prod = M.product_table
        inv = M.inverse_table
        self.op = M.op.tolist()
        self.inv_op = M.inv_op.tolist()
        self.prod = prod.tolist()
        # c = a b  =>  a = c b^-1  and  b = a^-1 c  (both -1 across components)
        self.rdiv = prod[:, inv].tolist()
        self.ldiv = prod[inv, :].tolist()
        self.size = M.size


def _mgr_problem(D: SurfaceDiagram, T: _MgrTables) -> ConstraintProblem:
    idx = D.arc_index
    cons = []
    for c in D.crossings:
        o, ui, uo = idx(c.over), idx(c.under_in), idx(c.under_out)
        if c.sign > 0:
            cons.append(Constraint(ui, o, uo, T.op, T.inv_op))
        else:
            cons.append(Constraint(uo, o, ui, T.op, T.inv_op))
    for v in D.vertices:
        p, q, r = (idx(a) for a in v.roles)
        if v.is_merge:
            cons.append(Constraint(p, q, r, T.prod, T.rdiv, T.ldiv))
        else:
            cons.append(Constraint(q, r, p, T.prod, T.rdiv, T.ldiv))
    return ConstraintProblem(len(D.arcs), T.size, cons)


def count_colorings_mgr(D: SurfaceDiagram, M: MultipleGroupRack) -> int:
    """``#Col_M(D)``."""
    return _mgr_problem(D, _MgrTables(M)).count()


def colorings_mgr(D: SurfaceDiagram, M: MultipleGroupRack):
    """Iterate over all M-colorings as tuples aligned with ``D.arcs``."""
    return _mgr_problem(D, _MgrTables(M)).solutions()


def enumerate_flows(D: SurfaceDiagram, G: FiniteGroup) -> list[Flow]:
    """All G-flows, found as colorings by the MGR of the one-point G-family."""
    M = associated_mgr(trivial_gfamily(G, 1))
    # one component, so the flattened index is the group element itself
    return [Flow(D.arcs, sol) for sol in colorings_mgr(D, M)]


def _vertex_classes(D: SurfaceDiagram) -> list[int]:
    """Arcs forced to share an X-colour (the three ends of each vertex)."""
    parent = list(range(len(D.arcs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for v in D.vertices:
        first = D.arc_index(v.ends[0][0])
        for a, _ in v.ends[1:]:
            parent[find(D.arc_index(a))] = find(first)
    roots = {}
    return [roots.setdefault(find(i), len(roots)) for i in range(len(D.arcs))]


class _FlowCounter:
    def __init__(self, D: SurfaceDiagram, F: GFamily):
        self.D = D
        self.F = F
        self.cls = _vertex_classes(D)
        self.nclasses = max(self.cls) + 1 if self.cls else 0
        self.tables = [F.ops[g].tolist() for g in range(F.group.order)]
        self.inverse = F.group.inverse.tolist()

    def count(self, flow: Flow) -> int:
        D, cls = self.D, self.cls
        cons = []
        for c in D.crossings:
            g = flow.values[D.arc_index(c.over)]
            o, ui, uo = (cls[D.arc_index(a)] for a in (c.over, c.under_in, c.under_out))
            fwd, back = self.tables[g], self.tables[self.inverse[g]]
            if c.sign > 0:
                cons.append(Constraint(ui, o, uo, fwd, back))
            else:
                cons.append(Constraint(uo, o, ui, fwd, back))
        return ConstraintProblem(self.nclasses, self.F.size, cons).count()


_WORKER: _FlowCounter | None = None


def _init(D, F):
    global _WORKER
    _WORKER = _FlowCounter(D, F)


def _run(flows):
    return [_WORKER.count(f) for f in flows]


def per_flow_colorings(D: SurfaceDiagram, F: GFamily, workers: int = 1) -> list[tuple[Flow, int]]:
    """``(phi, #Col_X(D, phi))`` for every G-flow phi, in enumeration order."""
    flows = enumerate_flows(D, F.group)
    if workers <= 1 or len(flows) < 2:
        counter = _FlowCounter(D, F)
        return [(f, counter.count(f)) for f in flows]
    chunks = [flows[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers, initializer=_init, initargs=(D, F)) as ex:
        parts = list(ex.map(_run, chunks))
    counts = [0] * len(flows)
    for i, part in enumerate(parts):
        counts[i::workers] = part
    return list(zip(flows, counts))


def count_per_flow(D: SurfaceDiagram, F: GFamily, workers: int = 1) -> CountMultiset:
    """The multiset ``{#Col_X(D, phi) : phi a G-flow}``."""
    return CountMultiset.from_counts(n for _, n in per_flow_colorings(D, F, workers))


def reverse_circle(D: SurfaceDiagram, component) -> SurfaceDiagram:
    """Reverse one circle component, given by its index or by one of its arcs.

    Crossings where the circle meets another strand flip sign; at a
    crossing of the circle with itself both strands turn, so the sign stays.
    Where the circle passes under, the roles of ``under_in`` and
    ``under_out`` swap.
    """
    if isinstance(component, (int, np.integer)):
        if not 0 <= component < len(D.circles):
            raise InvalidOperation(f"diagram has {len(D.circles)} circle components, no index {component}")
        circle = D.circles[component]
    else:
        matches = [c for c in D.circles if component in c]
        if not matches:
            raise InvalidOperation(f"arc {component!r} does not belong to a circle component")
        circle = matches[0]
    arcs = set(circle)
    crossings = []
    for c in D.crossings:
        over_in = c.over in arcs
        under_in = c.under_in in arcs
        ui, uo = (c.under_out, c.under_in) if under_in else (c.under_in, c.under_out)
        sign = c.sign if over_in == under_in else -c.sign
        crossings.append(Crossing(c.over, ui, uo, sign))
    circles = [tuple(reversed(c)) if c == circle else c for c in D.circles]
    return SurfaceDiagram.build(D.arcs, crossings, D.vertices, circles)
