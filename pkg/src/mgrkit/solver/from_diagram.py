"""Turn a diagram into a flow-parameterized constraint system.

With an abelian flow group a flow is constant along each edge and each
circle, and at every vertex the incoming values sum to the outgoing
one.  Edges outside a spanning forest of the graph, together with the
circles, get free flow variables; forest edges are then solved leaf by
leaf.  Arcs meeting at a vertex share one colour variable, and each
crossing contributes one relation.
"""
from __future__ import annotations

from ..diagram.model import SurfaceDiagram
from ..errors import InvalidParameter
from ..family import GFamily
from .system import ConstraintSystem
from .words import GroupWord, Op, Var


def _flow_words(D: SurfaceDiagram) -> tuple[list[str], dict[str, GroupWord]]:
    nv = len(D.vertices)
    parent = list(range(nv))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    tree = set()
    for e, edge in enumerate(D.edges):
        ra, rb = find(edge.tail), find(edge.head)
        if ra != rb:
            parent[ra] = rb
            tree.add(e)

    names: list[str] = []
    value: dict[int, dict[str, int]] = {}
    for e in range(len(D.edges)):
        if e not in tree:
            name = f"f{len(names) + 1}"
            names.append(name)
            value[e] = {name: 1}
    circle_vals = []
    for _ in D.circles:
        name = f"f{len(names) + 1}"
        names.append(name)
        circle_vals.append({name: 1})

    # incident (edge, +1 for an in end / -1 for an out end) at each vertex
    incident: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
    for e, edge in enumerate(D.edges):
        incident[edge.head].append((e, 1))
        incident[edge.tail].append((e, -1))
    progress = True
    while progress:
        progress = False
        for inc in incident:
            unknown = [(e, s) for e, s in inc if e not in value]
            if len(unknown) != 1:
                continue
            e, s = unknown[0]
            acc: dict[str, int] = {}
            # sum of in ends equals sum of out ends
            for f, sf in inc:
                if f == e:
                    continue
                for k, c in value[f].items():
                    acc[k] = acc.get(k, 0) - s * sf * c
            value[e] = {k: c for k, c in acc.items() if c}
            progress = True

    words: dict[str, GroupWord] = {}
    for e, edge in enumerate(D.edges):
        g = GroupWord(tuple((c, k) for k, c in sorted(value[e].items(), key=lambda kv: names.index(kv[0]))))
        for a in edge.arcs:
            words[a] = g
    for circ, val in zip(D.circles, circle_vals):
        g = GroupWord(tuple((c, k) for k, c in val.items()))
        for a in circ:
            words[a] = g
    return names, words


def system_from_diagram(D: SurfaceDiagram, F: GFamily, family_spec: str = "") -> ConstraintSystem:
    """Constraint system whose per-flow counts equal those of ``count_per_flow(D, F)``.

    F must be a family over a cyclic group.
    """
    if not F.group.is_abelian:
        raise InvalidParameter("diagram systems need an abelian (cyclic) flow group")
    flow_names, words = _flow_words(D)

    parent = {a: a for a in D.arcs}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for v in D.vertices:
        first = v.ends[0][0]
        for a, _ in v.ends[1:]:
            parent[find(a)] = find(first)
    classes: dict[str, str] = {}
    colors: list[str] = []
    for a in D.arcs:
        r = find(a)
        if r not in classes:
            classes[r] = f"x{len(colors) + 1}"
            colors.append(classes[r])
    var = {a: Var(classes[find(a)]) for a in D.arcs}

    rels = []
    for c in D.crossings:
        g = words[c.over]
        if c.sign > 0:
            rels.append((var[c.under_out], Op(var[c.under_in], g, var[c.over])))
        else:
            rels.append((var[c.under_in], Op(var[c.under_out], g, var[c.over])))
    return ConstraintSystem(F, tuple(flow_names), tuple(colors), tuple(rels), (), family_spec)
