"""Slow, direct reference implementations used to cross-check the engines."""
import itertools

from mgrkit.diagram.model import SurfaceDiagram


def brute_mgr_colorings(D: SurfaceDiagram, M) -> int:
    """Try every map from arcs to M and test each local condition literally."""
    idx = {a: i for i, a in enumerate(D.arcs)}
    comp = M.comp_of
    count = 0
    for C in itertools.product(range(M.size), repeat=len(D.arcs)):
        ok = True
        for c in D.crossings:
            o, ui, uo = C[idx[c.over]], C[idx[c.under_in]], C[idx[c.under_out]]
            if c.sign > 0 and M.op[ui, o] != uo:
                ok = False
            if c.sign < 0 and M.op[uo, o] != ui:
                ok = False
            if not ok:
                break
        if ok:
            for v in D.vertices:
                p, q, r = (C[idx[a]] for a in v.roles)
                if v.is_merge:
                    left, right, whole = p, q, r
                else:
                    whole, left, right = p, q, r
                if comp[left] != comp[right] or M.product_table[left, right] != whole:
                    ok = False
                    break
        count += ok
    return count


def brute_flows(D: SurfaceDiagram, G) -> int:
    idx = {a: i for i, a in enumerate(D.arcs)}
    n = 0
    for phi in itertools.product(range(G.order), repeat=len(D.arcs)):
        ok = True
        for c in D.crossings:
            o, ui, uo = phi[idx[c.over]], phi[idx[c.under_in]], phi[idx[c.under_out]]
            if c.sign > 0 and G.conjugate(ui, o) != uo:
                ok = False
            if c.sign < 0 and G.conjugate(uo, o) != ui:
                ok = False
        for v in D.vertices:
            p, q, r = (phi[idx[a]] for a in v.roles)
            if v.is_merge and G.product(p, q) != r:
                ok = False
            if not v.is_merge and G.product(q, r) != p:
                ok = False
        n += ok
    return n


def brute_system_counts(S) -> list[int]:
    """Per-flow counts by plain nested loops over every colour assignment."""
    from mgrkit.solver.words import eval_rack_word

    out = []
    n = S.family.size
    for f in itertools.product(range(S.t), repeat=len(S.flow_vars)):
        flow = dict(zip(S.flow_vars, f))
        hits = 0
        for cs in itertools.product(range(n), repeat=len(S.color_vars)):
            colors = dict(zip(S.color_vars, cs))
            if all(eval_rack_word(l, colors, flow, S.family) == eval_rack_word(r, colors, flow, S.family)
                   for l, r in S.relations):
                hits += 1
        out.append(hits)
    return out


def faces_by_hand_theta():
    """Planar theta: three faces of the plane drawing, hence three boundary curves."""
    return 3
