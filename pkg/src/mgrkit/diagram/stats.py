"""Topology of the ribbon surface of a diagram.

The surface is the regular neighbourhood of the underlying trivalent graph
with the planar rotation at each vertex.  Crossings only record how bands
pass each other in space, so they do not enter the abstract surface.
A circle component is an annulus: it counts as one edge without
vertices, contributes 0 to the Euler characteristic and 2 boundary
curves.
"""
from __future__ import annotations

from dataclasses import dataclass

from .model import SurfaceDiagram


@dataclass(frozen=True)
class SurfaceStats:
    graph_vertices: int
    graph_edges: int
    euler_characteristic: int
    boundary_components: int
    genus: int
    connected_components: int

    def __str__(self) -> str:
        return (f"V={self.graph_vertices} E={self.graph_edges} chi={self.euler_characteristic} "
                f"boundary={self.boundary_components} genus={self.genus}")


def _darts(D: SurfaceDiagram):
    """Rotation ``sigma`` and involution ``alpha`` on darts ``(edge, 0=tail | 1=head)``."""
    end_dart = {}
    for e, edge in enumerate(D.edges):
        end_dart[(edge.arcs[0], "out")] = (e, 0)
        end_dart[(edge.arcs[-1], "in")] = (e, 1)
    sigma = {}
    for v in D.vertices:
        ds = [end_dart[end] for end in v.ends]
        for i, d in enumerate(ds):
            sigma[d] = ds[(i + 1) % 3]
    return sigma


def boundary_walks(D: SurfaceDiagram) -> list[list[tuple[int, int]]]:
    """Boundary curves of the graph part, as orbits of ``sigma . alpha``."""
    sigma = _darts(D)
    seen = set()
    walks = []
    for d in sorted(sigma):
        if d in seen:
            continue
        walk = []
        cur = d
        while cur not in seen:
            seen.add(cur)
            walk.append(cur)
            e, k = cur
            cur = sigma[(e, 1 - k)]
        walks.append(walk)
    return walks


def _components(D: SurfaceDiagram) -> int:
    parent = list(range(len(D.vertices)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for e in D.edges:
        parent[find(e.tail)] = find(e.head)
    return len({find(i) for i in range(len(D.vertices))}) + len(D.circles)


def surface_stats(D: SurfaceDiagram) -> SurfaceStats:
    V = len(D.vertices)
    E = len(D.edges) + len(D.circles)
    chi = V - len(D.edges)
    b = len(boundary_walks(D)) + 2 * len(D.circles)
    conn = _components(D)
    twice_genus = 2 * conn - chi - b
    assert twice_genus >= 0 and twice_genus % 2 == 0, "rotation system gives a non-orientable count"
    return SurfaceStats(V, E, chi, b, twice_genus // 2, conn)
