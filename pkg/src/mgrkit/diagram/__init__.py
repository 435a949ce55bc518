"""Diagrams of oriented spatial surfaces, their colorings and surface statistics."""
from .builder import StrandBuilder, strands
from .coloring import (
    Flow,
    colorings_mgr,
    count_colorings_mgr,
    count_per_flow,
    enumerate_flows,
    per_flow_colorings,
    reverse_circle,
)
from .model import Crossing, Edge, SurfaceDiagram, Vertex, format_diagram, parse_diagram
from .stats import SurfaceStats, boundary_walks, surface_stats

__all__ = [
    "Crossing", "Edge", "Flow", "StrandBuilder", "SurfaceDiagram", "SurfaceStats", "Vertex",
    "boundary_walks", "colorings_mgr", "count_colorings_mgr", "count_per_flow", "enumerate_flows",
    "format_diagram", "parse_diagram", "per_flow_colorings", "reverse_circle", "strands", "surface_stats",
]
