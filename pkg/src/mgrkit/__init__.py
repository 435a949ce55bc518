"""mgrkit: multiple group racks and coloring invariants of oriented spatial surfaces."""

__version__ = "0.1.0"
