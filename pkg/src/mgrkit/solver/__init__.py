"""Flow-parameterized rack-word systems and their per-flow counts."""
from .engine import count_per_flow_system, per_flow_counts
from .from_diagram import system_from_diagram
from .system import ConstraintSystem, format_system, parse_system
from .words import GroupWord, Let, Op, RackWord, Var, eval_rack_word

__all__ = [
    "ConstraintSystem", "GroupWord", "Let", "Op", "RackWord", "Var", "count_per_flow_system",
    "eval_rack_word", "format_system", "parse_system", "per_flow_counts", "system_from_diagram",
]
