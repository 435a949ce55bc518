"""Finite groups, racks and quandles with exhaustive axiom checks."""
from .groups import FiniteGroup, cyclic_group, direct_product, symmetric_group
from .polyring import PolyQuotientRing
from .racks import (
    FiniteRack,
    is_quandle,
    make_alexander,
    make_conjugation,
    make_cyclic,
    make_dihedral,
    make_power_rack,
    make_ts_rack,
    mutate,
    rack_pow,
    rack_type,
    verify_rack,
)

__all__ = [
    "FiniteGroup",
    "FiniteRack",
    "PolyQuotientRing",
    "cyclic_group",
    "direct_product",
    "is_quandle",
    "make_alexander",
    "make_conjugation",
    "make_cyclic",
    "make_dihedral",
    "make_power_rack",
    "make_ts_rack",
    "mutate",
    "rack_pow",
    "rack_type",
    "symmetric_group",
    "verify_rack",
]
