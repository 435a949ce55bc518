import importlib.util
import sys
from functools import lru_cache
from pathlib import Path

import numpy as np
import pytest

from mgrkit.algebra import symmetric_group
from mgrkit.family import GFamily, associated_mgr, mgr_from_group
from mgrkit.specs import parse_family, parse_rack

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
SYSTEMS = FIXTURES / "systems"
EXPECTED = FIXTURES / "expected"
DIAGRAMS = FIXTURES / "diagrams"
MOVES = DIAGRAMS / "moves"

sys.path.insert(0, str(Path(__file__).resolve().parent))

# every rack the package can build from a spec, at desk scale
RACK_SPECS = [
    "dihedral 3",
    "dihedral 4",
    "dihedral 5",
    "dihedral 6",
    "cyclic 1",
    "cyclic 2",
    "cyclic 3",
    "cyclic 6",
    "conj sym3",
    "conj Z 4",
    "ts 3 2,2,0,2,1 0,1 2,0,2",
    "ts 2 1,1,1 0,1 0",
    "alexander 2 1,1,1 0,1",
    "alexander 5 1,1 2",
    "power dihedral 3 3 1,1,1/1,2,3",
    "power dihedral 4 2 1,1/1,2",
    "power cyclic 3 2 1,-1/2,1",
    "power dihedral 3 2 /",
]

# families used for diagram counts; the big (t,s)-rack is left to the solver tests
FAMILY_SPECS = [
    "zfamily dihedral 3",
    "zfamily dihedral 4",
    "zfamily cyclic 2",
    "zfamily cyclic 3",
    "zfamily conj sym3",
    "zfamily alexander 2 1,1,1 0,1",
    "zfamily ts 2 1,1,1 0,1 0",
    "trivial sym3 2",
]


@lru_cache(maxsize=None)
def rack(spec):
    return parse_rack(spec)


@lru_cache(maxsize=None)
def family(spec):
    return parse_family(spec)


def s3_action_family():
    """S3 acting on three points: ``x *^g y = g(x)``; a non-abelian test family."""
    S3 = symmetric_group(3)
    ops = np.array([[[p[x] for _ in range(3)] for x in range(3)] for p in S3.labels])
    return GFamily(S3, ops, "S3 acting on 3 points")


@lru_cache(maxsize=None)
def shipped_mgrs():
    out = {spec: associated_mgr(family(spec)) for spec in FAMILY_SPECS}
    out["conj group sym3"] = mgr_from_group(symmetric_group(3))
    out["S3 action"] = associated_mgr(s3_action_family())
    return out


def move_pairs():
    befores = sorted(MOVES.glob("*.before.d"))
    return [(p.name[: -len(".before.d")], p, p.with_name(p.name.replace(".before.", ".after."))) for p in befores]


def valid_diagram_files():
    bad = {"theta_sink.d", "undeclared_arc.d", "dangling.d"}
    files = [p for p in sorted(DIAGRAMS.glob("*.d")) if p.name not in bad]
    return files + sorted(MOVES.glob("*.d"))


def load_generator():
    spec = importlib.util.spec_from_file_location("generate_diagrams", FIXTURES / "generate_diagrams.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


@pytest.fixture(scope="session")
def mgrs():
    return shipped_mgrs()
