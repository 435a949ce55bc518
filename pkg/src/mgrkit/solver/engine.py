"""Per-flow counting for constraint systems.

For a fixed flow every exponent is a fixed group element, so each
relation becomes a pair of table-lookup expressions.  Color variables are
bound one at a time in declaration order; the set of surviving partial
assignments is kept as numpy columns and a relation is tested as soon as
its last variable is bound.  Variables that no relation mentions are not
searched at all and contribute a factor ``|X|`` each.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

import numpy as np

from ..multiset import CountMultiset
from .system import ConstraintSystem, relation_vars
from .words import GroupWord, eval_vectorized

# cap on the rows of a partial-assignment batch before it is split
_BATCH = 1 << 21


def _exponents(S: ConstraintSystem) -> list[GroupWord]:
    seen: dict[GroupWord, None] = {}

    def walk(w):
        if hasattr(w, "exponent"):
            seen.setdefault(w.exponent)
            walk(w.left)
            walk(w.right)
        elif hasattr(w, "body"):
            walk(w.body)

    for lhs, rhs in S.relations:
        walk(lhs)
        walk(rhs)
    return list(seen)


class _Plan:
    """Search order and the relations to test after each binding."""

    def __init__(self, S: ConstraintSystem):
        used = set().union(*relation_vars(S)) if S.relations else set()
        self.order = [v for v in S.color_vars if v in used]
        self.free = len(S.color_vars) - len(self.order)
        pos = {v: i for i, v in enumerate(self.order)}
        self.checks: list[list[int]] = [[] for _ in self.order]
        self.constant: list[int] = []
        for k, vs in enumerate(relation_vars(S)):
            if vs:
                self.checks[max(pos[v] for v in vs)].append(k)
            else:
                self.constant.append(k)
        self.exponents = _exponents(S)


def _count_for_flow(S: ConstraintSystem, plan: _Plan, flow: dict[str, int]) -> int:
    ops = S.family.ops
    n = S.family.size
    t = S.t
    exps = {g: g.evaluate(flow, t) for g in plan.exponents}
    rels = S.relations
    for k in plan.constant:
        lhs, rhs = rels[k]
        if eval_vectorized(lhs, {}, exps, ops, {}) != eval_vectorized(rhs, {}, exps, ops, {}):
            return 0

    def extend(cols: list[np.ndarray], level: int) -> int:
        if level == len(plan.order):
            return len(cols[0]) if cols else 1
        rows = len(cols[0]) if cols else 1
        if rows * n > _BATCH and rows > 1:
            half = rows // 2
            return (extend([c[:half] for c in cols], level)
                    + extend([c[half:] for c in cols], level))
        new = [np.repeat(c, n) for c in cols] + [np.tile(np.arange(n), rows)]
        checks = plan.checks[level]
        if checks:
            env = dict(zip(plan.order, new))
            memo: dict = {}
            keep = np.ones(len(new[-1]), dtype=bool)
            for k in checks:
                lhs, rhs = rels[k]
                keep &= eval_vectorized(lhs, env, exps, ops, memo) == eval_vectorized(rhs, env, exps, ops, memo)
            if not keep.all():
                new = [c[keep] for c in new]
            if len(new[-1]) == 0:
                return 0
        return extend(new, level + 1)

    return extend([], 0) * n ** plan.free


def _flows(S: ConstraintSystem) -> Iterable[tuple[int, ...]]:
    return itertools.product(range(S.t), repeat=len(S.flow_vars))


_WORKER_STATE: tuple | None = None


def _init_worker(S):
    global _WORKER_STATE
    _WORKER_STATE = (S, _Plan(S))


def _worker(flows):
    S, plan = _WORKER_STATE
    return [(f, _count_for_flow(S, plan, dict(zip(S.flow_vars, f)))) for f in flows]


def per_flow_counts(S: ConstraintSystem, workers: int = 1) -> dict[tuple[int, ...], int]:
    """``#Col(S, phi)`` for every flow ``phi``, keyed by the tuple of flow values."""
    flows = list(_flows(S))
    if workers <= 1 or len(flows) < 2:
        plan = _Plan(S)
        return {f: _count_for_flow(S, plan, dict(zip(S.flow_vars, f))) for f in flows}
    chunks = [flows[i::workers * 4] for i in range(workers * 4)]
    chunks = [c for c in chunks if c]
    out = {}
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(S,)) as ex:
        for part in ex.map(_worker, chunks):
            out.update(part)
    return dict(sorted(out.items()))


def count_per_flow_system(S: ConstraintSystem, workers: int = 1) -> CountMultiset:
    return CountMultiset.from_counts(per_flow_counts(S, workers).values())
