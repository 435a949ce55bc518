"""Finite racks and quandles as explicit operation tables.

Elements are the integers ``0..n-1``; ``op[x, y]`` is ``x * y`` and
``inv_op[x, y]`` is ``S_y^-1(x)``, the unique ``z`` with ``z * y = x``.
Each constructor documents how its natural elements map to indices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import lcm

import numpy as np

from .._config import check_size
from ..errors import AxiomViolation, InvalidParameter
from ..report import Report, ReportBuilder
from .groups import FiniteGroup
from .polyring import PolyQuotientRing


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.int64, copy=True)
    arr.setflags(write=False)
    return arr


def _column_inverse(op: np.ndarray) -> np.ndarray | None:
    n = op.shape[0]
    inv = np.full_like(op, -1)
    cols = np.arange(n)
    inv[op, cols[None, :]] = np.arange(n)[:, None]
    # a missed image leaves -1 behind, which is exactly a non-bijective column
    if (inv < 0).any():
        return None
    return inv


@dataclass(frozen=True, eq=False)
class FiniteRack:
    """A binary operation table, usually (but not necessarily) a rack.

    :meth:`from_table` checks that every right translation ``S_y`` is a
    bijection; self-distributivity is left to :func:`verify_rack`, since it
    costs ``n^3`` lookups.
    """

    op: np.ndarray
    name: str = "X"
    labels: tuple | None = None
    _inv: np.ndarray | None = field(default=None, repr=False)

    @classmethod
    def from_table(cls, table, name: str = "X", labels=None, *, validate: bool = True) -> "FiniteRack":
        op = np.asarray(table, dtype=np.int64)
        if op.ndim != 2 or op.shape[0] != op.shape[1] or op.shape[0] == 0:
            raise InvalidParameter("a rack table must be a non-empty square array")
        n = op.shape[0]
        check_size(n, f"rack {name}")
        if op.min() < 0 or op.max() >= n:
            raise InvalidParameter("rack table entries must lie in 0..n-1")
        inv = _column_inverse(op)
        if inv is None and validate:
            y = next(j for j in range(n) if len(set(op[:, j].tolist())) != n)
            raise AxiomViolation(f"S_{y} is not a bijection in {name}")
        return cls(_frozen(op), name, None if labels is None else tuple(labels),
                   None if inv is None else _frozen(inv))

    @property
    def size(self) -> int:
        return int(self.op.shape[0])

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"FiniteRack({self.name}, size={self.size})"

    @property
    def is_bijective(self) -> bool:
        return self._inv is not None

    @property
    def inv_op(self) -> np.ndarray:
        if self._inv is None:
            raise AxiomViolation(f"{self.name} has a right translation that is not a bijection")
        return self._inv

    def star(self, x: int, y: int) -> int:
        return int(self.op[x, y])

    def star_inv(self, x: int, y: int) -> int:
        return int(self.inv_op[x, y])

    def index(self, label) -> int:
        if self.labels is None:
            return int(label)
        return self._label_index[label]

    def label(self, i: int):
        return self.labels[i] if self.labels is not None else i

    @cached_property
    def _type(self) -> int:
        return _translation_type(self.op)

    @cached_property
    def _label_index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def power_table(self, k: int) -> np.ndarray:
        """Table of ``x *^k y`` for all pairs (``S_y`` applied k times)."""
        n = self.size
        cols = np.arange(n)[None, :]
        step = self.op if k >= 0 else self.inv_op
        cur = np.repeat(np.arange(n)[:, None], n, axis=1)
        # reduce k by the rack type so huge exponents stay cheap
        k_abs = abs(k) % rack_type(self) if self.is_bijective else abs(k)
        for _ in range(k_abs):
            cur = step[cur, cols]
        return cur


def rack_pow(X: FiniteRack, x: int, k: int, y: int) -> int:
    """``x *^k y = S_y^k(x)``; negative k walks the inverse table."""
    table = X.op if k >= 0 else X.inv_op
    # the orbit of x under S_y is finite, so k can be reduced modulo its length
    orbit = [x]
    cur = int(X.op[x, y])
    while cur != x:
        orbit.append(cur)
        cur = int(X.op[cur, y])
    steps = abs(k) % len(orbit)
    cur = x
    for _ in range(steps):
        cur = int(table[cur, y])
    return cur


def rack_type(X: FiniteRack) -> int:
    """Least n > 0 with ``x *^n y = x`` for all x, y.

    Computed as the lcm of the cycle lengths of every right translation.
    """
    if not X.is_bijective:
        raise AxiomViolation(f"{X.name} is not a rack, its type is undefined")
    return X._type


def _translation_type(op: np.ndarray) -> int:
    n = op.shape[0]
    result = 1
    for perm in np.unique(op.T, axis=0).tolist():
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            cur = start
            while not seen[cur]:
                seen[cur] = True
                cur = perm[cur]
                length += 1
            result = lcm(result, length)
    return result


def is_quandle(X: FiniteRack) -> bool:
    ar = np.arange(X.size)
    return bool((X.op[ar, ar] == ar).all())


def verify_rack(X: FiniteRack) -> Report:
    """Exhaustively check the two rack axioms.

    The first counterexample in lexicographic order is reported: the least
    column y whose translation is not bijective (with the least x colliding
    with an earlier element), and the least triple (x, y, z) breaking
    ``(x*y)*z = (x*z)*(y*z)``.
    """
    rep = ReportBuilder(f"rack {X.name}")
    op = X.op
    n = X.size
    witness = None
    for y in range(n):
        col = op[:, y]
        if np.unique(col).size != n:
            seen = {}
            for x, v in enumerate(col.tolist()):
                if v in seen:
                    witness = (x, y)
                    detail = f"{seen[v]}*{y} = {x}*{y} = {v}"
                    break
                seen[v] = x
            break
    rep.record("bijectivity", witness, detail if witness else "")

    witness = None
    detail = ""
    for x in range(n):
        lhs = op[op[x][:, None], np.arange(n)[None, :]]  # (x*y)*z indexed [y, z]
        rhs = op[op[x][None, :], op]  # (x*z)*(y*z)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            y, z = (int(v) for v in bad[0])
            witness = (x, y, z)
            detail = f"(x*y)*z = {int(lhs[y, z])} but (x*z)*(y*z) = {int(rhs[y, z])}"
            break
    rep.record("self-distributivity", witness, detail)
    return rep.build()


# constructors


def make_dihedral(q: int) -> FiniteRack:
    """R_q on residues mod q with ``a * b = 2b - a``."""
    if q < 2:
        raise InvalidParameter(f"dihedral quandle needs q >= 2, got {q}")
    check_size(q, f"R{q}")
    ar = np.arange(q)
    return FiniteRack.from_table((2 * ar[None, :] - ar[:, None]) % q, f"R{q}")


def make_cyclic(n: int) -> FiniteRack:
    """C_n on residues mod n with ``a * b = a + 1``."""
    if n < 1:
        raise InvalidParameter(f"cyclic rack needs n >= 1, got {n}")
    check_size(n, f"C{n}")
    ar = np.arange(n)
    return FiniteRack.from_table(np.repeat(((ar + 1) % n)[:, None], n, axis=1), f"C{n}")


def make_conjugation(G: FiniteGroup) -> FiniteRack:
    """Conj G with ``a * b = b^-1 a b``; elements are the group's indices."""
    return FiniteRack.from_table(G.conjugation_table(), f"Conj {G.name}", G.labels)


def make_ts_rack(ring: PolyQuotientRing, t, s) -> FiniteRack:
    """The (t,s)-rack on ``ring`` with ``x * y = t x + s y``.

    ``t`` and ``s`` may be element indices or coefficient sequences.  The
    elements are the ring's encoded residues (see :mod:`.polyring`).
    """
    t_idx = ring.element(t) if not isinstance(t, (int, np.integer)) else int(t)
    s_idx = ring.element(s) if not isinstance(s, (int, np.integer)) else int(s)
    if ring.inverse(t_idx) is None:
        raise InvalidParameter(f"t = {ring.poly_str(ring.coeffs(t_idx))} is not invertible in {ring}")
    # s (t + s - 1) must vanish, otherwise self-distributivity breaks
    rel = ring.mul(s_idx, ring.sub(ring.add(t_idx, s_idx), ring.one))
    if rel != ring.zero:
        raise AxiomViolation(
            f"s(t+s-1) = {ring.poly_str(ring.coeffs(rel))} is nonzero in {ring}"
        )
    tx = ring.mul_row(t_idx)
    sy = ring.mul_row(s_idx)
    table = ring.add_table[tx[:, None], sy[None, :]]
    name = f"TS({ring.poly_str(ring.coeffs(t_idx))},{ring.poly_str(ring.coeffs(s_idx))}) over {ring!r}"
    return FiniteRack.from_table(table, name, ring.labels)


def make_alexander(ring: PolyQuotientRing, t) -> FiniteRack:
    """Alexander quandle: the (t,s)-rack with ``s = 1 - t``."""
    t_idx = ring.element(t) if not isinstance(t, (int, np.integer)) else int(t)
    return make_ts_rack(ring, t_idx, ring.sub(ring.one, t_idx))


def make_power_rack(X: FiniteRack, n: int, exponents, indices) -> FiniteRack:
    """The rack X^n with coordinatewise ``x_j *^{e_1} y_{i_1} ... *^{e_m} y_{i_m}``.

    ``indices`` are 1-based coordinates.  Tuples ``(x_1, ..., x_n)`` are
    encoded in mixed radix with ``x_1`` most significant, so labels run in
    lexicographic order.
    """
    exponents = [int(e) for e in exponents]
    indices = [int(i) for i in indices]
    if n < 1:
        raise InvalidParameter(f"power rack needs n >= 1, got {n}")
    if len(exponents) != len(indices):
        raise InvalidParameter("power rack needs as many exponents as indices")
    for i in indices:
        if not 1 <= i <= n:
            raise InvalidParameter(f"index {i} is outside 1..{n}")
    q = X.size
    size = q ** n
    check_size(size, f"{X.name}^{n}")
    coords = np.array(list(itertools.product(range(q), repeat=n)), dtype=np.int64).reshape(size, n)
    powers = {e: X.power_table(e) for e in set(exponents)}
    # perm[y, x] = image of x under the composite translation determined by y
    perm = np.repeat(np.arange(q)[None, :], size, axis=0)
    for e, i in zip(exponents, indices):
        perm = powers[e][perm, coords[:, i - 1][:, None]]
    weights = q ** np.arange(n - 1, -1, -1)
    table = np.zeros((size, size), dtype=np.int64)
    for j in range(n):
        # image of coordinate j of x under y's translation, indexed [x, y]
        table += perm[:, coords[:, j]].T * weights[j]
    ex = ",".join(map(str, exponents))
    ix = ",".join(map(str, indices))
    labels = [tuple(c) for c in coords.tolist()]
    return FiniteRack.from_table(table, f"{X.name}^{n}[{ex}/{ix}]", labels)


def mutate(X: FiniteRack, x: int, y: int, value: int) -> FiniteRack:
    """Copy of X with one table entry overwritten, skipping validation."""
    table = X.op.copy()
    table[x, y] = value
    return FiniteRack.from_table(table, f"{X.name}[mutated]", X.labels, validate=False)
