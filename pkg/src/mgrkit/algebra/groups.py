"""Finite groups stored as multiplication tables."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .._config import check_size
from ..errors import AxiomViolation, InvalidParameter


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.int64, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A group on ``{0..n-1}`` with ``mul[a, b] = ab``.

    Use :meth:`from_table` to get a validated group.  The raw constructor
    trusts its arguments, which is what the mutation tests rely on.
    """

    mul: np.ndarray
    identity: int
    inverse: np.ndarray
    name: str = "G"
    labels: tuple | None = None

    @property
    def order(self) -> int:
        return int(self.mul.shape[0])

    def __len__(self) -> int:
        return self.order

    def product(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conjugate(self, a: int, b: int) -> int:
        """Return ``b^-1 a b``."""
        return int(self.mul[self.mul[self.inverse[b], a], b])

    def conjugation_table(self) -> np.ndarray:
        """``T[a, b] = b^-1 a b`` for all pairs."""
        inv = self.inverse
        left = self.mul[inv[None, :], np.arange(self.order)[:, None]]  # b^-1 a, indexed [a, b]
        return self.mul[left, np.arange(self.order)[None, :]]

    @property
    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def label(self, a: int):
        return self.labels[a] if self.labels is not None else a

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    @classmethod
    def from_table(cls, table, name: str = "G", labels=None) -> "FiniteGroup":
        mul = np.asarray(table, dtype=np.int64)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise InvalidParameter("a group table must be a non-empty square array")
        n = mul.shape[0]
        check_size(n, f"group {name}")
        if mul.min() < 0 or mul.max() >= n:
            raise InvalidParameter("group table entries must lie in 0..n-1")
        # associativity: (ab)c = a(bc) on all triples
        for a in range(n):
            lhs = mul[mul[a][:, None], np.arange(n)[None, :]]  # (ab)c indexed [b, c]
            rhs = mul[a][mul]  # a(bc)
            if not (lhs == rhs).all():
                b, c = np.argwhere(lhs != rhs)[0]
                raise AxiomViolation(f"{name} is not associative at {(a, int(b), int(c))}")
        ar = np.arange(n)
        ids = [e for e in range(n) if (mul[e] == ar).all() and (mul[:, e] == ar).all()]
        if not ids:
            raise AxiomViolation(f"{name} has no two-sided identity")
        e = ids[0]
        inverse = np.full(n, -1, dtype=np.int64)
        for a in range(n):
            hits = np.flatnonzero((mul[a] == e) & (mul[:, a] == e))
            if hits.size == 0:
                raise AxiomViolation(f"element {a} of {name} has no inverse")
            inverse[a] = hits[0]
        return cls(_frozen(mul), int(e), _frozen(inverse), name, None if labels is None else tuple(labels))


def cyclic_group(n: int) -> FiniteGroup:
    """The additive group Z_n on residues 0..n-1."""
    if n < 1:
        raise InvalidParameter(f"cyclic group order must be positive, got {n}")
    ar = np.arange(n)
    mul = (ar[:, None] + ar[None, :]) % n
    inverse = (-ar) % n
    return FiniteGroup(_frozen(mul), 0, _frozen(inverse), f"Z{n}")


def symmetric_group(k: int) -> FiniteGroup:
    """Permutations of ``{0..k-1}`` in lexicographic order.

    Permutations act on the right, so ``(p q)(i) = q(p(i))``; with this
    convention ``b^-1 a b`` is the usual conjugation used by racks.
    """
    if k < 1:
        raise InvalidParameter(f"symmetric group degree must be positive, got {k}")
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    check_size(n, f"S{k}")
    mul = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            mul[i, j] = index[tuple(q[p[t]] for t in range(k))]
    return FiniteGroup.from_table(mul, f"S{k}", labels=perms)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """``G x H`` with ``(a, b) -> a * |H| + b``."""
    m = h.order
    n = g.order * m
    check_size(n, f"{g.name}x{h.name}")
    ar = np.arange(n)
    ga, hb = ar // m, ar % m
    mul = g.mul[ga[:, None], ga[None, :]] * m + h.mul[hb[:, None], hb[None, :]]
    inverse = g.inverse[ga] * m + h.inverse[hb]
    return FiniteGroup(_frozen(mul), g.identity * m + h.identity, _frozen(inverse), f"{g.name}x{h.name}")
