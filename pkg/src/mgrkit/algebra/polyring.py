"""Quotient rings Z_m[t]/(f) for a monic f with unit constant term.

Elements are residue polynomials of degree < deg f, encoded as integers by
reading the coefficient vector (constant term first) as base-m digits with
the constant term least significant: ``c0 + c1*m + c2*m^2 + ...``.
Because f has a unit constant term, t is invertible and the ring is a
quotient of Z_m[t, t^-1].
"""
from __future__ import annotations

from functools import cached_property
from math import gcd

import numpy as np

from .._config import check_size
from ..errors import InvalidParameter


def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


class PolyQuotientRing:
    def __init__(self, m: int, modulus):
        if m < 2:
            raise InvalidParameter(f"coefficient modulus must be at least 2, got {m}")
        f = [int(c) % m for c in modulus]
        f = _trim(f)
        if len(f) < 2:
            raise InvalidParameter("the modulus polynomial must have degree at least 1")
        if f[-1] != 1:
            raise InvalidParameter("the modulus polynomial must be monic")
        if gcd(f[0], m) != 1:
            raise InvalidParameter("the constant term of the modulus must be a unit mod m, so that t is invertible")
        self.m = m
        self.modulus = tuple(f)
        self.degree = len(f) - 1
        self.size = m ** self.degree
        check_size(self.size, f"Z{m}[t]/({self.poly_str(f)})")

    def __repr__(self) -> str:
        return f"PolyQuotientRing(Z{self.m}[t]/({self.poly_str(self.modulus)}))"

    @staticmethod
    def poly_str(coeffs) -> str:
        terms = []
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(reversed(terms)) or "0"

    # encoding

    def reduce(self, coeffs) -> tuple[int, ...]:
        """Reduce an arbitrary integer polynomial to its residue coefficients."""
        r = [int(c) % self.m for c in coeffs]
        d = self.degree
        for k in range(len(r) - 1, d - 1, -1):
            c = r[k]
            if c:
                for i in range(d + 1):
                    r[k - d + i] = (r[k - d + i] - c * self.modulus[i]) % self.m
        r = r[:d] + [0] * (d - len(r[:d]))
        return tuple(r)

    def element(self, coeffs) -> int:
        idx = 0
        for c in reversed(self.reduce(coeffs)):
            idx = idx * self.m + c
        return idx

    def coeffs(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.size:
            raise InvalidParameter(f"ring element index {index} out of range")
        out = []
        for _ in range(self.degree):
            out.append(index % self.m)
            index //= self.m
        return tuple(out)

    @cached_property
    def labels(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.coeffs(i) for i in range(self.size))

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return self.element([1])

    @property
    def t(self) -> int:
        return self.element([0, 1])

    # arithmetic

    def add(self, a: int, b: int) -> int:
        return self.element([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        return self.element([-x for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        x, y = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.degree - 1)
        for i, p in enumerate(x):
            if p:
                for j, q in enumerate(y):
                    prod[i + j] += p * q
        return self.element(prod)

    @cached_property
    def add_table(self) -> np.ndarray:
        lab = np.array(self.labels, dtype=np.int64).reshape(self.size, self.degree)
        s = (lab[:, None, :] + lab[None, :, :]) % self.m
        weights = self.m ** np.arange(self.degree)
        t = (s * weights).sum(axis=2)
        t.setflags(write=False)
        return t

    def mul_row(self, a: int) -> np.ndarray:
        """``row[x] = a * x`` for every element x."""
        row = np.array([self.mul(a, x) for x in range(self.size)], dtype=np.int64)
        return row

    def inverse(self, a: int) -> int | None:
        """Multiplicative inverse by exhaustive search, or None."""
        row = self.mul_row(a)
        hits = np.flatnonzero(row == self.one)
        return int(hits[0]) if hits.size else None

    def is_unit(self, a: int) -> bool:
        return self.inverse(a) is not None
