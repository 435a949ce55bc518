"""Count multisets such as ``{3_2, 9_4, 27_2}``, printed as ``3^2 9^4 27^2``."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import ParseError


@dataclass(frozen=True)
class CountMultiset:
    """Sorted ``(count, multiplicity)`` pairs with strictly increasing counts."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = None
        for count, mult in self.pairs:
            if mult <= 0:
                raise ValueError(f"multiplicity of {count} must be positive")
            if prev is not None and count <= prev:
                raise ValueError("counts must be strictly increasing")
            prev = count

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> "CountMultiset":
        c = Counter(int(v) for v in counts)
        return cls(tuple(sorted(c.items())))

    @classmethod
    def parse(cls, text: str) -> "CountMultiset":
        acc: Counter = Counter()
        for tok in text.split():
            count, sep, mult = tok.partition("^")
            try:
                acc[int(count)] += int(mult) if sep else 1
            except ValueError:
                raise ParseError(f"bad multiset item {tok!r}") from None
        return cls(tuple(sorted(acc.items())))

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.pairs)

    @property
    def total(self) -> int:
        """Sum of count * multiplicity."""
        return sum(c * m for c, m in self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __str__(self) -> str:
        return multiset_format(self)


def multiset_format(m: CountMultiset, machine: bool = False) -> str:
    if machine:
        return "\n".join(f"{c} {k}" for c, k in m.pairs)
    return " ".join(f"{c}^{k}" for c, k in m.pairs)


def multiset_eq(a: CountMultiset, b: CountMultiset) -> bool:
    return a.pairs == b.pairs
