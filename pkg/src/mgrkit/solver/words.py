"""Rack words ``(L *[g] R)`` with exponents in an additive cyclic group."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

import numpy as np


@dataclass(frozen=True)
class GroupWord:
    """A sum of signed flow variables and integer constants.

    ``terms`` holds ``(coef, name)`` pairs, ``name`` None for a constant
    (then ``coef`` is the constant itself).
    """

    terms: tuple[tuple[int, str | None], ...] = ()

    def variables(self) -> set[str]:
        return {name for _, name in self.terms if name is not None}

    def evaluate(self, flow: Mapping[str, int], t: int) -> int:
        total = 0
        for coef, name in self.terms:
            total += coef if name is None else coef * flow[name]
        return total % t

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for coef, name in self.terms:
            if name is None:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(name)
            elif coef == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{coef}{name}")
        return " ".join(parts)


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Let:
    """A named sub-word; evaluates to ``body`` and prints as ``name``."""

    name: str
    body: "RackWord"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Op:
    left: "RackWord"
    exponent: GroupWord
    right: "RackWord"

    def __str__(self) -> str:
        return f"({self.left} *[{self.exponent}] {self.right})"


RackWord = Union[Var, Let, Op]


def color_vars(w: RackWord) -> set[str]:
    if isinstance(w, Var):
        return {w.name}
    if isinstance(w, Let):
        return color_vars(w.body)
    return color_vars(w.left) | color_vars(w.right)


def flow_vars(w: RackWord) -> set[str]:
    if isinstance(w, Var):
        return set()
    if isinstance(w, Let):
        return flow_vars(w.body)
    return flow_vars(w.left) | w.exponent.variables() | flow_vars(w.right)


def expand(w: RackWord) -> RackWord:
    """The same word with every ``Let`` replaced by its body."""
    if isinstance(w, Var):
        return w
    if isinstance(w, Let):
        return expand(w.body)
    return Op(expand(w.left), w.exponent, expand(w.right))


def eval_rack_word(w: RackWord, colors: Mapping[str, int], flow: Mapping[str, int], F) -> int:
    """Value of ``w`` in the G-family F; exponents are reduced modulo |G|.

    F must be a family over a cyclic group whose element k is the residue k.
    """
    t = F.group.order
    if isinstance(w, Var):
        return int(colors[w.name])
    if isinstance(w, Let):
        return eval_rack_word(w.body, colors, flow, F)
    g = w.exponent.evaluate(flow, t)
    return int(F.ops[g, eval_rack_word(w.left, colors, flow, F), eval_rack_word(w.right, colors, flow, F)])


def eval_vectorized(w: RackWord, columns: Mapping[str, np.ndarray], exps: Mapping[GroupWord, int],
                    ops: np.ndarray, memo: dict) -> np.ndarray:
    """Evaluate ``w`` on arrays of color values; ``exps`` maps exponents to group elements."""
    key = id(w)
    if key in memo:
        return memo[key]
    if isinstance(w, Var):
        out = columns[w.name]
    elif isinstance(w, Let):
        out = eval_vectorized(w.body, columns, exps, ops, memo)
    else:
        left = eval_vectorized(w.left, columns, exps, ops, memo)
        right = eval_vectorized(w.right, columns, exps, ops, memo)
        out = ops[exps[w.exponent]][left, right]
    memo[key] = out
    return out
