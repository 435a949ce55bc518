"""Text specifications for racks, groups and G-families.

Racks::

    dihedral q | cyclic n | conj <group> | ts m <modulus> <t> <s>
    alexander m <modulus> <t> | power <rack> n e1,..,em / i1,..,im

Polynomials are comma-separated coefficients, constant term first.  With
``m = 0`` a power spec reads ``power <rack> n /``.

Groups: ``Z n`` or ``sym3`` (also ``S k``).
Families: ``zfamily <rack>`` or ``trivial <group> [size]``.
"""
from __future__ import annotations

import re

from .algebra.groups import FiniteGroup, cyclic_group, symmetric_group
from .algebra.polyring import PolyQuotientRing
from .algebra.racks import (
    FiniteRack,
    make_alexander,
    make_conjugation,
    make_cyclic,
    make_dihedral,
    make_power_rack,
    make_ts_rack,
)
from .errors import ParseError
from .family import GFamily, gfamily_from_rack, trivial_gfamily


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items = re.sub(r"/", " / ", text).split()
        self.pos = 0

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else None

    def take(self, what: str) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"spec {self.text!r} ended early, expected {what}")
        self.pos += 1
        return tok

    def int(self, what: str) -> int:
        tok = self.take(what)
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"expected {what} (an integer) in {self.text!r}, got {tok!r}") from None

    def int_list(self, what: str) -> list[int]:
        tok = self.take(what)
        try:
            return [int(v) for v in tok.split(",") if v != ""]
        except ValueError:
            raise ParseError(f"expected {what} (comma-separated integers) in {self.text!r}, got {tok!r}") from None

    def done(self):
        if self.peek() is not None:
            raise ParseError(f"unexpected {self.peek()!r} at the end of spec {self.text!r}")


def _group(tk: _Tokens) -> FiniteGroup:
    head = tk.take("a group")
    if head == "Z":
        return cyclic_group(tk.int("group order"))
    if head == "sym3":
        return symmetric_group(3)
    if head == "S":
        return symmetric_group(tk.int("symmetric group degree"))
    raise ParseError(f"unknown group {head!r} in {tk.text!r}")


def _rack(tk: _Tokens) -> FiniteRack:
    head = tk.take("a rack")
    if head == "dihedral":
        return make_dihedral(tk.int("q"))
    if head == "cyclic":
        return make_cyclic(tk.int("n"))
    if head == "conj":
        return make_conjugation(_group(tk))
    if head in ("ts", "alexander"):
        m = tk.int("coefficient modulus")
        ring = PolyQuotientRing(m, tk.int_list("modulus polynomial"))
        t = tk.int_list("t")
        if head == "alexander":
            return make_alexander(ring, t)
        return make_ts_rack(ring, t, tk.int_list("s"))
    if head == "power":
        base = _rack(tk)
        n = tk.int("power n")
        if tk.peek() == "/":
            tk.take("/")
            return make_power_rack(base, n, [], [])
        exps = tk.int_list("exponents")
        if tk.take("'/'") != "/":
            raise ParseError(f"power spec needs 'e1,..,em / i1,..,im' in {tk.text!r}")
        idx = tk.int_list("indices")
        return make_power_rack(base, n, exps, idx)
    raise ParseError(f"unknown rack {head!r} in {tk.text!r}")


def parse_group(text: str) -> FiniteGroup:
    tk = _Tokens(text)
    G = _group(tk)
    tk.done()
    return G


def parse_rack(text: str) -> FiniteRack:
    tk = _Tokens(text)
    X = _rack(tk)
    tk.done()
    return X


def parse_family(text: str) -> GFamily:
    tk = _Tokens(text)
    head = tk.peek()
    if head == "zfamily":
        tk.take("zfamily")
        F = gfamily_from_rack(_rack(tk))
    elif head == "trivial":
        tk.take("trivial")
        G = _group(tk)
        size = tk.int("carrier size") if tk.peek() is not None else 1
        F = trivial_gfamily(G, size)
    else:
        raise ParseError(f"family spec must start with 'zfamily' or 'trivial', got {text!r}")
    tk.done()
    return F
