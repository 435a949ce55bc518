"""Flow-parameterized constraint systems and their text format.

Example::

    family zfamily dihedral 3
    group Z 2
    flow a
    var x y
    let A = (x *[a] y) *[a] y
    rel (A *[-a 1] x) = y

Words are atoms or chains ``w *[g] w``; chains associate to the left.
An exponent is a list of signed flow variables and integers, summed mod t.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from ..errors import InvalidParameter, NameResolutionError, ParseError
from ..family import GFamily
from ..specs import parse_family
from .words import GroupWord, Let, Op, RackWord, Var, color_vars

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_KEYWORDS = {"family", "group", "flow", "var", "let", "rel"}


@dataclass(frozen=True, eq=False)
class ConstraintSystem:
    family: GFamily
    flow_vars: tuple[str, ...]
    color_vars: tuple[str, ...]
    relations: tuple[tuple[RackWord, RackWord], ...]
    lets: tuple[Let, ...] = ()
    family_spec: str = ""

    @property
    def t(self) -> int:
        return self.family.group.order

    @property
    def n_flows(self) -> int:
        return self.t ** len(self.flow_vars)

    def reordered(self, color_order=None, relation_order=None) -> "ConstraintSystem":
        """Same system with permuted variable or relation lists."""
        colors = tuple(color_order) if color_order is not None else self.color_vars
        if sorted(colors) != sorted(self.color_vars):
            raise InvalidParameter("color_order must permute the declared variables")
        rels = self.relations
        if relation_order is not None:
            rels = tuple(self.relations[i] for i in relation_order)
        return ConstraintSystem(self.family, self.flow_vars, colors, rels, self.lets, self.family_spec)


class _WordParser:
    def __init__(self, text: str, line: int, col0: int, colors, flows, lets):
        self.s = text
        self.i = 0
        self.line = line
        self.col0 = col0
        self.colors = colors
        self.flows = flows
        self.lets = lets

    def err(self, msg, cls=ParseError):
        return cls(msg, self.line, self.col0 + self.i + 1)

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def at_end(self) -> bool:
        self.ws()
        return self.i >= len(self.s)

    def word(self) -> RackWord:
        w = self.primary()
        while True:
            self.ws()
            if self.s.startswith("*[", self.i):
                self.i += 2
                g = self.gexpr()
                w = Op(w, g, self.primary())
            else:
                return w

    def primary(self) -> RackWord:
        self.ws()
        if self.i >= len(self.s):
            raise self.err("expected a word")
        if self.s[self.i] == "(":
            self.i += 1
            w = self.word()
            self.ws()
            if self.i >= len(self.s) or self.s[self.i] != ")":
                raise self.err("expected ')'")
            self.i += 1
            return w
        m = _IDENT.match(self.s, self.i)
        if not m:
            raise self.err(f"unexpected {self.s[self.i]!r}")
        name = m.group()
        if name in self.lets:
            w = self.lets[name]
        elif name in self.colors:
            w = Var(name)
        else:
            raise self.err(f"undeclared color variable {name!r}", NameResolutionError)
        self.i = m.end()
        return w

    def gexpr(self) -> GroupWord:
        terms = []
        sign = 1
        pending = False
        while True:
            self.ws()
            if self.i >= len(self.s):
                raise self.err("unterminated exponent, expected ']'")
            c = self.s[self.i]
            if c == "]":
                if pending:
                    raise self.err("dangling sign in exponent")
                self.i += 1
                return GroupWord(tuple(terms))
            if c in "+-":
                sign = -sign if c == "-" else sign
                pending = True
                self.i += 1
                continue
            m = re.compile(r"\d+").match(self.s, self.i)
            if m:
                terms.append((sign * int(m.group()), None))
            else:
                m = _IDENT.match(self.s, self.i)
                if not m:
                    raise self.err(f"malformed exponent near {c!r}")
                if m.group() not in self.flows:
                    raise self.err(f"undeclared flow variable {m.group()!r}", NameResolutionError)
                terms.append((sign, m.group()))
            self.i = m.end()
            sign = 1
            pending = False


def _declare(names, line, seen, kind):
    out = []
    for name in names:
        if not _IDENT.fullmatch(name) or name in _KEYWORDS:
            raise ParseError(f"bad {kind} name {name!r}", line)
        if name in seen:
            raise ParseError(f"{name!r} is declared twice", line)
        seen.add(name)
        out.append(name)
    return out


def parse_system(text: str) -> ConstraintSystem:
    family = None
    family_spec = ""
    group_order = None
    flows: list[str] = []
    colors: list[str] = []
    lets: dict[str, Let] = {}
    rels = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        head, _, rest = line.strip().partition(" ")
        col0 = line.index(head) + len(head) + 1
        rest_off = col0 + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()
        if head == "family":
            if family is not None:
                raise ParseError("family declared twice", lineno)
            try:
                family = parse_family(rest)
            except ParseError as e:
                raise ParseError(e.message, lineno) from None
            except InvalidParameter as e:
                raise ParseError(str(e), lineno) from None
            family_spec = rest
        elif head == "group":
            toks = rest.split()
            if len(toks) != 2 or toks[0] != "Z" or not toks[1].isdigit() or int(toks[1]) < 1:
                raise ParseError(f"group must be 'Z <t>', got {rest!r}", lineno)
            group_order = int(toks[1])
        elif head == "flow":
            flows += _declare(rest.split(), lineno, seen, "flow")
        elif head == "var":
            colors += _declare(rest.split(), lineno, seen, "color")
        elif head in ("let", "rel"):
            if head == "let":
                m = re.match(r"\s*([A-Za-z_][A-Za-z0-9_']*)\s*=", rest)
                if not m:
                    raise ParseError("let needs '<name> = <word>'", lineno, rest_off + 1)
                name = m.group(1)
                _declare([name], lineno, seen, "let")
                p = _WordParser(rest[m.end():], lineno, rest_off + m.end(), set(colors), set(flows), lets)
                w = p.word()
                if not p.at_end():
                    raise p.err("trailing text after word")
                lets[name] = Let(name, w)
            else:
                p = _WordParser(rest, lineno, rest_off, set(colors), set(flows), lets)
                lhs = p.word()
                p.ws()
                if p.i >= len(p.s) or p.s[p.i] != "=":
                    raise p.err("expected '=' between the two sides of a relation")
                p.i += 1
                rhs = p.word()
                if not p.at_end():
                    raise p.err("trailing text after relation")
                rels.append((lhs, rhs))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, line.index(head) + 1)
    if family is None:
        raise ParseError("missing 'family' line")
    G = family.group
    ar = np.arange(G.order)
    if not np.array_equal(G.mul, (ar[:, None] + ar[None, :]) % G.order):
        raise ParseError(f"the system format only supports cyclic flow groups, family has {G.name}")
    if group_order is not None and group_order != G.order:
        raise ParseError(f"group Z {group_order} does not match the family's group Z {G.order}")
    return ConstraintSystem(family, tuple(flows), tuple(colors), tuple(rels), tuple(lets.values()), family_spec)


def format_system(S: ConstraintSystem) -> str:
    lines = []
    if S.family_spec:
        lines.append(f"family {S.family_spec}")
    lines.append(f"group Z {S.t}")
    if S.flow_vars:
        lines.append("flow " + " ".join(S.flow_vars))
    if S.color_vars:
        lines.append("var " + " ".join(S.color_vars))
    for let in S.lets:
        lines.append(f"let {let.name} = {let.body}")
    for lhs, rhs in S.relations:
        lines.append(f"rel {lhs} = {rhs}")
    return "\n".join(lines) + "\n"


def relation_vars(S: ConstraintSystem) -> list[set[str]]:
    return [color_vars(l) | color_vars(r) for l, r in S.relations]
