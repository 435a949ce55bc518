"""G-families of racks and multiple group racks (MGRs).

A G-family stores one ``|X| x |X|`` table per group element, stacked as
``ops[g, x, y] = x *^g y``.  An MGR is a disjoint union of finite groups
with a rack operation on the union; elements are flattened to
``0..N-1`` component by component, so component ``c`` occupies the slice
``offsets[c] : offsets[c] + |G_c|``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ._config import check_size
from .algebra.groups import FiniteGroup, cyclic_group
from .algebra.racks import FiniteRack, rack_type
from .errors import InvalidOperation, InvalidParameter
from .report import Report, ReportBuilder


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.int64, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class GFamily:
    group: FiniteGroup
    ops: np.ndarray
    name: str = "F"
    labels: tuple | None = None

    def __post_init__(self):
        ops = self.ops
        if ops.ndim != 3 or ops.shape[0] != self.group.order or ops.shape[1] != ops.shape[2]:
            raise InvalidParameter(
                f"family tables must have shape (|G|, n, n) = ({self.group.order}, n, n), got {ops.shape}"
            )

    @property
    def size(self) -> int:
        return int(self.ops.shape[1])

    def __repr__(self) -> str:
        return f"GFamily({self.name}, |X|={self.size}, G={self.group.name})"

    def star(self, x: int, g: int, y: int) -> int:
        return int(self.ops[g, x, y])

    def star_inv(self, x: int, g: int, y: int) -> int:
        # S^g_y is inverted by S^{g^-1}_y because x *^e y = x
        return int(self.ops[self.group.inv(g), x, y])


def gfamily_from_rack(X: FiniteRack) -> GFamily:
    """The Z_t-family ``{*^k}`` with t the type of X and ``*^k`` the k-th power."""
    t = rack_type(X)
    G = cyclic_group(t)
    ops = np.stack([X.power_table(k) for k in range(t)])
    return GFamily(G, _frozen(ops), f"Z{t}-family of {X.name}", X.labels)


def trivial_gfamily(G: FiniteGroup, size: int = 1) -> GFamily:
    """``x *^g y = x`` for every g; with one point its MGR is G with conjugation."""
    if size < 1:
        raise InvalidParameter(f"carrier size must be positive, got {size}")
    check_size(size, "trivial family")
    ar = np.arange(size)
    ops = np.broadcast_to(ar[None, :, None], (G.order, size, size))
    return GFamily(G, _frozen(ops), f"trivial {G.name}-family on {size}")


def verify_gfamily(F: GFamily) -> Report:
    """Check both G-family axiom groups on every instance.

    Witnesses are ``(x, y)`` for the identity law, ``(g, h, x, y)`` for the
    product law and ``(g, h, x, y, z)`` for twisted distributivity, each the
    first failure in that lexicographic order.
    """
    G = F.group
    ops = F.ops
    n = F.size
    ny = np.arange(n)[None, :]
    rep = ReportBuilder(f"G-family {F.name}")

    bad = np.argwhere(ops[G.identity] != np.arange(n)[:, None])
    rep.record("identity", tuple(bad[0]) if bad.size else None,
               "x *^e y != x" if bad.size else "")

    witness = detail = None
    for g in range(G.order):
        for h in range(G.order):
            lhs = ops[G.mul[g, h]]
            rhs = ops[h][ops[g], ny]
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                x, y = (int(v) for v in bad[0])
                witness = (g, h, x, y)
                detail = f"x *^(gh) y = {int(lhs[x, y])} but (x *^g y) *^h y = {int(rhs[x, y])}"
                break
        if witness:
            break
    rep.record("product", witness, detail or "")

    witness = detail = None
    for g in range(G.order):
        for h in range(G.order):
            c = G.mul[G.mul[G.inverse[h], g], h]
            oh, oc, og = ops[h], ops[c], ops[g]
            for x in range(n):
                lhs = oh[og[x][:, None], ny]  # [y, z]
                rhs = oc[oh[x][None, :], oh]
                bad = np.argwhere(lhs != rhs)
                if bad.size:
                    y, z = (int(v) for v in bad[0])
                    witness = (g, h, x, y, z)
                    detail = (f"(x *^g y) *^h z = {int(lhs[y, z])} but "
                              f"(x *^h z) *^(h^-1 g h) (y *^h z) = {int(rhs[y, z])}")
                    break
            if witness:
                break
        if witness:
            break
    rep.record("distributivity", witness, detail or "")
    return rep.build()


def is_gfamily_of_quandles(F: GFamily) -> bool:
    ar = np.arange(F.size)
    return bool((F.ops[:, ar, ar] == ar[None, :]).all())


@dataclass(frozen=True, eq=False)
class MultipleGroupRack:
    """A disjoint union of groups with a rack operation ``op`` on the union.

    ``components`` pairs a label with a group.  The raw constructor does not
    check any axiom; use :func:`verify_mgr`.
    """

    components: tuple
    op: np.ndarray
    name: str = "M"
    _inv: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.op.shape != (self.size, self.size):
            raise InvalidParameter(f"MGR table must be {self.size}x{self.size}, got {self.op.shape}")

    @cached_property
    def offsets(self) -> np.ndarray:
        orders = [G.order for _, G in self.components]
        return np.concatenate([[0], np.cumsum(orders)]).astype(np.int64)

    @property
    def size(self) -> int:
        return int(sum(G.order for _, G in self.components))

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"MultipleGroupRack({self.name}, components={len(self.components)}, size={self.size})"

    @cached_property
    def comp_of(self) -> np.ndarray:
        out = np.empty(self.size, dtype=np.int64)
        for c in range(len(self.components)):
            out[self.offsets[c]:self.offsets[c + 1]] = c
        return out

    @cached_property
    def local(self) -> np.ndarray:
        return np.arange(self.size) - self.offsets[self.comp_of]

    def element(self, component: int, g: int) -> int:
        return int(self.offsets[component] + g)

    def split(self, a: int) -> tuple[int, int]:
        return int(self.comp_of[a]), int(self.local[a])

    def identity(self, component: int) -> int:
        return self.element(component, self.components[component][1].identity)

    @cached_property
    def product_table(self) -> np.ndarray:
        """``N x N`` table of ``ab``, with -1 where a and b lie in different groups."""
        table = np.full((self.size, self.size), -1, dtype=np.int64)
        for c, (_, G) in enumerate(self.components):
            lo, hi = self.offsets[c], self.offsets[c + 1]
            table[lo:hi, lo:hi] = G.mul + lo
        return table

    @cached_property
    def inverse_table(self) -> np.ndarray:
        out = np.empty(self.size, dtype=np.int64)
        for c, (_, G) in enumerate(self.components):
            lo, hi = self.offsets[c], self.offsets[c + 1]
            out[lo:hi] = G.inverse + lo
        return out

    @property
    def inv_op(self) -> np.ndarray:
        if self._inv is None:
            # x *^-1 y = x * y^-1, which holds in every MGR
            object.__setattr__(self, "_inv", _frozen(self.op[:, self.inverse_table]))
        return self._inv

    def product(self, a: int, b: int) -> int:
        if self.comp_of[a] != self.comp_of[b]:
            raise InvalidOperation(
                f"elements {a} and {b} lie in different components ({self.comp_of[a]} and {self.comp_of[b]})"
            )
        return int(self.product_table[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inverse_table[a])

    def rack_op(self, x: int, y: int) -> int:
        return int(self.op[x, y])

    def rack_op_inv(self, x: int, y: int) -> int:
        return int(self.inv_op[x, y])


def associated_mgr(F: GFamily) -> MultipleGroupRack:
    """``(x,g)*(y,h) = (x *^h y, h^-1 g h)`` on ``X x G``, flattened as ``x*|G| + g``."""
    G = F.group
    k = G.order
    n = F.size
    check_size(n * k, f"associated MGR of {F.name}")
    x = np.repeat(np.arange(n), k)
    g = np.tile(np.arange(k), n)
    # left element (x, g) indexes rows, right element (y, h) indexes columns
    new_x = F.ops[g[None, :], x[:, None], x[None, :]]
    h = g
    new_g = G.mul[G.mul[G.inverse[h][None, :], g[:, None]], h[None, :]]
    op = new_x * k + new_g
    labels = F.labels if F.labels is not None else range(n)
    comps = tuple((lab, G) for lab in labels)
    return MultipleGroupRack(comps, _frozen(op), f"MGR of {F.name}")


def mgr_from_group(G: FiniteGroup) -> MultipleGroupRack:
    """One component, ``a * b = b^-1 a b``."""
    return MultipleGroupRack(((0, G),), _frozen(G.conjugation_table()), f"Conj {G.name}")


def verify_mgr(M: MultipleGroupRack) -> Report:
    """Exhaustive check of the MGR axioms.

    Reported axioms are ``right-product`` (``x*(ab) = (x*a)*b``, witness
    ``(x, a, b)``), ``right-identity`` (``x*e = x``, witness ``(x, e)``),
    ``distributivity`` (witness ``(x, y, z)``) and ``left-product``
    (``(ab)*x = (a*x)(b*x)`` with ``a*x`` and ``b*x`` in one component,
    witness ``(a, b, x)``).  Before these, ``groups`` re-checks that every
    component table is a group (associativity, identity, inverses), with a
    flattened witness.
    """
    op = M.op
    N = M.size
    rep = ReportBuilder(f"MGR {M.name}")
    offs = M.offsets

    witness = detail = None
    for c, (_, G) in enumerate(M.components):
        lo, n, mul = int(offs[c]), G.order, G.mul
        ar = np.arange(n)
        e, inv = G.identity, G.inverse
        if not ((mul[e] == ar).all() and (mul[:, e] == ar).all()):
            a = int(np.flatnonzero((mul[e] != ar) | (mul[:, e] != ar))[0])
            witness, detail = (lo + e, lo + a), "e is not a two-sided identity"
        elif not ((mul[ar, inv] == e).all() and (mul[inv, ar] == e).all()):
            a = int(np.flatnonzero((mul[ar, inv] != e) | (mul[inv, ar] != e))[0])
            witness, detail = (lo + a,), "stored inverse does not invert"
        else:
            for a in range(n):
                bad = np.argwhere(mul[mul[a][:, None], ar[None, :]] != mul[a][mul])
                if bad.size:
                    b, cc = (int(v) for v in bad[0])
                    witness, detail = (lo + a, lo + b, lo + cc), "(ab)c != a(bc)"
                    break
        if witness:
            break
    rep.record("groups", witness, detail or "")

    witness = detail = None
    for c, (_, G) in enumerate(M.components):
        lo = int(offs[c])
        ab = G.mul + lo  # [a, b] local indices
        blk = np.arange(lo, lo + G.order)
        for x in range(N):
            lhs = op[x][ab]
            rhs = op[op[x, blk][:, None], blk[None, :]]
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                a, b = (int(v) + lo for v in bad[0])
                if witness is None or (x, a, b) < witness:
                    witness = (x, a, b)
                    detail = f"x*(ab) = {int(op[x, M.product_table[a, b]])} but (x*a)*b = {int(op[op[x, a], b])}"
                break
    rep.record("right-product", witness, detail or "")

    ids = np.array([M.identity(c) for c in range(len(M.components))])
    bad = np.argwhere(op[:, ids] != np.arange(N)[:, None])
    witness = None
    if bad.size:
        witness = (int(bad[0][0]), int(ids[bad[0][1]]))
    rep.record("right-identity", witness, "x * e != x" if witness else "")

    witness = detail = None
    nz = np.arange(N)[None, :]
    for x in range(N):
        lhs = op[op[x][:, None], nz]
        rhs = op[op[x][None, :], op]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            y, z = (int(v) for v in bad[0])
            witness = (x, y, z)
            detail = f"(x*y)*z = {int(lhs[y, z])} but (x*z)*(y*z) = {int(rhs[y, z])}"
            break
    rep.record("distributivity", witness, detail or "")

    witness = detail = None
    comp = M.comp_of
    prod = M.product_table
    for c, (_, G) in enumerate(M.components):
        lo = int(offs[c])
        blk = np.arange(lo, lo + G.order)
        ab = G.mul + lo
        # ax[a, x] = a*x for a in this block
        ax = op[blk]
        same = comp[ax][:, None, :] == comp[ax][None, :, :]  # [a, b, x]
        pr = prod[ax[:, None, :], ax[None, :, :]]
        lhs = op[ab]  # [a, b, x]
        good = same & (lhs == pr)
        bad = np.argwhere(~good)
        if bad.size:
            a, b, x = (int(v) for v in bad[0])
            cand = (a + lo, b + lo, x)
            if witness is None or cand < witness:
                witness = cand
                if not same[a, b, x]:
                    detail = "a*x and b*x lie in different components"
                else:
                    detail = f"(ab)*x = {int(lhs[a, b, x])} but (a*x)(b*x) = {int(pr[a, b, x])}"
    rep.record("left-product", witness, detail or "")
    return rep.build()


def is_mcq(M: MultipleGroupRack) -> bool:
    """True iff ``a*b = b^-1 a b`` whenever a and b share a component."""
    for c, (_, G) in enumerate(M.components):
        lo = int(M.offsets[c])
        blk = np.arange(lo, lo + G.order)
        if not (M.op[blk[:, None], blk[None, :]] == G.conjugation_table() + lo).all():
            return False
    return True


def mutate_family(F: GFamily, g: int, x: int, y: int, value: int) -> GFamily:
    ops = F.ops.copy()
    ops[g, x, y] = value
    return GFamily(F.group, _frozen(ops), f"{F.name}[mutated]", F.labels)


def mutate_mgr_product(M: MultipleGroupRack, component: int, a: int, b: int, value: int) -> MultipleGroupRack:
    """Copy of M whose ``component``-th group has ``ab`` overwritten (local indices)."""
    label, G = M.components[component]
    mul = G.mul.copy()
    mul[a, b] = value
    bad = FiniteGroup(_frozen(mul), G.identity, G.inverse, f"{G.name}[mutated]", G.labels)
    comps = list(M.components)
    comps[component] = (label, bad)
    return MultipleGroupRack(tuple(comps), M.op, f"{M.name}[mutated]")
