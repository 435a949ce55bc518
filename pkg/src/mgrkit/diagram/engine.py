"""Exact counting for systems of ternary functional constraints.

Each constraint says ``v[c] = fwd[v[a]][v[b]]``; ``solve_a[v[c]][v[b]]``
and (optionally) ``solve_b[v[a]][v[c]]`` recover the other arguments.  A
table entry of -1 marks an impossible combination.  After each binding,
any constraint with only one unknown left (and a table able to solve for
it) forces that value.  Branching variables are chosen up front, greedily:
each pick is the variable whose binding forces the most others.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass
class Constraint:
    a: int
    b: int
    c: int
    fwd: list
    solve_a: list | None = None
    solve_b: list | None = None


class ConstraintProblem:
    def __init__(self, nvars: int, domain: int, constraints: Sequence[Constraint]):
        self.nvars = nvars
        self.domain = domain
        self.constraints = list(constraints)
        self.watch: list[list[int]] = [[] for _ in range(nvars)]
        for k, con in enumerate(self.constraints):
            for v in {con.a, con.b, con.c}:
                self.watch[v].append(k)

    def components(self) -> list[list[int]]:
        parent = list(range(self.nvars))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for con in self.constraints:
            parent[find(con.a)] = find(con.c)
            parent[find(con.b)] = find(con.c)
        groups: dict[int, list[int]] = {}
        for v in range(self.nvars):
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def _forced(self, known: set[int]) -> set[int]:
        """Closure of ``known`` under the constraints' solvable directions."""
        known = set(known)
        changed = True
        while changed:
            changed = False
            for con in self.constraints:
                a, b, c = con.a in known, con.b in known, con.c in known
                if a and b and not c:
                    known.add(con.c)
                elif c and b and not a and con.solve_a is not None:
                    known.add(con.a)
                elif a and c and not b and con.solve_b is not None:
                    known.add(con.b)
                else:
                    continue
                changed = True
        return known

    def branch_order(self, variables: Sequence[int]) -> list[int]:
        order: list[int] = []
        known: set[int] = set()
        todo = list(variables)
        while True:
            todo = [v for v in todo if v not in known]
            if not todo:
                return order
            best = max(todo, key=lambda v: (len(self._forced(known | {v})), -v))
            order.append(best)
            known = self._forced(known | {best})

    def _search(self, order: list[int], assign: list[int]) -> Iterator[None]:
        """Yield once per solution (``assign`` holds it at that moment)."""
        cons = self.constraints
        watch = self.watch
        trail: list[int] = []

        def set_and_propagate(v: int, val: int) -> bool:
            assign[v] = val
            trail.append(v)
            queue = [v]
            while queue:
                u = queue.pop()
                for k in watch[u]:
                    con = cons[k]
                    va, vb, vc = assign[con.a], assign[con.b], assign[con.c]
                    if va >= 0 and vb >= 0:
                        r = con.fwd[va][vb]
                        if r < 0:
                            return False
                        if vc < 0:
                            assign[con.c] = r
                            trail.append(con.c)
                            queue.append(con.c)
                        elif vc != r:
                            return False
                    elif vc >= 0 and vb >= 0 and con.solve_a is not None:
                        r = con.solve_a[vc][vb]
                        if r < 0:
                            return False
                        assign[con.a] = r
                        trail.append(con.a)
                        queue.append(con.a)
                    elif va >= 0 and vc >= 0 and con.solve_b is not None:
                        r = con.solve_b[va][vc]
                        if r < 0:
                            return False
                        assign[con.b] = r
                        trail.append(con.b)
                        queue.append(con.b)
            return True

        def undo(mark: int):
            while len(trail) > mark:
                assign[trail.pop()] = -1

        def rec(i: int):
            while i < len(order) and assign[order[i]] >= 0:
                i += 1
            if i == len(order):
                yield None
                return
            v = order[i]
            for val in range(self.domain):
                mark = len(trail)
                if set_and_propagate(v, val):
                    yield from rec(i + 1)
                undo(mark)

        yield from rec(0)

    def count(self) -> int:
        """Number of solutions, multiplied over independent components."""
        total = 1
        assign = [-1] * self.nvars
        for comp in self.components():
            n = sum(1 for _ in self._search(self.branch_order(comp), assign))
            if n == 0:
                return 0
            total *= n
        return total

    def count_flat(self) -> int:
        """Same count without the component split (used to cross-check it)."""
        assign = [-1] * self.nvars
        return sum(1 for _ in self._search(list(range(self.nvars)), assign))

    def solutions(self) -> Iterator[tuple[int, ...]]:
        assign = [-1] * self.nvars
        for _ in self._search(list(range(self.nvars)), assign):
            yield tuple(assign)
