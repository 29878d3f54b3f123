"""Catalogues of small monoids and acts: named examples, exhaustive enumeration
up to isomorphism (identity fixed at index 0), and act enumeration.

Used by the test and acceptance suites and by sampling utilities.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .monoid import FiniteMonoid, build_monoid
from .act import FiniteAct, build_act
from .errors import ValidationError


def trivial_monoid() -> FiniteMonoid:
    return build_monoid(((0,),), 0, ("1",))


def cyclic_group(k: int) -> FiniteMonoid:
    table = tuple(tuple((i + j) % k for j in range(k)) for i in range(k))
    labels = tuple("1" if i == 0 else f"g{i}" if k > 2 else "g" for i in range(k))
    return build_monoid(table, 0, labels)


def z2() -> FiniteMonoid:
    return cyclic_group(2)


def z3() -> FiniteMonoid:
    return cyclic_group(3)


def u1() -> FiniteMonoid:
    """Two-element semilattice: identity plus one idempotent e."""
    return build_monoid(((0, 1), (1, 1)), 0, ("1", "e"))


def right_zero_adjoined() -> FiniteMonoid:
    """Two right zeros {a, b} (xy = y on them) with an identity adjoined."""
    return build_monoid(((0, 1, 2), (1, 1, 2), (2, 1, 2)), 0, ("1", "a", "b"))


def left_zero_adjoined() -> FiniteMonoid:
    """Two left zeros {a, b} (xy = x on them) with an identity adjoined."""
    return build_monoid(((0, 1, 2), (1, 1, 1), (2, 2, 2)), 0, ("1", "a", "b"))


def _monoid_tables(n: int):
    """Backtrack over tables with the identity fixed at index 0."""
    if n == 1:
        yield ((0,),)
        return
    table = [[None] * n for _ in range(n)]
    for j in range(n):
        table[0][j] = j
        table[j][0] = j

    def triple_ok(x, y, z):
        xy = table[x][y]
        if xy is None:
            return True
        yz = table[y][z]
        if yz is None:
            return True
        left, right = table[xy][z], table[x][yz]
        return left is None or right is None or left == right

    def ok_after(i, j):
        for z in range(n):
            if not triple_ok(i, j, z) or not triple_ok(z, i, j):
                return False
        for x in range(n):
            for y in range(n):
                if table[x][y] == i and not triple_ok(x, y, j):
                    return False
        for y in range(n):
            for z in range(n):
                if table[y][z] == j and not triple_ok(i, y, z):
                    return False
        return True

    cells = [(i, j) for i in range(1, n) for j in range(1, n)]

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        i, j = cells[k]
        for v in range(n):
            table[i][j] = v
            if ok_after(i, j):
                yield from rec(k + 1)
        table[i][j] = None

    yield from rec(0)


def canonical_form(m: FiniteMonoid) -> tuple[tuple[int, ...], ...]:
    """Least relabelling of the table among permutations fixing the identity."""
    n = m.order
    others = [x for x in range(n) if x != m.identity]
    best = None
    for perm in permutations(others):
        old_of = (m.identity,) + perm  # new index -> old index
        new_of = [0] * n
        for new, old in enumerate(old_of):
            new_of[old] = new
        cand = tuple(tuple(new_of[m.mul[old_of[i]][old_of[j]]] for j in range(n))
                     for i in range(n))
        if best is None or cand < best:
            best = cand
    return best


@lru_cache(maxsize=None)
def enumerate_monoids(order: int) -> tuple[FiniteMonoid, ...]:
    """All monoids of the given order up to isomorphism, identity at index 0."""
    seen = set()
    out = []
    for table in _monoid_tables(order):
        m = FiniteMonoid(order, 0, table)
        canon = canonical_form(m)
        if canon not in seen:
            seen.add(canon)
            out.append(canon)
    return tuple(build_monoid(t, 0) for t in sorted(out))


def small_monoids(max_order: int) -> list[FiniteMonoid]:
    return [m for n in range(1, max_order + 1) for m in enumerate_monoids(n)]


@lru_cache(maxsize=None)
def enumerate_acts(m: FiniteMonoid, size: int, side: str = "left") -> tuple[FiniteAct, ...]:
    """All valid action tables of the given size (no deduplication)."""
    n = m.order
    ident_row = tuple(range(size))
    free_rows = [s for s in range(n) if s != m.identity]
    out = []
    for combo in product(product(range(size), repeat=size), repeat=len(free_rows)):
        rows = [None] * n
        rows[m.identity] = ident_row
        for s, row in zip(free_rows, combo):
            rows[s] = row
        try:
            out.append(build_act(m, side, tuple(rows)))
        except ValidationError:
            continue
    return tuple(out)
