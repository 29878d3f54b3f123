"""Finite monoids: validation, Green structure, structural predicates, submonoids.

Elements are dense indices 0..order-1; the identity index is explicit.
All types are immutable after construction and every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import Budget
from .errors import IndexOutOfRange, NotAssociative, NotASubmonoid, NotIdentity, OrderExceedsCap
from .uf import UnionFind


@dataclass(frozen=True)
class FiniteMonoid:
    order: int
    identity: int
    mul: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def m(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def elements(self) -> range:
        return range(self.order)

    def idempotents(self) -> tuple[int, ...]:
        return tuple(e for e in range(self.order) if self.mul[e][e] == e)

    def label(self, a: int) -> str:
        if self.labels is not None:
            return self.labels[a]
        return "1" if a == self.identity else f"a{a}"


@dataclass(frozen=True)
class Submonoid:
    parent: FiniteMonoid
    members: tuple[int, ...]  # sorted, contains the identity


@dataclass(frozen=True)
class GreenStructure:
    """Class id per element for each of R, L, H, D, J and the extension R* of R."""

    r: tuple[int, ...]
    l: tuple[int, ...]
    h: tuple[int, ...]
    d: tuple[int, ...]
    j: tuple[int, ...]
    r_star: tuple[int, ...]

    def r_class(self, a: int) -> tuple[int, ...]:
        return _class_of(self.r, a)

    def l_class(self, a: int) -> tuple[int, ...]:
        return _class_of(self.l, a)

    def h_class(self, a: int) -> tuple[int, ...]:
        return _class_of(self.h, a)


@dataclass(frozen=True)
class StructurePredicates:
    is_group: bool
    is_commutative: bool
    is_regular: bool
    is_inverse: bool
    is_group_bound: bool
    is_local: bool
    is_left_cancellative: bool
    is_right_cancellative: bool
    witnesses: tuple[tuple[str, tuple[int, ...]], ...]

    def witness(self, flag: str) -> tuple[int, ...] | None:
        for name, w in self.witnesses:
            if name == flag:
                return w
        return None

    def as_dict(self) -> dict:
        out = {
            "is_group": self.is_group,
            "is_commutative": self.is_commutative,
            "is_regular": self.is_regular,
            "is_inverse": self.is_inverse,
            "is_group_bound": self.is_group_bound,
            "is_local": self.is_local,
            "is_left_cancellative": self.is_left_cancellative,
            "is_right_cancellative": self.is_right_cancellative,
        }
        out["witnesses"] = {name: list(w) for name, w in self.witnesses}
        return out


@dataclass(frozen=True)
class IdealPoset:
    side: str
    ideals: tuple[tuple[int, ...], ...]
    element_ideal: tuple[int, ...]
    leq: tuple[tuple[int, int], ...]  # (i, j) whenever ideals[i] is contained in ideals[j]
    minimal: tuple[int, ...]
    note: str

    def as_dict(self) -> dict:
        return {
            "side": self.side,
            "ideals": [list(i) for i in self.ideals],
            "element_ideal": list(self.element_ideal),
            "leq": [list(p) for p in self.leq],
            "minimal": list(self.minimal),
            "note": self.note,
        }


def normalize_partition(assign) -> tuple[int, ...]:
    """Renumber class ids by first occurrence."""
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(c, len(seen)) for c in assign)


def blocks(assign) -> tuple[tuple[int, ...], ...]:
    out: dict[int, list[int]] = {}
    for i, c in enumerate(assign):
        out.setdefault(c, []).append(i)
    return tuple(tuple(v) for _, v in sorted(out.items()))


def _class_of(assign, a):
    return tuple(i for i, c in enumerate(assign) if c == assign[a])


def build_monoid(table, identity: int, labels=None) -> FiniteMonoid:
    """Validate a multiplication table and wrap it as a FiniteMonoid.

    The first violated axiom is reported with its witnessing element or triple.
    """
    n = len(table)
    if n == 0:
        raise IndexOutOfRange("order", 0, 1)
    rows = []
    for i, row in enumerate(table):
        row = tuple(row)
        if len(row) != n:
            raise IndexOutOfRange(f"table row {i} length", len(row), n + 1)
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise IndexOutOfRange(f"table[{i}][{j}]", v, n)
        rows.append(row)
    mul = tuple(rows)
    if not isinstance(identity, int) or not 0 <= identity < n:
        raise IndexOutOfRange("identity", identity, n)
    for a in range(n):
        if mul[identity][a] != a or mul[a][identity] != a:
            raise NotIdentity(a)
    for a in range(n):
        for b in range(n):
            ab = mul[a][b]
            for c in range(n):
                if mul[ab][c] != mul[a][mul[b][c]]:
                    raise NotAssociative(a, b, c)
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise IndexOutOfRange("labels length", len(labels), n + 1)
    return FiniteMonoid(n, identity, mul, labels)


def _classes_by_key(n: int, key) -> tuple[int, ...]:
    ids: dict = {}
    return normalize_partition(tuple(ids.setdefault(key(a), len(ids)) for a in range(n)))


def _fiber_signature(values) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(v, len(seen)) for v in values)


def green(m: FiniteMonoid) -> GreenStructure:
    """Compute the five Green partitions plus R* from the multiplication table."""
    n, mul = m.order, m.mul
    a_s = [frozenset(mul[a]) for a in range(n)]
    s_a = [frozenset(mul[x][a] for x in range(n)) for a in range(n)]
    s_a_s = [frozenset(y for x in range(n) for y in mul[mul[x][a]]) for a in range(n)]

    r = _classes_by_key(n, lambda a: a_s[a])
    l = _classes_by_key(n, lambda a: s_a[a])
    h = _classes_by_key(n, lambda a: (r[a], l[a]))
    j = _classes_by_key(n, lambda a: s_a_s[a])

    uf = UnionFind(n)
    for assign in (r, l):
        for cls in blocks(assign):
            for x in cls[1:]:
                uf.union(cls[0], x)
    d = uf.assignment()

    # a R* b iff the columns x -> xa and x -> xb have identical fibers
    r_star = _classes_by_key(n, lambda a: _fiber_signature(tuple(mul[x][a] for x in range(n))))
    return GreenStructure(r, l, h, d, j, r_star)


def _is_subgroup_h_class(m: FiniteMonoid, h: tuple[int, ...], a: int) -> bool:
    cls = [x for x in range(m.order) if h[x] == h[a]]
    s = set(cls)
    return any(m.mul[u][v] in s for u in cls for v in cls)


def structure_predicates(m: FiniteMonoid, gs: GreenStructure | None = None) -> StructurePredicates:
    n, mul, e = m.order, m.mul, m.identity
    gs = gs or green(m)
    witnesses: list[tuple[str, tuple[int, ...]]] = []

    def record(flag, witness):
        if witness is not None:
            witnesses.append((flag, witness))
        return witness is None

    w = next(((a,) for a in range(n)
              if not any(mul[a][b] == e and mul[b][a] == e for b in range(n))), None)
    is_group = record("is_group", w)

    w = next(((a, b) for a in range(n) for b in range(n) if mul[a][b] != mul[b][a]), None)
    is_commutative = record("is_commutative", w)

    w = next(((a,) for a in range(n)
              if not any(mul[mul[a][x]][a] == a for x in range(n))), None)
    is_regular = record("is_regular", w)

    if is_regular:
        ids = m.idempotents()
        w = next(((p, q) for p in ids for q in ids if mul[p][q] != mul[q][p]), None)
    else:
        w = next(iter([x for f, x in witnesses if f == "is_regular"]))
    is_inverse = record("is_inverse", w)

    def bound_witness(a):
        seen, x = set(), a
        while x not in seen:
            seen.add(x)
            if _is_subgroup_h_class(m, gs.h, x):
                return None
            x = mul[x][a]
        return (a,)

    w = next((bw for a in range(n) if (bw := bound_witness(a)) is not None), None)
    is_group_bound = record("is_group_bound", w)

    r1, l1, h1 = set(gs.r_class(e)), set(gs.l_class(e)), set(gs.h_class(e))
    w = None if r1 == l1 == h1 else tuple(sorted((r1 | l1) - h1))
    is_local = record("is_local", w)

    w = next(((a, b, c) for a in range(n) for b in range(n) for c in range(b + 1, n)
              if mul[a][b] == mul[a][c]), None)
    is_left_cancellative = record("is_left_cancellative", w)

    w = next(((a, b, c) for a in range(n) for b in range(n) for c in range(b + 1, n)
              if mul[b][a] == mul[c][a]), None)
    is_right_cancellative = record("is_right_cancellative", w)

    return StructurePredicates(
        is_group, is_commutative, is_regular, is_inverse, is_group_bound,
        is_local, is_left_cancellative, is_right_cancellative, tuple(witnesses))


def submonoid(m: FiniteMonoid, members) -> Submonoid:
    members = tuple(sorted(set(members)))
    for x in members:
        if not 0 <= x < m.order:
            raise NotASubmonoid(f"element {x} out of range")
    if m.identity not in members:
        raise NotASubmonoid("identity missing")
    for a in members:
        for b in members:
            if m.mul[a][b] not in members:
                raise NotASubmonoid(f"not closed: {a}*{b} escapes")
    return Submonoid(m, members)


def _check_submonoid(m: FiniteMonoid, t: Submonoid) -> tuple[int, ...]:
    if t.parent != m:
        raise NotASubmonoid("submonoid belongs to a different monoid")
    return submonoid(m, t.members).members


def is_right_unitary(m: FiniteMonoid, t: Submonoid) -> bool:
    """True iff st in T with t in T forces s in T."""
    members = set(_check_submonoid(m, t))
    return all(s in members
               for s in range(m.order)
               if any(m.mul[s][x] in members for x in members))


def is_right_collapsible(m: FiniteMonoid, t: Submonoid) -> bool:
    """True iff every pair of T has a common right collapser inside T."""
    members = _check_submonoid(m, t)
    return all(any(m.mul[a][u] == m.mul[b][u] for u in members)
               for a in members for b in members)


def submonoid_closure(m: FiniteMonoid, gens) -> Submonoid:
    """Least submonoid containing gens, by fixed-point iteration under mul."""
    members = set(gens)
    members.add(m.identity)
    for x in members:
        if not 0 <= x < m.order:
            raise NotASubmonoid(f"generator {x} out of range")
    changed = True
    while changed:
        changed = False
        for a in list(members):
            for b in list(members):
                c = m.mul[a][b]
                if c not in members:
                    members.add(c)
                    changed = True
    return Submonoid(m, tuple(sorted(members)))


def _right_unitary_closure(m: FiniteMonoid, seed) -> frozenset[int]:
    members = set(seed)
    members.add(m.identity)
    changed = True
    while changed:
        changed = False
        for a in list(members):
            for b in list(members):
                c = m.mul[a][b]
                if c not in members:
                    members.add(c)
                    changed = True
        for s in range(m.order):
            if s not in members and any(m.mul[s][x] in members for x in members):
                members.add(s)
                changed = True
    return frozenset(members)


def enumerate_cu(m: FiniteMonoid, cap: int = 16, budget: Budget | None = None) -> list[Submonoid]:
    """All submonoids that are both right unitary and right collapsible.

    Right-unitary submonoids form a closure system, so they are generated by
    growing closed sets from {1} instead of scanning the whole powerset.
    Output is sorted lexicographically on the membership tuple.
    """
    if m.order > cap:
        raise OrderExceedsCap(m.order, cap)
    start = _right_unitary_closure(m, ())
    found = {start}
    queue = [start]
    while queue:
        t = queue.pop()
        for x in range(m.order):
            if budget is not None:
                budget.spend()
            if x in t:
                continue
            t2 = _right_unitary_closure(m, t | {x})
            if t2 not in found:
                found.add(t2)
                queue.append(t2)
    out = []
    for members in sorted(tuple(sorted(t)) for t in found):
        sub = Submonoid(m, members)
        if is_right_collapsible(m, sub):
            out.append(sub)
    return out


def principal_ideal_poset(m: FiniteMonoid, side: str) -> IdealPoset:
    """Distinct principal ideals ordered by containment, plus the element-to-ideal map."""
    n, mul = m.order, m.mul
    if side == "right":
        ideal = [frozenset(mul[a]) for a in range(n)]
    elif side == "left":
        ideal = [frozenset(mul[x][a] for x in range(n)) for a in range(n)]
    elif side == "two-sided":
        ideal = [frozenset(y for x in range(n) for y in mul[mul[x][a]]) for a in range(n)]
    else:
        raise ValueError(f"side must be left, right or two-sided, got {side!r}")
    distinct = sorted({i for i in ideal}, key=lambda s: (len(s), tuple(sorted(s))))
    index = {s: k for k, s in enumerate(distinct)}
    element_ideal = tuple(index[ideal[a]] for a in range(n))
    leq = tuple((i, k) for i, s in enumerate(distinct) for k, t in enumerate(distinct) if s <= t)
    minimal = tuple(i for i, s in enumerate(distinct)
                    if not any(t < s for t in distinct))
    note = ("every finite monoid satisfies the ascending and descending chain conditions "
            "for principal ideals: finite posets have no infinite strict chains")
    return IdealPoset(side, tuple(tuple(sorted(s)) for s in distinct),
                      element_ideal, leq, minimal, note)
