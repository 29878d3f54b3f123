"""Finite acts over a finite monoid: validation, congruences, quotients, classification.

An act stores its action as a table indexed action[s][a]; for a left act this
is s.a, for a right act a.s, so apply() reads the same way on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import Budget
from .errors import (AssociativityActViolation, IdentityActViolation, IndexOutOfRange,
                     MonoidMismatch, NotIdempotent, OrderExceedsCap, SideMismatch,
                     ValidationError)
from .monoid import FiniteMonoid, normalize_partition, blocks
from .uf import UnionFind


@dataclass(frozen=True)
class FiniteAct:
    monoid: FiniteMonoid
    side: str  # "left" or "right"
    size: int
    action: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def apply(self, s: int, a: int) -> int:
        return self.action[s][a]

    def elements(self) -> range:
        return range(self.size)

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else f"x{a}"


@dataclass(frozen=True)
class ActCongruence:
    act: FiniteAct
    classes: tuple[int, ...]  # class id per act element, numbered by first occurrence

    def same(self, a: int, b: int) -> bool:
        return self.classes[a] == self.classes[b]

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return blocks(self.classes)


@dataclass(frozen=True)
class ActMorphism:
    source: FiniteAct
    target: FiniteAct
    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]


@dataclass(frozen=True)
class ComponentReport:
    elements: tuple[int, ...]
    generator: int | None
    idempotent: int | None


@dataclass(frozen=True)
class FreeProjReport:
    components: tuple[ComponentReport, ...]
    is_free: bool
    is_projective: bool

    def as_dict(self) -> dict:
        return {
            "components": [{"elements": list(c.elements),
                            "generator": c.generator,
                            "idempotent": c.idempotent} for c in self.components],
            "is_free": self.is_free,
            "is_projective": self.is_projective,
        }


def build_act(m: FiniteMonoid, side: str, table, labels=None) -> FiniteAct:
    if side not in ("left", "right"):
        raise SideMismatch("left or right", side)
    if len(table) != m.order:
        raise IndexOutOfRange("action row count", len(table), m.order + 1)
    rows = [tuple(row) for row in table]
    size = len(rows[0]) if rows else 0
    if size == 0:
        raise IndexOutOfRange("act size", 0, 1)
    for s, row in enumerate(rows):
        if len(row) != size:
            raise IndexOutOfRange(f"action row {s} length", len(row), size + 1)
        for a, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < size:
                raise IndexOutOfRange(f"action[{s}][{a}]", v, size)
    action = tuple(rows)
    for a in range(size):
        if action[m.identity][a] != a:
            raise IdentityActViolation(a)
    for s in range(m.order):
        for t in range(m.order):
            st = m.mul[s][t]
            for a in range(size):
                expect = action[s][action[t][a]] if side == "left" else action[t][action[s][a]]
                if action[st][a] != expect:
                    raise AssociativityActViolation(s, t, a)
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != size:
            raise IndexOutOfRange("labels length", len(labels), size + 1)
    return FiniteAct(m, side, size, action, labels)


def act_of_monoid(m: FiniteMonoid, side: str) -> FiniteAct:
    """The monoid acting on itself by multiplication."""
    if side == "left":
        return FiniteAct(m, side, m.order, m.mul, m.labels)
    if side == "right":
        table = tuple(tuple(m.mul[a][s] for a in range(m.order)) for s in range(m.order))
        return FiniteAct(m, side, m.order, table, m.labels)
    raise SideMismatch("left or right", side)


def one_element_act(m: FiniteMonoid, side: str = "left") -> FiniteAct:
    if side not in ("left", "right"):
        raise SideMismatch("left or right", side)
    return FiniteAct(m, side, 1, tuple((0,) for _ in range(m.order)))


def disjoint_union(*acts: FiniteAct) -> FiniteAct:
    first = acts[0]
    for a in acts[1:]:
        if a.monoid != first.monoid:
            raise MonoidMismatch()
        if a.side != first.side:
            raise SideMismatch(first.side, a.side)
    offsets = []
    total = 0
    for a in acts:
        offsets.append(total)
        total += a.size
    table = tuple(
        tuple(off + act.action[s][x] for act, off in zip(acts, offsets) for x in range(act.size))
        for s in range(first.monoid.order))
    return FiniteAct(first.monoid, first.side, total, table)


def orbit(act: FiniteAct, a: int) -> set[int]:
    return {act.action[s][a] for s in range(act.monoid.order)}


def subact(act: FiniteAct, elements) -> tuple[FiniteAct, dict[int, int]]:
    """Restrict to a closed element set; returns the restriction and old->new index map."""
    elems = sorted(set(elements))
    index = {x: i for i, x in enumerate(elems)}
    for s in range(act.monoid.order):
        for x in elems:
            if act.action[s][x] not in index:
                raise ValidationError(f"element set not closed: {s} moves {x} outside")
    table = tuple(tuple(index[act.action[s][x]] for x in elems) for s in range(act.monoid.order))
    return FiniteAct(act.monoid, act.side, len(elems), table), index


def act_congruence(act: FiniteAct, assign) -> ActCongruence:
    assign = normalize_partition(tuple(assign))
    if len(assign) != act.size:
        raise IndexOutOfRange("congruence length", len(assign), act.size + 1)
    for s in range(act.monoid.order):
        for a in range(act.size):
            for b in range(a + 1, act.size):
                if assign[a] == assign[b] and assign[act.action[s][a]] != assign[act.action[s][b]]:
                    raise ValidationError(
                        f"partition not compatible with the action at ({s}, {a}, {b})")
    return ActCongruence(act, assign)


def build_morphism(source: FiniteAct, target: FiniteAct, mapping) -> ActMorphism:
    if source.monoid != target.monoid:
        raise MonoidMismatch()
    if source.side != target.side:
        raise SideMismatch(source.side, target.side)
    mapping = tuple(mapping)
    if len(mapping) != source.size:
        raise IndexOutOfRange("morphism length", len(mapping), source.size + 1)
    for v in mapping:
        if not 0 <= v < target.size:
            raise IndexOutOfRange("morphism value", v, target.size)
    for s in range(source.monoid.order):
        for a in range(source.size):
            if mapping[source.action[s][a]] != target.action[s][mapping[a]]:
                raise ValidationError(f"not equivariant at ({s}, {a})")
    return ActMorphism(source, target, mapping)


def compose(f: ActMorphism, g: ActMorphism) -> ActMorphism:
    """g after f."""
    if f.target != g.source:
        raise ValidationError("morphisms do not compose: target/source mismatch")
    return ActMorphism(f.source, g.target, tuple(g.map[v] for v in f.map))


def connected_components(act: FiniteAct) -> tuple[int, ...]:
    """Finest partition joining a with s.a for every s."""
    uf = UnionFind(act.size)
    for s in range(act.monoid.order):
        row = act.action[s]
        for a in range(act.size):
            uf.union(a, row[a])
    return uf.assignment()


def congruence_closure(act: FiniteAct, pairs) -> ActCongruence:
    """Least act congruence containing the given pairs.

    Union-find seeded with the pairs and saturated by merging (s.a, s.a')
    whenever a and a' become merged.
    """
    uf = UnionFind(act.size)
    work = []
    for a, b in pairs:
        if uf.union(a, b):
            work.append((a, b))
    n_s = act.monoid.order
    action = act.action
    while work:
        a, b = work.pop()
        for s in range(n_s):
            x, y = action[s][a], action[s][b]
            if uf.union(x, y):
                work.append((x, y))
    return ActCongruence(act, uf.assignment())


def quotient(act: FiniteAct, cong: ActCongruence) -> tuple[FiniteAct, ActMorphism]:
    """Quotient act on congruence classes plus the projection morphism."""
    if cong.act != act:
        raise ValidationError("congruence belongs to a different act")
    classes = cong.classes
    reps = [None] * (max(classes) + 1)
    for a in range(act.size):
        if reps[classes[a]] is None:
            reps[classes[a]] = a
    table = tuple(tuple(classes[act.action[s][rep]] for rep in reps)
                  for s in range(act.monoid.order))
    q = FiniteAct(act.monoid, act.side, len(reps), table)
    proj = ActMorphism(act, q, classes)
    return q, proj


def factor_through_quotient(proj: ActMorphism, h: ActMorphism) -> ActMorphism:
    """The unique morphism q with q o proj = h, for h constant on classes."""
    if proj.source != h.source:
        raise ValidationError("morphisms have different sources")
    mapping = [None] * proj.target.size
    for a in range(proj.source.size):
        c = proj.map[a]
        if mapping[c] is None:
            mapping[c] = h.map[a]
        elif mapping[c] != h.map[a]:
            raise ValidationError(f"morphism is not constant on class {c}")
    return build_morphism(proj.target, h.target, mapping)


def _orbit_signature(act: FiniteAct, a: int) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(act.action[s][a], len(seen))
                 for s in range(act.monoid.order))


def cyclic_iso(a_act: FiniteAct, a: int, b_act: FiniteAct, b: int) -> bool:
    """Whether sa -> sb extends to an isomorphism of the cyclic subacts.

    Holds exactly when xa = ya and xb = yb have the same solution pairs (x, y).
    """
    if a_act.monoid != b_act.monoid:
        raise MonoidMismatch()
    if a_act.side != b_act.side:
        raise SideMismatch(a_act.side, b_act.side)
    return _orbit_signature(a_act, a) == _orbit_signature(b_act, b)


def right_e_cancellable(act: FiniteAct, a: int, e: int) -> bool:
    """ea = a and xa = ya always forces xe = ye."""
    m = act.monoid
    if m.mul[e][e] != e:
        raise NotIdempotent(e)
    if act.action[e][a] != a:
        return False
    fibers: dict[int, int] = {}
    for x in range(m.order):
        v = act.action[x][a]
        xe = m.mul[x][e]
        if fibers.setdefault(v, xe) != xe:
            return False
    return True


def classify_free_projective(act: FiniteAct) -> FreeProjReport:
    """Per connected component: a certified generator, if any; free/projective verdicts.

    A component counts as certified when some generator a together with an
    idempotent e satisfies ea = a and the cancellation condition; e = 1
    certifies freeness, any idempotent certifies projectivity. Smallest
    generator index wins, with e = 1 preferred.
    """
    m = act.monoid
    comp = connected_components(act)
    ids = m.idempotents()
    reports = []
    free_ok = True
    proj_ok = True
    for cls in blocks(comp):
        members = set(cls)
        gens = [g for g in cls if orbit(act, g) == members]
        chosen = None
        free_cert = next(((g, m.identity) for g in gens
                          if right_e_cancellable(act, g, m.identity)), None)
        if free_cert is not None:
            chosen = free_cert
        else:
            free_ok = False
            chosen = next(((g, e) for g in gens for e in ids
                           if right_e_cancellable(act, g, e)), None)
        if chosen is None:
            proj_ok = False
            reports.append(ComponentReport(cls, gens[0] if gens else None, None))
        else:
            reports.append(ComponentReport(cls, chosen[0], chosen[1]))
    return FreeProjReport(tuple(reports), free_ok and proj_ok, proj_ok)


def left_congruences(m: FiniteMonoid, cap: int = 8,
                     budget: Budget | None = None) -> list[ActCongruence]:
    """All left congruences of the monoid, as congruences on the act S.

    Set partitions are enumerated as restricted growth strings with
    compatibility pruning on the assigned prefix.
    """
    if m.order > cap:
        raise OrderExceedsCap(m.order, cap)
    s_act = act_of_monoid(m, "left")
    n, mul = m.order, m.mul
    assign = [0] * n
    out: list[ActCongruence] = []

    def compatible_prefix(k: int) -> bool:
        # check pairs (j, k) in one block whose images under each s are both assigned
        for j in range(k):
            if assign[j] != assign[k]:
                continue
            for s in range(n):
                x, y = mul[s][j], mul[s][k]
                if x <= k and y <= k and assign[x] != assign[y]:
                    return False
        return True

    def full_check() -> bool:
        for a in range(n):
            for b in range(a + 1, n):
                if assign[a] != assign[b]:
                    continue
                for s in range(n):
                    if assign[mul[s][a]] != assign[mul[s][b]]:
                        return False
        return True

    def rec(k: int, nblocks: int):
        if budget is not None:
            budget.spend()
        if k == n:
            if full_check():
                out.append(ActCongruence(s_act, tuple(assign)))
            return
        for b in range(nblocks + 1):
            assign[k] = b
            if compatible_prefix(k):
                rec(k + 1, max(nblocks, b + 1))

    rec(0, 0)
    return out
