"""Tensor products, interpolation conditions, and the flatness hierarchy.

Strong and weak flatness are decided exactly. Flatness itself is only
semi-decided: the skeleton-indexed family of finitely presented test acts is
searched up to a length bound, so the verdict is Yes, No-with-witness, or
UnknownUpToBound.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .budget import Budget
from .errors import (BoundTooLargeForBudget, MonoidMismatch, NotASubmonoid, OrderExceedsCap,
                     SideMismatch, ValidationError)
from .monoid import FiniteMonoid, Submonoid, submonoid as _validate_submonoid
from .act import (ActCongruence, FiniteAct, act_of_monoid, congruence_closure,
                  left_congruences, orbit, quotient, subact)
from .uf import UnionFind


@dataclass(frozen=True)
class Skeleton:
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) < 2 or len(self.entries) % 2:
            raise ValidationError("a skeleton is a nonempty even-length sequence")

    @property
    def length(self) -> int:
        return len(self.entries) // 2


@dataclass(frozen=True)
class Tossing:
    skeleton: Skeleton
    left_chain: tuple[int, ...]   # a = a_1, ..., a_m, a'
    right_chain: tuple[int, ...]  # b, b_1, ..., b_m, b'


@dataclass(frozen=True)
class TensorProduct:
    right_act: FiniteAct
    left_act: FiniteAct
    classes: tuple[int, ...]  # indexed by a * |B| + b

    def pair_index(self, a: int, b: int) -> int:
        return a * self.left_act.size + b

    def class_of(self, pair) -> int:
        return self.classes[self.pair_index(*pair)]

    def same(self, p, q) -> bool:
        return self.class_of(p) == self.class_of(q)

    def class_count(self) -> int:
        return max(self.classes) + 1

    def class_members(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.class_count())]
        nb = self.left_act.size
        for idx, c in enumerate(self.classes):
            out[c].append((idx // nb, idx % nb))
        return out


@dataclass(frozen=True)
class FlatWitness:
    skeleton: Skeleton
    chain: tuple[int, ...]  # b, b_1, ..., b_m, b'

    def as_dict(self) -> dict:
        return {"skeleton": list(self.skeleton.entries), "chain": list(self.chain)}


@dataclass(frozen=True)
class FlatVerdict:
    status: str  # "yes" | "no" | "unknown"
    bound: int
    witness: FlatWitness | None = None

    def as_dict(self) -> dict:
        out = {"status": self.status, "bound": self.bound}
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        return out


def _check_tensor_args(a_act: FiniteAct, b_act: FiniteAct) -> None:
    if a_act.side != "right":
        raise SideMismatch("right", a_act.side)
    if b_act.side != "left":
        raise SideMismatch("left", b_act.side)
    if a_act.monoid != b_act.monoid:
        raise MonoidMismatch()


def tensor(a_act: FiniteAct, b_act: FiniteAct, budget: Budget | None = None) -> TensorProduct:
    """Partition of A x B under the equivalence generated by (a.s, b) ~ (a, s.b)."""
    _check_tensor_args(a_act, b_act)
    na, nb = a_act.size, b_act.size
    uf = UnionFind(na * nb)
    for s in range(a_act.monoid.order):
        arow = a_act.action[s]
        brow = b_act.action[s]
        for a in range(na):
            as_b = arow[a] * nb
            a_b = a * nb
            for b in range(nb):
                uf.union(as_b + b, a_b + brow[b])
        if budget is not None:
            budget.spend(na * nb)
    return TensorProduct(a_act, b_act, uf.assignment())


def _moves(a_act: FiniteAct, b_act: FiniteAct, x: int, y: int):
    """Single tossing moves out of the pair (x, y), ordered by skeleton entries.

    An 'rl' move factors y = s.b and rewrites (x, s.b) as (x.s, b); an 'lr'
    move factors x = a.s and rewrites (a.s, y) as (a, s.y). Each is one
    tossing step of length 1, padding the other coefficient with the identity.
    Yields ((s_i, t_i), b_i, dest).
    """
    m = a_act.monoid
    one = m.identity
    out = []
    for s in range(m.order):
        for b in range(b_act.size):
            if b_act.action[s][b] == y:
                out.append(((s, one), b, (a_act.action[s][x], b)))
    for s in range(m.order):
        for a in range(a_act.size):
            if a_act.action[s][a] == x:
                out.append(((one, s), y, (a, b_act.action[s][y])))
    out.sort()
    return out


def tensor_equal(a_act: FiniteAct, b_act: FiniteAct, p, q,
                 tp: TensorProduct | None = None) -> tuple[bool, Tossing | None]:
    """Class query plus, when equal, an explicit minimal-length tossing found by BFS."""
    if tp is None:
        tp = tensor(a_act, b_act)
    p, q = tuple(p), tuple(q)
    if not tp.same(p, q):
        return False, None
    if p == q:
        one = a_act.monoid.identity
        return True, Tossing(Skeleton((one, one)), (p[0], p[0]), (p[1], p[1], p[1]))
    # breadth-first search over single moves; ordered expansion makes the first
    # shortest path the one with lexicographically least skeleton
    parents: dict[tuple[int, int], tuple] = {p: None}
    frontier = [p]
    while frontier and q not in parents:
        nxt = []
        for node in frontier:
            for pair, b_i, dest in _moves(a_act, b_act, *node):
                if dest not in parents:
                    parents[dest] = (node, pair, b_i)
                    nxt.append(dest)
        frontier = nxt
    path = []
    node = q
    while parents[node] is not None:
        prev, pair, b_i = parents[node]
        path.append((pair, b_i, node))
        node = prev
    path.reverse()
    entries: list[int] = []
    left_chain = [p[0]]
    interior: list[int] = []
    for pair, b_i, dest in path:
        entries.extend(pair)
        interior.append(b_i)
        left_chain.append(dest[0])
    right_chain = [p[1]] + interior + [q[1]]
    return True, Tossing(Skeleton(tuple(entries)), tuple(left_chain), tuple(right_chain))


def verify_tossing(a_act: FiniteAct, b_act: FiniteAct, toss: Tossing, p, q) -> bool:
    """Replay the 2m+1 defining equalities of a tossing from p to q."""
    _check_tensor_args(a_act, b_act)
    ent = toss.skeleton.entries
    m = toss.skeleton.length
    left = toss.left_chain
    right = toss.right_chain
    if len(left) != m + 1 or len(right) != m + 2:
        return False
    if left[0] != p[0] or right[0] != p[1] or left[-1] != q[0] or right[-1] != q[1]:
        return False
    s = [ent[2 * i] for i in range(m)]
    t = [ent[2 * i + 1] for i in range(m)]
    b_interior = right[1:-1]
    if right[0] != b_act.action[s[0]][b_interior[0]]:
        return False
    for i in range(m - 1):
        if b_act.action[t[i]][b_interior[i]] != b_act.action[s[i + 1]][b_interior[i + 1]]:
            return False
    if b_act.action[t[m - 1]][b_interior[m - 1]] != right[-1]:
        return False
    for i in range(m):
        if a_act.action[s[i]][left[i]] != a_act.action[t[i]][left[i + 1]]:
            return False
    return True


def check_p(b_act: FiniteAct) -> tuple[bool, tuple[int, int, int, int] | None]:
    """Interpolation condition for equalities sx = ty with distinct variables."""
    m = b_act.monoid
    n, nb = m.order, b_act.size
    act = b_act.action
    mul = m.mul
    for s in range(n):
        for t in range(n):
            for x in range(nb):
                sx = act[s][x]
                for y in range(nb):
                    if sx != act[t][y]:
                        continue
                    if not any(act[sp][z] == x and act[tp][z] == y and mul[s][sp] == mul[t][tp]
                               for z in range(nb) for sp in range(n) for tp in range(n)):
                        return False, (s, t, x, y)
    return True, None


def check_e(b_act: FiniteAct) -> tuple[bool, tuple[int, int, int] | None]:
    """Interpolation condition for equalities sx = tx in a single variable."""
    m = b_act.monoid
    n, nb = m.order, b_act.size
    act = b_act.action
    mul = m.mul
    for s in range(n):
        for t in range(n):
            for x in range(nb):
                if act[s][x] != act[t][x]:
                    continue
                if not any(act[sp][z] == x and mul[s][sp] == mul[t][sp]
                           for z in range(nb) for sp in range(n)):
                    return False, (s, t, x)
    return True, None


def is_strongly_flat(b_act: FiniteAct) -> bool:
    return check_p(b_act)[0] and check_e(b_act)[0]


def is_weakly_flat(b_act: FiniteAct) -> tuple[bool, tuple[int, int, int, int] | None]:
    """Exact decision: every identification in S (x) B must already happen over aS u a'S."""
    m = b_act.monoid
    s_right = act_of_monoid(m, "right")
    big = tensor(s_right, b_act)
    n, nb = m.order, b_act.size
    for a in range(n):
        for a2 in range(a, n):
            ideal = sorted(set(m.mul[a]) | set(m.mul[a2]))
            sub, index = subact(s_right, ideal)
            small = tensor(sub, b_act)
            pa, pa2 = index[a], index[a2]
            for b in range(nb):
                for b2 in range(nb):
                    if big.same((a, b), (a2, b2)) and not small.same((pa, b), (pa2, b2)):
                        return False, (a, a2, b, b2)
    return True, None


@dataclass(frozen=True)
class _Stage:
    """Skeleton-indexed test data: the subact generated by the two marked classes."""
    sub: FiniteAct
    x: int
    xp: int


@lru_cache(maxsize=20000)
def _skeleton_stage(m: FiniteMonoid, entries: tuple[int, ...]) -> _Stage:
    """Quotient of a free right act by the skeleton's defining pairs, restricted
    to the union of the cyclic subacts of the two end generators."""
    n = m.order
    steps = len(entries) // 2
    copies = steps + 1
    action = tuple(tuple(c * n + m.mul[u][s] for c in range(copies) for u in range(n))
                   for s in range(n))
    free = FiniteAct(m, "right", copies * n, action)
    pairs = [(i * n + entries[2 * i], (i + 1) * n + entries[2 * i + 1]) for i in range(steps)]
    rho = congruence_closure(free, pairs)
    q, proj = quotient(free, rho)
    x = proj.map[m.identity]
    xp = proj.map[steps * n + m.identity]
    elems = sorted(orbit(q, x) | orbit(q, xp))
    sub, index = subact(q, elems)
    return _Stage(sub, index[x], index[xp])


def _standard_chains(b_act: FiniteAct, entries: tuple[int, ...]):
    """All (b, b_1, ..., b_m, b') in B satisfying the right-hand tossing column."""
    act = b_act.action
    steps = len(entries) // 2
    s = [entries[2 * i] for i in range(steps)]
    t = [entries[2 * i + 1] for i in range(steps)]
    chains = []

    def rec(i, prefix):
        if i == steps:
            chains.append((act[s[0]][prefix[0]],) + prefix + (act[t[-1]][prefix[-1]],))
            return
        for b in range(b_act.size):
            if i == 0 or act[t[i - 1]][prefix[-1]] == act[s[i]][b]:
                rec(i + 1, prefix + (b,))

    rec(0, ())
    return chains


def _skeleton_violation(b_act: FiniteAct, entries: tuple[int, ...]) -> FlatWitness | None:
    chains = _standard_chains(b_act, entries)
    if not chains:
        return None
    stage = _skeleton_stage(b_act.monoid, entries)
    tp = None
    checked: set[tuple[int, int]] = set()
    for chain in chains:
        ends = (chain[0], chain[-1])
        if ends in checked:
            continue
        checked.add(ends)
        if tp is None:
            tp = tensor(stage.sub, b_act)
        if not tp.same((stage.x, ends[0]), (stage.xp, ends[1])):
            return FlatWitness(Skeleton(entries), chain)
    return None


def _all_skeletons(n: int, m_max: int):
    for k in range(1, m_max + 1):
        yield from product(range(n), repeat=2 * k)


def flat_verdict(b_act: FiniteAct, m_max: int = 2, parallel: bool = False,
                 max_skeletons: int | None = None, budget: Budget | None = None) -> FlatVerdict:
    """Bounded flatness check over all skeletons of length at most m_max.

    Strong flatness short-circuits to Yes. A failing skeleton yields No with a
    replayable witness; exhausting the bound yields UnknownUpToBound. Parallel
    and serial runs agree: the lexicographically first witness wins.
    """
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    if is_strongly_flat(b_act):
        return FlatVerdict("yes", 0, None)
    n = b_act.monoid.order
    total = sum(n ** (2 * k) for k in range(1, m_max + 1))
    if max_skeletons is not None and total > max_skeletons:
        raise BoundTooLargeForBudget(total, max_skeletons)
    if parallel:
        skeletons = list(_all_skeletons(n, m_max))
        with ThreadPoolExecutor() as pool:
            results = pool.map(lambda e: _skeleton_violation(b_act, e), skeletons,
                               chunksize=max(1, len(skeletons) // 16))
            for witness in results:
                if witness is not None:
                    return FlatVerdict("no", m_max, witness)
    else:
        for entries in _all_skeletons(n, m_max):
            if budget is not None:
                budget.spend()
            witness = _skeleton_violation(b_act, entries)
            if witness is not None:
                return FlatVerdict("no", m_max, witness)
    return FlatVerdict("unknown", m_max, None)


def replay_flat_witness(b_act: FiniteAct, witness: FlatWitness) -> bool:
    """True iff the witness chain satisfies the standard column and the marked
    pair is indeed not identified over the restricted subact."""
    entries = witness.skeleton.entries
    if witness.chain not in set(_standard_chains(b_act, entries)):
        return False
    stage = _skeleton_stage(b_act.monoid, entries)
    tp = tensor(stage.sub, b_act)
    return not tp.same((stage.x, witness.chain[0]), (stage.xp, witness.chain[-1]))


def is_strongly_flat_congruence(m: FiniteMonoid, cong: ActCongruence) -> bool:
    """Left congruence criterion: u ~ v exactly when some s ~ 1 has us = vs."""
    assign = cong.classes
    n, mul = m.order, m.mul
    one = assign[m.identity]
    ones = [s for s in range(n) if assign[s] == one]
    for u in range(n):
        for v in range(n):
            related = assign[u] == assign[v]
            witnessed = any(mul[u][s] == mul[v][s] for s in ones)
            if related != witnessed:
                return False
    return True


def strongly_flat_left_congruences(m: FiniteMonoid, cap: int = 8,
                                   budget: Budget | None = None) -> list[ActCongruence]:
    if m.order > cap:
        raise OrderExceedsCap(m.order, cap)
    return [c for c in left_congruences(m, cap, budget) if is_strongly_flat_congruence(m, c)]


def rho_of_submonoid(m: FiniteMonoid, t: Submonoid) -> ActCongruence:
    """Least left congruence identifying all pairs of the submonoid."""
    if t.parent != m:
        raise NotASubmonoid("submonoid belongs to a different monoid")
    members = _validate_submonoid(m, t.members).members
    pairs = [(members[0], x) for x in members[1:]]
    return congruence_closure(act_of_monoid(m, "left"), pairs)


def emit_formula(kind: str, skeleton: Skeleton, labels) -> str:
    """ASCII rendering of the connection formula for a skeleton.

    kind "gamma" is the existential chain; kind "psi" is its universal negation.
    Emission is purely syntactic and stable.
    """
    ent = skeleton.entries
    m = skeleton.length
    parts = [f"y = {labels[ent[0]]}*y1"]
    for i in range(1, m):
        parts.append(f"{labels[ent[2 * i - 1]]}*y{i} = {labels[ent[2 * i]]}*y{i + 1}")
    parts.append(f"{labels[ent[2 * m - 1]]}*y{m} = y'")
    prefix = " . ".join(f"E y{i}" for i in range(1, m + 1))
    gamma = f"{prefix} . " + " & ".join(parts)
    if kind == "gamma":
        return gamma
    if kind == "psi":
        return f"A y . A y' . ~({gamma})"
    raise ValueError(f"kind must be 'gamma' or 'psi', got {kind!r}")
