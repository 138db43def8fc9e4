"""Finite posets as fully-closed boolean relations over small ground sets.

The relation is stored row-wise as integer bitmasks: bit j of ``up[i]`` is set
iff i <= j.  Everything downstream (lattices, spectra, searches) works on
these masks, so the n <= ~20 regime stays fast in pure Python.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import (
    AntisymmetryViolation,
    CapExceeded,
    EmptyPosetError,
    InternalError,
)

DEFAULT_MAX_SIZE = 1024
DEFAULT_CUBE_CAP = 20
DEFAULT_DOWNSET_GROUND_CAP = 24
DEFAULT_DOWNSET_COUNT_CAP = 100_000
DEFAULT_DIMENSION_CAP = 10
ENUMERATION_CAP = 7


def _bits(mask: int):
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Poset:
    """Immutable finite poset; ``up[i]`` is the bitmask of elements >= i."""

    n: int
    up: tuple[int, ...]
    labels: tuple[str, ...]

    def leq(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def strict_up(self, i: int) -> int:
        return self.up[i] & ~(1 << i)

    def relation_count(self) -> int:
        return sum(_popcount(row) for row in self.up)

    def pairs(self) -> list[tuple[int, int]]:
        """All related pairs (i, j) with i <= j, in lexicographic order."""
        return [(i, j) for i in range(self.n) for j in _bits(self.up[i])]

    def is_antichain(self) -> bool:
        return all(self.up[i] == 1 << i for i in range(self.n))

    def is_chain(self) -> bool:
        return all(
            self.leq(i, j) or self.leq(j, i)
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def check_axioms(self) -> bool:
        """Direct triple-loop check of reflexivity/antisymmetry/transitivity."""
        n = self.n
        for i in range(n):
            if not self.leq(i, i):
                return False
            for j in range(n):
                if i != j and self.leq(i, j) and self.leq(j, i):
                    return False
                if self.leq(i, j) and self.up[j] & ~self.up[i]:
                    return False
        return True

    def induced(self, elems) -> "Poset":
        """Subposet on ``elems``, reindexed in the given order."""
        elems = list(elems)
        up = []
        for a in elems:
            row = 0
            for t, b in enumerate(elems):
                if self.leq(a, b):
                    row |= 1 << t
            up.append(row)
        return Poset(len(elems), tuple(up), tuple(self.labels[a] for a in elems))

    def relabel(self, perm) -> "Poset":
        """Poset with element ``perm[i]`` placed at position i."""
        return self.induced(perm)

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (i, j): i < j with nothing strictly between."""
        down = down_masks(self)
        out = []
        for i in range(self.n):
            for j in _bits(self.strict_up(i)):
                between = self.strict_up(i) & (down[j] & ~(1 << j))
                if between == 0:
                    out.append((i, j))
        return out


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@lru_cache(maxsize=None)
def down_masks(P: Poset) -> tuple[int, ...]:
    """down_masks(P)[j] is the bitmask of elements <= j."""
    down = [0] * P.n
    for i in range(P.n):
        for j in _bits(P.up[i]):
            down[j] |= 1 << i
    return tuple(down)


@dataclass(frozen=True)
class IsoWitness:
    """Certified order isomorphism: forward/backward index bijections."""

    forward: tuple[int, ...]
    backward: tuple[int, ...]

    @classmethod
    def from_forward(cls, forward) -> "IsoWitness":
        forward = tuple(forward)
        backward = [0] * len(forward)
        for i, j in enumerate(forward):
            backward[j] = i
        return cls(forward, tuple(backward))

    def validate(self, P: Poset, Q: Poset) -> bool:
        n = P.n
        if Q.n != n or len(self.forward) != n or len(self.backward) != n:
            return False
        if sorted(self.forward) != list(range(n)):
            return False
        if any(self.backward[self.forward[i]] != i for i in range(n)):
            return False
        for i in range(n):
            for j in range(n):
                if P.leq(i, j) != Q.leq(self.forward[i], self.forward[j]):
                    return False
        return True

    def inverse(self) -> "IsoWitness":
        return IsoWitness(self.backward, self.forward)

    def then(self, other: "IsoWitness") -> "IsoWitness":
        """Composite witness: self followed by other."""
        return IsoWitness.from_forward(
            tuple(other.forward[v] for v in self.forward)
        )


def poset_new(size: int, pairs, labels=None) -> Poset:
    """Build the poset generated by ``pairs``: reflexive-transitive closure,
    rejected if the closure has a 2-cycle."""
    if size < 0:
        raise ValueError("size must be nonnegative")
    up = [1 << i for i in range(size)]
    for i, j in pairs:
        if not (0 <= i < size and 0 <= j < size):
            raise ValueError(f"pair ({i},{j}) out of range for size {size}")
        up[i] |= 1 << j
    for k in range(size):
        bit = 1 << k
        for i in range(size):
            if up[i] & bit:
                up[i] |= up[k]
    for i in range(size):
        for j in _bits(up[i]):
            if j != i and (up[j] >> i) & 1:
                raise AntisymmetryViolation((i, j))
    if labels is None:
        labels = _default_labels(size)
    return Poset(size, tuple(up), tuple(labels))


def chain(n: int) -> Poset:
    if n < 1:
        raise ValueError("chain needs n >= 1")
    full = (1 << n) - 1
    return Poset(n, tuple((full >> i) << i for i in range(n)), _default_labels(n))


def antichain(n: int) -> Poset:
    if n < 1:
        raise ValueError("antichain needs n >= 1")
    return Poset(n, tuple(1 << i for i in range(n)), _default_labels(n))


def cube(n: int, max_size: int = DEFAULT_CUBE_CAP) -> Poset:
    """n-fold product of the two-element chain; element i has coordinate
    bits of i, ordered by bitwise containment."""
    if n < 0:
        raise ValueError("cube needs n >= 0")
    size = 1 << n
    if size > max_size:
        raise CapExceeded(f"cube {n} has {size} elements, cap {max_size}")
    up = []
    for i in range(size):
        row = 0
        for j in range(size):
            if i & ~j == 0:
                row |= 1 << j
        up.append(row)
    labels = tuple(format(i, f"0{max(n, 1)}b") for i in range(size))
    return Poset(size, tuple(up), labels)


def product(P: Poset, Q: Poset, max_size: int = DEFAULT_MAX_SIZE) -> Poset:
    """Coordinatewise order on P x Q; (p, q) gets index p*|Q| + q."""
    n = P.n * Q.n
    if n > max_size:
        raise CapExceeded(f"product has {n} elements, cap {max_size}")
    up = []
    labels = []
    for p in range(P.n):
        for q in range(Q.n):
            row = 0
            for p2 in _bits(P.up[p]):
                row |= Q.up[q] << (p2 * Q.n)
            up.append(row)
            labels.append(f"({P.labels[p]},{Q.labels[q]})")
    return Poset(n, tuple(up), tuple(labels))


def disjoint_union(P: Poset, Q: Poset) -> Poset:
    up = list(P.up) + [row << P.n for row in Q.up]
    return Poset(P.n + Q.n, tuple(up), P.labels + Q.labels)


def down_sets(
    P: Poset,
    cap: int = DEFAULT_DOWNSET_GROUND_CAP,
    max_count: int = DEFAULT_DOWNSET_COUNT_CAP,
) -> list[int]:
    """All down-sets of P as bitmasks, sorted ascending.

    Elements are folded in along a linear extension, so only genuine
    down-sets are ever produced.
    """
    if P.n > cap:
        raise CapExceeded(f"|P| = {P.n} exceeds down-set cap {cap}")
    down = down_masks(P)
    topo = sorted(range(P.n), key=lambda i: (_popcount(down[i]), i))
    result = [0]
    for x in topo:
        need = down[x] & ~(1 << x)
        bit = 1 << x
        result += [d | bit for d in result if d & need == need]
        if len(result) > max_count:
            raise CapExceeded(f"more than {max_count} down-sets")
    result.sort()
    return result


def is_connected(P: Poset) -> bool:
    """True iff the comparability graph of P has a single component."""
    if P.n == 0:
        raise EmptyPosetError("connectivity undefined for the empty poset")
    down = down_masks(P)
    comp = [P.up[i] | down[i] for i in range(P.n)]
    reach = 1
    while True:
        grown = reach
        for i in _bits(reach):
            grown |= comp[i]
        if grown == reach:
            return reach == P.full_mask
        reach = grown


def width(P: Poset) -> int:
    """Maximum antichain size, by minimum chain cover: n minus the maximum
    matching of the bipartite split graph of strict comparabilities."""
    n = P.n
    strict = [P.strict_up(i) for i in range(n)]
    match_to = [-1] * n  # right vertex -> matched left vertex

    def augment(u: int, seen: list[bool]) -> bool:
        for v in _bits(strict[u]):
            if not seen[v]:
                seen[v] = True
                if match_to[v] == -1 or augment(match_to[v], seen):
                    match_to[v] = u
                    return True
        return False

    matching = 0
    for u in range(n):
        if augment(u, [False] * n):
            matching += 1
    return n - matching


def _linear_extensions(P: Poset):
    """Yield linear extensions as position arrays pos[element] = rank,
    in lexicographic order of the chosen element sequence."""
    n = P.n
    down = down_masks(P)
    pos = [0] * n
    placed = 0

    def rec(depth: int):
        nonlocal placed
        if depth == n:
            yield tuple(pos)
            return
        for x in range(n):
            bit = 1 << x
            if placed & bit:
                continue
            if (down[x] & ~bit) & ~placed:
                continue
            placed |= bit
            pos[x] = depth
            yield from rec(depth + 1)
            placed &= ~bit

    yield from rec(0)


def order_dimension(P: Poset, cap: int = DEFAULT_DIMENSION_CAP) -> int:
    """Least k such that k linear extensions intersect to exactly the order.

    Every extension contains the order, so the intersection condition reduces
    to covering each ordered incomparable pair (a, b) by an extension placing
    b below a; minimized by iterative-deepening set cover.
    """
    if P.n == 0:
        raise EmptyPosetError("dimension undefined for the empty poset")
    if P.n > cap:
        raise CapExceeded(f"|P| = {P.n} exceeds dimension cap {cap}")
    ipairs = [
        (a, b)
        for a in range(P.n)
        for b in range(P.n)
        if a != b and not P.leq(a, b) and not P.leq(b, a)
    ]
    if not ipairs:
        return 1
    masks = set()
    for pos in _linear_extensions(P):
        m = 0
        for k, (a, b) in enumerate(ipairs):
            if pos[b] < pos[a]:
                m |= 1 << k
        masks.add(m)
    masks = sorted(masks)
    # dominated masks can never help a minimum cover
    masks = [
        m
        for m in masks
        if not any(m != m2 and m | m2 == m2 for m2 in masks)
    ]
    full = (1 << len(ipairs)) - 1
    cover_by = [[m for m in masks if (m >> k) & 1] for k in range(len(ipairs))]

    def dfs(covered: int, depth: int) -> bool:
        if covered == full:
            return True
        if depth == 0:
            return False
        k = ((~covered & full) & -(~covered & full)).bit_length() - 1
        return any(dfs(covered | m, depth - 1) for m in cover_by[k])

    k = 1
    while not dfs(0, k):
        k += 1
    return k


def _iso_profile(P: Poset) -> list[tuple[int, int]]:
    down = down_masks(P)
    return [(_popcount(down[i]), _popcount(P.up[i])) for i in range(P.n)]


def is_isomorphic(P: Poset, Q: Poset) -> IsoWitness | None:
    """First order isomorphism in lexicographic search order, or None.

    Backtracking over images of 0..n-1 with (down-size, up-size) invariant
    pruning; deterministic.
    """
    n = P.n
    if Q.n != n:
        return None
    if P.relation_count() != Q.relation_count():
        return None
    ip, iq = _iso_profile(P), _iso_profile(Q)
    if sorted(ip) != sorted(iq):
        return None
    forward = [-1] * n
    used = [False] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        for c in range(n):
            if used[c] or ip[i] != iq[c]:
                continue
            ok = True
            for k in range(i):
                if P.leq(k, i) != Q.leq(forward[k], c) or P.leq(i, k) != Q.leq(
                    c, forward[k]
                ):
                    ok = False
                    break
            if ok:
                forward[i] = c
                used[c] = True
                if rec(i + 1):
                    return True
                used[c] = False
        return False

    if not rec(0):
        return None
    return IsoWitness.from_forward(forward)


def canonical_key(P: Poset) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Canonical encoding of P's relation matrix, and a permutation realizing
    it (``perm[i]`` = element placed at position i).

    The encoding minimizes, level by level, the integer chunk of relation
    bits each newly placed element contributes against all earlier ones;
    minimizing greedily per level is exact for this lexicographic order.
    Frontier prefixes with identical remainders are merged, which keeps
    highly symmetric posets (antichains) polynomial.
    """
    n = P.n
    if n == 0:
        return (), ()
    prefixes = [()]
    chunks = []
    for _ in range(n):
        cands = []
        for pre in prefixes:
            used = 0
            for p in pre:
                used |= 1 << p
            for v in range(n):
                if (used >> v) & 1:
                    continue
                c = 0
                for p in pre:
                    c = (c << 2) | (P.leq(p, v) << 1) | P.leq(v, p)
                cands.append((c, pre + (v,)))
        best = min(c for c, _ in cands)
        chunks.append(best)
        survivors = sorted(pre for c, pre in cands if c == best)
        seen = {}
        for pre in survivors:
            used = 0
            for p in pre:
                used |= 1 << p
            sig = []
            for v in range(n):
                if (used >> v) & 1:
                    continue
                vec = 0
                for p in pre:
                    vec = (vec << 2) | (P.leq(p, v) << 1) | P.leq(v, p)
                sig.append(vec)
            key = (used, tuple(sig))
            if key not in seen:
                seen[key] = pre
        prefixes = list(seen.values())
    return tuple(chunks), min(prefixes)


def canonical_form(P: Poset) -> Poset:
    """Canonical representative of P's isomorphism class, default labels."""
    _, perm = canonical_key(P)
    Q = P.relabel(perm)
    return Poset(Q.n, Q.up, _default_labels(Q.n))


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> tuple[Poset, ...]:
    if n == 1:
        return (antichain(1),)
    out: dict[tuple, Poset] = {}
    bit = 1 << (n - 1)
    for Q in _enumerate_cached(n - 1):
        for D in down_sets(Q):
            up = list(Q.up) + [bit]
            for i in _bits(D):
                up[i] |= bit
            cand = Poset(n, tuple(up), _default_labels(n))
            key, perm = canonical_key(cand)
            if key not in out:
                rep = cand.relabel(perm)
                out[key] = Poset(n, rep.up, _default_labels(n))
    return tuple(out[k] for k in sorted(out))


def enumerate_posets(n: int) -> list[Poset]:
    """One canonical representative per isomorphism class of n-element
    posets, sorted by canonical encoding.  Grown by attaching a maximal
    element above each down-set of each (n-1)-element class."""
    if n < 1:
        raise ValueError("enumerate_posets needs n >= 1")
    if n > ENUMERATION_CAP:
        raise CapExceeded(f"poset enumeration capped at n = {ENUMERATION_CAP}")
    reps = list(_enumerate_cached(n))
    for P in reps:
        if not P.check_axioms():
            raise InternalError("enumeration produced an invalid poset")
    return reps
