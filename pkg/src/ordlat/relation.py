"""The order-relation functor: the relation of a poset/lattice, regarded as a
structure in its own right under the coordinatewise order, together with the
prime-ideal bookkeeping, the two-copy factorization criterion for membership
in its image, and desk-scale fixed-point and dimension surveys.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded, InternalError, OrdlatError
from .lattice import (
    DistLattice,
    LatticeHom,
    hom_new,
    lattice_from_poset,
    make_lattice,
)
from .duality import (
    PrimeIdeal,
    clopen_downset_lattice,
    e_hom,
    prime_ideals,
    spec,
    unit_lattice,
)
from .poset import (
    DEFAULT_MAX_SIZE,
    IsoWitness,
    Poset,
    _bits,
    _popcount,
    chain,
    cube,
    down_sets,
    enumerate_posets,
    is_connected,
    is_isomorphic,
    order_dimension,
    product,
    width,
)

PairMap = tuple[tuple[int, int], ...]


def relation_poset(
    P: Poset, max_size: int = DEFAULT_MAX_SIZE
) -> tuple[Poset, PairMap]:
    """The related pairs (a, b), a <= b, of P as a poset under the
    coordinatewise order; pairs indexed lexicographically."""
    prs = P.pairs()
    m = len(prs)
    if m > max_size:
        raise CapExceeded(f"relation poset has {m} elements, cap {max_size}")
    up = []
    labels = []
    for a, b in prs:
        row = 0
        for l, (a2, b2) in enumerate(prs):
            if P.leq(a, a2) and P.leq(b, b2):
                row |= 1 << l
        up.append(row)
        labels.append(f"({P.labels[a]},{P.labels[b]})")
    return Poset(m, tuple(up), tuple(labels)), tuple(prs)


def relation_lattice(
    L: DistLattice, max_size: int = DEFAULT_MAX_SIZE
) -> tuple[DistLattice, PairMap]:
    """Relation poset of L with componentwise meet/join; verified to be
    closed inside L x L and revalidated as a bounded distributive lattice."""
    RP, prs = relation_poset(L.order, max_size=max_size)
    index = {pr: k for k, pr in enumerate(prs)}
    m = len(prs)
    meet = [[0] * m for _ in range(m)]
    join = [[0] * m for _ in range(m)]
    for k, (a, b) in enumerate(prs):
        for l, (c, d) in enumerate(prs):
            lo = (L.meet[a][c], L.meet[b][d])
            hi = (L.join[a][c], L.join[b][d])
            if lo not in index or hi not in index:
                raise InternalError(
                    "componentwise operations left the relation carrier"
                )
            meet[k][l] = index[lo]
            join[k][l] = index[hi]
    lat = make_lattice(
        RP, meet, join, index[(L.bottom, L.bottom)], index[(L.top, L.top)]
    )
    return lat, prs


def relation_hom(f: LatticeHom, max_size: int = DEFAULT_MAX_SIZE) -> LatticeHom:
    """Image of a (0,1)-hom under the relation functor: (a, b) componentwise."""
    src, sprs = relation_lattice(f.source, max_size=max_size)
    tgt, tprs = relation_lattice(f.target, max_size=max_size)
    tindex = {pr: k for k, pr in enumerate(tprs)}
    mapping = []
    for a, b in sprs:
        image = (f.mapping[a], f.mapping[b])
        if image not in tindex:
            raise InternalError("hom image left the relation carrier")
        mapping.append(tindex[image])
    return hom_new(src, tgt, mapping)


def relation_prime_ideals(
    L: DistLattice, max_size: int = DEFAULT_MAX_SIZE
) -> list[PrimeIdeal]:
    """Closed-form prime ideals of the relation lattice: for each prime
    ideal I of L, the pairs with both components in I, and the pairs with
    first component in I.  Each result is independently revalidated."""
    PhiL, prs = relation_lattice(L, max_size=max_size)
    masks = []
    seen = set()
    for I in prime_ideals(L):
        both = 0
        first = 0
        for k, (a, b) in enumerate(prs):
            if (I.members >> a) & 1:
                first |= 1 << k
                if (I.members >> b) & 1:
                    both |= 1 << k
        for m in (both, first):
            if m not in seen:
                seen.add(m)
                masks.append(m)
    masks.sort()
    out = []
    for m in masks:
        ideal = PrimeIdeal(PhiL, m)
        if not ideal.validate():
            raise InternalError("closed-form member is not a prime ideal")
        out.append(ideal)
    return out


def verify_relation_primes(L: DistLattice, max_size: int = DEFAULT_MAX_SIZE) -> bool:
    """Check the closed-form prime ideals of the relation lattice against a
    brute-force filter, and check the projection facts behind the formula
    for every brute-force prime ideal S:

    - S equals (proj1(S) x proj2(S)) intersected with the relation carrier,
    - proj1(S) is prime and proj2(S) is prime or everything,
    - proj2(S) is proj1(S) or everything.
    """
    PhiL, prs = relation_lattice(L, max_size=max_size)
    brute = prime_ideals(PhiL, cap=max(20, PhiL.n))
    closed = relation_prime_ideals(L, max_size=max_size)
    if {I.members for I in brute} != {I.members for I in closed}:
        return False
    prime_masks = {I.members for I in prime_ideals(L)}
    full = L.order.full_mask
    for S in brute:
        s1 = 0
        s2 = 0
        for k, (a, b) in enumerate(prs):
            if (S.members >> k) & 1:
                s1 |= 1 << a
                s2 |= 1 << b
        rebuilt = 0
        for k, (a, b) in enumerate(prs):
            if (s1 >> a) & 1 and (s2 >> b) & 1:
                rebuilt |= 1 << k
        if rebuilt != S.members:
            return False
        if s1 not in prime_masks:
            return False
        if s2 != full and s2 not in prime_masks:
            return False
        if s2 not in (s1, full):
            return False
    return True


def relation_downset_iso(X: Poset, max_size: int = DEFAULT_MAX_SIZE) -> IsoWitness:
    """Explicit isomorphism between the relation lattice of the down-set
    lattice of X and the down-set lattice of X x 2.

    A carrier pair (d, e) with d <= e maps to d on the top layer together
    with e on the bottom layer; the inverse splits a down-set of X x 2 into
    its two layers (top layer first).  Both directions are validated.
    """
    E = clopen_downset_lattice(X)
    PhiE, prs = relation_lattice(E, max_size=max_size)
    ds = down_sets(X)
    prod = product(X, chain(2))
    E2 = clopen_downset_lattice(prod)
    index2 = {m: k for k, m in enumerate(down_sets(prod))}
    forward = []
    for i, j in prs:
        c = 0
        for x in _bits(ds[i]):
            c |= 1 << (2 * x + 1)
        for x in _bits(ds[j]):
            c |= 1 << (2 * x)
        if c not in index2:
            raise InternalError("layered image is not a down-set of X x 2")
        forward.append(index2[c])
    w = IsoWitness.from_forward(forward)
    if not w.validate(PhiE.order, E2.order):
        raise InternalError("layer map failed to be an order isomorphism")
    return w


@dataclass(frozen=True)
class FactorWitness:
    """Certificate that P is order-isomorphic to (factor) x 2.

    ``block`` is the bottom copy as a bitmask (a down-set covering half of
    P); ``pairing[t]`` is the top-copy partner of the t-th smallest block
    element; ``factor`` is the induced subposet on the block.
    """

    block: int
    pairing: tuple[int, ...]
    factor: Poset

    def assembled(self, P: Poset) -> IsoWitness:
        """Order isomorphism factor x 2 -> P ((y,0) to block, (y,1) on top)."""
        belems = list(_bits(self.block))
        forward = [0] * P.n
        for t, b in enumerate(belems):
            forward[2 * t] = b
            forward[2 * t + 1] = self.pairing[t]
        return IsoWitness.from_forward(forward)

    def validate(self, P: Poset) -> bool:
        if _popcount(self.block) * 2 != P.n:
            return False
        return self.assembled(P).validate(product(self.factor, chain(2)), P)


def factor_by_two(P: Poset) -> FactorWitness | None:
    """First factorization of P as (down-set half) x 2 in deterministic
    search order, or None.

    Candidate bottom halves are down-sets of size n/2; partners are chosen
    by backtracking so that the top half is an isomorphic copy and relations
    across the two halves mirror relations inside the bottom half.
    """
    n = P.n
    if n == 0 or n % 2:
        return None
    half = n // 2
    for B in down_sets(P):
        if _popcount(B) != half:
            continue
        belems = list(_bits(B))
        celems = list(_bits(P.full_mask & ~B))
        partner = [-1] * half
        used = [False] * half

        def rec(t: int) -> bool:
            if t == half:
                return True
            b = belems[t]
            for ci, c in enumerate(celems):
                if used[ci]:
                    continue
                if not P.leq(b, c):  # each element sits below its partner
                    continue
                ok = True
                for s in range(t):
                    b2, c2 = belems[s], partner[s]
                    if P.leq(b, b2) != P.leq(c, c2) or P.leq(b2, b) != P.leq(c2, c):
                        ok = False
                        break
                    # cross relations must mirror bottom-half relations
                    if P.leq(b, c2) != P.leq(b, b2) or P.leq(b2, c) != P.leq(b2, b):
                        ok = False
                        break
                if ok:
                    partner[t] = c
                    used[ci] = True
                    if rec(t + 1):
                        return True
                    used[ci] = False
            return False

        if rec(0):
            w = FactorWitness(B, tuple(partner), P.induced(belems))
            if not w.validate(P):
                raise InternalError("factor witness failed assembled check")
            return w
    return None


def relation_image_witness(
    L: DistLattice, max_size: int = DEFAULT_MAX_SIZE
) -> tuple[DistLattice, IsoWitness] | None:
    """Decide whether L is (isomorphic to) the relation lattice of some K.

    Works through the dual space: L is in the image iff its spectrum factors
    as Y x 2; then K is the down-set lattice of Y and the returned witness
    maps the relation lattice of K onto L, composed from the layered
    isomorphism, the factorization, and the duality unit.
    """
    X = spec(L)
    fw = factor_by_two(X)
    if fw is None:
        return None
    Y = fw.factor
    K = clopen_downset_lattice(Y)
    PhiK, _ = relation_lattice(K, max_size=max_size)
    w_unit = unit_lattice(L)  # L -> E(X)
    prod = product(Y, chain(2))
    h = fw.assembled(X)  # Y x 2 -> X
    hom = e_hom(prod, X, h.forward)  # E(X) -> E(Y x 2)
    w_layers = relation_downset_iso(Y, max_size=max_size)  # PhiK -> E(Y x 2)
    forward = [
        w_layers.backward[hom.mapping[w_unit.forward[i]]] for i in range(L.n)
    ]
    w = IsoWitness.from_forward(forward).inverse()
    if not w.validate(PhiK.order, L.order):
        raise InternalError("image witness failed to validate")
    return K, w


@dataclass(frozen=True)
class FixedPointReport:
    mode: str
    n_max: int
    hits: tuple[str, ...]
    expectation: str


FIXED_POINT_MODES = ("posets", "lattices", "connected_posets")


def find_fixed_points(n_max: int, mode: str) -> FixedPointReport:
    """Exhaustively scan isomorphism classes up to n_max for structures
    isomorphic to their own relation poset.

    The expected outcomes (antichains and nothing else for posets, nothing
    for lattices, only the singleton among connected posets) are asserted,
    not assumed; a violation raises InternalError.
    """
    if mode not in FIXED_POINT_MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if n_max > 7:
        raise CapExceeded("fixed-point scan capped at n = 7")
    hits = []
    hit_posets = []
    for size in range(1, n_max + 1):
        for idx, P in enumerate(enumerate_posets(size)):
            if mode == "lattices":
                try:
                    lattice_from_poset(P)
                except OrdlatError:
                    continue
            if mode == "connected_posets" and not is_connected(P):
                continue
            RP, _ = relation_poset(P)
            if RP.n == P.n and is_isomorphic(RP, P) is not None:
                hits.append(f"n{size}#{idx:03d}")
                hit_posets.append(P)
    if mode == "posets":
        ok = len(hits) == n_max and all(P.is_antichain() for P in hit_posets)
        expectation = "fixed points are exactly the antichains"
    elif mode == "lattices":
        ok = not hits
        expectation = "no lattice fixed points"
    else:
        ok = all(P.n == 1 for P in hit_posets)
        expectation = "no connected fixed point with more than one element"
    if not ok:
        raise InternalError(f"fixed-point expectation violated: {expectation}")
    return FixedPointReport(mode, n_max, tuple(hits), expectation)


def cube_shift_check(n: int) -> bool:
    """Finite shadow of the shift self-similarity of the infinite cube:
    the relation lattice of the n-cube's down-set lattice is isomorphic to
    the (n+1)-cube's down-set lattice, via an explicit composed witness."""
    if n > 3:
        raise CapExceeded("shift check capped at n = 3")
    X = cube(n)
    E1 = clopen_downset_lattice(X)
    Phi1, _ = relation_lattice(E1)
    X1 = cube(n + 1)
    E2 = clopen_downset_lattice(X1)
    w_layers = relation_downset_iso(X)  # Phi1 -> E(X x 2)
    prod = product(X, chain(2))
    # drop coordinate 0 into the extra factor: y -> (shift(y), y(0))
    shuffle = [((i >> 1) * 2) + (i & 1) for i in range(X1.n)]
    hom = e_hom(X1, prod, shuffle)  # E(X x 2) -> E(cube(n+1))
    forward = [hom.mapping[w_layers.forward[k]] for k in range(Phi1.n)]
    w = IsoWitness.from_forward(forward)
    return w.validate(Phi1.order, E2.order)


def dimension_report(n_max: int, dim_cap: int = 10) -> list[dict]:
    """Survey rows comparing width and order dimension of each small poset
    with those of its relation poset; oversized dimension entries are
    marked skipped rather than computed."""
    if n_max > 6:
        raise CapExceeded("dimension report capped at n_max = 6")
    rows = []
    for size in range(1, n_max + 1):
        for idx, P in enumerate(enumerate_posets(size)):
            RP, _ = relation_poset(P)
            dim_p = order_dimension(P, cap=dim_cap) if P.n <= dim_cap else None
            dim_rp = order_dimension(RP, cap=dim_cap) if RP.n <= dim_cap else None
            rows.append(
                {
                    "id": f"n{size}#{idx:03d}",
                    "size": P.n,
                    "dim": dim_p if dim_p is not None else "SKIPPED",
                    "dim_rel": dim_rp if dim_rp is not None else "SKIPPED",
                    "width": width(P),
                    "width_rel": width(RP),
                }
            )
    return rows
