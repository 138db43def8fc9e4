"""Finite Priestley/Birkhoff duality.

At finite scale every subset of the dual space is clopen, so both functors
reduce to plain order combinatorics: the spectrum of prime ideals under
inclusion on one side, the lattice of all down-sets on the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CapExceeded,
    DegenerateBounds,
    InternalError,
    NotOrderPreserving,
)
from .lattice import DistLattice, LatticeHom, hom_new, make_lattice
from .poset import IsoWitness, Poset, _bits, down_sets

DEFAULT_SPECTRUM_CAP = 20


@dataclass(frozen=True)
class PrimeIdeal:
    """Prime ideal of a lattice, stored as a carrier-index bitmask."""

    lattice: DistLattice
    members: int

    def __contains__(self, a: int) -> bool:
        return bool((self.members >> a) & 1)

    def elements(self) -> list[int]:
        return list(_bits(self.members))

    def validate(self) -> bool:
        return is_prime_ideal(self.lattice, self.members)


def is_ideal(L: DistLattice, mask: int) -> bool:
    """Nonempty down-set closed under binary join."""
    if mask == 0:
        return False
    for a in _bits(mask):
        # down-set: everything below a is in
        for x in range(L.n):
            if L.leq(x, a) and not (mask >> x) & 1:
                return False
    for a in _bits(mask):
        for b in _bits(mask):
            if not (mask >> L.join[a][b]) & 1:
                return False
    return True


def is_filter(L: DistLattice, mask: int) -> bool:
    """Nonempty up-set closed under binary meet."""
    if mask == 0:
        return False
    for a in _bits(mask):
        for x in range(L.n):
            if L.leq(a, x) and not (mask >> x) & 1:
                return False
    for a in _bits(mask):
        for b in _bits(mask):
            if not (mask >> L.meet[a][b]) & 1:
                return False
    return True


def is_prime_ideal(L: DistLattice, mask: int) -> bool:
    """Proper ideal whose complement is closed under meet."""
    full = L.order.full_mask
    if mask == full or not is_ideal(L, mask):
        return False
    outside = full & ~mask
    for a in _bits(outside):
        for b in _bits(outside):
            if (mask >> L.meet[a][b]) & 1:
                return False
    return True


def prime_ideals(L: DistLattice, cap: int = DEFAULT_SPECTRUM_CAP) -> list[PrimeIdeal]:
    """Brute-force filter of all down-sets, sorted by bitmask."""
    if L.n > cap:
        raise CapExceeded(f"|L| = {L.n} exceeds spectrum cap {cap}")
    out = []
    for d in down_sets(L.order, cap=max(cap, L.n)):
        if is_prime_ideal(L, d):
            out.append(PrimeIdeal(L, d))
    return out


def spec(L: DistLattice, cap: int = DEFAULT_SPECTRUM_CAP) -> Poset:
    """Poset of prime ideals of L under inclusion, in bitmask order."""
    ideals = prime_ideals(L, cap=cap)
    n = len(ideals)
    up = []
    labels = []
    for i in range(n):
        row = 0
        for j in range(n):
            if ideals[i].members & ~ideals[j].members == 0:
                row |= 1 << j
        up.append(row)
        labels.append(
            "{" + ",".join(L.order.labels[a] for a in ideals[i].elements()) + "}"
        )
    return Poset(n, tuple(up), tuple(labels))


@dataclass(frozen=True)
class SpectrumMap:
    """Order-preserving map between spectra (contravariant image of a hom)."""

    source: Poset
    target: Poset
    mapping: tuple[int, ...]

    def validate(self) -> bool:
        for i in range(self.source.n):
            for j in range(self.source.n):
                if self.source.leq(i, j) and not self.target.leq(
                    self.mapping[i], self.mapping[j]
                ):
                    return False
        return True


def spec_hom(f: LatticeHom, cap: int = DEFAULT_SPECTRUM_CAP) -> SpectrumMap:
    """Contravariant spectrum map I |-> f^{-1}(I), from spec(target of f)
    into spec(source of f)."""
    src_ideals = prime_ideals(f.source, cap=cap)
    tgt_ideals = prime_ideals(f.target, cap=cap)
    index = {I.members: k for k, I in enumerate(src_ideals)}
    mapping = []
    for I in tgt_ideals:
        pre = 0
        for a in range(f.source.n):
            if (I.members >> f.mapping[a]) & 1:
                pre |= 1 << a
        if pre not in index:
            raise InternalError(
                "preimage of a prime ideal is not prime; this cannot happen"
            )
        mapping.append(index[pre])
    out = SpectrumMap(spec(f.target, cap=cap), spec(f.source, cap=cap), tuple(mapping))
    if not out.validate():
        raise InternalError("spectrum map failed to be order-preserving")
    return out


def clopen_downset_lattice(
    X: Poset, cap: int = DEFAULT_SPECTRUM_CAP, max_count: int = 100_000
) -> DistLattice:
    """Lattice of all down-sets of X: meet is intersection, join is union."""
    if X.n == 0:
        raise DegenerateBounds("empty space has a one-element down-set lattice")
    ds = down_sets(X, cap=cap, max_count=max_count)
    index = {m: k for k, m in enumerate(ds)}
    n = len(ds)
    up = []
    labels = []
    for i in range(n):
        row = 0
        for j in range(n):
            if ds[i] & ~ds[j] == 0:
                row |= 1 << j
        up.append(row)
        labels.append(
            "{" + ",".join(X.labels[x] for x in _bits(ds[i])) + "}"
        )
    P = Poset(n, tuple(up), tuple(labels))
    meet = [[index[ds[i] & ds[j]] for j in range(n)] for i in range(n)]
    join = [[index[ds[i] | ds[j]] for j in range(n)] for i in range(n)]
    return make_lattice(P, meet, join, index[0], index[X.full_mask])


def e_hom(X: Poset, Y: Poset, g) -> LatticeHom:
    """Down-set lattice hom induced by an order-preserving g: X -> Y, acting
    by preimage: a down-set of Y maps to its g-preimage in X."""
    g = tuple(g)
    if len(g) != X.n or any(not 0 <= v < Y.n for v in g):
        raise NotOrderPreserving(("map not total", None))
    for a in range(X.n):
        for b in range(X.n):
            if X.leq(a, b) and not Y.leq(g[a], g[b]):
                raise NotOrderPreserving((a, b))
    EX = clopen_downset_lattice(X)
    EY = clopen_downset_lattice(Y)
    dsx = down_sets(X)
    dsy = down_sets(Y)
    index = {m: k for k, m in enumerate(dsx)}
    mapping = []
    for d in dsy:
        pre = 0
        for x in range(X.n):
            if (d >> g[x]) & 1:
                pre |= 1 << x
        mapping.append(index[pre])
    return hom_new(EY, EX, mapping)


def unit_lattice(L: DistLattice, cap: int = DEFAULT_SPECTRUM_CAP) -> IsoWitness:
    """The duality unit a |-> {prime ideals not containing a}, certified as
    an order isomorphism from L onto the down-set lattice of its spectrum."""
    ideals = prime_ideals(L, cap=cap)
    S = spec(L, cap=cap)
    E = clopen_downset_lattice(S)
    index = {m: k for k, m in enumerate(down_sets(S))}
    forward = []
    for a in range(L.n):
        xa = 0
        for k, I in enumerate(ideals):
            if not (I.members >> a) & 1:
                xa |= 1 << k
        if xa not in index:
            raise InternalError("unit image is not a down-set of the spectrum")
        forward.append(index[xa])
    if sorted(forward) != list(range(E.n)):
        raise InternalError("duality unit failed to be a bijection")
    w = IsoWitness.from_forward(forward)
    if not w.validate(L.order, E.order):
        raise InternalError("duality unit failed to be an order isomorphism")
    return w


def unit_space(X: Poset, cap: int = DEFAULT_SPECTRUM_CAP) -> IsoWitness:
    """The co-unit x |-> {down-sets omitting x}, certified as an order
    isomorphism from X onto the spectrum of its down-set lattice."""
    E = clopen_downset_lattice(X, cap=cap)
    ds = down_sets(X)
    ideals = prime_ideals(E, cap=max(cap, E.n))
    index = {I.members: k for k, I in enumerate(ideals)}
    forward = []
    for x in range(X.n):
        mask = 0
        for k, d in enumerate(ds):
            if not (d >> x) & 1:
                mask |= 1 << k
        if mask not in index:
            raise InternalError("co-unit image is not a prime ideal")
        forward.append(index[mask])
    if sorted(forward) != list(range(len(ideals))):
        raise InternalError("duality co-unit failed to be a bijection")
    w = IsoWitness.from_forward(forward)
    if not w.validate(X, spec(E, cap=max(cap, E.n))):
        raise InternalError("duality co-unit failed to be an order isomorphism")
    return w
