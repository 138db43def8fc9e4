"""Validated finite bounded distributive lattices and their homomorphisms."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

import numpy as np

from .errors import (
    CapExceeded,
    DegenerateBounds,
    NotALattice,
    NotDistributive,
    NotHomomorphism,
    Unbounded,
)
from .poset import Poset, down_masks, _bits

DEFAULT_HOM_CAP = 6


@dataclass(frozen=True)
class DistLattice:
    """Bounded distributive lattice over a Poset, with full op tables.

    Only constructed through the validating entry points; 0 != 1 always.
    """

    order: Poset
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    bottom: int
    top: int

    @property
    def n(self) -> int:
        return self.order.n

    def leq(self, a: int, b: int) -> bool:
        return self.order.leq(a, b)


def _check_distributive(meet, join, n: int) -> None:
    M = np.asarray(meet, dtype=np.int64)
    J = np.asarray(join, dtype=np.int64)
    lhs = M[np.arange(n)[:, None, None], J[None, :, :]]
    rhs = J[M[:, :, None], M[:, None, :]]
    if np.array_equal(lhs, rhs):
        return
    bad = np.argwhere(lhs != rhs)[0]
    raise NotDistributive(tuple(int(x) for x in bad))


def make_lattice(P: Poset, meet, join, bottom: int, top: int) -> DistLattice:
    """Validate externally-computed tables and wrap them up."""
    n = P.n
    if n <= 1:
        raise DegenerateBounds("need 0 != 1, so at least two elements")
    down = down_masks(P)
    full = P.full_mask
    if P.up[bottom] != full:
        raise Unbounded("bottom")
    if down[top] != full:
        raise Unbounded("top")
    for a in range(n):
        for b in range(n):
            m = meet[a][b]
            lower = down[a] & down[b]
            if not (lower >> m) & 1 or lower & ~down[m]:
                raise NotALattice((a, b), "greatest lower bound")
            j = join[a][b]
            upper = P.up[a] & P.up[b]
            if not (upper >> j) & 1 or upper & ~P.up[j]:
                raise NotALattice((a, b), "least upper bound")
    _check_distributive(meet, join, n)
    return DistLattice(
        P,
        tuple(tuple(row) for row in meet),
        tuple(tuple(row) for row in join),
        bottom,
        top,
    )


def lattice_from_poset(P: Poset) -> DistLattice:
    """Compute meet/join by bound search and validate all lattice axioms."""
    n = P.n
    if n <= 1:
        raise DegenerateBounds("need 0 != 1, so at least two elements")
    down = down_masks(P)
    full = P.full_mask
    bottoms = [i for i in range(n) if P.up[i] == full]
    tops = [i for i in range(n) if down[i] == full]
    if not bottoms:
        raise Unbounded("bottom")
    if not tops:
        raise Unbounded("top")

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            lower = down[a] & down[b]
            glb = next(
                (m for m in _bits(lower) if lower & ~down[m] == 0), None
            )
            if glb is None:
                raise NotALattice((a, b), "greatest lower bound")
            meet[a][b] = meet[b][a] = glb
            upper = P.up[a] & P.up[b]
            lub = next(
                (j for j in _bits(upper) if upper & ~P.up[j] == 0), None
            )
            if lub is None:
                raise NotALattice((a, b), "least upper bound")
            join[a][b] = join[b][a] = lub
    _check_distributive(meet, join, n)
    return DistLattice(
        P,
        tuple(tuple(row) for row in meet),
        tuple(tuple(row) for row in join),
        bottoms[0],
        tops[0],
    )


@dataclass(frozen=True)
class LatticeHom:
    source: DistLattice
    target: DistLattice
    mapping: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def then(self, other: "LatticeHom") -> "LatticeHom":
        """Composite hom: self followed by other."""
        if other.source is not self.target and other.source != self.target:
            raise ValueError("homs not composable")
        return hom_new(
            self.source,
            other.target,
            tuple(other.mapping[v] for v in self.mapping),
        )


def _hom_defect(L: DistLattice, K: DistLattice, mapping):
    if mapping[L.bottom] != K.bottom:
        return ("bottom", L.bottom)
    if mapping[L.top] != K.top:
        return ("top", L.top)
    for a in range(L.n):
        for b in range(a, L.n):
            if mapping[L.meet[a][b]] != K.meet[mapping[a]][mapping[b]]:
                return ("meet", (a, b))
            if mapping[L.join[a][b]] != K.join[mapping[a]][mapping[b]]:
                return ("join", (a, b))
    return None


def hom_new(L: DistLattice, K: DistLattice, mapping) -> LatticeHom:
    mapping = tuple(mapping)
    if len(mapping) != L.n or any(not 0 <= v < K.n for v in mapping):
        raise NotHomomorphism("map is not total into the target carrier")
    defect = _hom_defect(L, K, mapping)
    if defect is not None:
        raise NotHomomorphism(defect)
    return LatticeHom(L, K, mapping)


def identity_hom(L: DistLattice) -> LatticeHom:
    return LatticeHom(L, L, tuple(range(L.n)))


def enumerate_homs(L: DistLattice, K: DistLattice, cap: int = DEFAULT_HOM_CAP):
    """All (0,1)-homomorphisms L -> K in lexicographic map order."""
    if L.n > cap:
        raise CapExceeded(f"|L| = {L.n} exceeds hom enumeration cap {cap}")
    out = []
    for mapping in iproduct(range(K.n), repeat=L.n):
        if mapping[L.bottom] != K.bottom or mapping[L.top] != K.top:
            continue
        if _hom_defect(L, K, mapping) is None:
            out.append(LatticeHom(L, K, mapping))
    return out


def join_irreducibles(L: DistLattice) -> Poset:
    """Induced subposet of non-bottom elements j with j = a v b => j in {a,b}."""
    elems = []
    for j in range(L.n):
        if j == L.bottom:
            continue
        if all(
            L.join[a][b] != j or j in (a, b)
            for a in range(L.n)
            for b in range(L.n)
        ):
            elems.append(j)
    return L.order.induced(elems)
