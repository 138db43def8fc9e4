import pytest

import ordlat as o
from ordlat import (
    CapExceeded,
    DegenerateBounds,
    NotDistributive,
    NotHomomorphism,
    Unbounded,
)


def diamond_m3():
    """Bottom, three incomparable middle atoms, top."""
    return o.poset_new(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def test_chain4_is_min_max_lattice():
    L = o.lattice_from_poset(o.chain(4))
    for a in range(4):
        for b in range(4):
            assert L.meet[a][b] == min(a, b)
            assert L.join[a][b] == max(a, b)
    assert L.bottom == 0 and L.top == 3


def test_antichain2_not_a_lattice():
    with pytest.raises(Unbounded):
        o.lattice_from_poset(o.antichain(2))


def test_singleton_rejected():
    with pytest.raises(DegenerateBounds):
        o.lattice_from_poset(o.antichain(1))


def test_m3_not_distributive_with_witness():
    with pytest.raises(NotDistributive) as exc:
        o.lattice_from_poset(diamond_m3())
    a, b, c = exc.value.triple
    # the witness triple really does break the distributive law
    L = diamond_m3()
    down = {x: {y for y in range(5) if L.leq(y, x)} for x in range(5)}
    up = {x: {y for y in range(5) if L.leq(x, y)} for x in range(5)}

    def glb(x, y):
        return max(down[x] & down[y], key=lambda m: len(down[m]))

    def lub(x, y):
        return min(up[x] & up[y], key=lambda m: len(down[m]))

    assert glb(a, lub(b, c)) != lub(glb(a, b), glb(a, c))


def test_order_vs_operations_agree():
    for P in (o.chain(4), o.cube(3)):
        L = o.lattice_from_poset(P)
        for a in range(L.n):
            for b in range(L.n):
                assert L.leq(a, b) == (L.meet[a][b] == a) == (L.join[a][b] == b)


def test_algebraic_laws():
    for P in (o.chain(5), o.cube(3), o.clopen_downset_lattice(o.chain(3)).order):
        L = o.lattice_from_poset(P)
        n = L.n
        for a in range(n):
            for b in range(n):
                assert L.meet[a][b] == L.meet[b][a]
                assert L.join[a][b] == L.join[b][a]
                assert L.meet[a][L.join[a][b]] == a  # absorption
                assert L.join[a][L.meet[a][b]] == a
                for c in range(n):
                    assert L.meet[L.meet[a][b]][c] == L.meet[a][L.meet[b][c]]
                    assert L.join[L.join[a][b]][c] == L.join[a][L.join[b][c]]


def test_hom_identity():
    L = o.lattice_from_poset(o.chain(3))
    h = o.hom_new(L, L, range(3))
    assert h.mapping == (0, 1, 2)


def test_hom_collapse_middle_to_top():
    L = o.lattice_from_poset(o.chain(3))
    K = o.lattice_from_poset(o.chain(2))
    h = o.hom_new(L, K, (0, 1, 1))
    assert h(1) == 1


def test_hom_swap_rejected():
    K = o.lattice_from_poset(o.chain(2))
    with pytest.raises(NotHomomorphism):
        o.hom_new(K, K, (1, 0))


def test_enumerate_homs_counts():
    c2 = o.lattice_from_poset(o.chain(2))
    c3 = o.lattice_from_poset(o.chain(3))
    assert len(o.enumerate_homs(c2, c2)) == 1
    assert len(o.enumerate_homs(c3, c2)) == 2  # middle to bottom or top
    assert len(o.enumerate_homs(c2, c3)) == 1  # bounds force 0->0, 1->top


def test_enumerate_homs_cap():
    big = o.lattice_from_poset(o.chain(7))
    with pytest.raises(CapExceeded):
        o.enumerate_homs(big, big)


def test_homs_are_order_preserving():
    c3 = o.lattice_from_poset(o.chain(3))
    b4 = o.clopen_downset_lattice(o.antichain(2))
    for f in o.enumerate_homs(c3, b4):
        for a in range(c3.n):
            for b in range(c3.n):
                if c3.leq(a, b):
                    assert b4.leq(f(a), f(b))


def test_join_irreducibles_examples():
    c3 = o.lattice_from_poset(o.chain(3))
    ji = o.join_irreducibles(c3)
    assert ji.n == 2 and ji.is_chain()
    c2 = o.lattice_from_poset(o.chain(2))
    assert o.join_irreducibles(c2).n == 1
    e_cube2 = o.clopen_downset_lattice(o.cube(2))
    assert e_cube2.n == 6
    assert o.join_irreducibles(e_cube2).n == 4
