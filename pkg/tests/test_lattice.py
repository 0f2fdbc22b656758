import numpy as np
import pytest

from finlat import (
    NotALattice,
    NotComparable,
    Poset,
    boolean_lattice,
    chain,
    try_lattice,
)
from finlat.catalog import distributive14, m3, n5


def test_chain_tables_are_min_max():
    lat = chain(3)
    for i in range(3):
        for j in range(3):
            assert lat.meet[i, j] == min(i, j)
            assert lat.join[i, j] == max(i, j)


def test_bowtie_is_not_a_lattice():
    p = Poset.from_covers(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    with pytest.raises(NotALattice) as info:
        try_lattice(p)
    assert len(info.value.witnesses) != 1


def test_two_antichain_with_bounds_is_boolean():
    p = Poset.from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    lat = try_lattice(p)
    assert lat.poset.isomorphism_to(boolean_lattice(2).poset) is not None


def test_figure_poset_is_a_lattice():
    lat = distributive14()
    assert lat.bottom == 0
    assert lat.top == 13


def test_join_set_conventions():
    lat = distributive14()
    assert lat.join_set([]) == lat.bottom
    assert lat.meet_set([]) == lat.top
    assert all(lat.join_set([x]) == x for x in range(lat.n))
    # the two atoms join to the element covering both
    assert lat.join_set([1, 2]) == 3


def test_join_irreducibles():
    assert sorted(chain(4).join_irreducibles) == [1, 2, 3]
    b3 = boolean_lattice(3)
    assert sorted(b3.join_irreducibles) == [1, 2, 3]  # the three atoms
    assert sorted(distributive14().join_irreducibles) == [1, 2, 4, 5, 10, 11]


def test_irreducible_lower_covers():
    lat = distributive14()
    assert lat.irreducible_lower_cover[1] == 0
    assert lat.irreducible_lower_cover[10] == 8
    assert lat.irreducible_lower_cover[11] == 9


def test_meet_irreducibles_are_dual_join_irreducibles():
    for lat in (distributive14(), n5(), m3(), boolean_lattice(3)):
        d = lat.dual()
        flipped = {lat.n - 1 - j for j in d.join_irreducibles}
        assert flipped == set(lat.meet_irreducibles)


def test_intervals():
    lat = distributive14()
    assert lat.interval(5, 5).n == 1
    assert lat.interval(lat.bottom, lat.top).n == lat.n
    core = lat.interval(2, 9)
    assert core.poset.isomorphism_to(boolean_lattice(3).poset) is not None
    with pytest.raises(NotComparable):
        lat.interval(1, 2)


def test_gradedness():
    assert chain(5).is_graded()
    assert not n5().is_graded()
    assert distributive14().is_graded()
    # all maximal chains of the figure lattice have 7 elements
    rank = [0] * 14
    lat = distributive14()
    for x in range(14):
        for low in lat.lower_covers(x):
            rank[x] = rank[low] + 1
    assert rank[lat.top] + 1 == 7


def test_distributivity_law():
    assert boolean_lattice(3).is_distributive()
    assert not n5().is_distributive()
    assert not m3().is_distributive()
    assert distributive14().is_distributive()


def test_forbidden_sublattices():
    pentagon = n5()
    witness = pentagon.find_sublattice("N5")
    assert witness is not None
    assert sorted(witness) == [0, 1, 2, 3, 4]
    diamond = m3()
    witness = diamond.find_sublattice("M3")
    assert witness is not None
    assert sorted(witness) == [0, 1, 2, 3, 4]
    for small in (chain(4), boolean_lattice(2)):
        assert small.find_sublattice("N5") is None
        assert small.find_sublattice("M3") is None
    fig = distributive14()
    assert fig.find_sublattice("N5") is None
    assert fig.find_sublattice("M3") is None


def test_sublattice_witness_is_closed():
    for lat, shape in ((n5(), "N5"), (m3(), "M3")):
        members = set(lat.find_sublattice(shape))
        for a in members:
            for b in members:
                assert lat.meet[a, b] in members
                assert lat.join[a, b] in members


def test_semidistributivity():
    assert n5().is_semidistributive()
    assert not m3().is_join_semidistributive()
    assert not m3().is_semidistributive()
    assert distributive14().is_semidistributive()


def test_distributive_census_is_semidistributive(census):
    for n, lattices in census.items():
        for lat in lattices:
            if lat.is_distributive():
                assert lat.is_semidistributive()


def test_table_axioms_on_small_lattices():
    for lat in (distributive14(), n5(), m3(), boolean_lattice(3)):
        m, j, leq = lat.meet, lat.join, lat.leq
        # bounds and absorption over the full tables
        for x in range(lat.n):
            assert (leq[m[x], x]).all()
            assert (leq[x, j[x]]).all()
            assert (j[x, m[x, :]] == x).all()
            assert (m[x, j[x, :]] == x).all()
        assert (m == m.T).all() and (j == j.T).all()
        assert (np.diag(m) == np.arange(lat.n)).all()


def test_distributivity_routes_agree_on_census(census):
    from finlat import ideal_lattice

    for n, lattices in census.items():
        if n > 6:
            continue
        for lat in lattices:
            by_law = lat.is_distributive()
            by_sub = (
                lat.find_sublattice("N5") is None
                and lat.find_sublattice("M3") is None
            )
            ideal = ideal_lattice(lat.join_irreducible_poset())
            by_rep = lat.poset.isomorphism_to(ideal.poset) is not None
            assert by_law == by_sub == by_rep
