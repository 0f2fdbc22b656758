import pytest

from finlat import (
    LatticeError,
    boolean_defect,
    boolean_lattice,
    canonical_join_complex,
    canonical_join_rep,
    chain,
    clo_is_lattice,
    clo_is_meet_semilattice,
    core_is_boolean,
    core_label_order,
    core_labels,
    face_poset,
    has_intersection_property,
    is_congruence_uniform,
    nucleus,
)
from finlat.catalog import distributive14, m3, n5


def test_nucleus():
    lat = distributive14()
    assert nucleus(lat, lat.bottom) == lat.bottom
    for j in lat.join_irreducibles:
        assert nucleus(lat, j) == lat.irreducible_lower_cover[j]
    assert nucleus(lat, 9) == 2  # meet of the three covers of the cube top


def test_core_labels_of_figure():
    lat = distributive14()
    assert core_labels(lat, lat.bottom) == frozenset()
    assert core_labels(lat, 9) == frozenset({1, 4, 5})  # printed {1,3,4}
    assert core_labels(lat, 13) == frozenset({10, 11})  # printed {5,6}


def test_clo_of_boolean_is_boolean():
    b3 = boolean_lattice(3)
    clo = core_label_order(b3)
    assert clo.poset.isomorphism_to(b3.poset) is not None


def test_clo_of_chain_is_fan():
    clo = core_label_order(chain(4))
    assert clo.poset.covers == ((0, 1), (0, 2), (0, 3))
    assert clo.label_sets[0] == frozenset()


def test_clo_of_figure_has_the_fourteen_label_sets():
    clo = core_label_order(distributive14())
    expected = {
        frozenset(s)
        for s in [
            (), (1,), (2,), (4,), (5,), (10,), (11,),
            (1, 2), (1, 4), (1, 5), (4, 5), (1, 10), (10, 11), (1, 4, 5),
        ]
    }
    assert set(clo.label_sets) == expected


def test_clo_rejects_non_uniform_input():
    with pytest.raises(LatticeError):
        core_label_order(m3())


def test_correspondence_table():
    lat = distributive14()
    clo = core_label_order(lat)
    for k, x in enumerate(clo.lattice_elements):
        assert clo.label_sets[k] == core_labels(lat, x)
        assert clo.labels_of_element(x) == clo.label_sets[k]


def test_boolean_defect_values():
    assert boolean_defect(distributive14()) == 0
    assert boolean_defect(boolean_lattice(3)) == 0
    assert boolean_defect(chain(5)) == 0
    assert boolean_defect(n5()) == 1


def test_defect_zero_iff_distributive(cu_census):
    for lat in cu_census:
        assert (boolean_defect(lat) == 0) == lat.is_distributive()


def test_intersection_property_reports():
    report = has_intersection_property(distributive14())
    assert report
    assert report.witness is None
    assert has_intersection_property(boolean_lattice(3))
    assert has_intersection_property(n5())


def test_clo_shape_checks():
    assert clo_is_lattice(core_label_order(boolean_lattice(3)).poset)
    fan = core_label_order(chain(3)).poset
    assert clo_is_meet_semilattice(fan)
    assert not clo_is_lattice(fan)
    fig = core_label_order(distributive14()).poset
    assert clo_is_meet_semilattice(fig)
    assert not clo_is_lattice(fig)
    # the pentagon's top nucleus is the bottom, so its order is a lattice
    assert clo_is_lattice(core_label_order(n5()).poset)


def test_core_is_boolean():
    lat = distributive14()
    for x in range(lat.n):
        assert core_is_boolean(lat, x)
    pentagon = n5()
    assert not core_is_boolean(pentagon, pentagon.top)
    for j in pentagon.join_irreducibles:
        assert core_is_boolean(pentagon, j)


def test_labels_equal_iff_boolean_core(cu_census):
    from finlat import all_core_labels

    for lat in cu_census:
        if lat.n > 6:
            continue
        psi = all_core_labels(lat)
        for x in range(lat.n):
            rep = canonical_join_rep(lat, x)
            assert rep <= psi[x]
            assert (rep == psi[x]) == core_is_boolean(lat, x)


def test_meet_semilattice_iff_intersection(cu_census):
    for lat in cu_census:
        if lat.n > 6:
            continue
        clo = core_label_order(lat)
        assert bool(has_intersection_property(lat)) == clo_is_meet_semilattice(
            clo.poset
        )
        assert clo_is_lattice(clo.poset) == (
            nucleus(lat, lat.top) == lat.bottom
        )


def test_figure_clo_isomorphic_to_face_poset():
    lat = distributive14()
    clo = core_label_order(lat)
    face = face_poset(canonical_join_complex(lat))
    assert clo.poset.isomorphism_to(face) is not None


def test_pentagon_clo_differs_from_face_poset():
    lat = n5()
    clo = core_label_order(lat)
    face = face_poset(canonical_join_complex(lat))
    assert clo.poset.isomorphism_to(face) is None
