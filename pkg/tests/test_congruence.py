import pytest

from finlat import (
    SizeLimit,
    all_congruences,
    boolean_lattice,
    build_from_script,
    chain,
    congruence_family,
    is_congruence,
    is_congruence_uniform,
    join_congruences,
    principal_congruence,
)
from finlat.catalog import distributive14, m3, n5

from oracles import congruences_bruteforce


def blocks_of(cong):
    return tuple(sorted(tuple(sorted(b)) for b in cong.blocks()))


def test_principal_of_equal_pair_is_discrete():
    lat = chain(3)
    assert principal_congruence(lat, 1, 1).is_discrete()


def test_chain2_collapse():
    assert principal_congruence(chain(2), 0, 1).is_full()


def test_pentagon_principals():
    lat = n5()  # 0 bottom, chain 1 < 3, side 2, top 4
    assert blocks_of(principal_congruence(lat, 1, 3)) == ((0,), (1, 3), (2,), (4,))
    assert blocks_of(principal_congruence(lat, 0, 1)) == ((0, 1, 3), (2, 4))
    assert blocks_of(principal_congruence(lat, 0, 2)) == ((0, 2), (1, 3, 4))
    # the covers (3,4) and (0,2) generate the same congruence
    assert principal_congruence(lat, 3, 4) == principal_congruence(lat, 0, 2)


def test_principal_outputs_are_translation_closed(census):
    for n, lattices in census.items():
        if n > 5:
            continue
        for lat in lattices:
            for a, b in lat.covers:
                cong = principal_congruence(lat, a, b)
                assert is_congruence(lat, cong.labels)


def test_blocks_are_intervals(census):
    for n, lattices in census.items():
        if n > 6:
            continue
        for lat in lattices:
            for cong in all_congruences(lat):
                for block in cong.blocks():
                    lo = lat.meet_set(block)
                    hi = lat.join_set(block)
                    covered = {
                        z for z in range(lat.n) if lat.leq[lo, z] and lat.leq[z, hi]
                    }
                    assert block == covered


def test_congruence_counts():
    assert len(all_congruences(chain(2))) == 2
    assert len(all_congruences(chain(3))) == 4
    congs = all_congruences(boolean_lattice(2))
    assert len(congs) == 4
    family = congruence_family(boolean_lattice(2))
    assert family.refinement.isomorphism_to(boolean_lattice(2).poset) is not None


def test_congruences_match_bruteforce(census):
    for n, lattices in census.items():
        if n > 5:
            continue
        for lat in lattices:
            ours = {blocks_of(c) for c in all_congruences(lat)}
            assert ours == congruences_bruteforce(lat)


def test_refinement_order_ends():
    family = congruence_family(chain(4))
    assert family.congruences[0].is_discrete()
    assert family.congruences[-1].is_full()
    assert family.refinement.minimal_elements() == (0,)


def test_arbitrary_principal_equals_chain_of_cover_principals(census):
    for n, lattices in census.items():
        if n > 5:
            continue
        for lat in lattices:
            for a in range(lat.n):
                for b in range(a + 1, lat.n):
                    if not lat.leq[a, b]:
                        continue
                    # one fixed saturated chain from a to b
                    path = [a]
                    while path[-1] != b:
                        path.append(
                            min(
                                u
                                for u in lat.upper_covers(path[-1])
                                if lat.leq[u, b]
                            )
                        )
                    combined = principal_congruence(lat, path[0], path[1])
                    for lo, hi in zip(path[1:], path[2:]):
                        combined = join_congruences(
                            lat, combined, principal_congruence(lat, lo, hi)
                        )
                    assert combined == principal_congruence(lat, a, b)


def test_uniformity_of_named_lattices():
    assert is_congruence_uniform(n5())
    assert is_congruence_uniform(distributive14())
    cert = is_congruence_uniform(m3())
    assert not cert
    assert "collapse" in cert.reason


def test_distributive_census_is_uniform(census):
    for n, lattices in census.items():
        for lat in lattices:
            if lat.is_distributive():
                assert is_congruence_uniform(lat)


def test_uniformity_agrees_with_dual(census):
    for n, lattices in census.items():
        if n > 6:
            continue
        for lat in lattices:
            assert bool(is_congruence_uniform(lat)) == bool(
                is_congruence_uniform(lat.dual())
            )


def test_interval_doubling_gives_uniform_lattices():
    import random

    from finlat import random_interval_script

    rng = random.Random(5)
    for _ in range(25):
        steps = random_interval_script(rng, rng.randint(1, 5))
        built = build_from_script(steps)
        assert built.all_intervals
        assert is_congruence_uniform(built.lattice)


def test_size_limit():
    with pytest.raises(SizeLimit):
        all_congruences(boolean_lattice(3), limit=4)
