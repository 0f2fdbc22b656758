import pytest

from finlat import enumerate_lattices, is_congruence_uniform


@pytest.fixture(scope="session")
def census():
    """All lattice isomorphism classes with up to 7 elements, by size."""
    return {n: list(enumerate_lattices(n)) for n in range(1, 8)}


@pytest.fixture(scope="session")
def cu_census(census):
    """The congruence-uniform part of the census."""
    return [
        lat
        for n in sorted(census)
        for lat in census[n]
        if is_congruence_uniform(lat)
    ]
