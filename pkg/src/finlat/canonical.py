"""Cover labelings via perspectivity and canonical join representations.

A cover (x, y) of a congruence-uniform lattice is labeled by the unique
join-irreducible j such that (lower cover of j, j) and (x, y) are
perspective.  The labels of the lower covers of an element form its
canonical join representation, and the family of all canonical join
representations is a simplicial complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import (
    ClosureViolation,
    GammaNotFound,
    GammaNotUnique,
    NotACover,
    NotDistributive,
)
from .lattice import Lattice
from .poset import Poset


def _check_cover(lat: Lattice, cover: tuple[int, int]) -> tuple[int, int]:
    a, b = cover
    if (a, b) not in lat.cover_set:
        raise NotACover(f"({a}, {b}) is not a cover relation")
    return a, b


def are_perspective(
    lat: Lattice, first: tuple[int, int], second: tuple[int, int]
) -> bool:
    """Literal evaluation of the two perspectivity disjuncts for two covers."""
    x, y = _check_cover(lat, first)
    u, v = _check_cover(lat, second)
    if lat.join[v, x] == y and lat.meet[v, x] == u:
        return True
    return lat.join[u, y] == v and lat.meet[u, y] == x


def cover_label(lat: Lattice, cover: tuple[int, int]) -> int:
    """The unique join-irreducible whose defining cover is perspective to this one.

    Uniqueness is asserted at call time rather than trusted: on inputs that
    are not congruence uniform the scan may find zero or several candidates,
    which raises GammaNotFound / GammaNotUnique.
    """
    x, y = _check_cover(lat, cover)
    hits = []
    for j in sorted(lat.join_irreducibles):
        u = lat.irreducible_lower_cover[j]
        if (lat.join[j, x] == y and lat.meet[j, x] == u) or (
            lat.join[u, y] == j and lat.meet[u, y] == x
        ):
            hits.append(j)
    if not hits:
        raise GammaNotFound(f"no join-irreducible is perspective to ({x}, {y})")
    if len(hits) > 1:
        raise GammaNotUnique(
            f"covers ({x}, {y}) is perspective to several irreducibles: {hits}"
        )
    return hits[0]


def cover_label_table(lat: Lattice) -> dict[tuple[int, int], int]:
    """Labels for every cover of the lattice, computed in one sweep."""
    return {cover: cover_label(lat, cover) for cover in lat.covers}


def ideal_label(lat: Lattice, cover: tuple[int, int]) -> int:
    """Distributive cover labeling: the one irreducible gained along the cover.

    Defined through the representation of elements by their sets of
    join-irreducibles below; raises NotDistributive when the difference is
    not a singleton.
    """
    x, y = _check_cover(lat, cover)
    gained = [
        j for j in lat.join_irreducibles if lat.leq[j, y] and not lat.leq[j, x]
    ]
    if len(gained) != 1:
        raise NotDistributive(
            f"cover ({x}, {y}) gains {len(gained)} irreducibles; lattice is "
            f"not distributive"
        )
    return gained[0]


def canonical_join_rep(lat: Lattice, x: int) -> frozenset[int]:
    """Canonical join representation: the labels of the lower covers of x."""
    return frozenset(cover_label(lat, (y, x)) for y in lat.lower_covers(x))


def canonical_join_rep_oracle(
    lat: Lattice, x: int, full_search: bool = False
) -> frozenset[int] | None:
    """Brute-force canonical join representation, or None when there is none.

    Scans candidate subsets X joining to x and keeps those whose generated
    ideal is contained in the ideal of every join representation of x.
    By default candidates are restricted to antichains of join-irreducibles
    (a standard reduction); full_search=True scans every subset instead and
    exists to validate the reduction on small lattices.  Works on any
    lattice, no uniformity assumed.
    """
    n = lat.n
    all_reps = []
    universe = list(range(n))
    for size in range(n + 1):
        for subset in combinations(universe, size):
            if lat.join_set(subset) == x:
                all_reps.append(frozenset(subset))
    if full_search:
        candidates = all_reps
    else:
        irr = sorted(lat.join_irreducibles)
        candidates = []
        for size in range(len(irr) + 1):
            for subset in combinations(irr, size):
                if lat.join_set(subset) != x:
                    continue
                if any(
                    lat.leq[a, b] for a, b in combinations(subset, 2)
                ) or any(lat.leq[b, a] for a, b in combinations(subset, 2)):
                    continue
                candidates.append(frozenset(subset))

    ideals = {rep: lat.poset.ideal_generated(rep) for rep in all_reps}
    winners = []
    for cand in candidates:
        cand_ideal = lat.poset.ideal_generated(cand)
        if all(cand_ideal <= ideals[rep] for rep in all_reps):
            winners.append(cand)
    winners = sorted(set(winners), key=sorted)
    assert len(winners) <= 1, f"two canonical representations of {x}: {winners}"
    if not winners:
        return None
    rep = winners[0]
    # canonical representations are irredundant; a violation is a bug signal
    for smaller_size in range(len(rep)):
        for subset in combinations(sorted(rep), smaller_size):
            assert lat.join_set(subset) != x, f"redundant representation {rep}"
    return rep


@dataclass(frozen=True)
class SimplicialComplex:
    """A family of vertex sets closed under taking subsets."""

    vertices: tuple[int, ...]
    faces: frozenset[frozenset[int]]

    def sorted_faces(self) -> list[frozenset[int]]:
        """Faces in deterministic order: by dimension, then lexicographically."""
        return sorted(self.faces, key=lambda f: (len(f), sorted(f)))

    def f_vector(self) -> tuple[int, ...]:
        """Face counts by cardinality, starting with the empty face."""
        top = max((len(f) for f in self.faces), default=0)
        counts = [0] * (top + 1)
        for f in self.faces:
            counts[len(f)] += 1
        return tuple(counts)

    def facets(self) -> list[frozenset[int]]:
        """The maximal faces, in deterministic order."""
        return [
            f
            for f in self.sorted_faces()
            if not any(f < g for g in self.faces)
        ]

    @cached_property
    def _adjacent(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for f in self.faces:
            if len(f) == 2:
                a, b = sorted(f)
                adj[a].add(b)
                adj[b].add(a)
        return adj

    def is_flag(self) -> bool:
        """True iff every set of pairwise-adjacent vertices is a face."""
        cliques: list[frozenset[int]] = []

        def grow(clique: list[int], allowed: list[int]) -> None:
            cliques.append(frozenset(clique))
            for i, v in enumerate(allowed):
                grow(clique + [v], [w for w in allowed[i + 1 :] if w in self._adjacent[v]])

        grow([], list(self.vertices))
        return all(c in self.faces for c in cliques)


def canonical_join_complex(lat: Lattice) -> SimplicialComplex:
    """The complex whose faces are the canonical join representations.

    Subset closure is asserted rather than enforced: the family is closed
    for congruence-uniform input, so a violation means the precondition was
    broken and raises ClosureViolation.
    """
    faces = {canonical_join_rep(lat, x) for x in range(lat.n)}
    for face in faces:
        for v in face:
            if face - {v} not in faces:
                raise ClosureViolation(
                    f"face {sorted(face)} present but {sorted(face - {v})} missing"
                )
    vertices = tuple(sorted(lat.join_irreducibles))
    covered = {v for f in faces for v in f}
    assert covered <= set(vertices)
    return SimplicialComplex(vertices, frozenset(faces))


def face_poset(complex_: SimplicialComplex) -> Poset:
    """Containment order on all faces, including the empty face."""
    faces = complex_.sorted_faces()
    m = len(faces)
    leq = [[faces[i] <= faces[j] for j in range(m)] for i in range(m)]
    return Poset(leq)
