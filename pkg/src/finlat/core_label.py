"""The core label order of a congruence-uniform lattice.

The nucleus of an element is the meet of its lower covers; the core labels
of x are the cover labels appearing anywhere inside the interval from the
nucleus up to x.  Ordering elements by containment of their core label sets
gives a second partial order on the same ground set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import canonical_join_rep, cover_label_table
from .errors import PsiNotInjective
from .lattice import Lattice
from .poset import Poset


def nucleus(lat: Lattice, x: int) -> int:
    """Meet of all lower covers of x; the bottom is its own nucleus.

    The bottom element has no lower covers, and the global empty-meet
    convention (top) would be absurd here, so the bottom is fixed as its
    own nucleus.  This gives it an empty core label set and the core label
    order a least element.
    """
    lows = lat.lower_covers(x)
    if not lows:
        return x
    return lat.meet_set(lows)


def core_labels(lat: Lattice, x: int) -> frozenset[int]:
    """All cover labels inside the interval [nucleus(x), x]."""
    return _core_labels(lat, x, cover_label_table(lat))


def _core_labels(lat, x, labels) -> frozenset[int]:
    lo = nucleus(lat, x)
    leq = lat.leq
    return frozenset(
        labels[u, v] for (u, v) in lat.covers if leq[lo, u] and leq[v, x]
    )


def all_core_labels(lat: Lattice) -> list[frozenset[int]]:
    """Core label sets of every element, sharing one label table sweep."""
    labels = cover_label_table(lat)
    return [_core_labels(lat, x, labels) for x in range(lat.n)]


@dataclass(frozen=True)
class CoreLabelOrder:
    """The core label order with its element correspondence.

    poset node k corresponds to lattice element lattice_elements[k] and
    carries the label set label_sets[k]; nodes are sorted by label set size
    so that poset indices form a linear extension of containment.
    """

    poset: Poset
    lattice_elements: tuple[int, ...]
    label_sets: tuple[frozenset[int], ...]

    def labels_of_element(self, x: int) -> frozenset[int]:
        return self.label_sets[self.lattice_elements.index(x)]


def core_label_order(lat: Lattice) -> CoreLabelOrder:
    """Order the elements by containment of their core label sets.

    Injectivity of the label sets is a theorem for congruence-uniform
    lattices; a collision therefore raises PsiNotInjective instead of
    silently merging nodes.
    """
    psi = all_core_labels(lat)
    seen: dict[frozenset[int], int] = {}
    for x, s in enumerate(psi):
        if s in seen:
            raise PsiNotInjective(
                f"elements {seen[s]} and {x} share core labels {sorted(s)}"
            )
        seen[s] = x
    order = sorted(range(lat.n), key=lambda x: (len(psi[x]), sorted(psi[x])))
    sets = [psi[x] for x in order]
    leq = [[sets[i] <= sets[j] for j in range(lat.n)] for i in range(lat.n)]
    return CoreLabelOrder(Poset(leq), tuple(order), tuple(sets))


def boolean_defect(lat: Lattice) -> int:
    """Total number of core labels that are not canonical join labels."""
    labels = cover_label_table(lat)
    total = 0
    for x in range(lat.n):
        gamma = frozenset(labels[y, x] for y in lat.lower_covers(x))
        total += len(_core_labels(lat, x, labels) - gamma)
    return total


@dataclass(frozen=True)
class IntersectionReport:
    """Result of the pairwise core-label intersection check."""

    holds: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.holds


def has_intersection_property(lat: Lattice) -> IntersectionReport:
    """Is every intersection of two core label sets itself a core label set?"""
    psi = all_core_labels(lat)
    available = set(psi)
    for x in range(lat.n):
        for y in range(x + 1, lat.n):
            if psi[x] & psi[y] not in available:
                return IntersectionReport(False, (x, y))
    return IntersectionReport(True)


def clo_is_meet_semilattice(poset: Poset) -> bool:
    """Every pair of a finite poset has a greatest lower bound."""
    return poset.has_all_glbs()


def clo_is_lattice(poset: Poset) -> bool:
    """Every pair has both a greatest lower and a least upper bound."""
    return poset.has_all_glbs() and poset.has_all_lubs()


def core_is_boolean(lat: Lattice, x: int) -> bool:
    """Is the interval from the nucleus of x up to x a Boolean lattice?

    The comparison target is the Boolean lattice on as many atoms as the
    canonical join representation of x has elements.
    """
    from .constructions import boolean_lattice

    k = len(canonical_join_rep(lat, x))
    core = lat.interval(nucleus(lat, x), x)
    if core.n != 1 << k:
        return False
    return core.poset.isomorphism_to(boolean_lattice(k).poset) is not None
