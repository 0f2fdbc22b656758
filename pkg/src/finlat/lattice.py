"""Lattice structure over a poset: meet/join tables and law checks."""

from __future__ import annotations

from functools import cached_property
from collections.abc import Iterable

import numpy as np

from .errors import NotALattice, NotComparable
from .poset import Poset


def try_lattice(poset: Poset) -> "Lattice":
    """Build a Lattice from a poset, or raise NotALattice naming a bad pair."""
    return Lattice(poset)


class Lattice:
    """A finite lattice with materialized meet and join tables.

    The tables cost O(n^2) space and O(n^2) dictionary lookups to build,
    which is fine at the sizes this package targets (a few hundred elements)
    and buys constant-time queries everywhere else.  Instances are immutable
    and safe to share between threads.
    """

    def __init__(self, poset: Poset):
        if poset.n == 0:
            raise NotALattice(0, 0, (), kind="bottom")
        self.poset = poset
        self.meet, self.join = self._build_tables(poset)
        mins = poset.minimal_elements()
        maxs = poset.maximal_elements()
        # try_lattice on a poset with several minima fails in _build_tables,
        # so these are genuine invariants by the time we get here.
        assert len(mins) == 1 and len(maxs) == 1
        self.bottom = mins[0]
        self.top = maxs[0]

    @staticmethod
    def _build_tables(poset: Poset) -> tuple[np.ndarray, np.ndarray]:
        n = poset.n
        leq = poset.leq
        # x is the join of a pair iff its up-set equals the intersection of
        # both up-sets, so a dictionary of up-set rows finds joins directly.
        up_of = {leq[i, :].tobytes(): i for i in range(n)}
        down_of = {leq[:, i].tobytes(): i for i in range(n)}
        join = np.zeros((n, n), dtype=np.intp)
        meet = np.zeros((n, n), dtype=np.intp)
        for i in range(n):
            for j in range(i, n):
                common_up = leq[i, :] & leq[j, :]
                k = up_of.get(common_up.tobytes())
                if k is None:
                    raise NotALattice(i, j, _minimal_of(leq, common_up), "join")
                join[i, j] = join[j, i] = k
                common_down = leq[:, i] & leq[:, j]
                k = down_of.get(common_down.tobytes())
                if k is None:
                    raise NotALattice(i, j, _maximal_of(leq, common_down), "meet")
                meet[i, j] = meet[j, i] = k
        join.flags.writeable = False
        meet.flags.writeable = False
        return meet, join

    # -- delegation ----------------------------------------------------------

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def leq(self) -> np.ndarray:
        return self.poset.leq

    @property
    def covers(self) -> tuple[tuple[int, int], ...]:
        return self.poset.covers

    @cached_property
    def cover_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.poset.covers)

    def lower_covers(self, x: int) -> tuple[int, ...]:
        return self.poset.lower_covers(x)

    def upper_covers(self, x: int) -> tuple[int, ...]:
        return self.poset.upper_covers(x)

    def __repr__(self):
        return f"Lattice(n={self.n}, covers={list(self.covers)})"

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.poset == other.poset

    def __hash__(self):
        return hash(self.poset)

    # -- folds ----------------------------------------------------------------

    def join_set(self, members: Iterable[int]) -> int:
        """Join of a set of elements; the empty join is the bottom element."""
        out = self.bottom
        for x in members:
            out = int(self.join[out, x])
        return out

    def meet_set(self, members: Iterable[int]) -> int:
        """Meet of a set of elements; the empty meet is the top element."""
        out = self.top
        for x in members:
            out = int(self.meet[out, x])
        return out

    # -- irreducibles -----------------------------------------------------------

    @cached_property
    def join_irreducibles(self) -> frozenset[int]:
        """Elements with exactly one lower cover.

        Cross-checked against the algebraic characterization (j = x v y
        forces j in {x, y}, excluding the bottom); a mismatch would mean a
        corrupt table, so it is a hard assertion.
        """
        by_covers = frozenset(
            i for i in range(self.n) if len(self.lower_covers(i)) == 1
        )
        algebraic = set()
        for j in range(self.n):
            if j == self.bottom:
                continue
            xs, ys = np.nonzero(self.join == j)
            if all(x == j or y == j for x, y in zip(xs, ys)):
                algebraic.add(j)
        assert by_covers == algebraic, "join-irreducible characterizations disagree"
        return by_covers

    @cached_property
    def meet_irreducibles(self) -> frozenset[int]:
        """Elements with exactly one upper cover."""
        return frozenset(i for i in range(self.n) if len(self.upper_covers(i)) == 1)

    @cached_property
    def irreducible_lower_cover(self) -> dict[int, int]:
        """Map each join-irreducible j to its unique lower cover."""
        return {j: self.lower_covers(j)[0] for j in self.join_irreducibles}

    @cached_property
    def irreducible_upper_cover(self) -> dict[int, int]:
        """Map each meet-irreducible m to its unique upper cover."""
        return {m: self.upper_covers(m)[0] for m in self.meet_irreducibles}

    def join_irreducible_poset(self) -> Poset:
        """Induced subposet on the join-irreducibles (ascending index order)."""
        return self.poset.subposet(self.join_irreducibles)

    # -- substructures -----------------------------------------------------------

    def interval(self, a: int, b: int) -> "Lattice":
        """The interval [a, b] as a lattice, reindexed in ascending order."""
        if not self.leq[a, b]:
            raise NotComparable(f"{a} is not below {b}")
        elems = [z for z in range(self.n) if self.leq[a, z] and self.leq[z, b]]
        return Lattice(self.poset.subposet(elems))

    def dual(self) -> "Lattice":
        return Lattice(self.poset.dual())

    # -- law checks ------------------------------------------------------------

    def is_graded(self) -> bool:
        """True iff all maximal chains share one length (a rank function exists)."""
        rank = [0] * self.n
        for i in range(self.n):
            lows = self.lower_covers(i)
            if not lows:
                continue
            wanted = rank[lows[0]] + 1
            if any(rank[c] + 1 != wanted for c in lows):
                return False
            rank[i] = wanted
        return True

    def is_distributive(self) -> bool:
        """Exhaustive check of both distributive identities over all triples."""
        n = self.n
        for x in range(n):
            mx = self.meet[x]
            if not (mx[self.join] == self.join[np.ix_(mx, mx)]).all():
                return False
            jx = self.join[x]
            if not (jx[self.meet] == self.meet[np.ix_(jx, jx)]).all():
                return False
        return True

    def find_sublattice(self, shape: str) -> tuple[int, ...] | None:
        """Search for a 5-element sublattice of the given shape, "N5" or "M3".

        The witness for N5 is (bottom, side, chain_low, chain_high, top);
        for M3 it is (bottom, atom, atom, atom, top).  Returns None when the
        shape does not embed.
        """
        n = self.n
        cmp = self.leq | self.leq.T
        if shape == "N5":
            # A pentagon exists iff some x and some y < z are incomparable
            # with x ^ y = x ^ z and x v y = x v z; the five closure elements
            # are then forced.
            for y in range(n):
                for z in range(n):
                    if y == z or not self.leq[y, z]:
                        continue
                    ok = (
                        (self.meet[y] == self.meet[z])
                        & (self.join[y] == self.join[z])
                        & ~cmp[y]
                        & ~cmp[z]
                    )
                    hits = np.nonzero(ok)[0]
                    if len(hits):
                        x = int(hits[0])
                        return (int(self.meet[x, y]), x, y, z, int(self.join[x, y]))
            return None
        if shape == "M3":
            # A diamond exists iff three pairwise-incomparable elements share
            # all pairwise meets and all pairwise joins.
            for x in range(n):
                for y in range(x + 1, n):
                    if cmp[x, y]:
                        continue
                    m, j = self.meet[x, y], self.join[x, y]
                    ok = (
                        (self.meet[x] == m)
                        & (self.meet[y] == m)
                        & (self.join[x] == j)
                        & (self.join[y] == j)
                        & ~cmp[x]
                        & ~cmp[y]
                    )
                    ok[: y + 1] = False
                    hits = np.nonzero(ok)[0]
                    if len(hits):
                        return (int(m), x, y, int(hits[0]), int(j))
            return None
        raise ValueError(f"unknown sublattice shape {shape!r}")

    def is_join_semidistributive(self) -> bool:
        """x v y = x v z implies x v y = x v (y ^ z), over all triples."""
        for x in range(self.n):
            jx = self.join[x]
            same = jx[:, None] == jx[None, :]
            collapsed = jx[self.meet]
            if (same & (collapsed != jx[:, None])).any():
                return False
        return True

    def is_meet_semidistributive(self) -> bool:
        return self.dual().is_join_semidistributive()

    def is_semidistributive(self) -> bool:
        return self.is_join_semidistributive() and self.is_meet_semidistributive()


def _minimal_of(leq: np.ndarray, mask: np.ndarray) -> tuple[int, ...]:
    idx = np.nonzero(mask)[0]
    return tuple(int(i) for i in idx if not any(leq[j, i] for j in idx if j != i))


def _maximal_of(leq: np.ndarray, mask: np.ndarray) -> tuple[int, ...]:
    idx = np.nonzero(mask)[0]
    return tuple(int(i) for i in idx if not any(leq[i, j] for j in idx if j != i))
