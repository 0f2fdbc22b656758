"""Finite partially ordered sets on dense integer indices.

Elements of an n-element poset are the indices 0..n-1, always numbered by
a linear extension: a covered element has a smaller index than the element
covering it.  This keeps every upward sweep a single forward pass and makes
tables cache friendly.
"""

from __future__ import annotations

from functools import cached_property
from collections.abc import Iterable

import numpy as np

from .errors import CycleError, RangeError


def _closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean relation matrix."""
    out = rel | np.eye(len(rel), dtype=bool)
    while True:
        nxt = out | (out @ out)
        if (nxt == out).all():
            return nxt
        out = nxt


def _reduction(leq: np.ndarray) -> np.ndarray:
    """Cover relation (transitive reduction) of a partial order matrix."""
    lt = leq & ~np.eye(len(leq), dtype=bool)
    return lt & ~(lt @ lt)


def _toposort(leq: np.ndarray) -> list[int]:
    """Deterministic linear extension: repeatedly take the smallest minimal index."""
    n = len(leq)
    lt = leq & ~np.eye(n, dtype=bool)
    remaining = list(range(n))
    out = []
    while remaining:
        pick = next(i for i in remaining if not any(lt[j, i] for j in remaining))
        remaining.remove(pick)
        out.append(pick)
    return out


class Poset:
    """An immutable finite poset.

    Attributes:
        n: number of elements.
        leq: read-only n x n boolean matrix, leq[a, b] iff a <= b.

    Instances are safe to share between threads; all methods are pure.
    """

    def __init__(self, leq: np.ndarray):
        leq = np.asarray(leq, dtype=bool)
        n = leq.shape[0]
        if leq.shape != (n, n):
            raise ValueError(f"leq must be square, got {leq.shape}")
        leq = leq.copy()
        leq.flags.writeable = False
        self.n = int(n)
        self.leq = leq

    # -- construction ------------------------------------------------------

    @classmethod
    def from_covers(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Build a poset as the reflexive-transitive closure of the given pairs.

        Input pairs that turn out to be transitively implied are dropped
        silently; the stored cover list is always the transitive reduction.
        If the indices do not already form a linear extension the elements
        are relabeled along a deterministic topological order.

        Raises RangeError for out-of-range indices and CycleError when the
        closure would violate antisymmetry.
        """
        rel = np.zeros((n, n), dtype=bool)
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise RangeError(f"cover ({a}, {b}) out of range for n={n}")
            if a == b:
                continue  # reflexive pair, silently reduced away
            rel[a, b] = True
        leq = _closure(rel)
        sym = leq & leq.T & ~np.eye(n, dtype=bool)
        if sym.any():
            a, b = map(int, np.argwhere(sym)[0])
            raise CycleError(f"elements {a} and {b} lie on a cycle")
        return cls._from_leq(leq)

    @classmethod
    def _from_leq(cls, leq: np.ndarray) -> "Poset":
        """Wrap a valid partial-order matrix, relabeling to a linear extension."""
        red = _reduction(leq)
        if np.argwhere(red).size and not all(a < b for a, b in np.argwhere(red)):
            order = _toposort(leq)
            perm = np.empty(len(leq), dtype=int)
            for new, old in enumerate(order):
                perm[old] = new
            relabeled = np.zeros_like(leq)
            idx = np.arange(len(leq))
            relabeled[np.ix_(perm[idx], perm[idx])] = leq
            leq = relabeled
        return cls(leq)

    # -- basic views -------------------------------------------------------

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """All cover pairs (a, b) with a covered by b, lexicographically sorted."""
        red = _reduction(self.leq)
        return tuple((int(a), int(b)) for a, b in np.argwhere(red))

    @cached_property
    def _lower_covers(self) -> tuple[tuple[int, ...], ...]:
        lows = [[] for _ in range(self.n)]
        for a, b in self.covers:
            lows[b].append(a)
        return tuple(tuple(l) for l in lows)

    @cached_property
    def _upper_covers(self) -> tuple[tuple[int, ...], ...]:
        ups = [[] for _ in range(self.n)]
        for a, b in self.covers:
            ups[a].append(b)
        return tuple(tuple(u) for u in ups)

    def lower_covers(self, x: int) -> tuple[int, ...]:
        return self._lower_covers[x]

    def upper_covers(self, x: int) -> tuple[int, ...]:
        return self._upper_covers[x]

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if not self._lower_covers[i])

    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if not self._upper_covers[i])

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.n == other.n
            and bool((self.leq == other.leq).all())
        )

    def __hash__(self):
        return hash(self.leq.tobytes())

    def __repr__(self):
        return f"Poset(n={self.n}, covers={list(self.covers)})"

    # -- order-theoretic operations ----------------------------------------

    def dual(self) -> "Poset":
        """The order-reversed poset; element i becomes n-1-i.

        The index flip keeps the linear-extension invariant and makes
        dual() an involution: p.dual().dual() == p exactly.
        """
        flipped = self.leq.T[::-1, ::-1]
        return Poset(flipped)

    def ideal_generated(self, members: Iterable[int]) -> frozenset[int]:
        """Downward closure {y : y <= x for some x in members}."""
        members = list(members)
        if not members:
            return frozenset()
        mask = self.leq[:, members].any(axis=1)
        return frozenset(int(i) for i in np.nonzero(mask)[0])

    def filter_generated(self, members: Iterable[int]) -> frozenset[int]:
        """Upward closure {y : y >= x for some x in members}."""
        members = list(members)
        if not members:
            return frozenset()
        mask = self.leq[members, :].any(axis=0)
        return frozenset(int(i) for i in np.nonzero(mask)[0])

    def all_order_ideals(self) -> list[frozenset[int]]:
        """Every downward-closed subset, one DFS branch per ideal.

        Walks the linear extension and includes element i only when all of
        its lower covers are already included, so work is linear per ideal
        even though the output can be exponential.
        """
        out: list[frozenset[int]] = []
        current: set[int] = set()

        def walk(i: int) -> None:
            if i == self.n:
                out.append(frozenset(current))
                return
            walk(i + 1)
            if all(c in current for c in self._lower_covers[i]):
                current.add(i)
                walk(i + 1)
                current.remove(i)

        walk(0)
        return out

    def subposet(self, elements: Iterable[int]) -> "Poset":
        """Induced subposet; elements are taken in ascending index order."""
        elems = sorted(set(elements))
        return Poset(self.leq[np.ix_(elems, elems)])

    # -- semilattice checks (used for core-label-order shapes) --------------

    def has_all_glbs(self) -> bool:
        """True iff every pair of elements has a greatest lower bound."""
        for i in range(self.n):
            for j in range(i + 1, self.n):
                commons = self.leq[:, i] & self.leq[:, j]
                idx = np.nonzero(commons)[0]
                if len(idx) == 0:
                    return False
                top = idx[-1]  # max index is maximal among the common bounds
                if (commons & ~self.leq[:, top]).any():
                    return False
        return True

    def has_all_lubs(self) -> bool:
        return self.dual().has_all_glbs()

    # -- isomorphism ---------------------------------------------------------

    @cached_property
    def _iso_signature(self) -> tuple[tuple, ...]:
        """Per-element invariants refined through the cover structure."""
        n = self.n
        down = self.leq.sum(axis=0)
        up = self.leq.sum(axis=1)
        sig: list[tuple] = [
            (
                int(down[i]),
                int(up[i]),
                len(self._lower_covers[i]),
                len(self._upper_covers[i]),
            )
            for i in range(n)
        ]
        for _ in range(3):
            sig = [
                (
                    sig[i],
                    tuple(sorted(sig[c] for c in self._lower_covers[i])),
                    tuple(sorted(sig[c] for c in self._upper_covers[i])),
                )
                for i in range(n)
            ]
        return tuple(sig)

    def isomorphism_to(self, other: "Poset") -> list[int] | None:
        """An order isomorphism onto ``other`` as a list f with f[a] in other.

        Deterministic: elements are matched in index order, candidates tried
        lowest index first.  Returns None when no isomorphism exists.
        """
        if self.n != other.n:
            return None
        sa, sb = self._iso_signature, other._iso_signature
        if sorted(sa) != sorted(sb):
            return None
        n = self.n
        candidates = [[j for j in range(n) if sb[j] == sa[i]] for i in range(n)]
        mapping: list[int] = []
        used = [False] * n
        la, lb = self.leq, other.leq

        def extend(i: int) -> bool:
            if i == n:
                return True
            for j in candidates[i]:
                if used[j]:
                    continue
                if all(
                    la[k, i] == lb[mapping[k], j] and la[i, k] == lb[j, mapping[k]]
                    for k in range(i)
                ):
                    mapping.append(j)
                    used[j] = True
                    if extend(i + 1):
                        return True
                    used[j] = False
                    mapping.pop()
            return False

        return list(mapping) if extend(0) else None
