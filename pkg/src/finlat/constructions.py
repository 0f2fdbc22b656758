"""Builders: chains, Boolean lattices, ideal lattices, doubling, enumeration."""

from __future__ import annotations

import random
from dataclasses import dataclass
from collections.abc import Iterable, Iterator

import numpy as np

from .errors import InvalidStep, SizeLimit
from .lattice import Lattice, try_lattice
from .poset import Poset

Step = tuple  # ("interval", a, b) | ("filter", a) | ("set", frozenset)


def chain(n: int) -> Lattice:
    """The n-element chain 0 < 1 < ... < n-1."""
    if n < 1:
        raise ValueError("a chain needs at least one element")
    return try_lattice(Poset.from_covers(n, [(i, i + 1) for i in range(n - 1)]))


def antichain(n: int) -> Poset:
    """n pairwise-incomparable elements."""
    return Poset.from_covers(n, [])


def boolean_lattice(k: int) -> Lattice:
    """The lattice of subsets of a k-element set, indexed by (size, value)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    subsets = sorted(range(1 << k), key=lambda s: (bin(s).count("1"), s))
    index = {s: i for i, s in enumerate(subsets)}
    covers = []
    for s in range(1 << k):
        for bit in range(k):
            if not s & (1 << bit):
                covers.append((index[s], index[s | (1 << bit)]))
    return try_lattice(Poset.from_covers(1 << k, covers))


# -- doubling -----------------------------------------------------------------


def double(poset: Poset, members: Iterable[int]) -> Poset:
    """Double the subset X: replace it by X x {0,1} inside the product with 2.

    The new ground set is (ideal of X) tagged 0 together with
    ((complement of the ideal) union X) tagged 1, ordered by the product
    order.  The element count is always |ideal| + |complement| + |X|.
    """
    members = set(members)
    for x in members:
        if not (0 <= x < poset.n):
            raise InvalidStep(f"element {x} outside poset of size {poset.n}")
    below = poset.ideal_generated(members)
    lower = sorted(below)
    upper = sorted((set(range(poset.n)) - below) | members)
    elems = [(e, 0) for e in lower] + [(e, 1) for e in upper]
    m = len(elems)
    leq = np.zeros((m, m), dtype=bool)
    for i, (a, ta) in enumerate(elems):
        for j, (b, tb) in enumerate(elems):
            leq[i, j] = poset.leq[a, b] and ta <= tb
    return Poset(leq)


@dataclass(frozen=True)
class ScriptResult:
    """A lattice built by a doubling script, with provenance flags.

    The flags record whether every doubled subset was an interval or a
    principal order filter of the poset existing at that step; they are
    checked semantically, so a ("set", ...) step that happens to be a
    filter still counts.
    """

    lattice: Lattice
    all_intervals: bool
    all_principal_filters: bool


def _resolve_step(poset: Poset, step: Step) -> set[int]:
    kind = step[0]
    if kind == "interval":
        _, a, b = step
        if not (0 <= a < poset.n and 0 <= b < poset.n):
            raise InvalidStep(f"interval ({a}, {b}) out of range")
        if not poset.leq[a, b]:
            raise InvalidStep(f"interval endpoints {a} and {b} are not comparable")
        return {z for z in range(poset.n) if poset.leq[a, z] and poset.leq[z, b]}
    if kind == "filter":
        _, a = step
        if not 0 <= a < poset.n:
            raise InvalidStep(f"filter root {a} out of range")
        return set(poset.filter_generated([a]))
    if kind == "set":
        members = set(step[1])
        for x in members:
            if not 0 <= x < poset.n:
                raise InvalidStep(f"element {x} out of range")
        return members
    raise InvalidStep(f"unknown step kind {kind!r}")


def _is_interval(poset: Poset, members: set[int]) -> bool:
    if not members:
        return False
    mins = [x for x in members if not any(poset.leq[y, x] for y in members if y != x)]
    maxs = [x for x in members if not any(poset.leq[x, y] for y in members if y != x)]
    if len(mins) != 1 or len(maxs) != 1:
        return False
    a, b = mins[0], maxs[0]
    return members == {
        z for z in range(poset.n) if poset.leq[a, z] and poset.leq[z, b]
    }


def _is_principal_filter(poset: Poset, members: set[int]) -> bool:
    if not members:
        return False
    mins = [x for x in members if not any(poset.leq[y, x] for y in members if y != x)]
    return len(mins) == 1 and members == set(poset.filter_generated([mins[0]]))


def build_from_script(steps: Iterable[Step]) -> ScriptResult:
    """Fold doublings over the singleton poset and record provenance flags."""
    poset = Poset.from_covers(1, [])
    all_intervals = True
    all_filters = True
    for step in steps:
        members = _resolve_step(poset, step)
        all_intervals = all_intervals and _is_interval(poset, members)
        all_filters = all_filters and _is_principal_filter(poset, members)
        poset = double(poset, members)
    return ScriptResult(try_lattice(poset), all_intervals, all_filters)


def random_interval_script(rng: random.Random, length: int) -> list[Step]:
    """A random doubling script whose steps are all intervals."""
    poset = Poset.from_covers(1, [])
    steps: list[Step] = []
    for _ in range(length):
        pairs = [
            (a, b)
            for a in range(poset.n)
            for b in range(poset.n)
            if poset.leq[a, b]
        ]
        a, b = pairs[rng.randrange(len(pairs))]
        steps.append(("interval", a, b))
        poset = double(poset, _resolve_step(poset, steps[-1]))
    return steps


def random_filter_script(rng: random.Random, length: int) -> list[Step]:
    """A random doubling script whose steps are all principal filters."""
    poset = Poset.from_covers(1, [])
    steps: list[Step] = []
    for _ in range(length):
        steps.append(("filter", rng.randrange(poset.n)))
        poset = double(poset, _resolve_step(poset, steps[-1]))
    return steps


# -- Birkhoff-style representation ---------------------------------------------


def ideal_lattice(poset: Poset) -> Lattice:
    """The lattice of all order ideals of a poset, ordered by containment.

    Ideals are indexed by (size, sorted members); meet and join are checked
    to be intersection and union.
    """
    ideals = sorted(poset.all_order_ideals(), key=lambda s: (len(s), sorted(s)))
    m = len(ideals)
    leq = np.zeros((m, m), dtype=bool)
    for i in range(m):
        for j in range(m):
            leq[i, j] = ideals[i] <= ideals[j]
    lat = try_lattice(Poset(leq))
    for i in range(m):
        for j in range(m):
            assert ideals[lat.meet[i, j]] == ideals[i] & ideals[j]
            assert ideals[lat.join[i, j]] == ideals[i] | ideals[j]
    return lat


def irreducibles_below(lat: Lattice, x: int) -> frozenset[int]:
    """The join-irreducibles at or below x: the represented order ideal.

    For distributive lattices this map is a bijection onto the ideals of
    the poset of join-irreducibles; elsewhere it is merely monotone.
    """
    return frozenset(j for j in lat.join_irreducibles if lat.leq[j, x])


# -- exhaustive enumeration -----------------------------------------------------


def enumerate_lattices(n: int, size_cap: int = 8) -> Iterator[Lattice]:
    """All lattices with exactly n elements, one per isomorphism class.

    Backtracks over meet-table rows: element i is placed by choosing its
    meets with every earlier element, pruning with the partial associativity
    axioms, and the top element's row is forced.  Duplicates are filtered
    through an invariant-signature bucket plus explicit isomorphism tests.
    Deterministic emission order.
    """
    if n > size_cap:
        raise SizeLimit(f"enumeration of size {n} exceeds the cap {size_cap}")
    if n < 1:
        return

    meet = [[0] * n for _ in range(n)]
    for i in range(n):
        meet[i][i] = i
    seen: dict[tuple, list[Poset]] = {}

    def emit() -> Lattice | None:
        leq = np.zeros((n, n), dtype=bool)
        for a in range(n):
            for b in range(a, n):
                leq[a, b] = meet[a][b] == a
                leq[b, a] = meet[a][b] == b
        poset = Poset(leq)
        key = tuple(sorted(poset._iso_signature))
        bucket = seen.setdefault(key, [])
        if any(poset.isomorphism_to(q) is not None for q in bucket):
            return None
        bucket.append(poset)
        return try_lattice(poset)

    def rows(i: int) -> Iterator[Lattice]:
        if i == n - 1:
            for j in range(i):
                meet[i][j] = meet[j][i] = j  # the top row is forced
            result = emit()
            if result is not None:
                yield result
            return

        down_lists = [
            [v for v in range(j + 1) if meet[v][j] == v] for j in range(i)
        ]

        def fill(j: int) -> Iterator[Lattice]:
            if j == i:
                yield from rows(i + 1)
                return
            for v in down_lists[j]:
                ok = True
                for k in range(j):
                    want = meet[i][meet[j][k]]
                    if meet[v][k] != want or meet[meet[i][k]][j] != want:
                        ok = False
                        break
                if ok:
                    meet[i][j] = meet[j][i] = v
                    yield from fill(j + 1)
            meet[i][j] = meet[j][i] = 0

        yield from fill(0)

    if n == 1:
        yield try_lattice(Poset.from_covers(1, []))
        return
    yield from rows(1)


def principal_filter_closure(max_n: int) -> dict[int, list[Lattice]]:
    """Isomorphism classes reachable by principal-filter doubling scripts.

    Memoized breadth-first search over classes, keyed by element count; used
    to confirm that exactly the distributive lattices are reached.
    """
    start = try_lattice(Poset.from_covers(1, []))
    by_size: dict[int, list[Lattice]] = {1: [start]}
    buckets: dict[tuple, list[Poset]] = {}

    def record(lat: Lattice) -> bool:
        key = tuple(sorted(lat.poset._iso_signature))
        bucket = buckets.setdefault(key, [])
        if any(lat.poset.isomorphism_to(q) is not None for q in bucket):
            return False
        bucket.append(lat.poset)
        by_size.setdefault(lat.n, []).append(lat)
        return True

    record(start)
    frontier = [start]
    while frontier:
        nxt = []
        for lat in frontier:
            for root in range(lat.n):
                members = _resolve_step(lat.poset, ("filter", root))
                if lat.n + len(members) > max_n:
                    continue
                grown = try_lattice(double(lat.poset, members))
                if record(grown):
                    nxt.append(grown)
        frontier = nxt
    return by_size
