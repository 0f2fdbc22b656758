"""Lattice congruences and the congruence-uniformity test.

A congruence is stored as a canonical block labeling: labels[i] is the block
id of element i, with blocks numbered by first occurrence so that equal
partitions compare equal as tuples.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import SizeLimit
from .lattice import Lattice
from .poset import Poset

DEFAULT_CONGRUENCE_LIMIT = 1 << 16


class Congruence:
    """A partition of a lattice's ground set closed under translations."""

    __slots__ = ("labels", "_blocks")

    def __init__(self, labels):
        self.labels = _canonical(tuple(labels))
        self._blocks = None

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def num_blocks(self) -> int:
        return max(self.labels) + 1

    def blocks(self) -> tuple[frozenset[int], ...]:
        if self._blocks is None:
            out = [set() for _ in range(self.num_blocks)]
            for i, b in enumerate(self.labels):
                out[b].add(i)
            self._blocks = tuple(frozenset(b) for b in out)
        return self._blocks

    def together(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]

    def refines(self, other: "Congruence") -> bool:
        """True iff every block of self lies inside a block of other."""
        seen: dict[int, int] = {}
        for mine, theirs in zip(self.labels, other.labels):
            if seen.setdefault(mine, theirs) != theirs:
                return False
        return True

    def is_discrete(self) -> bool:
        return self.num_blocks == self.n

    def is_full(self) -> bool:
        return self.num_blocks == 1

    def __eq__(self, other):
        return isinstance(other, Congruence) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"Congruence({self.blocks()})"


def _canonical(labels: tuple[int, ...]) -> tuple[int, ...]:
    remap: dict[int, int] = {}
    return tuple(remap.setdefault(b, len(remap)) for b in labels)


def is_congruence(lat: Lattice, labels) -> bool:
    """Check the two translation closure rules for an arbitrary partition."""
    labels = tuple(labels)
    n = lat.n
    for x in range(n):
        for y in range(x + 1, n):
            if labels[x] != labels[y]:
                continue
            for z in range(n):
                if labels[lat.meet[x, z]] != labels[lat.meet[y, z]]:
                    return False
                if labels[lat.join[x, z]] != labels[lat.join[y, z]]:
                    return False
    return True


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def _congruence_closure(lat: Lattice, seeds) -> Congruence:
    """Smallest congruence merging every seed pair.

    Fixpoint over a worklist: whenever two classes merge, their meet and
    join translates by every element are merged as well.
    """
    n = lat.n
    uf = _UnionFind(n)
    pending: deque[tuple[int, int]] = deque()
    for a, b in seeds:
        if uf.union(a, b):
            pending.append((a, b))
    meet, join = lat.meet, lat.join
    while pending:
        x, y = pending.popleft()
        for row in (meet, join):
            rx, ry = row[x], row[y]
            for z in range(n):
                a, b = int(rx[z]), int(ry[z])
                if uf.union(a, b):
                    pending.append((a, b))
    return Congruence(uf.find(i) for i in range(n))


def principal_congruence(lat: Lattice, a: int, b: int) -> Congruence:
    """The smallest congruence identifying a and b (any pair, not just covers)."""
    return _congruence_closure(lat, [(a, b)])


def join_congruences(lat: Lattice, first: Congruence, second: Congruence) -> Congruence:
    """Join in the congruence order: union the partitions, then re-close."""
    seeds = []
    for cong in (first, second):
        for block in cong.blocks():
            members = sorted(block)
            seeds.extend((members[0], m) for m in members[1:])
    return _congruence_closure(lat, seeds)


@dataclass(frozen=True)
class CongruenceFamily:
    """All congruences of a lattice with their refinement order.

    congruences are sorted coarsest-last (more blocks first), a linear
    extension of refinement; refinement is the poset with i <= j iff
    congruences[i] refines congruences[j].
    """

    congruences: tuple[Congruence, ...]
    refinement: Poset

    @cached_property
    def join_irreducible_indices(self) -> frozenset[int]:
        """Indices of congruences with exactly one lower cover in refinement."""
        return frozenset(
            i
            for i in range(self.refinement.n)
            if len(self.refinement.lower_covers(i)) == 1
        )

    def index_of(self, cong: Congruence) -> int:
        return self._index[cong.labels]

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {c.labels: i for i, c in enumerate(self.congruences)}


def congruence_family(
    lat: Lattice, limit: int = DEFAULT_CONGRUENCE_LIMIT
) -> CongruenceFamily:
    """Compute Con(L) as the join closure of the principal cover congruences.

    Every congruence of a finite lattice is a join of principal congruences
    of covers, so breadth-first joining against the (deduplicated) cover
    principals reaches everything.  Raises SizeLimit beyond the cap.
    """
    generators: list[Congruence] = []
    seen_gen: set[tuple[int, ...]] = set()
    for a, b in lat.covers:
        cong = principal_congruence(lat, a, b)
        if cong.labels not in seen_gen:
            seen_gen.add(cong.labels)
            generators.append(cong)

    discrete = Congruence(range(lat.n))
    found: dict[tuple[int, ...], Congruence] = {discrete.labels: discrete}
    frontier = deque([discrete])
    while frontier:
        current = frontier.popleft()
        for gen in generators:
            joined = join_congruences(lat, current, gen)
            if joined.labels not in found:
                if len(found) >= limit:
                    raise SizeLimit(f"more than {limit} congruences")
                found[joined.labels] = joined
                frontier.append(joined)

    ordered = sorted(found.values(), key=lambda c: (-c.num_blocks, c.labels))
    m = len(ordered)
    leq = [[ordered[i].refines(ordered[j]) for j in range(m)] for i in range(m)]
    return CongruenceFamily(tuple(ordered), Poset(leq))


def all_congruences(
    lat: Lattice, limit: int = DEFAULT_CONGRUENCE_LIMIT
) -> list[Congruence]:
    """Every congruence of the lattice, sorted along the refinement order."""
    return list(congruence_family(lat, limit).congruences)


@dataclass(frozen=True)
class UniformityCertificate:
    """Outcome of the congruence-uniformity test; falsy when not uniform."""

    uniform: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.uniform


def is_congruence_uniform(
    lat: Lattice, limit: int = DEFAULT_CONGRUENCE_LIMIT
) -> UniformityCertificate:
    """Test congruence uniformity by the two bijection conditions.

    The lattice side sends each join-irreducible j to the principal
    congruence of (lower cover of j, j); the dual side sends each
    meet-irreducible m to the principal congruence of (m, upper cover of m).
    Both maps must be bijections onto the join-irreducible congruences.
    The congruences of the dual lattice are the same partitions, so one
    congruence family serves both directions.
    """
    family = congruence_family(lat, limit)
    targets = family.join_irreducible_indices

    sides = (
        ("join-irreducible", sorted(lat.join_irreducibles), lat.irreducible_lower_cover),
        ("meet-irreducible", sorted(lat.meet_irreducibles), lat.irreducible_upper_cover),
    )
    for side, elements, partner in sides:
        image: dict[int, int] = {}
        for j in elements:
            cong = principal_congruence(lat, partner[j], j)
            idx = family.index_of(cong)
            if idx not in targets:
                return UniformityCertificate(
                    False,
                    f"{side} {j}: its principal cover congruence is not "
                    f"join-irreducible in the congruence order",
                )
            if idx in image:
                return UniformityCertificate(
                    False,
                    f"{side} elements {image[idx]} and {j} collapse to the "
                    f"same congruence",
                )
            image[idx] = j
        if set(image) != targets:
            return UniformityCertificate(
                False,
                f"only {len(image)} of {len(targets)} join-irreducible "
                f"congruences are reached from the {side} side",
            )
    return UniformityCertificate(True)
