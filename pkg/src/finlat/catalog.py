"""A small zoo of named lattices used in tests, demos, and the data files."""

from __future__ import annotations

from .lattice import Lattice, try_lattice
from .poset import Poset

# 14-element distributive lattice with six join-irreducibles whose canonical
# join complex contains a triangle; ships as data/distributive14.poset.
DISTRIBUTIVE14_COVERS = (
    (0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 6),
    (3, 7), (4, 6), (4, 8), (5, 7), (5, 8), (6, 9), (7, 9),
    (8, 9), (8, 10), (9, 11), (9, 12), (10, 12), (11, 13), (12, 13),
)

# pentagon: bottom 0, side chain 1 < 3, lone side 2, top 4
N5_COVERS = ((0, 1), (0, 2), (1, 3), (2, 4), (3, 4))

# diamond: bottom 0, three atoms, top 4
M3_COVERS = ((0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4))


def distributive14() -> Lattice:
    """The 14-element distributive example with 21 covers."""
    return try_lattice(Poset.from_covers(14, DISTRIBUTIVE14_COVERS))


def n5() -> Lattice:
    """The pentagon, smallest non-modular lattice."""
    return try_lattice(Poset.from_covers(5, N5_COVERS))


def m3() -> Lattice:
    """The diamond, smallest modular non-distributive lattice."""
    return try_lattice(Poset.from_covers(5, M3_COVERS))
