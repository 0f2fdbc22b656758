"""Exception types shared across the package."""


class LatticeError(Exception):
    """Base class for all structural errors raised by this package."""


class RangeError(LatticeError):
    """An element index is outside the ground set."""


class CycleError(LatticeError):
    """A cover list whose closure violates antisymmetry."""


class NotALattice(LatticeError):
    """A poset pair with no unique meet or join.

    Attributes:
        x, y: the offending pair.
        witnesses: the minimal common upper bounds (or maximal common lower
            bounds) that prevent uniqueness; empty when no bound exists.
    """

    def __init__(self, x, y, witnesses, kind="join"):
        self.x = x
        self.y = y
        self.witnesses = tuple(witnesses)
        self.kind = kind
        super().__init__(
            f"no unique {kind} for ({x}, {y}); candidates {self.witnesses}"
        )


class NotComparable(LatticeError):
    """Interval endpoints that do not satisfy a <= b."""


class NotACover(LatticeError):
    """A pair passed as a cover relation that is not one."""


class NotDistributive(LatticeError):
    """An operation that requires distributivity met a violation."""


class GammaNotFound(LatticeError):
    """No join-irreducible is perspective to the given cover."""


class GammaNotUnique(LatticeError):
    """Several join-irreducibles are perspective to the given cover."""


class ClosureViolation(LatticeError):
    """The family of canonical join representations is not subset-closed."""


class PsiNotInjective(LatticeError):
    """Two elements share the same core label set."""


class SizeLimit(LatticeError):
    """A configured enumeration cap was exceeded."""


class InvalidStep(LatticeError):
    """A doubling script step does not fit the current poset."""


class NotCongruenceUniform(LatticeError):
    """An input lattice failed the congruence-uniformity gate."""


class ParseError(LatticeError):
    """A malformed input file.

    Attributes:
        line: 1-based line number of the offending line, or None.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
