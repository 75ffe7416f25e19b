"""Exception types shared across the package."""


class CatalanokError(Exception):
    """Base class for all package-specific errors."""


class NotClassNumberOne(CatalanokError):
    """Radicand is not one of the nine class-number-one imaginary fields."""


class FieldMismatch(CatalanokError):
    """Operands belong to different quadratic fields."""


class ZeroDivisor(CatalanokError):
    """Division by the zero element."""


class ZeroIdeal(CatalanokError):
    """The zero ideal has no Hermite normal form here."""


class NotPrime(CatalanokError):
    """A rational prime was required."""


class DegenerateInput(CatalanokError):
    """Input collapses the expression (e.g. x -+ 1 = 0 in a gcd quotient)."""


class NotASolution(CatalanokError):
    """The pair (x, y) does not satisfy x^p - y^q = 1 exactly."""


class AbsTooSmall(CatalanokError):
    """The base element has absolute value below the required threshold."""


class NotInUnitDisk(CatalanokError):
    """|z| < 1 could not be certified."""


class Inconclusive(CatalanokError):
    """Interval enclosures too wide to decide; retry at higher precision."""


class DivisionByIntervalContainingZero(CatalanokError):
    """Interval division where the divisor encloses zero."""


class NegativeRadicand(CatalanokError):
    """Real root of an interval with negative lower bound."""
