"""The nine imaginary quadratic fields of class number one.

A field is fixed by its squarefree radicand d < 0.  Elements are written
a + b*w over the integral basis {1, w}, where w = sqrt(d) when d is 2 or 3
mod 4, and w = (1 + sqrt(d))/2 when d is 1 mod 4.  In both cases w satisfies
a monic quadratic w^2 = trace*w - wnorm with integer trace and wnorm, so all
ring arithmetic stays in plain integers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotClassNumberOne

CLASS_NUMBER_ONE_RADICANDS = (-1, -2, -3, -7, -11, -19, -43, -67, -163)


class OmegaKind(enum.Enum):
    SQRT_D = "sqrt_d"          # basis {1, sqrt(d)}
    HALF_INTEGER = "half"      # basis {1, (1 + sqrt(d))/2}


@dataclass(frozen=True)
class FieldSpec:
    """One of the nine admissible fields: radicand, discriminant, basis flag."""

    d: int
    disc: int
    omega_kind: OmegaKind

    @property
    def omega_trace(self) -> int:
        return 0 if self.omega_kind is OmegaKind.SQRT_D else 1

    @property
    def omega_norm(self) -> int:
        if self.omega_kind is OmegaKind.SQRT_D:
            return -self.d
        return (1 - self.d) // 4

    @property
    def omega_re(self) -> Fraction:
        return Fraction(self.omega_trace, 2)

    @property
    def omega_im_sq(self) -> Fraction:
        """Square of Im(w): |d| for the sqrt basis, |d|/4 for the half basis."""
        if self.omega_kind is OmegaKind.SQRT_D:
            return Fraction(-self.d)
        return Fraction(-self.d, 4)

    def __repr__(self) -> str:
        return f"Q(sqrt({self.d}))"


def field_spec(d: int) -> FieldSpec:
    """FieldSpec for radicand d, or NotClassNumberOne for any other d."""
    if d not in CLASS_NUMBER_ONE_RADICANDS:
        raise NotClassNumberOne(
            f"d={d} is not a class-number-one imaginary radicand "
            f"{CLASS_NUMBER_ONE_RADICANDS}"
        )
    if d % 4 == 1:
        return FieldSpec(d=d, disc=d, omega_kind=OmegaKind.HALF_INTEGER)
    return FieldSpec(d=d, disc=4 * d, omega_kind=OmegaKind.SQRT_D)


def all_fields() -> tuple[FieldSpec, ...]:
    return tuple(field_spec(d) for d in CLASS_NUMBER_ONE_RADICANDS)


@dataclass(frozen=True)
class UnitGroup:
    """The full (finite) unit group of O_K."""

    elements: tuple  # tuple of QuadInt

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def units(field: FieldSpec) -> UnitGroup:
    """All units of O_K: 4 for d=-1, 6 for d=-3, the pair {1,-1} otherwise."""
    from .quadint import QuadInt

    one = QuadInt(field, 1, 0)
    elems = [one, -one]
    if field.d == -1:
        i = QuadInt(field, 0, 1)
        elems += [i, -i]
    elif field.d == -3:
        # w = (1+sqrt(-3))/2 is a primitive sixth root of unity.
        w = QuadInt(field, 0, 1)
        elems += [w, -w, w * w, -(w * w)]
    return UnitGroup(tuple(elems))
