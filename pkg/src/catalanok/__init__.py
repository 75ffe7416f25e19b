"""catalanok: exact and certified checks for x^p - y^q = 1 over the nine
imaginary quadratic rings of integers with class number one."""

from .analytic import (
    ExponentScan,
    TailBounds,
    Theorem1Result,
    Theorem3Bound,
    tail_bounds,
    tails_grid,
    theorem1_epsilon,
    theorem1_epsilon_auto,
    theorem3_bound,
    theorem3_exponent_scan,
)
from .criteria import (
    CasselsReport,
    Lemma2Report,
    cassels_check,
    is_perfect_qth_power,
    lemma2_verify,
    lemma4_gcd,
    remark1_witness,
    theorem2_case,
)
from .errors import (
    AbsTooSmall,
    CatalanokError,
    DegenerateInput,
    FieldMismatch,
    Inconclusive,
    NotASolution,
    NotClassNumberOne,
    NotInUnitDisk,
    NotPrime,
    ZeroDivisor,
    ZeroIdeal,
)
from .fields import (
    CLASS_NUMBER_ONE_RADICANDS,
    FieldSpec,
    UnitGroup,
    all_fields,
    field_spec,
    units,
)
from .ideals import (
    Ideal,
    SplitType,
    contains,
    ideal_norm,
    ideal_product,
    ideal_sum,
    primes_above,
    principal_ideal,
    split_type,
    unit_ideal,
)
from .intervals import ComplexInterval, Interval, complexify
from .quadint import QuadInt, divides, elements_of_norm, parse_quadint
from .search import (
    SearchReport,
    enumerate_by_norm,
    search_catalan,
    search_equal_exponent,
    theorem1_sweep,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
