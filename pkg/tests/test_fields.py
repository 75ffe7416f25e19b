import pytest

from catalanok.errors import NotClassNumberOne
from catalanok.fields import (
    CLASS_NUMBER_ONE_RADICANDS,
    OmegaKind,
    all_fields,
    field_spec,
    units,
)
from catalanok.quadint import QuadInt, one


def reduced_form_count(disc: int) -> int:
    """Brute-force class number of a negative discriminant: count reduced
    positive binary quadratic forms ax^2 + bxy + cy^2 of that discriminant."""
    count = 0
    a = 1
    while 4 * a * a <= -disc + a * a:  # |b| <= a <= c forces 3a^2 <= -disc
        for b in range(-a, a + 1):
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (a == -b or a == c):
                continue  # reduced forms take b >= 0 on the boundary
            count += 1
        a += 1
    return count


def test_nine_radicands_accepted():
    for d in CLASS_NUMBER_ONE_RADICANDS:
        f = field_spec(d)
        assert f.d == d
        assert reduced_form_count(f.disc) == 1


def test_discriminant_rule():
    assert field_spec(-1).disc == -4
    assert field_spec(-2).disc == -8
    for d in (-3, -7, -11, -19, -43, -67, -163):
        assert field_spec(d).disc == d


def test_basis_flag_matches_mod_four():
    assert field_spec(-1).omega_kind is OmegaKind.SQRT_D
    assert field_spec(-2).omega_kind is OmegaKind.SQRT_D
    assert field_spec(-11).omega_kind is OmegaKind.HALF_INTEGER


def test_d_minus_five_rejected_class_number_two():
    # Oracle: Q(sqrt(-5)) has discriminant -20 and exactly two reduced forms.
    assert reduced_form_count(-20) == 2
    with pytest.raises(NotClassNumberOne):
        field_spec(-5)


@pytest.mark.parametrize("d", [0, 1, 2, 5, -4, -6, -12, -15, -164])
def test_other_radicands_rejected(d):
    with pytest.raises(NotClassNumberOne):
        field_spec(d)


def test_unit_group_sizes():
    assert len(units(field_spec(-1))) == 4
    assert len(units(field_spec(-3))) == 6
    for d in (-2, -7, -11, -19, -43, -67, -163):
        assert len(units(field_spec(d))) == 2


def test_units_of_gaussian_field():
    f = field_spec(-1)
    expected = {
        QuadInt(f, 1, 0), QuadInt(f, -1, 0), QuadInt(f, 0, 1), QuadInt(f, 0, -1)
    }
    assert set(units(f)) == expected


def test_units_norm_one_and_torsion():
    for f in all_fields():
        group = units(f)
        assert len(set(group)) == len(group)
        order = len(group)
        for u in group:
            assert u.norm() == 1
            assert u**order == one(f)


def test_plus_minus_one_always_present():
    for f in all_fields():
        elems = set(units(f))
        assert QuadInt(f, 1, 0) in elems
        assert QuadInt(f, -1, 0) in elems
