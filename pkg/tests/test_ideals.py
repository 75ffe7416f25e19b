import random

import pytest

from catalanok.errors import FieldMismatch, NotPrime, ZeroIdeal
from catalanok.fields import all_fields, field_spec
from catalanok.ideals import (
    Ideal,
    _hnf_from_vectors,
    ideal_product,
    ideal_sum,
    principal_ideal,
    split_type,
    unit_ideal,
)
from catalanok.intmath import primes_upto
from catalanok.quadint import QuadInt, divides, from_int, omega

F1 = field_spec(-1)
F11 = field_spec(-11)


def test_principal_of_rational_integer():
    i = principal_ideal(from_int(F1, 2))
    assert (i.n, i.m, i.k) == (2, 0, 2)
    assert i.norm == 4


def test_principal_norm_examples():
    assert principal_ideal(QuadInt(F1, 1, 1)).norm == 2
    assert principal_ideal(omega(F11)).norm == 3


def test_principal_of_zero():
    with pytest.raises(ZeroIdeal):
        principal_ideal(QuadInt(F1, 0, 0))


def test_ideal_sum_examples():
    i = principal_ideal(QuadInt(F1, 3, 2))
    assert ideal_sum(i, unit_ideal(F1)) == unit_ideal(F1)
    two = principal_ideal(from_int(F1, 2))
    three = principal_ideal(from_int(F1, 3))
    assert ideal_sum(two, three) == unit_ideal(F1)
    one_plus_i = principal_ideal(QuadInt(F1, 1, 1))
    assert ideal_sum(one_plus_i, two) == one_plus_i


def test_ideal_product_examples():
    i = principal_ideal(QuadInt(F1, 2, 3))
    assert ideal_product(i, unit_ideal(F1)) == i
    p1 = principal_ideal(QuadInt(F1, 2, 1))
    p2 = principal_ideal(QuadInt(F1, 2, -1))
    assert ideal_product(p1, p2) == principal_ideal(from_int(F1, 5))
    above2 = principal_ideal(QuadInt(F1, 1, 1))
    assert ideal_product(above2, above2) == principal_ideal(from_int(F1, 2))


def test_ideal_norm_examples():
    assert unit_ideal(F11).norm == 1
    st = split_type(F11, 3)
    assert all(p.norm == 3 for p in st.primes)


def test_contains_examples():
    i = principal_ideal(QuadInt(F1, 1, 1))
    assert i.contains(QuadInt(F1, 0, 0))
    assert i.contains(from_int(F1, 2))
    assert not principal_ideal(from_int(F1, 3)).contains(from_int(F1, 1))


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        ideal_sum(unit_ideal(F1), unit_ideal(F11))
    with pytest.raises(FieldMismatch):
        unit_ideal(F1).contains(from_int(F11, 1))


def test_split_type_examples():
    assert split_type(F11, 3).kind == "split"
    assert split_type(field_spec(-3), 3).kind == "ramified"
    # oracle for the inert case: x^2 + 1 has no root mod 3
    assert all((r * r + 1) % 3 for r in range(3))
    assert split_type(F1, 3).kind == "inert"


def test_split_type_requires_prime():
    with pytest.raises(NotPrime):
        split_type(F1, 6)


def test_where_three_splits():
    # Computed truth: 3 = (1 + sqrt(-2))(1 - sqrt(-2)) splits in d = -2 too.
    assert QuadInt(field_spec(-2), 1, 1).norm() == 3
    splits = {f.d for f in all_fields() if split_type(f, 3).kind == "split"}
    assert splits == {-2, -11}


@pytest.mark.parametrize("d", [f.d for f in all_fields()])
def test_split_invariants_all_primes_to_1000(d):
    f = field_spec(d)
    for p in primes_upto(1000):
        st = split_type(f, p)
        pid = principal_ideal(from_int(f, p))
        if st.kind == "split":
            p1, p2 = st.primes
            assert p1 != p2
            assert p1.norm == p2.norm == p
            assert ideal_product(p1, p2) == pid
        elif st.kind == "inert":
            (q,) = st.primes
            assert q.norm == p * p
            assert q == pid
        else:
            (q,) = st.primes
            assert q.norm == p
            assert ideal_product(q, q) == pid
            assert f.disc % p == 0


def _random_element(rng, f, coord=60):
    while True:
        x = QuadInt(f, rng.randint(-coord, coord), rng.randint(-coord, coord))
        if not x.is_zero():
            return x


def test_hnf_unique_under_generator_shuffle():
    rng = random.Random(42)
    for _ in range(300):
        f = field_spec(rng.choice([-1, -2, -3, -7, -11, -19, -43, -67, -163]))
        x = _random_element(rng, f)
        y = _random_element(rng, f)
        i = ideal_sum(principal_ideal(x), principal_ideal(y))
        gens = [(x.a, x.b)]
        t, nw = f.omega_trace, f.omega_norm
        for g in (x, y):
            gens.append((-nw * g.b, g.a + t * g.b))
        gens.append((y.a, y.b))
        rng.shuffle(gens)
        # unimodular row operations preserve the module
        (a1, b1), (a2, b2) = gens[0], gens[1]
        gens[0] = (a1 + 3 * a2, b1 + 3 * b2)
        assert _hnf_from_vectors(f, gens) == i


def test_ideal_norm_multiplicative_random():
    rng = random.Random(7)
    for _ in range(300):
        f = field_spec(rng.choice([-1, -3, -7, -43]))
        i = principal_ideal(_random_element(rng, f))
        j = ideal_sum(
            principal_ideal(_random_element(rng, f)),
            principal_ideal(_random_element(rng, f)),
        )
        assert ideal_product(i, j).norm == i.norm * j.norm


def test_sum_contains_both_and_norm_divides_gcd():
    rng = random.Random(11)
    for _ in range(200):
        f = field_spec(rng.choice([-2, -7, -11, -163]))
        x = _random_element(rng, f)
        y = _random_element(rng, f)
        i, j = principal_ideal(x), principal_ideal(y)
        s = ideal_sum(i, j)
        assert s.contains(x) and s.contains(y)
        import math

        assert math.gcd(i.norm, j.norm) % s.norm == 0


def test_contains_matches_divides():
    rng = random.Random(13)
    for _ in range(400):
        f = field_spec(rng.choice([-1, -3, -19, -67]))
        x = _random_element(rng, f, coord=25)
        y = QuadInt(f, rng.randint(-60, 60), rng.randint(-60, 60))
        assert principal_ideal(x).contains(y) == (divides(x, y) is not None)


def test_malformed_hnf_rejected():
    with pytest.raises(ValueError):
        Ideal(F1, 2, 1, 2)  # k does not divide m
    with pytest.raises(ValueError):
        Ideal(F1, 0, 0, 1)
    with pytest.raises(ValueError):
        Ideal(F11, 5, 2, 1)  # not closed under multiplication by w


def test_text_form():
    assert principal_ideal(QuadInt(F1, 1, 1)).to_text() == "hnf[2,1,1]@-1"
