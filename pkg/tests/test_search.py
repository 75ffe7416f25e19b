import pytest

from catalanok.criteria import is_perfect_qth_power
from catalanok.fields import field_spec
from catalanok.intmath import perfect_nth_root
from catalanok.quadint import elements_of_norm, omega, one
from catalanok.search import (
    _shard_shells,
    enumerate_by_norm,
    lattice_count,
    search_catalan,
    search_equal_exponent,
    theorem1_sweep,
)

F1 = field_spec(-1)
F3 = field_spec(-3)
F7 = field_spec(-7)


def test_enumerate_units_of_gaussian():
    got = list(enumerate_by_norm(F1, 1))
    assert {x.to_text() for x in got} == {"1+0*w[-1]", "-1+0*w[-1]",
                                          "0+1*w[-1]", "0-1*w[-1]"}


def test_enumerate_norm_two_gaussian():
    got = list(enumerate_by_norm(F1, 2))
    assert len(got) == 8
    assert sum(1 for x in got if x.norm() == 2) == 4


def test_enumerate_norm_two_sqrt_minus_seven():
    got = list(enumerate_by_norm(F7, 2))
    w = omega(F7)
    expected = {one(F7), -one(F7), w, -w, one(F7) - w, w - one(F7)}
    assert set(got) == expected


def test_enumerate_ordered_and_deterministic():
    a = list(enumerate_by_norm(F3, 40))
    b = list(enumerate_by_norm(F3, 40))
    assert a == b
    norms = [x.norm() for x in a]
    assert norms == sorted(norms)


def test_shard_partition_counts():
    for shards in (1, 2, 3, 7):
        seen = []
        for i in range(shards):
            seen.extend(_shard_shells(97, shards, i))
        assert sorted(seen) == list(range(1, 98))
    total = lattice_count(F1, 97)
    by_shards = sum(
        sum(len(elements_of_norm(F1, n)) for n in _shard_shells(97, 3, i))
        for i in range(3)
    )
    assert by_shards == total


def test_search_finds_unit_solutions_in_eisenstein_field():
    # Computed truth: exactly two pairs of sixth roots of unity solve
    # x^7 - y^5 = 1; both fail the divisibility and size conditions.
    report = search_catalan(F3, 7, 5, 100)
    got = [(s.x, s.y) for s in report.solutions]
    w = omega(F3)
    assert got == [(w, -w), (one(F3) - w, w - one(F3))]
    for s in report.solutions:
        assert s.x**7 - s.y**5 == one(F3)
        assert s.cassels is not None
        assert not s.cassels.q_divides_x
        assert not s.cassels.bound_thm2


def test_search_empty_cells():
    assert search_catalan(F1, 5, 3, 500).solutions == ()
    assert search_catalan(F3, 5, 3, 500).solutions == ()
    assert search_catalan(F3, 7, 3, 500).solutions == ()


def test_equal_exponent_solutions():
    # Computed truth: x^5 - y^5 = 1 has unit solutions in Q(sqrt(-3)) ...
    report = search_equal_exponent(F3, 5, 100)
    w = omega(F3)
    got = [(s.x, s.y) for s in report.solutions]
    assert got == [(w, w * w), (one(F3) - w, -w)]
    # ... but x^3 - y^3 = 1 has none at this scale.
    assert search_equal_exponent(F3, 3, 500).solutions == ()
    assert search_equal_exponent(F1, 3, 500).solutions == ()


def test_degenerate_roots_of_unity_skipped():
    # x = 1 gives x^p - 1 = 0, i.e. y = 0: excluded as degenerate.
    report = search_catalan(F1, 5, 3, 1)
    assert report.candidates_scanned == 4
    assert report.solutions == ()


def test_near_miss_bookkeeping():
    report = search_catalan(F1, 5, 3, 400)
    unit = one(F1)
    recomputed = []
    for x in enumerate_by_norm(F1, 400):
        z = x**5 - unit
        if z.is_zero():
            continue
        if perfect_nth_root(z.norm(), 3) is None:
            continue
        if is_perfect_qth_power(z, 3) is None:
            recomputed.append((x, z))
    assert [(nm.x, nm.z) for nm in report.near_misses] == recomputed
    assert all(nm.q == 3 for nm in report.near_misses)


def test_search_determinism_and_serialization():
    r1 = search_catalan(F3, 7, 5, 150)
    r2 = search_catalan(F3, 7, 5, 150)
    assert r1 == r2  # elapsed excluded from comparison
    assert r1.to_record() == r2.to_record()
    assert "elapsed" not in r1.to_record()


def test_sharded_and_parallel_match_plain():
    base = search_catalan(F3, 7, 5, 200).to_record()
    assert search_catalan(F3, 7, 5, 200, shards=4).to_record() == base
    assert search_catalan(F3, 7, 5, 200, shards=2, parallel=True).to_record() == base


def test_checkpoint_resume(tmp_path):
    cp = tmp_path / "scan.txt"
    full = search_catalan(F3, 7, 5, 200, checkpoint=str(cp))
    lines = cp.read_text().splitlines()
    assert lines == sorted(lines)
    # notable elements (solutions) are never checkpointed
    solution_keys = {s.x.to_text() for s in full.solutions}
    assert not solution_keys & set(lines)
    # truncate and resume: report is reproduced exactly
    cp.write_text("\n".join(lines[: len(lines) // 3]) + "\n")
    resumed = search_catalan(F3, 7, 5, 200, checkpoint=str(cp))
    assert resumed.to_record() == full.to_record()
    # a second full pass only appends what was missing
    again = search_catalan(F3, 7, 5, 200, checkpoint=str(cp))
    assert again.to_record() == full.to_record()
    assert sorted(set(cp.read_text().splitlines())) == lines


def test_search_validates_inputs():
    with pytest.raises(ValueError):
        search_catalan(F1, 3, 5, 10)
    with pytest.raises(ValueError):
        search_catalan(F1, 9, 3, 10)
    with pytest.raises(ValueError):
        search_equal_exponent(F1, 2, 10)
    with pytest.raises(ValueError):
        list(enumerate_by_norm(F1, 0))


def test_theorem1_sweep_small():
    sweep = theorem1_sweep([F1, field_spec(-7)], [(5, 3), (7, 5)],
                           norm_min=4, norm_max=10, prec=256)
    assert sweep.checked > 0
    assert sweep.all_certified
    assert sweep.failures == ()
