"""Exhaustive desk-scale searches over norm shells of O_K.

Enumeration walks the lattice one norm shell at a time, so reports are
deterministic and shards (one shell class per shard) partition the work
exactly.  A plain-text checkpoint file lists already-scanned elements, one
canonical form per line; elements that produced a solution or a near miss
are deliberately never checkpointed, so a resumed run reproduces the full
report byte for byte.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Iterator

from .analytic import theorem1_epsilon
from .criteria import CasselsReport, cassels_check, is_perfect_qth_power
from .errors import Inconclusive
from .fields import FieldSpec, field_spec
from .intervals import DEFAULT_PRECISION
from .intmath import is_prime, perfect_nth_root
from .quadint import QuadInt, elements_of_norm, one


def enumerate_by_norm(field: FieldSpec, norm_max: int) -> Iterator[QuadInt]:
    """Every x with 1 <= norm(x) <= norm_max, ordered by (norm, a, b)."""
    if norm_max < 1:
        raise ValueError("norm_max must be at least 1")
    for n in range(1, norm_max + 1):
        yield from elements_of_norm(field, n)


def lattice_count(field: FieldSpec, norm_max: int) -> int:
    return sum(len(elements_of_norm(field, n)) for n in range(1, norm_max + 1))


@dataclass(frozen=True)
class SolutionRecord:
    x: QuadInt
    y: QuadInt
    cassels: CasselsReport | None


@dataclass(frozen=True)
class NearMiss:
    x: QuadInt
    z: QuadInt
    q: int


@dataclass(frozen=True)
class SearchReport:
    field: FieldSpec
    p: int
    q: int
    norm_bound: int
    candidates_scanned: int
    solutions: tuple[SolutionRecord, ...]
    near_misses: tuple[NearMiss, ...]
    elapsed: float = dc_field(compare=False, default=0.0)

    def to_record(self) -> dict:
        """Comparable portion of the report (no wall-clock data)."""
        return {
            "d": self.field.d,
            "p": self.p,
            "q": self.q,
            "norm_bound": self.norm_bound,
            "candidates_scanned": self.candidates_scanned,
            "solutions": [
                {
                    "x": s.x.to_text(),
                    "y": s.y.to_text(),
                    "q_divides_x": s.cassels.q_divides_x if s.cassels else None,
                    "bound_thm2": s.cassels.bound_thm2 if s.cassels else None,
                }
                for s in self.solutions
            ],
            "near_misses": [
                {"x": nm.x.to_text(), "z": nm.z.to_text(), "q": nm.q}
                for nm in self.near_misses
            ],
        }


def _shard_shells(norm_max: int, shards: int, index: int) -> list[int]:
    return [n for n in range(1, norm_max + 1) if (n - 1) % shards == index]


def _scan_shells(field: FieldSpec, p: int, q: int, shells: list[int],
                 skip: frozenset[str], attach_cassels: bool):
    """Scan the given norm shells; returns (count, solutions, nears, boring)."""
    count = 0
    solutions = []
    nears = []
    boring = []
    unit = one(field)
    for n in shells:
        for x in elements_of_norm(field, n):
            count += 1
            key = x.to_text()
            if key in skip:
                continue
            z = x**p - unit
            if z.is_zero():
                # x^p = 1 forces y = 0: the degenerate pair (x, 0) is skipped.
                boring.append(key)
                continue
            if perfect_nth_root(z.norm(), q) is None:
                boring.append(key)
                continue
            y = is_perfect_qth_power(z, q)
            if y is None:
                nears.append(NearMiss(x, z, q))
            else:
                report = cassels_check(x, y, p, q) if attach_cassels else None
                solutions.append(SolutionRecord(x, y, report))
    return count, solutions, nears, boring


def _scan_worker(args):
    d, p, q, shells, skip, attach = args
    return _scan_shells(field_spec(d), p, q, list(shells), skip, attach)


def _load_checkpoint(path) -> frozenset[str]:
    if path is None:
        return frozenset()
    file = Path(path)
    if not file.exists():
        return frozenset()
    return frozenset(
        line.strip() for line in file.read_text().splitlines() if line.strip()
    )


def _write_checkpoint(path, skip: frozenset[str], boring: list[str]) -> None:
    if path is None:
        return
    fresh = [key for key in boring if key not in skip]
    with open(path, "a") as fh:
        for key in fresh:
            fh.write(key + "\n")


def _run_search(field: FieldSpec, p: int, q: int, norm_max: int,
                checkpoint, shards: int, parallel: bool,
                attach_cassels: bool) -> SearchReport:
    start = time.perf_counter()
    skip = _load_checkpoint(checkpoint)
    shards = max(1, shards)
    jobs = [
        (field.d, p, q, tuple(_shard_shells(norm_max, shards, i)), skip,
         attach_cassels)
        for i in range(shards)
    ]
    if parallel and shards > 1:
        with ProcessPoolExecutor(max_workers=shards) as pool:
            parts = list(pool.map(_scan_worker, jobs))
    else:
        parts = [_scan_worker(job) for job in jobs]
    count = sum(part[0] for part in parts)

    def order(x):
        return (x.norm(), x.a, x.b)

    solutions = sorted(
        (s for part in parts for s in part[1]), key=lambda s: order(s.x)
    )
    nears = sorted(
        (nm for part in parts for nm in part[2]), key=lambda nm: order(nm.x)
    )
    boring = sorted(key for part in parts for key in part[3])
    _write_checkpoint(checkpoint, skip, boring)
    elapsed = time.perf_counter() - start
    return SearchReport(
        field=field, p=p, q=q, norm_bound=norm_max,
        candidates_scanned=count, solutions=tuple(solutions),
        near_misses=tuple(nears), elapsed=elapsed,
    )


def search_catalan(field: FieldSpec, p: int, q: int, norm_max: int,
                   checkpoint=None, shards: int = 1,
                   parallel: bool = False) -> SearchReport:
    """Scan all x with norm <= norm_max for solutions of x^p - y^q = 1.

    Solutions are re-verified exactly and each comes with its divisibility
    and size report.  Near misses (norm of x^p - 1 is a perfect q-th power
    but no exact root exists) are recorded separately.
    """
    if not (is_prime(p) and is_prime(q)) or not p > q >= 3:
        raise ValueError(f"need primes p > q >= 3, got p={p}, q={q}")
    return _run_search(field, p, q, norm_max, checkpoint, shards, parallel,
                       attach_cassels=True)


def search_equal_exponent(field: FieldSpec, p: int, norm_max: int,
                          checkpoint=None, shards: int = 1,
                          parallel: bool = False) -> SearchReport:
    """Scan for solutions of x^p - y^p = 1 (same odd prime on both sides)."""
    if not is_prime(p) or p < 3:
        raise ValueError(f"need an odd prime, got {p}")
    return _run_search(field, p, p, norm_max, checkpoint, shards, parallel,
                       attach_cassels=False)


@dataclass(frozen=True)
class Theorem1Sweep:
    checked: int
    certified: int
    inconclusive: tuple[tuple[int, str, int, int], ...]
    failures: tuple[tuple[int, str, int, int], ...]

    @property
    def all_certified(self) -> bool:
        return self.certified == self.checked


def theorem1_sweep(fields, pairs, norm_min: int = 4, norm_max: int = 100,
                   prec: int = DEFAULT_PRECISION) -> Theorem1Sweep:
    """Certify the root-distance bound for every b with norm in range.

    For each field, each b with norm_min <= norm(b) <= norm_max and each
    prime pair (p, q): certify that exactly one p-th root of (b^p-1)^q + 1
    lies within 1/2 of b^q and strictly away from it.
    """
    checked = 0
    certified = 0
    inconclusive = []
    failures = []
    for f in fields:
        for n in range(norm_min, norm_max + 1):
            for b in elements_of_norm(f, n):
                for (p, q) in pairs:
                    checked += 1
                    try:
                        result = theorem1_epsilon(b, p, q, prec)
                    except Inconclusive:
                        inconclusive.append((f.d, b.to_text(), p, q))
                        continue
                    if result.unique_root:
                        certified += 1
                    else:
                        failures.append((f.d, b.to_text(), p, q))
    return Theorem1Sweep(
        checked=checked, certified=certified,
        inconclusive=tuple(inconclusive), failures=tuple(failures),
    )
