"""Batch-verification command line: one subcommand per audited result.

Every flag can be overridden by an environment variable with the
CATALANOK_ prefix (e.g. CATALANOK_NORM_MAX for --norm-max).  Exit codes:
0 all certifications passed, 1 an audited claim failed (witness reported),
3 precision was exhausted before a decision, 2 usage error (argparse).
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from .analytic import (
    SPECIAL_PAIRS,
    tails_grid,
    theorem3_bound,
    theorem3_exponent_scan,
)
from .criteria import lemma2_verify, lemma4_random_audit, remark1_witness
from .fields import CLASS_NUMBER_ONE_RADICANDS, all_fields, field_spec
from .ideals import split_type
from .intmath import is_prime
from .reporting import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    Record,
    exit_code,
    render_csv,
    render_json,
    render_text,
)
from .search import search_catalan, search_equal_exponent, theorem1_sweep

ENV_PREFIX = "CATALANOK_"

DEFAULT_PAIRS = ((5, 3), (7, 3), (7, 5), (11, 3), (11, 5), (11, 7))


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters; constructed before any work starts."""

    d: int | None
    pairs: tuple[tuple[int, int], ...]
    norm_max: int
    precision_bits: int
    output_format: str
    shards: int

    def __post_init__(self):
        if self.d is not None:
            field_spec(self.d)  # raises NotClassNumberOne for bad radicands
        for (p, q) in self.pairs:
            if not (is_prime(p) and is_prime(q) and p > q >= 3):
                raise ValueError(f"bad prime pair ({p}, {q})")
        if self.norm_max < 1 or self.precision_bits < 16 or self.shards < 1:
            raise ValueError("norm_max, precision_bits, shards out of range")
        if self.output_format not in ("text", "json", "csv"):
            raise ValueError(f"unknown format {self.output_format!r}")


def _config_from_args(args) -> RunConfig:
    pair = None
    p = getattr(args, "p", None)
    q = getattr(args, "q", None)
    if args.command == "search" and p is not None and q is not None:
        pair = ((int(p), int(q)),)
    elif getattr(args, "pairs", None):
        pair = _parse_pairs(args.pairs)
    return RunConfig(
        d=args.d if getattr(args, "d", None) is not None else None,
        pairs=pair or (),
        norm_max=int(getattr(args, "norm_max", 1) or 1),
        precision_bits=int(getattr(args, "precision_bits", 256)),
        output_format=args.format,
        shards=int(getattr(args, "shards", 1) or 1),
    )


def _env(name: str, fallback):
    return os.environ.get(ENV_PREFIX + name, fallback)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", default=_env("FORMAT", "text"),
                        choices=("text", "json", "csv"))
    parser.add_argument("--precision-bits", type=int,
                        default=int(_env("PRECISION_BITS", 256)))
    parser.add_argument("--seed", type=int, default=int(_env("SEED", 20240901)))


def _parse_pairs(values) -> tuple[tuple[int, int], ...]:
    if not values:
        return DEFAULT_PAIRS
    pairs = []
    for chunk in values:
        for token in chunk.replace(";", " ").split():
            p_str, q_str = token.split(",")
            p, q = int(p_str), int(q_str)
            if not (is_prime(p) and is_prime(q) and p > q >= 3):
                raise argparse.ArgumentTypeError(f"bad prime pair {token!r}")
            pairs.append((p, q))
    return tuple(pairs)


def _fields_from_arg(d) -> list:
    if d is None:
        return list(all_fields())
    return [field_spec(d)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalanok",
        description=(
            "Exact verification of divisibility, splitting, and size claims "
            "for x^p - y^q = 1 over imaginary quadratic rings of class "
            "number one."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify-lemma2", help="unit congruence audit")
    sp.add_argument("--d", type=int, default=_env("D", None))
    sp.add_argument("--p-max", type=int, default=int(_env("P_MAX", 97)))
    _add_common(sp)

    sp = sub.add_parser("verify-lemma3", help="splitting of 3 across all fields")
    _add_common(sp)

    sp = sub.add_parser("verify-lemma4", help="cyclotomic-quotient gcd audit")
    sp.add_argument("--d", type=int, default=_env("D", None))
    sp.add_argument("--p", type=int, default=int(_env("P", 5)))
    sp.add_argument("--samples", type=int, default=int(_env("SAMPLES", 2000)))
    sp.add_argument("--norm-max", type=int, default=int(_env("NORM_MAX", 10**4)))
    _add_common(sp)

    sp = sub.add_parser("verify-tails", help="binomial tail-bound chain grid")
    sp.add_argument("--samples", type=int, default=int(_env("SAMPLES", 2000)))
    _add_common(sp)

    sp = sub.add_parser("verify-theorem1", help="root-distance certification sweep")
    sp.add_argument("--d", type=int, default=_env("D", None))
    sp.add_argument("--norm-max", type=int, default=int(_env("NORM_MAX", 100)))
    sp.add_argument("--pairs", action="append", default=None)
    _add_common(sp)

    sp = sub.add_parser("theorem3-bounds", help="exponent scan and bound values")
    sp.add_argument("--p", type=int, default=int(_env("P", 97)),
                    help="upper bound for p in the scan")
    sp.add_argument("--q", type=int, default=int(_env("Q", 97)),
                    help="upper bound for q in the scan")
    _add_common(sp)

    sp = sub.add_parser("search", help="exhaustive solution search")
    sp.add_argument("--d", type=int, required=("CATALANOK_D" not in os.environ),
                    default=_env("D", None))
    sp.add_argument("--p", type=int, default=int(_env("P", 5)))
    sp.add_argument("--q", type=int, default=int(_env("Q", 3)))
    sp.add_argument("--norm-max", type=int, default=int(_env("NORM_MAX", 10**4)))
    sp.add_argument("--shards", type=int, default=int(_env("SHARDS", 1)))
    sp.add_argument("--checkpoint", default=_env("CHECKPOINT", None))
    _add_common(sp)

    sp = sub.add_parser("search-equal-exp", help="equal-exponent solution search")
    sp.add_argument("--d", type=int, required=("CATALANOK_D" not in os.environ),
                    default=_env("D", None))
    sp.add_argument("--p", type=int, default=int(_env("P", 3)))
    sp.add_argument("--norm-max", type=int, default=int(_env("NORM_MAX", 10**4)))
    sp.add_argument("--shards", type=int, default=int(_env("SHARDS", 1)))
    sp.add_argument("--checkpoint", default=_env("CHECKPOINT", None))
    _add_common(sp)

    return parser


def _run_lemma2(args) -> list[Record]:
    records = []
    for f in _fields_from_arg(args.d if args.d is None else int(args.d)):
        report = lemma2_verify(f, args.p_max)
        witness = None
        if not report.passed:
            witness = {
                "cases": [
                    {"unit": w.unit.to_text(), "p": w.p, "prime": w.prime.to_text()}
                    for w in report.witnesses
                ]
            }
        records.append(Record(
            result_id=f"lemma2.d{f.d}",
            paper_anchor="Lemma 2",
            verdict=PASS if report.passed else FAIL,
            witness=witness,
            params={"d": f.d, "p_max": args.p_max,
                    "cases_checked": report.cases_checked},
        ))
    return records


def _run_lemma3(args) -> list[Record]:
    records = []
    for f in all_fields():
        st = split_type(f, 3)
        expected = "split" if f.d == -11 else ("ramified" if f.d == -3 else "inert")
        ok = st.kind == expected
        records.append(Record(
            result_id=f"lemma3.d{f.d}",
            paper_anchor="Lemma 3",
            verdict=PASS if ok else FAIL,
            witness=None if ok else {
                "observed": st.kind,
                "expected": expected,
                "primes": [ideal.to_text() for ideal in st.primes],
            },
            params={"d": f.d, "prime": 3},
        ))
    return records


def _run_lemma4(args) -> list[Record]:
    records = []
    for f in _fields_from_arg(args.d if args.d is None else int(args.d)):
        checked, failures = lemma4_random_audit(f, args.samples, args.seed)
        records.append(Record(
            result_id=f"lemma4.random.d{f.d}",
            paper_anchor="Lemma 4",
            verdict=PASS if not failures else FAIL,
            witness=None if not failures else {
                "cases": [
                    {"x": x.to_text(), "p": p, "sign": s, "gcd": g.to_text()}
                    for x, p, s, g in failures[:5]
                ]
            },
            params={"d": f.d, "samples": checked},
        ))
    witness_field = field_spec(-1)
    found = remark1_witness(witness_field, args.p, args.norm_max)
    records.append(Record(
        result_id=f"lemma4.remark1.p{args.p}",
        paper_anchor="Remark 1",
        verdict=PASS if found else FAIL,
        witness=None if not found else {
            "x": found[0].to_text(), "gcd": found[1].to_text()
        },
        params={"d": witness_field.d, "p": args.p, "norm_max": args.norm_max},
    ))
    return records


def _run_tails(args) -> list[Record]:
    sweep = tails_grid(args.samples, seed=args.seed, prec=args.precision_bits)
    verdict = PASS if sweep.all_certified else INCONCLUSIVE
    return [Record(
        result_id="lemma5_6.grid",
        paper_anchor="Lemma 5 / Lemma 6",
        verdict=verdict,
        witness=None if sweep.all_certified else {
            "inconclusive": sweep.inconclusive,
            "first_failures": [
                {"a": str(a), "z_re": str(zr), "z_im": str(zi), "m": m}
                for a, zr, zi, m in sweep.failures[:5]
            ],
        },
        params={"samples": sweep.samples, "precision_bits": args.precision_bits},
    )]


def _run_theorem1(args) -> list[Record]:
    fields = _fields_from_arg(args.d if args.d is None else int(args.d))
    pairs = _parse_pairs(args.pairs)
    records = []
    for f in fields:
        sweep = theorem1_sweep([f], pairs, norm_max=args.norm_max,
                               prec=args.precision_bits)
        if sweep.failures:
            verdict = FAIL
        elif sweep.inconclusive:
            verdict = INCONCLUSIVE
        else:
            verdict = PASS
        records.append(Record(
            result_id=f"theorem1.d{f.d}",
            paper_anchor="Theorem 1",
            verdict=verdict,
            witness=None if verdict == PASS else {
                "failures": [list(item) for item in sweep.failures[:5]],
                "inconclusive": [list(item) for item in sweep.inconclusive[:5]],
            },
            params={"d": f.d, "norm_max": args.norm_max,
                    "pairs": [list(pr) for pr in pairs],
                    "checked": sweep.checked},
        ))
    return records


def _run_theorem3(args) -> list[Record]:
    scan = theorem3_exponent_scan(args.p, args.q)
    records = [
        Record(
            result_id="theorem3.scan.q_gt_5",
            paper_anchor="Theorem 3",
            verdict=PASS if scan.claim_q_gt_5 else FAIL,
            witness=None if scan.claim_q_gt_5 else {
                "violations": [[p, q, str(e)] for p, q, e in scan.violations
                               if q > 5][:10]
            },
            params={"p_max": args.p, "q_max": args.q,
                    "pairs_checked": scan.pairs_checked},
        ),
        Record(
            result_id="theorem3.scan.q5_p_gt_7",
            paper_anchor="Theorem 3",
            verdict=PASS if scan.claim_q5_p_gt_7 else FAIL,
            witness=None if scan.claim_q5_p_gt_7 else {
                "violations": [[p, q, str(e)] for p, q, e in scan.violations
                               if q == 5 and p > 7][:10]
            },
            params={"p_max": args.p, "q_max": args.q},
        ),
        Record(
            result_id="theorem3.scan.q3_p_gt_7",
            paper_anchor="Theorem 3",
            verdict=PASS if scan.claim_q3_p_gt_7 else FAIL,
            witness=None if scan.claim_q3_p_gt_7 else {
                "violations": [[p, q, str(e)] for p, q, e in scan.violations
                               if q == 3 and p > 7][:20]
            },
            params={"p_max": args.p, "q_max": args.q},
        ),
        Record(
            result_id="theorem3.exceptional_set",
            paper_anchor="Theorem 3",
            verdict=PASS if set(scan.violation_pairs) == set(SPECIAL_PAIRS) else FAIL,
            witness={
                "observed": [list(pr) for pr in scan.violation_pairs],
                "expected": [list(pr) for pr in SPECIAL_PAIRS],
            },
            params={"p_max": args.p, "q_max": args.q},
        ),
    ]
    for (p, q) in SPECIAL_PAIRS:
        bound = theorem3_bound(p, q, prec=args.precision_bits)
        records.append(Record(
            result_id=f"theorem3.special.p{p}q{q}",
            paper_anchor="Theorem 3",
            verdict=PASS if bound.below_one else FAIL,
            witness={
                "bound_hi": f"{float(bound.final_bound.hi):.6g}",
                "special_case": bound.special_case,
                "t": bound.t,
                "t_closed_form": str(bound.t_closed_form),
            },
            params={"p": p, "q": q,
                    "x_abs_lower": str(bound.x_abs_lower)
                    if bound.x_abs_lower is not None else None},
        ))
    return records


def _search_record(report, result_id: str, anchor: str) -> Record:
    ok = not report.solutions
    return Record(
        result_id=result_id,
        paper_anchor=anchor,
        verdict=PASS if ok else FAIL,
        witness=None if ok else {"solutions": report.to_record()["solutions"]},
        params={
            "d": report.field.d, "p": report.p, "q": report.q,
            "norm_max": report.norm_bound,
            "candidates_scanned": report.candidates_scanned,
            "near_misses": len(report.near_misses),
        },
    )


def _run_search(args) -> list[Record]:
    f = field_spec(int(args.d))
    report = search_catalan(f, args.p, args.q, args.norm_max,
                            checkpoint=args.checkpoint,
                            shards=args.shards, parallel=args.shards > 1)
    return [_search_record(report, f"search.d{f.d}.p{args.p}.q{args.q}", "Eq. (2)")]


def _run_search_equal(args) -> list[Record]:
    f = field_spec(int(args.d))
    report = search_equal_exponent(f, args.p, args.norm_max,
                                   checkpoint=args.checkpoint,
                                   shards=args.shards,
                                   parallel=args.shards > 1)
    return [_search_record(report, f"search_eq.d{f.d}.p{args.p}", "Lemma 1")]


_RUNNERS = {
    "verify-lemma2": _run_lemma2,
    "verify-lemma3": _run_lemma3,
    "verify-lemma4": _run_lemma4,
    "verify-tails": _run_tails,
    "verify-theorem1": _run_theorem1,
    "theorem3-bounds": _run_theorem3,
    "search": _run_search,
    "search-equal-exp": _run_search_equal,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "d", None) is not None:
        args.d = int(args.d)
        if args.d not in CLASS_NUMBER_ONE_RADICANDS:
            parser.error(f"--d must be one of {CLASS_NUMBER_ONE_RADICANDS}")
    try:
        _config_from_args(args)
    except ValueError as exc:
        parser.error(str(exc))
    records = _RUNNERS[args.command](args)
    renderer = {"text": render_text, "json": render_json, "csv": render_csv}
    sys.stdout.write(renderer[args.format](records))
    return exit_code(records)


if __name__ == "__main__":
    sys.exit(main())
