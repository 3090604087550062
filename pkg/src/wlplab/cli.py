"""Command-line surface: compute polynomials and WLP verdicts, and re-run the
classification sweeps against the catalog.

Exit codes encode verdicts so shell sweeps need no output parsing: 0 for
success / a true verdict / an all-pass reproduction, 1 for a computed false
verdict or a failed reproduction, 2 for usage errors (including exceeded
budgets).  Flags mirror environment variables with prefix WLPLAB_ (flags
win).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .catalog import (INJECTIVE, SURJECTIVE, TABLE1, TABULATED_RANGE,
                      expected_failures, expected_wlp, failure_mismatches,
                      family_mode, path_injectivity_claim)
from .graphs import FamilySpec, GraphSpecError, make_family, parse_family_spec
from .indpoly import (IntPolynomial, closed_form, indpoly_enum, indpoly_rec,
                      mode_formula, unimodality_report)
from .wlp import (DEFAULT_MAX_BASIS, BudgetExceededError, WlpVerdict,
                  hilbert_quotient, injective_failure_certificate, wlp_check)

REPRODUCE_TARGETS = (
    "table1", "thm-paths", "thm-cycles", "thm-ce", "thm-pan", "cor-tadpole",
    "prop-path-inj", "lemma-modes", "ex-en-charp", "ex-bk-nonunimodal",
    "prop-complete-unions",
)

_THEOREM_DEFAULT_MAX_N = {"thm-paths": 17, "thm-cycles": 17, "thm-ce": 16,
                          "thm-pan": 16, "cor-tadpole": 14}
_THEOREM_KIND = {"thm-paths": "path", "thm-cycles": "cycle", "thm-ce": "ce",
                 "thm-pan": "pan", "cor-tadpole": "tadpole3"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CaseResult:
    name: str
    expected: str
    computed: str
    ok: bool
    seconds: float


@dataclass
class ReproductionReport:
    target: str
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.ok)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if not c.ok)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def add(self, name: str, expected, computed, started: float) -> None:
        e, c = str(expected), str(computed)
        self.cases.append(CaseResult(name, e, c, e == c, time.perf_counter() - started))

    def add_case(self, case: CaseResult) -> None:
        self.cases.append(case)


# ---------------------------------------------------------------------------
# Option plumbing
# ---------------------------------------------------------------------------

def _env(name: str, cast, fallback):
    raw = os.environ.get("WLPLAB_" + name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except (TypeError, ValueError):
        raise UsageError(f"invalid WLPLAB_{name}={raw!r}") from None


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("table", "json", "csv"),
                        default=_env("FORMAT", str, "table"))
    parser.add_argument("--char", type=int, default=_env("CHAR", int, 0),
                        help="characteristic: 0 or a prime")
    parser.add_argument("--certify", choices=("auto", "exact", "fast"),
                        default=_env("CERTIFY", str, "auto"))
    parser.add_argument("--seed", type=int, default=_env("SEED", int, None))
    parser.add_argument("--max-basis", type=int,
                        default=_env("MAX_BASIS", int, DEFAULT_MAX_BASIS))
    parser.add_argument("--threads", type=int, default=_env("THREADS", int, 1))
    parser.add_argument("--cache", default=_env("CACHE", str, None),
                        help="append-only JSON-lines verdict cache")


def _build_parser() -> _Parser:
    parser = _Parser(prog="wlplab", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
            ("indpoly", "independence polynomial of a graph spec"),
            ("mode", "mode of the independence polynomial"),
            ("wlp", "decide the weak Lefschetz property"),
            ("hilbert", "Hilbert series of the algebra modulo the Lefschetz form"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("spec")
        _add_common(p)
    p = sub.add_parser("reproduce", help="re-run a classification sweep")
    p.add_argument("target", choices=REPRODUCE_TARGETS)
    p.add_argument("--max-n", type=int, default=None)
    _add_common(p)
    p = sub.add_parser("catalog", help="export the classification catalog as JSON")
    _add_common(p)
    return parser


def _wlp_options(args) -> dict:
    return {"certify": args.certify, "seed": args.seed,
            "max_basis": args.max_basis, "threads": args.threads}


# ---------------------------------------------------------------------------
# Verdict cache (JSON lines: {key, verdict, timestamp, version})
# ---------------------------------------------------------------------------

def _cache_key(spec: str, characteristic: int, certify: str) -> str:
    return f"{spec}|char={characteristic}|certify={certify}"


def _cache_lookup(path: str, key: str) -> WlpVerdict | None:
    if not path or not os.path.exists(path):
        return None
    hit = None
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                entry = json.loads(line)
            except json.JSONDecodeError:
                continue
            if entry.get("key") == key and entry.get("version") == __version__:
                hit = entry["verdict"]
    return WlpVerdict.from_json_dict(hit) if hit else None


def _cache_append(path: str, key: str, verdict: WlpVerdict) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps({"key": key, "verdict": verdict.to_json_dict(),
                             "timestamp": time.time(), "version": __version__}))
        fh.write("\n")


def _checked_wlp(spec: str, args) -> WlpVerdict:
    key = _cache_key(spec, args.char, args.certify)
    if args.cache:
        hit = _cache_lookup(args.cache, key)
        if hit is not None:
            return hit
    verdict = wlp_check(make_family(parse_family_spec(spec)), args.char,
                        spec=spec, **_wlp_options(args))
    if args.cache:
        _cache_append(args.cache, key, verdict)
    return verdict


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _print_poly(spec: str, poly: IntPolynomial, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"spec": spec, "coefficients": poly.to_strings()}))
    elif fmt == "csv":
        print("degree,coefficient")
        for k, c in enumerate(poly.coeffs):
            print(f"{k},{c}")
    else:
        print(poly)


def _cmd_indpoly(args) -> int:
    g = make_family(parse_family_spec(args.spec))
    poly = indpoly_enum(g) if g.n <= 20 else indpoly_rec(g)
    _print_poly(args.spec, poly, args.format)
    return 0


def _cmd_mode(args) -> int:
    g = make_family(parse_family_spec(args.spec))
    report = unimodality_report(indpoly_rec(g))
    if args.format == "json":
        print(json.dumps({"spec": args.spec, "unimodal": report.is_unimodal,
                          "mode": report.mode}))
    elif args.format == "csv":
        print("spec,unimodal,mode")
        print(f"{args.spec},{report.is_unimodal},"
              f"{'' if report.mode is None else report.mode}")
    else:
        print(report.mode if report.is_unimodal else "not unimodal")
    return 0 if report.is_unimodal else 1


def _cmd_wlp(args) -> int:
    verdict = _checked_wlp(args.spec, args)
    if args.format == "json":
        print(verdict.to_json())
    elif args.format == "csv":
        print("k,h_k,h_k1,rank,injective_fail,surjective_fail,method")
        for r in verdict.records:
            print(f"{r.k},{r.h_k},{r.h_k1},{r.rank},{r.injective_fail},"
                  f"{r.surjective_fail},{r.method}")
    else:
        print(f"spec: {verdict.spec}")
        print(f"characteristic: {verdict.characteristic}")
        print(f"socle degree: {verdict.socle_degree}")
        print(f"{'k':>3} {'h_k':>7} {'h_k+1':>7} {'rank':>7}  fails   method")
        for r in verdict.records:
            fails = ",".join(s for s, f in (("inj", r.injective_fail),
                                            ("surj", r.surjective_fail)) if f) or "-"
            print(f"{r.k:>3} {r.h_k:>7} {r.h_k1:>7} {r.rank:>7}  {fails:<7} {r.method}")
        print(f"has_wlp: {verdict.has_wlp}")
    return 0 if verdict.has_wlp else 1


def _cmd_hilbert(args) -> int:
    g = make_family(parse_family_spec(args.spec))
    poly = hilbert_quotient(g, args.char, **_wlp_options(args))
    _print_poly(args.spec, poly, args.format)
    return 0


def _cmd_catalog(args) -> int:
    from .catalog import catalog_json
    print(catalog_json())
    return 0


# ---------------------------------------------------------------------------
# Reproduction targets
# ---------------------------------------------------------------------------

def _reproduce_table1(args) -> ReproductionReport:
    report = ReproductionReport("table1")
    domains = {"path": (1, 13), "cycle": (3, 13), "ce": (4, 13), "pan": (3, 13)}
    for kind, row in TABLE1.items():
        lo, _ = domains[kind]
        for n in range(1, 14):
            t0 = time.perf_counter()
            name = f"{kind}:{n}"
            if n < lo:
                computed = "-"
                try:
                    closed_form(kind, n)
                    computed = "defined"
                except GraphSpecError:
                    pass
                report.add(name, "-", computed, t0)
                continue
            mode = unimodality_report(closed_form(kind, n)).mode
            expected = row[n]
            if kind in ("path", "cycle") and mode_formula(kind, n) != mode:
                report.add(name, expected, f"formula!={mode}", t0)
            else:
                report.add(name, expected, mode, t0)
    return report


def _describe(wlp: bool, failures) -> str:
    if wlp:
        return "wlp"
    return "no-wlp " + ";".join(f"{sense}@{deg}" for deg, sense in failures)


def _reproduce_theorem(args, target: str) -> ReproductionReport:
    kind = _THEOREM_KIND[target]
    report = ReproductionReport(target)
    lo = TABULATED_RANGE[kind][0]
    hi = args.max_n or _THEOREM_DEFAULT_MAX_N[target]
    for n in range(lo, hi + 1):
        t0 = time.perf_counter()
        spec = FamilySpec(kind, (n,)).canonical()
        expected = _describe(expected_wlp(kind, n), expected_failures(kind, n))
        verdict = _checked_wlp(spec, args)
        mismatches = failure_mismatches(kind, n, verdict)
        if verdict.has_wlp != expected_wlp(kind, n):
            computed = _describe(verdict.has_wlp,
                                 [(r.k, "deficient") for r in verdict.deficient_records()])
        elif mismatches:
            computed = expected + " BUT " + "; ".join(mismatches)
        else:
            computed = expected
        report.add(spec, expected, computed, t0)
    return report


def _reproduce_path_inj(args) -> ReproductionReport:
    report = ReproductionReport("prop-path-inj")
    for n in (12, 16):
        t0 = time.perf_counter()
        deg, _ = path_injectivity_claim(n)
        verdict = _checked_wlp(f"path:{n}", args)
        rec = verdict.records[deg]
        ok = rec.deficient and rec.injective_fail and len(verdict.deficient_records()) == 1
        report.add(f"path:{n}", f"injective@{deg} certified",
                   f"injective@{deg} certified" if ok else "mismatch", t0)
    t0 = time.perf_counter()
    deg, _ = path_injectivity_claim(20)
    vec = injective_failure_certificate(make_family(FamilySpec("path", (20,))),
                                        deg, seed=args.seed)
    report.add("path:20", f"kernel vector at degree {deg}",
               f"kernel vector at degree {deg}" if vec else "no kernel vector", t0)
    return report


def _reproduce_lemma_modes(args) -> ReproductionReport:
    report = ReproductionReport("lemma-modes")
    lam = lambda n: mode_formula("path", n)
    rho = lambda n: mode_formula("cycle", n)
    chi = lambda n: family_mode("ce", n)
    zeta = lambda n: family_mode("pan", n)
    sweeps = {
        "lambda-monotone": lambda n: lam(n + 1) >= lam(n),
        "lambda-window": lambda n: lam(n + 3) - 1 <= lam(n) <= lam(n + 4) - 1,
        "lambda-step11": lambda n: lam(n + 11) >= lam(n) + 3,
        "rho-between-lambdas": lambda n: n < 5 or lam(n - 1) <= rho(n) <= lam(n - 4) + 1 <= lam(n),
        "chi-between-lambdas": lambda n: n < 5 or lam(n - 1) <= chi(n) <= lam(n - 4) + 1,
        "zeta-chain": lambda n: n < 5 or chi(n + 1) <= zeta(n) <= rho(n) + 1 <= lam(n) + 1 <= chi(n + 1) + 1,
    }
    for name, check in sweeps.items():
        t0 = time.perf_counter()
        bad = [n for n in range(1, 501) if not check(n)]
        report.add(name, "holds for n<=500",
                   "holds for n<=500" if not bad else f"fails at n={bad[0]}", t0)
    return report


def _reproduce_en_charp(args) -> ReproductionReport:
    report = ReproductionReport("ex-en-charp")
    for n in range(5, 11):
        for p in (3, 5, 7, 11, 13):
            t0 = time.perf_counter()
            got = wlp_check(make_family(FamilySpec("empty", (n,))), p,
                            spec=f"empty:{n}", **_wlp_options(args)).has_wlp
            report.add(f"empty:{n} char {p}", p >= (n + 3) // 2, got, t0)
    for n in range(2, 9):
        t0 = time.perf_counter()
        got = wlp_check(make_family(FamilySpec("empty", (n,))), 2,
                        spec=f"empty:{n}", **_wlp_options(args)).has_wlp
        report.add(f"empty:{n} char 2", n == 3, got, t0)
    return report


def _reproduce_bk(args) -> ReproductionReport:
    report = ReproductionReport("ex-bk-nonunimodal")
    t0 = time.perf_counter()
    flagged = not unimodality_report(closed_form("bk", 95, 150)).is_unimodal
    report.add("bk:95,150", "non-unimodal", "non-unimodal" if flagged else "unimodal", t0)
    for n in range(2, 8):
        for m in range(1, n):
            t0 = time.perf_counter()
            agree = closed_form("bk", m, n) == indpoly_enum(
                make_family(FamilySpec("bk", (m, n))))
            report.add(f"bk:{m},{n} vs oracle", True, agree, t0)
    return report


def _reproduce_complete_unions(args) -> ReproductionReport:
    report = ReproductionReport("prop-complete-unions")
    from itertools import combinations_with_replacement

    def union_spec(sizes, tail=None):
        parts = [FamilySpec("complete", (s,)) for s in sizes]
        if tail is not None:
            parts.append(tail)
        spec = parts[0]
        for part in parts[1:]:
            spec = FamilySpec("union", (spec, part))
        return spec

    for r in (2, 3):
        for sizes in combinations_with_replacement((2, 3, 4), r):
            t0 = time.perf_counter()
            spec = union_spec(sizes)
            got = wlp_check(make_family(spec), spec=spec.canonical(),
                            **_wlp_options(args)).has_wlp
            report.add(spec.canonical(), False, got, t0)
    for spec, label in (
            (FamilySpec("union", (FamilySpec("complete", (4,)), FamilySpec("empty", (3,)))),
             "K4+E3"),
            (union_spec((3, 2), FamilySpec("empty", (1,))), "K3+K2+E1"),
    ):
        t0 = time.perf_counter()
        got = wlp_check(make_family(spec), spec=spec.canonical(),
                        **_wlp_options(args)).has_wlp
        report.add(label, True, got, t0)
    return report


def _cmd_reproduce(args) -> int:
    target = args.target
    if target == "table1":
        report = _reproduce_table1(args)
    elif target in _THEOREM_KIND:
        report = _reproduce_theorem(args, target)
    elif target == "prop-path-inj":
        report = _reproduce_path_inj(args)
    elif target == "lemma-modes":
        report = _reproduce_lemma_modes(args)
    elif target == "ex-en-charp":
        report = _reproduce_en_charp(args)
    elif target == "ex-bk-nonunimodal":
        report = _reproduce_bk(args)
    elif target == "prop-complete-unions":
        report = _reproduce_complete_unions(args)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown target {target!r}")

    if args.format == "json":
        print(json.dumps({
            "target": report.target,
            "cases": [{"case": c.name, "expected": c.expected,
                       "computed": c.computed, "ok": c.ok,
                       "seconds": round(c.seconds, 4)} for c in report.cases],
            "passed": report.passed, "failed": report.failed,
        }))
    elif args.format == "csv":
        print("case,expected,computed,ok,seconds")
        for c in report.cases:
            print(f"{c.name},{c.expected},{c.computed},{c.ok},{c.seconds:.4f}")
    else:
        for c in report.cases:
            mark = "PASS" if c.ok else "FAIL"
            print(f"{mark} {c.name}: expected {c.expected}, computed {c.computed} "
                  f"({c.seconds:.2f}s)")
        print(f"{report.target}: {report.passed} passed, {report.failed} failed")
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------

_COMMANDS = {"indpoly": _cmd_indpoly, "mode": _cmd_mode, "wlp": _cmd_wlp,
             "hilbert": _cmd_hilbert, "reproduce": _cmd_reproduce,
             "catalog": _cmd_catalog}


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"wlplab: {exc}", file=sys.stderr)
        return 2
    except GraphSpecError as exc:
        print(f"wlplab: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"wlplab: exceeded budget: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse --help/--version
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
