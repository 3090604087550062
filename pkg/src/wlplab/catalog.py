"""Ground-truth classification data for the supported graph families.

The WLP verdicts and per-degree failure listings below are transcribed
verbatim from the known classification results for paths, cycles, cycles
with a chord, pans, and triangle tadpoles; the acceptance suite compares the
rank engine against them, so a drift on either side surfaces as a test
failure.  Degrees are stated relative to the modes of the independence
polynomials and resolved to integers on demand.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .graphs import GraphSpecError
from .indpoly import closed_form, mode_formula, unimodality_report

SURJECTIVE = "surjective"
INJECTIVE = "injective"


class NotTabulatedError(LookupError):
    """The requested n lies outside the explicitly tabulated range."""


# WLP holds exactly on these finite sets (valid for every n in the domain).
WLP_SETS = {
    "path": frozenset(range(1, 8)) | {9, 10, 13},
    "cycle": frozenset(range(3, 12)) | {13, 14, 17},
    "ce": frozenset(range(4, 9)) | {10, 11, 14},
    "pan": frozenset(range(3, 11)) | {12, 13, 16},
    "tadpole3": frozenset({1, 3, 4, 7}),
}

DOMAIN_MIN = {"path": 1, "cycle": 3, "ce": 4, "pan": 3, "tadpole3": 1}

# Ranges over which the per-degree failures are explicitly tabulated, the n
# with a listed surjectivity failure (at the mode) and the n with a listed
# injectivity failure (at the mode minus one).
TABULATED_RANGE = {"path": (1, 17), "cycle": (3, 20), "ce": (4, 20),
                   "pan": (3, 20), "tadpole3": (1, 17)}
SURJ_FAIL_AT_MODE = {
    "path": frozenset({8, 11, 14, 15, 17}),
    "cycle": frozenset({12, 15, 18, 19}),
    "ce": frozenset({9, 12, 15, 16, 18, 19}),
    "pan": frozenset({11, 14, 17, 18, 20}),
    "tadpole3": frozenset({2, 5, 8, 9, 11, 12, 14, 15, 16, 17}),
}
INJ_FAIL_BELOW_MODE = {
    "path": frozenset({12, 16}),
    "cycle": frozenset({16, 20}),
    "ce": frozenset({13, 17, 20}),
    "pan": frozenset({15, 19}),
    "tadpole3": frozenset({2, 6, 10, 13, 14, 17}),
}

# Modes of the independence polynomials for 1 <= n <= 13 (dash = undefined).
TABLE1 = {
    "path": {1: 0, 2: 1, 3: 1, 4: 1, 5: 2, 6: 2, 7: 2, 8: 2, 9: 3, 10: 3,
             11: 3, 12: 4, 13: 4},
    "cycle": {3: 1, 4: 1, 5: 1, 6: 2, 7: 2, 8: 2, 9: 3, 10: 3, 11: 3,
              12: 3, 13: 4},
    "ce": {4: 1, 5: 1, 6: 2, 7: 2, 8: 2, 9: 2, 10: 3, 11: 3, 12: 3, 13: 4},
    "pan": {3: 1, 4: 1, 5: 2, 6: 2, 7: 2, 8: 3, 9: 3, 10: 3, 11: 3,
            12: 4, 13: 4},
}


@lru_cache(maxsize=None)
def family_mode(kind: str, n: int) -> int:
    """Mode of the family's independence polynomial: the integer quadratic
    formulas for paths and cycles, the computed mode of the closed form for
    the chorded cycles and pans, and the cycle mode at n+3 for tadpoles."""
    if kind in ("path", "cycle"):
        return mode_formula(kind, n)
    if kind in ("ce", "pan"):
        report = unimodality_report(closed_form(kind, n))
        if report.mode is None:
            raise AssertionError(f"{kind}:{n} polynomial is not unimodal")
        return report.mode
    if kind == "tadpole3":
        return mode_formula("cycle", n + 3)
    raise GraphSpecError(f"no catalog family {kind!r}")


def _check_domain(kind: str, n: int) -> None:
    lo = DOMAIN_MIN.get(kind)
    if lo is None:
        raise GraphSpecError(f"no catalog family {kind!r}")
    if n < lo:
        raise GraphSpecError(f"{kind} requires n >= {lo}, got {n}")


def expected_wlp(kind: str, n: int) -> bool:
    """Whether the family member's algebra has the WLP (characteristic 0)."""
    _check_domain(kind, n)
    return n in WLP_SETS[kind]


def expected_failures(kind: str, n: int) -> tuple[tuple[int, str], ...]:
    """Tabulated (degree, sense) failure listing for the family member.

    Empty when the WLP holds.  Raises NotTabulatedError outside the
    explicitly tabulated range (the asymptotic claims cover those n).
    """
    _check_domain(kind, n)
    lo, hi = TABULATED_RANGE[kind]
    if not lo <= n <= hi:
        raise NotTabulatedError(f"{kind}:{n} failures are not tabulated "
                                f"(tabulated range is {lo}..{hi})")
    failures = []
    mode = None if expected_wlp(kind, n) else family_mode(kind, n)
    if n in SURJ_FAIL_AT_MODE[kind]:
        failures.append((mode, SURJECTIVE))
    if n in INJ_FAIL_BELOW_MODE[kind]:
        failures.append((mode - 1, INJECTIVE))
    if bool(failures) == expected_wlp(kind, n):
        raise AssertionError(f"catalog is internally inconsistent at {kind}:{n}")
    return tuple(failures)


def path_injectivity_claim(n: int) -> tuple[int, str]:
    """Injectivity failure of the path algebra at the degree below the mode,
    valid for n >= 12 whenever the mode just stepped up."""
    if n < 12:
        raise GraphSpecError(f"the injectivity claim needs n >= 12, got {n}")
    if mode_formula("path", n) != mode_formula("path", n - 1) + 1:
        raise GraphSpecError(f"the injectivity claim needs the mode to step at n={n}")
    return (mode_formula("path", n) - 1, INJECTIVE)


def asymptotic_surjectivity_claim(kind: str, n: int) -> tuple[int, str]:
    """Predicted (degree, sense) failure for large n in each family.

    Paths fail surjectivity at the mode for n >= 17 (and, below that,
    injectivity below the mode whenever the mode steps, n >= 12).  Cycles
    and chorded cycles fail surjectivity at the mode for n >= 21.  Pans for
    n >= 21 fail surjectivity at the mode except in the one subcase that
    fails injectivity below it.
    """
    _check_domain(kind, n)
    if kind == "path":
        if n >= 17:
            return (family_mode(kind, n), SURJECTIVE)
        return path_injectivity_claim(n)
    if n < 21:
        raise GraphSpecError(f"the asymptotic claim for {kind} needs n >= 21, got {n}")
    if kind in ("cycle", "ce"):
        return (family_mode(kind, n), SURJECTIVE)
    if kind == "pan":
        zeta = family_mode("pan", n)
        chi = family_mode("ce", n + 1)
        if zeta == chi:
            return (zeta, SURJECTIVE)
        lam = mode_formula("path", n)
        if lam == mode_formula("path", n - 3):
            return (zeta, SURJECTIVE)
        return (zeta - 1, INJECTIVE)
    raise GraphSpecError(f"no asymptotic claim for {kind!r}")


def failure_mismatches(kind: str, n: int, verdict) -> list[str]:
    """Compare a computed verdict against the tabulated failure listing.

    A match requires the set of deficient degrees (rank below the smaller of
    the two dimensions) to equal the set of listed degrees, and each listed
    sense to be flagged at its degree.  The unlisted sense at a deficient
    degree is left unasserted: the listings name only the sense in which
    maximal rank was demanded.
    """
    expected = expected_failures(kind, n)
    messages = []
    deficient = {r.k for r in verdict.deficient_records()}
    listed = {degree for degree, _ in expected}
    if deficient != listed:
        messages.append(
            f"deficient degrees {sorted(deficient)} differ from listed {sorted(listed)}")
    for degree, sense in expected:
        if not 0 <= degree < len(verdict.records):
            messages.append(f"listed degree {degree} outside the record range")
            continue
        record = verdict.records[degree]
        flag = record.injective_fail if sense == INJECTIVE else record.surjective_fail
        if not (record.deficient and flag):
            messages.append(f"listed {sense} failure at degree {degree} not observed")
    return messages


@dataclass(frozen=True)
class ClassificationEntry:
    kind: str
    n: int
    expected_wlp: bool
    expected_failures: tuple[tuple[int, str], ...]


def catalog_entries():
    """All tabulated classification entries, in family order."""
    for kind in ("path", "cycle", "ce", "pan", "tadpole3"):
        lo, hi = TABULATED_RANGE[kind]
        for n in range(lo, hi + 1):
            yield ClassificationEntry(kind, n, expected_wlp(kind, n),
                                      expected_failures(kind, n))


def catalog_json() -> str:
    """The catalog as a JSON document (for documentation builds)."""
    doc = {
        "families": {
            kind: {
                "domain_min": DOMAIN_MIN[kind],
                "wlp_set": sorted(WLP_SETS[kind]),
                "tabulated_range": list(TABULATED_RANGE[kind]),
            }
            for kind in DOMAIN_MIN
        },
        "entries": [
            {"kind": e.kind, "n": e.n, "expected_wlp": e.expected_wlp,
             "expected_failures": [{"degree": d, "sense": s}
                                   for d, s in e.expected_failures]}
            for e in catalog_entries()
        ],
        "modes_table": {kind: {str(n): v for n, v in row.items()}
                        for kind, row in TABLE1.items()},
    }
    return json.dumps(doc, indent=2)
