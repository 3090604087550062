"""Monomial bases of the graph artinian algebra and the WLP decision.

For a graph G, the algebra is the polynomial ring modulo the edge ideal and
the squares of all variables.  Its degree-k monomial basis is the set of
k-independent sets of G, so the Hilbert series equals the independence
polynomial.  For monomial ideals the sum of the variables is a Lefschetz
element whenever one exists, so deciding the WLP reduces to exact ranks of
the multiplication-by-(x_1+...+x_n) matrices between consecutive degrees.
"""
from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .graphs import Graph, disjoint_union
from .indpoly import IntPolynomial, indpoly_rec, unimodality_report
from .linalg import (METHOD_MODULAR, RankResult, SparseMatrix, is_prime,
                     rank_certified, rank_exact, rank_mod_p, right_kernel_witness,
                     _make_rng, _random_prime)

DEFAULT_MAX_BASIS = 10_000
CERTIFY_MODES = ("auto", "exact", "fast")


class BudgetExceededError(RuntimeError):
    """A degree basis exceeds the configured ceiling; raise max_basis to override."""


@dataclass(frozen=True)
class DegreeBasis:
    """Degree-k monomial basis: the k-independent sets as bitmasks, sorted as
    integers with vertex 1 in the lowest bit."""

    k: int
    sets: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.sets)

    def vertex_sets(self) -> list[tuple[int, ...]]:
        out = []
        for mask in self.sets:
            vs = []
            m = mask
            while m:
                low = m & -m
                m ^= low
                vs.append(low.bit_length())
            out.append(tuple(vs))
        return out


def degree_basis(g: Graph, k: int) -> DegreeBasis:
    """All k-independent sets of g in the canonical order (empty above the
    independence number)."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    found: list[int] = []
    adj = g.adj

    def grow(avail: int, chosen: int, left: int) -> None:
        if left == 0:
            found.append(chosen)
            return
        rest = avail
        while rest:
            if rest.bit_count() < left:
                return
            low = rest & -rest
            rest ^= low
            grow(rest & ~adj[low.bit_length() - 1], chosen | low, left - 1)

    grow(g.full_mask, 0, k)
    found.sort()
    return DegreeBasis(k, tuple(found))


def lefschetz_matrix(g: Graph, k: int, bases: dict[int, DegreeBasis] | None = None) -> SparseMatrix:
    """Matrix of multiplication by x_1+...+x_n from degree k to degree k+1.

    Rows are indexed by the degree-(k+1) basis, columns by the degree-k
    basis; entry (T, S) is 1 exactly when S is contained in T.  A column for
    the set S therefore has one entry per vertex outside N[S].
    """
    if bases is None:
        bases = {}
    src = bases.get(k) or degree_basis(g, k)
    dst = bases.get(k + 1) or degree_basis(g, k + 1)
    index = {mask: i for i, mask in enumerate(dst.sets)}
    rows: list[list[int]] = [[] for _ in range(len(dst.sets))]
    for j, s in enumerate(src.sets):
        closed = s
        m = s
        while m:
            low = m & -m
            m ^= low
            closed |= g.adj[low.bit_length() - 1]
        candidates = g.full_mask & ~closed
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            rows[index[s | low]].append(j)
    return SparseMatrix(len(dst.sets), len(src.sets), tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class DegreeRankRecord:
    """Certified rank of the multiplication map from degree k to k+1 together
    with the raw failure flags (rank below the source or target dimension)."""

    k: int
    h_k: int
    h_k1: int
    rank: int
    injective_fail: bool
    surjective_fail: bool
    method: str

    @property
    def max_rank(self) -> bool:
        return self.rank == min(self.h_k, self.h_k1)

    @property
    def deficient(self) -> bool:
        return not self.max_rank

    def to_json_dict(self) -> dict:
        return {"k": self.k, "h_k": self.h_k, "h_k1": self.h_k1,
                "rank": self.rank, "injective_fail": self.injective_fail,
                "surjective_fail": self.surjective_fail, "method": self.method}

    @classmethod
    def from_json_dict(cls, d: dict) -> "DegreeRankRecord":
        return cls(d["k"], d["h_k"], d["h_k1"], d["rank"],
                   d["injective_fail"], d["surjective_fail"], d["method"])


@dataclass(frozen=True)
class WlpVerdict:
    """Outcome of the WLP decision for one graph and one characteristic."""

    spec: str
    characteristic: int
    has_wlp: bool
    socle_degree: int
    records: tuple[DegreeRankRecord, ...]
    certification: str

    def record(self, k: int) -> DegreeRankRecord:
        return self.records[k]

    def deficient_records(self) -> list[DegreeRankRecord]:
        return [r for r in self.records if r.deficient]

    def hilbert(self) -> IntPolynomial:
        return IntPolynomial.from_coeffs(
            [r.h_k for r in self.records] + [0])

    def to_json_dict(self) -> dict:
        return {"spec": self.spec, "characteristic": self.characteristic,
                "has_wlp": self.has_wlp, "socle_degree": self.socle_degree,
                "records": [r.to_json_dict() for r in self.records],
                "certification": self.certification}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, d: dict) -> "WlpVerdict":
        return cls(d["spec"], d["characteristic"], d["has_wlp"],
                   d["socle_degree"],
                   tuple(DegreeRankRecord.from_json_dict(r) for r in d["records"]),
                   d.get("certification", "auto"))

    @classmethod
    def from_json(cls, text: str) -> "WlpVerdict":
        return cls.from_json_dict(json.loads(text))


def _validate_characteristic(characteristic: int) -> None:
    if characteristic == 0:
        return
    if not is_prime(characteristic):
        raise ValueError(f"characteristic must be 0 or a prime, got {characteristic}")


def _rank_for(matrix: SparseMatrix, characteristic: int, certify: str,
              rng: random.Random) -> RankResult:
    if characteristic:
        return rank_mod_p(matrix, characteristic)
    if certify == "exact":
        return rank_exact(matrix)
    if certify == "fast":
        if min(matrix.rows, matrix.cols) == 0:
            return RankResult(0, True, METHOD_MODULAR)
        p = _random_prime(rng, 1 << 22, 1 << 23)
        result = rank_mod_p(matrix, p)
        # A full modular rank still pins the rational rank; a deficit does not.
        certified = result.rank == min(matrix.rows, matrix.cols)
        return RankResult(result.rank, certified, METHOD_MODULAR)
    return rank_certified(matrix, rng=rng)


def wlp_check(g: Graph, characteristic: int = 0, *, spec: str = "",
              certify: str = "auto", seed: int | None = None,
              rng: random.Random | None = None,
              max_basis: int = DEFAULT_MAX_BASIS, threads: int = 1) -> WlpVerdict:
    """Decide the WLP of the algebra of g over the given characteristic.

    Ranks are certified per degree: modular full rank or an exact
    certificate in characteristic 0 (per the certify mode), plain GF(p)
    ranks in characteristic p.  Degrees whose basis would exceed max_basis
    raise BudgetExceededError instead of silently truncating.
    """
    _validate_characteristic(characteristic)
    if certify not in CERTIFY_MODES:
        raise ValueError(f"certify must be one of {CERTIFY_MODES}")
    rng = _make_rng(rng, seed)
    hilbert = indpoly_rec(g)
    too_big = [(k, c) for k, c in enumerate(hilbert.coeffs) if c > max_basis]
    if too_big:
        k, c = too_big[0]
        raise BudgetExceededError(
            f"degree {k} basis has {c} monomials, above the ceiling "
            f"{max_basis}; raise max_basis to override")
    socle = hilbert.degree
    bases = {k: degree_basis(g, k) for k in range(socle + 2)}
    for k in range(socle + 1):
        if len(bases[k]) != hilbert.coefficient(k):
            raise AssertionError("basis size disagrees with the independence polynomial")

    def rank_at(k: int) -> RankResult:
        matrix = lefschetz_matrix(g, k, bases)
        local = random.Random(rng.randrange(1 << 62) + k) if threads > 1 else rng
        return _rank_for(matrix, characteristic, certify, local)

    ks = list(range(socle + 1))
    if threads > 1:
        seeds = {k: rng.randrange(1 << 62) for k in ks}

        def task(k: int) -> RankResult:
            matrix = lefschetz_matrix(g, k, bases)
            return _rank_for(matrix, characteristic, certify, random.Random(seeds[k]))

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(task, ks))
    else:
        results = [rank_at(k) for k in ks]

    records = []
    for k, res in zip(ks, results):
        h_k = hilbert.coefficient(k)
        h_k1 = hilbert.coefficient(k + 1)
        records.append(DegreeRankRecord(
            k=k, h_k=h_k, h_k1=h_k1, rank=res.rank,
            injective_fail=res.rank < h_k,
            surjective_fail=res.rank < h_k1,
            method=res.method))
    has_wlp = all(r.max_rank for r in records)
    if not unimodality_report(hilbert).is_unimodal and has_wlp:
        raise AssertionError(
            "non-unimodal Hilbert series cannot carry the WLP; rank computation is inconsistent")
    return WlpVerdict(spec=spec, characteristic=characteristic, has_wlp=has_wlp,
                      socle_degree=socle, records=tuple(records),
                      certification=certify)


def hilbert_quotient(g: Graph, characteristic: int = 0, **options) -> IntPolynomial:
    """Hilbert series of the algebra modulo the Lefschetz linear form:
    coefficient k equals h_k minus the rank of the map into degree k."""
    verdict = wlp_check(g, characteristic, **options)
    coeffs = [1]
    for k in range(1, verdict.socle_degree + 1):
        coeffs.append(verdict.records[k].h_k - verdict.records[k - 1].rank)
    return IntPolynomial.from_coeffs(coeffs)


def tensor_failure_witness(g1: Graph, i: int, g2: Graph, j: int, kind: str,
                           characteristic: int = 0, **options) -> bool:
    """Confirm the tensor-product failure propagation on the disjoint union.

    If the degree-i map of g1's algebra and the degree-j map of g2's algebra
    both fail the given sense (surjective or injective), the union's algebra
    must fail the same sense at degree i+j+1 (surjective) or i+j (injective).
    Returns the confirmation outcome; vacuously True when the hypothesis on
    the factors does not hold.
    """
    if kind not in ("surjective", "injective"):
        raise ValueError("kind must be 'surjective' or 'injective'")
    v1 = wlp_check(g1, characteristic, **options)
    v2 = wlp_check(g2, characteristic, **options)
    if not (0 <= i <= v1.socle_degree and 0 <= j <= v2.socle_degree):
        raise ValueError("degrees must lie within the socle ranges")
    flag = (lambda r: r.surjective_fail) if kind == "surjective" else (lambda r: r.injective_fail)
    if not (flag(v1.records[i]) and flag(v2.records[j])):
        return True
    union = wlp_check(disjoint_union(g1, g2), characteristic, **options)
    target = i + j + 1 if kind == "surjective" else i + j
    return flag(union.records[target])


def injective_failure_certificate(g: Graph, k: int, *, seed: int | None = None,
                                  rng: random.Random | None = None):
    """Exact kernel spot-check: a verified integer kernel vector of the
    degree-k multiplication map (certifying the injectivity failure), or
    None when the map is certifiably injective."""
    matrix = lefschetz_matrix(g, k)
    return right_kernel_witness(matrix, seed=seed, rng=rng)
