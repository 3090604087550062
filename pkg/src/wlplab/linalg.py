"""Exact rank of sparse 0/1 integer matrices over Q and over GF(p).

Three routes, combined by a certification policy:

  * rank_mod_p     -- dense row reduction over GF(p).  The GF(p) rank is a
                      lower bound for the rank over Q, so a full modular rank
                      pins the rational rank deterministically.
  * rank_exact     -- fraction-free (division-free at each step, dividing by
                      the previous pivot) elimination over Z.
  * rank_certified -- modular first; a full modular rank certifies
                      immediately, a deficit is pinned by integer kernel
                      vectors that are verified in exact arithmetic, with
                      integer elimination as the fallback.

The modular engine is tiered: a blocked float64 path (exact because all
intermediate products stay below 2**53) for large matrices and small primes,
a vectorized int64 path for primes below 2**31, and a plain Python-integer
path for larger primes.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

import gmpy2
import numpy as np

METHOD_MODULAR = "modular"
METHOD_EXACT = "exact-elimination"
METHOD_KERNEL = "kernel-certificate"

_BLOCK = 64
_BLOCK_PRIME_LIMIT = 1 << 23   # 64 * (p-1)^2 < 2^53 keeps float64 matmul exact
_INT64_PRIME_LIMIT = 1 << 31   # (p-1)^2 < 2^63 keeps int64 row updates exact
_PRIME_LIMIT = 1 << 63


class RankCertificationError(RuntimeError):
    """A rank could not be certified within the configured budget."""


@dataclass(frozen=True)
class SparseMatrix:
    """0/1 matrix stored as per-row sorted column-index tuples."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError("entry list length does not match row count")
        for i, row in enumerate(self.entries):
            prev = -1
            for c in row:
                if not 0 <= c < self.cols:
                    raise ValueError(f"row {i}: column {c} out of range")
                if c <= prev:
                    raise ValueError(f"row {i}: columns must be strictly increasing")
                prev = c

    @classmethod
    def from_rows(cls, rows: int, cols: int, row_lists) -> "SparseMatrix":
        return cls(rows, cols, tuple(tuple(sorted(set(r))) for r in row_lists))

    @classmethod
    def from_dense(cls, array) -> "SparseMatrix":
        a = np.asarray(array)
        if a.ndim != 2:
            raise ValueError("expected a 2-D array")
        if not np.isin(a, (0, 1)).all():
            raise ValueError("entries must be 0 or 1")
        return cls(a.shape[0], a.shape[1],
                   tuple(tuple(int(c) for c in np.nonzero(row)[0]) for row in a))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols, ((),) * rows)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, tuple((i,) for i in range(n)))

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.entries)

    def to_dense(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.rows, self.cols), dtype=dtype)
        one = 1.0 if dtype == np.float64 else 1
        for i, row in enumerate(self.entries):
            for c in row:
                a[i, c] = one
        return a

    def transpose(self) -> "SparseMatrix":
        cols = [[] for _ in range(self.cols)]
        for i, row in enumerate(self.entries):
            for c in row:
                cols[c].append(i)
        return SparseMatrix(self.cols, self.rows, tuple(tuple(c) for c in cols))

    def permute(self, row_perm=None, col_perm=None) -> "SparseMatrix":
        """Reindex: result[i][j] = self[row_perm[i]][col_perm[j]]."""
        rp = list(row_perm) if row_perm is not None else list(range(self.rows))
        if col_perm is not None:
            where = [0] * self.cols
            for new, old in enumerate(col_perm):
                where[old] = new
            rows = [sorted(where[c] for c in self.entries[r]) for r in rp]
        else:
            rows = [self.entries[r] for r in rp]
        return SparseMatrix(self.rows, self.cols, tuple(tuple(r) for r in rows))

    def mul_vector(self, v) -> list[int]:
        """Exact integer product A @ v (all stored entries are 1)."""
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum(v[c] for c in row) for row in self.entries]


@dataclass(frozen=True)
class RankResult:
    rank: int
    certified: bool
    method: str


# ---------------------------------------------------------------------------
# Primes
# ---------------------------------------------------------------------------

def is_prime(p: int) -> bool:
    return p >= 2 and bool(gmpy2.is_prime(p))


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not prime")
    if p >= _PRIME_LIMIT:
        raise ValueError(f"prime must be below 2**63, got {p}")


def _random_prime(rng: random.Random, lo: int, hi: int) -> int:
    while True:
        p = int(gmpy2.next_prime(rng.randrange(lo, hi)))
        if p < hi:
            return p


def _make_rng(rng, seed) -> random.Random:
    if rng is not None:
        return rng
    return random.Random(seed)


# ---------------------------------------------------------------------------
# Modular row echelon engines
# ---------------------------------------------------------------------------

def _ref_rows(a: np.ndarray, p: int) -> tuple[int, list[int]]:
    """In-place row echelon mod p with unit pivots.  Works for int64 arrays
    with p < 2**31 and for object arrays with any prime."""
    m, n = a.shape
    r = 0
    pivots = []
    for c in range(n):
        below = a[r:, c]
        nz = np.nonzero(below)[0]
        if nz.size == 0:
            continue
        src = r + int(nz[0])
        if src != r:
            a[[r, src]] = a[[src, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        sel = np.nonzero(a[r + 1:, c])[0]
        if sel.size:
            idx = r + 1 + sel
            f = a[idx, c][:, None]
            a[idx] = (a[idx] - f * a[r][None, :]) % p
        pivots.append(c)
        r += 1
        if r == m:
            break
    return r, pivots


def _ref_blocked(a: np.ndarray, p: int) -> tuple[int, list[int]]:
    """Blocked row echelon mod p on a float64 array; trailing updates run as
    BLAS matmuls.  Exact for p < 2**23 since every intermediate value stays
    below 2**53."""
    m, n = a.shape
    r = 0
    pivots = []
    c0 = 0
    while c0 < n and r < m:
        c1 = min(c0 + _BLOCK, n)
        L = np.zeros((m - r, c1 - c0))
        invs = []
        k = 0
        for c in range(c0, c1):
            col = a[r + k:, c]
            nz = np.nonzero(col)[0]
            if nz.size == 0:
                continue
            src = r + k + int(nz[0])
            if src != r + k:
                a[[r + k, src]] = a[[src, r + k]]
                L[[k, src - r]] = L[[src - r, k]]
            inv = float(pow(int(a[r + k, c]), -1, p))
            a[r + k, c:c1] = np.mod(a[r + k, c:c1] * inv, p)
            sel = np.nonzero(a[r + k + 1:, c])[0]
            if sel.size:
                idx = r + k + 1 + sel
                f = a[idx, c].copy()
                a[idx, c:c1] = np.mod(a[idx, c:c1] - f[:, None] * a[r + k, c:c1][None, :], p)
                L[idx - r, k] = f
            invs.append(inv)
            pivots.append(c)
            k += 1
        if k and c1 < n:
            # Pivot rows first: unit-lower solve in sequence, then scale.
            for t in range(k):
                if t:
                    acc = L[t, :t] @ a[r:r + t, c1:]
                    a[r + t, c1:] = np.mod(a[r + t, c1:] - acc, p)
                a[r + t, c1:] = np.mod(a[r + t, c1:] * invs[t], p)
            if r + k < m:
                acc = L[k:, :k] @ a[r:r + k, c1:]
                a[r + k:, c1:] = np.mod(a[r + k:, c1:] - acc, p)
        r += k
        c0 = c1
    return r, pivots


def _echelon_mod_p(m: SparseMatrix, p: int):
    """Row echelon of m mod p.  Returns (rank, pivot columns, echelon array);
    the array has unit pivots and is suitable for kernel back-substitution."""
    if m.rows == 0 or m.cols == 0:
        return 0, [], np.zeros((m.rows, m.cols), dtype=np.int64)
    if p < _BLOCK_PRIME_LIMIT and min(m.rows, m.cols) >= 128:
        a = m.to_dense(np.float64)
        rank, pivots = _ref_blocked(a, p)
    elif p < _INT64_PRIME_LIMIT:
        a = m.to_dense(np.int64)
        rank, pivots = _ref_rows(a, p)
    else:
        a = m.to_dense(object)
        rank, pivots = _ref_rows(a, p)
    return rank, pivots, a


def rank_mod_p(m: SparseMatrix, p: int) -> RankResult:
    """Rank over GF(p) by dense row reduction.  Always certified as a GF(p)
    result; rank_certified applies the characteristic-0 reading."""
    _check_prime(p)
    rank, _, _ = _echelon_mod_p(m, p)
    return RankResult(rank, True, METHOD_MODULAR)


# ---------------------------------------------------------------------------
# Fraction-free exact elimination
# ---------------------------------------------------------------------------

def rank_exact(m: SparseMatrix) -> RankResult:
    """Rank over Q by fraction-free elimination with Python integers.

    Rows are sorted sparsest-first before elimination to limit entry swell;
    pivoting is deterministic: the first remaining row with a nonzero entry,
    and within it the smallest nonzero column.
    """
    n = m.cols
    dense = []
    for row in m.entries:
        r = [0] * n
        for c in row:
            r[c] = 1
        dense.append((len(row), r))
    dense.sort(key=lambda t: t[0])
    active = [r for _, r in dense]
    prev = 1
    rank = 0
    limit = min(m.rows, m.cols)
    while active and rank < limit:
        pr = pc = None
        for i, row in enumerate(active):
            for j, x in enumerate(row):
                if x:
                    pr, pc = i, j
                    break
            if pr is not None:
                break
        if pr is None:
            break
        pivot_row = active.pop(pr)
        pivot = pivot_row[pc]
        updated = []
        for row in active:
            f = row[pc]
            updated.append([(pivot * row[j] - f * pivot_row[j]) // prev for j in range(n)])
        active = updated
        prev = pivot
        rank += 1
    return RankResult(rank, True, METHOD_EXACT)


# ---------------------------------------------------------------------------
# Kernel certificates
# ---------------------------------------------------------------------------

def _kernel_vectors_mod_p(a: np.ndarray, rank: int, pivots: list[int], p: int,
                          free_cols) -> list[list[int]]:
    """Back-substitute kernel vectors mod p from a unit-pivot echelon array,
    one per requested free column (that column's coordinate set to 1)."""
    n = a.shape[1]
    if a.dtype == object:
        u = a[:rank]
        use_numpy = False
    else:
        if p >= _BLOCK_PRIME_LIMIT:
            raise AssertionError("kernel back-substitution requires p < 2**23")
        u = a[:rank].astype(np.int64)
        use_numpy = True
    out = []
    for f in free_cols:
        x = np.zeros(n, dtype=np.int64 if use_numpy else object)
        x[f] = 1
        for t in range(rank - 1, -1, -1):
            c = pivots[t]
            if c > f:
                continue
            if use_numpy:
                s = int(np.dot(u[t, c + 1:], x[c + 1:])) % p
            else:
                s = sum(int(u[t, j]) * int(x[j]) for j in range(c + 1, n)) % p
            x[c] = (-s) % p
        out.append([int(v) for v in x])
    return out


def _crt(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    t = ((r2 - r1) * pow(m1 % m2, -1, m2)) % m2
    return r1 + m1 * t, m1 * m2


def _rat_reconstruct(u: int, m: int):
    """Wang rational reconstruction of u mod m; returns (num, den) with
    |num|, den <= sqrt(m/2), or None."""
    u %= m
    if u == 0:
        return (0, 1)
    bound = math.isqrt(m // 2)
    r0, r1 = m, u
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    a, b = r1, s1
    if b < 0:
        a, b = -a, -b
    if math.gcd(a, b) != 1:
        return None
    return (a, b)


def _reconstruct_integer_vector(residues: list[int], modulus: int):
    """Lift residues mod `modulus` to a primitive integer vector, or None."""
    fractions = []
    for u in residues:
        f = _rat_reconstruct(u, modulus)
        if f is None:
            return None
        fractions.append(f)
    scale = math.lcm(*(b for _, b in fractions)) if fractions else 1
    vec = [a * (scale // b) for a, b in fractions]
    g = 0
    for v in vec:
        g = math.gcd(g, v)
    if g > 1:
        vec = [v // g for v in vec]
    return vec


def _verify_kernel(A: SparseMatrix, vec: list[int]) -> bool:
    return any(vec) and all(s == 0 for s in A.mul_vector(vec))


def _kernel_certificate(A: SparseMatrix, rng: random.Random, max_primes: int,
                        want_vectors: bool = False):
    """Pin the rank of A by exhibiting verified integer right-kernel vectors.

    Returns (rank, vectors) on success, 'full' if some prime shows full rank,
    or None if the prime budget runs out.
    """
    mindim = min(A.rows, A.cols)
    best = None
    for _ in range(max_primes):
        p = _random_prime(rng, 1 << 22, 1 << 23)
        rank, pivots, ref = _echelon_mod_p(A, p)
        if rank == mindim:
            return "full"
        key = (rank, tuple(pivots))
        free_cols = [c for c in range(A.cols) if c not in set(pivots)]
        residues = _kernel_vectors_mod_p(ref, rank, pivots, p, free_cols)
        if best is None or rank > best["rank"]:
            best = {"rank": rank, "pivots": tuple(pivots), "mod": p,
                    "residues": residues}
        elif key == (best["rank"], best["pivots"]):
            combined = []
            for old, new in zip(best["residues"], residues):
                combined.append([
                    _crt(o, best["mod"], v, p)[0] for o, v in zip(old, new)
                ])
            best["residues"] = combined
            best["mod"] *= p
        else:
            continue
        vectors = []
        ok = True
        for residue_vec in best["residues"]:
            vec = _reconstruct_integer_vector(residue_vec, best["mod"])
            if vec is None or not _verify_kernel(A, vec):
                ok = False
                break
            vectors.append(vec)
        if ok:
            # rank(A) >= best over GF(p); the verified kernel vectors are
            # independent (unit support on distinct free columns), so
            # null(A) >= cols - rank and the rank is pinned exactly.
            return (best["rank"], vectors if want_vectors else None)
    return None


def rank_certified(m: SparseMatrix, *, rng: random.Random | None = None,
                   seed: int | None = None, max_primes: int = 12) -> RankResult:
    """Certified rank over Q.

    A random-prime modular pass that comes back full rank is already a
    certificate.  A deficit escalates to the kernel-certificate route, and
    to fraction-free integer elimination if that fails to reconstruct.
    """
    mindim = min(m.rows, m.cols)
    if mindim == 0:
        return RankResult(0, True, METHOD_MODULAR)
    rng = _make_rng(rng, seed)
    if max(m.rows, m.cols) <= 64:
        p = _random_prime(rng, 1 << 61, 1 << 62)
    else:
        p = _random_prime(rng, 1 << 22, 1 << 23)
    rank, _, _ = _echelon_mod_p(m, p)
    if rank == mindim:
        return RankResult(rank, True, METHOD_MODULAR)
    oriented = m if m.cols <= m.rows else m.transpose()
    outcome = _kernel_certificate(oriented, rng, max_primes)
    if outcome == "full":
        return RankResult(mindim, True, METHOD_MODULAR)
    if outcome is not None:
        return RankResult(outcome[0], True, METHOD_KERNEL)
    return rank_exact(m)


def right_kernel_witness(m: SparseMatrix, *, rng: random.Random | None = None,
                         seed: int | None = None, max_primes: int = 12):
    """One verified integer vector v != 0 with m @ v = 0, certifying that the
    rank is below the column count; None when m is certifiably injective."""
    if m.cols == 0:
        return None
    rng = _make_rng(rng, seed)
    best = None
    for _ in range(max_primes):
        p = _random_prime(rng, 1 << 22, 1 << 23)
        rank, pivots, ref = _echelon_mod_p(m, p)
        if rank == m.cols:
            return None
        key = (rank, tuple(pivots))
        free = next(c for c in range(m.cols) if c not in set(pivots))
        residues = _kernel_vectors_mod_p(ref, rank, pivots, p, [free])[0]
        if best is None or rank > best["rank"]:
            best = {"rank": rank, "pivots": tuple(pivots), "mod": p,
                    "residues": residues}
        elif key == (best["rank"], best["pivots"]):
            best["residues"] = [
                _crt(o, best["mod"], v, p)[0]
                for o, v in zip(best["residues"], residues)
            ]
            best["mod"] *= p
        else:
            continue
        vec = _reconstruct_integer_vector(best["residues"], best["mod"])
        if vec is not None and _verify_kernel(m, vec):
            return vec
    raise RankCertificationError(
        f"no kernel vector reconstructed within {max_primes} primes")
