"""Independence polynomials and their unimodality analysis.

Three independent routes to I(G;t):

  * indpoly_enum  -- backtracking that visits every independent set (oracle).
  * indpoly_rec   -- vertex-deletion recurrence with component splitting and
                     memoization; same output, practical for larger graphs.
  * closed_form   -- binomial closed forms for paths, cycles, cycles with a
                     chord, pans, and the bipartite non-unimodal family.

Coefficients are exact arbitrary-precision integers throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graphs import Graph, GraphSpecError


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial with nonnegative integer coefficients, index = degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("coefficient list must be nonempty")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("coefficients must be nonnegative")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero (use from_coeffs)")

    @classmethod
    def from_coeffs(cls, coeffs) -> "IntPolynomial":
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs) if cs else (0,))

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(_convolve(self.coeffs, other.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_coeffs(_add(self.coeffs, other.coeffs))

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t**k."""
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def to_strings(self) -> list[str]:
        """Serialized form: decimal strings, lowest degree first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items) -> "IntPolynomial":
        return cls.from_coeffs(int(s) for s in items)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0 and len(self.coeffs) > 1:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                base = "t" if k == 1 else f"t^{k}"
                terms.append(base if c == 1 else f"{c}{base}")
        return " + ".join(terms)


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _add(a, b):
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
        for i in range(n)
    ]


# ---------------------------------------------------------------------------
# Enumeration oracle
# ---------------------------------------------------------------------------

def indpoly_enum(g: Graph) -> IntPolynomial:
    """Count independent sets by size, visiting each set once.

    Exponential in the worst case; meant as the ground-truth oracle for
    graphs up to roughly 40 vertices.
    """
    counts = [0] * (g.n + 1)
    adj = g.adj

    def visit(avail: int, size: int) -> None:
        counts[size] += 1
        rest = avail
        while rest:
            low = rest & -rest
            rest ^= low
            visit(rest & ~adj[low.bit_length() - 1], size + 1)

    visit(g.full_mask, 0)
    return IntPolynomial.from_coeffs(counts)


# ---------------------------------------------------------------------------
# Vertex-deletion recurrence
# ---------------------------------------------------------------------------

def indpoly_rec(g: Graph) -> IntPolynomial:
    """I(G;t) via I(G;t) = I(G-w;t) + t*I(G-N[w];t), multiplying over
    connected components and memoizing on relabeled induced subgraphs.

    The pivot w is a vertex of maximum degree (smallest label on ties); the
    recursion bottoms out at the empty graph on zero vertices, whose
    polynomial is 1.
    """
    adj = g.adj
    memo: dict[tuple[int, ...], tuple[int, ...]] = {}

    def components(mask: int):
        comps = []
        rest = mask
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                grown = comp
                m = frontier
                while m:
                    low = m & -m
                    m ^= low
                    grown |= adj[low.bit_length() - 1] & mask
                frontier = grown & ~comp
                comp = grown
            comps.append(comp)
            rest &= ~comp
        return comps

    def canonical_key(mask: int) -> tuple[int, ...]:
        # Relabeled adjacency rows in vertex order: an injective encoding of
        # the labeled induced subgraph (isomorphism canonization would be
        # overkill here).
        bits = []
        m = mask
        while m:
            low = m & -m
            m ^= low
            bits.append(low.bit_length() - 1)
        index = {b: i for i, b in enumerate(bits)}
        rows = []
        for b in bits:
            row = 0
            m = adj[b] & mask
            while m:
                low = m & -m
                m ^= low
                row |= 1 << index[low.bit_length() - 1]
            rows.append(row)
        return tuple(rows)

    def poly_of(mask: int) -> tuple[int, ...]:
        if mask == 0:
            return (1,)
        result = (1,)
        for comp in components(mask):
            result = _convolve(result, component_poly(comp))
        return result

    def component_poly(mask: int) -> tuple[int, ...]:
        if mask & (mask - 1) == 0:
            return (1, 1)  # isolated vertex
        key = canonical_key(mask)
        hit = memo.get(key)
        if hit is not None:
            return hit
        best_v, best_deg = -1, -1
        m = mask
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            deg = (adj[v] & mask).bit_count()
            if deg > best_deg:
                best_v, best_deg = v, deg
        without = poly_of(mask & ~(1 << best_v))
        closed = poly_of(mask & ~(adj[best_v] | 1 << best_v))
        value = tuple(_add(without, (0,) + closed))
        memo[key] = value
        return value

    return IntPolynomial.from_coeffs(poly_of(g.full_mask))


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

CLOSED_FORM_KINDS = ("path", "cycle", "ce", "pan", "bk")


def closed_form(kind: str, *params: int) -> IntPolynomial:
    """Binomial closed form of I(G;t) for the supported families.

    path n>=1:   sum_i C(n+1-i, i) t^i
    cycle n>=3:  1 + sum_{i>=1} (n/i) C(n-i-1, i-1) t^i
    ce n>=4:     sum_i [C(n-i, i) + C(n-i-2, i-1)] t^i
    pan n>=3:    sum_i [C(n-i, i) + C(n-i-1, i-1) + C(n-i+1, i-1)] t^i
    bk (m, n):   sum_i [(2^i - 1) C(m, i) + C(n, i)] t^i  for 1 <= m < n
    """
    if kind == "path":
        (n,) = _check_params(kind, params, 1)
        if n < 1:
            raise GraphSpecError(f"path closed form requires n >= 1, got {n}")
        return IntPolynomial.from_coeffs(
            comb(n + 1 - i, i) for i in range(n // 2 + 2)
        )
    if kind == "cycle":
        (n,) = _check_params(kind, params, 1)
        if n < 3:
            raise GraphSpecError(f"cycle closed form requires n >= 3, got {n}")
        coeffs = [1]
        for i in range(1, n // 2 + 1):
            num = n * comb(n - i - 1, i - 1)
            q, r = divmod(num, i)
            if r:
                raise AssertionError("cycle coefficient is not integral")
            coeffs.append(q)
        return IntPolynomial.from_coeffs(coeffs)
    if kind == "ce":
        (n,) = _check_params(kind, params, 1)
        if n < 4:
            raise GraphSpecError(f"ce closed form requires n >= 4, got {n}")
        return IntPolynomial.from_coeffs(
            _comb0(n - i, i) + _comb0(n - i - 2, i - 1) for i in range(n // 2 + 1)
        )
    if kind == "pan":
        (n,) = _check_params(kind, params, 1)
        if n < 3:
            raise GraphSpecError(f"pan closed form requires n >= 3, got {n}")
        return IntPolynomial.from_coeffs(
            _comb0(n - i, i) + _comb0(n - i - 1, i - 1) + _comb0(n - i + 1, i - 1)
            for i in range(n // 2 + 2)
        )
    if kind == "bk":
        m, n = _check_params(kind, params, 2)
        if not (m >= 1 and n > m):
            raise GraphSpecError(f"bk closed form requires 1 <= m < n, got m={m}, n={n}")
        return IntPolynomial.from_coeffs(
            ((1 << i) - 1) * comb(m, i) + comb(n, i) for i in range(n + 1)
        )
    raise GraphSpecError(f"no closed form for kind {kind!r}")


def _check_params(kind, params, count):
    if len(params) == 1 and isinstance(params[0], (tuple, list)):
        params = tuple(params[0])
    if len(params) != count:
        raise GraphSpecError(f"{kind} closed form expects {count} parameter(s)")
    return tuple(int(p) for p in params)


def _comb0(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


# ---------------------------------------------------------------------------
# Unimodality and modes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnimodalReport:
    """Unimodality flag and, when unimodal, the mode: the unique index i with
    a_{i-1} < a_i >= a_{i+1} >= ... >= a_n (taking a_{-1} = 0)."""

    is_unimodal: bool
    mode: int | None

    def __post_init__(self):
        if self.is_unimodal != (self.mode is not None):
            raise ValueError("mode must be present exactly when unimodal")


def unimodality_report(p: IntPolynomial) -> UnimodalReport:
    cs = p.coeffs
    peak = cs.index(max(cs))
    rises = all(cs[i] <= cs[i + 1] for i in range(peak))
    falls = all(cs[i] >= cs[i + 1] for i in range(peak, len(cs) - 1))
    if rises and falls:
        return UnimodalReport(True, peak)
    return UnimodalReport(False, None)


def mode_formula(kind: str, n: int) -> int:
    """Mode of I(P_n;t) or I(C_n;t) by the integer quadratic characterization.

    path:   min i >= 0 with 5i^2 - (5n+2)i + n^2 - 1 <= 0
    cycle:  min i >= 1 with 5i^2 - (5n-4)i + (n-1)^2 <= 0

    Equivalent to ceil((5n+2-sqrt(5n^2+20n+24))/10) for paths and
    ceil((5n-4-sqrt(5n^2-4))/10) for cycles, but exact: the discriminants
    are occasionally perfect squares, so floating point is avoided entirely.
    """
    if kind == "path":
        if n < 1:
            raise GraphSpecError(f"path mode requires n >= 1, got {n}")
        for i in range(n + 2):
            if 5 * i * i - (5 * n + 2) * i + n * n - 1 <= 0:
                return i
    elif kind == "cycle":
        if n < 3:
            raise GraphSpecError(f"cycle mode requires n >= 3, got {n}")
        for i in range(1, n + 2):
            if 5 * i * i - (5 * n - 4) * i + (n - 1) * (n - 1) <= 0:
                return i
    else:
        raise GraphSpecError(f"mode formula covers path and cycle, not {kind!r}")
    raise AssertionError("quadratic inequality had no admissible solution")
