import json
import random

import pytest

from wlplab import (FamilySpec, Graph, GraphSpecError, IntPolynomial, closed_form,
                    disjoint_union, indpoly_enum, indpoly_rec, make_family,
                    mode_formula, parse_spec, unimodality_report)

from conftest import random_graph


def poly(*coeffs):
    return IntPolynomial.from_coeffs(coeffs)


# ---------------------------------------------------------------------------
# Enumeration oracle
# ---------------------------------------------------------------------------

def test_enum_known_polynomials():
    assert indpoly_enum(parse_spec("empty:3")) == poly(1, 3, 3, 1)
    assert indpoly_enum(parse_spec("complete:4")) == poly(1, 4)
    assert indpoly_enum(parse_spec("path:3")) == poly(1, 3, 1)


def test_enum_zero_vertex_graph():
    assert indpoly_enum(Graph(0, ())) == IntPolynomial.one()


def test_enum_degree_is_independence_number():
    assert indpoly_enum(parse_spec("cycle:8")).degree == 4
    assert indpoly_enum(parse_spec("complete:9")).degree == 1


# ---------------------------------------------------------------------------
# Recurrence
# ---------------------------------------------------------------------------

def test_rec_examples():
    assert indpoly_rec(parse_spec("cycle:6")) == poly(1, 6, 9, 2)
    assert indpoly_rec(parse_spec("path:6")) == poly(1, 6, 10, 4)
    assert indpoly_rec(parse_spec("union(complete:2,complete:2)")) == poly(1, 4, 4)


def test_rec_equals_enum_on_random_graphs():
    rng = random.Random(11)
    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 10), rng.random())
        assert indpoly_rec(g) == indpoly_enum(g)


def test_rec_handles_larger_structured_graphs():
    # enumeration would be painful here; the closed form cross-checks it
    assert indpoly_rec(parse_spec("path:60")) == closed_form("path", 60)
    assert indpoly_rec(parse_spec("cycle:60")) == closed_form("cycle", 60)


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def test_closed_form_examples():
    p6 = closed_form("path", 6)
    assert p6 == poly(1, 6, 10, 4)
    assert p6(1) == 21  # Fibonacci number F_8
    assert closed_form("ce", 6) == poly(1, 6, 8, 1)
    assert closed_form("pan", 6) == poly(1, 7, 14, 8, 1)


@pytest.mark.parametrize("kind,lo", [("path", 1), ("cycle", 3), ("ce", 4), ("pan", 3)])
def test_closed_forms_match_oracle(kind, lo):
    for n in range(lo, 13):
        g = make_family(FamilySpec(kind, (n,)))
        assert closed_form(kind, n) == indpoly_enum(g), (kind, n)


def test_bk_closed_form_matches_oracle():
    for n in range(2, 8):
        for m in range(1, n):
            g = make_family(FamilySpec("bk", (m, n)))
            assert closed_form("bk", m, n) == indpoly_enum(g), (m, n)


def test_closed_form_bad_parameters():
    for kind, params in [("path", (0,)), ("cycle", (2,)), ("ce", (3,)),
                         ("pan", (2,)), ("bk", (3, 3)), ("nope", (4,))]:
        with pytest.raises(GraphSpecError):
            closed_form(kind, *params)


# ---------------------------------------------------------------------------
# Decomposition identities
# ---------------------------------------------------------------------------

def test_path_fibonacci_recurrence():
    for n in range(3, 61):
        assert closed_form("path", n) == \
            closed_form("path", n - 1) + closed_form("path", n - 2).shift(1)


def test_cycle_and_ce_decompositions():
    for n in range(5, 61):
        pn1 = closed_form("path", n - 1)
        assert closed_form("cycle", n) == pn1 + closed_form("path", n - 3).shift(1)
        assert closed_form("ce", n) == pn1 + closed_form("path", n - 4).shift(1)


def test_pan_decomposition():
    for n in range(3, 61):
        assert closed_form("pan", n) == \
            closed_form("cycle", n) + closed_form("path", n - 1).shift(1)


def test_tadpole_polynomial_equals_cycle():
    for n in range(1, 41):
        g = make_family(FamilySpec("tadpole3", (n,)))
        assert indpoly_rec(g) == closed_form("cycle", n + 3), n


def test_product_rule_on_random_pairs():
    rng = random.Random(23)
    for _ in range(40):
        g1 = random_graph(rng, rng.randint(0, 6))
        g2 = random_graph(rng, rng.randint(0, 6))
        assert indpoly_rec(disjoint_union(g1, g2)) == indpoly_rec(g1) * indpoly_rec(g2)


def test_constant_term_is_one():
    rng = random.Random(3)
    for _ in range(30):
        g = random_graph(rng, rng.randint(0, 9))
        assert indpoly_rec(g).coefficient(0) == 1


# ---------------------------------------------------------------------------
# Unimodality and modes
# ---------------------------------------------------------------------------

def test_unimodality_examples():
    r = unimodality_report(poly(1, 2, 2, 1))
    assert r.is_unimodal and r.mode == 1
    r = unimodality_report(poly(1, 2, 1, 2))
    assert not r.is_unimodal and r.mode is None
    r = unimodality_report(poly(1, 2, 2, 3))
    assert r.is_unimodal and r.mode == 3


def test_bk_large_instances():
    # The n = ceil(m log2 3) member dips; the floor variant at m = 95 does not.
    assert not unimodality_report(closed_form("bk", 95, 151)).is_unimodal
    assert unimodality_report(closed_form("bk", 95, 150)).is_unimodal


def test_mode_formula_examples():
    assert mode_formula("path", 13) == 4
    assert mode_formula("cycle", 12) == 3
    assert mode_formula("path", 1) == 0
    with pytest.raises(GraphSpecError):
        mode_formula("path", 0)
    with pytest.raises(GraphSpecError):
        mode_formula("cycle", 2)


def test_mode_formula_matches_computed_mode():
    for n in range(1, 201):
        assert mode_formula("path", n) == unimodality_report(closed_form("path", n)).mode
    for n in range(3, 201):
        assert mode_formula("cycle", n) == unimodality_report(closed_form("cycle", n)).mode


def test_mode_lemma_sweeps():
    lam = lambda n: mode_formula("path", n)
    rho = lambda n: mode_formula("cycle", n)
    for n in range(1, 201):
        assert lam(n + 1) >= lam(n)
        assert lam(n + 3) - 1 <= lam(n) <= lam(n + 4) - 1
        assert lam(n + 11) >= lam(n) + 3
    for n in range(5, 201):
        assert lam(n - 1) <= rho(n) <= lam(n - 4) + 1 <= lam(n)


# ---------------------------------------------------------------------------
# Polynomial type
# ---------------------------------------------------------------------------

def test_serialization_decimal_strings():
    p = closed_form("bk", 20, 40)
    items = p.to_strings()
    assert all(isinstance(s, str) for s in items)
    assert IntPolynomial.from_strings(json.loads(json.dumps(items))) == p


def test_polynomial_normalization_and_validation():
    assert IntPolynomial.from_coeffs([1, 2, 0, 0]) == poly(1, 2)
    with pytest.raises(ValueError):
        IntPolynomial((1, -1))
    with pytest.raises(ValueError):
        IntPolynomial(())


def test_polynomial_str():
    assert str(closed_form("path", 6)) == "1 + 6t + 10t^2 + 4t^3"
    assert str(IntPolynomial.one()) == "1"
    assert str(poly(1, 1)) == "1 + t"
