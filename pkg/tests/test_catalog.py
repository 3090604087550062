import json

import pytest

from wlplab import (GraphSpecError, NotTabulatedError, asymptotic_surjectivity_claim,
                    catalog_json, closed_form, expected_failures, expected_wlp,
                    family_mode, mode_formula, path_injectivity_claim,
                    unimodality_report)
from wlplab.catalog import (INJECTIVE, SURJECTIVE, TABLE1, TABULATED_RANGE,
                            catalog_entries)


def test_expected_wlp_examples():
    assert expected_wlp("cycle", 17)
    assert not expected_wlp("pan", 11)
    assert expected_wlp("tadpole3", 7)


def test_expected_wlp_sets():
    assert [n for n in range(1, 18) if expected_wlp("path", n)] == \
        [1, 2, 3, 4, 5, 6, 7, 9, 10, 13]
    assert [n for n in range(3, 18) if expected_wlp("cycle", n)] == \
        [3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 17]
    assert [n for n in range(4, 17) if expected_wlp("ce", n)] == \
        [4, 5, 6, 7, 8, 10, 11, 14]
    assert [n for n in range(3, 17) if expected_wlp("pan", n)] == \
        [3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16]
    assert [n for n in range(1, 15) if expected_wlp("tadpole3", n)] == [1, 3, 4, 7]
    # the classification holds for every n in the domain, not only the table
    assert not expected_wlp("path", 100)
    assert not expected_wlp("cycle", 23)


def test_expected_wlp_domain_errors():
    with pytest.raises(GraphSpecError):
        expected_wlp("cycle", 2)
    with pytest.raises(GraphSpecError):
        expected_wlp("wheel", 5)


def test_expected_failures_examples():
    assert expected_failures("path", 8) == ((2, SURJECTIVE),)
    assert expected_failures("cycle", 16) == ((4, INJECTIVE),)
    assert expected_failures("path", 12) == ((3, INJECTIVE),)
    assert expected_failures("path", 9) == ()


def test_expected_failures_not_tabulated():
    with pytest.raises(NotTabulatedError):
        expected_failures("path", 18)
    with pytest.raises(NotTabulatedError):
        expected_failures("cycle", 21)


def test_tadpole_listing_includes_both_senses_for_14():
    failures = expected_failures("tadpole3", 14)
    rho = mode_formula("cycle", 17)
    assert (rho, SURJECTIVE) in failures
    assert (rho - 1, INJECTIVE) in failures


def test_asymptotic_claims():
    assert asymptotic_surjectivity_claim("path", 18) == (5, SURJECTIVE)
    assert asymptotic_surjectivity_claim("path", 16) == (4, INJECTIVE)
    rho21 = mode_formula("cycle", 21)
    assert asymptotic_surjectivity_claim("cycle", 21) == (rho21, SURJECTIVE)
    assert asymptotic_surjectivity_claim("ce", 25) == (family_mode("ce", 25), SURJECTIVE)
    deg, sense = asymptotic_surjectivity_claim("pan", 21)
    assert sense in (SURJECTIVE, INJECTIVE)
    with pytest.raises(GraphSpecError):
        asymptotic_surjectivity_claim("cycle", 20)


def test_path_injectivity_claim():
    assert path_injectivity_claim(12) == (3, INJECTIVE)
    assert path_injectivity_claim(16) == (4, INJECTIVE)
    assert path_injectivity_claim(20) == (5, INJECTIVE)
    with pytest.raises(GraphSpecError):
        path_injectivity_claim(13)  # mode does not step at 13
    with pytest.raises(GraphSpecError):
        path_injectivity_claim(11)


def test_table1_regeneration_from_closed_forms():
    domains = {"path": 1, "cycle": 3, "ce": 4, "pan": 3}
    for kind, row in TABLE1.items():
        for n in range(1, 14):
            if n < domains[kind]:
                with pytest.raises(GraphSpecError):
                    closed_form(kind, n)
                continue
            assert unimodality_report(closed_form(kind, n)).mode == row[n], (kind, n)
            if kind in ("path", "cycle"):
                assert mode_formula(kind, n) == row[n]


def test_family_mode_consistency():
    for n in range(4, 40):
        assert family_mode("ce", n) == unimodality_report(closed_form("ce", n)).mode
    for n in range(3, 40):
        assert family_mode("pan", n) == unimodality_report(closed_form("pan", n)).mode
    for n in range(1, 40):
        assert family_mode("tadpole3", n) == mode_formula("cycle", n + 3)


def test_catalog_entries_cover_tabulated_ranges():
    entries = list(catalog_entries())
    by_kind = {}
    for e in entries:
        by_kind.setdefault(e.kind, []).append(e.n)
        assert (e.expected_failures == ()) == e.expected_wlp
    for kind, (lo, hi) in TABULATED_RANGE.items():
        assert by_kind[kind] == list(range(lo, hi + 1))


def test_catalog_json_export():
    doc = json.loads(catalog_json())
    assert set(doc) == {"families", "entries", "modes_table"}
    assert doc["families"]["path"]["wlp_set"] == [1, 2, 3, 4, 5, 6, 7, 9, 10, 13]
    assert any(e["kind"] == "cycle" and e["n"] == 16 and
               e["expected_failures"] == [{"degree": 4, "sense": "injective"}]
               for e in doc["entries"])
