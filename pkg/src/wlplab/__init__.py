"""wlplab: weak Lefschetz property of graph artinian algebras.

Decides the WLP by exact rank computation of the multiplication maps by the
sum of the variables over the independent-set monomial basis, and reproduces
the classification results, mode tables, and polynomial identities for
paths, cycles, chorded cycles, pans, and triangle tadpoles.
"""

__version__ = "0.1.0"

from .graphs import (FamilySpec, Graph, GraphSpecError, delete_closed_neighborhood,
                     delete_vertex, disjoint_union, load_edge_list, make_family,
                     parse_edge_list, parse_family_spec, parse_spec)
from .indpoly import (IntPolynomial, UnimodalReport, closed_form, indpoly_enum,
                      indpoly_rec, mode_formula, unimodality_report)
from .linalg import (RankCertificationError, RankResult, SparseMatrix,
                     rank_certified, rank_exact, rank_mod_p, right_kernel_witness)
from .wlp import (BudgetExceededError, DegreeBasis, DegreeRankRecord, WlpVerdict,
                  degree_basis, hilbert_quotient, injective_failure_certificate,
                  lefschetz_matrix, tensor_failure_witness, wlp_check)
from .catalog import (ClassificationEntry, NotTabulatedError,
                      asymptotic_surjectivity_claim, catalog_json, expected_failures,
                      expected_wlp, family_mode, path_injectivity_claim)

__all__ = [
    "__version__",
    "FamilySpec", "Graph", "GraphSpecError", "delete_closed_neighborhood",
    "delete_vertex", "disjoint_union", "load_edge_list", "make_family",
    "parse_edge_list", "parse_family_spec", "parse_spec",
    "IntPolynomial", "UnimodalReport", "closed_form", "indpoly_enum",
    "indpoly_rec", "mode_formula", "unimodality_report",
    "RankCertificationError", "RankResult", "SparseMatrix", "rank_certified",
    "rank_exact", "rank_mod_p", "right_kernel_witness",
    "BudgetExceededError", "DegreeBasis", "DegreeRankRecord", "WlpVerdict",
    "degree_basis", "hilbert_quotient", "injective_failure_certificate",
    "lefschetz_matrix", "tensor_failure_witness", "wlp_check",
    "ClassificationEntry", "NotTabulatedError", "asymptotic_surjectivity_claim",
    "catalog_json", "expected_failures", "expected_wlp", "family_mode",
    "path_injectivity_claim",
]
