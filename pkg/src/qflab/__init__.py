"""Exact representation numbers of positive definite integral quadratic
forms: lattice-point counting, Watson-type transforms, eta quotients and
the strong square-regularity property."""

from .arith import (Factorization, SquareSplit, factorize, good_prime_ratio,
                    h_factor, kronecker, local_density_good, square_split,
                    valuation)
from .cache import cache_theta, make_cache, resolve_cache_dir
from .forms import (CongruenceSystem, QuadForm, congruence_sublattice,
                    parse_form, sublattice_index)
from .lattices import (GENUS_PAIRS, CLASSIFICATION_TABLE, GenusPair, ClassificationEntry,
                       all_bundled_forms, classification_failing, classification_passing)
from .qseries import (EtaQuotient, LEVEL120_QUOTIENTS, QSeries, cusp_orders,
                      divisor_character_sum, eta_expansion,
                      eta_quotient_expansion, quotient_coefficient,
                      newman_check, series_mul, sturm_bound, theta_qseries,
                      unary_theta_identities)
from .reduction import canonical_form, is_isometric, minkowski_reduce
from .regularity import (RegularityReport, check_indistinguishable,
                         hecke_square_recursion_check, is_strongly_s_regular,
                         m_s, genus_pair_identity_check,
                         theta_difference_vs_quotients)
from .search import SearchConfig, SearchFilters, search_diagonal
from .theta import (RepQuery, represent_count, short_vectors, theta_coeffs,
                    vectors_with_value)
from .transforms import (JordanSymbolOdd, gamma_sublattices,
                         jordan_symbol_odd, lambda_composite,
                         lambda_transform, sublattice_on_basis,
                         watson_sublattice)
from .verify import run_lemma54, run_props, run_table1

__version__ = "0.1.0"

__all__ = [
    "CongruenceSystem", "EtaQuotient", "Factorization", "GENUS_PAIRS",
    "GenusPair", "JordanSymbolOdd", "LEVEL120_QUOTIENTS", "QSeries",
    "QuadForm", "RegularityReport", "RepQuery", "SearchConfig",
    "SearchFilters", "SquareSplit", "CLASSIFICATION_TABLE", "ClassificationEntry",
    "all_bundled_forms", "cache_theta", "canonical_form",
    "check_indistinguishable", "congruence_sublattice", "cusp_orders",
    "divisor_character_sum", "eta_expansion", "eta_quotient_expansion",
    "factorize", "gamma_sublattices", "good_prime_ratio",
    "h_factor", "hecke_square_recursion_check", "is_isometric",
    "is_strongly_s_regular", "jordan_symbol_odd", "kronecker",
    "lambda_composite", "lambda_transform", "quotient_coefficient",
    "local_density_good", "m_s", "make_cache", "minkowski_reduce",
    "newman_check", "parse_form", "genus_pair_identity_check",
    "represent_count", "resolve_cache_dir", "run_lemma54", "run_props",
    "run_table1", "search_diagonal", "series_mul", "short_vectors",
    "square_split", "sturm_bound", "sublattice_index",
    "sublattice_on_basis", "classification_failing", "classification_passing",
    "theta_coeffs", "theta_difference_vs_quotients", "theta_qseries",
    "unary_theta_identities", "valuation", "vectors_with_value",
    "watson_sublattice",
]
