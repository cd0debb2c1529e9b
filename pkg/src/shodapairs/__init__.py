"""Extremely strong and strong Shoda pairs of finite permutation groups, and the
primitive central idempotents of Q[G] they realise."""

__version__ = "0.1.0"

from .algebra import AlgebraElement, Idempotent, dim_direct, dim_formula, e_of, epsilon, hat
from .builders import builtin_group, parse_group_file
from .errors import GroupSizeError, ParseError, ShodaError
from .group import FiniteGroup, Quotient, Subgroup
from .perm import Permutation
from .search import (SearchOptions, SearchReport, ShodaPair, compute_S_N,
                     direct_strong_shoda_pairs, ext_strong_shoda_pairs, is_normally_monomial,
                     is_strong_shoda_pair, is_strongly_monomial, pcis_by_essp, pcis_by_ssp,
                     strong_shoda_pairs)

__all__ = [
    "AlgebraElement", "FiniteGroup", "GroupSizeError", "Idempotent", "ParseError",
    "Permutation", "Quotient", "SearchOptions", "SearchReport", "ShodaError", "ShodaPair",
    "Subgroup", "builtin_group", "compute_S_N", "dim_direct", "dim_formula",
    "direct_strong_shoda_pairs", "e_of", "epsilon", "ext_strong_shoda_pairs", "hat",
    "is_normally_monomial", "is_strong_shoda_pair", "is_strongly_monomial", "parse_group_file",
    "pcis_by_essp", "pcis_by_ssp", "strong_shoda_pairs",
]
