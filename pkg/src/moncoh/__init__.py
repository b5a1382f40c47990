"""Exact multigraded Ext, Tor and local cohomology for monomial ideals."""

from .monomial import (
    InputError, PolynomialRingSpec, MonomialIdeal, SimplicialComplex,
    minimalize, ideal_from_json, bracket_power, radical, is_squarefree,
    stanley_reisner, complex_of, alexander_dual, all_complexes,
)
from .linalg import (
    ComplexError, FieldSpec, ExactMatrix, FiniteComplex, ChainMap,
    rank, rref, kernel_basis, image_basis, solve, cohomology_dim,
    induced_map_on_cohomology, induced_rank,
)
from .complexes import (
    GradedFreeComplex, GradedChainMap, CechComplexSpec, Chamber, ChamberGrid,
    taylor_complex, dual_complex, frobenius_functor, comparison_chain_map,
    tensor_product, strand_at, cech_strand, chamber_grid,
)
from .cohomology import (
    CohomologyTable, ext_table, ext_tables, hm_table, ha_table, tor_table,
    hochster_table, depth, ext_chain_map, ha_stabilization, compare_tables,
    local_duality_mismatches,
)
from .lab import (
    Verdict, PowerEndomorphism, HypothesisWarning,
    check_injectivity_chain, check_depth_injectivity, check_purity_splitting,
    check_rspan_surjectivity, check_vanishing_criterion, check_vanishing_equivalence,
    check_ext_tor, check_example_3_2, check_phi_ext_iso, phi_action,
)
from .corpus import CorpusSpec, build_corpus, random_corpus, squarefree_corpus, write_corpus

__version__ = "0.1.0"
