"""Exact spiral, orbit and block combinatorics for cyclic and symplectic quivers.

The building blocks are graded spaces ``V = V_0 + ... + V_{m-1}`` and the
homogeneous pieces ``g_i`` of ``sl(V)`` (or ``sp(V)``). Graded nilpotents are
classified by chain types; rational cocharacters cut out spirals. The block
modules sort orbit pairs into blocks through ``psi`` and its section ``omega``.

All arithmetic is exact over Q (or a small prime field for the brute-force oracle).
"""

from .blocks import (BlockTriple, ConstraintViolation, admissible_grading_for_block,
                     block_representative, blocks_json, blocks_tsv, enumerate_blocks_sl, omega,
                     primitive_exponents, psi)
from .census import (DimVector, OrbitPair, census_json, census_rows, census_tsv,
                     component_group_order, dim_vectors, enumerate_chain_types, enumerate_pairs)
from .cocharacter import DualityError, RationalCocharacter, from_weights
from .exact import Rat, RowSpace, mat_rank, nullspace, rat, rat_str, rref
from .graded import (GradedElement, GradedSpace, SpaceMismatch, algebra_basis, bracket,
                     hom_basis, trace_pair)
from .nilpotent import (AdaptedBasis, ChainType, NotIntegralGrading, NotNilpotent, Sl2Triple,
                        chain_type_by_ranks, chain_type_of, graded_jordan_basis, iota_cocharacter,
                        is_nilpotent, sl2_complete, standard_representative)
from .oracle import OracleTooLarge, count_nilpotents_fq, realized_chain_types_fq
from .spiral import (ChainQuiver, NonIntegralWeights, Report, Spiral, SubspaceBasis,
                     ad_surjectivity_check, annihilator, canonical_spiral, check_refinement,
                     refine_spiral, spiral_p, spiral_quiver, spiral_report, spiral_split, spiral_u,
                     verify_spiral_axioms)
from .symplectic import (SpBlock, SymplecticDims, block_demand, blocks_sp_json, blocks_sp_tsv,
                         enumerate_blocks_sp, sp_spiral_chains, window_counts, witness_grading)
from .verify import Outcome, run_suite

__version__ = "0.1.0"

__all__ = [
    "AdaptedBasis", "BlockTriple", "ChainQuiver", "ChainType", "ConstraintViolation", "DimVector",
    "DualityError", "GradedElement", "GradedSpace", "NonIntegralWeights", "NotIntegralGrading",
    "NotNilpotent", "OracleTooLarge", "OrbitPair", "Outcome", "Rat", "RationalCocharacter",
    "Report", "RowSpace", "Sl2Triple", "SpBlock", "SpaceMismatch", "Spiral", "SubspaceBasis",
    "SymplecticDims", "ad_surjectivity_check", "admissible_grading_for_block", "algebra_basis",
    "annihilator", "block_demand", "block_representative", "blocks_json", "blocks_sp_json",
    "blocks_sp_tsv", "blocks_tsv", "bracket", "canonical_spiral", "census_json", "census_rows",
    "census_tsv", "chain_type_by_ranks", "chain_type_of", "check_refinement",
    "component_group_order", "count_nilpotents_fq", "dim_vectors", "enumerate_blocks_sl",
    "enumerate_blocks_sp", "enumerate_chain_types", "enumerate_pairs", "from_weights",
    "graded_jordan_basis", "hom_basis", "iota_cocharacter", "is_nilpotent", "mat_rank",
    "nullspace", "omega", "primitive_exponents", "psi", "rat", "rat_str", "realized_chain_types_fq",
    "refine_spiral", "rref", "run_suite", "sl2_complete", "sp_spiral_chains", "spiral_p",
    "spiral_quiver", "spiral_report", "spiral_split", "spiral_u", "standard_representative",
    "trace_pair", "verify_spiral_axioms", "window_counts", "witness_grading",
]
