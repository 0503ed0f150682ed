"""Coarsest and minimal homogeneous sheaf stratifications of finite T0-spaces."""

from .geometry import (Cover, MonomialSet, Nerve, PointCloud, build_nerve,
                       mapper_pullback_cover, monomials_up_to_degree,
                       vanishing_dimension, vanishing_presheaf)
from .homology import (ChainComplex, GradedSpace, InducedMap, homology,
                       induced_restriction, is_isomorphism, order_chain_complex,
                       relative_chain_complex)
from .linalg import FieldSpec
from .sheaves import (ConstantSheaf, DeltaMap, DeltaMapOracle, LocalHomologySheaf,
                      MaximalElementSheaf, SheafOracle, covering_delta_map,
                      delta_along_chain, hasse_dot)
from .spaces import (FiniteSpace, Subspace, build_from_maximal_simplices, closure,
                     connected_pieces, dimension, from_relations, is_homogeneous,
                     link_of_open, min_open_nbhd, star)
from .stratify import (Stratification, compare_coarseness, coarsest_stratification,
                       is_constructible, lex_compare,
                       minimal_homogeneous_stratification)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
