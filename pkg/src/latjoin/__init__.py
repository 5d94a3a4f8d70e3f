"""Exact computation on topological joins of finite spaces.

Piecewise-linear calculus on [0, 1], join elements over complete bipartite
joins with their free-product norms (exact rational LP plus an independent
grid oracle), barycentric-grid norms on the simplex, integer simplicial
homology through Smith normal form, relation-set propagation across joins,
and a seeded verification harness.
"""

from .plfunc import (
    DomainError,
    PLFunction,
    pl_abs,
    pl_combine,
    pl_equal,
    pl_eval,
    pl_linear,
    pl_simplify,
)
from .join_element import (
    JoinElement,
    ShapeError,
    SimplexSample,
    TraceError,
    embed_factor1,
    embed_factor2,
    factor_projection,
    join_lattice_op,
    simplex_grid,
    unit_element,
    zero_element,
)
from .norms import (
    FactorNormSpec,
    NormCertificate,
    SolverError,
    brute_force_norm,
    ell_1,
    ell_inf,
    ell_p,
    free_norm_simplex,
    free_norm_two,
    gauge_norm_e,
    pconvexity_ratio,
    sup_norm,
)
from .homology import (
    HomologyProfile,
    SimplicialComplex,
    boundary_matrix,
    cone,
    homology,
    join_complex,
    load_complex,
    pseudo_manifold_check,
    save_complex,
    sphere_complex,
    suspension,
)
from .snf import smith_normal_form
from .join_maps import (
    RelationSet,
    WeightedComposition,
    check_membership,
    induced_join_relations,
    mobius_transport,
    normalize_relations,
    random_satisfying_vector,
    satisfies_relations,
    transport_hom,
)
from .suites import Report, SuiteConfig, run_suite

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "PLFunction",
    "pl_abs",
    "pl_combine",
    "pl_equal",
    "pl_eval",
    "pl_linear",
    "pl_simplify",
    "JoinElement",
    "ShapeError",
    "SimplexSample",
    "TraceError",
    "embed_factor1",
    "embed_factor2",
    "factor_projection",
    "join_lattice_op",
    "simplex_grid",
    "unit_element",
    "zero_element",
    "FactorNormSpec",
    "NormCertificate",
    "SolverError",
    "brute_force_norm",
    "ell_1",
    "ell_inf",
    "ell_p",
    "free_norm_simplex",
    "free_norm_two",
    "gauge_norm_e",
    "pconvexity_ratio",
    "sup_norm",
    "HomologyProfile",
    "SimplicialComplex",
    "boundary_matrix",
    "cone",
    "homology",
    "join_complex",
    "load_complex",
    "pseudo_manifold_check",
    "save_complex",
    "sphere_complex",
    "suspension",
    "smith_normal_form",
    "RelationSet",
    "WeightedComposition",
    "check_membership",
    "induced_join_relations",
    "mobius_transport",
    "normalize_relations",
    "random_satisfying_vector",
    "satisfies_relations",
    "transport_hom",
    "Report",
    "SuiteConfig",
    "run_suite",
]
