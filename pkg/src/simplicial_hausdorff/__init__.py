"""Simplicial Hausdorff distance between coordinate-labeled simplicial complexes."""
from .collapse import (
    CollapseTrace,
    QuotientReport,
    cone_apexes,
    dominated_vertices,
    link,
    remove_vertex,
    strong_collapse_core,
    verify_quotient_equivalence,
)
from .complex import LabeledComplex, SimplicialComplex, closure, is_isomorphic, k_simplices
from .distance import (
    DirectedResult,
    Witness,
    classical_directed_hausdorff,
    classical_hausdorff,
    directed_distance,
    filtered_directed,
    filtered_hausdorff,
    simplicial_hausdorff,
)
from .rips import (
    Filtration,
    PointCloud,
    QuotientResult,
    RipsParams,
    build_rips,
    critical_values,
    quotient_coincident,
)
from .verify import betti_gf2, directed_by_sweep, eps_close_predicate

__all__ = [name for name in dir() if not name.startswith("_")]
