"""Smallest adjacency eigenvalue of a graph against combinatorial upper bounds."""
from .bounds import (
    BoundReport,
    bound_eta,
    bound_explicit,
    bound_iota,
    bound_nikiforov,
    bound_report,
    bound_witness,
    comparison_check,
    comparison_inequality,
    turan_edge_check,
)
from .families import FamilySpec, generate
from .graph import (
    Bipartition,
    Graph,
    GraphError,
    cartesian_product,
    disjoint_union,
    from_edges,
    induced_subgraph,
    is_bipartite,
    join,
)
from .graph6 import parse_graph6, to_graph6
from .harness import run_batch, verify_claims
from .invariants import (
    BipartiteWitness,
    InvariantReport,
    SizeLimitError,
    chromatic_number,
    clique_number,
    enumerate_induced_bipartite,
    eta,
    independence_number,
    invariant_report,
    iota,
    mad,
    theta,
)
from .planarity import is_planar_small
from .spectral import (
    EquitablePartition,
    Spectrum,
    divisor_spectrum,
    eigenvalues_sym,
    interlace_check,
    lambda_min,
    rayleigh_witness,
)

__version__ = "0.1.0"
