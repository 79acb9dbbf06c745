"""Weighted Padovan graphs, the isomorphic word graphs A_{p,q} and partition graphs Pi_{p,q}."""

from .closed_forms import (
    FamilyParams,
    count_weak_partitions,
    cube_generating_series,
    cube_polynomial_closed,
    cube_polynomial_recurrence,
    degree_count,
    diameter_formula,
    edge_count,
    largest_cube,
    nk_to_pq,
    padovan_number,
    pq_to_nk,
    vertex_count,
    weight_range,
)
from .graph_core import (
    LabeledGraph,
    automorphism_group,
    build_graph,
    check_isomorphism,
    cube_polynomial_bruteforce,
    degree_histogram,
    diameter,
    distance,
    is_median_graph,
    median_of,
)
from .isomorphisms import alpha, alpha_inverse, beta, beta_inverse, fundamental_branch
from .partitions import (
    WeakPartition,
    conjugate,
    enumerate_partitions,
    hypercube_embedding,
    is_lonely,
    partition_distance,
    partition_neighbors,
    tau,
)
from .words import (
    ab_neighbors,
    c_word_to_edge,
    edge_to_c_word,
    enumerate_ab_words,
    enumerate_padovan_words,
    is_padovan_word,
    padovan_neighbors,
)

__version__ = "0.1.0"
