"""Exact bounds and verified list-distinguishing colourings for Kneser graphs."""

from .dyadic import DyadicRational
from .perm_core import (
    CycleType,
    Permutation,
    count_permutations,
    cycle_type_of,
    enumerate_cycle_types,
    enumerate_cycle_types_min,
    orbits_of,
)
from .kneser_graph import KneserGraph, build, edge_view, induced_vertex_map
from .fixation_bounds import f_min_sum, f_sum, mu, p_full_cycle, p_lambda_bound
from .list_distinguish import (
    Coloring,
    ListAssignment,
    exact_fixation_probability,
    exact_list_distinguishable,
    is_distinguishing,
    las_vegas_distinguish,
)
from .constructive_small import construct, construct_k6, construct_k7, max_mono_path

__version__ = "0.1.0"
