"""Exact symmetric-group characters, free cumulants of Young diagrams and Kerov polynomials."""
from .characters import dimension, mn_character, normalized_character
from .cumulants import (
    TransitionMeasure,
    free_cumulants,
    free_cumulants_to_moments,
    geometric_r3,
    geometric_r4,
    moments,
    moments_to_free_cumulants,
    transition_measure,
)
from .kerov import (
    ConsistencyError,
    cumulant_polynomial,
    evaluate,
    kerov_polynomial,
    multi_kerov_polynomial,
    positivity_report,
)
from .maps import BipartiteMap, embedding_count, enumerate_maps, genus, stanley_character
from .partitions import (
    Box,
    Partition,
    Permutation,
    compose,
    conjugate,
    contents,
    corner_coordinates,
    dilate,
    partitions_of,
)
from .polynomials import R, RPolynomial, graded_degree
from .restriction import ScalingReport, restrict_to, restriction_step, scaling_experiment
from .transport import (
    DecoratedMap,
    FlowNetwork,
    count_decorated_maps,
    has_disallowed_disconnecting_edge,
    strictly_positive_feasible,
)

__version__ = "0.1.0"
