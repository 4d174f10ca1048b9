"""Exact Pareto-efficiency analysis for pairwise comparison matrices.

Decides efficiency of weight vectors through strong connectivity of the
BCC digraph, constructs the full efficient set of a 4x4 matrix as a union
of three tetrahedra of path-tree weight vectors, classifies matrices by
their consistent-cycle structure, and exports the 3-simplex geometry.
"""

from .efficiency import (
    BccDigraph,
    DominanceVerdict,
    bcc_digraph,
    dominates,
    find_dominator_sample,
    float_equality_band,
    hamiltonian_cycle_exists,
    is_efficient,
    strongly_connected,
)
from .errors import (
    BadNumeralError,
    ConsistentTriadPresentError,
    DimensionMismatchError,
    DimensionTooLargeError,
    GenerationFailedError,
    ImpossibleCombinationError,
    IndexOutOfRangeError,
    InputError,
    NonPositiveEntryError,
    NonPositiveWeightError,
    NonSquareError,
    NotACanonicalCycleError,
    NotConsistentError,
    NotNormalizedError,
    ReciprocityViolationError,
    RepeatedIndexError,
    TooShortError,
    UnsupportedDimensionError,
)
from .generators import generate_pcm, random_exact_weights
from .geometry import (
    CANONICAL_CYCLES,
    CoincidenceReport,
    CuttingPlane,
    CycleOrientation,
    Direction,
    EfficientSet,
    EmbeddedPoint,
    PerturbClass,
    PerturbTag,
    Tetrahedron,
    affine_rank,
    barycentric,
    canonical_rearrangement,
    classify,
    coincidence_structure,
    contains_cycle_region,
    cutting_planes,
    cycle_orientation,
    efficient_set,
    embed,
    is_efficient_geometric,
    plane_clip_polygon,
    tetrahedron_for_cycle,
    triad_rearrangement,
)
from .pcm import (
    CANONICAL_TRIADS,
    IncompletePcm,
    Pcm,
    Permutation,
    Rational,
    WeightVector,
    apply_permutation,
    consistent_four_cycles,
    consistent_triads,
    consistent_weights,
    cycle_product,
    format_rational,
    is_consistent,
    parse_pcm,
    parse_rational,
    pcm_from_upper,
    permute_weights,
    triad_product,
    weight_vector,
)
from .sampling import EquivalenceReport, run_equivalence_trials
from .trees import (
    LabeledPath,
    SpanningTree,
    enumerate_labeled_paths,
    enumerate_spanning_trees,
    paths_of_cycle,
    restrict,
    tree_weight_vector,
)

__version__ = "0.1.0"
