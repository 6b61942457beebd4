"""Finite topological spaces, Hausdorff reflection and epimorphisms in Haus."""

from .epi import (
    EpiVerdict,
    check_dense_implies_epi,
    is_counterexample,
    is_epi_bruteforce,
    is_epi_dense,
    non_epi_witness,
)
from .enumeration import enumerate_topologies
from .maps import (
    ContinuousMap,
    Cospan,
    are_homeomorphic,
    compose,
    enumerate_continuous_maps,
    find_homeomorphism,
    image,
    is_homeomorphism,
    make_map,
)
from .partition import Partition
from .quotient import (
    Quotient,
    Reflection,
    collapse_closed,
    factor_through_reflection,
    hausdorff_partition,
    hausdorff_reflection,
    quotient_by,
    reflect_map,
)
from .space import (
    FiniteSpace,
    Preorder,
    SeparationWitness,
    closure,
    connected_components,
    interior,
    is_dense,
    is_hausdorff,
    mask_of,
    members,
    separation_axioms,
    separation_witness,
    specialization_preorder,
    validate_topology,
)

__version__ = "0.1.0"
