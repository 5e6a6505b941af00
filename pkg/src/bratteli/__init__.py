"""Exact path counting, central measures and adic dynamics on Bratteli diagrams."""

from .adic import AdicOrder, adic_successor, default_order, invariance_check, orbit_partition_check
from .characters import (
    PLANCHEREL,
    ThomaParameter,
    hook_dimension,
    irreducible_character,
    super_power_sum,
    thoma_character,
    thoma_vertex_weight,
)
from .diagnostics import (
    FiniteOrbitMeasure,
    boundary_separation,
    cylinder_distance,
    finite_orbit_measure,
    poulsen_witness,
)
from .errors import InputError, ResourceError, ValidationError
from .generators import (
    multidim_young_graph,
    pascal_graph,
    row_frequencies,
    shape_sequence,
    solvable_group_graph,
    young_graph,
)
from .graph import FinitePath, GradedGraph, VertexId, dimension, skew_dimension
from .measures import (
    CylinderDistribution,
    MarkovMeasure,
    bernoulli_measure,
    cylinder_probability,
    elementary_measure,
    ergodic_method_compare,
    is_nonincreasing,
    measure_from_weights,
    plancherel_measure,
    sample_path,
    thoma_measure,
)

__all__ = [
    "AdicOrder",
    "CylinderDistribution",
    "FiniteOrbitMeasure",
    "FinitePath",
    "GradedGraph",
    "InputError",
    "MarkovMeasure",
    "PLANCHEREL",
    "ResourceError",
    "ThomaParameter",
    "ValidationError",
    "VertexId",
    "adic_successor",
    "bernoulli_measure",
    "boundary_separation",
    "cylinder_distance",
    "cylinder_probability",
    "default_order",
    "dimension",
    "elementary_measure",
    "ergodic_method_compare",
    "finite_orbit_measure",
    "hook_dimension",
    "invariance_check",
    "irreducible_character",
    "is_nonincreasing",
    "measure_from_weights",
    "multidim_young_graph",
    "orbit_partition_check",
    "pascal_graph",
    "plancherel_measure",
    "poulsen_witness",
    "row_frequencies",
    "sample_path",
    "shape_sequence",
    "skew_dimension",
    "solvable_group_graph",
    "super_power_sum",
    "thoma_character",
    "thoma_measure",
    "thoma_vertex_weight",
    "young_graph",
]
