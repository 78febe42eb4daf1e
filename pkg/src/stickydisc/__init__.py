"""Ground-state laboratory for the Heitmann-Radin sticky-disc model."""

from .lattice import (
    NEIGHBOR_STEPS,
    POINT_GROUP,
    Isometry,
    Site,
    apply_isometry,
    apply_to_sites,
    canonical_form,
    hex_norm,
    neighbors,
    to_cartesian,
)
from .configuration import (
    BoundaryPolygon,
    Configuration,
    StructureError,
    bond_count,
    boundary_polygon,
    boundary_sites,
    boundary_size_formula,
    energy,
    ground_state_energy,
    is_connected,
    is_simply_connected,
    max_bond_formula,
    unit_triangle_count,
)

__version__ = "0.1.0"
