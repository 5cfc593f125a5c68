"""Map construction and iteration."""

from .base import (
    DEFAULT_ESCAPE_RADIUS,
    FD_STEP,
    PlanarMap,
    SingularSet,
    SpaceMap3,
    compose_with_self,
    finite_difference_jacobian,
    iterate_orbit,
    jacobian_at,
)
from .catalog import (
    henon_eval,
    henon_fixed_points,
    henon_inverse,
    henon_map,
    henon3_map,
    lozi_eval,
    lozi_fixed_points,
    lozi_map,
    lozi3_map,
    map_from_spec,
    planar_component_fields,
)
from .extension import extend_to_3d
from .paradigm import GahParams, build_gah_paradigm

__all__ = [
    "DEFAULT_ESCAPE_RADIUS",
    "FD_STEP",
    "GahParams",
    "PlanarMap",
    "SingularSet",
    "SpaceMap3",
    "build_gah_paradigm",
    "compose_with_self",
    "extend_to_3d",
    "finite_difference_jacobian",
    "henon_eval",
    "henon_fixed_points",
    "henon_inverse",
    "henon_map",
    "henon3_map",
    "iterate_orbit",
    "jacobian_at",
    "lozi_eval",
    "lozi_fixed_points",
    "lozi_map",
    "lozi3_map",
    "map_from_spec",
    "planar_component_fields",
]
