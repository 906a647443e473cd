"""Root subsystems of finite root systems."""

from ._core import (
    ResourceError,
    RootSystemError,
    affine_labels,
    closure,
    fundamental_count,
    hom,
    hom_count,
    m,
    orbit_size,
    out_sigma_order,
    perp,
    r,
    reproduce,
    root_system,
    stats,
    table,
)

__all__ = [
    "ResourceError",
    "RootSystemError",
    "affine_labels",
    "closure",
    "fundamental_count",
    "hom",
    "hom_count",
    "m",
    "orbit_size",
    "out_sigma_order",
    "perp",
    "r",
    "reproduce",
    "root_system",
    "stats",
    "table",
]
