"""Brute-force cross-checks with explicit representations over a prime field."""

from . import gfp
from .gfp import available_backends, use_backend
from .rep import (
    ColimitResult,
    Cover,
    HomSpace,
    OracleError,
    RepModule,
    build_simple,
    colimit_hom_dim,
    hom_space,
    omega_morphism,
    projective_cover,
    stable_hom_space,
    syzygy_rep,
)

__all__ = [
    "BACKEND",
    "ColimitResult",
    "Cover",
    "HomSpace",
    "OracleError",
    "RepModule",
    "available_backends",
    "build_simple",
    "colimit_hom_dim",
    "hom_space",
    "omega_morphism",
    "projective_cover",
    "stable_hom_space",
    "syzygy_rep",
    "use_backend",
]


def __getattr__(name):
    # the active kernel changes with use_backend
    if name == "BACKEND":
        return gfp.BACKEND
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
