"""Singularity-category invariants of artin algebras with radical square zero.

An algebra is given by its valued quiver; everything here is exact integer
combinatorics on that quiver, with :mod:`radzero.oracle` as an independent
check by explicit linear algebra over a prime field.
"""

from .constructions import (
    adjoin_sink,
    adjoin_source,
    disjoint_union,
    gen_cycle,
    gen_labelled,
    gen_loops,
    gen_random,
    random_extension,
    trivial_ext_power,
)
from .cyclicize import CyclicizationResult, cyclicize, is_cyclic_like
from .dsl import ParseError, QuiverDocument, parse, serialize
from .gamma import (
    BratteliDiagram,
    HomFiniteResult,
    NotHomFiniteError,
    SigmaStructure,
    TheoremAReport,
    VanishingSingularityCategory,
    bratteli,
    gamma_blocks,
    hom_finite,
    shift_from_homs,
    verify_theorem_a,
)
from .io import to_dot, to_json
from .quiver import (
    Diagnostic,
    QuiverError,
    Valuation,
    ValuedQuiver,
    VertexClassification,
    a_matrix,
    b_matrix,
    classify,
    strongly_connected_components,
    validate,
)
from .syzygy import (
    HomDimResult,
    HomStatus,
    k_dim,
    omega_iterate,
    sg_hom_dim,
    sg_is_zero,
    stable_hom_dim,
    syzygy_step,
    unit,
)

__version__ = "0.1.0"

__all__ = [
    "BratteliDiagram",
    "CyclicizationResult",
    "Diagnostic",
    "HomDimResult",
    "HomFiniteResult",
    "HomStatus",
    "NotHomFiniteError",
    "ParseError",
    "QuiverDocument",
    "QuiverError",
    "SigmaStructure",
    "TheoremAReport",
    "Valuation",
    "ValuedQuiver",
    "VanishingSingularityCategory",
    "VertexClassification",
    "a_matrix",
    "adjoin_sink",
    "adjoin_source",
    "b_matrix",
    "bratteli",
    "classify",
    "cyclicize",
    "disjoint_union",
    "gamma_blocks",
    "gen_cycle",
    "gen_labelled",
    "gen_loops",
    "gen_random",
    "hom_finite",
    "is_cyclic_like",
    "k_dim",
    "omega_iterate",
    "parse",
    "random_extension",
    "serialize",
    "sg_hom_dim",
    "sg_is_zero",
    "shift_from_homs",
    "stable_hom_dim",
    "strongly_connected_components",
    "syzygy_step",
    "to_dot",
    "to_json",
    "trivial_ext_power",
    "unit",
    "validate",
    "verify_theorem_a",
]
