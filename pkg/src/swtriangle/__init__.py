"""Exact combinatorial checks behind the Seiberg-Witten surgery exact triangle.

Submodules:

* ``exact_arith``   Dedekind sums and rational helpers
* ``torus_model``   the pillowcase torus, reducible lines, slope curves, θ points
* ``perturbation``  basic and refined holonomy perturbation profiles
* ``monopole_count`` boundary curves, partition and surgery count identities
* ``triangle_enum`` triangle enumeration and the w0·w1 = 0 cancellation
* ``floer_harness`` graded complexes, chain maps and exactness of triangles
* ``invariants``    Casson-Walker and SW sum surgery formulas
* ``serialization``, ``svg``, ``cli``  file formats, pictures, command line
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    FormatError,
    GenericityError,
    GradingError,
    InstabilityError,
    IntegrityError,
    PreconditionError,
    SwTriangleError,
)
from .exact_arith import dedekind_sum, format_rat, parse_rat  # noqa: E402
from .invariants import SurgeryProblem, casson_walker_report, casson_walker_surgery  # noqa: E402
from .monopole_count import BoundaryCurve, Component, Endpoint, partition_check, surgery_count_identity  # noqa: E402
from .triangle_enum import TriangleConfig, w1_w0_cancellation  # noqa: E402
from .floer_harness import GradedComplex, ChainMap, exact_triangle_check  # noqa: E402

__all__ = [
    "__version__",
    "SwTriangleError",
    "PreconditionError",
    "GenericityError",
    "InstabilityError",
    "GradingError",
    "IntegrityError",
    "FormatError",
    "dedekind_sum",
    "format_rat",
    "parse_rat",
    "SurgeryProblem",
    "casson_walker_report",
    "casson_walker_surgery",
    "BoundaryCurve",
    "Component",
    "Endpoint",
    "partition_check",
    "surgery_count_identity",
    "TriangleConfig",
    "w1_w0_cancellation",
    "GradedComplex",
    "ChainMap",
    "exact_triangle_check",
]
