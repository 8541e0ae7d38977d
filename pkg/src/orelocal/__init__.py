"""Exact arithmetic in Ore localizations of G-algebras."""

from .errors import (
    AmbientMismatch,
    BoundExceeded,
    IntersectionEmpty,
    InvalidFraction,
    InvalidOreSet,
    InvariantViolation,
    InvertibilityUnknown,
    NotCommutative,
    NotDivisible,
    NotEliminable,
    NotInS,
    NotInvertible,
    OreLocalError,
    ParseError,
    PresentationError,
    UndefinedName,
)
from .galgebra import (
    CoefficientField,
    Element,
    GAlgebra,
    comm_gcd,
    integration_algebra,
    polynomial_ring,
    q_shift_algebra,
    q_weyl_algebra,
    shift_algebra,
    squarefree_part,
    weyl_algebra,
)
from .groebner import (
    GroebnerBasis,
    Vector,
    eliminate,
    is_groebner,
    kernel_phi,
    left_gb,
    left_nf,
    left_syzygies,
    lift_witness,
    right_divide_exact,
    right_syzygies,
)
from .localization import (
    Fraction,
    Invertibility,
    OreLocalization,
    OreVerdict,
    OreWitness,
    Verdict,
)
from .orders import ModuleOrder, MonomialOrder
from .oresets import (
    Emptiness,
    GeometricOreSet,
    MonoidalOreSet,
    RationalOreSet,
    geometric_intersection,
    make_ore_set,
    monoidal_emptiness_certificate,
    monoidal_intersection,
    rational_intersection,
)
from .parser import parse_expression
from .session import Session

__all__ = [
    "AmbientMismatch",
    "BoundExceeded",
    "CoefficientField",
    "Element",
    "Emptiness",
    "Fraction",
    "GAlgebra",
    "GeometricOreSet",
    "GroebnerBasis",
    "IntersectionEmpty",
    "InvalidFraction",
    "InvalidOreSet",
    "InvariantViolation",
    "Invertibility",
    "InvertibilityUnknown",
    "ModuleOrder",
    "MonoidalOreSet",
    "MonomialOrder",
    "NotCommutative",
    "NotDivisible",
    "NotEliminable",
    "NotInS",
    "NotInvertible",
    "OreLocalError",
    "OreLocalization",
    "OreVerdict",
    "OreWitness",
    "ParseError",
    "PresentationError",
    "RationalOreSet",
    "Session",
    "UndefinedName",
    "Vector",
    "Verdict",
    "comm_gcd",
    "eliminate",
    "geometric_intersection",
    "integration_algebra",
    "is_groebner",
    "kernel_phi",
    "left_gb",
    "left_nf",
    "left_syzygies",
    "lift_witness",
    "make_ore_set",
    "monoidal_emptiness_certificate",
    "monoidal_intersection",
    "parse_expression",
    "polynomial_ring",
    "q_shift_algebra",
    "q_weyl_algebra",
    "rational_intersection",
    "right_divide_exact",
    "right_syzygies",
    "shift_algebra",
    "squarefree_part",
    "weyl_algebra",
]
