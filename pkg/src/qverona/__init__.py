"""Exact computations in Veronese subrings of q-skew polynomial rings at roots of unity."""

from .cyclo import CycScalar, cyclotomic_polynomial, q_pow
from .skew_ring import RingParams, SkewElement
from .center import CenterLattice, in_M, is_central, y_element
from .basis import QuasiBasis, enumerate_basis, normal_form, star
from .discriminant import (
    basis_discriminant,
    gram_discriminant,
    p_power_discriminant,
    theorem_exponent,
    trace,
    trace_oracle,
)
from .autos import (
    Derivation,
    GeneratorImages,
    Permutation,
    Scaling,
    TwistedShift,
    apply_auto,
    exp_derivation,
    free_word_check,
    verify_homomorphism,
)

__version__ = "0.1.0"

__all__ = [
    "CycScalar",
    "cyclotomic_polynomial",
    "q_pow",
    "RingParams",
    "SkewElement",
    "CenterLattice",
    "in_M",
    "is_central",
    "y_element",
    "QuasiBasis",
    "enumerate_basis",
    "normal_form",
    "star",
    "basis_discriminant",
    "gram_discriminant",
    "p_power_discriminant",
    "theorem_exponent",
    "trace",
    "trace_oracle",
    "Derivation",
    "GeneratorImages",
    "Permutation",
    "Scaling",
    "TwistedShift",
    "apply_auto",
    "exp_derivation",
    "free_word_check",
    "verify_homomorphism",
]
