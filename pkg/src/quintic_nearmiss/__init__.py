"""Exact construction and verification of Gaussian-integer solutions of
a^5 + b^5 = c^5 +/- 1."""

from .genfunc import RationalGF, UniPoly, Which, builtin_gf, crosscheck, gf_coefficients
from .recurrence import Product, check_eq4, f_closed, f_rec, product_closed
from .rings import (
    BiquadElem,
    GaussianInt,
    GaussianRational,
    NotIntegral,
    QuadElem,
    Rational,
    as_integer,
    quad_conjugate,
    ring_pow,
)
from .solutions import (
    NotDivisible,
    SolutionRecord,
    abc_closed,
    abcd_from_f,
    check_d_collapse,
    scale,
    solution,
    solutions,
    verify_quintic,
)
from .sympoly import BiPoly, build_g, odd_part_in_x, verify_param_identity

__version__ = "0.1.0"

__all__ = [
    "RationalGF",
    "UniPoly",
    "Which",
    "builtin_gf",
    "crosscheck",
    "gf_coefficients",
    "Product",
    "check_eq4",
    "f_closed",
    "f_rec",
    "product_closed",
    "BiquadElem",
    "GaussianInt",
    "GaussianRational",
    "NotIntegral",
    "QuadElem",
    "Rational",
    "as_integer",
    "quad_conjugate",
    "ring_pow",
    "NotDivisible",
    "SolutionRecord",
    "abc_closed",
    "abcd_from_f",
    "check_d_collapse",
    "scale",
    "solution",
    "solutions",
    "verify_quintic",
    "BiPoly",
    "build_g",
    "odd_part_in_x",
    "verify_param_identity",
]
