"""Exact scalar arithmetic: rationals, Pochhammer symbols, cyclotomic fields,
quaternions, and the float fallbacks used by the float backend."""
from .cyclotomic import (
    Cyclotomic,
    cyclo_abs2,
    cyclo_conj,
    cyclo_is_rational,
    cyclo_make,
    cyclotomic_polynomial,
)
from .quaternion import Quaternion
from .rational import as_fraction, euler_phi, factorial, factorize, pochhammer
from .scalars import (
    DEFAULT_TOL,
    abs2,
    as_rational,
    conj,
    default_tol,
    format_scalar,
    format_with_float,
    is_exact,
    is_zero,
    to_float,
    to_float_scalar,
)
from .surd import QuadraticSurd, as_surd

__all__ = [
    "Cyclotomic",
    "DEFAULT_TOL",
    "QuadraticSurd",
    "Quaternion",
    "abs2",
    "as_fraction",
    "as_rational",
    "as_surd",
    "conj",
    "cyclo_abs2",
    "cyclo_conj",
    "cyclo_is_rational",
    "cyclo_make",
    "cyclotomic_polynomial",
    "default_tol",
    "euler_phi",
    "factorial",
    "factorize",
    "format_scalar",
    "format_with_float",
    "is_exact",
    "is_zero",
    "pochhammer",
    "to_float",
    "to_float_scalar",
]
