"""Backend-agnostic helpers for the scalars that appear as coordinates and
Gram entries: Fraction, Cyclotomic, Quaternion, float and complex."""
from __future__ import annotations

import os
from fractions import Fraction

from .cyclotomic import Cyclotomic
from .quaternion import Quaternion
from .surd import as_surd

DEFAULT_TOL = 1e-9


def default_tol() -> float:
    """Absolute float tolerance; PROJDES_TOL overrides the built-in default."""
    raw = os.environ.get("PROJDES_TOL")
    if raw:
        tol = float(raw)
        if tol <= 0:
            raise ValueError("PROJDES_TOL must be positive")
        return tol
    return DEFAULT_TOL


def is_exact(x) -> bool:
    if isinstance(x, (int, Fraction, Cyclotomic)):
        return True
    if isinstance(x, Quaternion):
        return x.is_exact()
    return False


def conj(x):
    if isinstance(x, (Cyclotomic, Quaternion)):
        return x.conj()
    if isinstance(x, complex):
        return x.conjugate()
    return x


def abs2(x):
    if isinstance(x, (Cyclotomic, Quaternion)):
        return x.abs2()
    if isinstance(x, complex):
        return x.real * x.real + x.imag * x.imag
    return x * x


def to_float(x) -> float:
    """Real float image of a real-valued scalar."""
    if isinstance(x, complex):
        return x.real
    return float(x)


def to_float_scalar(x):
    """Float counterpart of a coordinate, keeping complex/quaternion shape."""
    if isinstance(x, Cyclotomic):
        return complex(x)
    if isinstance(x, Quaternion):
        return x.to_float()
    if isinstance(x, complex):
        return x
    return float(x)


def is_zero(x, tol: float | None = None) -> bool:
    if is_exact(x):
        return not x
    tol = default_tol() if tol is None else tol
    return abs(x) <= tol


def as_rational(x) -> Fraction | None:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Cyclotomic):
        return x.is_rational()
    return None


def format_scalar(x) -> str:
    """Canonical exact string: p/q for rationals, (a+b*sqrtd)/c for quadratic
    surds, a coefficient listing for other cyclotomics, repr for floats."""
    if isinstance(x, bool):
        return str(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Cyclotomic):
        s = as_surd(x)
        if s is not None:
            return str(s)
        body = ", ".join(str(c) for c in x.coeffs)
        return f"cyclo{x.order}[{body}]"
    if isinstance(x, float):
        return f"{x:.15g}"
    return str(x)


def format_with_float(x) -> str:
    exact = format_scalar(x)
    if is_exact(x) and not isinstance(x, Quaternion):
        approx = f"{to_float(x):.15g}"
        if approx != exact:
            return f"{exact} ~ {approx}"
    return exact
