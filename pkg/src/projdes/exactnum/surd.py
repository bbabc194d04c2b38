"""Closed forms a + b*sqrt(d) for real elements of quadratic fields."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclotomic
from .rational import squarefree_split


@dataclass(frozen=True)
class QuadraticSurd:
    """The real number ``a + b*sqrt(d)`` with d a squarefree integer > 1."""

    a: Fraction
    b: Fraction
    d: int

    @classmethod
    def sqrt_of(cls, q: Fraction, sign: int = 1) -> "QuadraticSurd | Fraction":
        q = Fraction(q)
        if q < 0:
            raise ValueError("square root of a negative rational")
        f, d = squarefree_split(q.numerator * q.denominator)
        coef = Fraction(f, q.denominator) * sign
        if d == 1:
            return coef
        return cls(Fraction(0), coef, d)

    @classmethod
    def quadratic_roots(cls, a2, a1, a0) -> list:
        """Real roots of a2*x^2 + a1*x + a0, ascending, exact."""
        a2, a1, a0 = Fraction(a2), Fraction(a1), Fraction(a0)
        disc = a1 * a1 - 4 * a2 * a0
        if disc < 0:
            return []
        roots = []
        for sign in (-1, 1):
            r = QuadraticSurd.sqrt_of(disc, sign)
            if isinstance(r, Fraction):
                roots.append((-a1 + r) / (2 * a2))
            else:
                roots.append(cls((-a1) / (2 * a2), r.b / (2 * a2), r.d))
        roots = sorted(set(roots), key=float)
        return roots

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self):
        den = math.lcm(self.a.denominator, self.b.denominator)
        A = int(self.a * den)
        B = int(self.b * den)
        rad = f"sqrt{self.d}" if abs(B) == 1 else f"{abs(B)}sqrt{self.d}"
        if A == 0:
            body = ("-" if B < 0 else "") + rad
            return body if den == 1 else f"{body}/{den}"
        body = f"{A}{'-' if B < 0 else '+'}{rad}"
        return body if den == 1 else f"({body})/{den}"


def as_surd(z: Cyclotomic) -> "QuadraticSurd | Fraction | None":
    """Identify a real cyclotomic element of degree <= 2 over Q as a surd.

    Returns None when z is not real or generates a field of degree > 2.
    """
    q = z.is_rational()
    if q is not None:
        return q
    if not z.is_real():
        return None
    z2 = z * z
    j = next(k for k in range(1, z.degree) if z.coeffs[k])
    p = z2.coeffs[j] / z.coeffs[j]
    c = z2.coeffs[0] - p * z.coeffs[0]
    if z2 != z * p + c:
        return None
    # z^2 - p z - c = 0
    roots = QuadraticSurd.quadratic_roots(1, -p, -c)
    zf = float(z)
    return min(roots, key=lambda r: abs(float(r) - zf))
