"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(m)-1) reduced
modulo the m-th cyclotomic polynomial, which makes equality a plain
comparison of coefficient tuples.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .rational import as_fraction, divisors, euler_phi


def _poly_divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    rem = num[:dd] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first.

    Obtained from x^m - 1 by exact division by Phi_d for every proper divisor d.
    """
    if m < 1:
        raise ValueError("cyclotomic order must be >= 1")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m)[:-1]:
        poly, rem = _poly_divmod_monic(poly, list(cyclotomic_polynomial(d)))
        assert not any(rem), "cyclotomic division left a remainder"
    return tuple(poly)


def _reduce_int(order: int, nums) -> list[int]:
    """Fold exponents mod m, then reduce an integer coefficient list mod Phi_m."""
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    folded = [0] * max(order, deg)
    for j, c in enumerate(nums):
        if c:
            folded[j % order] += c
    taps = [(j, phi[j]) for j in range(deg) if phi[j]]
    for k in range(len(folded) - 1, deg - 1, -1):
        c = folded[k]
        if c:
            base = k - deg
            for j, pj in taps:
                folded[base + j] -= c * pj
    return folded[:deg]


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums, den = [-c for c in nums], -den
    g = den
    for c in nums:
        if c:
            g = math.gcd(g, c)
            if g == 1:
                break
    if not any(nums):
        return tuple(0 for _ in nums), 1
    if g != 1:
        nums = [c // g for c in nums]
        den //= g
    return tuple(nums), den


class Cyclotomic:
    """An element of Q(zeta_order) in canonical power-basis form.

    Stored as integer numerators over one positive common denominator, in
    lowest terms; ``coeffs`` exposes the rational coefficients.
    """

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError("cyclotomic order must be >= 1")
        fr = [as_fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in fr]
        self._set(order, _reduce_int(order, nums), den)

    def _set(self, order, nums, den):
        self.order = order
        self._num, self._den = _normalize(list(nums), den)
        self._hash = None

    @classmethod
    def _raw(cls, order: int, nums, den: int, reduce: bool = True) -> "Cyclotomic":
        obj = cls.__new__(cls)
        obj._set(order, _reduce_int(order, nums) if reduce else nums, den)
        return obj

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "Cyclotomic":
        p = power % order
        return cls._raw(order, [0] * p + [1], 1)

    @classmethod
    def rational(cls, order: int, value) -> "Cyclotomic":
        return cls(order, [value])

    # -- structure -------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def degree(self) -> int:
        return len(self._num)

    def lift(self, order: int) -> "Cyclotomic":
        """Embed into Q(zeta_order) via zeta_m -> zeta_order^(order/m)."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        out = [0] * order
        for j, c in enumerate(self._num):
            out[(j * step) % order] += c
        return Cyclotomic._raw(order, out, self._den)

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self, other
            L = math.lcm(self.order, other.order)
            return self.lift(L), other.lift(L)
        if isinstance(other, (int, Fraction)):
            return self, Cyclotomic(self.order, [other])
        return None

    def is_rational(self) -> Fraction | None:
        if any(self._num[1:]):
            return None
        return Fraction(self._num[0], self._den)

    def galois(self, k: int) -> "Cyclotomic":
        """Apply the automorphism zeta -> zeta^k (k coprime to the order)."""
        if math.gcd(k, self.order) != 1:
            raise ValueError("Galois exponent must be coprime to the order")
        out = [0] * self.order
        for j, c in enumerate(self._num):
            if c:
                out[(j * k) % self.order] += c
        return Cyclotomic._raw(self.order, out, self._den)

    def conj(self) -> "Cyclotomic":
        return self.galois(-1 % self.order) if self.order > 1 else self

    def abs2(self) -> "Cyclotomic":
        return self * self.conj()

    def is_real(self) -> bool:
        return self == self.conj()

    def _other_conjugates(self) -> "Cyclotomic":
        prod = Cyclotomic._raw(self.order, [1], 1)
        for k in range(2, self.order):
            if math.gcd(k, self.order) == 1:
                prod = prod * self.galois(k)
        return prod

    def norm(self) -> Fraction:
        q = self.is_rational()
        if q is not None:
            return q ** self.degree
        out = (self * self._other_conjugates()).is_rational()
        assert out is not None
        return out

    def inverse(self) -> "Cyclotomic":
        q = self.is_rational()
        if q is not None:
            if q == 0:
                raise ZeroDivisionError("inverse of zero cyclotomic element")
            return Cyclotomic(self.order, [1 / q])
        # z^{-1} = (product of the other conjugates) / N(z)
        others = self._other_conjugates()
        n = (self * others).is_rational()
        assert n is not None and n != 0
        return others * (1 / n)

    def embeddings(self) -> list[complex]:
        """Images under every complex embedding zeta -> exp(2 pi i k / m)."""
        return [self.evaluate(k) for k in range(1, self.order + 1)
                if math.gcd(k, self.order) == 1]

    def evaluate(self, k: int = 1) -> complex:
        w = cmath.exp(2j * math.pi * k / self.order)
        acc = 0j
        for c in reversed(self._num):
            acc = acc * w + c
        return acc / self._den

    # -- arithmetic ------------------------------------------------------
    def _linear(self, other, sign: int):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        da, db = a._den, b._den
        if da == db:
            nums = [x + sign * y for x, y in zip(a._num, b._num)]
            den = da
        else:
            nums = [x * db + sign * y * da for x, y in zip(a._num, b._num)]
            den = da * db
        return Cyclotomic._raw(a.order, nums, den, reduce=False)

    def __add__(self, other):
        return self._linear(other, 1)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, [-c for c in self._num], self._den, reduce=False)

    def __sub__(self, other):
        return self._linear(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclotomic._raw(self.order, [c * q.numerator for c in self._num],
                                   self._den * q.denominator, reduce=False)
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        bn = [(j, y) for j, y in enumerate(b._num) if y]
        prod = [0] * (2 * a.degree)
        for i, x in enumerate(a._num):
            if x:
                for j, y in bn:
                    prod[i + j] += x * y
        return Cyclotomic._raw(a.order, prod, a._den * b._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic._raw(self.order, [1], 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / conversion ------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            q = self.is_rational()
            return q is not None and q == other
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a._num == b._num and a._den == b._den

    def __hash__(self):
        if self._hash is None:
            q = self.is_rational()
            self._hash = hash(q) if q is not None else hash((self.order, self._num, self._den))
        return self._hash

    def __bool__(self):
        return any(self._num)

    def __complex__(self):
        return self.evaluate(1)

    def __float__(self):
        return self.evaluate(1).real

    def __repr__(self):
        terms = [str(c) if j == 0 else f"{c}*z^{j}" for j, c in enumerate(self.coeffs) if c]
        return f"Cyclotomic({self.order}: {' + '.join(terms) or '0'})"


def cyclo_make(order: int, power: int) -> Cyclotomic:
    return Cyclotomic.zeta(order, power)


def cyclo_conj(z: Cyclotomic) -> Cyclotomic:
    return z.conj()


def cyclo_abs2(z: Cyclotomic) -> Cyclotomic:
    return z.abs2()


def cyclo_is_rational(z: Cyclotomic) -> Fraction | None:
    return z.is_rational()


__all__ = [
    "Cyclotomic",
    "cyclotomic_polynomial",
    "cyclo_make",
    "cyclo_conj",
    "cyclo_abs2",
    "cyclo_is_rational",
    "euler_phi",
]
