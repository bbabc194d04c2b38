"""Quaternions w + xi + yj + zk over exact rationals or floats."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_REAL = (int, float, Fraction)


@dataclass(frozen=True)
class Quaternion:
    w: object = 0
    x: object = 0
    y: object = 0
    z: object = 0

    @property
    def components(self):
        return (self.w, self.x, self.y, self.z)

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def abs2(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def is_exact(self) -> bool:
        return not any(isinstance(c, float) for c in self.components)

    def to_float(self) -> "Quaternion":
        return Quaternion(*(float(c) for c in self.components))

    def __add__(self, other):
        if isinstance(other, _REAL):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(*(a + b for a, b in zip(self.components, other.components)))

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _REAL):
            return Quaternion(*(c * other for c in self.components))
        if not isinstance(other, Quaternion):
            return NotImplemented
        a1, b1, c1, d1 = self.components
        a2, b2, c2, d2 = other.components
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        # real scalars are central
        if isinstance(other, _REAL):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, _REAL):
            inv = 1 / other if isinstance(other, float) else 1 / Fraction(other)
            return self * inv
        return NotImplemented

    def __bool__(self):
        return any(self.components)

    def __eq__(self, other):
        if isinstance(other, _REAL):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)
