"""Finite point sets in FP^n, their Gram matrices of projective inner
products (x, y) = |a*b|^2, angle sets, and the JSON design-file format."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .exactnum import (
    Cyclotomic,
    Quaternion,
    abs2,
    conj,
    default_tol,
    is_exact,
    to_float,
    to_float_scalar,
)

BACKENDS = ("exact", "float")


class InvalidPointError(ValueError):
    pass


class DuplicatePointError(ValueError):
    pass


class DesignFileError(ValueError):
    pass


@dataclass(frozen=True)
class PointSet:
    field: str
    n: int
    points: tuple
    backend: str = "exact"

    def __post_init__(self):
        if self.field not in ("R", "C", "H"):
            raise InvalidPointError(f"unknown field {self.field!r}")
        if self.backend not in BACKENDS:
            raise InvalidPointError(f"unknown backend {self.backend!r}")
        pts = tuple(tuple(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise InvalidPointError("a point set must be nonempty")
        for k, p in enumerate(pts):
            if len(p) != self.n + 1:
                raise InvalidPointError(f"point {k} has {len(p)} coordinates, expected {self.n + 1}")
            if not any(bool(c) for c in p):
                raise InvalidPointError(f"point {k} is the zero vector")
            for c in p:
                if is_exact(c) != (self.backend == "exact"):
                    raise InvalidPointError(f"point {k} mixes backends")

    def __len__(self):
        return len(self.points)

    def without(self, index: int) -> "PointSet":
        pts = self.points[:index] + self.points[index + 1:]
        return PointSet(self.field, self.n, pts, self.backend)

    def to_float(self) -> "PointSet":
        if self.backend == "float":
            return self
        pts = []
        for p in self.points:
            row = [to_float_scalar(c) for c in p]
            if self.field == "R":
                row = [c.real if isinstance(c, complex) else c for c in row]
            pts.append(tuple(row))
        return PointSet(self.field, self.n, tuple(pts), "float")


def orthonormal_basis(field: str, n: int, backend: str = "exact") -> PointSet:
    one, zero = (Fraction(1), Fraction(0)) if backend == "exact" else (1.0, 0.0)
    pts = [tuple(one if j == k else zero for j in range(n + 1)) for k in range(n + 1)]
    return PointSet(field, n, tuple(pts), backend)


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric matrix of projective inner products with unit diagonal.

    ``entries`` is an object array of exact scalars (Fraction or real
    Cyclotomic) for the exact backend and a float64 array otherwise.
    """

    entries: np.ndarray
    exact: bool

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, idx):
        return self.entries[idx]

    def to_float(self) -> np.ndarray:
        if not self.exact:
            return self.entries
        return np.vectorize(to_float, otypes=[float])(self.entries)


def _inner(a, b):
    # a* b with the conjugate on the left factor
    acc = 0
    for x, y in zip(a, b):
        acc = acc + conj(x) * y
    return acc


def _real_part(x):
    if isinstance(x, Quaternion):
        return x.w
    if isinstance(x, complex):
        return x.real
    return x


def _canonical_exact(x, order: int):
    if isinstance(x, Cyclotomic):
        q = x.is_rational()
        if q is not None:
            return q
        return x.lift(order)
    return Fraction(x)


def _common_order(ps: PointSet) -> int:
    order = 1
    for p in ps.points:
        for c in p:
            if isinstance(c, Cyclotomic):
                order = math.lcm(order, c.order)
    return order


def gram(ps: PointSet) -> GramMatrix:
    """Gram matrix of (x, y) = |a*b|^2 / ((a*a)(b*b)); coordinates may be
    unnormalized."""
    size = len(ps)
    norms = [_real_part(_inner(p, p)) for p in ps.points]
    if ps.backend == "exact":
        order = _common_order(ps)
        out = np.empty((size, size), dtype=object)
        for i in range(size):
            out[i, i] = Fraction(1)
            for j in range(i + 1, size):
                val = abs2(_inner(ps.points[i], ps.points[j])) / (norms[i] * norms[j])
                val = _canonical_exact(val, order)
                out[i, j] = out[j, i] = val
        return GramMatrix(out, True)
    out = np.eye(size)
    norms = [to_float(n) for n in norms]
    for i in range(size):
        for j in range(i + 1, size):
            val = to_float(abs2(_inner(ps.points[i], ps.points[j]))) / (norms[i] * norms[j])
            out[i, j] = out[j, i] = val
    return GramMatrix(out, False)


@dataclass(frozen=True)
class AngleSet:
    values: tuple
    s: int
    e: int
    eps: int
    exact: bool

    def floats(self) -> list[float]:
        return [to_float(v) for v in self.values]


def angle_set(g: GramMatrix, tol: float | None = None) -> AngleSet:
    """Distinct off-diagonal Gram values, sorted ascending."""
    tol = default_tol() if tol is None else tol
    size = g.size
    if g.exact:
        seen: dict = {}
        for i in range(size):
            for j in range(i + 1, size):
                v = g.entries[i, j]
                if v == 1:
                    raise DuplicatePointError(f"points {i} and {j} are projectively equal")
                seen.setdefault(v, (i, j))
        values = sorted(seen, key=to_float)
        zero = [v for v in values if v == 0]
    else:
        offdiag = g.entries[np.triu_indices(size, 1)]
        close = np.argwhere(np.abs(g.entries - 1.0) <= tol)
        for i, j in close:
            if i < j:
                raise DuplicatePointError(f"points {i} and {j} are projectively equal")
        values = []
        for v in np.sort(offdiag):
            if not values or v - values[-1][-1] > tol:
                values.append([v])
            else:
                values[-1].append(v)
        values = [float(np.mean(c)) for c in values]
        if values and abs(values[0]) <= tol:
            values[0] = 0.0
        zero = [v for v in values if v == 0.0]
    s = len(values)
    eps = len(zero)
    return AngleSet(tuple(values), s, s - eps, eps, g.exact)


# -- design files --------------------------------------------------------

def _loc(k, j):
    return f"points[{k}][{j}]"


def _parse_real(raw, exact: bool, where: str):
    if isinstance(raw, bool):
        raise DesignFileError(f"{where}: booleans are not scalars")
    if isinstance(raw, int):
        return Fraction(raw) if exact else float(raw)
    if isinstance(raw, float):
        if exact:
            raise DesignFileError(f"{where}: float literal in an exact design (mixed backends)")
        return raw
    if isinstance(raw, str):
        try:
            return Fraction(raw.strip()) if exact else float(raw)
        except (ValueError, ZeroDivisionError) as err:
            raise DesignFileError(f"{where}: bad scalar {raw!r} ({err})") from None
    raise DesignFileError(f"{where}: expected a decimal string, got {type(raw).__name__}")


def _parse_scalar(raw, field: str, exact: bool, where: str):
    if not isinstance(raw, dict):
        return _parse_real(raw, exact, where)
    keys = set(raw)
    if keys == {"re", "im"}:
        re = _parse_real(raw["re"], exact, where)
        im = _parse_real(raw["im"], exact, where)
        if field == "H":
            return Quaternion(re, im, 0 * re, 0 * re)
        if field == "R" and im:
            raise DesignFileError(f"{where}: non-real scalar in a real design")
        if exact:
            return Cyclotomic(4, [re, im])
        return complex(re, im)
    if keys == {"cyclo"}:
        if not exact:
            raise DesignFileError(f"{where}: cyclotomic scalar in a float design (mixed backends)")
        body = raw["cyclo"]
        if not isinstance(body, dict) or set(body) != {"order", "coeffs"}:
            raise DesignFileError(f"{where}: cyclo needs exactly 'order' and 'coeffs'")
        order = body["order"]
        if not isinstance(order, int) or order < 1:
            raise DesignFileError(f"{where}: cyclotomic order must be a positive integer")
        coeffs = [_parse_real(c, True, where) for c in body["coeffs"]]
        z = Cyclotomic(order, coeffs)
        if field == "R" and not z.is_real():
            raise DesignFileError(f"{where}: non-real scalar in a real design")
        if field == "H":
            q = z.is_rational()
            if q is None:
                raise DesignFileError(f"{where}: quaternionic designs take rational or quat scalars")
            return q
        return z
    if keys == {"quat"}:
        if field != "H":
            raise DesignFileError(f"{where}: quaternion scalar outside an H design")
        comps = raw["quat"]
        if not isinstance(comps, list) or len(comps) != 4:
            raise DesignFileError(f"{where}: quat needs four components")
        return Quaternion(*(_parse_real(c, exact, where) for c in comps))
    raise DesignFileError(f"{where}: unknown scalar object with keys {sorted(keys)}")


def parse_design(text: str) -> PointSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise DesignFileError(f"line {err.lineno}, column {err.colno}: {err.msg}") from None
    if not isinstance(doc, dict):
        raise DesignFileError("top level must be a JSON object")
    missing = {"field", "n", "backend", "points"} - set(doc)
    if missing:
        raise DesignFileError(f"missing keys: {sorted(missing)}")
    field, n, backend, points = doc["field"], doc["n"], doc["backend"], doc["points"]
    if field not in ("R", "C", "H"):
        raise DesignFileError(f"field: expected 'R', 'C' or 'H', got {field!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DesignFileError("n: expected an integer >= 1")
    if backend not in BACKENDS:
        raise DesignFileError(f"backend: expected 'exact' or 'float', got {backend!r}")
    if not isinstance(points, list) or not points:
        raise DesignFileError("points: expected a nonempty list")
    exact = backend == "exact"
    parsed = []
    for k, row in enumerate(points):
        if not isinstance(row, list) or len(row) != n + 1:
            raise DesignFileError(f"points[{k}]: expected a list of {n + 1} scalars")
        vals = tuple(_parse_scalar(raw, field, exact, _loc(k, j)) for j, raw in enumerate(row))
        if not any(bool(v) for v in vals):
            raise DesignFileError(f"points[{k}]: zero vector")
        parsed.append(vals)
    try:
        return PointSet(field, n, tuple(parsed), backend)
    except InvalidPointError as err:
        raise DesignFileError(str(err)) from None


def load_design(path) -> PointSet:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise DesignFileError(f"cannot read {path}: {err}") from None
    return parse_design(text)


def _encode_real(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(Fraction(x))


def _encode_scalar(x):
    if isinstance(x, Quaternion):
        return {"quat": [_encode_real(c) for c in x.components]}
    if isinstance(x, Cyclotomic):
        q = x.is_rational()
        if q is not None:
            return str(q)
        return {"cyclo": {"order": x.order, "coeffs": [str(c) for c in x.coeffs]}}
    if isinstance(x, complex):
        return {"re": repr(x.real), "im": repr(x.imag)}
    return _encode_real(x)


def design_to_dict(ps: PointSet) -> dict:
    return {
        "field": ps.field,
        "n": ps.n,
        "backend": ps.backend,
        "points": [[_encode_scalar(c) for c in p] for p in ps.points],
    }


def dump_design(ps: PointSet) -> str:
    return json.dumps(design_to_dict(ps), indent=1) + "\n"


def save_design(ps: PointSet, path) -> None:
    Path(path).write_text(dump_design(ps), encoding="utf-8")
