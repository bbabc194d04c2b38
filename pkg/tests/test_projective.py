import cmath
import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from projdes.designs import construct_cp1_5design, construct_rp1_polygon
from projdes.exactnum import Cyclotomic, Quaternion, cyclo_make
from projdes.projective import (
    DesignFileError,
    DuplicatePointError,
    InvalidPointError,
    PointSet,
    angle_set,
    dump_design,
    gram,
    load_design,
    orthonormal_basis,
    parse_design,
    save_design,
)

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=12)


def float_cp1_design():
    """Normalized coordinates of the icosahedral 12-point set, in plain floats."""
    eta = cmath.exp(2j * math.pi / 5)
    lam = 2 * math.cos(2 * math.pi / 5)
    mu = 1 / math.sqrt(2 - lam)
    pts = [(1, 0), (0, 1)]
    pts += [(mu * lam * eta ** (k - 3), mu) for k in range(3, 8)]
    pts += [(mu * eta ** (k - 3), -mu * lam) for k in range(8, 13)]
    return pts


def float_gram(pts):
    a = np.array(pts, dtype=complex)
    return np.abs(a.conj() @ a.T) ** 2


# -- examples ---------------------------------------------------------------------

def test_basis_gram_is_identity():
    for f in ("R", "C", "H"):
        g = gram(orthonormal_basis(f, 3))
        assert g.exact and g.size == 4
        assert all(g[i, j] == (1 if i == j else 0) for i in range(4) for j in range(4))


def test_cp1_gram_matches_float_oracle():
    g = gram(construct_cp1_5design())
    oracle = float_gram(float_cp1_design())
    assert np.max(np.abs(g.to_float() - oracle)) < 1e-12
    assert np.allclose(np.diag(oracle), 1)


def test_cp1_angle_set_exact():
    a = angle_set(gram(construct_cp1_5design()))
    assert (a.s, a.e, a.eps) == (3, 2, 1)
    assert a.values[0] == 0
    # the two nonzero angles are the roots of 5 xi^2 - 5 xi + 1
    for v in a.values[1:]:
        assert 5 * v * v - 5 * v + 1 == 0
    expected = [0.0, (5 - math.sqrt(5)) / 10, (5 + math.sqrt(5)) / 10]
    assert np.allclose(a.floats(), expected, atol=1e-14)


def test_float_angle_set_matches_exact():
    ps = construct_cp1_5design()
    ex = angle_set(gram(ps))
    fl = angle_set(gram(ps.to_float()))
    assert not fl.exact and (fl.s, fl.e, fl.eps) == (ex.s, ex.e, ex.eps)
    assert np.allclose(fl.floats(), ex.floats(), atol=1e-12)


def test_quaternion_gram():
    i = Quaternion(0, 1)
    ps = PointSet("H", 1, ((Quaternion(1), Quaternion(0)), (Quaternion(1), i)))
    g = gram(ps)
    assert g[0, 1] == Fraction(1, 2)
    fl = gram(ps.to_float())
    assert abs(fl[0, 1] - 0.5) < 1e-15


# -- invariance properties -------------------------------------------------------

def unit_cyclo(draw_power, order=10):
    return cyclo_make(order, draw_power)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 9), min_size=12, max_size=12))
def test_unit_scaling_exact(powers):
    ps = construct_cp1_5design()
    g = gram(ps)
    pts = [tuple(c * unit_cyclo(k) for c in p) for p, k in zip(ps.points, powers)]
    g2 = gram(PointSet("C", 1, tuple(pts)))
    assert all(g2[i, j] == g[i, j] for i in range(12) for j in range(12))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.floats(0, 2 * math.pi), min_size=12, max_size=12))
def test_unit_scaling_float(phases):
    ps = construct_cp1_5design().to_float()
    g = gram(ps).to_float()
    pts = [tuple(c * cmath.exp(1j * th) for c in p) for p, th in zip(ps.points, phases)]
    g2 = gram(PointSet("C", 1, tuple(pts), "float")).to_float()
    assert np.max(np.abs(g - g2)) < 1e-12


@settings(max_examples=25, deadline=None)
@given(st.lists(rationals.filter(lambda q: q != 0), min_size=4, max_size=4))
def test_nonzero_scaling_exact(scalars):
    ps = construct_rp1_polygon(3)
    g = gram(ps)
    pts = [tuple(c * q for c in p) for p, q in zip(ps.points, scalars)]
    g2 = gram(PointSet("R", 1, tuple(pts)))
    assert all(g2[i, j] == g[i, j] for i in range(4) for j in range(4))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_global_unitary_invariance(seed):
    rng = np.random.default_rng(seed)
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, _ = np.linalg.qr(z)
    pts = [tuple(q @ np.array(p, dtype=complex)) for p in float_cp1_design()]
    g = gram(PointSet("C", 1, tuple(pts), "float")).to_float()
    assert np.max(np.abs(g - float_gram(float_cp1_design()))) < 1e-9


@settings(max_examples=20, deadline=None)
@given(st.permutations(range(12)))
def test_angle_set_order_independent(perm):
    ps = construct_cp1_5design()
    shuffled = PointSet("C", 1, tuple(ps.points[k] for k in perm))
    assert angle_set(gram(shuffled)).values == angle_set(gram(ps)).values


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(rationals, rationals, rationals), min_size=2, max_size=6))
def test_gram_symmetric_and_in_unit_interval(rows):
    rows = [r for r in rows if any(r)]
    if not rows:
        return
    g = gram(PointSet("R", 2, tuple(rows)))
    for i in range(g.size):
        assert g[i, i] == 1
        for j in range(g.size):
            assert g[i, j] == g[j, i]
            assert 0 <= g[i, j] <= 1


# -- errors -----------------------------------------------------------------

def test_zero_point_rejected():
    with pytest.raises(InvalidPointError):
        PointSet("R", 1, ((Fraction(0), Fraction(0)),))


def test_wrong_length_rejected():
    with pytest.raises(InvalidPointError):
        PointSet("R", 2, ((Fraction(1), Fraction(0)),))


def test_mixed_backends_rejected():
    with pytest.raises(InvalidPointError):
        PointSet("R", 1, ((Fraction(1), 0.5),))


def test_duplicate_points_flagged():
    ps = PointSet("R", 1, ((Fraction(1), Fraction(1)), (Fraction(2), Fraction(2)),
                           (Fraction(1), Fraction(0))))
    with pytest.raises(DuplicatePointError):
        angle_set(gram(ps))
    fl = ps.to_float()
    with pytest.raises(DuplicatePointError):
        angle_set(gram(fl))


# -- design files ------------------------------------------------------------

@pytest.mark.parametrize("make", [construct_cp1_5design, lambda: construct_rp1_polygon(4),
                                  lambda: orthonormal_basis("H", 2)])
def test_save_load_roundtrip(tmp_path, make):
    ps = make()
    path = tmp_path / "d.json"
    save_design(ps, path)
    back = load_design(path)
    assert back.field == ps.field and back.n == ps.n
    g1, g2 = gram(ps), gram(back)
    assert all(g1[i, j] == g2[i, j] for i in range(g1.size) for j in range(g1.size))
    assert dump_design(back) == dump_design(ps)


def test_float_roundtrip_is_bit_exact(tmp_path):
    ps = construct_cp1_5design().to_float()
    back = parse_design(dump_design(ps))
    assert back.backend == "float"
    assert np.array_equal(gram(back).to_float(), gram(ps).to_float())


def test_parse_rational_strings_and_complex():
    doc = {"field": "C", "n": 1, "backend": "exact",
           "points": [["1", "0"], [{"re": "1/2", "im": "1"}, "3/4"]]}
    ps = parse_design(json.dumps(doc))
    assert isinstance(ps.points[1][0], Cyclotomic)
    assert ps.points[1][0] == Fraction(1, 2) + cyclo_make(4, 1)
    assert ps.points[1][1] == Fraction(3, 4)


@pytest.mark.parametrize("text, where", [
    ("{not json", "line 1"),
    ('{"field": "C", "n": 1, "backend": "exact", "points": [["1", "0"], ["0", "0"]]}', "points[1]"),
    ('{"field": "C", "n": 1, "backend": "exact", "points": [["1", "x/y"]]}', "points[0][1]"),
    ('{"field": "Z", "n": 1, "backend": "exact", "points": [["1", "0"]]}', "field"),
])
def test_malformed_design_files(text, where):
    with pytest.raises(DesignFileError) as err:
        parse_design(text)
    assert where in str(err.value)
