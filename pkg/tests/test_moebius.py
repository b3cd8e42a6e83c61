"""Matrix algebra and sphere-action tests."""

import cmath
import math

import pytest

from qftorus.errors import DegenerateInputError
from qftorus.groups import FNCoords, build_group, gen_K, gen_S, gen_Sprime, gen_T
from qftorus.moebius import INFINITY, MoebiusMap, is_infinity

from helpers import sample_coords

LN2 = math.log(2)


def test_identity_compose():
    m = gen_S(1.3 + 0.2j)
    assert MoebiusMap.identity().compose(m).same_lift(m, 1e-15)
    assert m.compose(MoebiusMap.identity()).same_lift(m, 1e-15)


def test_inverse_gives_identity():
    m = gen_S(0.9 - 0.4j)
    assert m.compose(m.inverse()).is_identity(1e-12)
    assert m.inverse().compose(m).is_identity(1e-12)


def test_commutator_trace_is_minus_two():
    g = build_group(FNCoords(0.8 + 0.3j, 1.1 - 0.7j))
    comm = g.T.inverse() @ g.S.inverse() @ g.T @ g.S
    assert abs(comm.trace() + 2.0) < 1e-12


def test_construction_rejects_bad_determinant():
    with pytest.raises(ValueError):
        MoebiusMap(1.0, 2.0, 3.0, 4.0)


def test_normalized_scales_to_det_one():
    m = MoebiusMap.normalized(2.0, 1.0, 1.0, 1.0)
    assert abs(m.det() - 1.0) < 1e-14


def test_apply_identity_and_parabolic_fixed_point():
    assert MoebiusMap.identity().apply(3.7 - 0.2j) == 3.7 - 0.2j
    k = gen_K(0.77)
    assert abs(k.apply(-1.0) - (-1.0)) < 1e-14


def test_apply_fixed_point_of_S_at_ln2():
    # coth(ln2 / 2) = 3 exactly
    s = gen_S(LN2)
    assert abs(s.apply(3.0) - 3.0) < 1e-12


def test_apply_infinity_conventions():
    t0 = gen_T(LN2, 0.0)  # diagonal: fixes 0 and infinity
    assert is_infinity(t0.apply(INFINITY))
    s = gen_S(LN2)
    assert abs(s.apply(INFINITY) - s.a / s.c) < 1e-14
    # pole maps to infinity
    z_pole = -s.d / s.c
    assert is_infinity(s.apply(z_pole))


def test_fixed_points_of_generators():
    plus, minus = gen_S(LN2).fixed_points()
    assert abs(plus - 3.0) < 1e-12 and abs(minus + 3.0) < 1e-12
    plus, minus = gen_Sprime(LN2).fixed_points()
    assert abs(plus - 1 / 3) < 1e-12 and abs(minus + 1 / 3) < 1e-12
    f1, f2 = gen_K(1.3).fixed_points()
    assert f1 == f2
    assert abs(f1 - (-1.0)) < 1e-12


def test_fixed_points_identity_raises():
    with pytest.raises(DegenerateInputError):
        MoebiusMap.identity().fixed_points()
    with pytest.raises(DegenerateInputError):
        MoebiusMap(-1.0, 0.0, 0.0, -1.0).fixed_points()


def test_fixed_points_diagonal_has_infinity():
    t0 = gen_T(LN2, 0.0)
    f1, f2 = t0.fixed_points()
    assert is_infinity(f1)
    assert abs(f2) < 1e-14


def test_classify():
    assert gen_K(0.9).classify() == "parabolic"
    assert gen_S(1.0).classify() == "loxodromic"
    theta = 2.0
    rot = MoebiusMap(cmath.exp(1j * theta / 2), 0.0, 0.0, cmath.exp(-1j * theta / 2))
    assert abs(rot.trace() - 2 * math.cos(theta / 2)) < 1e-14
    assert rot.classify() == "elliptic"
    assert MoebiusMap.identity().classify() == "identity"
    assert MoebiusMap(-1.0, 0.0, 0.0, -1.0).classify() == "identity"


def test_sign_lift_distinction():
    m = gen_S(0.6)
    n = m.negate()
    assert m.same_moebius(n)
    assert not m.same_lift(n)
    assert m.same_lift(m)


def test_det_invariant_under_composition():
    coords = sample_coords(50)
    for c in coords:
        g = build_group(c)
        m = g.S @ g.T
        assert abs(m.det() - 1.0) <= 1e-12 * max(1.0, m.entry_scale() ** 2)


def test_action_is_homomorphism():
    for i, c in enumerate(sample_coords(30)):
        g = build_group(c)
        z = complex(0.3 + 0.1 * (i % 7), 0.2 + 0.05 * (i % 5))
        lhs = (g.S @ g.T).apply(z)
        rhs = g.S.apply(g.T.apply(z))
        assert abs(lhs - rhs) < 1e-9 * max(1.0, abs(lhs))


def test_fixed_points_are_fixed():
    for c in sample_coords(30):
        g = build_group(c)
        for m in (g.S, g.T):
            for f in m.fixed_points():
                if is_infinity(f):
                    continue
                img = m.apply(f)
                assert not is_infinity(img)
                assert abs(img - f) < 1e-9 * max(1.0, abs(f))


def test_trace_cyclicity():
    for c in sample_coords(30):
        g = build_group(c)
        t1 = (g.S @ g.T).trace()
        t2 = (g.T @ g.S).trace()
        assert abs(t1 - t2) < 1e-12 * max(1.0, abs(t1))
