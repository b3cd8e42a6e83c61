"""Tame bound, shear, footpoints, ray tracing, membership sweep."""

import cmath
import math

import numpy as np
import pytest

from qftorus.errors import DomainError, FuchsianInputError
from qftorus.farey import Slope, word
from qftorus.groups import FNCoords
from qftorus.pleating import (
    LambdaSlice,
    complex_shear,
    fuchsian_footpoint,
    is_tame,
    qf_heuristic,
    theta0,
    trace_on_real_grid,
    trace_ray,
)

from helpers import weyl_box

LN2 = math.log(2)
THETA0_LN2 = 2 * math.acos(3 / 5)


# -- theta0 and tameness -------------------------------------------------------

def test_theta0_at_ln2():
    assert abs(theta0(LN2) - THETA0_LN2) < 1e-14
    assert abs(THETA0_LN2 - 1.854590436) < 1e-9


def test_theta0_limits_and_monotonicity():
    lams = [0.05, 0.3, 0.7, 1.5, 3.0, 6.0]
    vals = [theta0(l) for l in lams]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert theta0(1e-9) > math.pi - 1e-6
    assert theta0(20.0) < 1e-6


def test_theta0_small_lambda_expansion():
    # theta0 = pi - 2 lambda + O(lambda^2)
    for lam in (1e-1, 1e-2, 1e-3):
        assert abs(theta0(lam) + 2 * lam - math.pi) < 0.5 * lam ** 2


def test_theta0_domain():
    with pytest.raises(DomainError):
        theta0(-1.0)
    with pytest.raises(DomainError):
        theta0(0.0)


def test_is_tame():
    assert is_tame(FNCoords(LN2, 0.5j))
    assert not is_tame(FNCoords(LN2, 1.86j))
    for lam in (0.2, 1.0, 2.5):
        assert is_tame(FNCoords(lam, 1.7))
    with pytest.raises(DomainError):
        is_tame(FNCoords(1 + 0.5j, 0.0))


# -- complex shear ---------------------------------------------------------------

def test_shear_signs():
    s = complex_shear(FNCoords(LN2, -1 + 0.4j))
    assert abs(s.sigma - (-1 + 0.4j)) < 1e-15
    s = complex_shear(FNCoords(LN2, -1 - 0.4j))
    assert abs(s.sigma - (1 + 0.4j)) < 1e-15


def test_shear_fuchsian_raises():
    with pytest.raises(FuchsianInputError):
        complex_shear(FNCoords(LN2, 0.7))


def test_shear_angle_bound():
    with pytest.raises(DomainError):
        complex_shear(FNCoords(LN2, 3.3j))


def test_shear_trace_identity():
    from qftorus.groups import gen_T
    for i in range(40):
        lam = weyl_box(i, 0, 0.2, 2.0)
        tau = complex(weyl_box(i, 1, -2.0, 2.0), weyl_box(i, 2, -3.0, 3.0))
        if tau.imag == 0.0:
            continue
        sigma = complex_shear(FNCoords(lam, tau)).sigma
        assert 0.0 < sigma.imag < math.pi
        lhs = cmath.cosh(sigma / 2)
        rhs = gen_T(lam, tau).trace() * math.tanh(lam) / 2
        assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(lhs))


# -- footpoints -------------------------------------------------------------------

def test_footpoint_integer_slopes():
    for lam in (0.3, LN2, 1.5):
        for m in (-2, -1, 0, 1, 2):
            fp = fuchsian_footpoint(lam, Slope(m, 1))
            assert abs(fp + 2 * m * lam) < 1e-9


def test_footpoint_one_half_regression():
    # by the symmetry between the 0- and 1-curves the 1/2 footpoint is -lambda
    fp = fuchsian_footpoint(LN2, Slope(1, 2))
    assert abs(fp + LN2) < 1e-9
    from qftorus.farey import trace_slope
    assert abs(trace_slope(Slope(1, 2), FNCoords(LN2, fp)) - 10.0) < 1e-10


def test_footpoint_derivative_small():
    from qftorus.pleating import _evaluator
    for s in (Slope(1, 3), Slope(2, 5)):
        fp = fuchsian_footpoint(LN2, s)
        _, dtr = _evaluator(s, LN2).trace_dtrace(complex(fp))
        assert abs(dtr.real) < 1e-10


def test_footpoint_unique_minimum_small_q():
    for s in (Slope(1, 2), Slope(1, 3), Slope(2, 3)):
        w = 2 * s.complexity() * LN2 + 10
        taus = np.arange(-w, w, 1e-3)
        vals = np.abs(trace_on_real_grid(s, LN2, taus))
        mins = np.flatnonzero((vals[1:-1] < vals[:-2]) & (vals[1:-1] < vals[2:]))
        assert len(mins) == 1


def test_footpoint_infinite_slope_rejected():
    with pytest.raises(DomainError):
        fuchsian_footpoint(LN2, Slope(1, 0))


# -- ray tracing -----------------------------------------------------------------

def test_integer_rays_vertical_with_theta0_endpoint():
    for m in (-1, 0, 2):
        ray = trace_ray(LN2, Slope(m, 1), "top")
        assert all(abs(z.real + 2 * m * LN2) < 1e-6 for z, _ in ray.samples)
        assert abs(ray.endpoint.imag - THETA0_LN2) < 1e-6
        assert abs(ray.endpoint.real + 2 * m * LN2) < 1e-6


def test_ray_sample_invariants():
    ray = trace_ray(LN2, Slope(1, 3), "top")
    assert ray.samples[0][0] == complex(ray.footpoint)
    for i, (z, tr) in enumerate(ray.samples):
        assert abs(tr.imag) < 1e-9
        assert abs(tr) > 2 - 1e-9
        if 0 < i:
            assert z.imag > 0
    assert abs(abs(ray.samples[-1][1]) - 2.0) < 1e-9
    assert ray.endpoint == ray.samples[-1][0]


def test_ray_bottom_is_conjugate():
    top = trace_ray(LN2, Slope(1, 2), "top")
    bot = trace_ray(LN2, Slope(1, 2), "bottom")
    assert abs(bot.endpoint - top.endpoint.conjugate()) < 1e-8
    assert all(z.imag < 0 for z, _ in bot.samples[1:])


def test_ray_orthogonal_launch():
    # the locus leaves the axis vertically; check the traced samples do too
    for s in (Slope(1, 3), Slope(2, 3)):
        ray = trace_ray(LN2, s, "top", step=5e-4)
        z0, z1, z2 = (ray.samples[i][0] for i in (0, 1, 2))
        a1 = cmath.phase(z1 - z0)
        a2 = cmath.phase(z2 - z0)
        assert abs(2 * a1 - a2 - math.pi / 2) < 1e-3


def test_ray_monotone_arclength():
    ray = trace_ray(LN2, Slope(1, 2), "top")
    taus = ray.taus
    steps = [abs(b - a) for a, b in zip(taus, taus[1:])]
    assert all(s > 0 for s in steps)


def test_ray_rejects_bad_args():
    with pytest.raises(DomainError):
        trace_ray(LN2, Slope(1, 0), "top")
    with pytest.raises(DomainError):
        trace_ray(LN2, Slope(0, 1), "sideways")
    with pytest.raises(DomainError):
        trace_ray(LN2, Slope(0, 1), "top", step=-0.1)
    with pytest.raises(DomainError):
        trace_ray(-1.0, Slope(0, 1), "top")


# -- membership sweep --------------------------------------------------------------

def test_qf_heuristic_tame():
    assert qf_heuristic(FNCoords(LN2, 0.5j), 3).kind == "certified_tame"
    assert qf_heuristic(FNCoords(LN2, 1.2), 3).kind == "certified_tame"


def test_qf_heuristic_elliptic_word():
    v = qf_heuristic(FNCoords(LN2, 1j * (THETA0_LN2 + 0.05)), 3)
    assert v.kind == "elliptic_word"
    assert v.slope == Slope(0, 1)
    assert v.word is word(Slope(0, 1))


def test_qf_heuristic_parabolic_word_on_boundary():
    v = qf_heuristic(FNCoords(LN2, 1j * THETA0_LN2), 3)
    assert v.kind == "parabolic_word"
    assert v.slope == Slope(0, 1)


def test_qf_heuristic_no_obstruction():
    # beyond the tame strip but off the symmetry axis, small sweeps find nothing
    v = qf_heuristic(FNCoords(LN2, 0.9 + 1.87j), 2)
    assert v.kind in ("no_obstruction", "elliptic_word", "parabolic_word")


def test_qf_heuristic_bad_args():
    with pytest.raises(DomainError):
        qf_heuristic(FNCoords(LN2, 0.5j), 0)


# -- slice container -----------------------------------------------------------------

def test_lambda_slice_validation():
    LambdaSlice(LN2, (-2.0, 2.0), (-1.8, 1.8))
    with pytest.raises(DomainError):
        LambdaSlice(-1.0, (-2.0, 2.0), (-1.0, 1.0))
    with pytest.raises(DomainError):
        LambdaSlice(LN2, (-2.0, 2.0), (-4.0, 4.0))
    with pytest.raises(DomainError):
        LambdaSlice(LN2, (2.0, -2.0), (-1.0, 1.0))
