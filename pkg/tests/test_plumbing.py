"""Gluing parameter, annulus coordinates, Maskit degeneration."""

import cmath
import math

import pytest

from qftorus.errors import BranchCutError, DomainError
from qftorus.groups import FNCoords, build_group, gen_S, gen_T
from qftorus.plumbing import (
    coords_of_mu,
    gen_T_mu,
    maskit_generators,
    maskit_limit_error,
    mu_of,
    plumbing_params,
    plumbing_t,
    tame_mu_interval,
    w_coord,
    z_coord,
)

from helpers import weyl_box

LN2 = math.log(2)


# -- t and mu -------------------------------------------------------------------

def test_plumbing_t_at_pi():
    assert abs(plumbing_t(FNCoords(math.pi, 0.0)) - math.exp(-math.pi)) < 1e-12


def test_plumbing_t_modulus_for_real_tau():
    for lam, tau in ((0.3, 0.0), (LN2, 1.7), (2.0, -0.9)):
        t = plumbing_t(FNCoords(lam, tau))
        assert abs(abs(t) - math.exp(-math.pi ** 2 / lam)) < 1e-12


def test_plumbing_t_tau_shift_flips_sign():
    lam, tau = 0.8, 0.3 + 0.2j
    t1 = plumbing_t(FNCoords(lam, tau))
    t2 = plumbing_t(FNCoords(lam, tau + lam))
    assert abs(t2 + t1) < 1e-12 * abs(t1)


def test_plumbing_t_requires_real_lambda():
    with pytest.raises(DomainError):
        plumbing_t(FNCoords(1 + 0.3j, 0.0))


def test_mu_round_trip():
    for lam, mu in ((1.0, 2j), (LN2, 1.5 - 0.7j), (0.1, -2 + 4j)):
        coords = coords_of_mu(lam, mu)
        assert abs(mu_of(coords) - mu) < 1e-14 * max(1.0, abs(mu))


def test_mu_examples():
    assert abs(mu_of(FNCoords(LN2, 1j * math.pi))) < 1e-14
    coords = coords_of_mu(1.0, 2j)
    assert abs(coords.tau - 1j * (math.pi - 2)) < 1e-14


def test_fuchsian_line_in_mu():
    # Im(mu) = pi / lambda corresponds to real tau
    lam = 0.9
    coords = coords_of_mu(lam, 0.7 + 1j * math.pi / lam)
    assert abs(coords.tau.imag) < 1e-12


def test_plumbing_params_invariant():
    p = plumbing_params(FNCoords(LN2, 0.4 + 0.5j))
    assert abs(p.t - cmath.exp(1j * math.pi * p.mu)) < 1e-10 * max(1.0, abs(p.t))


# -- normal forms ------------------------------------------------------------------

def test_gen_T_mu_matches_gen_T():
    for i in range(20):
        lam = weyl_box(i, 0, 0.1, 2.0)
        mu = complex(weyl_box(i, 1, -2.0, 2.0), weyl_box(i, 2, 0.5, 5.0))
        a = gen_T_mu(lam, mu)
        b = gen_T(lam, 1j * math.pi - lam * mu)
        assert a.same_moebius(b, 1e-10 * max(1.0, a.entry_scale()))


def test_gen_T_mu_trace():
    lam, mu = 0.7, 1.2 + 2.5j
    t = gen_T_mu(lam, mu)
    want = -1j * cmath.sinh(lam * mu / 2) * (1 / math.tanh(lam / 2) + math.tanh(lam / 2))
    assert abs(t.trace() - want) < 1e-12 * max(1.0, abs(want))


def test_maskit_generators():
    s0, t0 = maskit_generators(1 + 2j)
    assert s0.classify() == "parabolic"
    assert abs(s0.trace() - 2.0) < 1e-15
    assert abs(t0.det() - 1.0) < 1e-15
    comm = t0.inverse() @ s0.inverse() @ t0 @ s0
    assert abs(comm.trace() + 2.0) < 1e-12


def test_gen_T_mu_small_lambda_limit():
    mu = 1 + 2j
    _, t0 = maskit_generators(mu)
    t = gen_T_mu(1e-6, mu)
    assert t.same_lift(t0, 1e-5)


# -- degeneration rate ----------------------------------------------------------------

def test_maskit_limit_error_decays():
    mu = 1 + 2j
    errs = [maskit_limit_error(lam, mu) for lam in (1e-1, 1e-2, 1e-3, 1e-4)]
    assert all(a > b for a, b in zip(errs, errs[1:]))
    assert errs[-1] < 1e-7


def test_maskit_error_over_lambda_bounded():
    for i in range(10):
        mu = complex(weyl_box(i, 0, -2.0, 2.0), weyl_box(i, 1, 1.0, 5.0))
        for lam in (1e-1, 1e-2, 1e-3):
            assert maskit_limit_error(lam, mu) / lam < 20.0


def test_maskit_s_part_quadratic():
    s0, _ = maskit_generators(0.0)
    for lam in (1e-1, 1e-2, 1e-3):
        err = max(abs(gen_S(lam).a - s0.a), abs(gen_S(lam).b - s0.b),
                  abs(gen_S(lam).c - s0.c), abs(gen_S(lam).d - s0.d))
        assert err < 1.0 * lam ** 2


# -- annulus coordinates ---------------------------------------------------------------

def test_z_on_axis_of_S():
    for lam in (0.3, LN2, 2.0):
        p = 1j / math.tanh(lam / 2)  # on the axis of S
        assert abs(abs(z_coord(p, lam)) - math.exp(-math.pi ** 2 / (2 * lam))) < 1e-9


def test_z_image_in_annulus():
    lam = LN2
    for i in range(30):
        p = complex(weyl_box(i, 0, -3.0, 3.0), weyl_box(i, 1, 0.05, 3.0))
        z = z_coord(p, lam)
        assert math.exp(-math.pi ** 2 / lam) < abs(z) < 1.0


def test_plumbing_identity():
    for lam in (0.3, LN2, 2.0):
        for tau in (0.0, 0.6, -1.1):
            c = FNCoords(lam, tau)
            g = build_group(c)
            t = plumbing_t(c)
            for i in range(10):
                q = complex(weyl_box(i, 2, -1.5, 1.5), weyl_box(i, 3, 0.1, 2.0))
                tq = g.T.apply(q)
                assert abs(z_coord(tq, lam) * w_coord(q, lam) - t) < 1e-9


def test_branch_cut_rejection():
    with pytest.raises(BranchCutError):
        w_coord(0.0, LN2)  # ratio -1, on the cut
    with pytest.raises(BranchCutError):
        z_coord(2 / math.tanh(LN2 / 2), LN2)  # real point beyond fix(S)


# -- tame interval ----------------------------------------------------------------------

def test_tame_mu_interval_values():
    lo, hi = tame_mu_interval(LN2)
    assert abs(lo - (math.pi - 2 * math.acos(3 / 5)) / LN2) < 1e-12
    assert abs(hi - math.pi / LN2) < 1e-12
    assert abs(lo - 1.8567517169252412) < 1e-12
    assert abs(hi - 4.532360141827194) < 1e-12


def test_tame_mu_interval_small_lambda():
    lo, hi = tame_mu_interval(1e-3)
    assert abs(lo - 2.0) < 0.05
    assert hi > 1000.0


def test_tame_mu_interval_domain():
    with pytest.raises(DomainError):
        tame_mu_interval(0.0)
