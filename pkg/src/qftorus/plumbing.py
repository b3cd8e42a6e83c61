"""The zw = t gluing parameter, local annulus coordinates, and the
degeneration to the Maskit normal form as the core length shrinks to zero.

For real lambda the gluing constant is t = e^{-pi^2/lambda} e^{-pi i tau/lambda}
= e^{i pi mu} with mu = (i pi - tau)/lambda.  Keeping mu fixed and letting
lambda -> 0 sends the generator pair to the standard Maskit-slice generators
S0 = [[1, 2], [0, 1]], T0 = [[-i mu, -i], [-i, 0]].

All logarithms are principal; arguments on the branch cut are rejected, not
perturbed, because the gluing identity z(T(Q)) w(Q) = t is branch-sensitive.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import BranchCutError, DomainError
from .groups import FNCoords, gen_S
from .moebius import MoebiusMap


def _require_real_positive(lam) -> float:
    lam = complex(lam)
    if abs(lam.imag) > 1e-13 * max(1.0, abs(lam)):
        raise DomainError(f"lambda must be real, got {lam!r}")
    if not lam.real > 0:
        raise DomainError(f"lambda must be positive, got {lam!r}")
    return lam.real


def plumbing_t(coords: FNCoords) -> complex:
    """The gluing parameter e^{-pi^2/lambda - pi i tau/lambda} (lambda real)."""
    lam = _require_real_positive(coords.lam)
    return cmath.exp(-math.pi ** 2 / lam - 1j * math.pi * coords.tau / lam)


def mu_of(coords: FNCoords) -> complex:
    """mu = (i pi - tau) / lambda."""
    lam = _require_real_positive(coords.lam)
    return (1j * math.pi - coords.tau) / lam


def coords_of_mu(lam: float, mu: complex) -> FNCoords:
    """Inverse of mu_of: tau = i pi - lambda mu."""
    lam = _require_real_positive(lam)
    return FNCoords(lam, 1j * math.pi - lam * complex(mu))


@dataclass(frozen=True)
class PlumbingParams:
    """The pair (t, mu); t = e^{i pi mu} whenever both come from one group."""

    t: complex
    mu: complex


def plumbing_params(coords: FNCoords) -> PlumbingParams:
    t = plumbing_t(coords)
    mu = mu_of(coords)
    if __debug__:
        assert abs(t - cmath.exp(1j * math.pi * mu)) <= 1e-10 * max(1.0, abs(t))
    return PlumbingParams(t, mu)


def gen_T_mu(lam: float, mu: complex) -> MoebiusMap:
    """The gluing generator in plumbing-parameter form.

    Equals gen_T(lam, i pi - lam mu) entry for entry (same lift, up to
    rounding): cosh((i pi - lam mu)/2) = -i sinh(lam mu / 2) and likewise
    for sinh.
    """
    lam = _require_real_positive(lam)
    mu = complex(mu)
    sh = cmath.sinh(lam * mu / 2.0)
    ch = cmath.cosh(lam * mu / 2.0)
    return MoebiusMap(-1j * sh / cmath.tanh(lam / 2.0), -1j * ch,
                      -1j * ch, -1j * sh * cmath.tanh(lam / 2.0))


def maskit_generators(mu: complex) -> tuple[MoebiusMap, MoebiusMap]:
    """The terminal-group normal form: S0 = [[1,2],[0,1]], T0 = [[-i mu,-i],[-i,0]]."""
    mu = complex(mu)
    s0 = MoebiusMap(1.0, 2.0, 0.0, 1.0)
    t0 = MoebiusMap(-1j * mu, -1j, -1j, 0.0)
    return s0, t0


def _lift_aligned_error(m: MoebiusMap, target: MoebiusMap) -> float:
    def gap(sign: float) -> float:
        return max(abs(sign * m.a - target.a), abs(sign * m.b - target.b),
                   abs(sign * m.c - target.c), abs(sign * m.d - target.d))
    return min(gap(1.0), gap(-1.0))


def maskit_limit_error(lam: float, mu: complex) -> float:
    """Entrywise distance of the (lam, mu) generators from their Maskit limit.

    Both generator gaps are measured after choosing the lift sign that
    minimises them, so the SL(2,C) sign ambiguity cannot pollute a
    convergence-rate measurement.
    """
    lam = _require_real_positive(lam)
    s0, t0 = maskit_generators(mu)
    err_t = _lift_aligned_error(gen_T_mu(lam, mu), t0)
    err_s = _lift_aligned_error(gen_S(lam), s0)
    return max(err_t, err_s)


def _principal_log_ratio(num: complex, den: complex) -> complex:
    if den == 0:
        raise BranchCutError("coordinate ratio has a pole at this point")
    ratio = num / den
    if ratio == 0 or (abs(ratio.imag) <= 1e-15 * abs(ratio) and ratio.real <= 0):
        raise BranchCutError(f"ratio {ratio!r} lies on the principal branch cut")
    return cmath.log(ratio)


def z_coord(p: complex, lam: float) -> complex:
    """Annulus coordinate near the boundary geodesic of S.

    z(P) = exp((i pi / lambda) Log((P sinh(lambda/2) + cosh(lambda/2)) /
                                   (-P sinh(lambda/2) + cosh(lambda/2))))
    for P in the upper half-plane; the image lies in the round annulus
    e^{-pi^2/lambda} < |z| < 1 and the axis of S lands on |z| = e^{-pi^2/2 lambda}.
    """
    lam = _require_real_positive(lam)
    p = complex(p)
    sh = math.sinh(lam / 2.0)
    ch = math.cosh(lam / 2.0)
    val = _principal_log_ratio(p * sh + ch, -p * sh + ch)
    return cmath.exp(1j * math.pi / lam * val)


def w_coord(q: complex, lam: float) -> complex:
    """Annulus coordinate near the boundary geodesic of S'.

    w(Q) = exp((i pi / lambda) Log((Q cosh(lambda/2) - sinh(lambda/2)) /
                                   (Q cosh(lambda/2) + sinh(lambda/2)))).
    Together with z it satisfies the gluing identity z(T(Q)) w(Q) = t.
    """
    lam = _require_real_positive(lam)
    q = complex(q)
    sh = math.sinh(lam / 2.0)
    ch = math.cosh(lam / 2.0)
    val = _principal_log_ratio(q * ch - sh, q * ch + sh)
    return cmath.exp(1j * math.pi / lam * val)


def tame_mu_interval(lam: float) -> tuple[float, float]:
    """Im(mu) range of tame gluings: ((pi - theta0)/lambda, pi/lambda).

    As lambda -> 0 this tends to (2, inf), the tame condition in the
    Maskit slice.
    """
    lam = _require_real_positive(lam)
    theta0 = 2.0 * math.acos(math.tanh(lam))
    return ((math.pi - theta0) / lam, math.pi / lam)
