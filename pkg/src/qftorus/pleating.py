"""Tameness bound, complex shear, and rational pleating rays in lambda-slices.

With lambda real and fixed, the slice consists of the admissible twist-bend
values tau.  Bending angles below theta0 = 2 arccos(tanh lambda) certify a
quasi-Fuchsian group (Maskit combination); beyond that nothing is certified,
and the elliptic-word sweep in `qf_heuristic` can only exclude points.

A pleating ray for a finite slope p/q is the arc in the upper (or lower)
half tau-plane on which the slope's word trace is real with modulus at
least 2.  It leaves the real axis orthogonally at the unique minimum of the
Fuchsian trace (Wolpert convexity gives exactly one) and ends where the
trace reaches 2, i.e. where the curve becomes parabolic.  Rays are traced
by a predictor-corrector continuation: the tangent comes from the
holomorphic derivative of the trace (accumulated letter by letter by the
product rule - finite differences destabilise the corrector near the
boundary), the corrector is 1-D Newton on Im(trace) transverse to the
tangent, and the endpoint is polished by bisection on trace - 2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    FuchsianInputError,
    RayTraceError,
    SearchFailureError,
    SingularRayError,
    StepTooLargeError,
)
from .farey import Slope, Word, evaluate, trace_sign, word
from .groups import FNCoords, build_group


def _real_positive(lam) -> float:
    lam = complex(lam)
    if abs(lam.imag) > 1e-13 * max(1.0, abs(lam)):
        raise DomainError(f"lambda must be real, got {lam!r}")
    if not lam.real > 0:
        raise DomainError(f"lambda must be positive, got {lam!r}")
    return lam.real


def theta0(lam: float) -> float:
    """Critical bending angle 2 arccos(tanh lambda), in (0, pi).

    Strictly decreasing in lambda; pi - 2 lambda + O(lambda^2) near zero,
    tending to 0 as lambda grows.
    """
    lam = _real_positive(lam)
    return 2.0 * math.acos(math.tanh(lam))


def is_tame(coords: FNCoords) -> bool:
    """True when |Im tau| < theta0(lambda), certifying quasi-Fuchsian.

    False is inconclusive: the slice extends beyond the tame strip.
    """
    lam = _real_positive(coords.lam)
    return abs(coords.tau.imag) < theta0(lam)


@dataclass(frozen=True)
class ShearValue:
    """Complex shear along the distinguished curve; Im sigma in (-pi, pi)."""

    sigma: complex


def complex_shear(coords: FNCoords) -> ShearValue:
    """The shear-bend along S with respect to T: sigma = tau for Im tau > 0,
    sigma = -tau for Im tau < 0.

    Fuchsian input (Im tau = 0) has no bending and raises; the shear there
    is just the real twist.  Satisfies cosh(sigma/2) = tr(T) tanh(lambda)/2.
    """
    lam = _real_positive(coords.lam)
    theta = coords.tau.imag
    if theta == 0.0:
        raise FuchsianInputError("Im(tau) = 0: shear is the real twist")
    if not abs(theta) < math.pi:
        raise DomainError(f"|Im tau| must be below pi, got {theta!r}")
    sigma = coords.tau if theta > 0 else -coords.tau
    if __debug__:
        from .groups import gen_T
        lhs = cmath.cosh(sigma / 2.0)
        rhs = gen_T(lam, coords.tau).trace() * math.tanh(lam) / 2.0
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))
    return ShearValue(sigma)


@dataclass(frozen=True)
class LambdaSlice:
    """A rectangle of twist-bend values at fixed real lambda, for figures."""

    lam: float
    re_range: tuple[float, float]
    im_range: tuple[float, float]
    samples: int = 512

    def __post_init__(self):
        if not self.lam > 0:
            raise DomainError("lambda must be positive")
        lo, hi = self.im_range
        if not (-math.pi < lo < hi < math.pi):
            raise DomainError("Im tau range must lie inside (-pi, pi)")
        if not self.re_range[0] < self.re_range[1]:
            raise DomainError("empty Re tau range")
        if self.samples < 2:
            raise DomainError("need at least 2 samples")


@dataclass(frozen=True)
class PleatingRay:
    """A traced rational pleating ray in one lambda-slice.

    samples are (tau, trace) pairs in arclength order starting at the
    Fuchsian footpoint; the trace is real (to the corrector tolerance) and
    of modulus >= 2 on every sample, exactly 2 at the refined endpoint.
    """

    slope: Slope
    lam: float
    side: str
    samples: tuple[tuple[complex, complex], ...]
    footpoint: float
    endpoint: complex

    @property
    def taus(self) -> list[complex]:
        return [z for z, _ in self.samples]

    @property
    def traces(self) -> list[complex]:
        return [t for _, t in self.samples]


class _WordEvaluator:
    """Fast trace and d(trace)/d(tau) of one Farey word at fixed real lambda.

    Letter matrices are kept as 4-tuples of complex numbers; only the T
    letters depend on tau, with closed-form derivatives.
    """

    def __init__(self, w: Word, lam: float, sign: int):
        self.letters = w.letters
        self.lam = lam
        self.sign = sign
        c = math.cosh(lam)
        self._s = (c, c + 1.0, c - 1.0, c)
        self._si = (c, -(c + 1.0), -(c - 1.0), c)
        self._k2 = 1.0 / math.tanh(lam / 2.0)  # coth(lambda/2)

    def _tau_mats(self, tau: complex):
        ch = cmath.cosh(tau / 2.0)
        sh = cmath.sinh(tau / 2.0)
        k2 = self._k2
        t = (ch * k2, -sh, -sh, ch / k2)
        ti = (ch / k2, sh, sh, ch * k2)
        dt = (sh * k2 / 2.0, -ch / 2.0, -ch / 2.0, sh / (2.0 * k2))
        dti = (sh / (2.0 * k2), ch / 2.0, ch / 2.0, sh * k2 / 2.0)
        return t, ti, dt, dti

    def trace_dtrace(self, tau: complex) -> tuple[complex, complex]:
        t, ti, dt, dti = self._tau_mats(tau)
        zero = (0.0, 0.0, 0.0, 0.0)
        mats = {"S": (self._s, zero), "s": (self._si, zero),
                "T": (t, dt), "t": (ti, dti)}
        ma, mb, mc, md = 1.0, 0.0, 0.0, 1.0
        da, db, dc, dd = 0.0, 0.0, 0.0, 0.0
        for ch_ in self.letters:
            (la, lb, lc, ld), (ea, eb, ec, ed) = mats[ch_]
            # d(M L) = dM L + M dL
            da, db, dc, dd = (da * la + db * lc + ma * ea + mb * ec,
                              da * lb + db * ld + ma * eb + mb * ed,
                              dc * la + dd * lc + mc * ea + md * ec,
                              dc * lb + dd * ld + mc * eb + md * ed)
            ma, mb, mc, md = (ma * la + mb * lc, ma * lb + mb * ld,
                              mc * la + md * lc, mc * lb + md * ld)
        return self.sign * (ma + md), self.sign * (da + dd)

    def trace(self, tau: complex) -> complex:
        return self.trace_dtrace(tau)[0]

    def trace_grid(self, taus: np.ndarray) -> np.ndarray:
        """Sign-normalised trace on an array of real tau values."""
        ch = np.cosh(taus / 2.0)
        sh = np.sinh(taus / 2.0)
        k2 = self._k2
        t = (ch * k2, -sh, -sh, ch / k2)
        ti = (ch / k2, sh, sh, ch * k2)
        mats = {"S": self._s, "s": self._si, "T": t, "t": ti}
        ma, mb, mc, md = 1.0, 0.0, 0.0, 1.0
        for ch_ in self.letters:
            la, lb, lc, ld = mats[ch_]
            ma, mb, mc, md = (ma * la + mb * lc, ma * lb + mb * ld,
                              mc * la + md * lc, mc * lb + md * ld)
        return self.sign * (ma + md)


def _evaluator(s: Slope, lam: float) -> _WordEvaluator:
    return _WordEvaluator(word(s), lam, trace_sign(s, lam))


def trace_on_real_grid(s: Slope, lam: float, taus: np.ndarray) -> np.ndarray:
    """Sign-normalised trace of the slope's word along real tau values."""
    return _evaluator(s, _real_positive(lam)).trace_grid(np.asarray(taus, dtype=float))


def fuchsian_footpoint(lam: float, s: Slope) -> float:
    """The unique real tau minimising |trace| of the slope's word.

    The Fuchsian trace is a strictly convex positive function of the real
    twist (its second derivative along Fuchsian space is strictly positive),
    so a coarse bracketing scan, golden-section refinement and a Newton
    polish on the analytic derivative isolate the minimum.  The scan window
    expands up to |tau| <= 2 (|p| + q) lambda + 10 before giving up.
    """
    lam = _real_positive(lam)
    if s.is_infinite:
        raise DomainError("slope infinity has constant trace on the slice")
    ev = _evaluator(s, lam)
    cap = 2.0 * s.complexity() * lam + 10.0
    window = min(cap, s.complexity() * lam + 2.0)
    while True:
        grid = np.linspace(-window, window, 4097)
        vals = ev.trace_grid(grid)
        i = int(np.argmin(vals))
        if 0 < i < len(grid) - 1:
            lo, hi = grid[i - 1], grid[i + 1]
            break
        if window >= cap:
            raise SearchFailureError(
                f"no interior trace minimum for slope {s} in |tau| <= {cap:.3g}")
        window = min(2.0 * window, cap)

    # golden-section on the positive convex trace
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    x1 = b - invphi * (b - a)
    x2 = a + invphi * (b - a)
    f1 = ev.trace(x1).real
    f2 = ev.trace(x2).real
    while b - a > 1e-12:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - invphi * (b - a)
            f1 = ev.trace(x1).real
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + invphi * (b - a)
            f2 = ev.trace(x2).real
    x = (a + b) / 2.0

    # Newton polish on g = d trace / d tau (real on the real axis)
    fd = 1e-7
    best_x, best_g = x, abs(ev.trace_dtrace(x)[1].real)
    for _ in range(8):
        g = ev.trace_dtrace(x)[1].real
        gp = (ev.trace_dtrace(x + fd)[1].real - ev.trace_dtrace(x - fd)[1].real) / (2 * fd)
        if gp == 0.0:
            break
        x -= g / gp
        g_new = abs(ev.trace_dtrace(x)[1].real)
        if g_new < best_g:
            best_x, best_g = x, g_new
        if g_new <= 1e-13 * max(1.0, abs(ev.trace(x).real)):
            break
    return float(best_x)


class _CorrectorFailure(Exception):
    pass


def _correct(ev: _WordEvaluator, z: complex, normal: complex, tol: float,
             max_iter: int = 30) -> tuple[complex, complex, complex]:
    """Newton on Im(trace) along `normal`; returns (z, trace, dtrace)."""
    for _ in range(max_iter):
        tr, dtr = ev.trace_dtrace(z)
        if abs(tr.imag) <= tol:
            return z, tr, dtr
        slope = (dtr * normal).imag
        if slope == 0.0:
            raise _CorrectorFailure
        z = z - (tr.imag / slope) * normal
    raise _CorrectorFailure


def trace_ray(lam: float, s: Slope, side: str = "top", step: float | None = None,
              tol: float = 1e-10, endpoint_tol: float = 1e-9,
              max_steps: int = 500000) -> PleatingRay:
    """Trace the pleating ray of a finite slope into the chosen half-plane.

    Continuation runs along the real locus of the word trace starting at the
    Fuchsian footpoint (where the locus leaves the axis vertically - the
    footpoint is a quadratic critical point of a function real on the real
    axis, so the off-axis branch is exactly orthogonal).  Arclength steps
    default to min(0.01, theta0/100) and halve adaptively when the corrector
    fails; a vanishing trace derivative along the ray raises
    SingularRayError carrying the partial ray.  Sampling stops once the
    trace reaches 2 + tol, and the endpoint is refined by bisection on
    trace - 2 along the curve to `endpoint_tol`.
    """
    lam = _real_positive(lam)
    if s.is_infinite:
        raise DomainError("slope infinity has no pleating ray in the slice")
    if side not in ("top", "bottom"):
        raise DomainError(f"side must be 'top' or 'bottom', got {side!r}")
    if step is not None and not step > 0:
        raise DomainError("step must be positive")
    if not (tol > 0 and endpoint_tol > 0):
        raise DomainError("tolerances must be positive")

    h0 = step if step is not None else min(0.01, theta0(lam) / 100.0)
    dirn = 1.0 if side == "top" else -1.0
    ev = _evaluator(s, lam)

    foot = fuchsian_footpoint(lam, s)
    tr_foot = ev.trace(complex(foot))
    samples: list[tuple[complex, complex]] = [(complex(foot), tr_foot)]
    if tr_foot.real <= 2.0 + tol:
        # the footpoint itself sits on the slice boundary; nothing to trace
        return PleatingRay(s, lam, side, tuple(samples), foot, complex(foot))

    def partial() -> PleatingRay:
        return PleatingRay(s, lam, side, tuple(samples), foot, samples[-1][0])

    z = complex(foot)
    tangent = 1j * dirn
    h = h0
    tr, dtr = tr_foot, None
    first = True
    crossing: tuple[complex, complex] | None = None
    for _ in range(max_steps):
        if not first:
            if abs(dtr) < 1e-12 * max(1.0, abs(tr)):
                raise SingularRayError(
                    f"trace derivative vanished on ray {s} at tau = {z!r}",
                    partial_ray=partial())
            v = dtr.conjugate() / abs(dtr)
            if (v * tangent.conjugate()).real < 0:
                v = -v
        else:
            v = 1j * dirn  # the locus leaves the axis vertically
        try:
            z_new, tr_new, dtr_new = _correct(ev, z + h * v, 1j * v, tol)
        except _CorrectorFailure:
            h *= 0.5
            if h < h0 * 2.0 ** -24:
                raise StepTooLargeError(
                    f"corrector failed on ray {s} near tau = {z!r}") from None
            continue
        z, tr, dtr = z_new, tr_new, dtr_new
        tangent = v
        first = False
        h = min(h * 1.25, h0)
        if tr.real < 2.0:
            crossing = (z, tr)
            break
        samples.append((z, tr))
        if tr.real <= 2.0 + tol:
            # sitting inside the stop margin but not yet across; keep
            # stepping (the sample above is legal: trace >= 2 - tol)
            continue
    if crossing is None:
        raise RayTraceError(f"ray {s} did not reach |trace| = 2 "
                            f"within {max_steps} steps")

    # bisection on trace - 2 along the curve between the last on-side
    # sample and the crossing point
    z_in = samples[-1][0]
    z_out = crossing[0]
    tr_end, z_end = crossing[1], z_out
    for _ in range(200):
        mid = 0.5 * (z_in + z_out)
        chord = z_out - z_in
        if chord == 0:
            break
        u = 1j * chord / abs(chord)
        try:
            z_mid, tr_mid, _ = _correct(ev, mid, u, tol)
        except _CorrectorFailure:
            raise RayTraceError(
                f"endpoint refinement failed for ray {s}") from None
        if abs(tr_mid.real - 2.0) <= endpoint_tol:
            z_end, tr_end = z_mid, tr_mid
            break
        if tr_mid.real > 2.0:
            z_in = z_mid
        else:
            z_out = z_mid
    else:
        raise RayTraceError(f"endpoint refinement did not converge for ray {s}")
    samples.append((z_end, tr_end))
    return PleatingRay(s, lam, side, tuple(samples), foot, z_end)


@dataclass(frozen=True)
class QfVerdict:
    """Outcome of the quasi-Fuchsian membership sweep.

    kind is one of 'certified_tame', 'no_obstruction', 'elliptic_word',
    'parabolic_word'; for the word outcomes the offending Farey word and
    its slope are attached.
    """

    kind: str
    word: Word | None = None
    slope: Slope | None = None


def _slopes_by_complexity(max_len: int) -> list[Slope]:
    out = [Slope(1, 0)]
    for q in range(1, max_len + 1):
        for p in range(-(max_len - q), max_len - q + 1):
            if math.gcd(abs(p), q) == 1:
                out.append(Slope(p, q))
    out.sort(key=lambda s: (s.complexity(), s.value))
    return out


def qf_heuristic(coords: FNCoords, max_len: int) -> QfVerdict:
    """Tameness certificate or elliptic/parabolic-word obstruction sweep.

    Tame points are certified quasi-Fuchsian outright.  Otherwise every
    Farey word with |p| + q <= max_len is classified: an elliptic word
    proves the point lies outside the slice (simple curves are never
    elliptic in a discrete torus group), a parabolic word flags the slice
    boundary, and finding neither is inconclusive - membership beyond the
    tame strip is never claimed.
    """
    if max_len < 1:
        raise DomainError("max_len must be at least 1")
    if is_tame(coords):
        return QfVerdict("certified_tame")
    g = build_group(coords)
    first_parabolic: Slope | None = None
    for s in _slopes_by_complexity(max_len):
        m = evaluate(word(s), g)
        cls = m.classify(1e-9)
        if cls == "elliptic":
            return QfVerdict("elliptic_word", word(s), s)
        if cls == "parabolic" and first_parabolic is None:
            first_parabolic = s
    if first_parabolic is not None:
        return QfVerdict("parabolic_word", word(first_parabolic), first_parabolic)
    return QfVerdict("no_obstruction")
