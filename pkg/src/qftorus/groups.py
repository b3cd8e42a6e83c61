"""Generator normal forms, the global coordinate map, and marking changes.

A marked punctured-torus group is generated by a pair (S, T) where S has
complex half-length lambda (Re lambda > 0), T conjugates S to its partner
S' = T^-1 S T, and the commutator K = T^-1 S^-1 T S is parabolic fixing -1.
The pair (lambda, tau) of length and twist-bend parameters pins the group:
the map (lambda, tau) -> (cosh^2 lambda, e^tau) is a global holomorphic
coordinate on quasi-Fuchsian space.

Branch policy: whenever coordinates are recovered from (cosh^2 lambda, e^tau)
the principal branch is used, giving Re lambda > 0 and Im tau in (-pi, pi].
"""

from __future__ import annotations

import cmath
import json
from dataclasses import dataclass

from .errors import (
    BoundaryDegenerateError,
    DegenerateNormalizationError,
    DomainError,
    OutOfChartError,
)
from .moebius import INFINITY, MoebiusMap


def _coth(z: complex) -> complex:
    return cmath.cosh(z) / cmath.sinh(z)


def _csch(z: complex) -> complex:
    return 1.0 / cmath.sinh(z)


def _sech(z: complex) -> complex:
    return 1.0 / cmath.cosh(z)


@dataclass(frozen=True)
class FNCoords:
    """Complex Fenchel-Nielsen coordinates (lam, tau) with Re lam > 0."""

    lam: complex
    tau: complex

    def __post_init__(self):
        object.__setattr__(self, "lam", complex(self.lam))
        object.__setattr__(self, "tau", complex(self.tau))
        if not self.lam.real > 0:
            raise DomainError(f"Re(lambda) must be positive, got {self.lam!r}")
        # Re lam > 0 already rules out sinh(lam) = 0; the other excluded
        # locus cosh(tau/2) = 0 is checked where it is actually needed.

    def to_json(self) -> str:
        return json.dumps({"lambda": [self.lam.real, self.lam.imag],
                           "tau": [self.tau.real, self.tau.imag]})

    @classmethod
    def from_json(cls, text: str) -> "FNCoords":
        obj = json.loads(text)
        return cls(complex(*obj["lambda"]), complex(*obj["tau"]))


def _require_positive_re(lam: complex) -> complex:
    lam = complex(lam)
    if not lam.real > 0:
        raise DomainError(f"Re(lambda) must be positive, got {lam!r}")
    return lam


def gen_S(lam: complex) -> MoebiusMap:
    """The half-length-lambda generator fixing +-coth(lambda/2)."""
    lam = _require_positive_re(lam)
    c = cmath.cosh(lam)
    return MoebiusMap(c, c + 1.0, c - 1.0, c)


def gen_Sprime(lam: complex) -> MoebiusMap:
    """The partner generator S' = T^-1 S T, fixing +-tanh(lambda/2)."""
    lam = _require_positive_re(lam)
    c = cmath.cosh(lam)
    return MoebiusMap(c, c - 1.0, c + 1.0, c)


def gen_K(lam: complex) -> MoebiusMap:
    """The commutator K = S'^-1 S: parabolic of trace -2 fixing -1."""
    lam = _require_positive_re(lam)
    c = cmath.cosh(lam)
    return MoebiusMap(-1.0 + 2.0 * c, 2.0 * c, -2.0 * c, -1.0 - 2.0 * c)


def gen_T(lam: complex, tau: complex) -> MoebiusMap:
    """The gluing generator with twist-bend tau; trace 2 cosh(tau/2) coth(lambda)."""
    lam = _require_positive_re(lam)
    tau = complex(tau)
    ch = cmath.cosh(tau / 2.0)
    sh = cmath.sinh(tau / 2.0)
    return MoebiusMap(ch * _coth(lam / 2.0), -sh, -sh, ch * cmath.tanh(lam / 2.0))


@dataclass(frozen=True)
class GroupData:
    """The four marked generators of one group, with their coordinates.

    S' and K are cached at construction (word evaluation is the hot path);
    their defining relations are re-checked under __debug__.
    """

    S: MoebiusMap
    Sprime: MoebiusMap
    T: MoebiusMap
    K: MoebiusMap
    coords: FNCoords

    def to_json(self) -> str:
        def mat(m: MoebiusMap):
            return [[[m.a.real, m.a.imag], [m.b.real, m.b.imag]],
                    [[m.c.real, m.c.imag], [m.d.real, m.d.imag]]]
        return json.dumps({
            "coords": {"lambda": [self.coords.lam.real, self.coords.lam.imag],
                       "tau": [self.coords.tau.real, self.coords.tau.imag]},
            "S": mat(self.S), "Sprime": mat(self.Sprime),
            "T": mat(self.T), "K": mat(self.K),
        })

    @classmethod
    def from_json(cls, text: str) -> "GroupData":
        obj = json.loads(text)

        def mat(rows):
            return MoebiusMap(complex(*rows[0][0]), complex(*rows[0][1]),
                              complex(*rows[1][0]), complex(*rows[1][1]))

        coords = FNCoords(complex(*obj["coords"]["lambda"]),
                          complex(*obj["coords"]["tau"]))
        return cls(mat(obj["S"]), mat(obj["Sprime"]), mat(obj["T"]),
                   mat(obj["K"]), coords)


def build_group(coords: FNCoords) -> GroupData:
    """Assemble the marked generator matrices for the given coordinates."""
    lam, tau = coords.lam, coords.tau
    S = gen_S(lam)
    Sp = gen_Sprime(lam)
    T = gen_T(lam, tau)
    K = gen_K(lam)
    if __debug__:
        conj = T.inverse() @ S @ T
        scale = max(1.0, conj.entry_scale())
        assert conj.same_moebius(Sp, 1e-10 * scale), "T^-1 S T != S'"
        assert abs(K.trace() + 2.0) <= 1e-10, "commutator trace != -2"
    return GroupData(S, Sp, T, K, coords)


def coordinate_map(coords: FNCoords) -> tuple[complex, complex]:
    """The global coordinate image (cosh^2 lambda, e^tau)."""
    return (cmath.cosh(coords.lam) ** 2, cmath.exp(coords.tau))


@dataclass(frozen=True)
class NormalizedGroup:
    """Endpoint normal form: S0 = diag(a, 1/a) with |a| > 1, T0 with
    T0(0) = 1, and the two endpoint coordinates x1 = T0(inf), x2 = T0(1).

    `conjugator` is the map R carrying the standard marked pair onto this
    normal form (None when built directly from endpoints).
    """

    S0: MoebiusMap
    T0: MoebiusMap
    x1: complex
    x2: complex
    a: complex
    conjugator: MoebiusMap | None = None


def normalize(group: GroupData) -> NormalizedGroup:
    """Conjugate (S', T) so that S' is diagonal with repelling fixed point 0.

    The conjugator R sends fix(S') to {0, inf} and T(0) to 1; then
    x1 = cosh^2(lambda) and x2 = (1 + e^tau)/(sech^2(lambda) + e^tau).
    """
    lam = group.coords.lam
    c = cmath.cosh(lam)
    if abs(c - 1.0) < 1e-15:
        raise DegenerateNormalizationError("cosh(lambda) = 1: S is parabolic")
    R = MoebiusMap.normalized(c / (1.0 - c), -_coth(lam),
                              1.0 / (1.0 - c), _csch(lam))
    Rinv = R.inverse()
    S0 = R @ group.Sprime @ Rinv
    T0 = R @ group.T @ Rinv
    a = S0.a
    if abs(abs(a) - 1.0) < 1e-12:
        raise DegenerateNormalizationError("multiplier on the unit circle")
    if abs(a) < 1.0:  # cannot happen with Re lambda > 0; defensive
        raise DegenerateNormalizationError("multiplier inside the unit circle")
    x1 = T0.apply(INFINITY)
    x2 = T0.apply(1.0)
    if x1 is INFINITY or x2 is INFINITY:
        raise DegenerateNormalizationError("endpoint at infinity")
    return NormalizedGroup(S0, T0, x1, x2, a, R)


def _check_endpoints(x1: complex, x2: complex) -> tuple[complex, complex]:
    x1, x2 = complex(x1), complex(x2)
    scale = max(1.0, abs(x1), abs(x2))
    if abs(x1) <= 1e-13 * scale or abs(x1 - 1.0) <= 1e-13 * scale:
        raise DomainError("x1 must avoid 0 and 1")
    if abs(x2 - 1.0) <= 1e-13 * scale:
        raise DomainError("x2 must avoid 1")
    if abs(x1 - x2) <= 1e-13 * scale:
        raise DomainError("x1 and x2 must be distinct")
    return x1, x2


def from_endpoints(x1: complex, x2: complex) -> NormalizedGroup:
    """Rebuild the normal form from the limit-point coordinates (x1, x2).

    Solving tr[A, B] = -2 gives a^2 = 2 x1 - 1 +- 2 sqrt(x1 (x1 - 1)); the
    root with |a| > 1 is the loxodromic choice.  B is the unique map with
    B(0) = 1, B(inf) = x1, B(1) = x2, scaled to determinant 1.
    """
    x1, x2 = _check_endpoints(x1, x2)
    root = cmath.sqrt(x1 * (x1 - 1.0))
    a2_plus = 2.0 * x1 - 1.0 + 2.0 * root
    a2_minus = 2.0 * x1 - 1.0 - 2.0 * root  # = 1 / a2_plus
    a2 = a2_plus if abs(a2_plus) >= abs(a2_minus) else a2_minus
    if abs(abs(a2) - 1.0) <= 1e-12:
        raise BoundaryDegenerateError("both multiplier roots on the unit circle")
    a = cmath.sqrt(a2)
    A = MoebiusMap(a, 0.0, 0.0, 1.0 / a)
    B = MoebiusMap.normalized(x1 * (x2 - 1.0), x1 - x2, x2 - 1.0, x1 - x2)
    if __debug__:
        comm = A.inverse() @ B.inverse() @ A @ B
        assert abs(comm.trace() + 2.0) <= 1e-9 * max(1.0, abs(x1) ** 2), \
            "tr[A,B] != -2"
    return NormalizedGroup(A, B, x1, x2, a, None)


def coords_from_endpoints(x1: complex, x2: complex) -> FNCoords:
    """Invert the endpoint coordinates to principal-branch (lambda, tau).

    cosh^2(lambda) = x1 with Re lambda > 0 comes from the |a| > 1 root of
    the multiplier equation; e^tau = (x1 - x2)/(x1 (x2 - 1)) is inverted by
    the principal logarithm, so Im tau lands in (-pi, pi].
    """
    ng = from_endpoints(x1, x2)
    lam = cmath.log(ng.a ** 2) / 2.0
    e_tau = (ng.x1 - ng.x2) / (ng.x1 * (ng.x2 - 1.0))
    tau = cmath.log(e_tau)
    return FNCoords(lam, tau)


NIELSEN_MOVES = ("st", "s_inv_t", "t_inv", "swap")


def nielsen_move(coords: FNCoords, move: str) -> FNCoords:
    """Coordinates of the same group under an elementary marking change.

    move = "st":      (S, T) -> (S, S T),      tau' = tau - 2 lambda
    move = "s_inv_t": (S, T) -> (S, S^-1 T),   tau' = tau + 2 lambda
    move = "t_inv":   (S, T) -> (S, T^-1),     tau' = -tau
    move = "swap":    (S, T) -> (T, S):
        cosh(lambda') = cosh(lambda) cosh(tau/2) / sinh(lambda)
        sinh(tau'/2)  = -sinh(tau/2) sinh(lambda) / cosh(tau/2)

    The first three moves are exact at the matrix level (for instance
    S * T(lam, tau) = T(lam, tau - 2 lam) entry for entry).  For the swap
    the branch of cosh(tau'/2) is fixed so that the new normal form matches
    the swapped matrix pair up to lift signs; lambda' is recovered on the
    principal branch and inputs whose image leaves the chart
    (Re lambda' <= 0) raise OutOfChartError rather than guessing a branch.
    """
    lam, tau = coords.lam, coords.tau
    if move == "st":
        return FNCoords(lam, tau - 2.0 * lam)
    if move == "s_inv_t":
        return FNCoords(lam, tau + 2.0 * lam)
    if move == "t_inv":
        return FNCoords(lam, -tau)
    if move != "swap":
        raise DomainError(f"unknown Nielsen move {move!r}; "
                          f"expected one of {NIELSEN_MOVES}")

    ch_l = cmath.cosh(lam)
    sh_l = cmath.sinh(lam)
    ch_t = cmath.cosh(tau / 2.0)
    sh_t = cmath.sinh(tau / 2.0)
    if abs(ch_t) < 1e-14:
        raise DomainError("cosh(tau/2) = 0: swap undefined (T elliptic)")
    w = ch_l * ch_t / sh_l  # cosh(lambda')
    lam2 = cmath.log(w + cmath.sqrt(w * w - 1.0))  # principal: Re >= 0
    if lam2.real <= 1e-12:
        raise OutOfChartError(
            f"swap image has cosh(lambda') = {w!r} on [-1, 1]; "
            "the moved marking leaves the principal chart")
    sh_new = -sh_t * sh_l / ch_t
    ch_new = -ch_l * cmath.tanh(lam2)
    if __debug__:
        scale = max(1.0, abs(ch_new) ** 2)
        assert abs(ch_new * ch_new - sh_new * sh_new - 1.0) <= 1e-9 * scale
    tau2 = 2.0 * cmath.log(ch_new + sh_new)
    return FNCoords(lam2, tau2)
