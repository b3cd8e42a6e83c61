"""Determinant-one complex 2x2 matrices and their action on the Riemann sphere.

Matrices are explicit SL(2,C) lifts: M and -M induce the same map of the
sphere but are distinct values here, because several coordinate constructions
downstream depend on tracking the sign of the lift.  Equality of the induced
transformations is therefore a separate comparison (`same_moebius`) from
equality of lifts (`same_lift`).

The point at infinity is handled by explicit case analysis rather than a
large-number surrogate; `INFINITY` is a singleton sentinel and `ExtComplex`
the union type of finite points with it.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import DegenerateInputError

#: Construction and composition keep |det - 1| below this bound.
DET_TOL = 1e-12


class _Infinity:
    """The point at infinity of the extended complex plane (singleton)."""

    __slots__ = ()

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()

ExtComplex = complex | _Infinity


def is_infinity(z) -> bool:
    return z is INFINITY


@dataclass(frozen=True)
class MoebiusMap:
    """A matrix [[a, b], [c, d]] with ad - bc = 1, acting by z -> (az+b)/(cz+d)."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", complex(self.c))
        object.__setattr__(self, "d", complex(self.d))
        det = self.a * self.d - self.b * self.c
        # the det of a float matrix is only computable to ~scale^2 * eps,
        # so the unit-determinant check is relative to the entry scale
        if abs(det - 1.0) > DET_TOL * max(1.0, self.entry_scale() ** 2):
            raise ValueError(f"matrix has determinant {det!r}, not 1; "
                             "use MoebiusMap.normalized for raw entries")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def normalized(cls, a, b, c, d) -> "MoebiusMap":
        """Scale raw entries by a principal square root to determinant 1."""
        a, b, c, d = complex(a), complex(b), complex(c), complex(d)
        det = a * d - b * c
        if det == 0:
            raise ValueError("entries have zero determinant")
        s = cmath.sqrt(det)
        return cls(a / s, b / s, c / s, d / s)

    # -- scalar quantities -------------------------------------------------

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def trace(self) -> complex:
        return self.a + self.d

    def entry_scale(self) -> float:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    # -- algebra -----------------------------------------------------------

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """Matrix product self*other; renormalise only if the determinant drifted.

        Renormalisation divides by the principal square root of the
        determinant, which preserves the lift for small drift.
        """
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        det = a * d - b * c
        scale2 = max(1.0, max(abs(a), abs(b), abs(c), abs(d)) ** 2)
        if abs(det - 1.0) > DET_TOL * scale2:
            s = cmath.sqrt(det)
            a, b, c, d = a / s, b / s, c / s, d / s
        return MoebiusMap(a, b, c, d)

    __matmul__ = compose

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def negate(self) -> "MoebiusMap":
        """The other SL(2,C) lift of the same Moebius transformation."""
        return MoebiusMap(-self.a, -self.b, -self.c, -self.d)

    # -- action on the sphere ----------------------------------------------

    def apply(self, z: ExtComplex) -> ExtComplex:
        """Evaluate (az+b)/(cz+d) with extended-plane conventions.

        z = infinity maps to a/c (infinity when c = 0); a zero denominator
        maps to infinity.  Total on the extended plane.
        """
        if z is INFINITY:
            if self.c == 0:
                return INFINITY
            return self.a / self.c
        z = complex(z)
        den = self.c * z + self.d
        if den == 0:
            return INFINITY
        return (self.a * z + self.b) / den

    __call__ = apply

    # -- structure ---------------------------------------------------------

    def is_identity(self, eps: float = 1e-9) -> bool:
        """True if the matrix is +-I within eps, entrywise."""
        for sign in (1.0, -1.0):
            if (abs(self.a - sign) <= eps and abs(self.d - sign) <= eps
                    and abs(self.b) <= eps and abs(self.c) <= eps):
                return True
        return False

    def fixed_points(self) -> tuple[ExtComplex, ExtComplex]:
        """Both fixed points, as roots of c z^2 + (d - a) z - b = 0.

        For parabolic input the two entries are equal (the double root is
        computed once).  The identity has no well-defined fixed-point pair
        and raises.  When c vanishes relative to the entry scale the point
        at infinity is fixed and is returned first.
        """
        if self.is_identity(1e-12):
            raise DegenerateInputError("fixed points of +-identity are undefined")
        scale = self.entry_scale()
        t = self.trace()
        parabolic = abs(t * t - 4.0) <= 1e-10 * max(1.0, abs(t) ** 2)
        if abs(self.c) <= 1e-14 * scale:
            if abs(self.a - self.d) <= 1e-14 * scale:
                # translation z -> z + b/d: only infinity is fixed
                return (INFINITY, INFINITY)
            return (INFINITY, self.b / (self.d - self.a))
        if parabolic:
            z = (self.a - self.d) / (2.0 * self.c)
            return (z, z)
        disc = cmath.sqrt((self.a - self.d) ** 2 + 4.0 * self.b * self.c)
        z_plus = ((self.a - self.d) + disc) / (2.0 * self.c)
        z_minus = ((self.a - self.d) - disc) / (2.0 * self.c)
        return (z_plus, z_minus)

    def classify(self, eps: float = 1e-9) -> str:
        """One of 'identity', 'parabolic', 'elliptic', 'loxodromic'.

        Classification is by squared trace: 4 within eps is parabolic,
        real within eps and in [0, 4) is elliptic, anything else loxodromic.
        """
        if self.is_identity(eps):
            return "identity"
        t2 = self.trace() ** 2
        if abs(t2 - 4.0) < eps:
            return "parabolic"
        if abs(t2.imag) < eps and 0.0 <= t2.real < 4.0:
            return "elliptic"
        return "loxodromic"

    # -- comparison --------------------------------------------------------

    def same_lift(self, other: "MoebiusMap", tol: float = 1e-10) -> bool:
        """Entrywise equality of the SL(2,C) lifts."""
        return (abs(self.a - other.a) <= tol and abs(self.b - other.b) <= tol
                and abs(self.c - other.c) <= tol and abs(self.d - other.d) <= tol)

    def same_moebius(self, other: "MoebiusMap", tol: float = 1e-10) -> bool:
        """Equality as transformations of the sphere: lifts equal up to sign."""
        return self.same_lift(other, tol) or self.same_lift(other.negate(), tol)

    def __repr__(self):
        return (f"MoebiusMap({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})")


def compose(m: MoebiusMap, n: MoebiusMap) -> MoebiusMap:
    return m.compose(n)


def apply(m: MoebiusMap, z: ExtComplex) -> ExtComplex:
    return m.apply(z)


def fixed_points(m: MoebiusMap) -> tuple[ExtComplex, ExtComplex]:
    return m.fixed_points()


def classify(m: MoebiusMap, eps: float = 1e-9) -> str:
    return m.classify(eps)
