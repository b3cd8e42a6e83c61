"""Extended-rational slopes, the recursive Farey words, and their traces.

Each slope p/q (with infinity = 1/0) indexes a free homotopy class of simple
closed curves; the word of a slope is built from W_inf = S^-1 and
W_m = S^-m T by the Farey mediant rule: if p/q < r/s are neighbours with
q r - p s = 1 then W_{(p+r)/(q+s)} = W_{r/s} W_{p/q}.  Words for slopes
outside [0, 1] come from the same recursion seeded with the integer words.

Words render as strings over {S, s, T, t} with lowercase meaning inverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .groups import FNCoords, GroupData, build_group
from .moebius import MoebiusMap


@dataclass(frozen=True)
class Slope:
    """A reduced extended rational p/q; q = 0 is canonicalized to 1/0 = inf."""

    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p == 0 and q == 0:
            raise DomainError("0/0 is not a slope")
        if q < 0:
            p, q = -p, -q
        if q == 0:
            p = 1  # +-1/0 are the same point of the extended line
        g = math.gcd(abs(p), q)
        if g > 1:
            p, q = p // g, q // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def value(self) -> float:
        return math.inf if self.q == 0 else self.p / self.q

    def complexity(self) -> int:
        """|p| + q, the length scale of the associated word."""
        return abs(self.p) + self.q

    def __lt__(self, other: "Slope") -> bool:
        if self.q == 0:
            return False
        if other.q == 0:
            return True
        return self.p * other.q < other.p * self.q

    def __str__(self):
        return "inf" if self.q == 0 else f"{self.p}/{self.q}"


INFINITY_SLOPE = Slope(1, 0)

_CANCELS = {("S", "s"), ("s", "S"), ("T", "t"), ("t", "T")}


@dataclass(frozen=True)
class Word:
    """A reduced word over {S, s, T, t} (lowercase = inverse)."""

    letters: tuple[str, ...]

    def __post_init__(self):
        for ch in self.letters:
            if ch not in ("S", "s", "T", "t"):
                raise DomainError(f"invalid letter {ch!r}")
        for x, y in zip(self.letters, self.letters[1:]):
            if (x, y) in _CANCELS:
                raise DomainError(f"word {''.join(self.letters)!r} is not reduced")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return "".join(self.letters)

    def abelianized(self) -> tuple[int, int]:
        """Exponent sums (e_S, e_T); equals (-p, q) for the slope p/q word."""
        e_s = sum(1 for c in self.letters if c == "S") \
            - sum(1 for c in self.letters if c == "s")
        e_t = sum(1 for c in self.letters if c == "T") \
            - sum(1 for c in self.letters if c == "t")
        return (e_s, e_t)


def farey_parents(s: Slope) -> tuple[Slope, Slope]:
    """The unique Farey pair (p/q, r/s) with q r - p s = 1 and mediant `s`.

    Found by Stern-Brocot descent inside the unit interval after an integer
    translation.  Integer and infinite slopes are the recursion's base cases
    and raise.
    """
    if s.q < 2:
        raise DomainError(f"slope {s} is a base case and has no Farey parents")
    m = s.p // s.q  # floor; target - m lies in (0, 1)
    pp = s.p - m * s.q
    lo_p, lo_q = 0, 1
    hi_p, hi_q = 1, 1
    while True:
        med_p, med_q = lo_p + hi_p, lo_q + hi_q
        if (med_p, med_q) == (pp, s.q):
            return (Slope(lo_p + m * lo_q, lo_q), Slope(hi_p + m * hi_q, hi_q))
        if pp * med_q < med_p * s.q:
            hi_p, hi_q = med_p, med_q
        else:
            lo_p, lo_q = med_p, med_q


@lru_cache(maxsize=None)
def word(s: Slope) -> Word:
    """The Farey word of a slope.

    W_inf = S^-1, W_m = S^-m T, and the mediant word is the concatenation
    word(right) + word(left), matching the matrix product W_right * W_left.
    Memoized: the recursion shares subwords and ray tracing re-evaluates the
    same word thousands of times.
    """
    if s.is_infinite:
        return Word(("s",))
    if s.q == 1:
        m = s.p
        head = ("s",) * m if m >= 0 else ("S",) * (-m)
        return Word(head + ("T",))
    left, right = farey_parents(s)
    return Word(word(right).letters + word(left).letters)


def evaluate(w: Word, g: GroupData) -> MoebiusMap:
    """Left-to-right matrix product of the word's letters in the group g."""
    mats = {"S": g.S, "s": g.S.inverse(), "T": g.T, "t": g.T.inverse()}
    if not w.letters:
        return MoebiusMap.identity()
    m = mats[w.letters[0]]
    for ch in w.letters[1:]:
        m = m @ mats[ch]
    return m


@lru_cache(maxsize=None)
def trace_sign(s: Slope, lam: complex) -> int:
    """Lift-normalising sign: +1/-1 so the trace at the Fuchsian reference
    point (same lambda, tau = 0) has positive real part.

    For real lambda the reference trace is real and nonzero, so this fixes
    the lift consistently across a slice; traces vary continuously in tau,
    so one sign per (slope, lambda) suffices.
    """
    g0 = build_group(FNCoords(lam, 0.0))
    t0 = evaluate(word(s), g0).trace()
    return -1 if t0.real < 0 else 1


def trace_slope(s: Slope, coords: FNCoords) -> complex:
    """Trace of the slope's word, sign-normalised to the Fuchsian lift."""
    g = build_group(coords)
    t = evaluate(word(s), g).trace()
    return trace_sign(s, coords.lam) * t


def enumerate_slopes(max_q: int, lo: float, hi: float) -> list[Slope]:
    """All reduced p/q with q <= max_q in the closed interval [lo, hi],
    in ascending order."""
    if max_q < 1:
        raise DomainError("max_q must be at least 1")
    if not lo <= hi:
        raise DomainError("empty slope range")
    out: list[Slope] = []
    for q in range(1, max_q + 1):
        p_min = math.ceil(lo * q - 1e-12)
        p_max = math.floor(hi * q + 1e-12)
        for p in range(p_min, p_max + 1):
            if math.gcd(abs(p), q) == 1:
                out.append(Slope(p, q))
    out.sort()
    return out
