"""Deterministic sample generation shared by the test modules.

Sampling is pseudo-enumerated (Weyl sequences on irrational multiples), not
random: runs are reproducible bit for bit and need no seed plumbing.
"""

import math

from qftorus.groups import FNCoords

_ALPHAS = (math.sqrt(2), math.sqrt(3), math.sqrt(5), math.sqrt(7),
           math.sqrt(11), math.sqrt(13))


def weyl(i: int, dim: int) -> float:
    """The i-th point of the dim-th Weyl sequence, in [0, 1)."""
    x = (i + 1) * _ALPHAS[dim]
    return x - math.floor(x)


def weyl_box(i: int, dim: int, lo: float, hi: float) -> float:
    return lo + (hi - lo) * weyl(i, dim)


def sample_coords(n: int,
                  re_lam=(0.05, 3.0), im_lam=(-1.0, 1.0),
                  re_tau=(-2.5, 2.5), im_tau=(-3.1, 3.1)) -> list[FNCoords]:
    """n coordinate points in the given box; |tau| stays below 4 with the
    default ranges."""
    out = []
    for i in range(n):
        lam = complex(weyl_box(i, 0, *re_lam), weyl_box(i, 1, *im_lam))
        tau = complex(weyl_box(i, 2, *re_tau), weyl_box(i, 3, *im_tau))
        out.append(FNCoords(lam, tau))
    return out
