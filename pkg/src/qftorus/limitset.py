"""Limit-set point generation and rasterisation.

Points come from a depth-first expansion of reduced words over the four
generator letters, seeded at the fixed point of the commutator K.  K is
parabolic for every group in the family, so the seed (-1 before any
normalisation) is a genuine limit point and every emitted point lies in the
limit set.  A branch stops either at the word-length cutoff or as soon as
the current map contracts a reference triple below the configured diameter;
the leaf emits the image of the seed.

Exploration order is lexicographic with S < s < T < t (lowercase = inverse),
making the output deterministic bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .groups import GroupData
from .moebius import INFINITY

_LETTERS = ("S", "s", "T", "t")
_INVERSE_OF = {0: 1, 1: 0, 2: 3, 3: 2}

# reference triple whose image diameter measures contraction
_REF_POINTS = (-1.0 + 0.0j, 0.0 + 0.0j, 1.0 + 0.0j)


@dataclass(frozen=True)
class RenderConfig:
    """Word-length cutoff, contraction diameter, viewport and raster size."""

    max_word_length: int
    eps: float
    viewport: tuple[float, float, float, float]  # re_min, re_max, im_min, im_max
    width: int
    height: int

    def __post_init__(self):
        if self.max_word_length < 1:
            raise DomainError("max_word_length must be at least 1")
        if not self.eps > 0:
            raise DomainError("contraction eps must be positive")
        re_min, re_max, im_min, im_max = self.viewport
        if not (re_min < re_max and im_min < im_max):
            raise DomainError("empty viewport")
        if self.width < 1 or self.height < 1:
            raise DomainError("pixel dimensions must be positive")


@dataclass(frozen=True)
class PointSet:
    """Finite limit points inside the viewport, with optional source words."""

    points: tuple[complex, ...]
    words: tuple[str, ...] | None = None


def limit_points(g: GroupData, cfg: RenderConfig,
                 keep_words: bool = False) -> PointSet:
    """Depth-first orbit expansion of the commutator fixed point.

    Emits one point per leaf of the reduced-word tree (depth cutoff or
    contracted triple), clipped to the viewport.
    """
    mats = []
    for m in (g.S, g.S.inverse(), g.T, g.T.inverse()):
        mats.append((m.a, m.b, m.c, m.d))
    seed = g.K.fixed_points()[0]
    if seed is INFINITY:
        raise DomainError("commutator fixes infinity; reframe the group")
    seed = complex(seed)
    re_min, re_max, im_min, im_max = cfg.viewport
    eps = cfg.eps
    maxlen = cfg.max_word_length

    points: list[complex] = []
    words: list[str] | None = [] if keep_words else None

    def image_or_none(a, b, c, d, z):
        den = c * z + d
        if den == 0:
            return None
        return (a * z + b) / den

    def emit(a, b, c, d, prefix):
        z = image_or_none(a, b, c, d, seed)
        if z is None:
            return
        if re_min <= z.real <= re_max and im_min <= z.imag <= im_max:
            points.append(z)
            if words is not None:
                words.append(prefix)

    def contracted(a, b, c, d) -> bool:
        imgs = []
        for r in _REF_POINTS:
            z = image_or_none(a, b, c, d, r)
            if z is None:
                return False
            imgs.append(z)
        diam = max(abs(imgs[0] - imgs[1]), abs(imgs[0] - imgs[2]),
                   abs(imgs[1] - imgs[2]))
        return diam < eps

    def visit(a, b, c, d, depth, last, prefix):
        if depth == maxlen or contracted(a, b, c, d):
            emit(a, b, c, d, prefix)
            return
        for i in (0, 1, 2, 3):
            if last >= 0 and i == _INVERSE_OF[last]:
                continue  # reduced words only
            la, lb, lc, ld = mats[i]
            visit(a * la + b * lc, a * lb + b * ld,
                  c * la + d * lc, c * lb + d * ld,
                  depth + 1, i,
                  prefix + _LETTERS[i] if words is not None else prefix)

    visit(1.0 + 0.0j, 0.0 + 0.0j, 0.0 + 0.0j, 1.0 + 0.0j, 0, -1, "")
    return PointSet(tuple(points), tuple(words) if words is not None else None)


def pixel_of(z: complex, cfg: RenderConfig) -> tuple[int, int]:
    """(row, col) of a viewport point; top-left pixel is (0, 0)."""
    re_min, re_max, im_min, im_max = cfg.viewport
    col = int((z.real - re_min) / (re_max - re_min) * cfg.width)
    row = int((im_max - z.imag) / (im_max - im_min) * cfg.height)
    return (min(max(row, 0), cfg.height - 1), min(max(col, 0), cfg.width - 1))


def rasterize(ps: PointSet, cfg: RenderConfig) -> np.ndarray:
    """Binary raster (uint8, 255 = marked), one pixel per point."""
    img = np.zeros((cfg.height, cfg.width), dtype=np.uint8)
    for z in ps.points:
        r, c = pixel_of(z, cfg)
        img[r, c] = 255
    return img


def write_ppm(img: np.ndarray, path: str) -> None:
    """8-bit binary PPM (P6), marked pixels black on white."""
    h, w = img.shape
    inv = (255 - img).astype(np.uint8)
    rgb = np.repeat(inv[:, :, None], 3, axis=2)
    with open(path, "wb") as fh:
        fh.write(f"P6\n{w} {h}\n255\n".encode("ascii"))
        fh.write(rgb.tobytes())


def write_svg(ps: PointSet, cfg: RenderConfig, path: str) -> None:
    """SVG point cloud; each point is a radius-0.5 circle in pixel units."""
    re_min, re_max, im_min, im_max = cfg.viewport
    sx = cfg.width / (re_max - re_min)
    sy = cfg.height / (im_max - im_min)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{cfg.width}" '
        f'height="{cfg.height}" viewBox="0 0 {cfg.width} {cfg.height}">',
        f'<rect width="{cfg.width}" height="{cfg.height}" fill="white"/>',
    ]
    for z in ps.points:
        cx = (z.real - re_min) * sx
        cy = (im_max - z.imag) * sy
        lines.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="0.5" fill="black"/>')
    lines.append("</svg>")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def default_filename(lam: complex, tau: complex, ext: str) -> str:
    """Canonical output name: limset_<lambda>_<retau>_<imtau>.<ext>."""
    lam = complex(lam)
    tau = complex(tau)
    return f"limset_{lam.real:.6f}_{tau.real:.6f}_{tau.imag:.6f}.{ext}"


def hausdorff_distance(a: list[complex] | tuple[complex, ...],
                       b: list[complex] | tuple[complex, ...]) -> float:
    """Symmetric Hausdorff distance between two finite point sets."""
    if not a or not b:
        return math.inf
    pa = np.asarray(a, dtype=complex)
    pb = np.asarray(b, dtype=complex)
    d = np.abs(pa[:, None] - pb[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))
