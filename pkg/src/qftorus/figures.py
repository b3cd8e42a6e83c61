"""Matplotlib figure output for the CLI report paths.

Every subcommand that writes a machine-readable report (CSV rays, SVG
slices, PPM point clouds) can also drop a PNG figure next to it; the
functions here do that rendering.  The Agg backend keeps this headless.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def save_ray_figure(path: str, rays, lam: float, theta0_val: float) -> None:
    """Rays in the tau-plane with the Fuchsian axis and the tame strip."""
    fig, ax = plt.subplots(figsize=(7, 5))
    ax.axhline(0.0, color="black", lw=0.8, label="Fuchsian axis")
    for sgn in (1.0, -1.0):
        ax.axhline(sgn * theta0_val, color="red", lw=0.8, ls="--")
    for ray in rays:
        xs = [z.real for z, _ in ray.samples]
        ys = [z.imag for z, _ in ray.samples]
        ax.plot(xs, ys, lw=1.0)
        ax.annotate(str(ray.slope), (xs[-1], ys[-1]), fontsize=7)
    ax.set_xlabel("Re tau")
    ax.set_ylabel("Im tau")
    ax.set_title(f"pleating rays, lambda = {lam:.6f}")
    ax.set_aspect("equal", adjustable="datalim")
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_slice_figure(path: str, lam: float, fuchsian, boundary, rays) -> None:
    """Slice picture in the w = 2i cosh(tau/2) coth(lambda) plane.

    `fuchsian` and each element of `boundary` are lists of complex w values;
    `rays` is a list of (label, [w values]).
    """
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.plot([w.real for w in fuchsian], [w.imag for w in fuchsian],
            color="black", lw=1.2, label="Fuchsian locus")
    for curve in boundary:
        ax.plot([w.real for w in curve], [w.imag for w in curve],
                color="red", lw=0.8, ls="--")
    for label, curve in rays:
        ax.plot([w.real for w in curve], [w.imag for w in curve], lw=1.0)
        ax.annotate(label, (curve[-1].real, curve[-1].imag), fontsize=7)
    ax.set_xlabel("Re w")
    ax.set_ylabel("Im w")
    ax.set_title(f"lambda-slice, lambda = {lam:.6f}")
    ax.set_aspect("equal", adjustable="datalim")
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_limitset_figure(path: str, points, viewport) -> None:
    """Limit-set point cloud."""
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.scatter([z.real for z in points], [z.imag for z in points],
               s=0.3, c="black", marker=".")
    ax.set_xlim(viewport[0], viewport[1])
    ax.set_ylim(viewport[2], viewport[3])
    ax.set_aspect("equal")
    ax.set_xlabel("Re z")
    ax.set_ylabel("Im z")
    fig.savefig(path, dpi=150)
    plt.close(fig)
