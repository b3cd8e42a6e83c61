"""Command-line front end.

Subcommands:
  group     coordinate conversions and invariants of one group (JSON)
  ray       trace rational pleating rays in a lambda-slice (CSV)
  slice     render a lambda-slice picture in the i*tr(T) plane (SVG)
  limitset  render a limit set (PPM or SVG)
  maskit    degeneration table towards the Maskit normal form (JSON)

Exit codes: 0 success, 2 usage, 3 domain error, 4 numerical failure.
Every subcommand is deterministic for fixed flags: stable orderings, fixed
float formatting, no randomness and no wall-clock input.  A config file of
key=value lines can pre-set any flag; explicit flags win.  QFT_THREADS caps
the ray-tracing worker count (0 or unset = auto).
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import (
    BoundaryDegenerateError,
    DegenerateNormalizationError,
    DomainError,
    OutOfChartError,
    QftError,
    RayTraceError,
    SearchFailureError,
    UsageError,
)
from .farey import Slope, enumerate_slopes
from .groups import FNCoords, build_group, coordinate_map
from .limitset import (
    RenderConfig,
    default_filename,
    limit_points,
    rasterize,
    write_ppm,
    write_svg,
)
from .pleating import PleatingRay, complex_shear, is_tame, theta0, trace_ray
from .plumbing import coords_of_mu, maskit_generators, maskit_limit_error, mu_of, plumbing_t

_DOMAIN_ERRORS = (DomainError, DegenerateNormalizationError,
                  BoundaryDegenerateError, OutOfChartError)
_NUMERICAL_ERRORS = (SearchFailureError, RayTraceError)


# ---------------------------------------------------------------------------
# flag parsing helpers

def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError(f"expected 're' or 're,im', got {text!r}")

def _parse_pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}")
    return (float(parts[0]), float(parts[1]))

def _parse_quad(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected 'a,b,c,d', got {text!r}")
    return tuple(float(p) for p in parts)  # type: ignore[return-value]

def _parse_px(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) == 1:
        n = int(parts[0])
        return (n, n)
    if len(parts) == 2:
        return (int(parts[0]), int(parts[1]))
    raise argparse.ArgumentTypeError(f"expected 'n' or 'w,h', got {text!r}")

def _parse_floats(text: str) -> tuple[float, ...]:
    return tuple(float(p) for p in text.split(","))


_CASTS = {
    "lambda_": _parse_complex, "tau": _parse_complex, "mu": _parse_complex,
    "range": _parse_pair, "viewport": _parse_quad, "px": _parse_px,
    "lambdas": _parse_floats, "slopes": int, "maxlen": int,
    "step": float, "tol": float, "eps": float, "trT": float,
    "side": str, "format": str, "output": str, "png": str,
}


def _load_config(path: str) -> dict[str, str]:
    conf: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"bad config line {line!r}")
            key, val = line.split("=", 1)
            conf[key.strip()] = val.strip()
    return conf


def _resolve(args, key: str, default):
    """Effective value of a flag: explicit flag, then config file, then default."""
    val = getattr(args, key, None)
    if val is not None:
        return val
    conf = getattr(args, "_config", None)
    name = "lambda" if key == "lambda_" else key
    if conf and name in conf:
        cast = _CASTS.get(key, str)
        return cast(conf[name])
    return default


def _fmt12(x: float) -> str:
    """12 significant digits; lowercase scientific outside [1e-4, 1e6)."""
    if x == 0:
        return "0"
    ax = abs(x)
    if ax < 1e-4 or ax >= 1e6:
        return f"{x:.11e}"
    digits = 11 - int(math.floor(math.log10(ax)))
    return f"{x:.{max(digits, 0)}f}"


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _matrix(m) -> list:
    return [[_pair(m.a), _pair(m.b)], [_pair(m.c), _pair(m.d)]]


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _worker_count(n_jobs: int) -> int:
    raw = os.environ.get("QFT_THREADS", "0")
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    if cap <= 0:
        cap = os.cpu_count() or 1
    return max(1, min(cap, n_jobs))


# ---------------------------------------------------------------------------
# group

def _cmd_group(args) -> int:
    lam = _resolve(args, "lambda_", None)
    if lam is None:
        raise UsageError("--lambda is required")
    tau = _resolve(args, "tau", None)
    mu = _resolve(args, "mu", None)
    if (tau is None) == (mu is None):
        raise UsageError("exactly one of --tau / --mu must be given")
    lam_real = abs(lam.imag) == 0.0
    if mu is not None:
        coords = coords_of_mu(lam, mu)  # demands real positive lambda
        tau = coords.tau
    if not abs(tau.imag) < math.pi:
        raise UsageError(f"|Im tau| must be below pi, got {tau.imag!r}")
    coords = FNCoords(lam, tau)
    g = build_group(coords)
    h1, h2 = coordinate_map(coords)

    report = {
        "lambda": _pair(coords.lam),
        "tau": _pair(coords.tau),
        "generators": {"S": _matrix(g.S), "Sprime": _matrix(g.Sprime),
                       "T": _matrix(g.T), "K": _matrix(g.K)},
        "traces": {"S": _pair(g.S.trace()), "T": _pair(g.T.trace()),
                   "K": _pair(g.K.trace())},
        "h_image": {"cosh2_lambda": _pair(h1), "exp_tau": _pair(h2)},
        "fuchsian": bool(lam_real and tau.imag == 0.0),
        "mu": None, "plumbing_t": None, "theta0": None, "tame": None,
        "shear": None,
    }
    if lam_real:
        report["mu"] = _pair(mu_of(coords))
        report["plumbing_t"] = _pair(plumbing_t(coords))
        report["theta0"] = theta0(lam.real)
        report["tame"] = is_tame(coords)
        if tau.imag != 0.0:
            report["shear"] = _pair(complex_shear(coords).sigma)
    _write_text(_resolve(args, "output", None),
                json.dumps(report, indent=2, sort_keys=True) + "\n")
    return 0


# ---------------------------------------------------------------------------
# ray

def _trace_jobs(lam: float, slopes: list[Slope], sides: list[str],
                step: float | None, tol: float):
    """Trace every (slope, side) ray; deterministic slope-major order."""
    jobs = [(s, side) for s in slopes for side in sides]
    results: dict[tuple[Slope, str], PleatingRay | QftError] = {}

    def run(job):
        s, side = job
        try:
            return job, trace_ray(lam, s, side, step=step, tol=tol)
        except QftError as exc:
            return job, exc

    workers = _worker_count(len(jobs))
    if workers == 1:
        done = map(run, jobs)
    else:
        pool = ThreadPoolExecutor(max_workers=workers)
        done = pool.map(run, jobs)
    for job, outcome in done:
        results[job] = outcome
    if workers > 1:
        pool.shutdown()
    return jobs, results


def _cmd_ray(args) -> int:
    lam = _resolve(args, "lambda_", None)
    if lam is None:
        raise UsageError("--lambda is required")
    if abs(lam.imag) != 0.0:
        raise DomainError("ray tracing needs real lambda")
    lam = lam.real
    maxq = _resolve(args, "slopes", 2)
    lo, hi = _resolve(args, "range", (-1.0, 1.0))
    side = _resolve(args, "side", "top")
    if side not in ("top", "bottom", "both"):
        raise UsageError(f"--side must be top, bottom or both, got {side!r}")
    sides = ["top", "bottom"] if side == "both" else [side]
    step = _resolve(args, "step", None)
    tol = _resolve(args, "tol", 1e-10)

    slopes = enumerate_slopes(maxq, lo, hi)
    jobs, results = _trace_jobs(lam, slopes, sides, step, tol)

    lines = ["p,q,side,re_tau,im_tau,re_tr,im_tr"]
    rays: list[PleatingRay] = []
    for job in jobs:
        s, sd = job
        outcome = results[job]
        if isinstance(outcome, QftError):
            lines.append(f"# FAILED {s} {outcome}")
            continue
        rays.append(outcome)
        for z, tr in outcome.samples:
            lines.append(",".join([str(s.p), str(s.q), sd,
                                   _fmt12(z.real), _fmt12(z.imag),
                                   _fmt12(tr.real), _fmt12(tr.imag)]))
    _write_text(_resolve(args, "output", None), "\n".join(lines) + "\n")

    png = _resolve(args, "png", None)
    if png and rays:
        from . import figures
        figures.save_ray_figure(png, rays, lam, theta0(lam))
    return 0 if rays else 4


# ---------------------------------------------------------------------------
# slice

def _w_map(lam: float):
    coth = 1.0 / math.tanh(lam)
    return lambda tau: 2j * cmath.cosh(tau / 2.0) * coth


def _slice_svg(lam: float, fuchsian, boundary, rays, width, height) -> str:
    """Hand-rolled deterministic SVG: polylines in the w-plane."""
    all_pts = list(fuchsian)
    for curve in boundary:
        all_pts.extend(curve)
    for _, curve in rays:
        all_pts.extend(curve)
    xs = [w.real for w in all_pts]
    ys = [w.imag for w in all_pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad_x = 0.05 * (x1 - x0) or 1.0
    pad_y = 0.05 * (y1 - y0) or 1.0
    x0, x1, y0, y1 = x0 - pad_x, x1 + pad_x, y0 - pad_y, y1 + pad_y

    def px(w: complex) -> str:
        cx = (w.real - x0) / (x1 - x0) * width
        cy = (y1 - w.imag) / (y1 - y0) * height
        return f"{cx:.3f},{cy:.3f}"

    def polyline(curve, colour, dash="") -> str:
        pts = " ".join(px(w) for w in curve)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        return (f'<polyline fill="none" stroke="{colour}" '
                f'stroke-width="1"{extra} points="{pts}"/>')

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<!-- lambda={lam!r} theta0={theta0(lam)!r} "
        f"fuchsian_start_im={2.0 / math.tanh(lam)!r} "
        f"map=2i*cosh(tau/2)*coth(lambda) -->",
        f'<rect width="{width}" height="{height}" fill="white"/>',
        polyline(fuchsian, "black"),
    ]
    for curve in boundary:
        lines.append(polyline(curve, "red", dash="4 3"))
    for label, curve in rays:
        lines.append(polyline(curve, "blue"))
        lx, ly = px(curve[-1]).split(",")
        lines.append(f'<text x="{lx}" y="{ly}" font-size="9">{label}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _cmd_slice(args) -> int:
    lam = _resolve(args, "lambda_", None)
    tr_t = _resolve(args, "trT", None)
    if (lam is None) == (tr_t is None):
        raise UsageError("exactly one of --lambda / --trT must be given")
    if tr_t is not None:
        # the Fuchsian basepoint trace at tau = 0 is 2 coth(lambda)
        if not tr_t > 2.0:
            raise DomainError("--trT must exceed 2")
        lam = math.atanh(2.0 / tr_t)
    else:
        if abs(lam.imag) != 0.0:
            raise DomainError("slice rendering needs real lambda")
        lam = lam.real
    maxq = _resolve(args, "slopes", 3)
    lo, hi = _resolve(args, "range", (-1.0, 1.0))
    side = _resolve(args, "side", "both")
    sides = ["top", "bottom"] if side == "both" else [side]
    step = _resolve(args, "step", None)
    tol = _resolve(args, "tol", 1e-10)
    width, height = _resolve(args, "px", (800, 600))

    wmap = _w_map(lam)
    slopes = enumerate_slopes(maxq, lo, hi)
    jobs, results = _trace_jobs(lam, slopes, sides, step, tol)
    ray_curves = []
    failed = []
    for job in jobs:
        outcome = results[job]
        if isinstance(outcome, QftError):
            failed.append((job[0], outcome))
            continue
        ray_curves.append((f"{job[0]}:{job[1]}",
                           [wmap(z) for z, _ in outcome.samples]))
    if not ray_curves:
        raise RayTraceError("all rays failed")

    # Fuchsian locus: tau real maps onto the vertical ray from 2i coth(lambda)
    t_hi = max(2.0 * abs(lam) * max(abs(lo), abs(hi)) + 2.0, 2.0)
    fuchsian = [wmap(t) for t in _linspace(0.0, t_hi, 200)]
    th0 = theta0(lam)
    re_span = _linspace(-2.0 * lam * hi - 1.0, -2.0 * lam * lo + 1.0, 400)
    boundary = []
    for sd in sides:
        sign = 1.0 if sd == "top" else -1.0
        boundary.append([wmap(t + 1j * sign * th0) for t in re_span])

    out = _resolve(args, "output", None) or f"slice_{lam:.6f}.svg"
    svg = _slice_svg(lam, fuchsian, boundary, ray_curves, width, height)
    _write_text(out, svg)
    for s, exc in failed:
        sys.stderr.write(f"# FAILED {s} {exc}\n")

    png = _resolve(args, "png", None)
    if png:
        from . import figures
        figures.save_slice_figure(png, lam, fuchsian, boundary, ray_curves)
    return 0


def _linspace(a: float, b: float, n: int) -> list[float]:
    if n < 2:
        return [a]
    h = (b - a) / (n - 1)
    return [a + i * h for i in range(n)]


# ---------------------------------------------------------------------------
# limitset

def _cmd_limitset(args) -> int:
    lam = _resolve(args, "lambda_", None)
    tau = _resolve(args, "tau", None)
    if lam is None or tau is None:
        raise UsageError("--lambda and --tau are required")
    maxlen = _resolve(args, "maxlen", 10)
    eps = _resolve(args, "eps", 1e-3)
    viewport = _resolve(args, "viewport", (-4.0, 4.0, -4.0, 4.0))
    width, height = _resolve(args, "px", (800, 800))
    fmt = _resolve(args, "format", "ppm")
    if fmt not in ("ppm", "svg"):
        raise UsageError(f"--format must be ppm or svg, got {fmt!r}")

    cfg = RenderConfig(maxlen, eps, viewport, width, height)
    g = build_group(FNCoords(lam, tau))
    ps = limit_points(g, cfg)
    out = _resolve(args, "output", None) or default_filename(lam, tau, fmt)
    if fmt == "ppm":
        write_ppm(rasterize(ps, cfg), out)
    else:
        write_svg(ps, cfg, out)

    png = _resolve(args, "png", None)
    if png:
        from . import figures
        figures.save_limitset_figure(png, ps.points, viewport)
    return 0


# ---------------------------------------------------------------------------
# maskit

def _cmd_maskit(args) -> int:
    mu = _resolve(args, "mu", None)
    if mu is None:
        raise UsageError("--mu is required")
    lams = _resolve(args, "lambdas", (1e-1, 1e-2, 1e-3, 1e-4))
    if any(not l > 0 for l in lams):
        raise DomainError("all lambda values must be positive")

    rows = []
    for lam in lams:
        coords = coords_of_mu(lam, mu)
        err = maskit_limit_error(lam, mu)
        row = {"lambda": lam, "error": err, "tau": _pair(coords.tau),
               "shear": None}
        if 0.0 < abs(coords.tau.imag) < math.pi:
            row["shear"] = _pair(complex_shear(coords).sigma)
        rows.append(row)

    slope_raw = slope_norm = None
    if len(lams) >= 2:
        logs = [math.log(l) for l in lams]
        errs = [math.log(r["error"]) for r in rows]
        norm = [math.log(r["error"] / l) for r, l in zip(rows, lams)]
        slope_raw = _lsq_slope(logs, errs)
        slope_norm = _lsq_slope(logs, norm)

    s0, t0 = maskit_generators(mu)
    report = {
        "mu": _pair(mu),
        "table": rows,
        "loglog_slope_error": slope_raw,
        "loglog_slope_error_over_lambda": slope_norm,
        "limit_S0": _matrix(s0),
        "limit_T0": _matrix(t0),
    }
    _write_text(_resolve(args, "output", None),
                json.dumps(report, indent=2, sort_keys=True) + "\n")
    return 0


def _lsq_slope(xs: list[float], ys: list[float]) -> float:
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    den = sum((x - mx) ** 2 for x in xs)
    return num / den


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qftorus",
        description="quasi-Fuchsian punctured-torus toolkit")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--config", default=None, help="key=value defaults file")
        p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("group", help="group report from (lambda, tau) or (lambda, mu)")
    p.add_argument("--lambda", dest="lambda_", type=_parse_complex, default=None)
    p.add_argument("--tau", type=_parse_complex, default=None)
    p.add_argument("--mu", type=_parse_complex, default=None)
    common(p)
    p.set_defaults(handler=_cmd_group)

    p = sub.add_parser("ray", help="trace pleating rays to CSV")
    p.add_argument("--lambda", dest="lambda_", type=_parse_complex, default=None)
    p.add_argument("--slopes", type=int, default=None, help="max denominator")
    p.add_argument("--range", type=_parse_pair, default=None)
    p.add_argument("--side", choices=("top", "bottom", "both"), default=None)
    p.add_argument("--step", type=float, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--png", default=None, help="also render a PNG figure")
    common(p)
    p.set_defaults(handler=_cmd_ray)

    p = sub.add_parser("slice", help="render a lambda-slice SVG")
    p.add_argument("--lambda", dest="lambda_", type=_parse_complex, default=None)
    p.add_argument("--trT", type=float, default=None,
                   help="pick lambda via the Fuchsian basepoint trace 2 coth(lambda)")
    p.add_argument("--slopes", type=int, default=None)
    p.add_argument("--range", type=_parse_pair, default=None)
    p.add_argument("--side", choices=("top", "bottom", "both"), default=None)
    p.add_argument("--step", type=float, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--px", type=_parse_px, default=None)
    p.add_argument("--png", default=None)
    common(p)
    p.set_defaults(handler=_cmd_slice)

    p = sub.add_parser("limitset", help="render a limit set")
    p.add_argument("--lambda", dest="lambda_", type=_parse_complex, default=None)
    p.add_argument("--tau", type=_parse_complex, default=None)
    p.add_argument("--maxlen", type=int, default=None)
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--viewport", type=_parse_quad, default=None)
    p.add_argument("--px", type=_parse_px, default=None)
    p.add_argument("--format", choices=("ppm", "svg"), default=None)
    p.add_argument("--png", default=None)
    common(p)
    p.set_defaults(handler=_cmd_limitset)

    p = sub.add_parser("maskit", help="Maskit degeneration table")
    p.add_argument("--mu", type=_parse_complex, default=None)
    p.add_argument("--lambdas", type=_parse_floats, default=None)
    common(p)
    p.set_defaults(handler=_cmd_maskit)

    return parser


_VALUE_FLAGS = {"--range", "--lambda", "--tau", "--mu", "--viewport",
                "--lambdas", "--step", "--tol", "--trT", "--eps"}

_NUMERIC_CHARS = set("0123456789.,+-eE")


def _merge_negative_values(argv: list[str]) -> list[str]:
    """Join '--flag -1,1' into '--flag=-1,1' so argparse accepts negatives."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (tok in _VALUE_FLAGS and nxt is not None and nxt.startswith("-")
                and len(nxt) > 1 and set(nxt) <= _NUMERIC_CHARS):
            out.append(tok + "=" + nxt)
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_negative_values(list(argv)))
    if args.config is not None:
        try:
            args._config = _load_config(args.config)
        except OSError as exc:
            sys.stderr.write(f"error: cannot read config: {exc}\n")
            return 2
        except UsageError as exc:
            sys.stderr.write(f"error: {exc}\n")
            return 2
    try:
        return args.handler(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except _DOMAIN_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except _NUMERICAL_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 4


if __name__ == "__main__":
    sys.exit(main())
