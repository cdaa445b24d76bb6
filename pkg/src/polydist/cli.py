"""``polydist`` command line tool.

Polygon files are JSON objects ``{"vertices": [[x, y], ...]}`` holding one
polygon each. Every CSV written starts with a ``#`` comment recording the
tool version and configuration, followed by a header row.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__
from .distribution import QuadratureConfig, cdf_curve, pdf_curve, pdf_via_triangle_sum
from .exceptions import GeometryError, ResourceError
from .geometry import Polygon, distance_bounds
from .montecarlo import MAX_SAMPLES, empirical_distances, histogram_pdf, ks_test

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

COMMANDS = ("pdf", "cdf", "simulate", "validate", "bounds")
DEFAULT_THRESHOLD = 0.015
PIPELINE_RTOL = 1e-9


class ParseError(ValueError):
    """Malformed polygon file; ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message, path=None, line=None, column=None):
        where = ""
        if path is not None:
            where = f"{path}"
            if line is not None:
                where += f":{line}:{column}"
            where += ": "
        super().__init__(where + message)
        self.path, self.line, self.column = path, line, column


def parse_polygon_text(text: str, path=None) -> Polygon:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, path, exc.lineno, exc.colno) from exc
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise ParseError('expected an object with a "vertices" key', path)
    verts = doc["vertices"]
    if not isinstance(verts, list):
        raise ParseError('"vertices" must be a list of [x, y] pairs', path)
    pts = []
    for k, v in enumerate(verts):
        if (not isinstance(v, list) or len(v) != 2
                or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in v)):
            raise ParseError(f"vertex {k} is not a pair of numbers: {v!r}", path)
        pts.append((float(v[0]), float(v[1])))
    try:
        return Polygon(pts)
    except GeometryError as exc:
        prefix = f"{path}: " if path is not None else ""
        raise GeometryError(f"{prefix}{exc} [rule: {exc.rule}]", rule=exc.rule) from exc


def parse_polygon_file(path) -> Polygon:
    """Read and validate one polygon file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", path) from exc
    return parse_polygon_text(text, path)


@dataclass
class JobSpec:
    command: str
    polygon_a_path: Path
    polygon_b_path: Path
    config: QuadratureConfig = field(default_factory=QuadratureConfig)
    n_samples: int = 4000
    seed: int = 0
    bins: int = 40
    threshold: float = DEFAULT_THRESHOLD
    workers: int = 1
    output_path: Optional[Path] = None


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _comment(job: JobSpec, **extra) -> str:
    fields = {
        "command": job.command,
        "theta_divisions": job.config.theta_divisions,
        "r_points": job.config.r_points,
        "scheme": job.config.scheme.value,
        "seed": job.seed,
        "workers": job.workers,
    }
    fields.update(extra)
    body = " ".join(f"{k}={v}" for k, v in fields.items())
    return f"# polydist {__version__} {body}\n"


def _csv(job, header, rows, **extra) -> str:
    buf = io.StringIO()
    buf.write(_comment(job, **extra))
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(v if isinstance(v, str) else _fmt(v) for v in row) + "\n")
    return buf.getvalue()


def _emit(job: JobSpec, text: str, stdout) -> None:
    if job.output_path is None:
        stdout.write(text)
        return
    try:
        Path(job.output_path).write_text(text)
    except OSError as exc:
        raise OSError(f"{job.output_path}: {exc.strerror}") from exc


def run(job: JobSpec, stdout=None, stderr=None) -> int:
    """Execute one job; returns the process exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        if job.command not in COMMANDS:
            raise ValueError(f"unknown command {job.command!r}")
        a = parse_polygon_file(job.polygon_a_path)
        b = parse_polygon_file(job.polygon_b_path)
        if job.command in ("simulate", "validate") and job.n_samples > MAX_SAMPLES:
            raise ResourceError(f"--n-samples {job.n_samples} exceeds the limit of {MAX_SAMPLES}")
        return _COMMAND_TABLE[job.command](job, a, b, stdout)
    except ResourceError as exc:
        stderr.write(f"polydist: resource error: {exc}\n")
        return EXIT_RESOURCE
    except (ParseError, GeometryError, ValueError) as exc:
        stderr.write(f"polydist: input error: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        stderr.write(f"polydist: I/O error: {exc}\n")
        return EXIT_INPUT


def _cmd_pdf(job, a, b, stdout):
    dist = pdf_curve(a, b, job.config, workers=job.workers)
    rows = zip(dist.r_grid.tolist(), dist.pdf_values.tolist())
    _emit(job, _csv(job, ("r", "f"), rows), stdout)
    return EXIT_OK


def _cmd_cdf(job, a, b, stdout):
    dist = pdf_curve(a, b, job.config, workers=job.workers)
    _emit(job, _csv(job, ("r", "F"), cdf_curve(dist)), stdout)
    return EXIT_OK


def _cmd_bounds(job, a, b, stdout):
    lo, hi = distance_bounds(a, b)
    line = f"{lo:.5f}, {hi:.5f}\n"
    if job.output_path is not None:
        _emit(job, _csv(job, ("r_min", "r_max"), [(lo, hi)]), stdout)
    stdout.write(line)
    return EXIT_OK


def _cmd_simulate(job, a, b, stdout):
    samples = empirical_distances(a, b, job.n_samples, job.seed)
    d = samples.distances
    summary = dict(n=job.n_samples, bins=job.bins, min=_fmt(d[0]), max=_fmt(d[-1]),
                   mean=_fmt(float(np.mean(d))))
    _emit(job, _csv(job, ("bin_center", "density"), histogram_pdf(samples, job.bins), **summary),
          stdout)
    if job.output_path is not None:
        stdout.write(" ".join(f"{k}={v}" for k, v in summary.items()) + f" seed={job.seed}\n")
    return EXIT_OK


def _cmd_validate(job, a, b, stdout):
    direct = pdf_curve(a, b, job.config, workers=job.workers)
    mixture = pdf_via_triangle_sum(a, b, job.config, workers=job.workers)
    scale = max(float(direct.pdf_values.max()), 1e-300)
    gap = np.abs(direct.pdf_values - mixture.pdf_values)
    rel = float(np.max(gap / np.maximum(np.abs(direct.pdf_values), 1e-12 * scale)))
    samples = empirical_distances(a, b, job.n_samples, job.seed)
    ks = ks_test(samples, cdf_curve(direct))
    passed = ks.statistic < job.threshold and rel <= PIPELINE_RTOL
    rows = [
        ("ks_statistic", _fmt(ks.statistic)),
        ("threshold", _fmt(job.threshold)),
        ("cdf_clamped", str(ks.clamped).lower()),
        ("pipeline_max_rel_diff", _fmt(rel)),
        ("pdf_integral", _fmt(direct.integral())),
        ("n_samples", str(job.n_samples)),
        ("result", "pass" if passed else "fail"),
    ]
    _emit(job, _csv(job, ("metric", "value"), rows), stdout)
    if job.output_path is not None:
        stdout.write(f"KS={ks.statistic:.6f} threshold={job.threshold} "
                     f"{'pass' if passed else 'fail'}\n")
    return EXIT_OK if passed else EXIT_FAIL


_COMMAND_TABLE = {
    "pdf": _cmd_pdf,
    "cdf": _cmd_cdf,
    "bounds": _cmd_bounds,
    "simulate": _cmd_simulate,
    "validate": _cmd_validate,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polydist",
                                description="Distance distribution between random points in two polygons.")
    p.add_argument("--version", action="version", version=f"polydist {__version__}")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--a", required=True, type=Path, help="polygon file for the first region")
    p.add_argument("--b", required=True, type=Path, help="polygon file for the second region")
    p.add_argument("--theta-divisions", type=int, default=360)
    p.add_argument("--r-points", type=int, default=200)
    p.add_argument("--scheme", choices=("trapezoid", "midpoint"), default="trapezoid")
    p.add_argument("--n-samples", type=int, default=4000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bins", type=int, default=40)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--output", type=Path, default=None, help="output CSV (default: stdout)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        config = QuadratureConfig(args.theta_divisions, args.r_points, args.scheme)
        for name in ("n_samples", "bins", "workers"):
            if getattr(args, name) < 1:
                raise ValueError(f"--{name.replace('_', '-')} must be positive")
        if not 0 <= args.seed < 2 ** 64:
            raise ValueError("--seed must be a 64-bit unsigned integer")
    except ValueError as exc:
        sys.stderr.write(f"polydist: input error: {exc}\n")
        return EXIT_INPUT
    job = JobSpec(args.command, args.a, args.b, config, args.n_samples, args.seed, args.bins,
                  args.threshold, args.workers, args.output)
    return run(job)


if __name__ == "__main__":
    sys.exit(main())
