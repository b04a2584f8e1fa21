"""Command-line front end: catalog, analyze, verify, plot.

Exit codes: 0 = all checks passed; 2 = violations found; 3 = hypothesis
not met (without --allow-unmet); 4 = configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .catalog import CATALOG, get_map, listing
from .criteria import (
    DEFAULT_NEHARI_EPSILON,
    becker_analytic,
    becker_harmonic,
    convexity_check,
    nehari_analytic,
    nehari_harmonic,
    theorem_d_harmonic,
)
from .descriptors import load_descriptor
from .errors import ConfigError, HarmdistError
from .harmonic import HarmonicMap
from .norms import (
    DEFAULT_GRID,
    DEFAULT_R_MAX,
    harmonic_schwarzian_norm,
    omega_inf_norm,
    omega_star_norm,
    order_of,
    pre_schwarzian_norm,
)
from .operators import harmonic_pre_schwarzian, harmonic_schwarzian
from .plotting import (
    image_polylines,
    write_margin_scatter_csv,
    write_polylines_csv,
    write_polylines_svg,
)
from .verifier import (
    BOUND_REGISTRY,
    _jsonable,
    sample_pairs,
    verify_bound,
    write_pairs_csv,
    write_report_json,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 2
EXIT_HYPOTHESIS = 3
EXIT_CONFIG = 4


@dataclass
class RunConfig:
    command: str
    map_spec: str | None = None
    bound: str | None = None
    epsilon: float = DEFAULT_NEHARI_EPSILON
    t: float = 1.0
    p: float = 2.0
    alpha: float = 2.0
    beta: float = 2.0
    c: float = 1.0
    r_max: float = DEFAULT_R_MAX
    grid: tuple[int, int] = DEFAULT_GRID
    seed: int = 0
    pairs: int = 10_000
    out: Path | None = None
    allow_unmet: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); config errors are exit 4
        raise ConfigError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="harmdist", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, need_map=True):
        if need_map:
            sp.add_argument("--map", required=True, dest="map_spec",
                            help="catalog name or path to a JSON mapping descriptor")
        sp.add_argument("--epsilon", type=float, default=DEFAULT_NEHARI_EPSILON)
        sp.add_argument("--t", type=float, default=1.0)
        sp.add_argument("--p", type=float, default=2.0)
        sp.add_argument("--alpha", type=float, default=2.0)
        sp.add_argument("--beta", type=float, default=2.0)
        sp.add_argument("--c", type=float, default=1.0)
        sp.add_argument("--r-max", type=float, default=DEFAULT_R_MAX, dest="r_max")
        sp.add_argument("--grid", type=str, default="64,256",
                        help="radial,angular grid counts, e.g. 64,256")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--pairs", type=int, default=10_000)
        sp.add_argument("--out", type=Path, default=None)
        sp.add_argument("--allow-unmet", action="store_true", dest="allow_unmet")

    sub.add_parser("catalog", help="list built-in maps and their known properties")
    common(sub.add_parser("analyze", help="norms, order and criterion verdicts"))
    vp = sub.add_parser("verify", help="verify a two-point distortion bound")
    vp.add_argument("--bound", required=True, choices=sorted(BOUND_REGISTRY))
    common(vp)
    pp = sub.add_parser("plot", help="emit SVG/CSV image data")
    pp.add_argument("--bound", default=None, choices=sorted(BOUND_REGISTRY))
    common(pp)
    return parser


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        nr, nt = (int(v) for v in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"invalid --grid {text!r}; expected 'nr,ntheta'") from exc
    if nr < 1 or nt < 1:
        raise ConfigError("--grid counts must be positive")
    return nr, nt


def _resolve_map(spec: str) -> HarmonicMap:
    if spec in CATALOG:
        return get_map(spec)
    path = Path(spec)
    if path.exists():
        return load_descriptor(path)
    raise ConfigError(f"--map {spec!r} is neither a catalog name nor an existing file")


def _outdir(cfg: RunConfig) -> Path:
    out = cfg.out or Path.cwd()
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_catalog() -> int:
    print(json.dumps(listing(), indent=2, sort_keys=True))
    return EXIT_OK


def cmd_analyze(cfg: RunConfig) -> int:
    f = _resolve_map(cfg.map_spec)
    r_max = min(cfg.r_max, f.reliable_radius)
    grid = cfg.grid
    report: dict = {"map": f.name, "r_max": r_max, "grid": list(grid)}

    # pointwise operator values on a coarse grid
    radii = np.array([0.0, 0.25, 0.5, 0.7]) * min(r_max, 1.0)
    angles = np.exp(1j * np.linspace(0.0, 2 * np.pi, 8, endpoint=False))
    zs = np.array([r * w for r in radii for w in angles][:: 4])
    report["pointwise"] = [
        {
            "z": [z.real, z.imag],
            "P_f": _c(harmonic_pre_schwarzian(f, z)),
            "S_f": _c(harmonic_schwarzian(f, z)),
        }
        for z in zs
    ]

    h = f.h
    norms = {
        "pre_schwarzian_paper": pre_schwarzian_norm(h, False, r_max, grid),
        "pre_schwarzian_classical": pre_schwarzian_norm(h, True, r_max, grid),
        "schwarzian_harmonic": harmonic_schwarzian_norm(f, r_max, grid),
        "omega_inf": omega_inf_norm(f, r_max, grid),
        "omega_star": omega_star_norm(f, r_max, grid),
    }
    report["norms"] = {
        k: dict(value=v.value, r_max=v.r_max, refined=v.refined,
                argmax=[v.argmax_point.real, v.argmax_point.imag])
        for k, v in norms.items()
    }
    oe = order_of(h, r_max, grid)
    report["order"] = dict(alpha=oe.alpha, normalized=oe.normalized,
                           argmax=[oe.argmax_point.real, oe.argmax_point.imag])

    verdicts = [
        becker_analytic(h, "paper", r_max, grid),
        becker_analytic(h, "classical", r_max, grid),
        becker_harmonic(f, r_max, grid),
        nehari_analytic(h, cfg.t, r_max, grid),
        nehari_harmonic(f, cfg.epsilon, r_max, grid),
        convexity_check(h, r_max, grid),
        theorem_d_harmonic(f, cfg.c, r_max, grid),
    ]
    report["criteria"] = [_jsonable(v) for v in verdicts]

    text = json.dumps(_jsonable(report), indent=2, sort_keys=True)
    if cfg.out:
        out = _outdir(cfg) / "analyze.json"
        out.write_text(text + "\n")
        print(f"wrote {out}")
    else:
        print(text)
    return EXIT_OK


def _c(z: complex):
    return [z.real, z.imag]


def _bound_params(cfg: RunConfig) -> dict:
    return {
        "epsilon": cfg.epsilon, "t": cfg.t, "p": cfg.p,
        "alpha": cfg.alpha, "beta": cfg.beta, "c": cfg.c,
    }


def cmd_verify(cfg: RunConfig) -> int:
    f = _resolve_map(cfg.map_spec)
    out = _outdir(cfg)
    params = _bound_params(cfg)
    r_max = min(cfg.r_max, f.reliable_radius)
    suites = [
        ("uniform-in-disc", cfg.pairs),
        ("boundary-biased", max(1, cfg.pairs // 10)),
        ("near-diagonal", max(1, cfg.pairs // 10)),
    ]
    total_violations = 0
    unmet = False
    summaries = []
    for strategy, count in suites:
        samples = sample_pairs(strategy, count, cfg.seed, r_max)
        report = verify_bound(f, cfg.bound, params, samples)
        stem = f"{cfg.bound}-{strategy}"
        write_report_json(report, out / f"{stem}.json")
        write_pairs_csv(report, out / f"{stem}.csv")
        total_violations += report.violations
        unmet |= not report.hypothesis_met
        summaries.append(
            f"{stem}: pairs={report.pairs} violations={report.violations} "
            f"hypothesis_met={report.hypothesis_met}"
        )
    for line in summaries:
        print(line)
    if unmet and not cfg.allow_unmet:
        return EXIT_HYPOTHESIS
    if total_violations:
        return EXIT_VIOLATIONS
    return EXIT_OK


def cmd_plot(cfg: RunConfig) -> int:
    f = _resolve_map(cfg.map_spec)
    out = _outdir(cfg)
    polylines = image_polylines(f)
    write_polylines_svg(polylines, out / "image.svg")
    write_polylines_csv(polylines, out / "image.csv")
    wrote = ["image.svg", "image.csv"]
    if cfg.bound:
        samples = sample_pairs(
            "uniform-in-disc", max(1, cfg.pairs), cfg.seed,
            min(cfg.r_max, f.reliable_radius),
        )
        report = verify_bound(f, cfg.bound, _bound_params(cfg), samples)
        write_margin_scatter_csv(report, out / f"{cfg.bound}-margins.csv")
        wrote.append(f"{cfg.bound}-margins.csv")
    print("wrote " + ", ".join(str(out / w) for w in wrote))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        ns = _build_parser().parse_args(argv)
        if ns.command == "catalog":
            return cmd_catalog()
        cfg = RunConfig(
            command=ns.command,
            map_spec=ns.map_spec,
            bound=getattr(ns, "bound", None),
            epsilon=ns.epsilon, t=ns.t, p=ns.p, alpha=ns.alpha,
            beta=ns.beta, c=ns.c, r_max=ns.r_max,
            grid=_parse_grid(ns.grid), seed=ns.seed, pairs=ns.pairs,
            out=ns.out, allow_unmet=ns.allow_unmet,
        )
        if cfg.command == "analyze":
            return cmd_analyze(cfg)
        if cfg.command == "verify":
            return cmd_verify(cfg)
        if cfg.command == "plot":
            return cmd_plot(cfg)
        raise ConfigError(f"unknown command {cfg.command!r}")
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except HarmdistError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
