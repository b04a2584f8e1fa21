"""Sampling harness: gate each bound on its hypothesis, hunt for violations.

For every sampled pair the bound's lower/upper values are compared against
the directly evaluated |f(a) - f(b)| (the ground truth; never a series of
the difference).  A single relative tolerance constant governs all
comparisons: a pair counts as a violation when it fails by more than
REL_TOL * max(1, |f(a) - f(b)|).
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import bounds as B
from . import criteria as C
from .disk import automorphism, hyperbolic, pseudo_hyperbolic
from .errors import ParameterError
from .harmonic import as_harmonic
from .norms import DEFAULT_R_MAX, beta_lambda, omega_inf_norm

REL_TOL = 1e-9

STRATEGIES = ("uniform-in-disc", "boundary-biased", "near-diagonal")


@dataclass(frozen=True)
class PairSet:
    a: np.ndarray
    b: np.ndarray
    strategy: str
    seed: int
    r_max: float


def sample_pairs(
    strategy: str, count: int, seed: int, r_max: float = DEFAULT_R_MAX
) -> PairSet:
    """Deterministic pair sampler; see STRATEGIES for the regimes covered."""
    if count < 1:
        raise ParameterError("count must be >= 1")
    if strategy not in STRATEGIES:
        raise ParameterError(f"unknown strategy {strategy!r}")
    rng = np.random.default_rng(seed)

    def disc(n, lo=0.0, hi=r_max):
        r = np.sqrt(rng.uniform(lo**2, hi**2, n))  # area measure
        th = rng.uniform(0.0, 2.0 * np.pi, n)
        return r * np.exp(1j * th)

    if strategy == "uniform-in-disc":
        a, b = disc(count), disc(count)
    elif strategy == "boundary-biased":
        lo = min(0.8, 0.8 * r_max)
        a, b = disc(count, lo=lo), disc(count, lo=lo)
    else:  # near-diagonal: b in a small pseudo-hyperbolic ball around a
        a = disc(count, hi=0.95 * r_max)
        w = disc(count, hi=0.049)
        b = automorphism(a, w)
        b = np.where(np.abs(b) >= r_max, a, b)
    return PairSet(a, b, strategy, seed, r_max)


# ---------------------------------------------------------------------------
# Bound registry: evaluator + hypothesis gate per bound name.

def _hyp_normalized(f, params, r_max):
    f = as_harmonic(f)
    margin = 0.0 if f.normalized else -1.0
    return C.CriterionVerdict("normalized", f.normalized, margin, 0j, {})


def _hyp_none(f, params, r_max):
    return C.CriterionVerdict("assumed", True, 0.0, 0j, {})


def _with_omega_inf(f, params, r_max):
    if "omega_inf" not in params:
        params = dict(params)
        params["omega_inf"] = omega_inf_norm(as_harmonic(f), r_max=r_max).value
    return params


BOUND_REGISTRY: dict[str, dict] = {
    "blatter": dict(
        evaluate=lambda f, a, b, p: B.blatter_lower(f, a, b),
        hypothesis=_hyp_none,
    ),
    "kim_minda_convex": dict(
        evaluate=lambda f, a, b, p: B.kim_minda_convex_lower(
            f, a, b, p.get("p", 2.0), p.get("omega_inf")
        ),
        hypothesis=lambda f, p, r: C.convexity_check(as_harmonic(f).h, r_max=r),
        prepare=_with_omega_inf,
    ),
    "chuaqui_pommerenke": dict(
        evaluate=lambda f, a, b, p: B.chuaqui_pommerenke_lower(f, a, b),
        hypothesis=lambda f, p, r: C.nehari_analytic(as_harmonic(f).h, 1.0, r_max=r),
    ),
    "mmm": dict(
        evaluate=lambda f, a, b, p: B.mmm_upper(f, a, b, p.get("t", 1.0)),
        hypothesis=lambda f, p, r: C.nehari_analytic(
            as_harmonic(f).h, p.get("t", 1.0), r_max=r
        ),
    ),
    "dhk": dict(
        evaluate=lambda f, a, b, p: B.dhk_bounds(
            f, a, b, p.get("alpha", 2.0), strict=p.get("strict", True)
        ),
        hypothesis=_hyp_normalized,
    ),
    "becker_analytic": dict(
        evaluate=lambda f, a, b, p: B.becker_analytic_bounds(f, a, b),
        hypothesis=lambda f, p, r: C.becker_analytic(as_harmonic(f).h, "paper", r_max=r),
    ),
    "becker_harmonic": dict(
        evaluate=lambda f, a, b, p: B.becker_harmonic_bounds(f, a, b),
        hypothesis=lambda f, p, r: C.becker_harmonic(f, r_max=r),
    ),
    "nehari_harmonic": dict(
        evaluate=lambda f, a, b, p: B.nehari_harmonic_bounds(
            f, a, b, p.get("epsilon", C.DEFAULT_NEHARI_EPSILON)
        ),
        hypothesis=lambda f, p, r: C.nehari_harmonic(
            f, p.get("epsilon", C.DEFAULT_NEHARI_EPSILON), r_max=r
        ),
    ),
    "convex_h": dict(
        evaluate=lambda f, a, b, p: B.convex_h_bounds(f, a, b, p.get("omega_inf")),
        hypothesis=lambda f, p, r: C.convexity_check(as_harmonic(f).h, r_max=r),
        prepare=_with_omega_inf,
    ),
    "linconn": dict(
        evaluate=lambda f, a, b, p: B.linconn_bounds(
            f, a, b, p.get("c", 1.0), p.get("beta", 2.0), p.get("omega_inf")
        ),
        hypothesis=lambda f, p, r: C.theorem_d_harmonic(f, p.get("c", 1.0), r_max=r),
        prepare=_with_omega_inf,
    ),
    "corollary": dict(
        evaluate=lambda f, a, b, p: B.corollary_bounds(
            f, a, b, p.get("beta_lambda", 2.0)
        ),
        hypothesis=lambda f, p, r: C.theorem_d_harmonic(f, p.get("c", 1.0), r_max=r),
        prepare=lambda f, p, r: (
            p if "beta_lambda" in p
            else {**p, "beta_lambda": beta_lambda(p.get("beta", 1.0), as_harmonic(f), r_max=r)}
        ),
    ),
    "mobius_exact": dict(
        evaluate=lambda f, a, b, p: _mobius_exact_bound(f, a, b),
        hypothesis=_hyp_none,
    ),
}


def _mobius_exact_bound(f, a, b):
    v = B.mobius_exact(as_harmonic(f), a, b)
    return B.PairBound("mobius_exact", lower=v, upper=v, hypothesis="exact")


@dataclass
class BoundReport:
    bound_name: str
    map_id: str
    hypothesis_met: bool
    hypothesis_verdict: dict
    parameters: dict
    strategy: str
    seed: int
    r_max: float
    pairs: int = 0
    violations: int = 0
    skipped: int = 0
    min_lower_margin: float | None = None
    min_upper_margin: float | None = None
    worst_pair: tuple | None = None
    tightness: float | None = None
    extra: dict = field(default_factory=dict)
    # per-pair arrays, kept for CSV emission (not serialized to JSON)
    table: dict = field(default_factory=dict, repr=False)

    def to_json_dict(self) -> dict:
        d = {
            k: getattr(self, k)
            for k in (
                "bound_name", "map_id", "hypothesis_met", "hypothesis_verdict",
                "parameters", "strategy", "seed", "r_max", "pairs", "violations",
                "skipped", "min_lower_margin", "min_upper_margin", "worst_pair",
                "tightness", "extra",
            )
        }
        return _jsonable(d)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in sorted(x.items())}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, (np.floating, np.integer, np.bool_)):
        return x.item()
    if isinstance(x, np.ndarray):
        return _jsonable(list(x))
    if isinstance(x, C.CriterionVerdict):
        return _jsonable(
            dict(criterion=x.criterion, holds=x.holds, margin=x.margin,
                 witness=x.witness, parameters=x.parameters)
        )
    return x


def verify_bound(f, bound_name: str, params: dict | None, samples: PairSet) -> BoundReport:
    """Evaluate one bound over a pair sample, gated on its hypothesis."""
    if bound_name not in BOUND_REGISTRY:
        raise ParameterError(f"unknown bound {bound_name!r}")
    spec = BOUND_REGISTRY[bound_name]
    params = dict(params or {})
    f = as_harmonic(f)
    r_eff = min(samples.r_max, f.reliable_radius)
    verdict = spec["hypothesis"](f, params, r_eff)

    report = BoundReport(
        bound_name=bound_name,
        map_id=f.name,
        hypothesis_met=bool(verdict.holds),
        hypothesis_verdict=_jsonable(verdict),
        parameters={},
        strategy=samples.strategy,
        seed=samples.seed,
        r_max=r_eff,
    )
    if not verdict.holds and not params.pop("force", False):
        report.parameters = _jsonable(params)
        return report

    if "prepare" in spec:
        params = spec["prepare"](f, params, r_eff)
    report.parameters = _jsonable({k: v for k, v in params.items() if k != "force"})

    a, b = samples.a, samples.b
    ok = (np.abs(a) < r_eff) & (np.abs(b) < r_eff)
    report.skipped = int((~ok).sum())
    a, b = a[ok], b[ok]

    pb = spec["evaluate"](f, a, b, params)
    actual = np.abs(np.asarray(f(a) - f(b)))
    tol = REL_TOL * np.maximum(1.0, actual)

    lower = None if pb.lower is None else np.asarray(pb.lower, dtype=float)
    upper = None if pb.upper is None else np.asarray(pb.upper, dtype=float)
    lo_margin = actual - lower if lower is not None else None
    up_margin = upper - actual if upper is not None else None

    viol = np.zeros(len(a), dtype=bool)
    if bound_name == "mobius_exact":
        viol |= np.abs(actual - lower) > tol
    else:
        if lo_margin is not None:
            viol |= lo_margin < -tol
        if up_margin is not None:
            viol |= up_margin < -tol

    report.pairs = int(len(a))
    report.violations = int(viol.sum())
    worst = None
    worst_margin = np.inf
    if lo_margin is not None and len(a):
        report.min_lower_margin = float(lo_margin.min())
        k = int(np.argmin(lo_margin))
        if lo_margin[k] < worst_margin:
            worst, worst_margin = k, float(lo_margin[k])
    if up_margin is not None and len(a):
        report.min_upper_margin = float(up_margin.min())
        k = int(np.argmin(up_margin))
        if up_margin[k] < worst_margin:
            worst, worst_margin = k, float(up_margin[k])
    if worst is not None:
        report.worst_pair = (complex(a[worst]), complex(b[worst]))
    if lower is not None and len(a):
        pos = actual > 0
        report.tightness = float(
            np.clip((lower[pos] / actual[pos]).max(initial=0.0), 0.0, 1.0)
        )

    if bound_name == "becker_harmonic" and len(a):
        # Statement form vs proof form of the upper bound: the proof display
        # ends squared; record which is tighter, pair by pair.
        d = np.asarray(hyperbolic(a, b))
        qq = (3.0 * upper) / np.maximum(np.exp(3.0 * d) - 1.0, 1e-300)  # sqrt(QaQb)
        proof_upper = np.sqrt((np.exp(3.0 * d) - 1.0) / 3.0) * np.sqrt(qq)
        report.extra["proof_form_tighter_pairs"] = int((proof_upper < upper).sum())

    report.table = dict(
        re_a=a.real, im_a=a.imag, re_b=b.real, im_b=b.imag,
        rho=np.asarray(pseudo_hyperbolic(a, b)),
        d=np.asarray(hyperbolic(a, b)),
        lower=lower if lower is not None else np.full(len(a), np.nan),
        actual=actual,
        upper=upper if upper is not None else np.full(len(a), np.nan),
        lower_margin=lo_margin if lo_margin is not None else np.full(len(a), np.nan),
        upper_margin=up_margin if up_margin is not None else np.full(len(a), np.nan),
    )
    return report


def counterexample_search(
    f, bound_name: str, params: dict | None, budget: int = 400,
    samples: PairSet | None = None, seed: int = 0, r_max: float = DEFAULT_R_MAX,
):
    """Pattern-search over (a, b) minimizing the signed margin.

    Starts from the worst sampled pair and returns the most adversarial
    pair found within the evaluation budget, with its margin.
    """
    spec = BOUND_REGISTRY[bound_name]
    params = dict(params or {})
    f = as_harmonic(f)
    if samples is None:
        samples = sample_pairs("uniform-in-disc", 256, seed, min(r_max, f.reliable_radius))
    report = verify_bound(f, bound_name, dict(params, force=True), samples)
    if report.worst_pair is None:
        raise ParameterError("no margins to minimize for this bound")
    if "prepare" in spec:
        params = spec["prepare"](f, params, report.r_max)

    r_eff = report.r_max

    def margin_of(a, b):
        pb = spec["evaluate"](f, np.asarray(a), np.asarray(b), params)
        actual = np.abs(np.asarray(f(np.asarray(a)) - f(np.asarray(b))))
        m = np.full(np.shape(actual), np.inf)
        if pb.lower is not None:
            m = np.minimum(m, actual - np.asarray(pb.lower))
        if pb.upper is not None:
            m = np.minimum(m, np.asarray(pb.upper) - actual)
        return m

    a0, b0 = report.worst_pair
    x = np.array([a0.real, a0.imag, b0.real, b0.imag])
    best = float(margin_of(np.array([a0]), np.array([b0]))[0])
    step = 0.05
    evals = 0
    while evals < budget and step > 1e-7:
        cand = x + step * np.vstack([np.eye(4), -np.eye(4)])
        ca, cb = cand[:, 0] + 1j * cand[:, 1], cand[:, 2] + 1j * cand[:, 3]
        mod_a, mod_b = np.abs(ca), np.abs(cb)
        lim = r_eff * (1.0 - 1e-9)
        ca = np.where(mod_a >= lim, ca / mod_a * lim, ca)
        cb = np.where(mod_b >= lim, cb / mod_b * lim, cb)
        vals = margin_of(ca, cb)
        evals += len(vals)
        k = int(np.argmin(vals))
        if vals[k] < best:
            best = float(vals[k])
            x = np.array([ca[k].real, ca[k].imag, cb[k].real, cb[k].imag])
        else:
            step *= 0.5
    return (complex(x[0], x[1]), complex(x[2], x[3])), best


# ---------------------------------------------------------------------------
# Emission.

CSV_COLUMNS = [
    "re_a", "im_a", "re_b", "im_b", "rho", "d",
    "lower", "actual", "upper", "lower_margin", "upper_margin",
]


def write_report_json(report: BoundReport, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(report.to_json_dict(), sort_keys=True, indent=2) + "\n"
    )


def write_pairs_csv(report: BoundReport, path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        if report.table:
            cols = [report.table[c] for c in CSV_COLUMNS]
            for row in zip(*cols):
                w.writerow([repr(float(v)) for v in row])
