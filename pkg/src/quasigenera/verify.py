"""Verification suites: ordered lists of checks run into a list of reports.

Each suite is expanded into tasks (a module-level function plus arguments),
which may be fanned out over processes when ``GENERA_THREADS`` is above 1.
Results are always assembled in task order, so output is deterministic.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

from . import genera, theta
from .arith import format_fraction
from .partitions import cycle_index
from .report import Report
from .series import euler_product, jacobi_triple_sum, theta_product
from .symfun import cycle_index_by_exponential

SUITES = ("traces", "ramanujan", "theta", "witten", "all")
THETA_ZS = (0.05, 0.1, 0.2)
THETA_TAUS = (1j, 2j, 0.5 + 1j)
DEFAULT_K_MAX = {"traces": 10, "ramanujan": 8}


@dataclass
class Config:
    q_order: int = 60
    z_order: int = 10
    lattice_cutoff: int = theta.DEFAULT_CUTOFF
    product_cutoff: int = 400
    s_grid: tuple[float, ...] = theta.DEFAULT_S_GRID
    tol_tight: float = theta.TIGHT_TOL
    k_max: int | None = None
    zs: tuple[complex, ...] = THETA_ZS
    taus: tuple[complex, ...] = THETA_TAUS

    def __post_init__(self) -> None:
        for name in ("q_order", "z_order"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if self.lattice_cutoff < 1 or self.product_cutoff < 1:
            raise ValueError("lattice cutoffs must be >= 1")
        if not self.tol_tight > 0:
            raise ValueError("tolerance must be positive")
        if self.k_max is not None and self.k_max < 0:
            raise ValueError("k_max must be >= 0")
        self.s_grid = theta._check_s_grid(self.s_grid)

    def k_range(self, suite: str) -> range:
        k_max = DEFAULT_K_MAX[suite] if self.k_max is None else self.k_max
        return range(1, k_max + 1)

    def to_json(self) -> dict[str, Any]:
        return {
            "q_order": self.q_order,
            "z_order": self.z_order,
            "lattice_cutoff": self.lattice_cutoff,
            "product_cutoff": self.product_cutoff,
            "s_grid": list(self.s_grid),
            "tol_tight": self.tol_tight,
            "k_max": self.k_max,
        }


@dataclass
class SuiteResult:
    suite: str
    config: Config
    reports: list[Report] = field(default_factory=list)
    csv_rows: list[dict] = field(default_factory=list)

    @property
    def hard_failures(self) -> list[Report]:
        return [r for r in self.reports if r.hard_failure]

    @property
    def warnings(self) -> list[Report]:
        return [r for r in self.reports if not r.passed and not r.hard_failure]

    @property
    def ok(self) -> bool:
        return not self.hard_failures

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "config": self.config.to_json(),
            "status": "pass" if self.ok else "fail",
            "counts": {
                "total": len(self.reports),
                "passed": sum(r.passed for r in self.reports),
                "hard_failures": len(self.hard_failures),
                "warnings": len(self.warnings),
            },
            "reports": [r.to_json() for r in self.reports],
        }


# exact checks that live outside genera


def verify_polya(order: int = 8) -> Report:
    """exp(sum_k x_k t^k / k) against the partition-enumerated cycle index."""
    by_exp = cycle_index_by_exponential(order)
    diff = []
    for k in range(order + 1):
        enumerated = cycle_index(k)
        got = by_exp[k].terms
        for lam in sorted(set(got) | set(enumerated), key=lambda p: p.sort_key(), reverse=True):
            a, b = got.get(lam, 0), enumerated.get(lam, 0)
            if a != b:
                diff.append([k, list(lam.parts), format_fraction(a), format_fraction(b)])
    return Report("cycle-index-exponential-formula", order, order, not diff, diff)


def verify_triple_product(order: int = 40) -> Report:
    """Cleared theta product times prod (1 - q^n)^3 against the triple-product sum."""
    lhs = theta_product(order) * euler_product(order, 3)
    rhs = jacobi_triple_sum(order)
    keys = sorted(set(k for k, _ in lhs.items()) | set(k for k, _ in rhs.items()), key=lambda k: (k[1], k[0]))
    diff = []
    for a, n in keys:
        x, y = lhs.coefficient(a, n), rhs.coefficient(a, n)
        if x != y:
            diff.append({"v": a, "q": n, "product": format_fraction(x), "sum": format_fraction(y)})
    return Report("jacobi-triple-product", 0, order, not diff, diff[:20])


# task lists


Task = tuple[Callable[..., Any], tuple]


def _tasks_traces(cfg: Config) -> list[Task]:
    tasks: list[Task] = [(verify_polya, (8,))]
    for k in cfg.k_range("traces"):
        tasks.append((genera.verify_genus_routes, ("ahat", k)))
        tasks.append((genera.verify_genus_routes, ("l", k)))
    return tasks


def _tasks_ramanujan(cfg: Config) -> list[Task]:
    return [(genera.verify_ramanujan_twist, (k, cfg.q_order)) for k in cfg.k_range("ramanujan")]


def _tasks_witten(cfg: Config) -> list[Task]:
    tasks: list[Task] = [(genera.verify_witten_identity, (cfg.z_order, cfg.q_order))]
    tasks += [(genera.verify_witten_modularity, (k, cfg.q_order)) for k in range(cfg.z_order + 1)]
    return tasks


def _tasks_theta(cfg: Config) -> list[Task]:
    zs, taus, tol, M = cfg.zs, cfg.taus, cfg.tol_tight, cfg.product_cutoff
    tasks: list[Task] = [
        (verify_triple_product, (cfg.q_order,)),
        (theta.verify_theta_odd, (zs, taus)),
        (theta.verify_theta_product_vs_sum, (zs + (0.1 + 0.05j,), taus)),
        (theta.verify_g2star_modular, (taus + (0.3 + 1.2j,),)),
        (theta.verify_sigma_product, (zs, taus, M, tol)),
        (theta.verify_ahat_theta_limit, (zs, taus, M, tol)),
        (theta.verify_l_theta_limit, (zs, taus, M, tol)),
        (theta.verify_witten_g2star, (zs, taus, tol)),
        (theta.verify_witten_numeric, (zs, taus)),
        (theta.verify_cutoff_stability, (zs, taus, M)),
    ]
    for tau in taus:
        tasks.append((theta.verify_g2_hecke_limit, (tau, cfg.s_grid, cfg.lattice_cutoff)))
        tasks.append((theta.verify_hecke_cutoff_stability, (tau, cfg.s_grid, cfg.lattice_cutoff)))
        for z in zs:
            tasks.append((theta.verify_raw_products, (z, tau, cfg.s_grid, cfg.lattice_cutoff)))
    return tasks


_BUILDERS = {
    "traces": _tasks_traces,
    "ramanujan": _tasks_ramanujan,
    "theta": _tasks_theta,
    "witten": _tasks_witten,
}


def _call(task: Task) -> Any:
    fn, args = task
    return fn(*args)


def worker_count() -> int:
    raw = os.environ.get("GENERA_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"GENERA_THREADS must be an integer, got {raw!r}") from None


def run_suite(suite: str, cfg: Config | None = None, workers: int | None = None) -> SuiteResult:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    cfg = cfg or Config()
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    tasks = [t for name in names for t in _BUILDERS[name](cfg)]
    workers = worker_count() if workers is None else workers
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outputs = list(pool.map(_call, tasks))
    else:
        outputs = [_call(t) for t in tasks]

    result = SuiteResult(suite, cfg)
    for out in outputs:
        if isinstance(out, Report):
            result.reports.append(out)
        else:
            # (reports or report, csv rows)
            reps, rows = out
            result.reports.extend(reps if isinstance(reps, list) else [reps])
            result.csv_rows.extend(rows)
    return result
