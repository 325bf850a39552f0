"""Identity sweeps over every small type.

Each check is split into independent cells (one per type, or one per
``n`` for the binary-tree identities) so cells can run in worker
processes; results are always reported in cell order.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import closed_hookp, closed_hookp2
from .bijections import code_box, code_box_size, decode, encode, psi
from .colored import (
    adjacent,
    count_colored,
    iter_colored,
    lemma_ccf_lhs,
    partitions,
    prop_cf_count,
    thm_cfs_count,
)
from .forest import DegreeSequence, count_forests, degree_sequences, enumerate_forests
from .hookpoly import (
    brute_hookp,
    brute_hookp2,
    lascoux_check,
    postnikov_check,
    transformation_sides,
)

ALL_CHECKS = ("cpf", "hookp", "hookp2", "ccf", "propcf", "cfs", "psi", "codes", "postnikov", "lascoux")
TRANSFORM_POINTS = (Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2))
WORKERS_ENV = "HOOKFOREST_WORKERS"


@dataclass(frozen=True)
class VerifySweepConfig:
    max_total_vertices: int = 7
    max_degree: int = 4
    k_values: Tuple[int, ...] = (0, 1, 2)
    checks: Tuple[str, ...] = ALL_CHECKS
    max_n: int = 5
    max_code_n: int = 4

    def __post_init__(self):
        if self.max_total_vertices < 1 or self.max_degree < 1 or self.max_n < 1 or self.max_code_n < 1:
            raise ValueError("sweep bounds must be positive")
        if not self.checks:
            raise ValueError("select at least one check")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if any(k < 0 for k in self.k_values):
            raise ValueError("k values must be nonnegative")

    def to_json(self) -> dict:
        return {
            "max_total_vertices": str(self.max_total_vertices),
            "max_degree": str(self.max_degree),
            "k_values": [str(k) for k in self.k_values],
            "checks": list(self.checks),
            "max_n": str(self.max_n),
            "max_code_n": str(self.max_code_n),
        }


@dataclass
class CellResult:
    instances: int = 0
    failures: List[dict] = field(default_factory=list)
    values: List[dict] = field(default_factory=list)

    def fail(self, **witness) -> None:
        self.failures.append({k: _jsonable(v) for k, v in witness.items()})


def _jsonable(v):
    if isinstance(v, DegreeSequence):
        return [str(c) for c in v.counts]
    if isinstance(v, (int, Fraction)):
        return str(v)
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


# -- cells -----------------------------------------------------------------

def _cell_cpf(r: DegreeSequence, cfg: VerifySweepConfig) -> CellResult:
    res = CellResult(1)
    got, want = len(enumerate_forests(r)), count_forests(r)
    if got != want:
        res.fail(r=r, enumerated=got, formula=want)
    return res


def _cell_hookp(r, cfg) -> CellResult:
    res = CellResult(1)
    brute, closed = brute_hookp(r), closed_hookp(r)
    if brute != closed:
        res.fail(r=r, brute=brute, closed=closed)
    return res


def _cell_hookp2(r, cfg) -> CellResult:
    res = CellResult(1 + len(TRANSFORM_POINTS))
    brute, closed = brute_hookp2(r), closed_hookp2(r)
    if brute != closed:
        res.fail(r=r, brute=brute, closed=closed)
    for t in TRANSFORM_POINTS:
        lhs, rhs = transformation_sides(r, t)
        if lhs != rhs:
            res.fail(r=r, t=t, lhs=lhs, rhs=rhs)
    return res


def _cell_ccf(r, cfg) -> CellResult:
    res = CellResult()
    for k in cfg.k_values:
        res.instances += 1
        lhs = lemma_ccf_lhs(r, k)
        count = count_colored(r, k)
        if lhs.denominator != 1 or lhs != count:
            res.fail(r=r, k=k, formula=lhs, enumerated=count)
    return res


def _cell_propcf(r, cfg) -> CellResult:
    res = CellResult()
    for k in cfg.k_values:
        res.instances += 1
        count, want = count_colored(r, k), prop_cf_count(r, k)
        if count != want:
            res.fail(r=r, k=k, formula=want, enumerated=count)
    return res


def _cell_cfs(r, cfg) -> CellResult:
    res = CellResult()
    for k in cfg.k_values:
        want = thm_cfs_count(r, k)
        for s in partitions(r):
            res.instances += 1
            count = count_colored(r, k, s)
            if count != want:
                res.fail(r=r, k=k, S=s, formula=want, enumerated=count)
            if r.n >= 1:
                first = count_colored(r, k, s, first_tree_min=True)
                if count != r.ell * first:
                    res.fail(r=r, k=k, S=s, enumerated=count, first_tree=first, trees=r.ell)
    return res


def _cell_psi(r, cfg) -> CellResult:
    res = CellResult()
    parts = partitions(r)
    for k in cfg.k_values:
        sets = {s: set(iter_colored(r, k, s)) for s in parts}
        for s1 in parts:
            for s2 in parts:
                if not adjacent(s1, s2):
                    continue
                res.instances += 1
                image = {psi(f, s1, s2, check=False)[0] for f in sets[s1]}
                if image != sets[s2]:
                    res.fail(r=r, k=k, S1=s1, S2=s2, image_size=len(image), target_size=len(sets[s2]))
    return res


def _cell_codes(r, cfg) -> CellResult:
    res = CellResult()
    if not 1 <= r.n <= cfg.max_code_n:
        return res
    for k in cfg.k_values:
        want = thm_cfs_count(r, k) // r.ell
        for s in partitions(r):
            res.instances += 1
            forests = set(iter_colored(r, k, s, first_tree_min=True))
            size = code_box_size(s, k, r.ell)
            decoded = set()
            bad = 0
            for codes in code_box(s, k, r.ell):
                f = decode(s, k, r.ell, codes)
                decoded.add(f)
                if encode(f, s, check=False) != codes:
                    bad += 1
            if bad or decoded != forests or size != want or len(decoded) != size:
                res.fail(r=r, k=k, S=s, box=size, formula=want, decoded=len(decoded),
                         forests=len(forests), encode_mismatches=bad)
    return res


def _cell_postnikov(n: int, cfg) -> CellResult:
    res = CellResult(1)
    lhs, rhs, ok = postnikov_check(n)
    res.values.append({"n": str(n), "lhs": str(lhs), "rhs": str(rhs), "equal": ok})
    if not ok:
        res.fail(n=n, lhs=lhs, rhs=rhs)
    return res


def _cell_lascoux(n: int, cfg) -> CellResult:
    res = CellResult(1)
    lhs, rhs, ok = lascoux_check(n)
    res.values.append({"n": str(n), "lhs": lhs.to_json(), "rhs": rhs.to_json(), "equal": ok})
    if not ok:
        res.fail(n=n, lhs=lhs, rhs=rhs)
    return res


CELLS = {
    "cpf": _cell_cpf,
    "hookp": _cell_hookp,
    "hookp2": _cell_hookp2,
    "ccf": _cell_ccf,
    "propcf": _cell_propcf,
    "cfs": _cell_cfs,
    "psi": _cell_psi,
    "codes": _cell_codes,
    "postnikov": _cell_postnikov,
    "lascoux": _cell_lascoux,
}


def _run_cell(job):
    check, arg, cfg = job
    return CELLS[check](arg, cfg)


def worker_count() -> int:
    """CPU count, capped by the ``HOOKFOREST_WORKERS`` environment variable."""
    n = os.cpu_count() or 1
    raw = os.environ.get(WORKERS_ENV)
    if raw is None:
        return n
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    return max(1, min(n, cap))


def run_sweep(cfg: VerifySweepConfig, workers: Optional[int] = None) -> dict:
    """Run every selected check; the report is independent of ``workers``."""
    types = list(degree_sequences(cfg.max_total_vertices, cfg.max_degree))
    jobs = []
    for check in cfg.checks:
        args: Sequence = range(1, cfg.max_n + 1) if check in ("postnikov", "lascoux") else types
        jobs.extend((check, a, cfg) for a in args)
    workers = worker_count() if workers is None else workers
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_cell, jobs, chunksize=1))
    else:
        results = [_run_cell(j) for j in jobs]

    per_check: Dict[str, CellResult] = {c: CellResult() for c in cfg.checks}
    for (check, _, _), res in zip(jobs, results):
        acc = per_check[check]
        acc.instances += res.instances
        acc.failures.extend(res.failures)
        acc.values.extend(res.values)

    report = {"config": cfg.to_json(), "ok": True, "checks": {}}
    for check in cfg.checks:
        acc = per_check[check]
        entry = {"instances": str(acc.instances), "ok": not acc.failures}
        if acc.values:
            entry["values"] = acc.values
        if acc.failures:
            entry["failures"] = acc.failures
            report["ok"] = False
        report["checks"][check] = entry
    return report
