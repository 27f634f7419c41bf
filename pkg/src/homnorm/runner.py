#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Catalog runner.

Visits every homomorphism between every ordered pair of catalog groups up to
a maximal order and runs the whole tool chain on it: the normality search,
the image-normality oracle on injective maps, the abelian family and, for
every certificate, Gamma verification, the equivariant isomorphism, the Moore
homotopy groups and canonical-action agreement.

Pairs are independent, so they can be sharded over a process pool; results
are merged in pair order, which makes the verdicts identical for any number
of workers.
"""

import hashlib
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .actions import canonical_action_agreement
from .bar import bar_of_hom
from .catalog import CatalogEntry, catalog, get_group
from .crossed import (
    equivariant_iso_check,
    gamma_from_cm,
    kernel_centrality_violations,
    search_crossed_module,
    two_type_invariants,
    verify_simplicial_group,
)
from .errors import HomnormError
from .groups import enumerate_homomorphisms, image_normal
from .reports import Report

logger = logging.getLogger(__name__)

COUNTERS = (
    "homs",
    "injective",
    "normal",
    "oracle_checked",
    "abelian_checked",
    "certificates",
    "centrality_verified",
    "gamma_verified",
    "equivariant_verified",
    "moore_verified",
    "agreement_verified",
)


@dataclass(frozen=True)
class RunParameters:
    """Everything a pair check depends on; picklable for worker processes."""

    max_order: int = 8
    levels: int = 4
    abelian_only: bool = False
    budget: float = 64.0
    pair_limit: int = 40000
    triple_limit: int = 60000
    sample_size: int = 2000
    seed: int = 0


@dataclass
class PairResult:
    source: str
    target: str
    counts: Dict[str, int] = field(default_factory=lambda: dict.fromkeys(COUNTERS, 0))
    failures: List[Dict[str, Any]] = field(default_factory=list)

    def fail(self, check: str, mapping: Tuple[int, ...], witness: Any = None, detail: str = "") -> None:
        self.failures.append({
            "check": check,
            "source": self.source,
            "target": self.target,
            "map": list(mapping),
            "witness": list(witness) if isinstance(witness, tuple) else witness,
            "detail": detail,
        })


@dataclass
class RunReport:
    """
    Outcome of a catalog run.

    Attributes:
        command: the command that produced it
        inputs_digest: sha256 of the visited groups and the parameters
        parameters: the run parameters
        verdicts: aggregated counters
        failures: one entry per failed check with its witness
        timing: wall-clock seconds per phase
        workers: processes used
    """

    command: str
    inputs_digest: str
    parameters: Dict[str, Any]
    verdicts: Dict[str, int]
    failures: List[Dict[str, Any]]
    timing: Dict[str, float] = field(default_factory=dict)
    workers: int = 1

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "parameters": self.parameters,
            "verdicts": self.verdicts,
            "ok": self.ok,
            "failures": self.failures,
        }
        if include_timing:
            data["timing"] = self.timing
            data["workers"] = self.workers
        return data


def inputs_digest(entries: List[CatalogEntry], params: RunParameters) -> str:
    payload = {
        "groups": [[e.name, e.group.identity, [list(r) for r in e.group.table]] for e in entries],
        "parameters": asdict(params),
    }
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode("utf-8")).hexdigest()


def _record(result: PairResult, name: str, report: Report, mapping: Tuple[int, ...], counter: str) -> None:
    if report.ok:
        result.counts[counter] += 1
    for v in report.violations:
        result.fail(f"{name}:{v.check}", mapping, v.witness, v.detail)


def check_pair(source_name: str, target_name: str, params: RunParameters) -> PairResult:
    """Every check on every homomorphism source -> target."""
    source, target = get_group(source_name), get_group(target_name)
    result = PairResult(source_name, target_name)
    both_abelian = source.is_abelian and target.is_abelian
    for f in enumerate_homomorphisms(source, target):
        result.counts["homs"] += 1
        try:
            search = search_crossed_module(f, params.budget)
        except HomnormError as exc:
            result.fail("search", f.map, exc.witness, str(exc))
            continue
        if search.normal:
            result.counts["normal"] += 1
        if f.is_injective:
            result.counts["injective"] += 1
            result.counts["oracle_checked"] += 1
            if search.normal != image_normal(f):
                result.fail("oracle", f.map, None, f"search says {search.normal}, image_normal disagrees")
        if both_abelian:
            result.counts["abelian_checked"] += 1
            if not search.normal:
                result.fail("abelian", f.map, None, "no crossed module on a map of abelian groups")
        cm = search.certificate
        if cm is None:
            continue
        result.counts["certificates"] += 1
        k = params.levels
        try:
            _record(result, "centrality", kernel_centrality_violations(cm), f.map, "centrality_verified")
            bar_complex = bar_of_hom(f, k)
            gamma = gamma_from_cm(cm, k, bar_complex=bar_complex)
            _record(result, "gamma", verify_simplicial_group(
                gamma, params.pair_limit, params.triple_limit, params.sample_size, params.seed,
            ), f.map, "gamma_verified")
            _record(result, "equivariant", equivariant_iso_check(gamma, bar_complex), f.map, "equivariant_verified")
            if k >= 3:
                two_type_invariants(cm, k, gamma=gamma)
                result.counts["moore_verified"] += 1
                _record(result, "agreement", canonical_action_agreement(
                    cm, k, gamma=gamma, bar_complex=bar_complex,
                ), f.map, "agreement_verified")
        except HomnormError as exc:
            result.fail(type(exc).__name__, f.map, exc.witness, str(exc))
    logger.debug("pair %s -> %s: %s", source_name, target_name, result.counts)
    return result


def _check_pair_task(task: Tuple[str, str, RunParameters]) -> PairResult:
    return check_pair(*task)


def run_catalog(params: RunParameters, workers: int = 1) -> RunReport:
    """
    Run check_pair over every ordered pair of catalog groups of order <= params.max_order.

    Example:
        >>> run_catalog(RunParameters(max_order=1, levels=3)).verdicts["homs"]
        1
    """
    started = time.perf_counter()
    entries = catalog(params.max_order, params.abelian_only)
    tasks = [(n.name, g.name, params) for n in entries for g in entries]
    logger.debug("catalog run over %d groups, %d pairs, %d workers", len(entries), len(tasks), workers)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_pair_task, tasks))
    else:
        results = [_check_pair_task(task) for task in tasks]

    verdicts = dict.fromkeys(COUNTERS, 0)
    failures: List[Dict[str, Any]] = []
    for result in results:
        for key, value in result.counts.items():
            verdicts[key] += value
        failures.extend(result.failures)
    verdicts["groups"] = len(entries)
    verdicts["pairs"] = len(tasks)
    return RunReport(
        command="catalog",
        inputs_digest=inputs_digest(entries, params),
        parameters=asdict(params),
        verdicts=verdicts,
        failures=failures,
        timing={"total_seconds": round(time.perf_counter() - started, 3)},
        workers=workers,
    )


def summarize(report: RunReport) -> Optional[str]:
    """One line for the console, None when there is nothing to add."""
    v = report.verdicts
    if not v.get("homs"):
        return None
    return (
        f"{v['homs']} homomorphisms, {v['normal']} normal, {v['certificates']} certificates, "
        f"{len(report.failures)} failure(s)"
    )
