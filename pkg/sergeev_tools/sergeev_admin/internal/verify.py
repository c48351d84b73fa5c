"""
Running identity suites and assembling the verification report.
"""

from concurrent.futures import ProcessPoolExecutor, as_completed
from types import ModuleType
from typing import Any, Dict, List, Optional, Sequence

from sergeev_tools.algebra.center import REPORT_SCHEMA
from sergeev_tools.common import logging
from sergeev_tools.sergeev_admin.internal.suites import (
    Check,
    SuiteContext,
    cxcycles,
    hpoly,
    jm,
    kernel,
    main_theorem,
    mbasis,
    oddskew,
    relations,
    signs,
    xcycles,
    zbasis,
)

ALL = "all"

SUITES: Dict[str, ModuleType] = {
    "signs": signs,
    "hpoly": hpoly,
    "xcycles": xcycles,
    "cxcycles": cxcycles,
    "oddskew": oddskew,
    "jm": jm,
    "zbasis": zbasis,
    "mbasis": mbasis,
    "main-theorem": main_theorem,
    "relations": relations,
    "kernel": kernel,
}

SUITE_CHOICES = list(SUITES) + [ALL]


def resolve_suites(names: Sequence[str]) -> List[str]:
    """
    Expand "all" and drop duplicates, keeping the registry order.
    """
    selected = set(SUITES) if ALL in names else set(names)
    unknown = selected - set(SUITES)
    if unknown:
        raise KeyError(f"Unknown suites: {', '.join(sorted(unknown))}")
    return [name for name in SUITES if name in selected]


def run_suite(name: str, context: SuiteContext) -> Dict[str, Any]:
    logging.info("Running suite {} for d={}, l={}", name, context.config.d, context.config.l)
    checks: List[Check] = SUITES[name].run(context)
    for check in checks:
        if check.skipped:
            logging.debug("{}: {} skipped ({})", name, check.name, check.skipped)
        elif not check.passed:
            logging.warning(
                "{}: {} failed on {} of {} instances",
                name,
                check.name,
                len(check.failures),
                check.instances,
            )
        elif check.failures:
            logging.info(
                "{}: observation {} differs on {} of {} instances",
                name,
                check.name,
                len(check.failures),
                check.instances,
            )
    return {
        "checks": [check.to_dict() for check in checks],
        "pass": all(check.passed for check in checks),
    }


def run_suites(
    context: SuiteContext,
    names: Sequence[str],
    parallel: bool = False,
    max_workers: Optional[int] = None,
) -> Dict[str, Any]:
    """
    Run the selected suites and build the report. Suites run in separate processes when
    parallel is set; the report does not depend on the execution order.
    """
    names = resolve_suites(names)
    results: Dict[str, Dict[str, Any]] = {}
    if parallel and len(names) > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as executor:
            futures_to_suite = {executor.submit(run_suite, name, context): name for name in names}
            for future in as_completed(futures_to_suite):
                results[futures_to_suite[future]] = future.result()
    else:
        for name in names:
            results[name] = run_suite(name, context)

    suites = {name: results[name] for name in names}
    return {
        "schema": REPORT_SCHEMA,
        "instance": context.config.describe(),
        "seed": context.seed,
        "suites": suites,
        "pass": all(suite["pass"] for suite in suites.values()),
    }


def report_table(report: Dict[str, Any]) -> List[Dict[str, Any]]:
    """
    One row per check, for the table output format.
    """
    rows = []
    for suite, result in report["suites"].items():
        for check in result["checks"]:
            rows.append(
                {
                    "suite": suite,
                    "check": check["name"],
                    "gated": check["gated"],
                    "instances": check["instances"],
                    "failures": check["failures"],
                    "pass": check["pass"],
                    "skipped": check.get("skipped", ""),
                }
            )
    return rows
