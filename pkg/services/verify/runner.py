"""Run the verification manifest, concurrently, with results in manifest order."""
import asyncio
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import yaml

from config.loader import ConfigLoader
from services.errors import UsageError
from services.euler.tables import load_shipped_tables
from services.verify.checks import CHECKS
from utils.logger import log_context, logger

SUITES = ("fast", "all")


@dataclass
class CheckSpec:
    id: str
    suite: str
    check: str
    params: Dict[str, Any] = field(default_factory=dict)
    description: str = ""

    def belongs_to(self, suite: str) -> bool:
        return suite == "all" or self.suite == suite


@dataclass
class CheckResult:
    check: str
    status: str
    detail: str = ""


def load_manifest(path: Optional[str] = None) -> List[CheckSpec]:
    path = ConfigLoader.resolve_path(path or ConfigLoader.get("verify.manifest", "config/verify_suite.yaml"))
    try:
        with open(path, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f) or {}
    except OSError as e:
        raise UsageError(f"cannot read verification manifest {path}: {e}") from e

    specs = []
    for entry in raw.get("checks", []):
        spec = CheckSpec(
            id=entry["id"],
            suite=entry.get("suite", "all"),
            check=entry["check"],
            params=entry.get("params") or {},
            description=entry.get("description", ""),
        )
        if spec.suite not in SUITES:
            raise UsageError(f"check {spec.id} has unknown suite {spec.suite!r}")
        if spec.check not in CHECKS:
            raise UsageError(f"check {spec.id} names unknown check {spec.check!r}")
        specs.append(spec)
    return specs


def run_check(spec: CheckSpec) -> CheckResult:
    try:
        with log_context(spec.id):
            outcome = CHECKS[spec.check](**spec.params)
    except Exception as e:
        logger.error(f"Check {spec.id} raised {type(e).__name__}: {e}")
        return CheckResult(spec.id, "error", f"{type(e).__name__}: {e}")
    status = "pass" if outcome.passed else "fail"
    log = logger.info if outcome.passed else logger.warning
    log(f"[{status}] {spec.id}: {outcome.detail}")
    return CheckResult(spec.id, status, outcome.detail)


async def _run_all(specs: List[CheckSpec], workers: int) -> List[CheckResult]:
    semaphore = asyncio.Semaphore(workers)

    async def guarded(spec: CheckSpec) -> CheckResult:
        async with semaphore:
            return await asyncio.to_thread(run_check, spec)

    return list(await asyncio.gather(*(guarded(spec) for spec in specs)))


def run_suite(suite: str = "fast", workers: Optional[int] = None,
              manifest: Optional[str] = None) -> List[CheckResult]:
    """Run every check of the suite; "all" includes the fast ones."""
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}, expected one of {', '.join(SUITES)}")
    workers = max(1, int(workers or ConfigLoader.get("engine.workers", 1)))
    specs = [spec for spec in load_manifest(manifest) if spec.belongs_to(suite)]
    logger.info(f"Running {len(specs)} checks of suite {suite!r} with {workers} worker(s)")
    # Tables are cached process-wide; load them before the threads start.
    load_shipped_tables()
    return asyncio.run(_run_all(specs, workers))
