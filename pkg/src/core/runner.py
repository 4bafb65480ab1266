"""
Execution of verification suites with deterministic aggregation.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from src.core.suites import Check, CheckResult, Suite, SuiteContext, refs
from src.utils.logging_utils import RunLogger


class RunState(Enum):
    PENDING = 'pending'
    RUNNING = 'running'
    PASSED = 'pass'
    FAILED = 'fail'
    ERRORED = 'error'


@dataclass
class CheckOutcome:
    check: Check
    state: RunState = RunState.PENDING
    result: Optional[CheckResult] = None
    error: Optional[str] = None
    millis: float = 0.0

    def record(self) -> dict[str, Any]:
        """The report record; wall time is kept out so reports stay identical between runs."""
        if self.state is RunState.ERRORED:
            witness = self.error
        else:
            witness = self.result.witness if self.result is not None else None
        return {
            'id': self.check.check_id,
            'refs': refs(self.check.check_id),
            'inputs': self.check.inputs,
            'verdict': self.state.value,
            'witness': witness,
        }


@dataclass
class RunResult:
    outcomes: list[CheckOutcome] = field(default_factory=list)

    @property
    def records(self) -> list[dict[str, Any]]:
        return [outcome.record() for outcome in self.outcomes]

    @property
    def tables(self) -> dict[str, list[dict[str, Any]]]:
        return {
            o.check.check_id: list(o.result.table)
            for o in self.outcomes
            if o.result is not None and o.result.table
        }

    @property
    def timings(self) -> dict[str, float]:
        return {o.check.check_id: o.millis for o in self.outcomes}

    def count(self, state: RunState) -> int:
        return sum(1 for o in self.outcomes if o.state is state)

    @property
    def ok(self) -> bool:
        return all(o.state is RunState.PASSED for o in self.outcomes)

    @property
    def exit_status(self) -> int:
        """0 when every check passed, 1 otherwise"""
        return 0 if self.ok else 1


def selected(check_id: str, only: Optional[str]) -> bool:
    """Whether ``only`` is the id itself or a whole-component prefix of it"""
    if not only:
        return True
    prefix = only.rstrip('.')
    return check_id == prefix or check_id.startswith(prefix + '.')


class SuiteRunner:
    """Collects the checks of the selected suites and runs them on a thread pool"""

    def __init__(self, context: SuiteContext, logger: Optional[RunLogger] = None):
        self.context = context
        self.logger = logger or RunLogger(__name__, datum=context.datum.name)

    def collect(self) -> list[Check]:
        """Checks of the selected suites matching the id filter, sorted by id"""
        config = self.context.config
        checks: dict[str, Check] = {}
        for suite_id in config.selected_suites:
            suite = Suite.get(suite_id)(self.context)
            for check in suite.checks():
                if not selected(check.check_id, config.only):
                    continue
                if check.check_id in checks:
                    raise ValueError(f"duplicate check id {check.check_id!r}")
                checks[check.check_id] = check
        self.logger.debug("collected checks", count=len(checks))
        return [checks[key] for key in sorted(checks)]

    def _execute(self, outcome: CheckOutcome) -> CheckOutcome:
        check = outcome.check
        log = self.logger.bind(check=check.check_id)
        outcome.state = RunState.RUNNING
        start = time.perf_counter()
        try:
            outcome.result = check.func(self.context.rng(check.check_id))
            outcome.state = RunState.PASSED if outcome.result.ok else RunState.FAILED
        except Exception as e:
            outcome.state = RunState.ERRORED
            outcome.error = f"{type(e).__name__}: {e}"
            log.error("check raised", error=e)
        outcome.millis = round((time.perf_counter() - start)*1000, 3)
        if outcome.state is RunState.FAILED:
            log.warning("check failed", millis=outcome.millis)
        else:
            log.debug("check finished", state=outcome.state.value, millis=outcome.millis)
        return outcome

    def run(self) -> RunResult:
        """Run every collected check; outcomes come back in check id order whatever the pool width."""
        outcomes = [CheckOutcome(check) for check in self.collect()]
        jobs = self.context.config.jobs
        self.logger.info("running checks", checks=len(outcomes), jobs=jobs)
        if jobs == 1:
            for outcome in outcomes:
                self._execute(outcome)
        else:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                list(pool.map(self._execute, outcomes))

        result = RunResult(outcomes)
        self.logger.info(
            "run finished",
            passed=result.count(RunState.PASSED),
            failed=result.count(RunState.FAILED),
            errored=result.count(RunState.ERRORED),
        )
        return result
