"""
Harness Runner
==============

- applicable / check: one theorem on one algebra
- run_suite: every (algebra, theorem) pair, optionally across worker processes,
  with a pandas summary of verdict counts per theorem
- named corpora: census, constructed, rings, all
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from zdgraph.algebra.semiring import FiniteSemiring
from zdgraph.config import CONFIG
from zdgraph.constructions import iter_grid, matrix_semiring, ring_corpus
from zdgraph.enumerate import EnumFilter, enumerate_semirings
from zdgraph.harness.theorems import THEOREMS, AlgebraFacts, TheoremId

logger = logging.getLogger(__name__)

CORPORA = ("census", "constructed", "rings", "all")


class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


@dataclass
class CheckReport:
    theorem: TheoremId
    algebra: str
    verdict: Verdict
    detail: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem.value,
            "algebra": self.algebra,
            "verdict": self.verdict.value,
            "detail": self.detail,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, default=str)


# ===============================
# SINGLE CHECKS
# ===============================

def _facts(S: Any) -> AlgebraFacts:
    return S if isinstance(S, AlgebraFacts) else AlgebraFacts(S)


def applicable(S: FiniteSemiring, theorem: TheoremId) -> Tuple[bool, str]:
    """Whether S satisfies the theorem's hypothesis, with the hypothesis text as reason."""
    t = THEOREMS[theorem]
    ok = bool(t.guard(_facts(S)))
    return ok, t.hypothesis if ok else f"not {t.hypothesis}"


def check(S: FiniteSemiring, theorem: TheoremId) -> CheckReport:
    """
    Evaluate one theorem on one algebra.

    Exceptions raised while checking are logged and reported as FAIL.
    """
    facts = _facts(S)
    name = facts.S.name
    t = THEOREMS[theorem]
    try:
        if not t.guard(facts):
            return CheckReport(theorem, name, Verdict.NOT_APPLICABLE, {"reason": f"not {t.hypothesis}"})
        ok, detail = t.conclusion(facts)
    except Exception as e:
        logger.error(f"{theorem.value} on {name} raised: {e}", exc_info=True)
        return CheckReport(theorem, name, Verdict.FAIL, {"error": f"{type(e).__name__}: {e}"})
    verdict = Verdict.PASS if ok else Verdict.FAIL
    if verdict is Verdict.FAIL:
        logger.warning(f"{theorem.value} fails on {name}: {detail}")
    return CheckReport(theorem, name, verdict, detail)


def _check_algebra(job: Tuple[FiniteSemiring, Tuple[TheoremId, ...]]) -> List[CheckReport]:
    S, theorems = job
    facts = AlgebraFacts(S)
    return [check(facts, t) for t in theorems]


# ===============================
# SUITES
# ===============================

@dataclass
class SuiteResult:
    reports: List[CheckReport]
    summary: pd.DataFrame
    vacuous: List[TheoremId]
    require_witness: bool = True

    @property
    def failures(self) -> List[CheckReport]:
        return [r for r in self.reports if r.verdict is Verdict.FAIL]

    @property
    def ok(self) -> bool:
        if self.failures:
            return False
        return not (self.require_witness and self.vacuous)

    def reports_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "theorem": r.theorem.value,
                    "algebra": r.algebra,
                    "verdict": r.verdict.value,
                    "detail": json.dumps(r.detail, sort_keys=True, default=str),
                }
                for r in self.reports
            ],
            columns=["theorem", "algebra", "verdict", "detail"],
        )


def _summarize(reports: List[CheckReport], theorems: Sequence[TheoremId]) -> pd.DataFrame:
    df = pd.DataFrame(
        [(r.theorem.value, r.verdict.value) for r in reports], columns=["theorem", "verdict"]
    )
    counts = (
        df.groupby(["theorem", "verdict"]).size().unstack(fill_value=0)
        if not df.empty else pd.DataFrame()
    )
    counts = counts.reindex(
        index=[t.value for t in theorems],
        columns=[v.value for v in Verdict],
        fill_value=0,
    )
    counts.index.name = "theorem"
    return counts.astype(int)


def run_suite(
    corpus: Iterable[FiniteSemiring],
    theorems: Optional[Sequence[TheoremId]] = None,
    jobs: int = 1,
    require_witness: bool = True,
) -> SuiteResult:
    """
    Check every theorem on every algebra.

    Args:
        corpus: algebras to check
        theorems: theorem ids (all by default)
        jobs: worker processes; each algebra is one task
        require_witness: treat a theorem applicable to no algebra as a suite failure

    Returns:
        SuiteResult with reports in (algebra, theorem) order
    """
    theorems = tuple(theorems or THEOREMS)
    algebras = list(corpus)
    job_list = [(S, theorems) for S in algebras]
    if jobs > 1 and len(job_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_check_algebra, job_list))
    else:
        batches = [_check_algebra(job) for job in job_list]
    reports = [r for batch in batches for r in batch]

    summary = _summarize(reports, theorems)
    vacuous = [
        t for t in theorems
        if summary.loc[t.value, Verdict.PASS.value] + summary.loc[t.value, Verdict.FAIL.value] == 0
        and not THEOREMS[t].exempt_from_vacuity
    ]
    result = SuiteResult(reports, summary, vacuous, require_witness)
    logger.info(
        f"harness: {len(algebras)} algebras x {len(theorems)} theorems, "
        f"{len(result.failures)} failures, {len(vacuous)} vacuous"
    )
    return result


# ===============================
# CORPORA
# ===============================

def census_corpus(jobs: int = 1) -> List[FiniteSemiring]:
    """Noncommutative census up to its order limit plus the commutative census beyond it."""
    noncommutative_order = CONFIG["harness"]["noncommutative_census_order"]
    commutative_order = CONFIG["harness"]["census_order"]
    algebras = list(enumerate_semirings(EnumFilter(commutative=False, max_order=noncommutative_order), jobs))
    if commutative_order > noncommutative_order:
        algebras += list(enumerate_semirings(
            EnumFilter(min_order=noncommutative_order + 1, max_order=commutative_order), jobs
        ))
    return algebras


def constructed_corpus() -> List[FiniteSemiring]:
    return [S for S, _ in iter_grid()] + [matrix_semiring(2)]


def corpus(name: str, jobs: int = 1) -> List[FiniteSemiring]:
    """
    Named corpus.

    Raises:
        ValueError: unknown corpus name
    """
    if name == "census":
        return census_corpus(jobs)
    if name == "constructed":
        return constructed_corpus()
    if name == "rings":
        return ring_corpus()
    if name == "all":
        return census_corpus(jobs) + constructed_corpus() + ring_corpus()
    raise ValueError(f"Invalid corpus: {name!r} (choose from {', '.join(CORPORA)})")
