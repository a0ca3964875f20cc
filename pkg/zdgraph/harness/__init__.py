from zdgraph.harness.theorems import THEOREMS, AlgebraFacts, Theorem, TheoremId
from zdgraph.harness.runner import (
    CORPORA,
    CheckReport,
    SuiteResult,
    Verdict,
    applicable,
    check,
    corpus,
    run_suite,
)
