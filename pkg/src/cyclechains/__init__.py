"""Divisor invariants of chains of cycles via displacement tableaux.

The library models a chain of cycles by its torsion profile, decides
existence of divisor classes of given degree and rank through a pruned
tableau search, computes gonality and Clifford index, constructively
reduces rank-r witnesses to rank-1 witnesses, and sweeps profile families
to confirm that the Clifford index equals gonality minus two.
"""

from .chains import (
    ArcRatio,
    ChainOfCycles,
    TorsionProfile,
    torsion_of_cycle,
    torsion_profile,
)
from .invariants import (
    REGIME_RIEMANN_ROCH,
    REGIME_SINGLE_ROW,
    REGIME_TABLEAU,
    CliffordResult,
    CliffordWitness,
    GonalityResult,
    RankExistence,
    bn_table,
    clifford_index,
    gonality,
    rank_existence,
    rank_exists,
    serre_dual,
)
from .reduction import (
    CASE_ADVANCE,
    CASE_B0,
    CASE_BASE,
    CASE_L1,
    CASE_L2A_I,
    CASE_L2A_II,
    CASE_LEMMA1,
    CASE_T1,
    CASE_T2,
    ReductionInternalError,
    ReductionStep,
    ReductionTrace,
    build_staircase,
    reduce_to_rank_one,
    staircase_extent,
)
from .search import (
    BudgetExhaustedError,
    SearchBudget,
    count_tableaux,
    enumerate_tableaux,
    find_tableau,
)
from .tableaux import (
    RULE_COL,
    RULE_CONGRUENCE,
    RULE_RANGE,
    RULE_ROW,
    DivisorQuery,
    Tableau,
    ValidationReport,
    Violation,
    params_of,
    shape_for,
    validate,
    validate_grid,
)
from .verify import (
    VERDICT_EMPTY_SET,
    VERDICT_FAIL,
    VERDICT_PASS,
    ReductionCrossCheck,
    SweepConfig,
    SweepReport,
    VerificationRecord,
    check_theorem1,
    cross_check_reduction,
    iter_profiles,
    sweep_theorem1,
)

__version__ = "0.1.0"

__all__ = [
    "ArcRatio",
    "BudgetExhaustedError",
    "CASE_ADVANCE",
    "CASE_B0",
    "CASE_BASE",
    "CASE_L1",
    "CASE_L2A_I",
    "CASE_L2A_II",
    "CASE_LEMMA1",
    "CASE_T1",
    "CASE_T2",
    "REGIME_RIEMANN_ROCH",
    "REGIME_SINGLE_ROW",
    "REGIME_TABLEAU",
    "RULE_COL",
    "RULE_CONGRUENCE",
    "RULE_RANGE",
    "RULE_ROW",
    "VERDICT_EMPTY_SET",
    "VERDICT_FAIL",
    "VERDICT_PASS",
    "ChainOfCycles",
    "CliffordResult",
    "CliffordWitness",
    "DivisorQuery",
    "GonalityResult",
    "RankExistence",
    "ReductionCrossCheck",
    "ReductionInternalError",
    "ReductionStep",
    "ReductionTrace",
    "SearchBudget",
    "SweepConfig",
    "SweepReport",
    "Tableau",
    "TorsionProfile",
    "ValidationReport",
    "VerificationRecord",
    "Violation",
    "bn_table",
    "build_staircase",
    "check_theorem1",
    "clifford_index",
    "count_tableaux",
    "cross_check_reduction",
    "enumerate_tableaux",
    "find_tableau",
    "gonality",
    "iter_profiles",
    "params_of",
    "rank_existence",
    "rank_exists",
    "reduce_to_rank_one",
    "serre_dual",
    "shape_for",
    "staircase_extent",
    "sweep_theorem1",
    "torsion_of_cycle",
    "torsion_profile",
    "validate",
    "validate_grid",
    "__version__",
]
