"""Divisor-class invariants of a chain: rank existence, gonality, Clifford index.

Everything reduces to one question: does a tableau exist on the shape
(g - d + r) x (r + 1)? The criterion is stated for g - d + r >= 2; the two
extensions outside that regime are deliberate and flagged on the result:
a single-row shape keeps the criterion as-is (exists iff r + 1 <= g), and
g - d + r <= 0 is always affirmative (large degree guarantees the rank).
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import TorsionProfile
from .search import SearchBudget, find_tableau
from .tableaux import Tableau

REGIME_TABLEAU = "tableau"
REGIME_SINGLE_ROW = "single-row"
REGIME_RIEMANN_ROCH = "riemann-roch"


@dataclass(frozen=True)
class RankExistence:
    """Answer plus the regime that produced it and a witness when one exists."""

    exists: bool
    regime: str
    witness: Tableau | None


@dataclass(frozen=True)
class GonalityResult:
    value: int
    witness: Tableau


@dataclass(frozen=True)
class CliffordWitness:
    degree: int
    rank: int
    tableau: Tableau


@dataclass(frozen=True)
class CliffordResult:
    """Clifford index; value None marks an empty eligible set (tiny genus only).

    In the empty-set case no divisor qualifies for the defining minimum, the
    gonality - 2 convention is reported instead and convention_applied is set.
    """

    value: int | None
    witness: CliffordWitness | None
    convention_applied: bool
    convention_value: int | None = None


def rank_existence(
    genus: int,
    profile: TorsionProfile,
    degree: int,
    rank: int,
    budget: SearchBudget | None = None,
) -> RankExistence:
    """Decide whether a divisor class of the degree and rank exists."""
    if genus != profile.genus:
        raise ValueError(f"genus {genus} does not match profile genus {profile.genus}")
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    rows = genus - degree + rank
    if rows <= 0:
        return RankExistence(True, REGIME_RIEMANN_ROCH, None)
    witness = find_tableau(rows, rank + 1, genus, profile, budget)
    regime = REGIME_TABLEAU if rows >= 2 else REGIME_SINGLE_ROW
    return RankExistence(witness is not None, regime, witness)


def rank_exists(
    genus: int,
    profile: TorsionProfile,
    degree: int,
    rank: int,
    budget: SearchBudget | None = None,
) -> bool:
    return rank_existence(genus, profile, degree, rank, budget).exists


def gonality(genus: int, profile: TorsionProfile) -> GonalityResult:
    """Minimal degree >= 2 of a divisor class of rank at least 1.

    The scan terminates by degree g at the latest: the shape there is a
    single row of two cells, which always fills for g >= 2.
    """
    if genus < 2:
        raise ValueError(f"gonality needs genus >= 2, got {genus}")
    for degree in range(2, genus + 1):
        res = rank_existence(genus, profile, degree, 1)
        if res.exists:
            assert res.witness is not None
            return GonalityResult(degree, res.witness)
    raise AssertionError("unreachable: degree g always admits a single-row witness")


def clifford_index(genus: int, profile: TorsionProfile) -> CliffordResult:
    """Minimal c = d - 2r over eligible pairs (d = c + 2r, 1 <= r <= g - c - 2).

    c is scanned upward, r upward within each c, so the witness is the first
    eligible pair realizing the minimum. When no pair up to c = g admits a
    tableau the defining set is empty; the result then carries the gonality-2
    convention value instead of a witness.
    """
    if genus < 3:
        raise ValueError(f"Clifford index needs genus >= 3, got {genus}")
    for c in range(0, genus + 1):
        for r in range(1, genus - c - 1):
            degree = c + 2 * r
            witness = find_tableau(genus - c - r, r + 1, genus, profile)
            if witness is not None:
                return CliffordResult(
                    c, CliffordWitness(degree, r, witness), convention_applied=False
                )
    fallback = gonality(genus, profile).value - 2
    return CliffordResult(
        None, None, convention_applied=True, convention_value=fallback
    )


def serre_dual(degree: int, rank: int, genus: int) -> tuple[int, int]:
    """Dual parameters (2g - 2 - d, g - d + r - 1); tableau-side it is transposition."""
    return (2 * genus - 2 - degree, genus - degree + rank - 1)


def bn_table(
    genus: int, profile: TorsionProfile, d_max: int
) -> dict[tuple[int, int], bool]:
    """Existence table over 1 <= r <= d <= d_max; r > d is infeasible and omitted."""
    if d_max < 1:
        raise ValueError(f"d_max must be >= 1, got {d_max}")
    table: dict[tuple[int, int], bool] = {}
    for degree in range(1, d_max + 1):
        for rank in range(1, degree + 1):
            table[(degree, rank)] = rank_exists(genus, profile, degree, rank)
    return table
