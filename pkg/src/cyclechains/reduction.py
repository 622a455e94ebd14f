"""Constructive reduction of a rank-r tableau witness to a rank-1 witness.

Given a valid tableau on (g - d + r) x (r + 1) with r >= 2, the reduction
produces a valid two-column tableau on (g - d + 2r - 1) x 2, i.e. a witness
for degree d - 2r + 2 and rank 1, together with a trace of the cases taken.

Case vocabulary (k is the staircase extent reached in the bottom-right):

* BASE: two columns already, identity.
* LEMMA1-TRANSPOSE: d >= g; transposing swaps the query with its dual of
  degree 2g - 2 - d < g and strictly smaller rank, then recurse.
* B0: the bottom cell of column r is at most g - 2; drop the last column,
  recurse on the first t(a, r) cycles, append the fresh pair row (g-1, g).
* L1(k): the staircase breaks with t(a-k-1, C) = g - 2k - 1; that value
  repeats at diagonal distance 2, certifying its torsion entry is exactly 2,
  which legalizes extending the recursive two-column witness by pair rows
  (g-2k-1, g-2k), ..., (g-1, g).
* L2a-i(k), L2a-ii(k): the staircase breaks with t(a-k-1, r) <= g - 2k - 4;
  the two sub-cases recurse on a two-row or column-trimmed restriction and
  append fresh pair rows.
* T1(k): staircase complete with k = d - 2r; the broken region pins
  t(i, j) = i + j - 1, forcing torsion entry 2 for every repeated value, so
  the explicit two-column staircase plus fresh pair rows is valid. The L1
  condition is itself forced at k = d - 2r, so dispatch never reaches this
  arm; it is kept because the construction is the natural fallback.
* T2(k): the staircase reached the top row (a - k = 1); recurse on the first
  two rows (their degree exceeds their genus, landing in LEMMA1-TRANSPOSE)
  and append the k - 1 remaining fresh pair rows.
* ADVANCE(k): no break at row a - k; the two inspected entries are forced
  and the staircase extent grows to k.

Dispatch order inside the staircase loop is T2, L1, L2a, T1, ADVANCE; T2
must precede T1 because a one-row broken region repeats nothing and would
not legalize T1's staircase.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import TorsionProfile
from .tableaux import Tableau, validate

CASE_BASE = "BASE"
CASE_LEMMA1 = "LEMMA1-TRANSPOSE"
CASE_B0 = "B0"
CASE_L1 = "L1"
CASE_L2A_I = "L2a-i"
CASE_L2A_II = "L2a-ii"
CASE_T1 = "T1"
CASE_T2 = "T2"
CASE_ADVANCE = "ADVANCE"


class ReductionInternalError(RuntimeError):
    """A constructed tableau failed its own rules; indicates a bug, not an input."""


@dataclass(frozen=True)
class ReductionStep:
    """One dispatched case: where it acted and which value range it appended."""

    case: str
    shape: tuple[int, int]
    genus: int
    k: int | None = None
    appended: tuple[int, int] | None = None

    @property
    def label(self) -> str:
        return self.case if self.k is None else f"{self.case}({self.k})"


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]

    def labels(self) -> tuple[str, ...]:
        return tuple(step.label for step in self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)


def build_staircase(rows: int, genus: int) -> Tableau:
    """Two-column staircase t(i, 1) = i, t(i, 2) = i + 1 on ``rows`` rows.

    Valid for a profile exactly when every repeated value 2..rows has torsion
    entry 2 (consecutive occurrences sit at diagonal distance 2).
    """
    if rows < 1:
        raise ValueError(f"staircase needs at least one row, got {rows}")
    if rows + 1 > genus:
        raise ValueError(f"staircase of {rows} rows exceeds genus {genus}")
    return Tableau(tuple((i, i + 1) for i in range(1, rows + 1)), genus)


def staircase_extent(t: Tableau) -> int:
    """Number of bottom rows locked into the pattern (g-2k-1, g-2k).

    Largest K >= 0 such that t(a - k, C) = g - 2k and t(a - k, C-1) =
    g - 2k - 1 hold for all 0 <= k < K, where a is the row count.
    """
    if t.cols < 2:
        raise ValueError("staircase extent needs at least two columns")
    a, c, g = t.rows, t.cols, t.genus
    k = 0
    while a - k >= 1:
        if t.at(a - k, c) != g - 2 * k or t.at(a - k, c - 1) != g - 2 * k - 1:
            break
        k += 1
    return k


def _reduce(
    t: Tableau, profile: TorsionProfile, steps: list[ReductionStep]
) -> Tableau:
    rows_n, cols_n, g = t.rows, t.cols, t.genus
    r = cols_n - 1
    d = g - rows_n + cols_n - 1

    if cols_n == 2:
        steps.append(ReductionStep(CASE_BASE, t.shape, g))
        return t

    if d >= g:
        steps.append(ReductionStep(CASE_LEMMA1, t.shape, g))
        return _reduce(t.transpose(), profile, steps)

    # d <= g - 1 and r >= 2 force at least three rows.
    a = rows_n
    g0 = t.at(a, r)
    if g0 <= g - 2:
        steps.append(ReductionStep(CASE_B0, t.shape, g, appended=(g - 1, g)))
        sub = t.restrict(a, r).with_genus(g0)
        t1 = _reduce(sub, profile.truncate(g0), steps)
        return t1.with_genus(g).append_pair_rows(g - 1, 1)

    # g0 = g - 1, hence t(a, C) = g: the staircase pattern holds at k = 0.
    k = 0
    while True:
        if a - k == 1:
            h = g - 2 * k + 2
            steps.append(
                ReductionStep(CASE_T2, t.shape, g, k=k, appended=(g - 2 * k + 3, g))
            )
            sub = t.restrict(2, cols_n).with_genus(h)
            t1 = _reduce(sub, profile.truncate(h), steps)
            return t1.with_genus(g).append_pair_rows(g - 2 * k + 3, k - 1)

        if t.at(a - k - 1, cols_n) == g - 2 * k - 1:
            h = g - 2 * k - 1
            steps.append(
                ReductionStep(CASE_L1, t.shape, g, k=k, appended=(g - 2 * k - 1, g))
            )
            sub = t.restrict(a - k, r).with_genus(h)
            t1 = _reduce(sub, profile.truncate(h), steps)
            return t1.with_genus(g).append_pair_rows(g - 2 * k - 1, k + 1)

        if t.at(a - k - 1, r) <= g - 2 * k - 4:
            if g - d - k + r == 2:
                h = g - 2 * k
                steps.append(
                    ReductionStep(
                        CASE_L2A_I, t.shape, g, k=k, appended=(g - 2 * k + 1, g)
                    )
                )
                sub = t.restrict(a - k, cols_n).with_genus(h)
                t1 = _reduce(sub, profile.truncate(h), steps)
                return t1.with_genus(g).append_pair_rows(g - 2 * k + 1, k)
            h = g - 2 * k - 4
            steps.append(
                ReductionStep(
                    CASE_L2A_II, t.shape, g, k=k, appended=(g - 2 * k - 3, g)
                )
            )
            sub = t.restrict(a - k - 1, r).with_genus(h)
            t1 = _reduce(sub, profile.truncate(h), steps)
            return t1.with_genus(g).append_pair_rows(g - 2 * k - 3, k + 2)

        if k == d - 2 * r:
            h = g - d + 2 * r - k
            appended = (g - d + 2 * r - k + 1, g) if k > 0 else None
            steps.append(ReductionStep(CASE_T1, t.shape, g, k=k, appended=appended))
            t1 = build_staircase(g - d + 2 * r - k - 1, h)
            return t1.with_genus(g).append_pair_rows(g - d + 2 * r - k + 1, k)

        # No case fired: both inspected entries are forced by elimination and
        # the staircase extends. Anything else means the input lied.
        if (
            t.at(a - k - 1, r) != g - 2 * k - 3
            or t.at(a - k - 1, cols_n) != g - 2 * k - 2
            or k >= d - 2 * r
        ):
            raise ReductionInternalError(
                f"staircase dispatch stuck at k={k} on shape {t.shape}, genus {g}"
            )
        k += 1
        steps.append(ReductionStep(CASE_ADVANCE, t.shape, g, k=k))


def reduce_to_rank_one(
    t: Tableau, profile: TorsionProfile
) -> tuple[Tableau, ReductionTrace]:
    """Turn a rank-r witness into a rank-1 witness on (g - d + 2r - 1) x 2.

    The input must be a valid tableau with at least two columns, and at
    least two rows unless it already has exactly two columns (a two-column
    input is returned unchanged). The output is re-validated against the
    full profile before returning; failure there is an internal bug.
    """
    report = validate(t, profile)
    if not report.valid:
        raise ValueError(
            f"input tableau violates its profile ({report.violations[0].rule})"
        )
    if t.cols < 2:
        raise ValueError("reduction needs a tableau with at least two columns")
    if t.cols > 2 and t.rows < 2:
        raise ValueError(
            "reduction needs g - d + r >= 2 (at least two rows) when cols > 2"
        )
    steps: list[ReductionStep] = []
    out = _reduce(t, profile, steps)
    g, r = t.genus, t.cols - 1
    d = g - t.rows + t.cols - 1
    want_rows = g - d + 2 * r - 1
    if out.shape != (want_rows, 2) or out.genus != g:
        raise ReductionInternalError(
            f"reduced shape {out.shape} at genus {out.genus}, "
            f"expected ({want_rows}, 2) at genus {g}"
        )
    check = validate(out, profile)
    if not check.valid:
        raise ReductionInternalError(
            f"reduced tableau violates the profile: {check.violations[0]}"
        )
    return out, ReductionTrace(tuple(steps))
