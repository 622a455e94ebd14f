"""Displacement tableaux on rectangular grids.

A tableau of genus g on an R x C grid holds values from 1..g, strictly
increasing along rows and columns. Repeated values are constrained by the
torsion profile: if value v sits at (x, y) and (x', y') then the diagonals
x - y and x' - y' must be congruent modulo m_v, where m_v = 0 demands exact
equality. Value 1 cannot repeat in a strictly increasing grid, so m_1 is
never consulted. A tableau on the shape (g - d + r) x (r + 1) witnesses a
divisor class of degree d and rank at least r on any chain with the profile.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .chains import TorsionProfile

RULE_ROW = "row-increase"
RULE_COL = "column-increase"
RULE_RANGE = "range"
RULE_CONGRUENCE = "congruence"


@dataclass(frozen=True)
class Tableau:
    """Immutable grid filling; structural rules are enforced at construction.

    The empty grid (zero rows) is admitted as the trivial tableau so that
    degenerate search shapes have a witness object.
    """

    entries: tuple[tuple[int, ...], ...]
    genus: int

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "entries", tuple(tuple(row) for row in self.entries)
        )
        if self.genus < 1:
            raise ValueError(f"genus must be >= 1, got {self.genus}")
        ent = self.entries
        if not ent:
            return
        cols = len(ent[0])
        if cols == 0 or any(len(row) != cols for row in ent):
            raise ValueError("tableau rows must share one positive length")
        for x, row in enumerate(ent, start=1):
            for y, v in enumerate(row, start=1):
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ValueError(f"entry at ({x}, {y}) is not an integer")
                if not 1 <= v <= self.genus:
                    raise ValueError(
                        f"entry {v} at ({x}, {y}) outside 1..{self.genus}"
                    )
                if y > 1 and row[y - 2] >= v:
                    raise ValueError(f"row {x} not strictly increasing at column {y}")
                if x > 1 and ent[x - 2][y - 1] >= v:
                    raise ValueError(f"column {y} not strictly increasing at row {x}")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def at(self, x: int, y: int) -> int:
        """Entry at 1-based position (row x, column y)."""
        if not (1 <= x <= self.rows and 1 <= y <= self.cols):
            raise ValueError(f"cell ({x}, {y}) outside shape {self.shape}")
        return self.entries[x - 1][y - 1]

    def transpose(self) -> "Tableau":
        """Mirror across the main diagonal; diagonals negate, so validity survives."""
        if not self.entries:
            return self
        return Tableau(tuple(zip(*self.entries)), self.genus)

    def restrict(self, rows: int, cols: int) -> "Tableau":
        """Sub-tableau of the first ``rows`` rows and ``cols`` columns."""
        if not (1 <= rows <= self.rows and 1 <= cols <= self.cols):
            raise ValueError(
                f"cannot restrict shape {self.shape} to ({rows}, {cols})"
            )
        return Tableau(tuple(row[:cols] for row in self.entries[:rows]), self.genus)

    def with_genus(self, genus: int) -> "Tableau":
        """Re-house the same grid at a different genus; entries must still fit."""
        if genus == self.genus:
            return self
        return Tableau(self.entries, genus)

    def append_pair_rows(self, first_value: int, row_count: int) -> "Tableau":
        """Append ``row_count`` rows (v, v+1), v counting up by 2 from first_value.

        Only defined on two-column tableaux; the constructor rejects results
        that break strict column increase or overflow the genus.
        """
        if row_count == 0:
            return self
        if row_count < 0:
            raise ValueError("row_count must be >= 0")
        if self.cols != 2:
            raise ValueError("pair rows can only extend a two-column tableau")
        new_rows = tuple(
            (first_value + 2 * i, first_value + 2 * i + 1) for i in range(row_count)
        )
        return Tableau(self.entries + new_rows, self.genus)

    def values(self) -> Iterable[int]:
        for row in self.entries:
            yield from row


@dataclass(frozen=True)
class DivisorQuery:
    """Degree/rank question about divisor classes on a genus-g chain."""

    genus: int
    degree: int
    rank: int

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise ValueError(f"genus must be >= 1, got {self.genus}")
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")

    @property
    def shape(self) -> tuple[int, int]:
        """Grid whose tableaux witness the query: (g - d + r) x (r + 1)."""
        return (self.genus - self.degree + self.rank, self.rank + 1)

    @property
    def in_regime(self) -> bool:
        """True when the tableau criterion applies as stated (g - d + r >= 2)."""
        return self.genus - self.degree + self.rank >= 2


def shape_for(query: DivisorQuery) -> tuple[int, int]:
    return query.shape


def params_of(shape: tuple[int, int], genus: int) -> DivisorQuery:
    """Inverse of shape_for: rank = cols - 1, degree = g - rows + cols - 1."""
    rows, cols = shape
    if cols < 2:
        raise ValueError(f"shape {shape} has no rank interpretation (cols < 2)")
    return DivisorQuery(genus, genus - rows + cols - 1, cols - 1)


@dataclass(frozen=True)
class Violation:
    """One broken rule; congruence violations carry the value and its modulus."""

    rule: str
    cells: tuple[tuple[int, int], ...]
    value: int | None = None
    modulus: int | None = None


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...]

    def __post_init__(self) -> None:
        if self.valid != (len(self.violations) == 0):
            raise ValueError("report validity must match its violation list")


def validate_grid(
    grid: Sequence[Sequence[int]], genus: int, profile: TorsionProfile
) -> ValidationReport:
    """Check a raw rectangular grid against every tableau rule.

    Unlike the Tableau constructor this never raises on rule violations; it
    reports them all, which is what the validation command needs for grids
    that fail monotonicity. Congruence is only checked for values 2..g whose
    cells are in range (anything else is already reported under range or
    monotonicity; value 1 cannot repeat legally, so its modulus never exists).
    """
    if genus != profile.genus:
        raise ValueError(
            f"tableau genus {genus} does not match profile genus {profile.genus}"
        )
    rows = [tuple(row) for row in grid]
    if rows:
        width = len(rows[0])
        if width == 0 or any(len(row) != width for row in rows):
            raise ValueError("grid rows must share one positive length")
    violations: list[Violation] = []
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for x, row in enumerate(rows, start=1):
        for y, v in enumerate(row, start=1):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"entry at ({x}, {y}) is not an integer")
            if not 1 <= v <= genus:
                violations.append(Violation(RULE_RANGE, ((x, y),)))
            else:
                occurrences.setdefault(v, []).append((x, y))
            if y > 1 and row[y - 2] >= v:
                violations.append(Violation(RULE_ROW, ((x, y - 1), (x, y))))
            if x > 1 and rows[x - 2][y - 1] >= v:
                violations.append(Violation(RULE_COL, ((x - 1, y), (x, y))))
    for v, cells in sorted(occurrences.items()):
        if len(cells) < 2 or v == 1:
            continue
        m = profile.modulus(v)
        ax, ay = cells[0]
        for x, y in cells[1:]:
            delta = (x - y) - (ax - ay)
            ok = delta == 0 if m == 0 else delta % m == 0
            if not ok:
                violations.append(
                    Violation(RULE_CONGRUENCE, ((ax, ay), (x, y)), value=v, modulus=m)
                )
    return ValidationReport(not violations, tuple(violations))


def validate(t: Tableau, profile: TorsionProfile) -> ValidationReport:
    """Full rule check of a tableau against a torsion profile of equal genus."""
    return validate_grid(t.entries, t.genus, profile)
