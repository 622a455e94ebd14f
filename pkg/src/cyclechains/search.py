"""Pruned backtracking search for displacement tableaux of a given shape.

Cells are filled in row-major order. The candidate range at each cell is
[max(left, above) + 1 .. g - (rows - x) - (cols - y)]: the lower end keeps
rows and columns strict, the upper end leaves room for the cells that still
have to grow strictly below and to the right. Repeated values are pruned by
an anchored diagonal: the first placement of v fixes a residue and later
placements must match it modulo m_v (exactly, when m_v = 0). Anchors are
released on backtrack, so the walk visits exactly the valid grids, smallest
first in row-major lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .chains import TorsionProfile
from .tableaux import Tableau


class BudgetExhaustedError(RuntimeError):
    """The search ran out of budget; existence is left undecided."""


@dataclass(frozen=True)
class SearchBudget:
    """Optional caps: node_cap bounds value placements, count_cap bounds matches."""

    node_cap: int | None = None
    count_cap: int | None = None

    def __post_init__(self) -> None:
        if self.node_cap is not None and self.node_cap < 1:
            raise ValueError("node_cap must be a positive integer")
        if self.count_cap is not None and self.count_cap < 1:
            raise ValueError("count_cap must be a positive integer")


def _check_shape(rows: int, cols: int, genus: int, profile: TorsionProfile) -> None:
    if rows < 0 or cols < 0:
        raise ValueError(f"shape ({rows}, {cols}) must be nonnegative")
    if genus != profile.genus:
        raise ValueError(
            f"genus {genus} does not match profile genus {profile.genus}"
        )


def _iter_grids(
    rows: int,
    cols: int,
    genus: int,
    profile: TorsionProfile,
    node_cap: int | None,
) -> Iterator[tuple[tuple[int, ...], ...]]:
    ncells = rows * cols
    # moduli[v] is the torsion entry of value v; slots 0 and 1 are padding.
    moduli = [0, 0, *profile.entries]
    flat = [0] * ncells
    anchor_diag = [0] * (genus + 1)
    occurrences = [0] * (genus + 1)
    nodes = 0

    def fill(i: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        nonlocal nodes
        if i == ncells:
            yield tuple(
                tuple(flat[x * cols : (x + 1) * cols]) for x in range(rows)
            )
            return
        x, y = divmod(i, cols)
        lo = flat[i - cols] + 1 if x else 1
        if y and flat[i - 1] >= lo:
            lo = flat[i - 1] + 1
        hi = genus - (rows - 1 - x) - (cols - 1 - y)
        diag = x - y
        for v in range(lo, hi + 1):
            if occurrences[v]:
                m = moduli[v]
                delta = diag - anchor_diag[v]
                if (delta != 0) if m == 0 else (delta % m != 0):
                    continue
            else:
                anchor_diag[v] = diag
            nodes += 1
            if node_cap is not None and nodes > node_cap:
                raise BudgetExhaustedError(
                    f"node budget {node_cap} exhausted on shape ({rows}, {cols})"
                )
            occurrences[v] += 1
            flat[i] = v
            yield from fill(i + 1)
            occurrences[v] -= 1

    return fill(0)


def enumerate_tableaux(
    rows: int, cols: int, genus: int, profile: TorsionProfile
) -> Iterator[Tableau]:
    """Yield every tableau of the shape, row-major lexicographically ascending."""
    _check_shape(rows, cols, genus, profile)
    if rows == 0 or cols == 0:
        yield Tableau((), genus)
        return
    if rows + cols - 1 > genus:
        return
    for grid in _iter_grids(rows, cols, genus, profile, None):
        yield Tableau(grid, genus)


def find_tableau(
    rows: int,
    cols: int,
    genus: int,
    profile: TorsionProfile,
    budget: SearchBudget | None = None,
) -> Tableau | None:
    """Lexicographically smallest tableau of the shape, or None if none exists.

    An empty shape returns the trivial empty tableau; a shape whose forced
    bottom-right corner already exceeds the genus (rows + cols - 1 > g) is
    rejected without search. Raises BudgetExhaustedError when the node cap
    runs out before the question is settled.
    """
    _check_shape(rows, cols, genus, profile)
    if rows == 0 or cols == 0:
        return Tableau((), genus)
    if rows + cols - 1 > genus:
        return None
    node_cap = budget.node_cap if budget else None
    for grid in _iter_grids(rows, cols, genus, profile, node_cap):
        return Tableau(grid, genus)
    return None


def count_tableaux(
    rows: int,
    cols: int,
    genus: int,
    profile: TorsionProfile,
    budget: SearchBudget | None = None,
) -> int:
    """Exact number of tableaux of the shape (1 for an empty shape)."""
    _check_shape(rows, cols, genus, profile)
    if rows == 0 or cols == 0:
        return 1
    if rows + cols - 1 > genus:
        return 0
    node_cap = budget.node_cap if budget else None
    count_cap = budget.count_cap if budget else None
    n = 0
    for _ in _iter_grids(rows, cols, genus, profile, node_cap):
        n += 1
        if count_cap is not None and n > count_cap:
            raise BudgetExhaustedError(
                f"count budget {count_cap} exhausted on shape ({rows}, {cols})"
            )
    return n
