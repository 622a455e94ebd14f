"""Chains of cycles and their torsion profiles.

A chain of cycles is a metric graph built from g circles glued in a path,
consecutive circles meeting at one point each. For the divisor theory
implemented here only one number per cycle survives: the ratio between the
marked arc (the distance between the two gluing points, measured along the
circle) and the full circumference. Each cycle yields a torsion entry: the
least positive integer multiplier that turns the ratio into an integer, or 0
when the ratio is irrational. The first cycle's entry never matters, so a
profile stores entries for cycles 2..g only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ArcRatio:
    """Arc/circumference ratio of one cycle; ``None`` marks an irrational ratio."""

    ratio: Fraction | None

    def __post_init__(self) -> None:
        if self.ratio is not None:
            if not isinstance(self.ratio, Fraction):
                raise ValueError("rational arc ratio must be a Fraction")
            if not 0 < self.ratio < 1:
                raise ValueError(
                    f"arc ratio must lie strictly between 0 and 1, got {self.ratio}"
                )

    @classmethod
    def rational(cls, numerator: int, denominator: int) -> "ArcRatio":
        if denominator == 0:
            raise ValueError("arc ratio denominator must be nonzero")
        return cls(Fraction(numerator, denominator))

    @classmethod
    def irrational(cls) -> "ArcRatio":
        return cls(None)

    @property
    def is_irrational(self) -> bool:
        return self.ratio is None


def torsion_of_cycle(arc: ArcRatio) -> int:
    """Least m > 0 with m * ratio integral, or 0 for an irrational ratio.

    For p/q in lowest terms the answer is q. The result is never 1: a proper
    sub-arc forces 0 < p/q < 1, so q >= 2.
    """
    if arc.ratio is None:
        return 0
    return arc.ratio.denominator


@dataclass(frozen=True)
class ChainOfCycles:
    """An ordered tuple of cycles; the genus is the number of cycles."""

    cycles: tuple[ArcRatio, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cycles", tuple(self.cycles))
        if not self.cycles:
            raise ValueError("a chain needs at least one cycle")
        for i, arc in enumerate(self.cycles):
            if not isinstance(arc, ArcRatio):
                raise ValueError(f"cycle {i + 1} is not an ArcRatio")

    @property
    def genus(self) -> int:
        return len(self.cycles)


@dataclass(frozen=True)
class TorsionProfile:
    """Torsion entries (m_2, ..., m_g) of a genus-g chain.

    Every entry is 0 (irrational ratio) or an integer >= 2; the value 1 is
    geometrically impossible and rejected.
    """

    genus: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.genus < 1:
            raise ValueError(f"genus must be >= 1, got {self.genus}")
        if len(self.entries) != self.genus - 1:
            raise ValueError(
                f"genus {self.genus} needs {self.genus - 1} torsion entries, "
                f"got {len(self.entries)}"
            )
        for i, m in enumerate(self.entries):
            if not isinstance(m, int) or isinstance(m, bool) or (m != 0 and m < 2):
                raise ValueError(
                    f"torsion entry for cycle {i + 2} must be 0 or >= 2, got {m!r}"
                )

    @classmethod
    def zeros(cls, genus: int) -> "TorsionProfile":
        return cls(genus, (0,) * (genus - 1))

    @classmethod
    def uniform(cls, genus: int, m: int) -> "TorsionProfile":
        return cls(genus, (m,) * (genus - 1))

    def modulus(self, value: int) -> int:
        """Torsion entry consulted for a repeated tableau value (2 <= value <= g)."""
        if not 2 <= value <= self.genus:
            raise ValueError(f"no torsion entry for value {value} at genus {self.genus}")
        return self.entries[value - 2]

    def truncate(self, genus: int) -> "TorsionProfile":
        """Profile of the sub-chain made of the first ``genus`` cycles."""
        if not 1 <= genus <= self.genus:
            raise ValueError(
                f"cannot truncate genus {self.genus} profile to genus {genus}"
            )
        return TorsionProfile(genus, self.entries[: genus - 1])


def torsion_profile(chain: ChainOfCycles) -> TorsionProfile:
    """Torsion profile of a chain; the first cycle contributes no entry."""
    return TorsionProfile(
        chain.genus, tuple(torsion_of_cycle(arc) for arc in chain.cycles[1:])
    )
