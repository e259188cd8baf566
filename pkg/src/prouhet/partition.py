"""Digit-sum partitions of {0, ..., p**n - 1} and exact power-sum checks.

Assigning each n to the class named by its digit-sum residue splits the
block into p classes of equal size whose power sums agree for every degree
up to n - 1 (all sums are exact big integers, with 0**0 = 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .sequence import PTMParams, ptm_term


@dataclass(frozen=True)
class Partition:
    """The p digit-sum classes S_0, ..., S_{p-1} of {0, ..., p**n - 1}."""

    params: PTMParams
    classes: tuple

    def __post_init__(self):
        p = self.params.p
        if len(self.classes) != p:
            raise ValueError(f"expected {p} classes, got {len(self.classes)}")
        members = sorted(n for cls in self.classes for n in cls)
        if members != list(range(self.params.block_length)):
            raise ValueError("classes must partition the full block exactly")
        for k, cls in enumerate(self.classes):
            for n in cls:
                if ptm_term(n, p) != k:
                    raise ValueError(f"{n} does not belong in class {k}")


def prouhet_partition(params):
    """Assign each n in {0, ..., p**n - 1} to class ptm_term(n, p)."""
    buckets = [[] for _ in range(params.p)]
    for n in range(params.block_length):
        buckets[ptm_term(n, params.p)].append(n)
    return Partition(params, tuple(tuple(b) for b in buckets))


def power_sum(values, exponent):
    """Sum of exponent-th powers, with the 0**0 = 1 convention."""
    if exponent < 0:
        raise ValueError(f"exponent must be non-negative, got {exponent!r}")
    return sum(n**exponent for n in values)


@dataclass(frozen=True)
class PowerSumTable:
    """Rows are degrees 0..n-1, columns are the p classes."""

    params: PTMParams
    sums: tuple


def power_sum_table(part):
    rows = tuple(
        tuple(power_sum(cls, m) for cls in part.classes) for m in range(part.params.n)
    )
    return PowerSumTable(part.params, rows)


@dataclass(frozen=True)
class EspReport:
    """Result of an equal-power-sums check.

    equal_up_to is the largest degree d <= through_degree with all classes
    agreeing for every exponent <= d (-1 if they already differ in size);
    first_violation is the lexicographically first failing (m, j, k).
    """

    equal_up_to: int
    first_violation: Optional[tuple]


def verify_esp(part, through_degree):
    """Check equal power sums across all classes for exponents 0..through_degree."""
    if through_degree < 0:
        raise ValueError(f"through_degree must be non-negative, got {through_degree!r}")
    for m in range(through_degree + 1):
        sums = [power_sum(cls, m) for cls in part.classes]
        for k in range(1, len(sums)):
            if sums[k] != sums[0]:
                return EspReport(m - 1, (m, 0, k))
    return EspReport(through_degree, None)
