"""Integer partitions, bipartitions, and the row-index sets used by the
box-removal transition rules.

Conventions used throughout the package:

* Partitions are weakly decreasing tuples of positive integers; trailing
  zeros are stripped on construction.  Out-of-range parts read as 0, so
  ``mu.part(i)`` is total for every i >= 1.
* A bipartition (mu, nu) describes the shape of a bitableau: mu gives the
  row lengths of the left component, nu of the right component.  Row i of
  the combined shape has lam_i = mu_i + nu_i boxes.
* Rows are indexed from 1 to match the usual mathematical conventions;
  the index sets returned by :func:`index_sets` live inside
  ``{1, ..., len(lam)}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cache
from typing import Iterator


class Side(Enum):
    """Which component of a bitableau (or of a bipartition) a row lives in."""

    LEFT = "left"
    RIGHT = "right"

    def __repr__(self) -> str:  # keep pytest output short
        return self.value


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if any(not isinstance(p, int) or p < 0 for p in parts):
            raise ValueError(f"partition parts must be non-negative integers: {parts!r}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
        object.__setattr__(self, "parts", parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-indexed); 0 for i beyond the length."""
        if i < 1:
            raise IndexError(f"part index must be >= 1, got {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def decremented(self, i: int) -> "Partition":
        """Remove one box from row i, requiring the result to be a partition."""
        if not self.can_decrement(i):
            raise ValueError(f"cannot remove a box from row {i} of {self.parts}")
        parts = list(self.parts)
        parts[i - 1] -= 1
        return Partition(tuple(parts))

    def can_decrement(self, i: int) -> bool:
        return 1 <= i <= len(self.parts) and self.part(i) > self.part(i + 1)

    def incremented(self, i: int) -> "Partition":
        """Add one box to row i (possibly a new bottom row), keeping a partition."""
        if i < 1 or i > len(self.parts) + 1 or (i > 1 and self.part(i - 1) < self.part(i) + 1):
            raise ValueError(f"cannot add a box to row {i} of {self.parts}")
        parts = list(self.parts) + [0] * (i - len(self.parts))
        parts[i - 1] += 1
        return Partition(tuple(parts))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


@dataclass(frozen=True, order=True)
class Bipartition:
    """A pair of partitions (mu, nu) with total size |mu| + |nu|."""

    mu: Partition = Partition()
    nu: Partition = Partition()

    @property
    def lam(self) -> Partition:
        """The row-sum partition: lam_i = mu_i + nu_i."""
        n = max(self.mu.length, self.nu.length)
        return Partition(tuple(self.mu.part(i) + self.nu.part(i) for i in range(1, n + 1)))

    @property
    def length(self) -> int:
        return max(self.mu.length, self.nu.length)

    @property
    def size(self) -> int:
        return self.mu.size + self.nu.size

    def component(self, side: Side) -> Partition:
        return self.mu if side is Side.LEFT else self.nu

    def decremented(self, side: Side, row: int) -> "Bipartition":
        if side is Side.LEFT:
            return Bipartition(self.mu.decremented(row), self.nu)
        return Bipartition(self.mu, self.nu.decremented(row))

    def can_decrement(self, side: Side, row: int) -> bool:
        return self.component(side).can_decrement(row)

    def removable_rows(self) -> list[tuple[Side, int]]:
        """All (side, row) whose outermost box can be removed, left rows first."""
        out = [(Side.LEFT, i) for i in range(1, self.mu.length + 1) if self.mu.can_decrement(i)]
        out += [(Side.RIGHT, i) for i in range(1, self.nu.length + 1) if self.nu.can_decrement(i)]
        return out

    def to_text(self) -> str:
        return f"mu={self.mu};nu={self.nu}"

    @classmethod
    def from_text(cls, text: str) -> "Bipartition":
        m = re.fullmatch(r"mu=\[([\d,]*)\];nu=\[([\d,]*)\]", text.strip())
        if m is None:
            raise ValueError(f"bad bipartition text {text!r}; expected 'mu=[..];nu=[..]'")
        parse = lambda s: Partition(tuple(int(p) for p in s.split(",") if p))
        return cls(parse(m.group(1)), parse(m.group(2)))

    def to_json(self) -> dict:
        return {"mu": list(self.mu.parts), "nu": list(self.nu.parts)}

    @classmethod
    def from_json(cls, obj: dict) -> "Bipartition":
        if not isinstance(obj, dict) or set(obj) != {"mu", "nu"}:
            raise ValueError(f"bad bipartition object: expected keys mu, nu, got {obj!r}")
        return cls(Partition(tuple(obj["mu"])), Partition(tuple(obj["nu"])))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class IndexSets:
    """The five row-index sets attached to (bp, m).

    All sets live in {1, ..., len(lam)} and each one is a contiguous
    interval (rows with equal part values are adjacent because partitions
    are weakly decreasing).
    """

    lam_m: frozenset[int]       # rows i with lam_i = lam_m
    gamma_m: frozenset[int]     # rows i with mu_i = mu_m
    delta_m: frozenset[int]     # rows i with nu_i = nu_m
    delta_leq_m: frozenset[int]  # rows i with nu_i <= nu_m
    delta_lt_m: frozenset[int]   # rows i with nu_i < nu_m


def index_sets(bp: Bipartition, m: int) -> IndexSets:
    """The row-index sets for row m of bp; m must satisfy 1 <= m <= len(lam)."""
    n = bp.length
    if not 1 <= m <= n:
        raise IndexError(f"row {m} out of range 1..{n} for shape {bp}")
    rows = range(1, n + 1)
    lam, mu, nu = bp.lam, bp.mu, bp.nu
    return IndexSets(
        lam_m=frozenset(i for i in rows if lam.part(i) == lam.part(m)),
        gamma_m=frozenset(i for i in rows if mu.part(i) == mu.part(m)),
        delta_m=frozenset(i for i in rows if nu.part(i) == nu.part(m)),
        delta_leq_m=frozenset(i for i in rows if nu.part(i) <= nu.part(m)),
        delta_lt_m=frozenset(i for i in rows if nu.part(i) < nu.part(m)),
    )


def max_gamma(bp: Bipartition, m: int) -> int | None:
    """Largest row index i <= len(lam) with mu_i = mu_m, reading mu_m as 0
    beyond the shape.  None when no row qualifies.  Unlike :func:`index_sets`
    this accepts any m >= 1, which the transition rules need for m+1."""
    if m < 1:
        raise IndexError(f"row index must be >= 1, got {m}")
    target = bp.mu.part(m)
    hits = [i for i in range(1, bp.length + 1) if bp.mu.part(i) == target]
    return max(hits) if hits else None


def max_delta(bp: Bipartition, m: int) -> int | None:
    """Largest row index i <= len(lam) with nu_i = nu_m; see :func:`max_gamma`."""
    if m < 1:
        raise IndexError(f"row index must be >= 1, got {m}")
    target = bp.nu.part(m)
    hits = [i for i in range(1, bp.length + 1) if bp.nu.part(i) == target]
    return max(hits) if hits else None


def dimension_b(bp: Bipartition) -> int:
    """The dimension statistic |nu| + sum_i (i-1) * (mu_i + nu_i)."""
    return bp.nu.size + sum((i - 1) * bp.lam.part(i) for i in range(1, bp.length + 1))


def partitions_of(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``total`` with parts <= max_part, largest part first."""
    if total < 0:
        raise ValueError(f"cannot partition a negative total: {total}")
    if total == 0:
        yield ()
        return
    top = total if max_part is None else min(max_part, total)
    for first in range(top, 0, -1):
        for rest in partitions_of(total - first, first):
            yield (first, *rest)


def enumerate_bipartitions(n: int) -> list[Bipartition]:
    """All bipartitions of total size n, sorted by their text serialization.

    The sort order is the package's canonical report order for shapes; for
    n=1 it yields [(mu=(1), nu=()), (mu=(), nu=(1))].
    """
    if n < 0:
        raise ValueError(f"total size must be >= 0, got {n}")
    out = [
        Bipartition(Partition(mu), Partition(nu))
        for k in range(n + 1)
        for mu in partitions_of(k)
        for nu in partitions_of(n - k)
    ]
    return sorted(out, key=Bipartition.to_text)


def count_bitableaux(bp: Bipartition) -> int:
    """Number of standard bitableaux of shape bp.

    Computed by the corner recursion: the largest entry sits in a removable
    corner, so the count is the sum of the counts of all one-box-smaller
    shapes.  Memoized; cheap for every size this package enumerates.
    """
    return _count(bp.mu.parts, bp.nu.parts)


@cache
def _count(mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    bp = Bipartition(Partition(mu), Partition(nu))
    if bp.size == 0:
        return 1
    return sum(
        _count(*_decremented_parts(bp, side, row)) for side, row in bp.removable_rows()
    )


def _decremented_parts(bp: Bipartition, side: Side, row: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    smaller = bp.decremented(side, row)
    return smaller.mu.parts, smaller.nu.parts
