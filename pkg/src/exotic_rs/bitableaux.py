"""Bitableaux: pairs of Young-diagram fillings growing away from a common wall.

Storage convention (used by every function in the package): both components
store each row *wall-outward*, i.e. index 0 of a row is the box adjacent to
the central wall.  Only :meth:`Bitableau.render` mirrors the left component,
so the printed picture shows the two diagrams growing left and right out of
a shared wall::

    6 3 1 | 4 7
      2   | 5 8
          | 9      <- printed as "2 | 5 8" and "| 9" (no column padding)

Rows of each component are numbered 1, 2, ... downward.  Interleaving the
two components by depth gives the *combined row numbering* used by the
bumping algorithms: left row i is combined row 2i-1, right row i is 2i, so
rows at equal depth put the right component below the left.

A :class:`Bitableau` is any filling by distinct positive integers that
increases along rows (away from the wall) and down columns; entries need not
be 1..n (intermediate states of the algorithms have gaps).  ``is_standard``
identifies the fillings whose entries are exactly 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .partitions import Bipartition, Partition, Side


def row_number(side: Side, row: int) -> int:
    """Combined row numbering: left rows map to odd, right rows to even."""
    if row < 1:
        raise IndexError(f"row must be >= 1, got {row}")
    return 2 * row - 1 if side is Side.LEFT else 2 * row


@dataclass(frozen=True)
class Position:
    """A box slot: which component, which row, and the distance from the wall
    (col = 1 is the box touching the wall)."""

    side: Side
    row: int
    col: int

    def __post_init__(self) -> None:
        if self.row < 1 or self.col < 1:
            raise ValueError(f"position row/col must be >= 1: {self!r}")

    @property
    def row_number(self) -> int:
        return row_number(self.side, self.row)

    def __repr__(self) -> str:
        return f"({self.side.value} r{self.row} c{self.col})"


@dataclass(frozen=True)
class Bitableau:
    """An increasing filling of a bipartition shape by distinct positive
    integers, stored wall-outward (see module docstring)."""

    left: tuple[tuple[int, ...], ...] = ()
    right: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        left = tuple(tuple(row) for row in self.left)
        right = tuple(tuple(row) for row in self.right)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        seen: set[int] = set()
        for side, rows in ((Side.LEFT, left), (Side.RIGHT, right)):
            for i, row in enumerate(rows, start=1):
                if not row:
                    raise ValueError(f"{side.value} row {i} is empty; empty rows are not stored")
                for x in row:
                    if not isinstance(x, int) or x < 1:
                        raise ValueError(f"entries must be positive integers, got {x!r} in {side.value} row {i}")
                    if x in seen:
                        raise ValueError(f"entries must be distinct, {x} appears twice")
                    seen.add(x)
                if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                    raise ValueError(f"entries must increase away from the wall in {side.value} row {i}: {row}")
            for i in range(len(rows) - 1):
                if len(rows[i]) < len(rows[i + 1]):
                    raise ValueError(f"{side.value} row lengths must weakly decrease: row {i + 1} is shorter than row {i + 2}")
                for j in range(len(rows[i + 1])):
                    if rows[i][j] >= rows[i + 1][j]:
                        raise ValueError(
                            f"entries must increase down each column: {side.value} rows {i + 1},{i + 2} "
                            f"at distance {j + 1} hold {rows[i][j]},{rows[i + 1][j]}"
                        )

    # -- basic views ---------------------------------------------------------

    @property
    def shape(self) -> Bipartition:
        return Bipartition(
            Partition(tuple(len(r) for r in self.left)),
            Partition(tuple(len(r) for r in self.right)),
        )

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.left) + sum(len(r) for r in self.right)

    def entries(self) -> frozenset[int]:
        return frozenset(x for rows in (self.left, self.right) for row in rows for x in row)

    @property
    def is_standard(self) -> bool:
        """True when the entries are exactly 1..size."""
        return self.entries() == frozenset(range(1, self.size + 1))

    def component(self, side: Side) -> tuple[tuple[int, ...], ...]:
        return self.left if side is Side.LEFT else self.right

    def has_box(self, pos: Position) -> bool:
        rows = self.component(pos.side)
        return pos.row <= len(rows) and pos.col <= len(rows[pos.row - 1])

    def entry(self, pos: Position) -> int:
        if not self.has_box(pos):
            raise KeyError(f"no box at {pos!r} in shape {self.shape}")
        return self.component(pos.side)[pos.row - 1][pos.col - 1]

    def position_of(self, value: int) -> Position:
        for side in (Side.LEFT, Side.RIGHT):
            for i, row in enumerate(self.component(side), start=1):
                for j, x in enumerate(row, start=1):
                    if x == value:
                        return Position(side, i, j)
        raise KeyError(f"value {value} not in bitableau")

    # -- functional updates (each returns a fresh, re-validated Bitableau) ----

    def with_box(self, pos: Position, value: int) -> "Bitableau":
        """Add a box at an append slot (the next free slot of its row)."""
        rows = [list(r) for r in self.component(pos.side)]
        if pos.row == len(rows) + 1:
            rows.append([])
        if pos.row > len(rows):
            raise ValueError(f"cannot add a box at {pos!r}: row too deep for shape {self.shape}")
        if pos.col != len(rows[pos.row - 1]) + 1:
            raise ValueError(f"cannot add a box at {pos!r}: not the append slot of its row")
        rows[pos.row - 1].append(value)
        return self._replace_component(pos.side, rows)

    def with_replaced(self, pos: Position, value: int) -> "Bitableau":
        rows = [list(r) for r in self.component(pos.side)]
        if not self.has_box(pos):
            raise KeyError(f"no box at {pos!r} in shape {self.shape}")
        rows[pos.row - 1][pos.col - 1] = value
        return self._replace_component(pos.side, rows)

    def without_box(self, pos: Position) -> "Bitableau":
        """Remove the box at pos, which must be the outermost box of its row."""
        rows = [list(r) for r in self.component(pos.side)]
        if not self.has_box(pos):
            raise KeyError(f"no box at {pos!r} in shape {self.shape}")
        if pos.col != len(rows[pos.row - 1]):
            raise ValueError(f"cannot remove {pos!r}: not the outermost box of its row")
        rows[pos.row - 1].pop()
        while rows and not rows[-1]:
            rows.pop()
        return self._replace_component(pos.side, rows)

    def _replace_component(self, side: Side, rows: list[list[int]]) -> "Bitableau":
        new = tuple(tuple(r) for r in rows)
        if side is Side.LEFT:
            return Bitableau(new, self.right)
        return Bitableau(self.left, new)

    # -- truncation and serialization -----------------------------------------

    def truncate(self, s: int) -> "Bitableau":
        """The sub-bitableau of entries <= s (a prefix of every row)."""
        keep = lambda rows: tuple(t for t in (tuple(x for x in row if x <= s) for row in rows) if t)
        return Bitableau(keep(self.left), keep(self.right))

    def render(self) -> str:
        """Human-readable picture, left component mirrored toward the wall."""
        lines = []
        for i in range(max(len(self.left), len(self.right))):
            lrow = self.left[i] if i < len(self.left) else ()
            rrow = self.right[i] if i < len(self.right) else ()
            left_txt = " ".join(str(x) for x in reversed(lrow))
            right_txt = " ".join(str(x) for x in rrow)
            lines.append((left_txt + " | " + right_txt).strip())
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"left": [list(r) for r in self.left], "right": [list(r) for r in self.right]}

    @classmethod
    def from_json(cls, obj: object) -> "Bitableau":
        if not isinstance(obj, dict) or set(obj) != {"left", "right"}:
            raise ValueError(f"bad bitableau object: expected keys left, right, got {obj!r}")
        for key in ("left", "right"):
            rows = obj[key]
            if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
                raise ValueError(f"bad bitableau object: {key!r} must be a list of rows")
        return cls(tuple(tuple(r) for r in obj["left"]), tuple(tuple(r) for r in obj["right"]))


# -- position searches used by the bumping algorithms -------------------------


def available_positions(t: Bitableau, value: int, min_row_number: int = 1) -> list[Position]:
    """Boxes where ``value`` could land when bumped *down* the diagram.

    A box is available for ``value`` when its entry is smaller than ``value``
    and placing ``value`` there keeps rows and columns increasing, i.e. the
    outward neighbor and the box below are both either absent or larger than
    ``value``.  Only boxes with combined row number >= min_row_number are
    returned, sorted by combined row.  ``value`` must not occur in t.
    """
    if value in t.entries():
        raise ValueError(f"value {value} already occurs in the bitableau")
    out = []
    for side in (Side.LEFT, Side.RIGHT):
        rows = t.component(side)
        for i, row in enumerate(rows, start=1):
            for j, x in enumerate(row, start=1):
                if x > value:
                    break
                outward_ok = j == len(row) or row[j] > value
                below_ok = i == len(rows) or len(rows[i]) < j or rows[i][j - 1] > value
                if outward_ok and below_ok:
                    out.append(Position(side, i, j))
    counts = [p.row_number for p in out]
    assert len(counts) == len(set(counts)), f"multiple available positions in one row: {out}"
    out = [p for p in out if p.row_number >= min_row_number]
    return sorted(out, key=lambda p: p.row_number)


def insertable_positions(t: Bitableau, value: int, max_row_number: int | None = None) -> list[Position]:
    """Slots where ``value`` can be placed keeping an increasing filling.

    Two kinds of slot qualify: an occupied box whose entry is larger than
    ``value`` (placing ``value`` displaces that entry), or an append slot --
    the first free box of a row, including the free first box of a new bottom
    row, provided adding a box there keeps the shape a partition.  In both
    kinds the inward neighbor and the box above must be absent or smaller
    than ``value``.  Only slots with combined row number <= max_row_number
    are returned, sorted by combined row.  ``value`` must not occur in t.
    """
    if value in t.entries():
        raise ValueError(f"value {value} already occurs in the bitableau")
    out = []
    for side in (Side.LEFT, Side.RIGHT):
        rows = t.component(side)
        for i, row in enumerate(rows, start=1):
            for j, x in enumerate(row, start=1):
                if x < value:
                    continue
                inward_ok = j == 1 or row[j - 2] < value
                above_ok = i == 1 or rows[i - 2][j - 1] < value
                if inward_ok and above_ok:
                    out.append(Position(side, i, j))
        for i in range(1, len(rows) + 2):
            j = len(rows[i - 1]) + 1 if i <= len(rows) else 1
            if i > 1 and len(rows[i - 2]) < j:
                continue  # adding a box here would break the partition shape
            inward_ok = j == 1 or rows[i - 1][j - 2] < value
            above_ok = i == 1 or rows[i - 2][j - 1] < value
            if inward_ok and above_ok:
                out.append(Position(side, i, j))
    counts = [p.row_number for p in out]
    assert len(counts) == len(set(counts)), f"multiple insertable positions in one row: {out}"
    if max_row_number is not None:
        out = [p for p in out if p.row_number <= max_row_number]
    return sorted(out, key=lambda p: p.row_number)


def first_column_insertables(t: Bitableau, value: int) -> tuple[Position, Position]:
    """The unique insertable slot in each wall-adjacent column.

    For each component: the box holding the smallest column entry larger
    than ``value``, or the append slot below the column when every entry is
    smaller.  Both always exist (the empty component yields its (1,1) slot).
    Returns (left_position, right_position).
    """
    if value in t.entries():
        raise ValueError(f"value {value} already occurs in the bitableau")

    def first_in(side: Side) -> Position:
        rows = t.component(side)
        for i, row in enumerate(rows, start=1):
            if row[0] > value:
                return Position(side, i, 1)
        return Position(side, len(rows) + 1, 1)

    return first_in(Side.LEFT), first_in(Side.RIGHT)


# -- combined coordinates ------------------------------------------------------


def to_combined(shape: Bipartition, pos: Position) -> tuple[int, int]:
    """Combined (row, offset) coordinates of an in-shape box: offsets 1..mu_i
    are the left row (wall-outward), offsets mu_i+1..mu_i+nu_i the right row."""
    p = shape.component(pos.side).part(pos.row)
    if pos.col > p:
        raise ValueError(f"{pos!r} is outside shape {shape}")
    return (pos.row, pos.col) if pos.side is Side.LEFT else (pos.row, shape.mu.part(pos.row) + pos.col)


def from_combined(shape: Bipartition, row: int, offset: int) -> Position:
    """Inverse of :func:`to_combined` for boxes inside ``shape``."""
    mu_i, lam_i = shape.mu.part(row), shape.lam.part(row)
    if row < 1 or offset < 1 or offset > lam_i:
        raise ValueError(f"(row={row}, offset={offset}) is outside shape {shape}")
    if offset <= mu_i:
        return Position(Side.LEFT, row, offset)
    return Position(Side.RIGHT, row, offset - mu_i)


# -- nested shape sequences ----------------------------------------------------


def to_nested_sequence(t: Bitableau) -> tuple[Bipartition, ...]:
    """The chain of truncation shapes (empty, <=1, <=2, ..., <=n) of a
    standard bitableau; consecutive shapes differ by one box."""
    if not t.is_standard:
        raise ValueError("nested sequences are defined for standard bitableaux (entries exactly 1..n)")
    return tuple(t.truncate(s).shape for s in range(t.size + 1))


def from_nested_sequence(seq: tuple[Bipartition, ...]) -> Bitableau:
    """Rebuild the standard bitableau from its chain of truncation shapes.

    Rejects chains that are not nested one box at a time, naming the first
    offending step.
    """
    seq = tuple(seq)
    if not seq or seq[0].size != 0:
        raise ValueError("a nested sequence must start with the empty shape")
    left: list[list[int]] = []
    right: list[list[int]] = []
    for s in range(1, len(seq)):
        prev, cur = seq[s - 1], seq[s]
        grown = []
        for side in (Side.LEFT, Side.RIGHT):
            a, b = prev.component(side), cur.component(side)
            for i in range(1, max(a.length, b.length) + 1):
                if b.part(i) != a.part(i):
                    grown.append((side, i, b.part(i) - a.part(i)))
        if len(grown) != 1 or grown[0][2] != 1:
            raise ValueError(f"step {s}: shape {cur} does not extend {prev} by exactly one box")
        side, i, _ = grown[0]
        rows = left if side is Side.LEFT else right
        while len(rows) < i:
            rows.append([])
        rows[i - 1].append(s)
    return Bitableau(tuple(tuple(r) for r in left), tuple(tuple(r) for r in right))


# -- enumeration ---------------------------------------------------------------


def enumerate_standard_bitableaux(shape: Bipartition) -> tuple[Bitableau, ...]:
    """All standard bitableaux of the given shape.

    Order (the canonical report order): recursion over where the largest
    entry sits, trying left-component corners top to bottom, then right ones.
    """
    return _enumerate(shape.mu.parts, shape.nu.parts)


@cache
def _enumerate(mu: tuple[int, ...], nu: tuple[int, ...]) -> tuple[Bitableau, ...]:
    bp = Bipartition(Partition(mu), Partition(nu))
    if bp.size == 0:
        return (Bitableau(),)
    out = []
    n = bp.size
    for side, row in bp.removable_rows():
        corner = Position(side, row, bp.component(side).part(row))
        smaller = bp.decremented(side, row)
        for t in _enumerate(smaller.mu.parts, smaller.nu.parts):
            out.append(t.with_box(corner, n))
    return tuple(out)
