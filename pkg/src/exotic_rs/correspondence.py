"""The exotic Robinson-Schensted correspondence.

``insertion`` maps a signed permutation to a pair (T, R) of same-shape
standard bitableaux; ``reverse_bumping`` is its inverse.  ``bump_once``
peels off just the largest entry, producing the pair of the reduced word.
``second_decrement`` classifies, from shape data alone, where the next box
leaves the diagram during a removal cascade; the bumping algorithms are the
ground truth it is checked against.

Insertion, letter by letter (k = 1..n, s = |w_k|):

* unbarred s starts at the unique insertable slot of the first left row;
* barred s starts at whichever of the two wall-adjacent column slots
  (see :func:`~exotic_rs.bitableaux.first_column_insertables`) is lower in
  the combined row order;
* placing s on an occupied slot displaces the larger entry, which is then
  placed at its lowest insertable slot among combined rows <= m+1 where m is
  the combined row it was displaced from; a free slot ends the cascade and
  records k at the same spot in R.

Reverse bumping undoes this: for k = n..1 it removes the box holding k in R,
takes the entry s of T in that box, and walks s back up: from combined row m
it moves to the highest available position among combined rows >= m-1,
displacing the smaller entry found there; when the walk reaches combined row
1 the letter is emitted unbarred, and when no position is available it is
emitted barred.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitableaux import (
    Bitableau,
    Position,
    available_positions,
    first_column_insertables,
    insertable_positions,
)
from .partitions import Bipartition, Partition, Side, max_delta, max_gamma
from .signed_perm import SignedPermutation


@dataclass(frozen=True)
class CorrespondencePair:
    """A pair of same-shape standard bitableaux: T carries the inserted
    values, R records the order in which boxes were created."""

    T: Bitableau = Bitableau()
    R: Bitableau = Bitableau()

    def __post_init__(self) -> None:
        if self.T.shape != self.R.shape:
            raise ValueError(f"pair components must share one shape: {self.T.shape} vs {self.R.shape}")
        for name, t in (("T", self.T), ("R", self.R)):
            if not t.is_standard:
                raise ValueError(f"{name} must be standard (entries exactly 1..{t.size})")

    @property
    def shape(self) -> Bipartition:
        return self.T.shape

    @property
    def size(self) -> int:
        return self.T.size

    def swapped(self) -> "CorrespondencePair":
        return CorrespondencePair(self.R, self.T)

    def to_json(self) -> dict:
        return {"T": self.T.to_json(), "R": self.R.to_json()}

    @classmethod
    def from_json(cls, obj: object) -> "CorrespondencePair":
        if not isinstance(obj, dict) or set(obj) != {"T", "R"}:
            raise ValueError(f"bad pair object: expected keys T, R, got {obj!r}")
        return cls(Bitableau.from_json(obj["T"]), Bitableau.from_json(obj["R"]))


# -- traces --------------------------------------------------------------------


@dataclass(frozen=True)
class InsertionStep:
    """One placement during insertion: ``value`` lands at ``target``,
    displacing ``displaced`` (None when the slot was free)."""

    value: int
    target: Position
    displaced: int | None

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "side": self.target.side.value,
            "row": self.target.row,
            "col": self.target.col,
            "displaced": self.displaced,
        }


@dataclass(frozen=True)
class InsertionRecord:
    k: int
    letter: int
    steps: tuple[InsertionStep, ...]

    def to_json(self) -> dict:
        return {"k": self.k, "letter": self.letter, "steps": [s.to_json() for s in self.steps]}


@dataclass(frozen=True)
class RemovalStep:
    """One hop of a removal cascade.

    ``value`` leaves the box ``source``; ``shape`` is the shape of the
    sub-bitableau of entries < value together with that box (the data the
    transition rules see).  Either ``target`` is the box it lands in, or
    ``emitted`` is the signed letter that leaves the diagram.
    """

    value: int
    source: Position
    shape: Bipartition
    target: Position | None
    emitted: int | None

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "side": self.source.side.value,
            "row": self.source.row,
            "col": self.source.col,
            "shape": self.shape.to_json(),
            "to": None
            if self.target is None
            else {"side": self.target.side.value, "row": self.target.row, "col": self.target.col},
            "emit": self.emitted,
        }


@dataclass(frozen=True)
class RemovalRecord:
    k: int
    letter: int
    steps: tuple[RemovalStep, ...]

    def to_json(self) -> dict:
        return {"k": self.k, "letter": self.letter, "steps": [s.to_json() for s in self.steps]}


# -- insertion -----------------------------------------------------------------


def insertion(w: SignedPermutation) -> CorrespondencePair:
    """The exotic Robinson-Schensted insertion of a signed permutation."""
    return insertion_with_trace(w)[0]


def insertion_with_trace(w: SignedPermutation) -> tuple[CorrespondencePair, tuple[InsertionRecord, ...]]:
    t = Bitableau()
    r = Bitableau()
    records = []
    for k in range(1, w.n + 1):
        letter = w.letter(k)
        s = abs(letter)
        if letter > 0:
            cands = insertable_positions(t, s, max_row_number=1)
            assert len(cands) == 1, f"the first left row must offer exactly one slot, got {cands}"
            target = cands[0]
        else:
            lp, rp = first_column_insertables(t, s)
            target = max((lp, rp), key=lambda p: p.row_number)
        steps = []
        while True:
            if t.has_box(target):
                displaced = t.entry(target)
                t = t.with_replaced(target, s)
                steps.append(InsertionStep(s, target, displaced))
                cands = insertable_positions(t, displaced, max_row_number=target.row_number + 1)
                assert cands, f"displaced entry {displaced} has no slot in rows <= {target.row_number + 1}"
                target = max(cands, key=lambda p: p.row_number)
                s = displaced
            else:
                t = t.with_box(target, s)
                r = r.with_box(target, k)
                steps.append(InsertionStep(s, target, None))
                break
        records.append(InsertionRecord(k, letter, tuple(steps)))
    return CorrespondencePair(t, r), tuple(records)


# -- reverse bumping -----------------------------------------------------------


def reverse_bumping(pair: CorrespondencePair) -> SignedPermutation:
    """The inverse of :func:`insertion`."""
    return reverse_bumping_with_trace(pair)[0]


def reverse_bumping_with_trace(pair: CorrespondencePair) -> tuple[SignedPermutation, tuple[RemovalRecord, ...]]:
    t, rec = pair.T, pair.R
    letters_rev: list[int] = []
    records = []
    for k in range(pair.size, 0, -1):
        t, rec, letter, steps = _remove_largest(t, rec)
        letters_rev.append(letter)
        records.append(RemovalRecord(k, letter, steps))
    word = SignedPermutation(tuple(reversed(letters_rev)))
    return word, tuple(records)


def _remove_largest(
    t: Bitableau, rec: Bitableau
) -> tuple[Bitableau, Bitableau, int, tuple[RemovalStep, ...]]:
    """Remove the box of rec's largest entry and cascade the freed value of t
    back up the diagram; returns the updated tableaux, the emitted letter,
    and the cascade steps."""
    k = rec.size
    pos = rec.position_of(k)
    value = t.entry(pos)
    rec = rec.without_box(pos)
    t = t.without_box(pos)
    source = pos
    steps = []
    while True:
        shape = _truncation_shape(t, value, source)
        if source.row_number == 1:
            steps.append(RemovalStep(value, source, shape, None, value))
            return t, rec, value, tuple(steps)
        avail = available_positions(t, value, min_row_number=source.row_number - 1)
        if not avail:
            steps.append(RemovalStep(value, source, shape, None, -value))
            return t, rec, -value, tuple(steps)
        target = avail[0]
        displaced = t.entry(target)
        t = t.with_replaced(target, value)
        steps.append(RemovalStep(value, source, shape, target, None))
        value, source = displaced, target


def _truncation_shape(t: Bitableau, value: int, box: Position) -> Bipartition:
    """Shape of the entries smaller than ``value`` together with ``box``
    (the box ``value`` is about to leave; ``value`` itself is not in t)."""
    counts = {
        side: [sum(1 for x in row if x < value) for row in t.component(side)]
        for side in (Side.LEFT, Side.RIGHT)
    }
    shape = Bipartition(
        _as_partition(counts[Side.LEFT]),
        _as_partition(counts[Side.RIGHT]),
    )
    return Bipartition(
        shape.mu.incremented(box.row) if box.side is Side.LEFT else shape.mu,
        shape.nu.incremented(box.row) if box.side is Side.RIGHT else shape.nu,
    )


def _as_partition(counts: list[int]) -> Partition:
    while counts and counts[-1] == 0:
        counts.pop()
    return Partition(tuple(counts))


# -- single-step reduction -------------------------------------------------------


def bump_once(pair: CorrespondencePair) -> tuple[CorrespondencePair, int, int]:
    """Remove the largest entry n from the pair.

    Returns (reduced pair on n-1 entries, letter, r): ``letter`` is the
    signed letter the cascade emits (the last letter of the pair's word) and
    r its magnitude.  The reduced pair's value tableau closes the gap r
    leaves by shifting every entry above r down by one; the recording
    tableau simply loses the box of n.
    """
    if pair.size == 0:
        raise ValueError("the empty pair has no largest entry to remove")
    t, rec, letter, _ = _remove_largest(pair.T, pair.R)
    r = abs(letter)
    relabel = lambda rows: tuple(tuple(x - 1 if x > r else x for x in row) for row in rows)
    reduced = CorrespondencePair(Bitableau(relabel(t.left), relabel(t.right)), rec)
    return reduced, letter, r


# -- transition classification ---------------------------------------------------


@dataclass(frozen=True)
class FirstRemoval:
    """Which box starts a cascade: the outermost box of ``row`` on ``side``."""

    side: Side
    row: int


@dataclass(frozen=True)
class Continue:
    """The cascade's next box leaves ``row`` of ``side`` (of the shape left
    after the first removal)."""

    side: Side
    row: int


@dataclass(frozen=True)
class TerminateUnbarred:
    """The cascade ends by emitting the moving value as an unbarred letter."""


@dataclass(frozen=True)
class TerminateBarred:
    """The cascade ends by emitting the moving value as a barred letter."""


TransitionOutcome = Continue | TerminateUnbarred | TerminateBarred


class ClassificationError(ValueError):
    """No rule, or several rules with different outcomes, matched."""

    def __init__(self, bp: Bipartition, removal: FirstRemoval, matches: list):
        self.bp = bp
        self.removal = removal
        self.matches = matches
        what = "no transition rule matches" if not matches else f"rules disagree: {matches}"
        super().__init__(f"{what} for shape {bp}, first removal ({removal.side.value}, row {removal.row})")


def _gt(a: int | None, b: int | None) -> bool:
    return a is not None and b is not None and a > b


def _leq(a: int | None, b: int | None) -> bool:
    return a is not None and b is not None and a <= b


def second_decrement(bp: Bipartition, removal: FirstRemoval):
    """Where a removal cascade goes next, from shape data alone.

    ``bp`` is the shape of the truncation the moving value is leaving (its
    box included) and ``removal`` names that box's row.  The answer is
    TerminateUnbarred / TerminateBarred when the cascade emits the value as
    a letter, or Continue(side, row): the next box to empty out, as a row of
    the shape obtained from ``bp`` by the first removal.

    Each case of the rule table is evaluated literally and must designate a
    decrement that is actually possible on the decremented shape; if no case
    (or several cases with different targets) survives, a
    :class:`ClassificationError` carrying (bp, removal) is raised.
    """
    mu, nu, lam = bp.mu, bp.nu, bp.lam
    m = removal.row
    if not bp.can_decrement(removal.side, m):
        raise ValueError(f"({removal.side.value}, row {m}) is not a removable corner of {bp}")

    cases: list[tuple[str, Continue]] = []
    if removal.side is Side.LEFT:
        if m == 1:
            return TerminateUnbarred()
        if lam.part(m) == 1 and nu.part(m - 1) == 0:
            return TerminateBarred()
        mg_next, md_m = max_gamma(bp, m + 1), max_delta(bp, m)
        nu_prev, nu_m = nu.part(m - 1), nu.part(m)
        if mu.part(m) - 1 > mu.part(m + 1) and (nu_prev == nu_m != 0 or nu_prev == 0):
            cases.append(("left-row-shrinks-again", Continue(Side.LEFT, m)))
        if (
            mu.part(m) - 1 == mu.part(m + 1)
            and nu_prev == nu_m != 0
            and (_gt(mg_next, md_m) or mu.part(m) == 1)
        ):
            cases.append(("hop-to-matching-right-rows", Continue(Side.RIGHT, md_m)))
        if mu.part(m) - 1 == mu.part(m + 1) != 0 and (
            (nu_prev == nu_m != 0 and _leq(mg_next, md_m)) or nu_prev == 0
        ):
            cases.append(("slide-down-equal-left-rows", Continue(Side.LEFT, mg_next)))
        if nu_prev > nu_m:
            cases.append(("climb-to-previous-right-row", Continue(Side.RIGHT, m - 1)))
    else:
        if lam.part(m) == 1:
            return TerminateBarred()
        mg_m, md_m, md_next = max_gamma(bp, m), max_delta(bp, m), max_delta(bp, m + 1)
        nu_m, nu_next = nu.part(m), nu.part(m + 1)
        if mg_m == md_m:
            cases.append(("cross-to-left-row", Continue(Side.LEFT, m)))
        if nu_m - 1 > nu_next and (_gt(mg_m, md_m) or mu.part(m) == 0):
            cases.append(("right-row-shrinks-again", Continue(Side.RIGHT, m)))
        if nu_m - 1 == nu_next != 0 and (_gt(mg_m, md_next) or mu.part(m) == 0):
            cases.append(("slide-down-equal-right-rows", Continue(Side.RIGHT, md_next)))
        if nu_m - 1 == nu_next and (_leq(mg_m, md_next) or nu_m == 1):
            cases.append(("cross-to-matching-left-rows", Continue(Side.LEFT, mg_m)))

    after = bp.decremented(removal.side, m)
    feasible = [(label, out) for label, out in cases if after.can_decrement(out.side, out.row)]
    outcomes = {out for _, out in feasible}
    if len(outcomes) != 1:
        raise ClassificationError(bp, removal, feasible)
    return next(iter(outcomes))


def outcome_of_step(step: RemovalStep):
    """The TransitionOutcome a cascade step actually took (for comparing the
    algorithm against :func:`second_decrement`)."""
    if step.emitted is not None:
        return TerminateUnbarred() if step.emitted > 0 else TerminateBarred()
    assert step.target is not None
    return Continue(step.target.side, step.target.row)
