"""Shared hypothesis strategies.

Standard bitableaux are generated by growing a shape one corner at a time,
independently of the insertion algorithm under test; gappy fillings come
from order-preserving relabelings of standard ones.
"""

from __future__ import annotations

import hypothesis.strategies as st

from exotic_rs import Bipartition, Bitableau, Partition, Position, Side, SignedPermutation


@st.composite
def partitions(draw, max_size: int = 8) -> Partition:
    size = draw(st.integers(0, max_size))
    parts = []
    remaining = size
    bound = size
    while remaining > 0:
        p = draw(st.integers(1, min(bound, remaining)))
        parts.append(p)
        bound = p
        remaining -= p
    return Partition(tuple(parts))


@st.composite
def bipartitions(draw, max_size: int = 8) -> Bipartition:
    mu = draw(partitions(max_size))
    nu = draw(partitions(max_size))
    return Bipartition(mu, nu)


@st.composite
def signed_words(draw, max_n: int = 6, min_n: int = 0) -> SignedPermutation:
    n = draw(st.integers(min_n, max_n))
    mags = draw(st.permutations(list(range(1, n + 1))))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPermutation(tuple(m * s for m, s in zip(mags, signs)))


def _addable_positions(t: Bitableau) -> list[Position]:
    out = []
    for side in (Side.LEFT, Side.RIGHT):
        rows = t.component(side)
        for i in range(1, len(rows) + 2):
            length = len(rows[i - 1]) if i <= len(rows) else 0
            if i == 1 or len(rows[i - 2]) > length:
                out.append(Position(side, i, length + 1))
    return out


@st.composite
def standard_bitableaux(draw, max_n: int = 6, min_n: int = 0) -> Bitableau:
    n = draw(st.integers(min_n, max_n))
    t = Bitableau()
    for entry in range(1, n + 1):
        pos = draw(st.sampled_from(_addable_positions(t)))
        t = t.with_box(pos, entry)
    return t


@st.composite
def gappy_bitableaux(draw, max_n: int = 6):
    """(tableau with arbitrary distinct entries, a value not occurring in it).

    The value is suitable for the slot searches, which demand it be absent.
    """
    base = draw(standard_bitableaux(max_n))
    n = base.size
    image = sorted(draw(st.sets(st.integers(1, 3 * n + 3), min_size=n + 1, max_size=n + 1)))
    probe_index = draw(st.integers(0, n))
    probe = image.pop(probe_index)
    relabel = {i + 1: image[i] for i in range(n)}
    remap = lambda rows: tuple(tuple(relabel[x] for x in row) for row in rows)
    return Bitableau(remap(base.left), remap(base.right)), probe
