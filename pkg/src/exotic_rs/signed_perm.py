"""Signed permutations (the hyperoctahedral group) and their embedding into
the symmetric group on 2n letters.

A signed permutation on n letters is written as a word w_1 ... w_n where the
magnitudes |w_k| run over 1..n exactly once and a negative sign marks a
barred letter.  Text form: space-separated signed integers, e.g.
``-3 6 4 -7 2 -5 1`` (ASCII minus = bar).  The empty word is the unique
signed permutation for n = 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class SignedPermutation:
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if any(not isinstance(x, int) for x in letters):
            raise ValueError(f"letters must be integers: {letters!r}")
        if any(x == 0 for x in letters):
            raise ValueError("letter 0 is not allowed; magnitudes run 1..n")
        mags = sorted(abs(x) for x in letters)
        if mags != list(range(1, len(letters) + 1)):
            raise ValueError(f"letter magnitudes must be a permutation of 1..{len(letters)}: {letters!r}")

    @property
    def n(self) -> int:
        return len(self.letters)

    def letter(self, k: int) -> int:
        """The k-th letter, 1-indexed."""
        if not 1 <= k <= self.n:
            raise IndexError(f"letter index {k} out of range 1..{self.n}")
        return self.letters[k - 1]

    def inverse(self) -> "SignedPermutation":
        """If the word sends k to +-a, the inverse sends a to +-k (same bar)."""
        out = [0] * self.n
        for k, x in enumerate(self.letters, start=1):
            out[abs(x) - 1] = k if x > 0 else -k
        return SignedPermutation(tuple(out))

    def to_text(self) -> str:
        return " ".join(str(x) for x in self.letters)

    @classmethod
    def from_text(cls, text: str) -> "SignedPermutation":
        """Parse the space-separated form; errors name the bad token position."""
        tokens = text.split()
        letters = []
        for pos, tok in enumerate(tokens, start=1):
            try:
                x = int(tok)
            except ValueError:
                raise ValueError(f"token {pos}: {tok!r} is not a signed integer") from None
            if x == 0:
                raise ValueError(f"token {pos}: 0 is not a valid letter")
            letters.append(x)
        return cls(tuple(letters))

    def to_json(self) -> list[int]:
        return list(self.letters)

    @classmethod
    def from_json(cls, obj: object) -> "SignedPermutation":
        if not isinstance(obj, list):
            raise ValueError(f"bad signed permutation: expected a list of integers, got {obj!r}")
        return cls(tuple(obj))

    def __str__(self) -> str:
        return self.to_text()


def sort_key(w: SignedPermutation) -> tuple[tuple[int, bool], ...]:
    """Canonical report order: letters compare by (magnitude, barred), so the
    unbarred letter precedes its barred twin; words compare lexicographically."""
    return tuple((abs(x), x < 0) for x in w.letters)


def enumerate_signed_permutations(n: int) -> list[SignedPermutation]:
    """All 2^n * n! signed permutations on n letters, in canonical order."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    words = [
        SignedPermutation(tuple(m * s for m, s in zip(mags, signs)))
        for mags in itertools.permutations(range(1, n + 1))
        for signs in itertools.product((1, -1), repeat=n)
    ]
    return sorted(words, key=sort_key)


def iota_embed(w: SignedPermutation) -> tuple[int, ...]:
    """Embed the signed permutation into the symmetric group on 2n letters.

    The image sigma is determined on 1..n by reading the word backwards:
    for i = 1..n the letter at word position n+1-i with magnitude a gives
    sigma(i) = n+1-a when unbarred and sigma(i) = n+a when barred; the other
    half is forced by the mirror condition sigma(i) + sigma(2n+1-i) = 2n+1.
    The identity word maps to the identity, and the map turns inverses into
    inverses.  Returned as the tuple (sigma(1), ..., sigma(2n)).
    """
    n = w.n
    images = [0] * (2 * n)
    for i in range(1, n + 1):
        x = w.letters[n - i]
        a = abs(x)
        sigma_i = n + 1 - a if x > 0 else n + a
        images[i - 1] = sigma_i
        images[2 * n - i] = 2 * n + 1 - sigma_i
    return tuple(images)


def permutation_inverse(images: tuple[int, ...]) -> tuple[int, ...]:
    """Inverse of a permutation given as a 1-indexed image tuple."""
    out = [0] * len(images)
    for k, v in enumerate(images, start=1):
        out[v - 1] = k
    return tuple(out)


def is_mirror_symmetric(images: tuple[int, ...]) -> bool:
    """Whether sigma(i) + sigma(2n+1-i) = 2n+1 for all i (the image condition
    cutting the embedded copy of the signed permutations out of S_2n)."""
    size = len(images)
    if size % 2 != 0:
        return False
    return all(images[i] + images[size - 1 - i] == size + 1 for i in range(size))


def derive_w_tilde(w: SignedPermutation) -> tuple[SignedPermutation, int]:
    """Drop the last letter and close the gap its magnitude leaves.

    Returns (reduced word, r) where r = |w_n|; every surviving letter keeps
    its bar and magnitudes above r shift down by one.
    """
    if w.n == 0:
        raise ValueError("the empty word has no last letter to remove")
    r = abs(w.letters[-1])

    def shift(x: int) -> int:
        a = abs(x)
        b = a if a < r else a - 1
        return b if x > 0 else -b

    return SignedPermutation(tuple(shift(x) for x in w.letters[:-1])), r
