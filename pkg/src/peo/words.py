"""Binary root words.

A root word lists the edges around the root vertex, counterclockwise from
the root corner: letter 0 for an in-going edge, 1 for an out-going one.

Words are stored as ``(bits, length)`` with letter 1 at the least
significant bit, so dropping the first letter is a right shift and
dropping the last one is a mask.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, List


@dataclass(frozen=True, order=True, slots=True)
class Word:
    length: int
    bits: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative word length")
        if self.bits >> self.length:
            raise ValueError("bits set beyond word length")

    @classmethod
    def from_str(cls, s: str) -> "Word":
        bits = 0
        for i, c in enumerate(s):
            if c == "1":
                bits |= 1 << i
            elif c != "0":
                raise ValueError(f"not a binary word: {s!r}")
        return cls(len(s), bits)

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self.length
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __add__(self, other: "Word") -> "Word":
        return Word(self.length + other.length, self.bits | (other.bits << self.length))

    @property
    def ones(self) -> int:
        return bin(self.bits).count("1")

    @property
    def zeros(self) -> int:
        return self.length - self.ones

    def prepend(self, a: int) -> "Word":
        return Word(self.length + 1, (self.bits << 1) | a)

    def append(self, a: int) -> "Word":
        return Word(self.length + 1, self.bits | (a << self.length))

    def suffix(self, n: int) -> "Word":
        """Last ``n`` letters."""
        if not 0 <= n <= self.length:
            raise ValueError(f"suffix of length {n} of a word of length {self.length}")
        return Word(n, self.bits >> (self.length - n))

    def prefix(self, n: int) -> "Word":
        """First ``n`` letters."""
        if not 0 <= n <= self.length:
            raise ValueError(f"prefix of length {n} of a word of length {self.length}")
        return Word(n, self.bits & ((1 << n) - 1))

    def complement(self) -> "Word":
        return Word(self.length, self.bits ^ ((1 << self.length) - 1))

    def suffixes(self) -> Iterator["Word"]:
        """All suffixes, from ``self`` down to the empty word."""
        for n in range(self.length, -1, -1):
            yield self.suffix(n)


EMPTY = Word(0, 0)


def balance(w: Word) -> int:
    return abs(w.ones - w.zeros)


def is_balanced(w: Word) -> bool:
    return 2 * w.ones == w.length


def is_quasi_balanced(w: Word) -> bool:
    return balance(w) == 1


def is_valid(w: Word, k: int) -> bool:
    """True iff ``w`` is a factor of some balanced word of length ``2k``."""
    return balance(w) <= 2 * k - w.length


def factors(w: Word):
    """Return ``(w_s, w_p, w_c)``: drop first letter, drop last letter, drop both.

    ``w_c`` is ``None`` for words shorter than 2.
    """
    if w.length < 1:
        raise ValueError("the empty word has no suffix/prefix factor")
    ws = w.suffix(w.length - 1)
    wp = w.prefix(w.length - 1)
    wc = ws.prefix(w.length - 2) if w.length >= 2 else None
    return ws, wp, wc


def suffix_s(w: Word) -> Word:
    return factors(w)[0]


def prefix_p(w: Word) -> Word:
    return factors(w)[1]


def central(w: Word) -> Word:
    if w.length < 2:
        raise ValueError("central factor needs a word of length >= 2")
    return Word(w.length - 2, (w.bits >> 1) & ((1 << (w.length - 2)) - 1))


def balanced_extension(w: Word) -> Word:
    """The unique balanced word ``a + w``; ``w`` must be quasi-balanced."""
    if balance(w) != 1:
        raise ValueError(f"{w!s} is not quasi-balanced")
    a = 1 if w.zeros > w.ones else 0
    return w.prepend(a)


def words_of_length(n: int) -> Iterator[Word]:
    for bits in range(1 << n):
        yield Word(n, bits)


def enumerate_words(len_max: int, predicate: str = "balanced", k: int | None = None) -> List[Word]:
    """Words of length <= ``len_max`` satisfying ``predicate``.

    ``predicate`` is ``"balanced"``, ``"quasi-balanced"``, ``"valid"`` (needs
    ``k``) or ``"all"``.  Order is by length, then by the integer ``bits``.
    """
    if predicate == "balanced":
        keep = is_balanced
    elif predicate == "quasi-balanced":
        keep = is_quasi_balanced
    elif predicate == "valid":
        if k is None:
            raise ValueError("predicate 'valid' needs k")
        keep = lambda w: is_valid(w, k)  # noqa: E731
    elif predicate == "all":
        keep = lambda w: True  # noqa: E731
    else:
        raise ValueError(f"unknown predicate {predicate!r}")
    return [w for n in range(len_max + 1) for w in words_of_length(n) if keep(w)]


def ek(k: int) -> int:
    """Number of series in the subset system for parameter ``k``."""
    return comb(2 * k + 2, k + 1) - 1 + sum(comb(2 * i, i) for i in range(1, k))
