"""
Compositions and mu-involutions.

A composition ``mu = (mu_1, ..., mu_k)`` of ``n`` cuts a one-line word into
``k`` consecutive strings.  The word is a *mu-involution* when every string,
read as a permutation of its own alphabet (sorted increasingly), is an
involution.  The text form puts bars between strings::

    >>> pi = parse_mu_involution("26|8351|7|94")
    >>> pi.mu.parts
    (2, 4, 1, 2)
    >>> str(string_to_relative((8, 3, 5, 1)))
    '4231'

For ``n > 9`` letters inside a string are separated by commas.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .perm import (
    Permutation, all_permutations, coset_decompose, excedance, inverse,
    involution_rank, is_involution, length,
)

__all__ = [
    "Composition", "MuInvolution", "ValidationError", "bar_string",
    "compositions", "validate", "string_to_relative", "parse_mu_involution",
    "identity_mu", "top_mu", "rank_mu", "rank_mu_bruteforce",
    "involution_count", "count_mu_involutions", "mu_involutions",
    "two_cycle_count",
]


class ValidationError(ValueError):
    """A word that is not a mu-involution for the given composition."""

    def __init__(self, message: str, string_index: int | None = None):
        super().__init__(message)
        self.string_index = string_index


@dataclass(frozen=True, slots=True)
class Composition:
    """An ordered tuple of positive parts."""
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(m) for m in self.parts)
        if not parts or any(m < 1 for m in parts):
            raise ValueError(f"composition needs positive parts, got {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Composition:
        """``"3,1"`` or ``"(3, 1)"``."""
        text = text.strip().strip("()[]")
        return cls(tuple(int(a) for a in text.split(",") if a.strip()))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def prefix_sums(self) -> tuple[int, ...]:
        """``(nu_0, nu_1, ..., nu_k)`` with ``nu_0 = 0``."""
        out = [0]
        for m in self.parts:
            out.append(out[-1] + m)
        return tuple(out)

    def subset(self) -> frozenset[int]:
        """
        The associated subset ``{nu_1, ..., nu_{k-1}}`` of ``[n-1]``.

        >>> sorted(Composition((2, 4, 1, 2)).subset())
        [2, 6, 7]
        """
        return frozenset(self.prefix_sums[1:-1])

    @classmethod
    def from_subset(cls, n: int, subset) -> Composition:
        inner = sorted(set(subset))
        if any(not 1 <= c < n for c in inner):
            raise ValueError(f"bad subset {subset!r} of [{n - 1}]")
        cuts = inner + [n]
        prev, parts = 0, []
        for c in cuts:
            parts.append(c - prev)
            prev = c
        return cls(tuple(parts))

    def position_blocks(self) -> list[range]:
        """0-based position ranges of the strings."""
        nu = self.prefix_sums
        return [range(nu[j], nu[j + 1]) for j in range(self.k)]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def compositions(n: int) -> Iterator[Composition]:
    """All ``2^(n-1)`` compositions of ``n``, in a fixed order."""
    if n < 1:
        return
    for bits in product((0, 1), repeat=n - 1):
        yield Composition.from_subset(n, [i + 1 for i, b in enumerate(bits) if b])


def string_to_relative(values: Sequence[int]) -> Permutation:
    """
    Standardise a string of distinct values to a permutation of ``1..m``.

    >>> str(string_to_relative((5, 2, 6, 4)))
    '3142'
    """
    values = tuple(values)
    if len(set(values)) != len(values):
        raise ValueError(f"string has repeated values: {values!r}")
    rank = {a: r for r, a in enumerate(sorted(values), 1)}
    return Permutation._trusted(tuple(rank[a] for a in values))


def _relative_word(values: Sequence[int]) -> tuple[int, ...]:
    rank = {a: r for r, a in enumerate(sorted(values), 1)}
    return tuple(rank[a] for a in values)


@dataclass(frozen=True, slots=True)
class MuInvolution:
    """A permutation together with the composition that cuts it into strings."""
    mu: Composition
    perm: Permutation

    def __post_init__(self):
        if self.mu.n != len(self.perm):
            raise ValueError(f"composition {self.mu} does not sum to {len(self.perm)}")
        for j, alpha in enumerate(self.strings):
            if not is_involution(_relative_word(alpha)):
                raise ValidationError(
                    f"string {j + 1} ({_fmt_string(alpha, len(self.perm))}) "
                    "is not an involution in relative order", j + 1)

    @classmethod
    def _trusted(cls, mu: Composition, word: tuple[int, ...]) -> MuInvolution:
        obj = object.__new__(cls)
        object.__setattr__(obj, "mu", mu)
        object.__setattr__(obj, "perm", Permutation._trusted(word))
        return obj

    @property
    def n(self) -> int:
        return self.mu.n

    @property
    def word(self) -> tuple[int, ...]:
        return self.perm.word

    @property
    def strings(self) -> list[tuple[int, ...]]:
        w = self.perm.word
        return [w[b.start:b.stop] for b in self.mu.position_blocks()]

    def relative_strings(self) -> list[Permutation]:
        return [string_to_relative(a) for a in self.strings]

    def __lt__(self, other: MuInvolution) -> bool:
        return (self.mu.parts, self.perm.word) < (other.mu.parts, other.perm.word)

    def __str__(self) -> str:
        n = self.n
        return "[" + "|".join(_fmt_string(a, n) for a in self.strings) + "]"

    def __repr__(self) -> str:
        return f"MuInvolution({str(self)!r})"

    def to_json(self) -> dict:
        return {"mu": list(self.mu.parts), "word": list(self.perm.word)}

    @classmethod
    def from_json(cls, data: dict | str) -> MuInvolution:
        if isinstance(data, str):
            data = json.loads(data)
        return validate(Permutation(tuple(data["word"])), Composition(tuple(data["mu"])))


def _fmt_string(alpha: Sequence[int], n: int) -> str:
    sep = "" if n <= 9 else ","
    return sep.join(map(str, alpha))


def bar_string(perm: Permutation | Sequence[int], mu: Composition | Sequence[int]) -> str:
    """
    Any permutation cut by ``mu``, without validating the strings.

    >>> bar_string((6, 3, 5, 4, 2, 1), (4, 2))
    '[6354|21]'
    """
    parts = mu.parts if isinstance(mu, Composition) else tuple(mu)
    word = perm.word if isinstance(perm, Permutation) else tuple(perm)
    out, start = [], 0
    for m in parts:
        out.append(_fmt_string(word[start:start + m], len(word)))
        start += m
    return "[" + "|".join(out) + "]"


def validate(perm: Permutation, mu: Composition | Sequence[int]) -> MuInvolution:
    """Check that ``perm`` is a mu-involution; raises :class:`ValidationError`."""
    if not isinstance(mu, Composition):
        mu = Composition(tuple(mu))
    return MuInvolution(mu, perm)


def parse_mu_involution(text: str) -> MuInvolution:
    """
    Parse the bar form, inferring ``mu`` from the bars.

    >>> str(parse_mu_involution("[314|6|27|5]"))
    '[314|6|27|5]'
    """
    body = text.strip().strip("[]").strip()
    chunks = body.split("|")
    if any("," in c for c in chunks):
        strings = [[int(a) for a in c.split(",") if a.strip()] for c in chunks]
    else:
        strings = [[int(a) for a in c.strip()] for c in chunks]
    if any(not s for s in strings):
        raise ValueError(f"empty string in {text!r}")
    mu = Composition(tuple(len(s) for s in strings))
    word = tuple(a for s in strings for a in s)
    return validate(Permutation(word), mu)


def identity_mu(mu: Composition | Sequence[int]) -> MuInvolution:
    """The minimal element ``[1 2 ... n]`` cut by ``mu``."""
    mu = mu if isinstance(mu, Composition) else Composition(tuple(mu))
    return MuInvolution._trusted(mu, tuple(range(1, mu.n + 1)))


def top_mu(mu: Composition | Sequence[int]) -> MuInvolution:
    """
    The maximal element: string ``i`` holds ``{n - nu_i + 1 .. n - nu_{i-1}}``
    in decreasing order.

    >>> str(top_mu((4, 2)))
    '[6543|21]'
    """
    mu = mu if isinstance(mu, Composition) else Composition(tuple(mu))
    return MuInvolution._trusted(mu, tuple(range(mu.n, 0, -1)))


def two_cycle_count(pi: MuInvolution) -> int:
    """Total number of 2-cycles over the relative strings of ``pi``."""
    return sum(excedance(_relative_word(a)) for a in pi.strings)


def rank_mu(pi: MuInvolution) -> int:
    """
    Rank in the reverse weak order on ``I_mu``.

    The first term is the fewest inversions reachable by reordering entries
    inside each string, i.e. ``min l(pi w)`` over the Young subgroup acting on
    positions; it is computed as the minimal coset representative of
    ``pi^-1``.  The second term adds the involution rank of every relative
    string.

    >>> rank_mu(parse_mu_involution("432|1")), rank_mu(parse_mu_involution("134|2"))
    (5, 2)
    """
    _, v = coset_decompose(inverse(pi.perm), pi.mu.parts)
    return length(v) + sum(involution_rank(_relative_word(a)) for a in pi.strings)


def rank_mu_bruteforce(pi: MuInvolution, side: str = "right") -> int:
    """
    Same as :func:`rank_mu` but minimising over the whole Young subgroup.

    ``side="right"`` reorders positions inside strings (``pi w``);
    ``side="left"`` relabels values inside value blocks (``w pi``).
    """
    parts = pi.mu.parts
    nu = pi.mu.prefix_sums
    word = pi.perm.word
    best = None
    for pieces in product(*(all_permutations(m) for m in parts)):
        # w sends nu_j + a to nu_j + piece_j(a)
        w = [0] * len(word)
        for j, piece in enumerate(pieces):
            for a, b in enumerate(piece.word, 1):
                w[nu[j] + a - 1] = nu[j] + b
        if side == "right":
            cand = length(tuple(word[b - 1] for b in w))
        elif side == "left":
            cand = length(tuple(w[a - 1] for a in word))
        else:
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        best = cand if best is None else min(best, cand)
    return best + sum(involution_rank(_relative_word(a)) for a in pi.strings)


@lru_cache(maxsize=None)
def involution_count(m: int) -> int:
    """Number of involutions in ``S_m``."""
    if m < 2:
        return 1
    return involution_count(m - 1) + (m - 1) * involution_count(m - 2)


def count_mu_involutions(mu: Composition | Sequence[int]) -> int:
    """
    ``|I_mu|``: a multinomial for distributing values over strings, times the
    number of involutions of each string length.

    >>> count_mu_involutions((3, 1)), count_mu_involutions((5,))
    (16, 26)
    """
    parts = mu.parts if isinstance(mu, Composition) else tuple(mu)
    total, left = 1, sum(parts)
    for m in parts:
        total *= math.comb(left, m) * involution_count(m)
        left -= m
    return total


def mu_involutions(mu: Composition | Sequence[int]) -> Iterator[MuInvolution]:
    """Brute-force enumeration of ``I_mu`` by filtering ``S_n``."""
    mu = mu if isinstance(mu, Composition) else Composition(tuple(mu))
    blocks = mu.position_blocks()
    for p in all_permutations(mu.n):
        w = p.word
        if all(is_involution(_relative_word(w[b.start:b.stop])) for b in blocks):
            yield MuInvolution._trusted(mu, w)
