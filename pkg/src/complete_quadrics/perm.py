"""
Permutations of ``{1, ..., n}`` in one-line notation.

A :class:`Permutation` stores its one-line word with 1-based values, so
``Permutation((3, 4, 2, 1))`` sends 1 to 3, 2 to 4, and so on.  Products are
composed right to left: ``compose(p, q)(k) == p(q(k))``.  The simple
transposition ``s_i`` swaps ``i`` and ``i + 1``; multiplying by it on the left
swaps the *values* ``i, i + 1`` in the word, on the right it swaps the
*positions* ``i, i + 1``.

>>> p = Permutation.parse("3421")
>>> length(p), excedance(p)
(5, 2)
>>> str(compose(Permutation((2, 1, 3)), Permutation((1, 3, 2))))
'231'
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _permutations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "ReducedWord",
    "identity", "longest", "simple", "from_word", "all_permutations",
    "compose", "inverse", "length", "excedance", "is_involution",
    "involution_rank", "left_descents", "right_descents",
    "reduced_words", "count_reduced_words", "lex_min_reduced_word",
    "in_young_subgroup", "coset_decompose", "bruhat_leq",
]

# a sequence of generator indices i (each standing for s_i), read as the
# product s_{a_1} s_{a_2} ... s_{a_l}
ReducedWord = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of ``{1..n}``; ``word[k]`` is the image of ``k + 1``."""
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(a) for a in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {self.word!r}")
        object.__setattr__(self, "word", word)

    @classmethod
    def _trusted(cls, word: tuple[int, ...]) -> Permutation:
        # skips validation; only for words built by this package
        obj = object.__new__(cls)
        object.__setattr__(obj, "word", word)
        return obj

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """
        Read ``"3421"``, ``"[3421]"`` or ``"10,3,4,2,1,5,6,7,8,9"``.

        >>> Permutation.parse("[231]").word
        (2, 3, 1)
        """
        text = text.strip().strip("[]").strip()
        if "," in text:
            return cls(tuple(int(a) for a in text.split(",")))
        if not text:
            return cls(())
        return cls(tuple(int(a) for a in text))

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __call__(self, k: int) -> int:
        return self.word[k - 1]

    def __lt__(self, other: Permutation) -> bool:
        return self.word < other.word

    def __str__(self) -> str:
        if len(self.word) <= 9:
            return "".join(map(str, self.word))
        return ",".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    def inverse(self) -> Permutation:
        return inverse(self)


def identity(n: int) -> Permutation:
    return Permutation._trusted(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    """The longest element ``[n, n-1, ..., 1]``."""
    return Permutation._trusted(tuple(range(n, 0, -1)))


def simple(i: int, n: int) -> Permutation:
    """The simple transposition ``s_i`` in ``S_n``."""
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    word = list(range(1, n + 1))
    word[i - 1], word[i] = word[i], word[i - 1]
    return Permutation._trusted(tuple(word))


def from_word(letters: Iterable[int], n: int) -> Permutation:
    """
    The product ``s_{a_1} s_{a_2} ... s_{a_l}``.

    Built by right multiplication, i.e. by swapping positions, starting from
    the identity.

    >>> str(from_word((1, 2, 1, 3, 2), 4))
    '3421'
    """
    word = list(range(1, n + 1))
    for i in letters:
        if not 1 <= i < n:
            raise ValueError(f"generator index {i} out of range 1..{n - 1}")
        word[i - 1], word[i] = word[i], word[i - 1]
    return Permutation._trusted(tuple(word))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of ``S_n`` in lexicographic order of the one-line word."""
    for word in _permutations(range(1, n + 1)):
        yield Permutation._trusted(word)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product ``p q``, i.e. ``k -> p(q(k))``."""
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    pw = p.word
    return Permutation._trusted(tuple(pw[b - 1] for b in q.word))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for k, a in enumerate(p.word, 1):
        inv[a - 1] = k
    return Permutation._trusted(tuple(inv))


def length(p: Permutation | Sequence[int]) -> int:
    """Number of inversions ``i < j`` with ``p(i) > p(j)``."""
    word = p.word if isinstance(p, Permutation) else tuple(p)
    n = len(word)
    return sum(1 for a in range(n) for b in range(a + 1, n) if word[a] > word[b])


def excedance(p: Permutation | Sequence[int]) -> int:
    """Number of ``i`` with ``p(i) > i``."""
    word = p.word if isinstance(p, Permutation) else tuple(p)
    return sum(1 for k, a in enumerate(word, 1) if a > k)


def is_involution(p: Permutation | Sequence[int]) -> bool:
    word = p.word if isinstance(p, Permutation) else tuple(p)
    return all(word[a - 1] == k for k, a in enumerate(word, 1))


def involution_rank(p: Permutation | Sequence[int]) -> int:
    """
    Rank of an involution in the reverse weak order on involutions,
    ``(length + excedance) / 2``.

    >>> involution_rank(Permutation((5, 4, 3, 2, 1)))
    6
    """
    if not is_involution(p):
        raise ValueError(f"not an involution: {p}")
    total = length(p) + excedance(p)
    assert total % 2 == 0
    return total // 2


def left_descents(p: Permutation) -> list[int]:
    """``i`` such that ``l(s_i p) < l(p)``: ``i + 1`` precedes ``i`` in the word."""
    pos = inverse(p).word
    return [i for i in range(1, len(p)) if pos[i - 1] > pos[i]]


def right_descents(p: Permutation) -> list[int]:
    """``i`` such that ``l(p s_i) < l(p)``: ``p(i) > p(i + 1)``."""
    w = p.word
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def reduced_words(p: Permutation) -> set[ReducedWord]:
    """
    All reduced words of ``p``, by recursion on right descents.

    >>> sorted(reduced_words(Permutation((3, 2, 1))))
    [(1, 2, 1), (2, 1, 2)]
    """
    return set(_reduced_words(p.word))


def _reduced_words(word: tuple[int, ...]) -> Iterator[ReducedWord]:
    descents = [i for i in range(1, len(word)) if word[i - 1] > word[i]]
    if not descents:
        yield ()
        return
    for i in descents:
        shorter = list(word)
        shorter[i - 1], shorter[i] = shorter[i], shorter[i - 1]
        for rest in _reduced_words(tuple(shorter)):
            yield rest + (i,)


def count_reduced_words(p: Permutation) -> int:
    """Number of reduced words, memoised on the one-line word."""
    return _count_reduced(p.word)


@lru_cache(maxsize=1 << 16)
def _count_reduced(word: tuple[int, ...]) -> int:
    total = 0
    for i in range(1, len(word)):
        if word[i - 1] > word[i]:
            shorter = list(word)
            shorter[i - 1], shorter[i] = shorter[i], shorter[i - 1]
            total += _count_reduced(tuple(shorter))
    return total or 1


def lex_min_reduced_word(p: Permutation) -> ReducedWord:
    """
    The lexicographically smallest reduced word.

    Any left descent can start a reduced word, so taking the smallest one at
    every step is optimal.

    >>> lex_min_reduced_word(Permutation((3, 4, 2, 1)))
    (1, 2, 1, 3, 2)
    """
    word = list(p.word)
    pos = [0] * len(word)
    for k, a in enumerate(word):
        pos[a - 1] = k
    letters = []
    while True:
        for i in range(1, len(word)):
            if pos[i - 1] > pos[i]:
                break
        else:
            return tuple(letters)
        letters.append(i)
        # strip s_i from the left: swap values i and i + 1
        a, b = pos[i - 1], pos[i]
        word[a], word[b] = i + 1, i
        pos[i - 1], pos[i] = b, a


def _blocks(parts: Sequence[int]) -> list[int]:
    # block index of each value 1..n
    out = []
    for b, m in enumerate(parts):
        out.extend([b] * m)
    return out


def in_young_subgroup(p: Permutation, parts: Sequence[int]) -> bool:
    """Whether ``p`` maps each block ``{nu_{j-1}+1 .. nu_j}`` to itself."""
    block = _blocks(parts)
    if len(block) != len(p):
        raise ValueError("composition does not match permutation size")
    return all(block[k] == block[a - 1] for k, a in enumerate(p.word))


def coset_decompose(p: Permutation, parts: Sequence[int]) -> tuple[Permutation, Permutation]:
    """
    Split ``p = u v`` with ``u`` in the Young subgroup of ``parts`` and ``v``
    the minimal-length element of the right coset of ``p``.

    ``v`` is obtained by rewriting, for each value block, the values found at
    that block's positions in increasing order.

    >>> u, v = coset_decompose(Permutation((4, 3, 2, 1)), (3, 1))
    >>> str(u), str(v), length(v)
    ('3214', '4123', 3)
    """
    block = _blocks(parts)
    n = len(p)
    if len(block) != n:
        raise ValueError("composition does not match permutation size")
    starts = [0]
    for m in parts:
        starts.append(starts[-1] + m)
    nxt = [s + 1 for s in starts[:-1]]  # next value to hand out per block
    v = [0] * n
    for k, a in enumerate(p.word):
        b = block[a - 1]
        v[k] = nxt[b]
        nxt[b] += 1
    v_perm = Permutation._trusted(tuple(v))
    u = compose(p, inverse(v_perm))
    return u, v_perm


def bruhat_leq(p: Permutation, q: Permutation) -> bool:
    """
    Bruhat order by the rank-matrix criterion: ``p <= q`` iff for all
    ``i, j``, ``#{a <= i : p(a) >= j} <= #{a <= i : q(a) >= j}``.
    """
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    n = len(p)
    cp = [0] * (n + 2)
    cq = [0] * (n + 2)
    for a, b in zip(p.word, q.word):
        # cp[j] counts entries >= j among the first i
        for j in range(1, a + 1):
            cp[j] += 1
        for j in range(1, b + 1):
            cq[j] += 1
        if any(cp[j] > cq[j] for j in range(1, n + 1)):
            return False
    return True
