"""
The Richardson-Springer monoid acting on mu-involutions.

The monoid is generated by ``s_1, ..., s_{n-1}`` with ``s_i^2 = s_i`` and the
usual braid relations.  ``s_i`` acts on a mu-involution ``pi`` as follows:

1. ``i + 1`` is left of ``i`` in the word: ``pi`` is unchanged.
2. ``i`` and ``i + 1`` lie in different strings: swap the two values.
3. Both lie in one string ``alpha``:

   a. ``alpha`` (relative order) fixes both: swap the values, which adds the
      2-cycle ``(i, i + 1)`` to the string;
   b. otherwise conjugate ``alpha`` by ``(i, i + 1)``.

Since ``i`` and ``i + 1`` are adjacent integers they are also adjacent in the
string's sorted alphabet, so the conjugation can be done in place: swap the
two values and swap the two positions holding the alphabet slots of ``i`` and
``i + 1``.

>>> from complete_quadrics.muinv import parse_mu_involution
>>> pi = parse_mu_involution("314|6|27|5")
>>> [str(act_simple(i, pi)) for i in range(1, 7)]
['[324|6|17|5]', '[314|6|27|5]', '[431|6|27|5]', '[315|6|27|4]', '[314|6|27|5]', '[314|7|26|5]']
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .muinv import MuInvolution
from .perm import Permutation, lex_min_reduced_word

__all__ = [
    "ActionCase", "act_simple", "action_case", "act_word",
    "RelationReport", "verify_relations",
]


class ActionCase(enum.Enum):
    FIXED = "fixed"            # i + 1 precedes i
    CROSS = "cross"            # different strings, values swapped
    ADD_CYCLE = "add-cycle"    # same string, both fixed
    CONJUGATE = "conjugate"    # same string, otherwise


def _locate(pi: MuInvolution, i: int):
    n = pi.n
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    word = pi.perm.word
    p = word.index(i)
    q = word.index(i + 1)
    return word, p, q


def _string_of(nu: Sequence[int], pos: int) -> int:
    j = 0
    while nu[j + 1] <= pos:
        j += 1
    return j


def action_case(i: int, pi: MuInvolution) -> ActionCase:
    """Which of the four rules ``s_i`` uses on ``pi``."""
    word, p, q = _locate(pi, i)
    if p > q:
        return ActionCase.FIXED
    nu = pi.mu.prefix_sums
    j = _string_of(nu, p)
    if j != _string_of(nu, q):
        return ActionCase.CROSS
    alphabet = sorted(word[nu[j]:nu[j + 1]])
    r = alphabet.index(i)
    # relative string fixes i and i + 1 iff they sit in their own alphabet slots
    if word[nu[j] + r] == i and word[nu[j] + r + 1] == i + 1:
        return ActionCase.ADD_CYCLE
    return ActionCase.CONJUGATE


def act_simple(i: int, pi: MuInvolution) -> MuInvolution:
    """``s_i . pi``."""
    case = action_case(i, pi)
    if case is ActionCase.FIXED:
        return pi
    word = list(pi.perm.word)
    p, q = word.index(i), word.index(i + 1)
    word[p], word[q] = i + 1, i
    if case is ActionCase.CONJUGATE:
        nu = pi.mu.prefix_sums
        j = _string_of(nu, p)
        r = sorted(word[nu[j]:nu[j + 1]]).index(i)
        a, b = nu[j] + r, nu[j] + r + 1
        word[a], word[b] = word[b], word[a]
    return MuInvolution._trusted(pi.mu, tuple(word))


def act_word(w: Iterable[int] | Permutation, pi: MuInvolution) -> MuInvolution:
    """
    Act by a word ``s_{a_1} ... s_{a_l}``, rightmost letter first.

    A :class:`Permutation` is expanded to its lexicographically smallest
    reduced word; the result does not depend on that choice.
    """
    letters = lex_min_reduced_word(w) if isinstance(w, Permutation) else tuple(w)
    if isinstance(w, Permutation) and len(w) != pi.n:
        raise ValueError(f"size mismatch: {len(w)} vs {pi.n}")
    for i in reversed(letters):
        pi = act_simple(i, pi)
    return pi


@dataclass
class RelationReport:
    """Outcome of checking the monoid relations on a sample."""
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: RelationReport) -> RelationReport:
        return RelationReport(self.checked + other.checked, self.violations + other.violations)


def verify_relations(sample: Iterable[MuInvolution]) -> RelationReport:
    """
    Check idempotence, far commutation and the braid relation for every
    applicable generator on every element of ``sample``.
    """
    report = RelationReport()
    for pi in sample:
        n = pi.n
        gens = range(1, n)
        for i in gens:
            once = act_simple(i, pi)
            report.checked += 1
            if act_simple(i, once) != once:
                report.violations.append(f"idempotence s_{i} on {pi}")
            for j in range(i + 2, n):
                report.checked += 1
                if act_simple(i, act_simple(j, pi)) != act_simple(j, once):
                    report.violations.append(f"commutation s_{i} s_{j} on {pi}")
            if i + 1 < n:
                report.checked += 1
                lhs = act_word((i, i + 1, i), pi)
                rhs = act_word((i + 1, i, i + 1), pi)
                if lhs != rhs:
                    report.violations.append(f"braid s_{i} s_{i + 1} on {pi}")
    return report
