"""
Schubert polynomials and the restriction classes of closed orbits.

``S_{w0} = x1^(n-1) x2^(n-2) ... x_{n-1}``, and ``S_w = d_i S_{w s_i}``
whenever ``w(i) < w(i+1)``.

>>> from complete_quadrics.perm import Permutation
>>> str(schubert(Permutation((1, 3, 2))).poly)
'x1 + x2'
>>> str(restriction_class((3,)))
'2*x1^2 + 2*x1*x2'
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .muinv import Composition
from .perm import Permutation, compose, from_word, inverse, length, longest
from .polynomial import Polynomial, constant, monomial, variable, divided_difference
from .poset import d_set_mu

__all__ = [
    "SchubertClass", "top_monomial", "schubert", "schubert_from_word",
    "restriction_exponent", "restriction_class", "conjecture_product",
    "conjecture_product_factored", "ConjectureReport", "check_conjecture",
    "ExponentReport", "compare_exponents", "EXPONENT_MODES",
]

EXPONENT_MODES = ("strings", "floor-half")


@dataclass(frozen=True)
class SchubertClass:
    w: Permutation
    poly: Polynomial


def top_monomial(n: int) -> Polynomial:
    return monomial(range(n - 1, 0, -1)) if n > 1 else constant(1)


@lru_cache(maxsize=4096)
def _schubert(word: tuple[int, ...]) -> Polynomial:
    n = len(word)
    for i in range(1, n):
        if word[i - 1] < word[i]:
            up = list(word)
            up[i - 1], up[i] = up[i], up[i - 1]
            return divided_difference(i, _schubert(tuple(up)))
    return top_monomial(n)


def schubert(w: Permutation) -> SchubertClass:
    """``S_w``, climbing to ``w0`` through the first ascent at each step."""
    return SchubertClass(w, _schubert(w.word))


def schubert_from_word(w: Permutation, word: Sequence[int]) -> SchubertClass:
    """
    ``S_w = d_{a_1} ... d_{a_l} S_{w0}`` for a reduced word ``a`` of
    ``w^-1 w0``; ``d_{a_l}`` is applied first.
    """
    n = len(w)
    target = compose(inverse(w), longest(n))
    if len(word) != length(target) or from_word(word, n) != target:
        raise ValueError(f"{tuple(word)} is not a reduced word of {target}")
    poly = top_monomial(n)
    for i in reversed(tuple(word)):
        poly = divided_difference(i, poly)
    return SchubertClass(w, poly)


def restriction_exponent(mu: Composition | Sequence[int], mode: str = "strings") -> int:
    """
    Power of 2 in front of the restriction class: the number of double edges
    ``sum floor(mu_i / 2)`` (``"strings"``), or ``floor(n / 2)`` (``"floor-half"``).
    """
    parts = mu.parts if isinstance(mu, Composition) else tuple(mu)
    if mode == "strings":
        return sum(m // 2 for m in parts)
    if mode == "floor-half":
        return sum(parts) // 2
    raise ValueError(f"exponent mode must be one of {EXPONENT_MODES}, got {mode!r}")


def restriction_class(mu: Composition | Sequence[int], mode: str = "strings") -> Polynomial:
    """``2^D * sum S_{w^-1}`` over ``w`` in ``D_mu``."""
    total = Polynomial()
    for w in sorted(d_set_mu(mu), key=lambda p: p.word):
        total = total + _schubert(inverse(w).word)
    return total * (2 ** restriction_exponent(mu, mode))


def conjecture_product(n: int) -> Polynomial:
    """
    ``prod (x_i + x_j)`` over ``1 <= i <= j <= n - i``.

    >>> str(conjecture_product(3))
    '2*x1^2 + 2*x1*x2'
    """
    out = constant(1)
    for i in range(1, n):
        for j in range(i, n - i + 1):
            out = out * (variable(i) + variable(j))
    return out


def conjecture_product_factored(n: int) -> Polynomial:
    """``2^floor(n/2) prod_{i <= n/2} x_i prod_{i < j < n+1-i} (x_i + x_j)``."""
    out = constant(2 ** (n // 2))
    for i in range(1, n // 2 + 1):
        out = out * variable(i)
    for i in range(1, n):
        for j in range(i + 1, n + 1 - i):
            out = out * (variable(i) + variable(j))
    return out


@dataclass
class ConjectureReport:
    n: int
    restriction: Polynomial
    product: Polynomial
    factored: Polynomial

    @property
    def ok(self) -> bool:
        return self.restriction == self.product == self.factored

    def diff(self) -> Polynomial:
        """``restriction - product``; zero when the identity holds."""
        return self.restriction - self.product


def check_conjecture(n: int) -> ConjectureReport:
    """Compare ``restriction_class((n,))`` with both product forms."""
    return ConjectureReport(n, restriction_class((n,)), conjecture_product(n),
                            conjecture_product_factored(n))


@dataclass
class ExponentReport:
    mu: Composition
    strings_exponent: int
    floor_half_exponent: int
    strings_class: Polynomial
    floor_half_class: Polynomial

    @property
    def agree(self) -> bool:
        return self.strings_exponent == self.floor_half_exponent

    @property
    def flagged(self) -> bool:
        """Set when the two exponents, hence the two classes, differ."""
        return not self.agree


def compare_exponents(mu: Composition | Sequence[int]) -> ExponentReport:
    """Evaluate the restriction class under both exponent conventions."""
    mu = mu if isinstance(mu, Composition) else Composition(tuple(mu))
    base = restriction_class(mu, "strings")
    a = restriction_exponent(mu, "strings")
    b = restriction_exponent(mu, "floor-half")
    other = base * (2 ** (b - a))
    return ExponentReport(mu, a, b, base, other)
