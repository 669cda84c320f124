"""
Sparse multivariate polynomials with integer coefficients.

Terms live in a dict from exponent tuples to nonzero ints; trailing zero
exponents are stripped so ``x1`` is ``(1,)`` no matter how many variables are
in play.  Values are treated as immutable.

>>> x1, x2 = variable(1), variable(2)
>>> f = 2 * x1**2 + 2 * x1 * x2
>>> str(f)
'2*x1^2 + 2*x1*x2'
>>> str(divided_difference(1, x1**2 * x2))
'x1*x2'
"""

from __future__ import annotations

from typing import Iterable, Mapping

__all__ = ["Polynomial", "variable", "constant", "monomial", "divided_difference"]

Exps = tuple[int, ...]


def _trim(exps: Iterable[int]) -> Exps:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def _pad(exps: Exps, size: int) -> Exps:
    return exps + (0,) * (size - len(exps))


class Polynomial:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        clean: dict[Exps, int] = {}
        for exps, c in (terms or {}).items():
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps!r}")
            key = _trim(exps)
            clean[key] = clean.get(key, 0) + int(c)
        self._terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def _raw(cls, terms: dict[Exps, int]) -> Polynomial:
        # terms must already be trimmed and free of zeros
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @property
    def terms(self) -> dict[Exps, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def nvars(self) -> int:
        return max((len(k) for k in self._terms), default=0)

    def degree(self) -> int:
        return max((sum(k) for k in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(k) for k in self._terms}) <= 1

    def _coerce(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Polynomial()
            return Polynomial._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Exps, int] = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                size = max(len(ka), len(kb))
                key = tuple(a + b for a, b in zip(_pad(ka, size), _pad(kb, size)))
                out[key] = out.get(key, 0) + ca * cb
        return Polynomial._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative power")
        out, base = constant(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def swap(self, i: int) -> Polynomial:
        """Exchange ``x_i`` and ``x_{i+1}``."""
        out = {}
        for k, c in self._terms.items():
            e = list(_pad(k, i + 1))
            e[i - 1], e[i] = e[i], e[i - 1]
            out[_trim(e)] = c
        return Polynomial._raw(out)

    def sorted_terms(self) -> list[tuple[Exps, int]]:
        """Terms in decreasing lexicographic order of exponent vectors."""
        size = self.nvars
        return sorted(self._terms.items(), key=lambda t: _pad(t[0], size), reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, c in self.sorted_terms():
            factors = [f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in enumerate(k, 1) if e]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"exps": list(k), "coef": c} for k, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> Polynomial:
        return cls({tuple(t["exps"]): t["coef"] for t in data})


def constant(c: int) -> Polynomial:
    return Polynomial._raw({(): c} if c else {})


def monomial(exps: Iterable[int], coef: int = 1) -> Polynomial:
    return Polynomial({tuple(exps): coef})


def variable(i: int) -> Polynomial:
    """The variable ``x_i`` (1-based)."""
    if i < 1:
        raise ValueError("variables are numbered from 1")
    return Polynomial._raw({(0,) * (i - 1) + (1,): 1})


def divided_difference(i: int, f: Polynomial) -> Polynomial:
    """
    ``(f - s_i f) / (x_i - x_{i+1})``, done monomial by monomial.

    For ``a = e_i > b = e_{i+1}`` the quotient of ``x_i^a x_{i+1}^b`` is
    ``sum_t x_i^(a-1-t) x_{i+1}^(b+t)`` for ``t < a - b``; the case ``a < b`` is
    the negative of the mirrored sum and ``a == b`` contributes nothing.
    """
    if i < 1:
        raise ValueError(f"index {i} must be at least 1")
    out: dict[Exps, int] = {}
    for k, c in f.items():
        e = list(_pad(k, i + 1))
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        lo, hi, sign = (b, a, c) if a > b else (a, b, -c)
        for t in range(hi - lo):
            e[i - 1], e[i] = hi - 1 - t, lo + t
            key = _trim(e)
            s = out.get(key, 0) + sign
            if s:
                out[key] = s
            else:
                del out[key]
    return Polynomial._raw(out)
