"""Independent brute-force oracles used only by the tests."""

from itertools import combinations, permutations, product

import sympy

from complete_quadrics.perm import Permutation, from_word, length, lex_min_reduced_word
from complete_quadrics.polynomial import Polynomial


def young_subgroup(parts):
    """All permutations preserving each block of consecutive values."""
    starts = [0]
    for m in parts:
        starts.append(starts[-1] + m)
    for pieces in product(*(permutations(range(1, m + 1)) for m in parts)):
        word = []
        for s, piece in zip(starts, pieces):
            word.extend(s + a for a in piece)
        yield tuple(word)


def min_left_coset_length(word, parts):
    """min over Young-subgroup w of l(w p): relabel values block-wise."""
    best = None
    for w in young_subgroup(parts):
        cand = length(tuple(w[a - 1] for a in word))
        best = cand if best is None else min(best, cand)
    return best


def bruhat_leq_subword(p, q):
    """p <= q iff p is the product of a subword of a reduced word of q."""
    word = lex_min_reduced_word(q)
    n = len(q)
    for r in range(len(word) + 1):
        for idx in combinations(range(len(word)), r):
            if from_word([word[k] for k in idx], n) == p:
                return True
    return False


def pipe_dream_schubert(n):
    """
    Schubert polynomials of all of S_n from reduced pipe dreams: crosses in
    cells (r, c) with r + c <= n, each standing for s_{r+c-1}, read row by
    row top to bottom and right to left within a row.
    """
    cells = [(r, c) for r in range(1, n) for c in range(1, n + 1 - r)]
    polys = {}
    for k in range(len(cells) + 1):
        for chosen in combinations(cells, k):
            ordered = sorted(chosen, key=lambda rc: (rc[0], -rc[1]))
            w = from_word([r + c - 1 for r, c in ordered], n)
            if length(w) != k:
                continue
            exps = [0] * n
            for r, _ in chosen:
                exps[r - 1] += 1
            polys.setdefault(w, {})
            key = tuple(exps)
            polys[w][key] = polys[w].get(key, 0) + 1
    return {w: Polynomial(t) for w, t in polys.items()}


def to_sympy(f: Polynomial, xs):
    return sum((c * sympy.prod([x ** e for x, e in zip(xs, k)]) for k, c in f.items()),
               sympy.Integer(0))


def from_sympy(expr, xs) -> Polynomial:
    expr = sympy.expand(expr)
    if expr == 0:
        return Polynomial()
    poly = sympy.Poly(expr, *xs)
    return Polynomial({k: int(c) for k, c in poly.terms()})


def sympy_divided_difference(i, f: Polynomial, nvars: int) -> Polynomial:
    xs = sympy.symbols(f"x1:{nvars + 1}")
    e = to_sympy(f, xs)
    swapped = e.subs({xs[i - 1]: xs[i], xs[i]: xs[i - 1]}, simultaneous=True)
    q = sympy.cancel((e - swapped) / (xs[i - 1] - xs[i]))
    return from_sympy(q, xs)


def two_cycles(word):
    """Number of 2-cycles of an involution: half its moved points."""
    return sum(1 for k, a in enumerate(word, 1) if a != k) // 2


def perm(text):
    return Permutation.parse(text)
