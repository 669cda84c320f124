"""
The reverse weak order on ``I_mu`` and the sets attached to it.

The Hasse diagram is the closure of the minimal element ``e_mu`` under the
monoid generators.  Each covering edge remembers its generator label and
whether it is *double*, meaning the step added a 2-cycle inside one string.

>>> P = build_poset((3, 1))
>>> len(P.nodes), P.height, str(P.top)
(16, 5, '[432|1]')
>>> maximal_chains(P)
11
>>> sorted(str(w) for w in w_set(P.top, P).elements)
['3421', '4231']
"""

from __future__ import annotations

import enum
import json
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from .monoid import ActionCase, act_simple, act_word, action_case
from .muinv import (
    Composition, MuInvolution, bar_string, count_mu_involutions, identity_mu, rank_mu,
    top_mu, two_cycle_count, validate,
)
from .perm import Permutation, all_permutations, length

__all__ = [
    "ResourceBoundError", "Multiplicity", "CoveringEdge", "WeakOrderPoset",
    "WSet", "build_poset", "classify_edge", "double_edge_count",
    "path_double_counts", "chain_lengths", "w_sets", "w_set", "orbit_w_set",
    "w_set_bruteforce", "d_set", "d_set_filter", "d_set_recursive",
    "d_set_mu", "maximal_chains", "TopWSetReport", "verify_top_wset",
    "from_cycles", "corner_word", "check_corner_words",
    "check_outer_cycle_covers", "to_dot", "to_json", "poset_from_json",
    "DEFAULT_MAX_N", "DEFAULT_MAX_CHAINS",
]

DEFAULT_MAX_N = 10
DEFAULT_MAX_CHAINS = 100_000


class ResourceBoundError(RuntimeError):
    """A request would exceed a configured size bound."""

    def __init__(self, message: str, estimate: int | None = None):
        super().__init__(message)
        self.estimate = estimate


class Multiplicity(enum.Enum):
    SINGLE = "single"
    DOUBLE = "double"


@dataclass(frozen=True)
class CoveringEdge:
    source: str
    target: str
    label: int
    multiplicity: Multiplicity


@dataclass
class WeakOrderPoset:
    """Graded Hasse diagram on ``I_mu``; node ids are bar strings."""
    mu: Composition
    nodes: dict[str, MuInvolution]
    rank: dict[str, int]
    edges: list[CoveringEdge]
    bottom: MuInvolution
    top: MuInvolution
    up: dict[str, list[CoveringEdge]] = field(default_factory=dict, repr=False)
    down: dict[str, list[CoveringEdge]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.up and not self.down:
            self.up = {k: [] for k in self.nodes}
            self.down = {k: [] for k in self.nodes}
            for e in self.edges:
                self.up[e.source].append(e)
                self.down[e.target].append(e)

    @property
    def height(self) -> int:
        return self.rank[str(self.top)]

    def by_rank(self) -> list[list[str]]:
        levels: list[list[str]] = [[] for _ in range(self.height + 1)]
        for key in self.nodes:
            levels[self.rank[key]].append(key)
        for level in levels:
            level.sort(key=lambda k: self.nodes[k].perm.word)
        return levels

    def __contains__(self, pi: MuInvolution) -> bool:
        return str(pi) in self.nodes


def _as_composition(mu) -> Composition:
    return mu if isinstance(mu, Composition) else Composition(tuple(mu))


def build_poset(mu: Composition | Sequence[int], max_n: int = DEFAULT_MAX_N) -> WeakOrderPoset:
    """Breadth-first closure of ``e_mu`` under ``s_1, ..., s_{n-1}``."""
    mu = _as_composition(mu)
    n = mu.n
    if n > max_n:
        estimate = count_mu_involutions(mu)
        raise ResourceBoundError(
            f"n = {n} exceeds the bound {max_n} (poset would have {estimate} nodes)",
            estimate)
    bottom = identity_mu(mu)
    nodes = {str(bottom): bottom}
    edges: list[CoveringEdge] = []
    frontier = [bottom]
    while frontier:
        nxt = []
        for pi in frontier:
            src = str(pi)
            for i in range(1, n):
                case = action_case(i, pi)
                if case is ActionCase.FIXED:
                    continue
                tgt = act_simple(i, pi)
                key = str(tgt)
                if key not in nodes:
                    nodes[key] = tgt
                    nxt.append(tgt)
                mult = Multiplicity.DOUBLE if case is ActionCase.ADD_CYCLE else Multiplicity.SINGLE
                edges.append(CoveringEdge(src, key, i, mult))
        frontier = nxt
    rank = {k: rank_mu(pi) for k, pi in nodes.items()}
    top = top_mu(mu)
    edges.sort(key=lambda e: (rank[e.source], nodes[e.source].perm.word, e.label))
    return WeakOrderPoset(mu, nodes, rank, edges, bottom, top)


def classify_edge(source: MuInvolution, i: int) -> Multiplicity:
    """Multiplicity of the cover ``source -> s_i . source``."""
    case = action_case(i, source)
    if case is ActionCase.FIXED:
        raise ValueError(f"s_{i} fixes {source}; not a covering edge")
    return Multiplicity.DOUBLE if case is ActionCase.ADD_CYCLE else Multiplicity.SINGLE


def double_edge_count(pi: MuInvolution) -> int:
    """Number of double edges on any chain from ``e_mu`` to ``pi``."""
    return two_cycle_count(pi)


def path_double_counts(poset: WeakOrderPoset) -> dict[str, set[int]]:
    """For every node, the set of double-edge counts over all chains from the bottom."""
    seen: dict[str, set[int]] = {str(poset.bottom): {0}}
    for level in poset.by_rank()[1:]:
        for key in level:
            acc = set()
            for e in poset.down[key]:
                bump = e.multiplicity is Multiplicity.DOUBLE
                acc.update(c + bump for c in seen[e.source])
            seen[key] = acc
    return seen


def chain_lengths(poset: WeakOrderPoset) -> set[int]:
    """Lengths of all chains from bottom to top, following edges only."""
    lengths: dict[str, set[int]] = defaultdict(set)
    lengths[str(poset.bottom)] = {0}
    # edges need not respect the stored rank if the rank formula were wrong,
    # so walk in topological order instead of by rank
    indeg = {k: len(poset.down[k]) for k in poset.nodes}
    ready = [k for k, d in indeg.items() if d == 0]
    while ready:
        key = ready.pop()
        for e in poset.up[key]:
            lengths[e.target].update(x + 1 for x in lengths[key])
            indeg[e.target] -= 1
            if indeg[e.target] == 0:
                ready.append(e.target)
    return lengths[str(poset.top)]


@dataclass(frozen=True)
class WSet:
    pi: MuInvolution
    elements: frozenset[Permutation]

    def sorted(self) -> list[Permutation]:
        return sorted(self.elements, key=lambda w: w.word)


def w_sets(poset: WeakOrderPoset, upto_rank: int | None = None,
           keep: bool = True) -> dict[str, frozenset[tuple[int, ...]]]:
    """
    W-sets of all nodes up to ``upto_rank``, by dynamic programming in rank
    order: ``W(pi)`` collects ``s_i w`` over covers ``pi' --s_i--> pi`` and
    ``w`` in ``W(pi')`` with ``l(s_i w) = l(w) + 1``.

    With ``keep=False`` only the last computed rank is returned; earlier
    ranks are dropped as soon as they are no longer needed.
    """
    levels = poset.by_rank()
    if upto_rank is None:
        upto_rank = poset.height
    n = poset.mu.n
    out: dict[str, frozenset[tuple[int, ...]]] = {
        str(poset.bottom): frozenset({tuple(range(1, n + 1))})}
    prev = dict(out)
    for r in range(1, upto_rank + 1):
        cur = {}
        for key in levels[r]:
            acc = set()
            for e in poset.down[key]:
                i = e.label
                for w in prev[e.source]:
                    a, b = w.index(i), w.index(i + 1)
                    if a < b:
                        new = list(w)
                        new[a], new[b] = i + 1, i
                        acc.add(tuple(new))
            cur[key] = frozenset(acc)
        if keep:
            out.update(cur)
        else:
            out = cur
        prev = cur
    return out


def w_set(pi: MuInvolution, poset: WeakOrderPoset) -> WSet:
    """``W(pi)``: minimal-length ``w`` with ``w . e_mu = pi``."""
    key = str(pi)
    if key not in poset.nodes:
        raise KeyError(f"{pi} is not in the poset on {poset.mu}")
    table = w_sets(poset, poset.rank[key], keep=False)
    return WSet(pi, frozenset(Permutation._trusted(w) for w in table[key]))


def orbit_w_set(pi: MuInvolution, poset: WeakOrderPoset) -> WSet:
    """The W-set of the orbit closure attached to ``pi``: inverses of ``W(pi)``."""
    ws = w_set(pi, poset)
    return WSet(pi, frozenset(w.inverse() for w in ws.elements))


def w_set_bruteforce(pi: MuInvolution) -> WSet:
    """Scan all of ``S_n`` at the right length and act on ``e_mu``."""
    r = rank_mu(pi)
    e = identity_mu(pi.mu)
    found = frozenset(w for w in all_permutations(pi.n)
                      if length(w) == r and act_word(w, e) == pi)
    return WSet(pi, found)


def d_set_filter(n: int) -> frozenset[Permutation]:
    """
    ``D_n`` straight from its definition: for each ``i <= n/2``, ``n+1-i``
    comes before ``i`` with no value strictly between them positioned in between.
    """
    out = set()
    for w in all_permutations(n):
        pos = w.inverse().word
        ok = True
        for i in range(1, n // 2 + 1):
            hi, lo = pos[n - i], pos[i - 1]
            if hi > lo or any(hi < pos[j - 1] < lo for j in range(i + 1, n + 1 - i)):
                ok = False
                break
        if ok:
            out.add(w)
    return frozenset(out)


def d_set_recursive(n: int) -> frozenset[Permutation]:
    """``D_n`` by inserting the adjacent pair ``n 1`` into shifted ``D_{n-2}``."""
    if n <= 1:
        return frozenset({Permutation._trusted(tuple(range(1, n + 1)))})
    out = set()
    for small in d_set_recursive(n - 2):
        shifted = [a + 1 for a in small.word]
        for slot in range(len(shifted) + 1):
            out.add(Permutation._trusted(tuple(shifted[:slot] + [n, 1] + shifted[slot:])))
    return frozenset(out)


def d_set(n: int, method: str = "recursive") -> frozenset[Permutation]:
    """
    ``D_n``, of size ``(n-1)!!``.

    >>> sorted(str(w) for w in d_set(4))
    ['3241', '3412', '4132']
    """
    if n < 1:
        raise ValueError("n must be positive")
    if method == "recursive":
        return d_set_recursive(n)
    if method == "filter":
        return d_set_filter(n)
    raise ValueError(f"unknown method {method!r}")


def d_set_mu(mu: Composition | Sequence[int]) -> frozenset[Permutation]:
    """
    ``D_mu``: string ``i`` uses the alphabet ``{n - nu_i + 1 .. n - nu_{i-1}}``
    and standardises to an element of ``D_{mu_i}``.

    >>> sorted(bar_string(w, (4, 2)) for w in d_set_mu((4, 2)))
    ['[5463|21]', '[5634|21]', '[6354|21]']
    """
    mu = _as_composition(mu)
    n, nu = mu.n, mu.prefix_sums
    blocks = []
    for j, m in enumerate(mu.parts):
        base = n - nu[j + 1]
        blocks.append([tuple(base + a for a in w.word) for w in d_set(m)])
    return frozenset(Permutation._trusted(sum(choice, ())) for choice in product(*blocks))


def maximal_chains(poset: WeakOrderPoset, count_only: bool = True,
                   max_chains: int = DEFAULT_MAX_CHAINS):
    """
    Count (or list) the labelled chains from bottom to top.

    Edges carrying different labels between the same pair of nodes count
    separately, so the count equals the number of reduced words of the
    elements of the top W-set.  Listing is refused above ``max_chains``.
    """
    counts = {str(poset.bottom): 1}
    for level in poset.by_rank()[1:]:
        for key in level:
            counts[key] = sum(counts[e.source] for e in poset.down[key])
    total = counts[str(poset.top)]
    if count_only:
        return total
    if total > max_chains:
        raise ResourceBoundError(f"{total} chains exceed the listing bound {max_chains}", total)
    chains: list[tuple[CoveringEdge, ...]] = []
    top = str(poset.top)

    def walk(key: str, path: list[CoveringEdge]):
        if key == top:
            chains.append(tuple(path))
            return
        for e in poset.up[key]:
            path.append(e)
            walk(e.target, path)
            path.pop()

    walk(str(poset.bottom), [])
    return chains


def from_cycles(n: int, *cycles: tuple[int, int]) -> Permutation:
    """An involution of ``[n]`` from disjoint transpositions; ``(a, a)`` is ignored."""
    word = list(range(1, n + 1))
    for a, b in cycles:
        word[a - 1], word[b - 1] = b, a
    return Permutation(tuple(word))


def corner_word(i: int, j: int, n: int) -> tuple[int, ...]:
    """
    The word moving 1 to position ``i`` and ``n`` to position ``j``:
    ``(s_{n-1} ... s_{j+1})(s_1 ... s_{i-1})`` when ``i > j`` and
    ``(s_{n-1} ... s_j)(s_1 ... s_{i-1})`` when ``i < j``.
    """
    low = j + 1 if i > j else j
    return tuple(range(n - 1, low - 1, -1)) + tuple(range(1, i))


def check_corner_words(n: int) -> list[str]:
    """
    Act with every corner word on ``e`` in ``I_n`` and compare the resulting
    involution and its rank against the closed forms.  Returns failures.
    """
    from .perm import from_word, involution_rank

    failures = []
    e = identity_mu((n,))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            word = corner_word(i, j, n)
            v = from_word(word, n)
            got = act_word(word, e)
            rk = involution_rank(got.perm)
            lv = length(v)
            if i > j:
                if lv != n + i - j - 2 or lv != len(word):
                    failures.append(f"(i={i}, j={j}, n={n}): length {lv}, word {len(word)}")
                if i == j + 1:
                    want, want_rank = from_cycles(n, (1, n)), lv
                elif i == j + 2:
                    want, want_rank = from_cycles(n, (1, n)), lv - 1
                else:
                    want, want_rank = from_cycles(n, (1, n), (j + 1, i - 1)), lv - 1
            else:
                if lv != len(word):
                    failures.append(f"(i={i}, j={j}, n={n}): word not reduced")
                want, want_rank = from_cycles(n, (1, i), (j, n)), lv
            if got.perm != want or rk != want_rank:
                failures.append(
                    f"(i={i}, j={j}, n={n}): got {got} rank {rk}, "
                    f"want {want} rank {want_rank}")
    return failures


def check_outer_cycle_covers(poset: WeakOrderPoset) -> list[str]:
    """Covers creating the cycle ``(1, n)`` must be labelled ``s_1`` or ``s_{n-1}``."""
    n = poset.mu.n
    failures = []
    for e in poset.edges:
        src, tgt = poset.nodes[e.source].perm, poset.nodes[e.target].perm
        if tgt(1) == n and src(1) != n and e.label not in (1, n - 1):
            failures.append(f"{e.source} --s_{e.label}--> {e.target}")
    return failures


@dataclass
class TopWSetReport:
    """Comparison of the top W-set with ``D_mu`` plus supporting checks."""
    mu: Composition
    w_top: frozenset[Permutation]
    d_mu: frozenset[Permutation]
    check_failures: list[str] = field(default_factory=list)

    @property
    def missing(self) -> list[Permutation]:
        return sorted(self.d_mu - self.w_top)

    @property
    def extra(self) -> list[Permutation]:
        return sorted(self.w_top - self.d_mu)

    @property
    def ok(self) -> bool:
        return self.w_top == self.d_mu and not self.check_failures


def verify_top_wset(mu: Composition | Sequence[int], max_n: int = DEFAULT_MAX_N,
                    poset: WeakOrderPoset | None = None) -> TopWSetReport:
    """
    Check ``W(pi_0,mu) = D_mu`` on the built poset.  For every distinct part
    size ``m`` the corner-word closed forms and the ``(1, m)`` cover labels
    on ``I_m`` are checked too.
    """
    mu = _as_composition(mu)
    if poset is None:
        poset = build_poset(mu, max_n=max_n)
    top = w_set(poset.top, poset).elements
    failures = []
    for m in sorted(set(mu.parts)):
        if m < 2:
            continue
        failures += check_corner_words(m)
        failures += check_outer_cycle_covers(poset if mu.parts == (m,) else build_poset((m,), max_n))
    return TopWSetReport(mu, top, d_set_mu(mu), failures)


def _mult(e: CoveringEdge) -> str:
    return e.multiplicity.value


def to_dot(poset: WeakOrderPoset) -> str:
    """Graphviz source; bottom-up layout, double edges drawn as twin lines."""
    lines = [
        f'digraph "I_{poset.mu}" {{',
        "  rankdir=BT;",
        "  node [shape=plaintext];",
    ]
    for level in poset.by_rank():
        ids = " ".join(f'"{k}";' for k in level)
        lines.append(f"  {{ rank=same; {ids} }}")
    for e in poset.edges:
        attrs = f'label="s_{e.label}", mult={_mult(e)}'
        if e.multiplicity is Multiplicity.DOUBLE:
            attrs += ', color="black:invis:black"'
        lines.append(f'  "{e.source}" -> "{e.target}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(poset: WeakOrderPoset) -> dict:
    nodes = []
    for level in poset.by_rank():
        for key in level:
            pi = poset.nodes[key]
            nodes.append({"id": key, "word": list(pi.perm.word),
                          "rank": poset.rank[key], "dcount": double_edge_count(pi)})
    edges = [{"src": e.source, "dst": e.target, "label": e.label, "mult": _mult(e)}
             for e in poset.edges]
    return {"mu": list(poset.mu.parts), "nodes": nodes, "edges": edges}


def poset_from_json(data: dict | str) -> WeakOrderPoset:
    """Rebuild a poset from :func:`to_json` output, re-validating every node."""
    if isinstance(data, str):
        data = json.loads(data)
    mu = Composition(tuple(data["mu"]))
    nodes, rank = {}, {}
    for rec in data["nodes"]:
        pi = validate(Permutation(tuple(rec["word"])), mu)
        if str(pi) != rec["id"]:
            raise ValueError(f"node id {rec['id']!r} does not match word {pi}")
        nodes[rec["id"]] = pi
        rank[rec["id"]] = int(rec["rank"])
    edges = [CoveringEdge(e["src"], e["dst"], int(e["label"]), Multiplicity(e["mult"]))
             for e in data["edges"]]
    return WeakOrderPoset(mu, nodes, rank, edges, identity_mu(mu), top_mu(mu))


def iter_nodes(poset: WeakOrderPoset) -> Iterator[MuInvolution]:
    for level in poset.by_rank():
        for key in level:
            yield poset.nodes[key]
