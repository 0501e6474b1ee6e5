"""Exhaustive minimum-color search, closed forms and bounds for the k-proper index.

Lower bounds come from exhausting a quotient of the coloring space:

* ``raw``: color arrays up to renaming of colors, i.e. restricted-growth
  sequences over the canonical edge order;
* ``code-multiset``: for graphs whose largest part W is joined to every
  other vertex, the multiset of W color codes (permuting W is an
  automorphism), with the few edges inside U enumerated outright.

Each candidate is judged by the complete proper-tree search, so a ``False``
verdict covers every coloring with at most m colors.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations, product
from math import comb, factorial
from typing import Iterator, Sequence

from .constructions import Construction, ceil_sqrt_half, construction_for
from .graph import ColorCode, EdgeColoring, FamilySpec, Graph, family_of, split_sides
from .search import ProperTreeSearch, is_k_proper

log = logging.getLogger(__name__)

STRATEGIES = ("raw", "code-multiset")


@dataclass(frozen=True)
class CodeMultiset:
    """Multiset of color codes, stored as sorted ``(code, multiplicity)`` pairs."""

    counts: tuple[tuple[ColorCode, int], ...]

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def expand(self) -> list[ColorCode]:
        return [code for code, c in self.counts for _ in range(c)]

    def max_multiplicity(self) -> int:
        return max((c for _, c in self.counts), default=0)


@dataclass
class SearchOutcome:
    found: bool
    coloring: EdgeColoring | None
    classes_checked: int
    classes_searched: int = 0

    def __bool__(self) -> bool:
        return self.found


@dataclass
class PxResult:
    lo: int
    hi: int
    upper: EdgeColoring | None = None
    upper_name: str | None = None
    lower: dict = field(default_factory=dict)

    @property
    def value(self) -> int | None:
        return self.lo if self.lo == self.hi else None

    def to_dict(self) -> dict:
        doc: dict = {"lo": self.lo, "hi": self.hi}
        if self.upper is not None:
            doc["upper"] = {"colors": list(self.upper.colors)}
            if self.upper_name:
                doc["upper"]["name"] = self.upper_name
        doc["lower"] = dict(self.lower)
        return doc


# ---------------------------------------------------------------- enumeration


def restricted_growth(length: int, m: int) -> Iterator[tuple[int, ...]]:
    """Sequences a_1..a_length with a_1 = 1 and a_i <= min(m, 1 + max(a_1..a_{i-1}))."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if length == 0:
        yield ()
        return
    seq = [1] * length

    def rec(i: int, top: int):
        if i == length:
            yield tuple(seq)
            return
        for c in range(1, min(m, top + 1) + 1):
            seq[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(1, 1)


def enumerate_colorings(graph: Graph, m: int) -> Iterator[EdgeColoring]:
    """One coloring per color-renaming class with at most m colors."""
    for seq in restricted_growth(graph.m, m):
        yield EdgeColoring(seq)


def enumerate_code_multisets(s: int, t: int, m: int) -> Iterator[CodeMultiset]:
    codes = list(product(range(1, m + 1), repeat=s))
    for pick in combinations_with_replacement(range(len(codes)), t):
        counts: dict[int, int] = {}
        for i in pick:
            counts[i] = counts.get(i, 0) + 1
        yield CodeMultiset(tuple((codes[i], c) for i, c in counts.items()))


def stirling2(n: int, k: int) -> int:
    row = [1] + [0] * k
    for i in range(1, n + 1):
        new = [0] * (k + 1)
        for j in range(1, min(i, k) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]


def count_classes(graph: Graph, m: int, strategy: str) -> int:
    """How many candidates ``exists_k_proper_coloring`` would examine at most."""
    if strategy == "raw":
        if graph.m == 0:
            return 1
        return sum(stirling2(graph.m, j) for j in range(1, m + 1))
    u_side, w_side, intra = _code_layout(graph)
    return m ** len(intra) * comb(m ** len(u_side) + len(w_side) - 1, len(w_side))


# ---------------------------------------------------------------- refutation


class _Judge:
    """Decides k-properness of many colorings of one graph.

    Subsets that recently refuted a coloring are retried first; this only
    reorders work, the verdict is the same as a plain lexicographic pass.
    """

    KILLERS = 48

    def __init__(self, graph: Graph, k: int):
        if not (2 <= k <= graph.n):
            raise ValueError(f"k must satisfy 2 <= k <= n = {graph.n}, got {k}")
        self.graph = graph
        self.k = k
        self.killers: list[tuple[int, ...]] = []

    def ok(self, colors: Sequence[int], hints: Sequence[Sequence[int]] = ()) -> bool:
        search = ProperTreeSearch(self.graph, EdgeColoring(tuple(colors)))
        fail = search.first_failure(hints)
        if fail is None:
            fail = search.first_failure(self.killers)
        if fail is None:
            fail = search.first_failure(combinations(range(self.graph.n), self.k))
        if fail is None:
            return True
        if fail in self.killers:
            self.killers.remove(fail)
        self.killers.insert(0, fail)
        del self.killers[self.KILLERS :]
        return False


def _code_layout(graph: Graph):
    try:
        u_side, w_side = split_sides(graph)
    except ValueError as exc:
        raise ValueError(f"code-multiset strategy does not apply: {exc}") from None
    uset = set(u_side)
    intra = [i for i, (a, b) in enumerate(graph.edges) if a in uset and b in uset]
    return u_side, w_side, intra


def _code_symmetries(graph: Graph, u_side: list[int], m: int, limit: int = 720):
    """Pairs (U-permutation, color renaming) that map colorings to equivalent ones.

    A permutation of U keeping the same-part relation is a graph automorphism
    fixing W; renaming colors never changes k-properness. Returns None when
    the group would exceed ``limit`` elements.
    """
    owner = graph.part_of
    s = len(u_side)
    perms = []
    for pi in permutations(range(s)):
        if all(
            (owner[u_side[i]] == owner[u_side[j]]) == (owner[u_side[pi[i]]] == owner[u_side[pi[j]]])
            for i in range(s)
            for j in range(i + 1, s)
        ):
            perms.append(pi)
            if len(perms) * factorial(m) > limit:
                return None
    renames = [(0,) + tau for tau in permutations(range(1, m + 1))]
    return [(pi, tau) for pi in perms for tau in renames]


def _candidates(graph: Graph, k: int, m: int, strategy: str):
    """Yield ``(colors, hints, key)`` for every class of the chosen quotient.

    ``key`` is a canonical form under the code symmetries (None for raw):
    candidates with equal keys are k-proper together or not at all.
    """
    if strategy == "raw":
        for seq in restricted_growth(graph.m, m):
            yield seq, (), None
        return
    if strategy != "code-multiset":
        raise ValueError(f"unknown strategy {strategy!r}")
    u_side, w_side, intra = _code_layout(graph)
    index = graph.edge_index
    cross = [[index[(min(u, w), max(u, w))] for u in u_side] for w in w_side]
    upos = {u: i for i, u in enumerate(u_side)}
    intra_pairs = [(upos[graph.edges[e][0]], upos[graph.edges[e][1]]) for e in intra]
    intra_slot = {p: i for i, p in enumerate(intra_pairs)}
    group = _code_symmetries(graph, u_side, m)

    def canonical(outer, codes):
        best = None
        for pi, tau in group:
            moved_intra = [0] * len(outer)
            for (i, j), c in zip(intra_pairs, outer):
                a, b = sorted((pi[i], pi[j]))
                moved_intra[intra_slot[(a, b)]] = tau[c]
            moved = []
            for code in codes:
                new = [0] * len(code)
                for i, c in enumerate(code):
                    new[pi[i]] = tau[c]
                moved.append(tuple(new))
            key = (tuple(moved_intra), tuple(sorted(moved)))
            if best is None or key < best:
                best = key
        return best

    for outer in product(range(1, m + 1), repeat=len(intra)):
        base = [0] * graph.m
        for e, c in zip(intra, outer):
            base[e] = c
        for ms in enumerate_code_multisets(len(u_side), len(w_side), m):
            colors = list(base)
            slot = 0
            hints = []
            for code, mult in ms.counts:
                if mult >= 3 and k >= 3:
                    triple = [w_side[slot], w_side[slot + 1], w_side[slot + 2]]
                    pad = [v for v in range(graph.n) if v not in triple][: k - 3]
                    hints.append(tuple(sorted(triple + pad)))
                for _ in range(mult):
                    for i, e in enumerate(cross[slot]):
                        colors[e] = code[i]
                    slot += 1
            key = canonical(outer, ms.expand()) if group else None
            yield colors, hints, key


def _scan(graph: Graph, k: int, m: int, strategy: str, worker: int = 0, stride: int = 1):
    judge = _Judge(graph, k)
    refuted: set = set()
    count = 0
    searched = 0
    for idx, (colors, hints, key) in enumerate(_candidates(graph, k, m, strategy)):
        count = idx + 1
        if idx % stride != worker:
            continue
        if key is not None and key in refuted:
            continue
        searched += 1
        if judge.ok(colors, hints):
            return idx, tuple(colors), count, searched
        if key is not None:
            refuted.add(key)
    return None, None, count, searched


def exists_k_proper_coloring(
    graph: Graph, k: int, m: int, strategy: str = "raw", jobs: int = 1
) -> SearchOutcome:
    """Is there a k-proper coloring with at most m colors?

    Returns the first witness in enumeration order or, on ``False``, the
    number of quotient classes that were exhausted.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "code-multiset":
        _code_layout(graph)
    if jobs <= 1:
        idx, colors, count, searched = _scan(graph, k, m, strategy)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_scan, graph, k, m, strategy, w, jobs) for w in range(jobs)]
            parts = [f.result() for f in futures]
        searched = sum(p[3] for p in parts)
        hits = [(p[0], p[1]) for p in parts if p[0] is not None]
        if hits:
            idx, colors = min(hits)
            count = idx + 1
        else:
            idx, colors, count = None, None, max(p[2] for p in parts)
    if idx is None:
        return SearchOutcome(False, None, count, searched)
    return SearchOutcome(True, EdgeColoring(colors), idx + 1, searched)


def default_strategy(graph: Graph) -> str:
    try:
        _code_layout(graph)
    except ValueError:
        return "raw"
    return "code-multiset"


def exact_px_k(
    graph: Graph,
    k: int,
    max_colors: int | None = None,
    strategy: str = "auto",
    use_constructions: bool = True,
    jobs: int = 1,
) -> PxResult:
    """Least m <= max_colors admitting a k-proper coloring, with evidence both ways.

    For each m in turn a known construction is tried first (accepted only if
    the verifier agrees); otherwise the quotient space is exhausted. The
    lower evidence is always the exhaustive refutation of m - 1.
    """
    if max_colors is None:
        max_colors = max(graph.m, 1)
    if max_colors < 1:
        raise ValueError("max_colors must be at least 1")
    if not (2 <= k <= graph.n):
        raise ValueError(f"k must satisfy 2 <= k <= n = {graph.n}, got {k}")
    if strategy == "auto":
        strategy = default_strategy(graph)
    known: Construction | None = construction_for(graph, k) if use_constructions else None
    lower = {"kind": "exhausted", "m": 0, "classes_checked": 0}
    for m in range(1, max_colors + 1):
        if known is not None and known.coloring.num_colors <= m:
            if is_k_proper(graph, known.coloring, k, jobs=jobs).ok:
                return PxResult(m, m, known.coloring, known.name, lower)
            known = None
        out = exists_k_proper_coloring(graph, k, m, strategy, jobs=jobs)
        if out.found:
            return PxResult(m, m, out.coloring, f"search-{strategy}", lower)
        log.debug("no %d-proper coloring with %d colors (%d classes)", k, m, out.classes_checked)
        lower = {"kind": "exhausted", "m": m, "classes_checked": out.classes_checked}
        if out.classes_searched != out.classes_checked:
            lower["classes_searched"] = out.classes_searched
    # every edge a different color makes any spanning tree proper
    rainbow = EdgeColoring(tuple(range(1, graph.m + 1)))
    if not is_k_proper(graph, rainbow, k).ok:
        raise AssertionError("rainbow coloring failed verification")
    return PxResult(max_colors + 1, max(graph.m, max_colors + 1), rainbow, "rainbow", lower)


# ---------------------------------------------------------------- closed forms


def pigeonhole_lower_bound_k2t(t: int, k: int) -> bool:
    """True iff t > 2k^2, which forces px_3(K_{2,t}) > k.

    With k colors there are k^2 codes, so some code is shared by three
    W-vertices and those three cannot be joined by a proper tree.
    """
    return t > 2 * k * k


def _px3_k2t(t: int) -> int:
    if t <= 4:
        return 2
    if t <= 18:
        return 3
    return ceil_sqrt_half(t)


def _px3_bipartite(s: int, t: int) -> int:
    s, t = sorted((s, t))
    if s == 1:
        if t < 2:
            raise ValueError("K_{1,1} has only two vertices")
        return t
    if s == 2:
        return _px3_k2t(t)
    if s == 3:
        return 2 if t <= 12 else 3
    return 2


def px3_formula(family: FamilySpec) -> int:
    """Closed-form px_3 of stars, complete bipartite and complete multipartite graphs."""
    p = family.params
    if family.kind == "star":
        return _px3_bipartite(1, p[0])
    if family.kind in ("path", "cycle"):
        if p[0] < 3:
            raise ValueError("px_3 needs at least three vertices")
        return 2
    if family.kind == "bipartite":
        return _px3_bipartite(*p)
    if family.kind == "multipartite":
        if len(p) == 2:
            return _px3_bipartite(*p)
        s, t = sum(p[:-1]), p[-1]
        head = p[:-1]
        if s < t:
            if head == (1, 1):
                if 5 <= t <= 18:
                    return 3
                if t >= 19:
                    return ceil_sqrt_half(t)
            if head == (1, 2) and t >= 13:
                return 3
            if head == (1, 1, 1) and t >= 15:
                return 3
        return 2
    raise ValueError(f"no closed form for family {family.kind!r}")


def pxk_bounds(family: FamilySpec, k: int) -> tuple[int, int] | None:
    """Known bounds (lo, hi) on px_k for k >= 4; ``None`` when nothing is known."""
    if k < 4:
        raise ValueError("pxk_bounds covers k >= 4; use px3_formula for k = 3")
    p = family.params
    if family.kind in ("path", "cycle"):
        return (2, 2) if p[0] >= k else None
    if family.kind == "multipartite" and len(p) == 2:
        family = FamilySpec("bipartite", p)
    if family.kind == "bipartite":
        s, t = family.params
        if s + t < k:
            return None
        if s >= 2 * (k - 1) or t <= s + 1:
            # t <= s + 1 means K_{s,t} has a Hamiltonian path
            return (2, 2)
        if s >= k:
            return (2, 3)
        return None
    if family.kind == "multipartite":
        s, t = sum(p[:-1]), p[-1]
        if s + t < k:
            return None
        if t <= s or s >= 2 * (k - 1):
            return (2, 2)
        return None
    return None


def family_bounds(graph: Graph, k: int) -> tuple[int, int] | None:
    fam = family_of(graph)
    if fam.kind == "custom":
        return None
    if k == 3:
        v = px3_formula(fam)
        return (v, v)
    return pxk_bounds(fam, k)
