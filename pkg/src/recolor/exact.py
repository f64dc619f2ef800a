"""Greedy colorings, exact grundy and chromatic numbers, frozen colorings.

The exact searches are desk-scale tools with explicit size guards; they are
oracles for tests and small instances, not scalable solvers.
"""

from __future__ import annotations

from functools import lru_cache

from .coloring import Coloring, VertexOrder, check_proper
from .errors import BudgetExceededError
from .graph import Graph

GRUNDY_LIMIT = 10
CHROMATIC_LIMIT = 32


def greedy_coloring(g: Graph, order: VertexOrder) -> Coloring:
    """First-fit coloring: each vertex takes the smallest color unused by
    its earlier-ordered neighbors."""
    if len(order) != g.n:
        raise ValueError(f"order has {len(order)} entries for n={g.n}")
    colors = [0] * g.n
    for v in order:
        taken = {colors[w] for w in g.neighbors(v) if colors[w] > 0}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    k = max(colors, default=1)
    return Coloring(tuple(colors), max(k, 1))


def _adj_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _maximal_independent_sets(masks: list[int], mask: int):
    """All maximal independent sets of the induced subgraph on ``mask``."""
    vertices = [v for v in range(len(masks)) if mask >> v & 1]

    def rec(i: int, chosen: int, dominated: int):
        if i == len(vertices):
            yield chosen
            return
        v = vertices[i]
        bit = 1 << v
        nb = masks[v] & mask
        # Take v whenever it is not adjacent to the current set.
        if not (nb & chosen):
            yield from rec(i + 1, chosen | bit, dominated | nb | bit)
        # Skip v only if it can still be dominated later or already is.
        if dominated & bit or nb & ~(chosen | dominated) or nb & chosen:
            yield from rec(i + 1, chosen, dominated)

    seen = set()
    for s in rec(0, 0, 0):
        # The pruning above can emit non-maximal sets; filter exactly.
        if s in seen:
            continue
        maximal = True
        for v in vertices:
            bit = 1 << v
            if not (s & bit) and not (masks[v] & s):
                maximal = False
                break
        if maximal:
            seen.add(s)
            yield s


def grundy_number(g: Graph, limit: int = GRUNDY_LIMIT) -> int:
    """Worst number of colors over all greedy colorings, by exact search.

    Uses the recursion over first color classes: the class of color 1 in a
    greedy coloring is exactly a maximal independent set, so
    grundy(G) = max over maximal independent sets S of 1 + grundy(G - S).
    """
    if g.n > limit:
        raise BudgetExceededError(
            f"grundy_number guard: n={g.n} exceeds limit {limit}"
        )
    masks = _adj_masks(g)

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        return max(
            1 + best(mask & ~s) for s in _maximal_independent_sets(masks, mask)
        )

    return best((1 << g.n) - 1)


def _greedy_clique_lower_bound(g: Graph) -> int:
    best = 1 if g.n else 0
    by_degree = sorted(range(g.n), key=lambda v: -g.degree(v))
    for start in by_degree:
        clique = {start}
        for v in by_degree:
            if v not in clique and all(g.has_edge(v, u) for u in clique):
                clique.add(v)
        best = max(best, len(clique))
    return best


def _is_k_colorable(g: Graph, k: int) -> bool:
    if k >= g.n:
        return True
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    masks = _adj_masks(g)
    colors = [0] * g.n

    def assign(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colors[w] for w in range(g.n) if masks[v] >> w & 1 and colors[w]}
        # Symmetry breaking: at most one brand-new color per vertex.
        for c in range(1, min(used + 1, k) + 1):
            if c in taken:
                continue
            colors[v] = c
            if assign(i + 1, max(used, c)):
                return True
            colors[v] = 0
        return False

    return assign(0, 0)


def chromatic_number(g: Graph, limit: int = CHROMATIC_LIMIT) -> int:
    if g.n > limit:
        raise BudgetExceededError(
            f"chromatic_number guard: n={g.n} exceeds limit {limit}"
        )
    if g.n == 0:
        return 0
    if g.edge_count() == 0:
        return 1
    k = _greedy_clique_lower_bound(g)
    while not _is_k_colorable(g, k):
        k += 1
    return k


def is_grundy_coloring(g: Graph, coloring: Coloring) -> bool:
    """True iff the coloring is a greedy coloring for some vertex order:
    every vertex of color j sees every color below j in its neighborhood."""
    check_proper(g, coloring)
    for v in range(g.n):
        seen = {coloring.colors[w] for w in g.neighbors(v)}
        for j in range(1, coloring.colors[v]):
            if j not in seen:
                return False
    return True


def is_frozen(g: Graph, coloring: Coloring, k: int) -> bool:
    """True iff no single vertex can be recolored within palette 1..k."""
    check_proper(g, coloring)
    if k < max(coloring.colors, default=1):
        raise ValueError("palette k smaller than a used color")
    for v in range(g.n):
        seen = {coloring.colors[w] for w in g.neighbors(v)}
        for c in range(1, k + 1):
            if c != coloring.colors[v] and c not in seen:
                return False
    return True
