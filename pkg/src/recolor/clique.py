"""Recoloring one proper coloring of a clique into another.

With one spare color (k >= n+1) every vertex needs at most two moves.  The
blocking structure is the digraph with an arc x -> y when y currently holds
x's target color; in-/out-degrees are at most one, so it splits into
directed paths (resolved from the tail) and circuits (broken by parking one
vertex on a free color).
"""

from __future__ import annotations

from itertools import combinations

from .coloring import Coloring, RecolorSequence, SequenceRecorder
from .errors import PreconditionError
from .graph import Graph


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def _check_distinct(coloring: Coloring, size: int, name: str) -> None:
    if coloring.n != size:
        raise PreconditionError(f"{name} has {coloring.n} entries, expected {size}")
    if len(set(coloring.colors)) != size:
        raise PreconditionError(f"{name} repeats a color on a clique")


def recolor_clique(clique_size: int, alpha: Coloring, beta: Coloring, k: int) -> RecolorSequence:
    """Sequence from ``alpha`` to ``beta`` on a clique, <= 2 moves per vertex."""
    if k <= clique_size:
        raise PreconditionError(
            f"need a spare color: k={k} must exceed clique size {clique_size}"
        )
    _check_distinct(alpha, clique_size, "alpha")
    _check_distinct(beta, clique_size, "beta")
    for name, col in (("alpha", alpha), ("beta", beta)):
        if col.colors and max(col.colors) > k:
            raise PreconditionError(f"{name} uses a color above k={k}")

    g = complete_graph(clique_size)
    rec = SequenceRecorder(g, Coloring(alpha.colors, k))
    target = beta.colors
    holder = {c: v for v, c in enumerate(rec.current)}

    def settle(v: int) -> None:
        holder.pop(rec.color(v), None)
        rec.recolor(v, target[v])
        holder[target[v]] = v

    pending = {v for v in range(clique_size) if rec.color(v) != target[v]}
    while pending:
        # Resolve every vertex whose target color is currently free; this
        # peels directed paths from the tail inward.
        progress = True
        while progress:
            progress = False
            for v in sorted(pending):
                if target[v] not in holder:
                    settle(v)
                    pending.discard(v)
                    progress = True
        if not pending:
            break
        # Only circuits remain: park the smallest vertex on a free color.
        v0 = min(pending)
        free = next(c for c in range(1, k + 1) if c not in holder)
        holder.pop(rec.color(v0), None)
        rec.recolor(v0, free)
        holder[free] = v0

    return rec.sequence()
