"""Colorings, single-vertex recoloring steps and replayable sequences.

Colors are positive integers 1..k.  A sequence is valid when every step
changes exactly one vertex to a different color and every intermediate
coloring stays proper; its length is then a certified upper bound on the
distance between its endpoints in the recoloring graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidColoringError, SequenceError
from .graph import Graph


@dataclass(frozen=True)
class Coloring:
    """A color assignment over vertices 0..n-1 with palette 1..k."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidColoringError(f"palette size {self.k} must be >= 1")
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise InvalidColoringError(
                    f"vertex {v} has color {c} outside 1..{self.k}"
                )

    @property
    def n(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def color_set(self, vertices=None) -> set[int]:
        if vertices is None:
            return set(self.colors)
        return {self.colors[v] for v in vertices}

    def color_class(self, c: int) -> list[int]:
        return [v for v, col in enumerate(self.colors) if col == c]

    def with_color(self, v: int, c: int) -> "Coloring":
        colors = list(self.colors)
        colors[v] = c
        return Coloring(tuple(colors), self.k)

    def relabel(self, k: int) -> "Coloring":
        """Same assignment under a different palette size."""
        return Coloring(self.colors, k)


def is_proper(g: Graph, coloring: Coloring) -> bool:
    if coloring.n != g.n:
        return False
    cols = coloring.colors
    return all(cols[u] != cols[v] for u, v in g.edges())


def check_proper(g: Graph, coloring: Coloring, what: str = "coloring") -> None:
    if coloring.n != g.n:
        raise InvalidColoringError(
            f"{what} has {coloring.n} entries for a graph on {g.n} vertices"
        )
    cols = coloring.colors
    for u, v in g.edges():
        if cols[u] == cols[v]:
            raise InvalidColoringError(
                f"{what} is improper: edge ({u},{v}) is monochromatic ({cols[u]})"
            )


@dataclass(frozen=True)
class RecolorStep:
    vertex: int
    to: int


@dataclass
class RecolorSequence:
    """An ordered list of steps together with its start coloring."""

    start: Coloring
    steps: list[RecolorStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def per_vertex_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for s in self.steps:
            counts[s.vertex] = counts.get(s.vertex, 0) + 1
        return counts

    def max_per_vertex(self) -> int:
        counts = self.per_vertex_counts()
        return max(counts.values(), default=0)

    def as_pairs(self) -> list[tuple[int, int]]:
        return [(s.vertex, s.to) for s in self.steps]


@dataclass(frozen=True)
class VertexOrder:
    """A permutation of 0..n-1."""

    order: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("order is not a permutation of 0..n-1")

    def __iter__(self):
        return iter(self.order)

    def __len__(self):
        return len(self.order)


def apply_step(g: Graph, coloring: Coloring, step: RecolorStep, index=None) -> Coloring:
    v, c = step.vertex, step.to
    if not 0 <= v < g.n:
        raise SequenceError(f"vertex {v} out of range", index)
    if not 1 <= c <= coloring.k:
        raise SequenceError(f"color {c} outside palette 1..{coloring.k}", index)
    if coloring.colors[v] == c:
        raise SequenceError(f"step does not change the color of vertex {v}", index)
    for w in g.neighbors(v):
        if coloring.colors[w] == c:
            raise SequenceError(
                f"recoloring vertex {v} to {c} clashes with neighbor {w}", index
            )
    return coloring.with_color(v, c)


def apply_sequence(g: Graph, coloring: Coloring, seq: RecolorSequence) -> Coloring:
    """Replay a sequence, failing fast on the first invalid step."""
    check_proper(g, coloring, "start coloring")
    current = coloring
    for i, step in enumerate(seq.steps):
        current = apply_step(g, current, step, index=i)
    return current


def reversed_sequence(g: Graph, seq: RecolorSequence) -> RecolorSequence:
    """The step-by-step inverse, from the sequence's end back to its start.

    Old colors are recovered by replaying forward, then emitted in reverse.
    """
    current = seq.start
    inverted = []
    for i, step in enumerate(seq.steps):
        inverted.append(RecolorStep(step.vertex, current.colors[step.vertex]))
        current = apply_step(g, current, step, index=i)
    inverted.reverse()
    return RecolorSequence(start=current, steps=inverted)


def concatenate(g: Graph, first: RecolorSequence, *rest: RecolorSequence) -> RecolorSequence:
    """Glue sequences whose endpoints chain together; validated by replay."""
    out = RecolorSequence(start=first.start, steps=list(first.steps))
    end = apply_sequence(g, first.start, first)
    for seq in rest:
        if seq.start.colors != end.colors:
            raise SequenceError("sequences do not chain: endpoint mismatch")
        out.steps.extend(seq.steps)
        end = apply_sequence(g, seq.start, seq)
    return out


class SequenceRecorder:
    """Builds a valid sequence incrementally while tracking the coloring.

    ``recolor(v, c)`` is a no-op when v already has color c, so callers can
    express "recolor if needed" directly.  Every emitted step is validated.
    """

    def __init__(self, g: Graph, start: Coloring):
        check_proper(g, start, "start coloring")
        self.g = g
        self.start = start
        self.current = list(start.colors)
        self.k = start.k
        self.steps: list[RecolorStep] = []

    def color(self, v: int) -> int:
        return self.current[v]

    def colors_of(self, vertices) -> set[int]:
        return {self.current[v] for v in vertices}

    def recolor(self, v: int, c: int) -> bool:
        """Recolor v to c; returns False when it was already that color."""
        if self.current[v] == c:
            return False
        if not 1 <= c <= self.k:
            raise SequenceError(
                f"color {c} outside palette 1..{self.k}", len(self.steps)
            )
        for w in self.g.neighbors(v):
            if self.current[w] == c:
                raise SequenceError(
                    f"recoloring vertex {v} to {c} clashes with neighbor {w}",
                    len(self.steps),
                )
        self.steps.append(RecolorStep(v, c))
        self.current[v] = c
        return True

    def coloring(self) -> Coloring:
        return Coloring(tuple(self.current), self.k)

    def sequence(self) -> RecolorSequence:
        return RecolorSequence(start=self.start, steps=list(self.steps))

    def extend(self, seq: RecolorSequence) -> None:
        if list(seq.start.colors) != self.current:
            raise SequenceError("extension does not start at the current coloring")
        for step in seq.steps:
            self.recolor(step.vertex, step.to)
