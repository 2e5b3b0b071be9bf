"""Colorings of a diagram by ``k`` colors.

A coloring picks a set ``S`` of special crossings, smooths them, and gives
each component of the smoothed diagram one color from ``1..k`` so that every
color is used.  At a special crossing the smoothed strand running
``in_over -> out_under`` must carry a strictly smaller color than the strand
running ``in_under -> out_over``.  Every other crossing is transparent: each
strand keeps its color through it and no relation between the two colors is
imposed.  With ``mirrored=True`` the inequality at special crossings is
reversed.
"""

from __future__ import annotations

import dataclasses
from typing import Iterator

from .diagram import Diagram, _rebuild

__all__ = [
    "Coloring",
    "ColoringClass",
    "SmoothingState",
    "smoothing_states",
    "enumerate_colorings",
    "class_sizes",
    "sign",
    "induced_diagram",
    "block_diagram",
    "max_color_bound",
]


@dataclasses.dataclass(frozen=True)
class Coloring:
    special: frozenset[int]
    color_of: tuple[int, ...]
    k: int

    @property
    def j(self) -> int:
        return len(self.special)


@dataclasses.dataclass(frozen=True)
class ColoringClass:
    j: int
    members: tuple[Coloring, ...]

    def __len__(self) -> int:
        return len(self.members)


@dataclasses.dataclass(frozen=True)
class SmoothingState:
    """A special-crossing set with the component structure it produces.

    Components follow the order of ``smooth_all(d, special)``: cycles that
    still pass a crossing (by smallest arc), then cycles made only of smoothed
    crossings, then the diagram's own free loops.  ``arcs[n]`` is the set of
    original arcs on component ``n`` (empty for an original free loop), and
    each edge ``(u, v)`` demands ``color(u) < color(v)``.
    """

    special: tuple[int, ...]
    sign: int
    arcs: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def n_components(self) -> int:
        return len(self.arcs)

    @property
    def feasible(self) -> bool:
        return all(u != v for u, v in self.edges)


def max_color_bound(d: Diagram) -> int:
    """Color count above which no coloring of ``d`` exists: ``4 c(D) + comp(D)``."""
    return 4 * d.crossing_count + d.component_count


def _state(d: Diagram, special: tuple[int, ...], mirrored: bool) -> SmoothingState:
    crossings = d._crossings
    sset = set(special)
    nxt: dict[int, int] = {}
    for cid, c in crossings.items():
        if cid in sset:
            nxt[c.in_over] = c.out_under
            nxt[c.in_under] = c.out_over
        else:
            nxt[c.in_under] = c.out_under
            nxt[c.in_over] = c.out_over

    live: list[tuple[int, frozenset[int]]] = []
    dead: list[tuple[int, frozenset[int]]] = []
    seen: set[int] = set()
    for start in sorted(nxt):
        if start in seen:
            continue
        cyc = [start]
        arc = nxt[start]
        while arc != start:
            cyc.append(arc)
            arc = nxt[arc]
        seen.update(cyc)
        through_kept = any(d._head[a][0] not in sset for a in cyc)
        (live if through_kept else dead).append((start, frozenset(cyc)))
    arcs = [a for _, a in live] + [a for _, a in dead] + [frozenset()] * d.free_loops
    comp_of = {arc: n for n, group in enumerate(arcs) for arc in group}

    edges = []
    sgn = 1
    for cid in special:
        c = crossings[cid]
        sgn *= c.sign
        small, large = comp_of[c.in_over], comp_of[c.in_under]
        edges.append((large, small) if mirrored else (small, large))
    return SmoothingState(tuple(special), sgn, tuple(arcs), tuple(edges))


def smoothing_states(d: Diagram, mirrored: bool = False) -> Iterator[SmoothingState]:
    """All special-crossing subsets, in bitmask order over sorted crossing ids."""
    ids = d.crossing_ids()
    for mask in range(1 << len(ids)):
        special = tuple(cid for b, cid in enumerate(ids) if mask >> b & 1)
        yield _state(d, special, mirrored)


def _assignments(state: SmoothingState, k: int) -> Iterator[tuple[int, ...]]:
    """Constrained surjective colorings of the state's components, lexicographic."""
    n = state.n_components
    if n < k or not state.feasible:
        return
    lower: list[list[tuple[int, bool]]] = [[] for _ in range(n)]
    for u, v in state.edges:
        # checked when the later of the two components is assigned
        if u < v:
            lower[v].append((u, True))
        else:
            lower[u].append((v, False))
    colors = [0] * n
    counts = [0] * (k + 1)

    def ok(pos: int, col: int) -> bool:
        for other, other_is_smaller in lower[pos]:
            if other_is_smaller and not colors[other] < col:
                return False
            if not other_is_smaller and not col < colors[other]:
                return False
        return True

    def rec(pos: int, missing: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            if missing == 0:
                yield tuple(colors)
            return
        if n - pos < missing:
            return
        for col in range(1, k + 1):
            if not ok(pos, col):
                continue
            colors[pos] = col
            counts[col] += 1
            new_missing = missing - (counts[col] == 1)
            yield from rec(pos + 1, new_missing)
            counts[col] -= 1
        colors[pos] = 0

    yield from rec(0, k)


def enumerate_colorings(d: Diagram, k: int, mirrored: bool = False) -> list[ColoringClass]:
    """Colorings of ``d`` with ``k`` colors grouped by number of special crossings.

    The result has one class for every ``j`` in ``0..c(D)``; classes may be empty.
    """
    if k < 2:
        raise ValueError("colorings need at least two colors")
    if d.is_empty():
        raise ValueError("empty diagram")
    groups: list[list[Coloring]] = [[] for _ in range(d.crossing_count + 1)]
    for state in smoothing_states(d, mirrored):
        special = frozenset(state.special)
        for colors in _assignments(state, k):
            groups[len(special)].append(Coloring(special, colors, k))
    return [ColoringClass(j, tuple(g)) for j, g in enumerate(groups)]


def class_sizes(classes: list[ColoringClass]) -> dict[int, int]:
    """Nonzero class sizes keyed by ``j``."""
    return {c.j: len(c) for c in classes if len(c)}


def sign(c: Coloring, d: Diagram) -> int:
    s = 1
    for cid in c.special:
        s *= d.crossing(cid).sign
    return s


def block_diagram(d: Diagram, state: SmoothingState, block) -> Diagram:
    """Smooth the state's special crossings and keep the components in ``block``."""
    arcs: set[int] = set()
    loops = 0
    for n in block:
        group = state.arcs[n]
        if group:
            arcs |= group
        else:
            loops += 1
    return _rebuild(d, state.special, arcs, loops)


def induced_diagram(c: Coloring, d: Diagram, i: int) -> Diagram:
    """Diagram of the components colored ``i``."""
    if not 1 <= i <= c.k:
        raise ValueError(f"color {i} outside 1..{c.k}")
    state = _state(d, tuple(sorted(c.special)), False)
    block = [n for n, col in enumerate(c.color_of) if col == i]
    return block_diagram(d, state, block)
