"""Combinatorial oriented link diagrams.

A diagram is a set of signed crossings, each with four ports
(``in_under``, ``in_over``, ``out_under``, ``out_over``) labelled by arc ids,
plus a count of crossingless circles.  Every arc id occurs exactly once as an
out-port (its tail) and once as an in-port (its head).  No planar embedding is
stored; every constructor here produces data realizing a planar diagram as
long as the surgeries are applied to arcs that share a face.

Components are numbered by the strand cycles sorted by smallest arc id,
followed by the free loops.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Mapping

from .braid import BraidError, BraidWord

__all__ = [
    "Crossing",
    "Diagram",
    "DiagramError",
    "ConwayTriple",
    "closure",
    "braid_arc",
    "writhe",
    "components",
    "smooth",
    "smooth_all",
    "switch",
    "conway_triple",
    "restrict",
    "insert_kink",
    "insert_r2",
    "canonical_key",
    "unlink",
]

UNDER, OVER = 0, 1


class DiagramError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class Crossing:
    sign: int
    in_under: int
    in_over: int
    out_under: int
    out_over: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {self.sign}")

    def switched(self) -> Crossing:
        return Crossing(-self.sign, self.in_over, self.in_under, self.out_over, self.out_under)

    def renamed(self, mapping: Mapping[int, int]) -> Crossing:
        g = mapping.get
        return Crossing(
            self.sign,
            g(self.in_under, self.in_under),
            g(self.in_over, self.in_over),
            g(self.out_under, self.out_under),
            g(self.out_over, self.out_over),
        )


class Diagram:
    """Immutable combinatorial link diagram."""

    __slots__ = ("_crossings", "_free_loops", "_head", "_tail", "_cycles")

    def __init__(self, crossings: Mapping[int, Crossing] | None = None, free_loops: int = 0):
        crossings = dict(crossings or {})
        if free_loops < 0:
            raise DiagramError("free_loops must be nonnegative")
        head: dict[int, tuple[int, int]] = {}
        tail: dict[int, tuple[int, int]] = {}
        for cid, c in crossings.items():
            for arc, role in ((c.in_under, UNDER), (c.in_over, OVER)):
                if arc in head:
                    raise DiagramError(f"arc {arc} enters two crossing ports")
                head[arc] = (cid, role)
            for arc, role in ((c.out_under, UNDER), (c.out_over, OVER)):
                if arc in tail:
                    raise DiagramError(f"arc {arc} leaves two crossing ports")
                tail[arc] = (cid, role)
        if head.keys() != tail.keys():
            bad = sorted(head.keys() ^ tail.keys())
            raise DiagramError(f"arcs without both endpoints: {bad}")
        self._crossings = crossings
        self._free_loops = free_loops
        self._head = head
        self._tail = tail
        self._cycles: tuple[tuple[int, ...], ...] | None = None

    # -- basic data --------------------------------------------------------

    @property
    def crossings(self) -> dict[int, Crossing]:
        return dict(self._crossings)

    @property
    def free_loops(self) -> int:
        return self._free_loops

    def crossing(self, cid: int) -> Crossing:
        try:
            return self._crossings[cid]
        except KeyError:
            raise DiagramError(f"unknown crossing id {cid}") from None

    def crossing_ids(self) -> list[int]:
        return sorted(self._crossings)

    def arcs(self) -> list[int]:
        return sorted(self._head)

    def head(self, arc: int) -> tuple[int, int]:
        """(crossing id, UNDER/OVER) of the port the arc enters."""
        return self._head[arc]

    def tail(self, arc: int) -> tuple[int, int]:
        return self._tail[arc]

    @property
    def crossing_count(self) -> int:
        return len(self._crossings)

    def is_empty(self) -> bool:
        return not self._crossings and not self._free_loops

    def next_arc(self, arc: int) -> int:
        cid, role = self._head[arc]
        c = self._crossings[cid]
        return c.out_over if role == OVER else c.out_under

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Strand cycles as arc sequences, each starting at its smallest arc."""
        if self._cycles is None:
            seen: set[int] = set()
            out = []
            for start in sorted(self._head):
                if start in seen:
                    continue
                cyc = [start]
                seen.add(start)
                arc = self.next_arc(start)
                while arc != start:
                    cyc.append(arc)
                    seen.add(arc)
                    arc = self.next_arc(arc)
                out.append(tuple(cyc))
            self._cycles = tuple(out)
        return self._cycles

    @property
    def component_count(self) -> int:
        return len(self.cycles()) + self._free_loops

    def component_of_arc(self) -> dict[int, int]:
        return {arc: n for n, cyc in enumerate(self.cycles()) for arc in cyc}

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self._crossings.values())

    # -- comparison --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self._crossings == other._crossings and self._free_loops == other._free_loops

    def __hash__(self) -> int:
        return hash((frozenset(self._crossings.items()), self._free_loops))

    def __repr__(self) -> str:
        return (
            f"Diagram(crossings={self.crossing_count}, components={self.component_count}, "
            f"writhe={self.writhe}, free_loops={self._free_loops})"
        )

    # -- file format -------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "free_loops": self._free_loops,
            "crossings": [
                {"id": cid, **dataclasses.asdict(self._crossings[cid])}
                for cid in sorted(self._crossings)
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> Diagram:
        """Read either the braid form or the explicit form."""
        if "word" in data or "strands" in data:
            try:
                word = BraidWord.from_ints(int(data["strands"]), [int(g) for g in data.get("word", [])])
            except (KeyError, BraidError) as exc:
                raise DiagramError(f"bad braid form: {exc}") from exc
            return closure(word)
        try:
            crossings = {}
            for n, rec in enumerate(data.get("crossings", [])):
                cid = int(rec.get("id", n))
                if cid in crossings:
                    raise DiagramError(f"duplicate crossing id {cid}")
                crossings[cid] = Crossing(
                    int(rec["sign"]),
                    int(rec["in_under"]),
                    int(rec["in_over"]),
                    int(rec["out_under"]),
                    int(rec["out_over"]),
                )
            return cls(crossings, int(data.get("free_loops", 0)))
        except (KeyError, TypeError) as exc:
            raise DiagramError(f"bad explicit diagram: {exc}") from exc


@dataclasses.dataclass(frozen=True)
class ConwayTriple:
    d_plus: Diagram
    d_minus: Diagram
    d_zero: Diagram


# -- constructors ----------------------------------------------------------


def unlink(r: int) -> Diagram:
    """Crossingless diagram of the r-component unlink."""
    return Diagram({}, r)


def closure(word: BraidWord) -> Diagram:
    """Closed-braid diagram of a non-singular word.

    Letter ``n`` becomes crossing ``n``; its out-port at the left position gets
    arc id ``2n`` and the one at the right position ``2n + 1``.  For sigma_i
    the strand entering at position i passes over.
    """
    if word.is_singular:
        raise DiagramError("closure of a singular word; resolve it first")
    m = word.strands
    letters = word.letters
    current: list[int | None] = [None] * (m + 1)
    # arcs reaching the bottom come from the last letter touching each position
    for n, letter in enumerate(letters):
        current[letter.index] = 2 * n
        current[letter.index + 1] = 2 * n + 1
    crossings = {}
    for n, letter in enumerate(letters):
        i = letter.index
        left, right = current[i], current[i + 1]
        if letter.sign > 0:
            crossings[n] = Crossing(1, in_under=right, in_over=left, out_under=2 * n, out_over=2 * n + 1)
        else:
            crossings[n] = Crossing(-1, in_under=left, in_over=right, out_under=2 * n + 1, out_over=2 * n)
        current[i], current[i + 1] = 2 * n, 2 * n + 1
    untouched = sum(1 for p in range(1, m + 1) if current[p] is None)
    return Diagram(crossings, untouched)


def braid_arc(word: BraidWord, level: int, position: int) -> int | None:
    """Arc id of ``closure(word)`` at strand position just below letter ``level``.

    ``level`` runs from 0 to ``len(word)``; both ends name the arc that passes
    through the closing strands.  Returns None for a position no letter touches.
    """
    if not 1 <= position <= word.strands:
        raise DiagramError(f"position {position} out of range")
    if not 0 <= level <= len(word):
        raise DiagramError(f"level {level} out of range")
    letters = word.letters
    order = list(range(level - 1, -1, -1)) + list(range(len(letters) - 1, level - 1, -1))
    for n in order:
        i = letters[n].index
        if position == i:
            return 2 * n
        if position == i + 1:
            return 2 * n + 1
    return None


# -- invariants of the data ------------------------------------------------


def writhe(d: Diagram) -> int:
    return d.writhe


def components(d: Diagram) -> int:
    return d.component_count


# -- surgeries -------------------------------------------------------------


def _rebuild(
    d: Diagram,
    smoothed: Iterable[int] = (),
    keep_arcs: set[int] | None = None,
    loops_kept: int | None = None,
) -> Diagram:
    """Smooth a set of crossings and keep only some strand cycles.

    ``keep_arcs`` must be a union of whole cycles of the smoothed routing.
    Crossings where only one strand survives disappear, and each run of arcs
    joined this way takes the smallest id in the run.
    """
    crossings = d._crossings
    smoothed = set(smoothed)
    for cid in smoothed:
        if cid not in crossings:
            raise DiagramError(f"unknown crossing id {cid}")

    nxt: dict[int, int] = {}
    for cid, c in crossings.items():
        if cid in smoothed:
            nxt[c.in_over] = c.out_under
            nxt[c.in_under] = c.out_over
        else:
            nxt[c.in_under] = c.out_under
            nxt[c.in_over] = c.out_over

    def kept(arc: int) -> bool:
        return keep_arcs is None or arc in keep_arcs

    survivors = {
        cid
        for cid, c in crossings.items()
        if cid not in smoothed and kept(c.in_under) and kept(c.in_over)
    }
    head = d._head

    rename: dict[int, int] = {}
    visited: set[int] = set()
    for cid in survivors:
        c = crossings[cid]
        for start in (c.out_under, c.out_over):
            chain = [start]
            arc = start
            while head[arc][0] not in survivors:
                arc = nxt[arc]
                chain.append(arc)
            new_id = min(chain)
            visited.update(chain)
            # the run leaves through `start` and enters through its last arc
            rename[("out", start)] = new_id
            rename[("in", arc)] = new_id

    new_loops = 0
    for arc in nxt:
        if arc in visited or not kept(arc):
            continue
        new_loops += 1
        a = arc
        while a not in visited:
            visited.add(a)
            a = nxt[a]

    new_crossings = {}
    for cid in survivors:
        c = crossings[cid]
        new_crossings[cid] = Crossing(
            c.sign,
            rename[("in", c.in_under)],
            rename[("in", c.in_over)],
            rename[("out", c.out_under)],
            rename[("out", c.out_over)],
        )
    base_loops = d.free_loops if loops_kept is None else loops_kept
    return Diagram(new_crossings, base_loops + new_loops)


def smooth(d: Diagram, c: int) -> Diagram:
    """Oriented smoothing of crossing ``c``."""
    d.crossing(c)
    return _rebuild(d, (c,))


def smooth_all(d: Diagram, cids: Iterable[int]) -> Diagram:
    return _rebuild(d, cids)


def switch(d: Diagram, c: int) -> Diagram:
    """Exchange over and under at crossing ``c`` (negates its sign)."""
    crossings = d.crossings
    crossings[c] = d.crossing(c).switched()
    return Diagram(crossings, d.free_loops)


def with_sign(d: Diagram, c: int, sign: int) -> Diagram:
    return d if d.crossing(c).sign == sign else switch(d, c)


def conway_triple(d: Diagram, c: int) -> ConwayTriple:
    return ConwayTriple(with_sign(d, c, 1), with_sign(d, c, -1), smooth(d, c))


def restrict(d: Diagram, keep: Iterable[int]) -> Diagram:
    """Sub-diagram made of the components with the given ids."""
    keep = set(keep)
    cycles = d.cycles()
    n = len(cycles)
    for k in keep:
        if not 0 <= k < d.component_count:
            raise DiagramError(f"invalid component id {k}")
    arcs = {arc for k in keep if k < n for arc in cycles[k]}
    return _rebuild(d, (), arcs, sum(1 for k in keep if k >= n))


def _fresh_ids(d: Diagram) -> tuple[int, int]:
    next_cid = max(d._crossings, default=-1) + 1
    next_arc = max(d._head, default=-1) + 1
    return next_cid, next_arc


def _retarget_head(crossings: dict[int, Crossing], d: Diagram, arc: int, new: int) -> None:
    cid, role = d.head(arc)
    c = crossings[cid]
    if role == UNDER:
        crossings[cid] = dataclasses.replace(c, in_under=new)
    else:
        crossings[cid] = dataclasses.replace(c, in_over=new)


def insert_kink(d: Diagram, arc: int | None, s: int) -> Diagram:
    """Reidemeister I: add a curl of sign ``s`` on ``arc``.

    ``arc=None`` curls one of the free loops.  The strand meets the new
    crossing first as the over-strand.
    """
    if s not in (1, -1):
        raise DiagramError("kink sign must be +1 or -1")
    cid, fresh = _fresh_ids(d)
    crossings = d.crossings
    if arc is None:
        if d.free_loops < 1:
            raise DiagramError("no free loop to kink")
        loop, back = fresh, fresh + 1
        crossings[cid] = Crossing(s, in_under=loop, in_over=back, out_under=back, out_over=loop)
        return Diagram(crossings, d.free_loops - 1)
    if arc not in d._head:
        raise DiagramError(f"invalid arc {arc}")
    loop, after = fresh, fresh + 1
    _retarget_head(crossings, d, arc, after)
    crossings[cid] = Crossing(s, in_under=loop, in_over=arc, out_under=after, out_over=loop)
    return Diagram(crossings, d.free_loops)


# (parallel, sign of the first new crossing met along arc_x)
_R2_VARIANTS = {
    "a": (True, 1),
    "b": (True, -1),
    "c": (False, -1),
    "d": (False, 1),
}


def insert_r2(d: Diagram, arc_x: int, arc_y: int, variant: str) -> Diagram:
    """Reidemeister II: push ``arc_x`` over ``arc_y``, creating a bigon.

    Variants ``a``/``b`` are for strands running the same way through the
    shared face, ``c``/``d`` for strands running opposite ways.  In ``a`` and
    ``c`` the face lies on the right of ``arc_x`` (travelling along it), in
    ``b`` and ``d`` on its left.  To push ``arc_y`` over instead, swap the
    arguments and pick the variant seen from ``arc_y``.
    """
    try:
        parallel, first = _R2_VARIANTS[variant]
    except KeyError:
        raise DiagramError(f"unknown R2 variant {variant!r}") from None
    for arc in (arc_x, arc_y):
        if arc not in d._head:
            raise DiagramError(f"invalid arc {arc}")
    if arc_x == arc_y:
        raise DiagramError("R2 needs two distinct arcs")
    ca, fresh = _fresh_ids(d)
    cb = ca + 1
    x1, x2, y1, y2 = fresh, fresh + 1, fresh + 2, fresh + 3
    crossings = d.crossings
    _retarget_head(crossings, d, arc_x, x2)
    _retarget_head(crossings, d, arc_y, y2)
    if parallel:
        crossings[ca] = Crossing(first, in_under=arc_y, in_over=arc_x, out_under=y1, out_over=x1)
        crossings[cb] = Crossing(-first, in_under=y1, in_over=x1, out_under=y2, out_over=x2)
    else:
        crossings[ca] = Crossing(first, in_under=y1, in_over=arc_x, out_under=y2, out_over=x1)
        crossings[cb] = Crossing(-first, in_under=arc_y, in_over=x1, out_under=y1, out_over=x2)
    return Diagram(crossings, d.free_loops)


# -- canonical encoding ----------------------------------------------------


def _piece_code(d: Diagram, start: int) -> tuple[tuple[int, ...], frozenset[int]]:
    """Relabel the connected piece containing ``start`` by traversal order."""
    crossings = d._crossings
    arc_label: dict[int, int] = {}
    cross_label: dict[int, int] = {}
    order: list[int] = []
    queue = [start]
    qi = 0
    while qi < len(queue):
        s = queue[qi]
        qi += 1
        if s in arc_label:
            continue
        arc = s
        while arc not in arc_label:
            arc_label[arc] = len(arc_label)
            cid, role = d._head[arc]
            if cid not in cross_label:
                cross_label[cid] = len(cross_label)
                order.append(cid)
                c = crossings[cid]
                queue.append(c.in_over if role == UNDER else c.in_under)
            arc = d.next_arc(arc)
    code: list[int] = []
    for cid in order:
        c = crossings[cid]
        code += (
            c.sign,
            arc_label[c.in_under],
            arc_label[c.in_over],
            arc_label[c.out_under],
            arc_label[c.out_over],
        )
    return tuple(code), frozenset(arc_label)


def canonical_key(d: Diagram) -> tuple:
    """Relabeling-invariant encoding: equal keys mean isomorphic diagrams."""
    remaining = set(d._head)
    pieces = []
    loops = d.free_loops
    while remaining:
        seed = min(remaining)
        _, arcs = _piece_code(d, seed)
        best = min(_piece_code(d, a)[0] for a in arcs)
        pieces.append(best)
        remaining -= arcs
    pieces.sort()
    return (loops, tuple(pieces))
