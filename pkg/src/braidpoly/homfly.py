"""HOMFLY-PT and Conway polynomials by descending-diagram skein recursion.

Convention: ``a P(L+) - a^-1 P(L-) = z P(L0)`` and
``P(O_r) = ((a - a^-1)/z)^(r-1)``.

Components are walked from their smallest arc, in order of that arc.  The
first crossing met on its under-strand before its over-strand is resolved by

    P(D+) = a^-2 P(D-) + a^-1 z P(D0)
    P(D-) = a^2  P(D+) - a   z P(D0)

and a diagram with no such crossing is descending, hence an unlink.
"""

from __future__ import annotations

import dataclasses
import threading

from .diagram import Crossing, Diagram, canonical_key
from .laurent import LaurentPoly, monomial

__all__ = [
    "SkeinBudget",
    "SkeinBudgetExceeded",
    "SkeinCache",
    "homfly",
    "conway",
    "homfly_da_at_one",
    "unlink_value",
]

DEFAULT_MAX_NODES = 10**7

_DELTA = monomial(1, a=1, z=-1) - monomial(1, a=-1, z=-1)
_A2 = monomial(a=2)
_A_2 = monomial(a=-2)
_AZ = monomial(a=1, z=1)
_A_1Z = monomial(a=-1, z=1)


class SkeinBudgetExceeded(RuntimeError):
    """The skein tree grew past the configured node cap."""


@dataclasses.dataclass(frozen=True)
class SkeinBudget:
    max_nodes: int = DEFAULT_MAX_NODES

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be positive")


class SkeinCache:
    """Thread-safe memo table keyed by canonical diagram encoding."""

    def __init__(self):
        self._table: dict[tuple, LaurentPoly] = {}
        self._lock = threading.Lock()
        self.hits = 0

    def get(self, key):
        with self._lock:
            value = self._table.get(key)
            if value is not None:
                self.hits += 1
            return value

    def put(self, key, value: LaurentPoly) -> None:
        with self._lock:
            self._table.setdefault(key, value)

    def __len__(self) -> int:
        return len(self._table)


_unlink_cache: list[LaurentPoly] = [LaurentPoly.constant(1)]


def unlink_value(r: int) -> LaurentPoly:
    """HOMFLY-PT polynomial of the r-component unlink (r >= 1)."""
    if r < 1:
        raise ValueError("the empty link has no HOMFLY-PT polynomial")
    while len(_unlink_cache) < r:
        _unlink_cache.append(_unlink_cache[-1] * _DELTA)
    return _unlink_cache[r - 1]


class _Engine:
    def __init__(self, budget: SkeinBudget, cache: SkeinCache | None):
        self.max_nodes = budget.max_nodes
        self.cache = cache
        self.nodes = 0

    def evaluate(self, cr: dict[int, tuple], loops: int) -> LaurentPoly:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise SkeinBudgetExceeded(f"skein tree exceeded {self.max_nodes} nodes")
        if not cr:
            return unlink_value(loops)
        key = None
        if self.cache is not None:
            key = canonical_key(_to_diagram(cr, loops))
            hit = self.cache.get(key)
            if hit is not None:
                return hit

        head: dict[int, tuple[int, int]] = {}
        for cid, (_, iu, io, _, _) in cr.items():
            head[iu] = (cid, 0)
            head[io] = (cid, 1)

        bad = None
        met: set[int] = set()
        seen: set[int] = set()
        cycles = 0
        for start in sorted(head):
            if start in seen:
                continue
            cycles += 1
            arc = start
            while True:
                seen.add(arc)
                cid, over = head[arc]
                if cid not in met:
                    met.add(cid)
                    if not over:
                        bad = cid
                        break
                c = cr[cid]
                arc = c[4] if over else c[3]
                if arc == start:
                    break
            if bad is not None:
                break

        if bad is None:
            value = unlink_value(cycles + loops)
        else:
            sign = cr[bad][0]
            switched = dict(cr)
            s, iu, io, ou, oo = cr[bad]
            switched[bad] = (-s, io, iu, oo, ou)
            sm, sm_loops = _smooth(cr, bad)
            p_switch = self.evaluate(switched, loops)
            p_smooth = self.evaluate(sm, loops + sm_loops)
            if sign > 0:
                value = _A_2 * p_switch + _A_1Z * p_smooth
            else:
                value = _A2 * p_switch - _AZ * p_smooth

        if key is not None:
            self.cache.put(key, value)
        return value


def _smooth(cr: dict[int, tuple], cid: int) -> tuple[dict[int, tuple], int]:
    rest = dict(cr)
    _, iu, io, ou, oo = rest.pop(cid)
    joins = [[io, ou], [iu, oo]]
    loops = 0
    for n, (a_in, a_out) in enumerate(joins):
        if a_in == a_out:
            loops += 1
            continue
        # the run entering through a_in now continues where a_out went
        for other, c in rest.items():
            if c[1] == a_out:
                rest[other] = (c[0], a_in, c[2], c[3], c[4])
                break
            if c[2] == a_out:
                rest[other] = (c[0], c[1], a_in, c[3], c[4])
                break
        for later in joins[n + 1:]:
            if later[0] == a_out:
                later[0] = a_in
    return rest, loops


def _from_diagram(d: Diagram) -> dict[int, tuple]:
    return {
        cid: (c.sign, c.in_under, c.in_over, c.out_under, c.out_over)
        for cid, c in d.crossings.items()
    }


def _to_diagram(cr: dict[int, tuple], loops: int) -> Diagram:
    return Diagram({cid: Crossing(*c) for cid, c in cr.items()}, loops)


def homfly(
    d: Diagram,
    budget: SkeinBudget | None = None,
    cache: SkeinCache | None = None,
) -> LaurentPoly:
    """HOMFLY-PT polynomial of the link the diagram represents."""
    if d.is_empty():
        raise ValueError("empty diagram")
    engine = _Engine(budget or SkeinBudget(), cache)
    return engine.evaluate(_from_diagram(d), d.free_loops)


def conway(d: Diagram, budget: SkeinBudget | None = None, cache: SkeinCache | None = None) -> LaurentPoly:
    return homfly(d, budget, cache).substitute_a_one()


def homfly_da_at_one(
    d: Diagram, budget: SkeinBudget | None = None, cache: SkeinCache | None = None
) -> LaurentPoly:
    """``dP/da`` at ``a = 1``; multiply by z for the identity with the coloring invariant."""
    return homfly(d, budget, cache).derivative_a().substitute_a_one()
