"""The coloring invariant I(a, z, t) and the identities it satisfies.

For ``k >= 2``

    I_k(D) = sum over colorings C of  s(C) z^j(C) prod_i a^w(D_i) P(D_i)

where ``D_i`` is the part of the smoothed diagram colored ``i``, and
``I(D) = sum_k I_k(D) t^k``.
"""

from __future__ import annotations

import dataclasses
from typing import Callable, Iterable, Mapping

from . import coloring as col
from .braid import BraidWord, resolve_singular
from .diagram import Diagram, closure, conway_triple
from .homfly import SkeinBudget, SkeinCache, conway, homfly, homfly_da_at_one
from .laurent import ONE, ZERO, LaurentPoly, monomial

__all__ = [
    "InvariantReport",
    "I_k",
    "I",
    "I_slices",
    "I_k_at_a1",
    "I_k_by_enumeration",
    "link_invariant_J",
    "check_theorem4",
    "skein_check",
    "vassiliev_eval",
    "report",
]


def _require(d: Diagram) -> None:
    if d.is_empty():
        raise ValueError("empty diagram")


def _ordered_partition_sums(
    state: col.SmoothingState, f: Callable[[int], LaurentPoly], kmax: int
) -> list[LaurentPoly]:
    """``out[b]`` sums ``prod f(B_i)`` over admissible colorings by exactly b colors.

    A coloring by colors 1..b is an ordered partition into nonempty blocks;
    block 1 may only hold components with no required smaller neighbour among
    the remaining ones, and so on recursively.
    """
    n = state.n_components
    pred = [0] * n
    for u, v in state.edges:
        pred[v] |= 1 << u
    memo: dict[int, list[LaurentPoly]] = {0: [ONE]}

    def g(rest: int) -> list[LaurentPoly]:
        hit = memo.get(rest)
        if hit is not None:
            return hit
        sources = 0
        for v in range(n):
            if rest >> v & 1 and not pred[v] & rest:
                sources |= 1 << v
        out: list[LaurentPoly] = [ZERO] * (min(kmax, bin(rest).count("1")) + 1)
        block = sources
        while block:
            tail = g(rest & ~block)
            if len(tail) > 1 or tail[0]:
                fb = f(block)
                for b, poly in enumerate(tail):
                    if poly and b + 1 < len(out):
                        out[b + 1] = out[b + 1] + fb * poly
            block = (block - 1) & sources
        memo[rest] = out
        return out

    return g((1 << n) - 1)


def I_slices(
    d: Diagram,
    ks: Iterable[int] | None = None,
    *,
    mirrored: bool = False,
    budget: SkeinBudget | None = None,
    cache: SkeinCache | None = None,
) -> dict[int, LaurentPoly]:
    """``{k: I_k(d)}`` for the requested k (default: every k up to the vanishing bound)."""
    _require(d)
    bound = col.max_color_bound(d)
    wanted = sorted(set(range(2, bound + 1) if ks is None else ks))
    for k in wanted:
        if k < 2:
            raise ValueError("k must be at least 2")
    result = {k: ZERO for k in wanted}
    if not wanted:
        return result
    kmax = max(wanted)
    if cache is None:
        cache = SkeinCache()

    for state in col.smoothing_states(d, mirrored):
        if not state.feasible or state.n_components < 2:
            continue
        values: dict[int, LaurentPoly] = {}

        def f(block: int, state=state, values=values) -> LaurentPoly:
            v = values.get(block)
            if v is None:
                members = [i for i in range(state.n_components) if block >> i & 1]
                sub = col.block_diagram(d, state, members)
                v = homfly(sub, budget, cache).shift(a=sub.writhe)
                values[block] = v
            return v

        sums = _ordered_partition_sums(state, f, kmax)
        weight = monomial(state.sign, z=len(state.special))
        for k in wanted:
            if k < len(sums) and sums[k]:
                result[k] = result[k] + weight * sums[k]
    return result


def I_k(d: Diagram, k: int, **kwargs) -> LaurentPoly:
    return I_slices(d, [k], **kwargs)[k]


def I_k_by_enumeration(
    d: Diagram, k: int, *, mirrored: bool = False, budget: SkeinBudget | None = None
) -> LaurentPoly:
    """Same value as :func:`I_k`, summed coloring by coloring."""
    _require(d)
    total = ZERO
    for cls in col.enumerate_colorings(d, k, mirrored):
        for c in cls.members:
            term = monomial(col.sign(c, d), z=cls.j)
            for i in range(1, k + 1):
                sub = col.induced_diagram(c, d, i)
                term = term * homfly(sub, budget).shift(a=sub.writhe)
            total = total + term
    return total


def I(d: Diagram, **kwargs) -> LaurentPoly:
    total = ZERO
    for k, poly in I_slices(d, **kwargs).items():
        total = total + poly.shift(t=k)
    return total


def I_k_at_a1(d: Diagram, k: int, direct: bool = False, **kwargs) -> LaurentPoly:
    """``I_k`` at ``a = 1``; ``direct`` sums Conway products over colorings instead."""
    if not direct:
        return I_k(d, k, **kwargs).substitute_a_one()
    budget = kwargs.get("budget")
    mirrored = kwargs.get("mirrored", False)
    total = ZERO
    for cls in col.enumerate_colorings(d, k, mirrored):
        for c in cls.members:
            term = monomial(col.sign(c, d), z=cls.j)
            for i in range(1, k + 1):
                term = term * conway(col.induced_diagram(c, d, i), budget)
            total = total + term
    return total


def link_invariant_J(d: Diagram, **kwargs) -> LaurentPoly:
    """``I_2(1, z) - w(D) z Conway(L)``, a link invariant."""
    budget = kwargs.get("budget")
    i2 = I_k_at_a1(d, 2, **kwargs)
    return i2 - conway(d, budget).shift(z=1).scale(d.writhe)


def check_theorem4(d: Diagram, **kwargs) -> bool:
    """Whether ``J(D)`` equals ``z dP/da |_{a=1}``."""
    return link_invariant_J(d, **kwargs) == homfly_da_at_one(d, kwargs.get("budget")).shift(z=1)


def skein_check(d: Diagram, c: int, **kwargs) -> bool:
    """Whether ``I(D+) - I(D-) = z I(D0)`` at crossing ``c``."""
    triple = conway_triple(d, c)
    lhs = I(triple.d_plus, **kwargs) - I(triple.d_minus, **kwargs)
    return lhs == I(triple.d_zero, **kwargs).shift(z=1)


def vassiliev_eval(word: BraidWord, k: int, n: int, **kwargs) -> int:
    """Coefficient of z^n in ``I_k(1, z)`` extended to singular braids."""
    if k < 2:
        raise ValueError("k must be at least 2")
    total = 0
    for s, w in resolve_singular(word):
        total += s * I_k_at_a1(closure(w), k, **kwargs).coefficient(z=n)
    return total


@dataclasses.dataclass(frozen=True)
class InvariantReport:
    input: Mapping
    I: LaurentPoly
    per_k: Mapping[int, LaurentPoly]
    J: LaurentPoly
    homfly: LaurentPoly
    conway: LaurentPoly
    writhe: int
    crossings: int
    components: int

    def to_dict(self) -> dict:
        return {
            "input": dict(self.input),
            "crossings": self.crossings,
            "components": self.components,
            "writhe": self.writhe,
            "I": self.I.to_records(),
            "per_k": {str(k): p.to_records() for k, p in sorted(self.per_k.items())},
            "J": self.J.to_records(),
            "homfly": self.homfly.to_records(),
            "conway": self.conway.to_records(),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> InvariantReport:
        return cls(
            input=data["input"],
            I=LaurentPoly.from_records(data["I"]),
            per_k={int(k): LaurentPoly.from_records(v) for k, v in data["per_k"].items()},
            J=LaurentPoly.from_records(data["J"]),
            homfly=LaurentPoly.from_records(data["homfly"]),
            conway=LaurentPoly.from_records(data["conway"]),
            writhe=int(data["writhe"]),
            crossings=int(data["crossings"]),
            components=int(data["components"]),
        )


def report(
    d: Diagram,
    input_desc: Mapping | None = None,
    ks: Iterable[int] | None = None,
    *,
    budget: SkeinBudget | None = None,
) -> InvariantReport:
    cache = SkeinCache()
    slices = I_slices(d, budget=budget, cache=cache)
    total = ZERO
    for k, poly in slices.items():
        total = total + poly.shift(t=k)
    per_k = {k: p for k, p in slices.items() if p} if ks is None else {k: slices.get(k, ZERO) for k in ks}
    if ks is not None:
        extra = [k for k in ks if k not in slices]
        if extra:
            per_k.update(I_slices(d, extra, budget=budget, cache=cache))
    p = homfly(d, budget, cache)
    nabla = p.substitute_a_one()
    i2 = slices.get(2, ZERO).substitute_a_one()
    return InvariantReport(
        input=dict(input_desc or d.to_dict()),
        I=total,
        per_k=per_k,
        J=i2 - nabla.shift(z=1).scale(d.writhe),
        homfly=p,
        conway=nabla,
        writhe=d.writhe,
        crossings=d.crossing_count,
        components=d.component_count,
    )
