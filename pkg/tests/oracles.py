"""Independent reference computations used only by the tests.

``naive_homfly`` is a full skein tree with no memo table.  It walks
components from their largest arc, in decreasing order, and always resolves
the highest-numbered crossing that is met first on its under-strand.  It
shares no code with the engine beyond reading the diagram's crossings.

``arc_colorings`` colors every arc independently and classifies each
crossing from the four arc colors around it.
"""

from __future__ import annotations

import itertools

from braidpoly.diagram import Diagram, _rebuild
from braidpoly.homfly import homfly
from braidpoly.laurent import ONE, ZERO, LaurentPoly, monomial

DELTA = monomial(1, a=1, z=-1) - monomial(1, a=-1, z=-1)


def _unlink(r: int) -> LaurentPoly:
    out = ONE
    for _ in range(r - 1):
        out = out * DELTA
    return out


def _naive(cr: dict, loops: int) -> LaurentPoly:
    if not cr:
        return _unlink(loops)
    head = {}
    for cid, (_, iu, io, _, _) in cr.items():
        head[iu] = (cid, False)
        head[io] = (cid, True)
    first_over = {}
    seen = set()
    cycles = 0
    for start in sorted(head, reverse=True):
        if start in seen:
            continue
        cycles += 1
        arc = start
        while arc not in seen:
            seen.add(arc)
            cid, over = head[arc]
            first_over.setdefault(cid, over)
            arc = cr[cid][4] if over else cr[cid][3]
    bad = [cid for cid, over in first_over.items() if not over]
    if not bad:
        return _unlink(cycles + loops)
    c = max(bad)
    s, iu, io, ou, oo = cr[c]

    switched = dict(cr)
    switched[c] = (-s, io, iu, oo, ou)

    rest = {k: list(v) for k, v in cr.items() if k != c}
    extra = 0
    second = [iu, oo]
    for a_in, a_out in ((io, ou), second):
        # arc a_in now ends where a_out used to end
        if a_in == a_out:
            extra += 1
            continue
        for v in rest.values():
            for port in (1, 2):
                if v[port] == a_out:
                    v[port] = a_in
        if second[0] == a_out:
            second[0] = a_in
    smoothed = {k: tuple(v) for k, v in rest.items()}

    if s > 0:
        return monomial(a=-2) * _naive(switched, loops) + monomial(a=-1, z=1) * _naive(smoothed, loops + extra)
    return monomial(a=2) * _naive(switched, loops) - monomial(a=1, z=1) * _naive(smoothed, loops + extra)


def naive_homfly(d: Diagram) -> LaurentPoly:
    cr = {
        cid: (c.sign, c.in_under, c.in_over, c.out_under, c.out_over)
        for cid, c in d.crossings.items()
    }
    return _naive(cr, d.free_loops)


def all_words(m: int, max_len: int):
    letters = [g for i in range(1, m) for g in (i, -i)]
    for n in range(max_len + 1):
        yield from itertools.product(letters, repeat=n)


def arc_colorings(d: Diagram, k: int, mirrored: bool = False):
    """Yield ``(special crossings, arc colors, loop colors)`` for every valid arc coloring."""
    arcs = d.arcs()
    crossings = d.crossings
    for colors in itertools.product(range(1, k + 1), repeat=len(arcs) + d.free_loops):
        if len(set(colors)) != k:
            continue
        col = dict(zip(arcs, colors))
        special = []
        valid = True
        for cid, c in crossings.items():
            iu, io, ou, oo = col[c.in_under], col[c.in_over], col[c.out_under], col[c.out_over]
            if iu == ou and io == oo:
                continue
            if io == ou and iu == oo and ((io > iu) if mirrored else (io < iu)):
                special.append(cid)
                continue
            valid = False
            break
        if valid:
            yield frozenset(special), col, colors[len(arcs):]


def brute_I_k(d: Diagram, k: int, mirrored: bool = False) -> LaurentPoly:
    total = ZERO
    for special, col, loop_colors in arc_colorings(d, k, mirrored):
        s = 1
        for cid in special:
            s *= d.crossing(cid).sign
        term = monomial(s, z=len(special))
        for i in range(1, k + 1):
            keep = {a for a, c in col.items() if c == i}
            sub = _rebuild(d, special, keep, sum(1 for c in loop_colors if c == i))
            term = term * homfly(sub).shift(a=sub.writhe)
        total = total + term
    return total
