from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidpoly.braid import BraidWord, random_word
from braidpoly.diagram import (
    Crossing,
    Diagram,
    DiagramError,
    braid_arc,
    canonical_key,
    closure,
    components,
    conway_triple,
    insert_kink,
    insert_r2,
    restrict,
    smooth,
    smooth_all,
    switch,
    unlink,
    writhe,
)
from braidpoly.homfly import conway, homfly
from braidpoly.invariant import I, I_k
from braidpoly.laurent import ONE, monomial


def cl(m, gens):
    return closure(BraidWord.from_ints(m, gens))


TREFOIL = cl(2, [1, 1, 1])
HOPF = cl(2, [1, 1])
KINK = cl(2, [1])

words = st.integers(2, 4).flatmap(
    lambda m: st.lists(
        st.integers(1, m - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=6
    ).map(lambda g: BraidWord.from_ints(m, g))
)


def test_closure_examples():
    assert (TREFOIL.crossing_count, components(TREFOIL), writhe(TREFOIL)) == (3, 1, 3)
    e = closure(BraidWord(1, ()))
    assert (e.crossing_count, e.free_loops) == (0, 1)
    n = cl(2, [-1])
    assert (n.crossing_count, components(n), writhe(n)) == (1, 1, -1)


def test_closure_over_strand_convention():
    c = KINK.crossing(0)
    # strand entering at position 1 is the over-strand of sigma_1
    assert c.in_over == braid_arc(BraidWord.from_ints(2, [1]), 0, 1)
    assert c.sign == 1
    assert cl(2, [-1]).crossing(0).in_under == braid_arc(BraidWord.from_ints(2, [-1]), 0, 1)


def test_closure_rejects_singular():
    from braidpoly.braid import parse

    with pytest.raises(DiagramError):
        closure(parse("*1", 2))


def test_writhe_and_components_examples():
    assert writhe(unlink(2)) == 0
    assert writhe(cl(3, [1, -2])) == 0
    assert components(closure(BraidWord(3, ()))) == 3
    assert components(HOPF) == 2


@settings(max_examples=60, deadline=None)
@given(words)
def test_components_follow_permutation(w):
    perm = w.permutation()
    seen, cycles = set(), 0
    for p in range(w.strands):
        if p not in seen:
            cycles += 1
            while p not in seen:
                seen.add(p)
                p = perm[p]
    assert components(closure(w)) == cycles


def test_smooth_examples():
    s = smooth(TREFOIL, 1)
    assert (s.crossing_count, components(s)) == (2, 2)
    k = smooth(KINK, 0)
    assert (k.crossing_count, k.free_loops) == (0, 2)
    a = smooth_all(TREFOIL, [0, 1, 2])
    assert (a.crossing_count, a.free_loops) == (0, 2)
    with pytest.raises(DiagramError):
        smooth(TREFOIL, 7)


def test_smooth_keeps_other_ids():
    s = smooth(TREFOIL, 1)
    assert sorted(s.crossings) == [0, 2]
    assert s.crossing(0).sign == 1


@settings(max_examples=80, deadline=None)
@given(words, st.randoms(use_true_random=False))
def test_smooth_changes_components_by_one(w, rnd):
    d = closure(w)
    if not d.crossing_count:
        return
    c = rnd.choice(d.crossing_ids())
    x = d.crossing(c)
    comp = d.component_of_arc()
    s = smooth(d, c)
    assert s.crossing_count == d.crossing_count - 1
    if comp[x.in_under] == comp[x.in_over]:
        assert components(s) == components(d) + 1
    else:
        assert components(s) == components(d) - 1


def test_switch_examples():
    assert canonical_key(switch(KINK, 0)) == canonical_key(cl(2, [-1]))
    assert switch(switch(TREFOIL, 2), 2) == TREFOIL
    assert switch(TREFOIL, 0).crossing(0).sign == -1
    assert conway(switch(TREFOIL, 1)) == ONE
    with pytest.raises(DiagramError):
        switch(TREFOIL, 3)


def test_conway_triple_examples():
    for c in range(3):
        t = conway_triple(TREFOIL, c)
        assert t.d_plus == TREFOIL
        assert homfly(t.d_minus) == ONE
        assert canonical_key(t.d_zero) == canonical_key(HOPF)
        assert t.d_zero.crossing_count == 2
    t = conway_triple(KINK, 0)
    assert t.d_plus == KINK
    assert canonical_key(t.d_minus) == canonical_key(cl(2, [-1]))
    assert canonical_key(t.d_zero) == canonical_key(unlink(2))
    t = conway_triple(cl(2, [-1, 1]), 0)
    assert t.d_minus == cl(2, [-1, 1])
    assert t.d_plus.crossing(0).sign == 1


def test_restrict_examples():
    s = smooth(TREFOIL, 0)
    for k in range(2):
        r = restrict(s, [k])
        assert (r.crossing_count, r.component_count) == (0, 1)
    assert restrict(TREFOIL, [0]) == TREFOIL
    two = cl(3, [1, 2, -1])
    assert restrict(two, range(two.component_count)) == two
    for k in range(2):
        r = restrict(HOPF, [k])
        assert (r.crossing_count, r.free_loops) == (0, 1)
    with pytest.raises(DiagramError):
        restrict(HOPF, [2])


def test_restrict_keeps_self_crossings():
    # component 0 links with itself through sigma_1^2 on the first two strands
    d = cl(3, [1, 1, 1, 2, 2])
    assert d.component_count == 2
    cyc = d.cycles()
    sizes = [restrict(d, [k]).crossing_count for k in range(2)]
    assert sorted(sizes) == [0, 3]
    assert all(restrict(d, [k]).component_count == 1 for k in range(len(cyc)))


def test_free_loop_restriction():
    d = Diagram(KINK.crossings, 2)
    assert restrict(d, [1]) == unlink(1)
    assert restrict(d, [0]) == KINK


def test_insert_kink_examples():
    for s in (1, -1):
        k = insert_kink(unlink(1), None, s)
        assert (k.writhe, k.component_count, k.crossing_count) == (s, 1, 1)
        assert homfly(k) == ONE
    assert I_k(insert_kink(unlink(1), None, 1), 2) == monomial(z=1)
    with pytest.raises(DiagramError):
        insert_kink(TREFOIL, 99, 1)
    with pytest.raises(DiagramError):
        insert_kink(TREFOIL, None, 1)
    with pytest.raises(DiagramError):
        insert_kink(TREFOIL, 0, 2)


@settings(max_examples=40, deadline=None)
@given(words, st.randoms(use_true_random=False), st.sampled_from([1, -1]))
def test_insert_kink_preserves_link(w, rnd, s):
    d = closure(w)
    arc = rnd.choice(d.arcs()) if d.arcs() else None
    k = insert_kink(d, arc, s)
    assert k.writhe == d.writhe + s
    assert k.component_count == d.component_count
    assert homfly(k) == homfly(d)


def test_insert_r2_matches_word_insertion():
    w = BraidWord.from_ints(2, [-1])
    d = closure(w)
    e = insert_r2(d, braid_arc(w, 1, 1), braid_arc(w, 1, 2), "a")
    assert e.crossing_count == 3 and e.writhe == d.writhe
    word_version = cl(2, [-1, 1, -1])
    assert I(e) == I(word_version) == I(d)
    assert homfly(e) == homfly(d)


def test_insert_r2_errors():
    with pytest.raises(DiagramError):
        insert_r2(TREFOIL, 0, 0, "a")
    with pytest.raises(DiagramError):
        insert_r2(TREFOIL, 0, 1, "e")
    with pytest.raises(DiagramError):
        insert_r2(TREFOIL, 0, 42, "c")


@pytest.mark.parametrize("variant", "abcd")
def test_insert_r2_preserves_homfly(variant):
    from braidpoly.verify import _r2_sites

    rng = random.Random(variant)
    done = 0
    for _ in range(30):
        w = random_word(rng.randint(2, 4), rng.randint(1, 5), rng)
        d = closure(w)
        for x, y, v in _r2_sites(w, rng):
            if v != variant:
                continue
            e = insert_r2(d, x, y, v)
            assert e.crossing_count == d.crossing_count + 2
            assert e.writhe == d.writhe
            assert homfly(e) == homfly(d)
            done += 1
    assert done >= 10


def test_canonical_key_relabeling():
    d = TREFOIL
    shift = {a: a + 100 for a in d.arcs()}
    relabeled = Diagram({cid * 7 + 1: c.renamed(shift) for cid, c in d.crossings.items()})
    assert canonical_key(relabeled) == canonical_key(d)
    assert canonical_key(cl(3, [1, 2])) == canonical_key(cl(3, [2, 1]))
    assert canonical_key(TREFOIL) != canonical_key(switch(TREFOIL, 0))
    assert canonical_key(unlink(2)) != canonical_key(unlink(3))


def test_file_formats_round_trip():
    braid_form = {"strands": 2, "word": [1, 1, 1]}
    assert Diagram.from_dict(braid_form) == TREFOIL
    data = json.loads(json.dumps(TREFOIL.to_dict()))
    assert Diagram.from_dict(data) == TREFOIL
    explicit = {"free_loops": 1, "crossings": [{"sign": 1, "in_under": 1, "in_over": 0, "out_under": 0, "out_over": 1}]}
    d = Diagram.from_dict(explicit)
    assert (d.crossing_count, d.free_loops, d.writhe) == (1, 1, 1)


@pytest.mark.parametrize(
    "data",
    [
        {"strands": 2, "word": [3]},
        {"word": [1]},
        {"crossings": [{"sign": 1, "in_under": 1, "in_over": 0, "out_under": 0}]},
        {"crossings": [{"sign": 2, "in_under": 1, "in_over": 0, "out_under": 0, "out_over": 1}]},
        {"crossings": [{"sign": 1, "in_under": 1, "in_over": 1, "out_under": 0, "out_over": 2}]},
        {"free_loops": -1},
    ],
)
def test_file_format_errors(data):
    with pytest.raises(DiagramError):
        Diagram.from_dict(data)


def test_empty_diagram_is_a_value():
    e = Diagram()
    assert e.is_empty() and e.component_count == 0
    with pytest.raises(ValueError):
        I(e)
    with pytest.raises(ValueError):
        homfly(e)


def test_diagrams_are_immutable():
    c = TREFOIL.crossings
    c.clear()
    assert TREFOIL.crossing_count == 3
    with pytest.raises(Exception):
        Crossing(1, 0, 1, 2, 3).sign = -1
