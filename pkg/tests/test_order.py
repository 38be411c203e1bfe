import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hngame import fixtures
from hngame.errors import (
    CycleError,
    NoBounds,
    NotALattice,
    NotStrict,
    UnknownLabel,
)
from hngame.order import (
    as_bounded_lattice,
    build_poset,
    interval,
    is_modular,
    lex_finset_order,
    linear_extension,
    total_interval,
)


def test_singleton_poset():
    p = build_poset(["x"], [])
    assert p.n == 1
    assert p.le(0, 0)


def test_b2_incomparable_atoms():
    l = fixtures.b2()
    a, b = l.index("a"), l.index("b")
    assert not l.le(a, b) and not l.le(b, a)
    assert l.meet[a][b] == l.bot
    assert l.join[a][b] == l.top


def test_cycle_detected():
    with pytest.raises(CycleError):
        build_poset(["x", "y"], [("x", "y"), ("y", "x")])


def test_unknown_label():
    with pytest.raises(UnknownLabel):
        build_poset(["x"], [("x", "ghost")])


def test_duplicate_labels_rejected():
    with pytest.raises(ValueError):
        build_poset(["x", "x"], [])


def test_antichain_has_no_bounds():
    p = build_poset(["a", "b"], [])
    with pytest.raises(NoBounds):
        as_bounded_lattice(p)


def test_pentagon_is_a_lattice_but_not_modular():
    # bot < a < b < top, bot < c < top with c incomparable to a and b: every
    # pair has a glb and lub (checked by construction), yet modularity fails.
    l = fixtures.n5()
    for x, y in itertools.combinations(range(l.n), 2):
        assert l.le(l.meet[x][y], x) and l.le(l.meet[x][y], y)
        assert l.le(x, l.join[x][y]) and l.le(y, l.join[x][y])
    assert not is_modular(l)


def test_not_a_lattice_error_names_pair():
    # Two maximal elements over two minimal ones: bounded after adding caps?
    # bot < {a, b} < {c, d} < top with a,b below both c,d: (a, b) has two
    # minimal upper bounds, so no lub.
    p = build_poset(
        ["bot", "a", "b", "c", "d", "top"],
        [("bot", "a"), ("bot", "b"),
         ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"),
         ("c", "top"), ("d", "top")],
    )
    with pytest.raises(NotALattice) as err:
        as_bounded_lattice(p)
    assert err.value.pair in {("a", "b"), ("c", "d")}


@pytest.mark.parametrize(
    "make,expected",
    [(fixtures.b2, True), (fixtures.m3, True), (fixtures.n5, False),
     (fixtures.b3, True), (fixtures.c3, True)],
)
def test_modularity_on_fixtures(make, expected):
    assert is_modular(make()) is expected


def test_meet_join_agree_with_recomputed_bounds():
    for make in (fixtures.b2, fixtures.b3, fixtures.n5, fixtures.m3, fixtures.c3):
        l = make()
        for x in range(l.n):
            for y in range(l.n):
                lower = [z for z in range(l.n) if l.le(z, x) and l.le(z, y)]
                glb = [z for z in lower if all(l.le(w, z) for w in lower)]
                assert glb == [l.meet[x][y]]
                upper = [z for z in range(l.n) if l.le(x, z) and l.le(y, z)]
                lub = [z for z in upper if all(l.le(z, w) for w in upper)]
                assert lub == [l.join[x][y]]


def test_interval_membership_and_bounds():
    l = fixtures.b2()
    total = total_interval(l)
    assert total.member_indices() == tuple(range(4))
    ideal = interval(l, l.bot, l.index("a"))
    assert ideal.member_indices() == (l.bot, l.index("a"))
    sub = ideal.as_lattice()
    assert sub.names == ("bot", "a")
    assert sub.n == 2


def test_interval_of_chain_upper_part():
    l = fixtures.c3()
    ival = interval(l, l.index("a"), l.top)
    assert ival.member_indices() == (l.index("a"), l.top)


def test_interval_requires_strict_pair():
    l = fixtures.b2()
    with pytest.raises(NotStrict):
        interval(l, l.top, l.bot)
    with pytest.raises(NotStrict):
        interval(l, l.index("a"), l.index("a"))


def test_interval_inherits_meets_and_joins():
    for make in (fixtures.b2, fixtures.b3, fixtures.m3, fixtures.n5):
        l = make()
        for lo, hi in l.strict_pairs():
            ival = interval(l, lo, hi)
            sub = ival.as_lattice()
            amb = ival.member_indices()
            for i in range(sub.n):
                for j in range(sub.n):
                    assert amb[sub.meet[i][j]] == l.meet[amb[i]][amb[j]]
                    assert amb[sub.join[i][j]] == l.join[amb[i]][amb[j]]


def test_linear_extension_chain_is_identity():
    l = fixtures.c3()
    assert linear_extension(l.poset) == (0, 1, 2)


def test_linear_extension_tie_break_by_input_index():
    p = build_poset(["a", "b"], [])
    assert linear_extension(p) == (0, 1)


def test_linear_extension_b2():
    l = fixtures.b2()
    order = linear_extension(l.poset)
    assert order == (l.bot, l.index("a"), l.index("b"), l.top)
    position = {e: k for k, e in enumerate(order)}
    for x, y in l.strict_pairs():
        assert position[x] < position[y]


def test_lex_finset_small_base():
    fo = lex_finset_order([2, 3])
    ordered = fo.all_subsets()
    assert ordered == [
        frozenset(),
        frozenset({2}),
        frozenset({3}),
        frozenset({2, 3}),
    ]


def test_lex_finset_singletons_follow_base():
    fo = lex_finset_order([2, 3, 5])
    assert fo.lt(frozenset({2}), frozenset({3}))
    assert fo.lt(frozenset({3}), frozenset({5}))


def test_lex_finset_max_first():
    fo = lex_finset_order([2, 3, 5])
    assert fo.lt(frozenset({3}), frozenset({2, 5}))


def test_lex_finset_extends_inclusion_exhaustively():
    base = [2, 3, 5, 7, 11]
    fo = lex_finset_order(base)
    subsets = [
        frozenset(c)
        for r in range(len(base) + 1)
        for c in itertools.combinations(base, r)
    ]
    for a in subsets:
        for b in subsets:
            if a < b:
                assert fo.lt(a, b)
            if a <= b:
                assert fo.leq(a, b)


@given(
    st.sets(st.integers(min_value=0, max_value=9), max_size=6),
    st.sets(st.integers(min_value=0, max_value=9), max_size=6),
    st.sets(st.integers(min_value=0, max_value=9), max_size=6),
)
@settings(max_examples=200)
def test_lex_finset_is_a_total_order(a, b, c):
    fo = lex_finset_order(range(10))
    a, b, c = frozenset(a), frozenset(b), frozenset(c)
    # Trichotomy.
    assert (fo.compare(a, b) == 0) == (a == b)
    assert fo.leq(a, b) or fo.leq(b, a)
    # Transitivity.
    if fo.leq(a, b) and fo.leq(b, c):
        assert fo.leq(a, c)
    # Inclusion extension and empty-least.
    if a <= b:
        assert fo.leq(a, b)
    assert fo.leq(frozenset(), a)


def test_absorption_laws():
    for make in (fixtures.b2, fixtures.b3, fixtures.n5, fixtures.m3, fixtures.c3):
        l = make()
        for x in range(l.n):
            for y in range(l.n):
                assert l.meet[x][l.join[x][y]] == x
                assert l.join[x][l.meet[x][y]] == x


def test_linear_extension_property_on_all_fixtures():
    for make in (fixtures.b2, fixtures.b3, fixtures.n5, fixtures.m3, fixtures.c3):
        p = make().poset
        position = {e: k for k, e in enumerate(linear_extension(p))}
        for i in range(p.n):
            for j in range(p.n):
                if p.lt(i, j):
                    assert position[i] < position[j]
