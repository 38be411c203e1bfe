import pytest

from hngame.abelian import (
    FiniteAbelianGroup,
    associated_primes,
    coprimary_filtration,
    coprimary_game,
    enumerate_coprimary_filtrations,
    iter_invariant_factor_groups,
    mu_a_least_prime_check,
    semistable_restriction_check,
    subgroup_lattice,
)
from hngame.errors import TooLarge, TrivialModule
from hngame.filtration import validate_hn
from hngame.game import is_semistable
from hngame.order import is_modular

from oracles import divisors, prime_divisors


def test_z12_subgroup_lattice_is_divisor_lattice():
    sl = subgroup_lattice(FiniteAbelianGroup([12]))
    assert sl.lattice.n == len(divisors(12))
    assert sorted(len(s) for s in sl.subgroups) == divisors(12)


def test_klein_four_subgroups_form_m3():
    sl = subgroup_lattice(FiniteAbelianGroup([2, 2]))
    assert sl.lattice.n == 5
    orders = sorted(len(s) for s in sl.subgroups)
    assert orders == [1, 2, 2, 2, 4]
    atoms = [i for i in range(5) if len(sl.subgroups[i]) == 2]
    for i in atoms:
        for j in atoms:
            if i != j:
                assert not sl.lattice.le(i, j)


def test_prime_group_has_two_subgroups():
    sl = subgroup_lattice(FiniteAbelianGroup([7]))
    assert sl.lattice.n == 2


def test_cyclic_subgroup_counts_match_divisors():
    for n in (2, 6, 8, 9, 12, 30, 36, 48):
        sl = subgroup_lattice(FiniteAbelianGroup([n]))
        assert sl.lattice.n == len(divisors(n))


def test_subgroup_lattice_guard():
    with pytest.raises(TooLarge):
        subgroup_lattice(FiniteAbelianGroup([211]))


def test_subgroup_lattices_modular():
    for orders in ([12], [2, 2], [4, 2], [2, 2, 2], [2, 9], [6, 6]):
        sl = subgroup_lattice(FiniteAbelianGroup(orders))
        assert is_modular(sl.lattice)


def test_associated_primes_examples():
    assert associated_primes(FiniteAbelianGroup([12])) == {2, 3}
    assert associated_primes(FiniteAbelianGroup([8])) == {2}
    for n in (4, 6, 15, 30, 48):
        assert associated_primes(FiniteAbelianGroup([n])) == prime_divisors(n)


def test_associated_primes_of_quotient():
    g = FiniteAbelianGroup([12])
    sl = subgroup_lattice(g)
    h3 = next(i for i, s in enumerate(sl.subgroups) if len(s) == 3)
    q = sl.quotient(sl.lattice.top, h3)
    assert q.order == 4
    assert associated_primes(q) == {2}


def test_trivial_quotient_rejected():
    g = FiniteAbelianGroup([4])
    sl = subgroup_lattice(g)
    with pytest.raises(TrivialModule):
        associated_primes(sl.quotient(sl.lattice.bot, sl.lattice.bot))


def test_coprimary_game_payoffs_z12():
    g = FiniteAbelianGroup([12])
    sl = subgroup_lattice(g)
    game = coprimary_game(g, sl)
    l = sl.lattice
    assert game.payoff[(l.bot, l.top)] == {2, 3}
    h3 = l.index("H3")
    assert game.payoff[(l.bot, h3)] == {3}
    h2 = l.index("H2")
    assert game.payoff[(h2, l.top)] == {2, 3}


def test_p_group_game_is_constant():
    for orders in ([8], [2, 2]):
        g = FiniteAbelianGroup(orders)
        game = coprimary_game(g)
        p = min(associated_primes(g))
        assert all(v == {p} for v in game.payoff.values())


def test_mu_a_least_prime_z12_pairs():
    g = FiniteAbelianGroup([12])
    sl = subgroup_lattice(g)
    game = coprimary_game(g, sl)
    t = game.tables()
    l = sl.lattice
    assert t.mu_a[(l.bot, l.top)] == frozenset({2})
    assert t.mu_a[(l.bot, l.index("H3"))] == frozenset({3})
    assert mu_a_least_prime_check(g, game)


def test_mu_a_least_prime_z36():
    assert mu_a_least_prime_check(FiniteAbelianGroup([4, 9]))


def test_coprimary_filtration_z12():
    report = coprimary_filtration(FiniteAbelianGroup([12]))
    assert report.step_labels == ("0", "H3", "G")
    assert report.step_primes == (3, 2)
    assert report.valid
    # Quotient orders along the steps: 3 then 4.
    sl = report.subgroup_lattice
    steps = report.hn_report.filtration.steps
    assert [len(sl.subgroups[i]) for i in steps] == [1, 3, 12]


def test_coprimary_filtration_p_group_single_step():
    report = coprimary_filtration(FiniteAbelianGroup([8]))
    assert report.step_labels == ("0", "G")
    assert report.step_primes == (2,)
    assert report.valid


def test_coprimary_filtration_z2_x_z9():
    report = coprimary_filtration(FiniteAbelianGroup([2, 9]))
    assert report.step_primes == (3, 2)
    sl = report.subgroup_lattice
    steps = report.hn_report.filtration.steps
    assert [len(sl.subgroups[i]) for i in steps] == [1, 9, 18]


def test_coprimary_uniqueness_oracle_z12():
    g = FiniteAbelianGroup([12])
    sl = subgroup_lattice(g)
    found = enumerate_coprimary_filtrations(sl)
    assert len(found) == 1
    steps, primes = found[0]
    report = coprimary_filtration(g)
    assert steps == report.hn_report.filtration.steps
    assert primes == report.step_primes


def test_coprimary_is_valid_hn_filtration():
    # An enumerated coprimary filtration is a valid filtration of the game.
    g = FiniteAbelianGroup([2, 9])
    sl = subgroup_lattice(g)
    game = coprimary_game(g, sl)
    for steps, _ in enumerate_coprimary_filtrations(sl):
        assert validate_hn(game, steps).valid


def test_semistable_iff_coprimary():
    for group in iter_invariant_factor_groups(20):
        game = coprimary_game(group)
        assert is_semistable(game) == (len(associated_primes(group)) == 1)


def test_semistable_restriction_check_small_groups():
    for orders in ([12], [4, 3], [2, 2], [18]):
        assert semistable_restriction_check(FiniteAbelianGroup(orders))


def test_invariant_factor_enumeration():
    groups = iter_invariant_factor_groups(48)
    specs = [g.cyclic_orders for g in groups]
    assert len(specs) == len(set(specs))
    assert (12,) in specs
    assert (2, 2, 12) in specs
    assert (2, 4) in specs
    assert all(1 < len(s) or s[0] <= 48 for s in specs)
    for s in specs:
        prod = 1
        for d in s:
            prod *= d
        assert prod <= 48
        for a, b in zip(s, s[1:]):
            assert b % a == 0
    # Iso classes: 47 cyclic, 22 with two factors, 8 with three.
    assert len(specs) == 77


def test_isomorphic_presentations_give_equal_games():
    # Z/4 x Z/3 and Z/12 are the same group; the derived games coincide
    # because subgroup labels depend only on subgroup orders here.
    assert coprimary_game(FiniteAbelianGroup([4, 3])) == coprimary_game(
        FiniteAbelianGroup([12])
    )


def test_lemma_5_11_worked_pairs_z12():
    from hngame.game import interval_semistable

    g = FiniteAbelianGroup([12])
    sl = subgroup_lattice(g)
    game = coprimary_game(g, sl)
    l = sl.lattice
    # Quotient of order 6 has two associated primes: both sides unstable.
    h6 = l.index("H6")
    assert not interval_semistable(game, l.bot, h6)
    assert not is_semistable(coprimary_game(sl.quotient(h6, l.bot)))
    # Prime quotient H4/H2 is coprimary: both sides semistable.
    h2, h4 = l.index("H2"), l.index("H4")
    assert interval_semistable(game, h2, h4)
    assert is_semistable(coprimary_game(sl.quotient(h4, h2)))
