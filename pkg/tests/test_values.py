from fractions import Fraction

from hngame import fixtures
from hngame.values import (
    NEG_INF,
    POS_INF,
    ExtendedRationals,
    FiniteChain,
    FiniteLatticeValues,
    PrimeFinsets,
)


def test_extended_rationals_order_and_bounds():
    s = ExtendedRationals()
    assert s.leq(NEG_INF, Fraction(-1000))
    assert s.leq(Fraction(1000), POS_INF)
    assert s.compare(Fraction(1, 3), Fraction(2, 6)) == "eq"
    assert s.contains(Fraction(1, 2)) and s.contains(POS_INF)
    assert not s.contains("1/2")


def test_finite_chain_sup_inf():
    s = FiniteChain((0, 1, 2))
    assert s.sup([0, 2, 1]) == 2
    assert s.inf([2, 1]) == 1
    assert s.sup([]) == 0
    assert s.inf([]) == 2
    assert s.is_total


def test_finite_chain_arbitrary_labels():
    s = FiniteChain(("low", "mid", "high"))
    assert s.sup(["low", "high"]) == "high"
    assert s.leq("low", "mid")


def test_lattice_values_non_total():
    s = FiniteLatticeValues(fixtures.b2())
    assert not s.is_total
    assert s.compare("a", "b") == "incomparable"
    assert s.sup(["a", "b"]) == "top"
    assert s.inf(["a", "b"]) == "bot"
    assert s.sup([]) == "bot"


def test_prime_finsets_order():
    s = PrimeFinsets([3, 2])
    assert s.primes == (2, 3)
    assert s.bot == frozenset()
    assert s.top == frozenset({2, 3})
    assert s.leq(frozenset({2}), frozenset({3}))
    assert s.sup([frozenset({2}), frozenset({3})]) == frozenset({3})
    assert s.inf([]) == s.top


def test_dual_values():
    s = ExtendedRationals()
    d = s.dual()
    assert d.leq(Fraction(2), Fraction(1))
    assert d.sup([Fraction(1), Fraction(2)]) == 1
    assert d.top == NEG_INF and d.bot == POS_INF
    assert d.dual() is s
