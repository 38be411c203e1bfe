"""Canonical lattices and games used across the library and its tests."""

from __future__ import annotations

from fractions import Fraction

from .game import Game
from .order import as_bounded_lattice, build_poset
from .slopes import PotentialData, quotient_payoff
from .values import ExtendedRationals


def chain(k, names=None):
    """The k-element chain; default labels c0 < c1 < ... ."""
    if names is None:
        names = tuple(f"c{i}" for i in range(k))
    return as_bounded_lattice(
        build_poset(names, list(zip(names, names[1:])))
    )


def c2():
    return chain(2, ("bot", "top"))


def c3():
    return chain(3, ("bot", "a", "top"))


def b2():
    """Boolean lattice on two atoms: bot < a, b < top."""
    return as_bounded_lattice(
        build_poset(
            ("bot", "a", "b", "top"),
            [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")],
        )
    )


def b3():
    """Boolean lattice on three atoms (eight elements)."""
    atoms = ("x", "y", "z")
    names = ("bot", "x", "y", "z", "xy", "xz", "yz", "top")
    pairs = [("bot", a) for a in atoms]
    pairs += [
        ("x", "xy"), ("y", "xy"),
        ("x", "xz"), ("z", "xz"),
        ("y", "yz"), ("z", "yz"),
        ("xy", "top"), ("xz", "top"), ("yz", "top"),
    ]
    return as_bounded_lattice(build_poset(names, pairs))


def n5():
    """The pentagon: bot < a < b < top and bot < c < top, c incomparable to
    a and b.  The canonical non-modular lattice."""
    return as_bounded_lattice(
        build_poset(
            ("bot", "a", "b", "c", "top"),
            [("bot", "a"), ("a", "b"), ("b", "top"), ("bot", "c"), ("c", "top")],
        )
    )


def m3():
    """The diamond: three incomparable atoms between bot and top.  Modular
    but not distributive; also the subgroup lattice of the Klein four-group."""
    return as_bounded_lattice(
        build_poset(
            ("bot", "x", "y", "z", "top"),
            [("bot", "x"), ("bot", "y"), ("bot", "z"),
             ("x", "top"), ("y", "top"), ("z", "top")],
        )
    )


def g_mod():
    """The running example on B2, generated from potentials.

    Payoff table: mu(bot,a)=3, mu(bot,b)=1, mu(bot,top)=2, mu(a,top)=1,
    mu(b,top)=3.  Affine, slope-like, not semistable; its canonical
    filtration is bot < a < top.
    """
    potentials = PotentialData(
        rank_potential={"bot": 0, "a": 1, "b": 1, "top": 2},
        degree_potential={"bot": 0, "a": 3, "b": 1, "top": 4},
    )
    return quotient_payoff(b2(), potentials)


def constant_game(lattice, value=Fraction(0)):
    """The game with the same payoff on every strict pair."""
    payoff = {p: Fraction(value) for p in lattice.strict_pairs()}
    return Game(lattice, ExtendedRationals(), payoff)


def g_const():
    """The zero game on B2: semistable but not stable."""
    return constant_game(b2())


def steep_chain():
    """Three-chain with payoffs 2, 3/2, 1 going bot->a, bot->top, a->top.

    A quotient payoff (hence slope-like) that is not semistable; its only
    candidate Jordan-Hölder chain [top, bot] fails the strict-optimality
    condition at the middle element.
    """
    potentials = PotentialData(
        rank_potential={"bot": 0, "a": 1, "top": 2},
        degree_potential={"bot": 0, "a": 2, "top": 3},
    )
    return quotient_payoff(c3(), potentials)
