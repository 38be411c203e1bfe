"""Jordan-Hölder filtrations of semistable games.

A Jordan-Hölder filtration descends top = y_0 > y_1 > ... > y_n = bot where
every step pays the whole-game value, mu(y_i, y_{i-1}) = mu(bot, top), and
beats every intermediate deviation strictly: mu(y_i, z) < mu(y_i, y_{i-1})
for y_i < z < y_{i-1}.  Both step conditions are local to the step, so a
backtracking descent enumerates valid filtrations exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import JHNotFound, MalformedFiltration, PreconditionFailed, TooLarge
from .game import interval_stable, is_affine, is_semistable, is_slope_like
from .order import _iter_bits, is_modular

MAX_ENUMERATION_ELEMENTS = 16


@dataclass(frozen=True)
class JHFiltration:
    """A strict top-to-bot chain; length is the number of steps."""

    steps: tuple

    @property
    def length(self):
        return len(self.steps) - 1

    def labels(self, lattice):
        return tuple(lattice.names[i] for i in self.steps)


@dataclass(frozen=True)
class JHValidation:
    """Per-step outcome of the two defining conditions.

    ``step_payoff_matches[i]`` is condition one for the step from steps[i] to
    steps[i+1]; ``step_strictly_optimal[i]`` is condition two, with
    ``deviation_witness[i]`` naming a violating intermediate element if any.
    """

    valid: bool
    step_payoff_matches: tuple
    step_strictly_optimal: tuple
    deviation_witness: tuple


def _game_value(g):
    return g.payoff[(g.lattice.bot, g.lattice.top)]


def _step_ok(g, lower, upper, total):
    """Both step conditions for a candidate step upper > lower."""
    if g.payoff[(lower, upper)] != total:
        return False
    lt = g.values.lt
    ref = g.payoff[(lower, upper)]
    for z in _iter_bits(g.lattice.strictly_between(lower, upper)):
        if not lt(g.payoff[(lower, z)], ref):
            return False
    return True


def _check_jh_preconditions(g, modular_affine=False):
    if not is_semistable(g):
        raise PreconditionFailed("game is semistable")
    if not g.values.is_total:
        raise PreconditionFailed("value lattice is totally ordered")
    if not is_slope_like(g):
        raise PreconditionFailed("payoff is slope-like")
    if _game_value(g) == g.values.top:
        raise PreconditionFailed(
            "whole-game payoff differs from the top value of S"
        )
    if modular_affine:
        if not is_modular(g.lattice):
            raise PreconditionFailed("lattice is modular")
        if not is_affine(g):
            raise PreconditionFailed("payoff is affine")


def find_jh(g):
    """Find one Jordan-Hölder filtration by backtracking descent from top.

    Candidates at each level are tried in increasing element index, so the
    result is deterministic.  Under the checked hypotheses existence is
    guaranteed; exhausting the search raises the :class:`JHNotFound`
    diagnostic rather than returning silently.
    """
    _check_jh_preconditions(g)
    l = g.lattice
    total = _game_value(g)
    chain = [l.top]

    def descend():
        upper = chain[-1]
        if upper == l.bot:
            return True
        for lower in _iter_bits(l.poset.down[upper] & ~(1 << upper)):
            if _step_ok(g, lower, upper, total):
                chain.append(lower)
                if descend():
                    return True
                chain.pop()
        return False

    if not descend():
        raise JHNotFound(
            "no Jordan-Hölder filtration found despite the hypotheses"
        )
    return JHFiltration(tuple(chain))


def _as_steps(g, f):
    steps = tuple(f.steps if isinstance(f, JHFiltration) else f)
    l = g.lattice
    if len(steps) < 2:
        raise MalformedFiltration("a filtration has at least two steps")
    if steps[0] != l.top:
        raise MalformedFiltration("filtration must start at top")
    if steps[-1] != l.bot:
        raise MalformedFiltration("filtration must end at bot")
    for a, b in zip(steps, steps[1:]):
        if not l.lt(b, a):
            raise MalformedFiltration(
                f"steps {l.names[a]!r}, {l.names[b]!r} do not strictly decrease"
            )
    return steps


def validate_jh(g, f):
    """Check both step conditions exhaustively, with per-step diagnostics."""
    steps = _as_steps(g, f)
    total = _game_value(g)
    lt = g.values.lt
    cond1, cond2, witness = [], [], []
    for upper, lower in zip(steps, steps[1:]):
        step_value = g.payoff[(lower, upper)]
        cond1.append(step_value == total)
        bad = None
        for z in _iter_bits(g.lattice.strictly_between(lower, upper)):
            if not lt(g.payoff[(lower, z)], step_value):
                bad = z
                break
        cond2.append(bad is None)
        witness.append(bad)
    return JHValidation(
        valid=all(cond1) and all(cond2),
        step_payoff_matches=tuple(cond1),
        step_strictly_optimal=tuple(cond2),
        deviation_witness=tuple(witness),
    )


def piecewise_stability(g, f):
    """Stability of the restriction to every step interval.

    Requires a slope-like payoff over total values (the stronger chain
    condition holds vacuously here); under those hypotheses every step of a
    valid filtration is stable.
    """
    if not g.values.is_total:
        raise PreconditionFailed("value lattice is totally ordered")
    if not is_slope_like(g):
        raise PreconditionFailed("payoff is slope-like")
    steps = _as_steps(g, f)
    return tuple(
        interval_stable(g, lower, upper) for upper, lower in zip(steps, steps[1:])
    )


def enumerate_jh_filtrations(g, max_elements=MAX_ENUMERATION_ELEMENTS):
    """All Jordan-Hölder filtrations, by exhaustive descent.

    No hypotheses are enforced beyond the size guard, so this can probe
    behaviour outside the theorems' scope (e.g. non-modular lattices).
    """
    l = g.lattice
    if l.n > max_elements:
        raise TooLarge(
            f"lattice has {l.n} elements; guard is {max_elements} "
            "(raise max_elements to override)"
        )
    total = _game_value(g)
    out = []
    chain = [l.top]

    def descend():
        upper = chain[-1]
        if upper == l.bot:
            out.append(JHFiltration(tuple(chain)))
            return
        for lower in _iter_bits(l.poset.down[upper] & ~(1 << upper)):
            if _step_ok(g, lower, upper, total):
                chain.append(lower)
                descend()
                chain.pop()

    descend()
    return out


@dataclass(frozen=True)
class JHLengthSurvey:
    """Observed lengths over all Jordan-Hölder filtrations of one game."""

    equal: bool
    lengths: frozenset
    count: int


def jh_lengths_equal(g, max_elements=MAX_ENUMERATION_ELEMENTS):
    """Whether all Jordan-Hölder filtrations share one length.

    Requires the semistable/slope-like/total/value hypotheses plus a modular
    lattice and an affine payoff; under those the answer is always yes, and a
    ``False`` therefore signals a bug.
    """
    _check_jh_preconditions(g, modular_affine=True)
    found = enumerate_jh_filtrations(g, max_elements)
    lengths = frozenset(f.length for f in found)
    return JHLengthSurvey(
        equal=len(lengths) == 1, lengths=lengths, count=len(found)
    )
