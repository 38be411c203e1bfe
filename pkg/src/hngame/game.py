"""Harder-Narasimhan games: payoff tables, the mu-series, and predicates.

A game is a nontrivial bounded lattice L, a value lattice S, and a payoff
defined on exactly the strict pairs x < y of L.  The four derived series are

    mu_max(x, y) = sup { mu(x, w) | x < w <= y }
    mu_min(x, y) = inf { mu(w, y) | x <= w < y }
    mu_a(x, y)   = inf { mu_max(a, y) | x <= a < y }
    mu_b(x, y)   = sup { mu_min(x, b) | x < b <= y }

and all witness sets only involve elements between x and y, so the values of
the series on a pair inside an interval agree with the ambient ones.  The
table engine below exploits that: every per-interval notion (semistability on
[lo, hi], the maximal-destabilizer set, ...) is computed from ambient pair
tables, and the test suite verifies exhaustively that this matches honest
restriction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    MissingBottom,
    NotAChain,
    NotAntitone,
    NotStrict,
    PreconditionFailed,
    TheoremViolation,
)
from .order import _iter_bits

INCREASING, DECREASING, FLAT, VIOLATION = (
    "increasing",
    "decreasing",
    "flat",
    "violation",
)


class Game:
    """A payoff function on the strict pairs of a bounded lattice."""

    __slots__ = ("lattice", "values", "payoff", "_tables")

    def __init__(self, lattice, values, payoff):
        pairs = lattice.strict_pairs()
        if set(payoff) != set(pairs):
            missing = set(pairs) - set(payoff)
            extra = set(payoff) - set(pairs)
            raise ValueError(
                "payoff must be defined on exactly the strict pairs; "
                f"missing {sorted(missing)}, extra {sorted(extra)}"
            )
        for pair, v in payoff.items():
            if not values.contains(v):
                raise ValueError(f"payoff value {v!r} at {pair} not in value lattice")
        self.lattice = lattice
        self.values = values
        self.payoff = dict(payoff)
        self._tables = None

    @classmethod
    def _trusted(cls, lattice, values, payoff):
        """Construction bypassing domain validation; for internal sweeps."""
        g = cls.__new__(cls)
        g.lattice = lattice
        g.values = values
        g.payoff = payoff
        g._tables = None
        return g

    def mu(self, x, y):
        if not self.lattice.lt(x, y):
            raise NotStrict(
                f"payoff needs {self.lattice.names[x]} < {self.lattice.names[y]}"
            )
        return self.payoff[(x, y)]

    def tables(self):
        if self._tables is None:
            self._tables = _compute_tables(self)
        return self._tables

    def __eq__(self, other):
        return (
            isinstance(other, Game)
            and self.lattice == other.lattice
            and self.values == other.values
            and self.payoff == other.payoff
        )

    def __repr__(self):
        return f"Game({self.lattice!r}, {self.values!r}, {len(self.payoff)} pairs)"


@dataclass(frozen=True)
class MuTables:
    """All four series tabulated over every strict pair."""

    mu_max: dict
    mu_min: dict
    mu_a: dict
    mu_b: dict


def _witness_ids(lattice):
    """Per-pair witness index lists, cached on the lattice.

    For pair p = (x, y): wmax[p] indexes the pairs (x, w) with x < w <= y,
    wmin[p] the pairs (w, y) with x <= w < y, wa[p] the pairs (a, y) feeding
    mu_a from the mu_max table, and wb[p] the pairs (x, b) feeding mu_b from
    the mu_min table.
    """
    cached = lattice._cache.get("witnesses")
    if cached is not None:
        return cached
    pairs = lattice.strict_pairs()
    pid = {p: k for k, p in enumerate(pairs)}
    wmax, wmin, wa, wb = [], [], [], []
    for x, y in pairs:
        inside = lattice.strictly_between(x, y)
        wmax.append([pid[(x, w)] for w in _iter_bits(inside)] + [pid[(x, y)]])
        wmin.append([pid[(w, y)] for w in _iter_bits(inside)] + [pid[(x, y)]])
        wa.append([pid[(x, y)]] + [pid[(a, y)] for a in _iter_bits(inside)])
        wb.append([pid[(x, y)]] + [pid[(x, b)] for b in _iter_bits(inside)])
    cached = (pairs, pid, wmax, wmin, wa, wb)
    lattice._cache["witnesses"] = cached
    return cached


def _compute_tables(g):
    pairs, pid, wmax, wmin, wa, wb = _witness_ids(g.lattice)
    sup, inf = g.values.sup, g.values.inf
    vals = [g.payoff[p] for p in pairs]
    tmax = [sup([vals[q] for q in wit]) for wit in wmax]
    tmin = [inf([vals[q] for q in wit]) for wit in wmin]
    ta = [inf([tmax[q] for q in wit]) for wit in wa]
    tb = [sup([tmin[q] for q in wit]) for wit in wb]
    return MuTables(
        mu_max=dict(zip(pairs, tmax)),
        mu_min=dict(zip(pairs, tmin)),
        mu_a=dict(zip(pairs, ta)),
        mu_b=dict(zip(pairs, tb)),
    )


def _require_strict(g, x, y):
    if not g.lattice.lt(x, y):
        raise NotStrict(
            f"need {g.lattice.names[x]} < {g.lattice.names[y]}"
        )


def mu_max(g, x, y):
    """Best payoff the first mover can force in one step inside [x, y]."""
    _require_strict(g, x, y)
    return g.tables().mu_max[(x, y)]


def mu_min(g, x, y):
    _require_strict(g, x, y)
    return g.tables().mu_min[(x, y)]


def mu_a(g, x, y):
    """Second-mover optimum against the best one-step response."""
    _require_strict(g, x, y)
    return g.tables().mu_a[(x, y)]


def mu_b(g, x, y):
    _require_strict(g, x, y)
    return g.tables().mu_b[(x, y)]


def mu_a_star(g):
    return mu_a(g, g.lattice.bot, g.lattice.top)


def mu_b_star(g):
    return mu_b(g, g.lattice.bot, g.lattice.top)


@dataclass(frozen=True)
class MuSeries:
    """The four series at one interval plus the whole-game star values."""

    mu_max: object
    mu_min: object
    mu_a: object
    mu_b: object
    mu_a_star: object
    mu_b_star: object


def mu_series(g, ival):
    """Evaluate the series at the endpoints of an interval of g's lattice."""
    t = g.tables()
    pair = (ival.lo, ival.hi)
    star = (g.lattice.bot, g.lattice.top)
    return MuSeries(
        mu_max=t.mu_max[pair],
        mu_min=t.mu_min[pair],
        mu_a=t.mu_a[pair],
        mu_b=t.mu_b[pair],
        mu_a_star=t.mu_a[star],
        mu_b_star=t.mu_b[star],
    )


def restrict(g, ival):
    """The game induced on an interval; payoff agrees with the ambient one."""
    sub = ival.as_lattice()
    amb = ival.member_indices()
    payoff = {
        (i, j): g.payoff[(amb[i], amb[j])] for (i, j) in sub.strict_pairs()
    }
    return Game._trusted(sub, g.values, payoff)


def dual(g):
    """The game on the order-dual lattice with order-dual values.

    The payoff of the dual pair (x, y) is the original payoff of (y, x); the
    star values swap roles, mu_b* of the dual being mu_a* of the original.
    """
    dlat = g.lattice.dual()
    payoff = {(j, i): v for (i, j), v in g.payoff.items()}
    return Game._trusted(dlat, g.values.dual(), payoff)


def is_convex(g):
    """Whether mu(x ^ y, x) <= mu(y, x v y) whenever x is not below y."""
    return _convexity(g, require_equal=False)


def is_affine(g):
    """Whether mu(x ^ y, x) == mu(y, x v y) whenever x is not below y."""
    return _convexity(g, require_equal=True)


def _convexity(g, require_equal):
    l = g.lattice
    leq = g.values.leq
    payoff = g.payoff
    for x in range(l.n):
        up_x = l.poset.up[x]
        for y in range(l.n):
            if (up_x >> y) & 1:
                continue
            left = payoff[(l.meet[x][y], x)]
            right = payoff[(y, l.join[x][y])]
            if require_equal:
                if left != right:
                    return False
            elif not leq(left, right):
                return False
    return True


def interval_semistable(g, lo, hi):
    """Semistability of the restriction of g to [lo, hi].

    Verbatim form: no x above lo in the interval has mu_a(lo, x) strictly
    greater than mu_a(lo, hi).  For non-total value lattices this is weaker
    than mu_a(lo, x) <= mu_a(lo, hi).
    """
    t = g.tables()
    ref = t.mu_a[(lo, hi)]
    gt = g.values.gt
    for x in _iter_bits(g.lattice.strictly_between(lo, hi)):
        if gt(t.mu_a[(lo, x)], ref):
            return False
    return True


def interval_stable(g, lo, hi):
    """Stability of the restriction of g to [lo, hi]: semistable and no
    proper intermediate x attains mu_a(lo, hi)."""
    if not interval_semistable(g, lo, hi):
        return False
    t = g.tables()
    ref = t.mu_a[(lo, hi)]
    for x in _iter_bits(g.lattice.strictly_between(lo, hi)):
        if t.mu_a[(lo, x)] == ref:
            return False
    return True


def is_semistable(g):
    """No x above bot strictly beats the whole game."""
    return interval_semistable(g, g.lattice.bot, g.lattice.top)


def is_stable(g):
    """Semistable, and no proper x strictly between bot and top ties the
    whole-game value.

    The quantifier deliberately excludes x = top, where equality is automatic;
    on a two-element lattice stability therefore coincides with semistability.
    """
    return interval_stable(g, g.lattice.bot, g.lattice.top)


def _chain_triples(lattice):
    cached = lattice._cache.get("triples")
    if cached is not None:
        return cached
    pairs = lattice.strict_pairs()
    pid = {p: k for k, p in enumerate(pairs)}
    triples = []
    for x, z in pairs:
        for y in _iter_bits(lattice.strictly_between(x, z)):
            triples.append((pid[(x, y)], pid[(x, z)], pid[(y, z)], (x, y, z)))
    cached = (pairs, triples)
    lattice._cache["triples"] = cached
    return cached


def is_slope_like(g):
    """The four disjunctions of the slope-like condition on every chain triple.

    For x < y < z:
      (1) mu(x,y) <= mu(x,z)  or  mu(y,z) < mu(x,z)
      (2) mu(x,y) <  mu(x,z)  or  mu(y,z) <= mu(x,z)
      (3) mu(x,z) <  mu(x,y)  or  mu(x,z) <= mu(y,z)
      (4) mu(x,z) <= mu(x,y)  or  mu(x,z) <  mu(y,z)
    """
    pairs, triples = _chain_triples(g.lattice)
    vals = [g.payoff[p] for p in pairs]
    leq, lt = g.values.leq, g.values.lt
    for pxy, pxz, pyz, _ in triples:
        vxy, vxz, vyz = vals[pxy], vals[pxz], vals[pyz]
        if not (leq(vxy, vxz) or lt(vyz, vxz)):
            return False
        if not (lt(vxy, vxz) or leq(vyz, vxz)):
            return False
        if not (lt(vxz, vxy) or leq(vxz, vyz)):
            return False
        if not (leq(vxz, vxy) or lt(vxz, vyz)):
            return False
    return True


def seesaw_classify(g, x, y, z):
    """Classify a chain triple as increasing, decreasing, flat, or violation.

    For total value lattices, the game is slope-like exactly when no triple is
    a violation.
    """
    l = g.lattice
    if not (l.lt(x, y) and l.lt(y, z)):
        raise NotAChain(
            f"need {l.names[x]} < {l.names[y]} < {l.names[z]}"
        )
    vxy, vxz, vyz = g.payoff[(x, y)], g.payoff[(x, z)], g.payoff[(y, z)]
    lt = g.values.lt
    if lt(vxy, vxz) and lt(vxz, vyz):
        return INCREASING
    if lt(vxz, vxy) and lt(vyz, vxz):
        return DECREASING
    if vxy == vxz == vyz:
        return FLAT
    return VIOLATION


def has_nash_equilibrium(g):
    """Whether the second-mover optima coincide: mu_a* == mu_b*."""
    return mu_a_star(g) == mu_b_star(g)


@dataclass(frozen=True)
class NashReport:
    """The four equivalent first-mover-advantage statements plus context.

    Under the checked hypotheses (total values, slope-like payoff; the chain
    conditions hold vacuously on finite lattices) the four items agree, a
    semistable game satisfies them, and conversely.
    """

    mu_max_attains_payoff: bool
    mu_min_attains_payoff: bool
    mu_min_equals_mu_max: bool
    nash: bool
    semistable: bool

    @property
    def items(self):
        return (
            self.mu_max_attains_payoff,
            self.mu_min_attains_payoff,
            self.mu_min_equals_mu_max,
            self.nash,
        )


def nash_tfae_report(g):
    """Evaluate the four equivalent conditions and their semistability link.

    Requires total values and a slope-like payoff; raises
    :class:`PreconditionFailed` otherwise and :class:`TheoremViolation` if the
    guaranteed agreements fail (which would indicate a bug, not an input
    problem).
    """
    if not g.values.is_total:
        raise PreconditionFailed("value lattice is totally ordered")
    if not is_slope_like(g):
        raise PreconditionFailed("payoff is slope-like")
    t = g.tables()
    bt = (g.lattice.bot, g.lattice.top)
    v = g.payoff[bt]
    report = NashReport(
        mu_max_attains_payoff=t.mu_max[bt] == v,
        mu_min_attains_payoff=t.mu_min[bt] == v,
        mu_min_equals_mu_max=t.mu_min[bt] == t.mu_max[bt],
        nash=t.mu_a[bt] == t.mu_b[bt],
        semistable=is_semistable(g),
    )
    if len(set(report.items)) != 1:
        raise TheoremViolation(f"equivalent conditions diverged: {report.items}")
    if report.semistable and not report.nash:
        raise TheoremViolation("semistable game without Nash equilibrium")
    if report.nash and not report.semistable:
        raise TheoremViolation("Nash equilibrium without semistability")
    return report


def compress_antitone(lattice, seq, pred=None):
    """Extract the strictly decreasing subsequence of an antitone sequence.

    ``seq`` must start at top, be weakly decreasing, and reach bot; the output
    keeps the first element of each constant run up to the first bot, so it is
    a strict top-to-bot chain containing every value of the input.  When
    ``pred`` is given it must hold on every strict consecutive input pair, and
    it then holds on every consecutive output pair (those pairs were adjacent
    in the input).
    """
    seq = list(seq)
    if not seq or seq[0] != lattice.top:
        raise NotAntitone("sequence must start at the top element")
    for a, b in zip(seq, seq[1:]):
        if not lattice.le(b, a):
            raise NotAntitone(
                f"{lattice.names[b]} does not sit below {lattice.names[a]}"
            )
        if pred is not None and b != a and not pred(b, a):
            raise ValueError("predicate fails on a strict consecutive input pair")
    if lattice.bot not in seq:
        raise MissingBottom("sequence never reaches the bottom element")
    out = [seq[0]]
    for b in seq[1:]:
        if b != out[-1]:
            out.append(b)
        if b == lattice.bot:
            break
    return out


# Chain-condition attestations.  Every finite poset is well-founded in both
# directions: there is no infinite strictly monotone sequence to quantify
# over, so the chain-condition hypotheses of the main theorems hold for every
# game in this library.  They are exposed so that call sites can name the
# hypothesis they rely on.

def mu_a_descending_chain_condition(g):
    """Vacuously true: finite lattices carry no infinite descending chains."""
    return True


def strong_descending_chain_condition(g):
    """Vacuously true on finite lattices."""
    return True


def stronger_descending_chain_condition(g):
    """Vacuously true on finite lattices."""
    return True


def weak_ascending_chain_condition(g):
    """Vacuously true: finite lattices carry no infinite ascending chains."""
    return True
