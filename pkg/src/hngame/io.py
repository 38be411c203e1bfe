"""Document parsing and emission.

One JSON document format covers games and bare posets (schema shipped at
schema/document.schema.json).  Cover pairs are accepted and transitively
closed on load; rationals travel as exact strings "p/q"; emission is
canonical (sorted keys, fixed entry order), so parse-emit-parse is a
fixpoint.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .abelian import FiniteAbelianGroup, coprimary_game
from .errors import HNGameError, SchemaError
from .game import Game
from .order import as_bounded_lattice, build_poset
from .slopes import PotentialData, quotient_payoff
from .values import (
    NEG_INF,
    POS_INF,
    ExtendedRationals,
    FiniteLatticeValues,
    PrimeFinsets,
)

SCHEMA_VERSION = 1


def format_rational(v):
    """Exact encoding: 'p/q' for finite values, 'inf'/'-inf' for the ends."""
    if v == POS_INF:
        return "inf"
    if v == NEG_INF:
        return "-inf"
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(s, where="value"):
    if not isinstance(s, str):
        raise SchemaError("rational literals are strings like '3/2'", field=where)
    if s == "inf":
        return POS_INF
    if s == "-inf":
        return NEG_INF
    num, sep, den = s.partition("/")
    try:
        if not sep:
            return Fraction(int(num))
        return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError):
        raise SchemaError(f"malformed rational literal {s!r}", field=where) from None


def _require(doc, key, typ, where):
    if key not in doc:
        raise SchemaError(f"missing required field {key!r}", field=where)
    value = doc[key]
    if not isinstance(value, typ):
        wanted = (
            typ.__name__
            if isinstance(typ, type)
            else " or ".join(t.__name__ for t in typ)
        )
        raise SchemaError(
            f"field {key!r} must be {wanted}", field=f"{where}.{key}"
        )
    return value


def _load_order_section(section, where):
    elements = _require(section, "elements", list, where)
    if "covers" in section and "relation" in section:
        raise SchemaError(
            "give either 'covers' or 'relation', not both", field=where
        )
    pairs = section.get("covers", section.get("relation"))
    if pairs is None:
        raise SchemaError("missing 'covers' or 'relation'", field=where)
    if not isinstance(pairs, list):
        raise SchemaError("'covers'/'relation' must be a list", field=where)
    cleaned = []
    for k, entry in enumerate(pairs):
        if not (isinstance(entry, list) and len(entry) == 2):
            raise SchemaError(
                "relation entries are two-element lists", field=f"{where}[{k}]"
            )
        cleaned.append((entry[0], entry[1]))
    return build_poset(elements, cleaned)


def _load_values_section(section, where):
    kind = _require(section, "kind", str, where)
    if kind == "extended_rational":
        return ExtendedRationals()
    if kind == "explicit_lattice":
        poset = _load_order_section(section, where)
        return FiniteLatticeValues(as_bounded_lattice(poset))
    if kind == "prime_finsets":
        primes = _require(section, "primes", list, where)
        if not all(isinstance(p, int) and p >= 2 for p in primes):
            raise SchemaError("primes must be integers >= 2", field=f"{where}.primes")
        return PrimeFinsets(primes)
    raise SchemaError(f"unknown value kind {kind!r}", field=f"{where}.kind")


def _decode_value(values, raw, where):
    if values.kind == "extended_rational":
        return parse_rational(raw, where)
    if values.kind == "prime_finsets":
        if not (isinstance(raw, list) and all(isinstance(p, int) for p in raw)):
            raise SchemaError("prime-set values are lists of ints", field=where)
        return frozenset(raw)
    if not values.contains(raw):
        raise SchemaError(f"{raw!r} is not a declared value", field=where)
    return raw


def _encode_value(values, v):
    if values.kind == "extended_rational":
        return format_rational(v)
    if values.kind == "prime_finsets":
        return sorted(v)
    return v


def _load_payoff_table(lattice, values, entries, where):
    payoff = {}
    for k, entry in enumerate(entries):
        loc = f"{where}[{k}]"
        if not isinstance(entry, dict):
            raise SchemaError("payoff entries are objects", field=loc)
        lo = lattice.index(_require(entry, "lo", (str, int), loc))
        hi = lattice.index(_require(entry, "hi", (str, int), loc))
        if not lattice.lt(lo, hi):
            raise SchemaError(
                f"payoff entry on non-strict pair "
                f"({lattice.names[lo]!r}, {lattice.names[hi]!r})",
                field=loc,
            )
        if (lo, hi) in payoff:
            raise SchemaError(
                f"duplicate payoff entry for "
                f"({lattice.names[lo]!r}, {lattice.names[hi]!r})",
                field=loc,
            )
        if "value" not in entry:
            raise SchemaError("missing required field 'value'", field=loc)
        payoff[(lo, hi)] = _decode_value(values, entry["value"], f"{loc}.value")
    missing = set(lattice.strict_pairs()) - set(payoff)
    if missing:
        shown = sorted(
            (lattice.names[a], lattice.names[b]) for a, b in missing
        )[:5]
        raise SchemaError(f"payoff table misses strict pairs {shown}", field=where)
    return payoff


def parse_document(text):
    """Parse a document; returns ('game', Game, name) or ('poset', poset, name)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    version = _require(doc, "schema_version", int, "document")
    if version != SCHEMA_VERSION:
        raise SchemaError(
            f"unsupported schema_version {version}", field="schema_version"
        )
    kind = _require(doc, "kind", str, "document")
    name = doc.get("name")
    if kind == "poset":
        section = _require(doc, "poset", dict, "document")
        return "poset", _load_order_section(section, "poset"), name
    if kind != "game":
        raise SchemaError(f"unknown document kind {kind!r}", field="kind")

    payoff_section = _require(doc, "payoff", dict, "document")
    source = _require(payoff_section, "source", str, "payoff")
    if source == "abelian_group":
        if "lattice" in doc or "values" in doc:
            raise SchemaError(
                "abelian_group documents derive lattice and values; "
                "drop those sections",
                field="payoff",
            )
        orders = _require(payoff_section, "cyclic_orders", list, "payoff")
        if not all(isinstance(k, int) and k >= 2 for k in orders):
            raise SchemaError(
                "cyclic orders must be integers >= 2", field="payoff.cyclic_orders"
            )
        return "game", coprimary_game(FiniteAbelianGroup(orders)), name

    lattice = as_bounded_lattice(
        _load_order_section(_require(doc, "lattice", dict, "document"), "lattice")
    )
    if source == "table":
        values = _load_values_section(
            _require(doc, "values", dict, "document"), "values"
        )
        entries = _require(payoff_section, "entries", list, "payoff")
        payoff = _load_payoff_table(lattice, values, entries, "payoff.entries")
        return "game", Game(lattice, values, payoff), name
    if source == "potentials":
        values_section = doc.get("values", {"kind": "extended_rational"})
        if values_section.get("kind") != "extended_rational":
            raise SchemaError(
                "potential payoffs use extended_rational values", field="values"
            )
        rank = _require(payoff_section, "rank", dict, "payoff")
        degree = _require(payoff_section, "degree", dict, "payoff")
        for label in lattice.names:
            if label not in rank:
                raise SchemaError(f"rank misses element {label!r}", field="payoff.rank")
            if label not in degree:
                raise SchemaError(
                    f"degree misses element {label!r}", field="payoff.degree"
                )
        data = PotentialData(
            {k: parse_rational(v, f"payoff.rank.{k}") for k, v in rank.items()},
            {k: parse_rational(v, f"payoff.degree.{k}") for k, v in degree.items()},
        )
        return "game", quotient_payoff(lattice, data), name
    raise SchemaError(f"unknown payoff source {source!r}", field="payoff.source")


def parse_game(text):
    """Parse a game document into a validated Game."""
    kind, obj, _ = parse_document(text)
    if kind != "game":
        raise SchemaError("expected a game document, got a poset document")
    return obj


def parse_poset(text):
    kind, obj, _ = parse_document(text)
    if kind != "poset":
        raise SchemaError("expected a poset document, got a game document")
    return obj


def _order_section(lattice_or_poset):
    poset = getattr(lattice_or_poset, "poset", lattice_or_poset)
    covers = sorted(poset.covers())
    return {
        "elements": list(poset.names),
        "covers": [[poset.names[a], poset.names[b]] for a, b in covers],
    }


def _values_section(values):
    if values.kind == "extended_rational":
        return {"kind": "extended_rational"}
    if values.kind == "prime_finsets":
        return {"kind": "prime_finsets", "primes": list(values.primes)}
    if hasattr(values, "lattice"):
        section = {"kind": "explicit_lattice"}
        section.update(_order_section(values.lattice))
        return section
    # Chains carry no lattice object; consecutive pairs are the covers.
    elements = list(values.elements)
    return {
        "kind": "explicit_lattice",
        "elements": elements,
        "covers": [[a, b] for a, b in zip(elements, elements[1:])],
    }


def game_to_document(game, name=None):
    """Canonical document for a game: explicit payoff table, sorted entries."""
    names = game.lattice.names
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "game",
        "lattice": _order_section(game.lattice),
        "values": _values_section(game.values),
        "payoff": {
            "source": "table",
            "entries": [
                {
                    "lo": names[a],
                    "hi": names[b],
                    "value": _encode_value(game.values, game.payoff[(a, b)]),
                }
                for a, b in game.lattice.strict_pairs()
            ],
        },
    }
    if name is not None:
        doc["name"] = name
    return doc


def poset_to_document(poset, name=None):
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "poset",
        "poset": _order_section(poset),
    }
    if name is not None:
        doc["name"] = name
    return doc


def document_to_text(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def emit_game(game, name=None):
    return document_to_text(game_to_document(game, name))


def emit_report(payload):
    """Canonical machine-readable report text (stable field ordering)."""
    return document_to_text(payload)


def export_dot(lattice, highlight=(), title=None):
    """Graphviz DOT for the Hasse diagram, bottom-up rank direction.

    ``highlight`` names elements (e.g. filtration steps) drawn filled.
    """
    poset = getattr(lattice, "poset", lattice)
    highlight = set(highlight)
    lines = ["digraph hasse {"]
    if title:
        lines.append(f'  label="{title}";')
    lines.append("  rankdir=BT;")
    lines.append("  node [shape=box];")
    for name in poset.names:
        attrs = ' [style=filled, fillcolor=lightgrey]' if name in highlight else ""
        lines.append(f'  "{name}"{attrs};')
    for a, b in sorted(poset.covers()):
        lines.append(f'  "{poset.names[a]}" -> "{poset.names[b]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_path(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise HNGameError(f"cannot read {path}: {exc}") from None
