"""Parsing and serialisation: monoids, acts, DFAs, transformation generators, reports.

JSON forms are canonical (fixed key order, two-space indent) so that
parse -> serialize round-trips are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError
from .monoid import FiniteMonoid, build_monoid
from .act import FiniteAct, build_act


@dataclass(frozen=True)
class Dfa:
    state_count: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]  # per symbol, in alphabet order


@dataclass(frozen=True)
class TransformationGenSet:
    degree: int
    generators: tuple[tuple[str, tuple[int, ...]], ...]  # (label, total map)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def serialize_report(report) -> str:
    """Canonical JSON text; stable under parse -> serialize."""
    return _dumps(report)


def monoid_to_json(m: FiniteMonoid) -> str:
    obj = {"order": m.order, "identity": m.identity, "table": [list(r) for r in m.mul]}
    if m.labels is not None:
        obj["labels"] = list(m.labels)
    return _dumps(obj)


def monoid_to_text(m: FiniteMonoid) -> str:
    """Canonical text: one line per row, the first prefixed by the identity index."""
    lines = []
    for i, row in enumerate(m.mul):
        cells = " ".join(str(v) for v in row)
        lines.append(f"{m.identity} {cells}" if i == 0 else cells)
    return "\n".join(lines) + "\n"


def _require(obj: dict, field: str, kind, where: str):
    if field not in obj:
        raise ParseError(f"missing field {field!r}", field=where)
    v = obj[field]
    if kind is int and (not isinstance(v, int) or isinstance(v, bool)):
        raise ParseError(f"field {field!r} must be an integer", field=where)
    if kind is list and not isinstance(v, list):
        raise ParseError(f"field {field!r} must be a list", field=where)
    if kind is str and not isinstance(v, str):
        raise ParseError(f"field {field!r} must be a string", field=where)
    if kind is dict and not isinstance(v, dict):
        raise ParseError(f"field {field!r} must be an object", field=where)
    return v


def _int_table(rows, where: str):
    table = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise ParseError(f"row {i} must be a list", field=where)
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(f"entry [{i}][{j}] must be an integer", field=where)
        table.append(tuple(row))
    return tuple(table)


def _load_json(source: str, what: str) -> dict:
    try:
        obj = json.loads(source)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON in {what}: {err.msg}", line=err.lineno) from err
    if not isinstance(obj, dict):
        raise ParseError(f"{what} must be a JSON object")
    return obj


def parse_monoid(source: str) -> FiniteMonoid:
    """Parse the JSON or canonical text form; validation errors carry locations."""
    stripped = source.strip()
    if stripped.startswith("{"):
        obj = _load_json(source, "monoid")
        order = _require(obj, "order", int, "order")
        identity = _require(obj, "identity", int, "identity")
        table = _int_table(_require(obj, "table", list, "table"), "table")
        if len(table) != order:
            raise ParseError(f"table has {len(table)} rows, order is {order}", field="table")
        labels = None
        if "labels" in obj:
            labels = [str(x) for x in _require(obj, "labels", list, "labels")]
        return build_monoid(table, identity, labels)
    return _parse_monoid_text(source)


def _parse_monoid_text(source: str) -> FiniteMonoid:
    lines = [ln for ln in source.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty monoid text", line=1)
    n = len(lines)
    rows = []
    identity = None
    for i, ln in enumerate(lines):
        try:
            cells = [int(tok) for tok in ln.split()]
        except ValueError as err:
            raise ParseError("non-integer token", line=i + 1) from err
        if i == 0:
            if len(cells) != n + 1:
                raise ParseError(f"first line needs identity plus {n} cells", line=1)
            identity = cells[0]
            cells = cells[1:]
        elif len(cells) != n:
            raise ParseError(f"expected {n} cells", line=i + 1)
        rows.append(tuple(cells))
    return build_monoid(tuple(rows), identity)


def act_to_json(act: FiniteAct, monoid_ref: str | None = None) -> str:
    if monoid_ref is not None:
        monoid_field: object = monoid_ref
    else:
        monoid_field = json.loads(monoid_to_json(act.monoid))
    obj = {"monoid": monoid_field, "side": act.side, "size": act.size,
           "action": [list(r) for r in act.action]}
    if act.labels is not None:
        obj["labels"] = list(act.labels)
    return _dumps(obj)


def parse_act(source: str, monoid: FiniteMonoid | None = None,
              base_dir: str | Path | None = None) -> FiniteAct:
    """Parse an act; the monoid may be inline JSON, a file reference, or supplied."""
    obj = _load_json(source, "act")
    mfield = obj.get("monoid")
    if monoid is not None:
        m = monoid
    elif isinstance(mfield, dict):
        m = parse_monoid(json.dumps(mfield))
    elif isinstance(mfield, str):
        path = Path(base_dir or ".") / mfield
        try:
            m = parse_monoid(path.read_text())
        except OSError as err:
            raise ParseError(f"cannot read monoid reference {mfield!r}: {err}",
                             field="monoid") from err
    else:
        raise ParseError("field 'monoid' must be inline JSON or a file reference",
                         field="monoid")
    side = _require(obj, "side", str, "side")
    size = _require(obj, "size", int, "size")
    action = _int_table(_require(obj, "action", list, "action"), "action")
    act = build_act(m, side, action, obj.get("labels"))
    if act.size != size:
        raise ParseError(f"action has {act.size} columns, size is {size}", field="size")
    return act


def dfa_to_json(dfa: Dfa) -> str:
    obj = {"states": dfa.state_count, "alphabet": list(dfa.alphabet),
           "delta": {sym: list(dfa.delta[i]) for i, sym in enumerate(dfa.alphabet)}}
    return _dumps(obj)


def parse_dfa(source: str) -> Dfa:
    obj = _load_json(source, "dfa")
    states = _require(obj, "states", int, "states")
    if states < 1:
        raise ParseError("a dfa needs at least one state", field="states")
    alphabet = tuple(str(s) for s in _require(obj, "alphabet", list, "alphabet"))
    delta_obj = _require(obj, "delta", dict, "delta")
    rows = []
    for sym in alphabet:
        if sym not in delta_obj:
            raise ParseError(f"missing transition row for symbol {sym!r}", field="delta")
        row = delta_obj[sym]
        if not isinstance(row, list) or len(row) != states:
            raise ParseError(f"row for {sym!r} must list {states} target states",
                             field="delta")
        for q, target in enumerate(row):
            if not isinstance(target, int) or isinstance(target, bool) \
                    or not 0 <= target < states:
                raise ParseError(f"target {target!r} out of range at state {q}",
                                 field=f"delta.{sym}")
        rows.append(tuple(row))
    return Dfa(states, alphabet, tuple(rows))


def parse_transformations(source: str) -> TransformationGenSet:
    obj = _load_json(source, "transformation set")
    degree = _require(obj, "degree", int, "degree")
    if degree < 1:
        raise ParseError("degree must be at least 1", field="degree")
    gens_obj = _require(obj, "gens", dict, "gens")
    gens = []
    for label, row in gens_obj.items():
        if not isinstance(row, list) or len(row) != degree:
            raise ParseError(f"map {label!r} must list {degree} images", field="gens")
        for i, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < degree:
                raise ParseError(f"image {v!r} out of range at point {i}",
                                 field=f"gens.{label}")
        gens.append((str(label), tuple(row)))
    return TransformationGenSet(degree, tuple(gens))


def transformation_monoid(gens: TransformationGenSet) -> tuple[FiniteMonoid,
                                                               tuple[tuple[str, ...], ...]]:
    """Close the generators under composition; breadth-first by word length.

    Words apply left to right: the word uv maps a point through u first. Each
    element carries a shortest generating word, ties broken by generator order,
    so element indices are deterministic.
    """
    n = gens.degree
    ident = tuple(range(n))
    maps: dict[tuple[int, ...], int] = {ident: 0}
    elements = [ident]
    words: list[tuple[str, ...]] = [()]
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            base = elements[i]
            for label, gmap in gens.generators:
                new = tuple(gmap[base[x]] for x in range(n))
                if new not in maps:
                    maps[new] = len(elements)
                    elements.append(new)
                    words.append(words[i] + (label,))
                    nxt.append(maps[new])
        frontier = nxt
    size = len(elements)
    table = tuple(tuple(maps[tuple(elements[j][elements[i][x]] for x in range(n))]
                        for j in range(size))
                  for i in range(size))
    labels = tuple("".join(w) if w else "1" for w in words)
    return build_monoid(table, 0, labels), tuple(words)


def transition_monoid(dfa: Dfa) -> tuple[FiniteMonoid, tuple[tuple[str, ...], ...]]:
    """The monoid of state maps induced by words of the automaton."""
    gens = TransformationGenSet(
        dfa.state_count,
        tuple((sym, dfa.delta[i]) for i, sym in enumerate(dfa.alphabet)))
    return transformation_monoid(gens)
