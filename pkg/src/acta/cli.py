"""Command-line front end; JSON output is the contract, text is a human summary.

Exit codes: 0 success, 1 io error, 2 parse/validation error, 3 cap exceeded,
4 internal hierarchy inconsistency.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ActaError, OrderExceedsCap, ParseError, ValidationError
from .monoid import green, structure_predicates, enumerate_cu
from .act import act_of_monoid, left_congruences
from .flatness import is_strongly_flat_congruence, tensor, tensor_equal
from .classify import hierarchy_verdicts, monoid_report, star_witness
from . import ingest

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_CAP = 3
EXIT_INCONSISTENT = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acta",
        description="Structural and flatness analysis of finite monoids and their acts.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--m-max", type=int, default=2,
                       help="skeleton length bound for the flatness search (default 2)")
        p.add_argument("--cu-cap", type=int, default=16,
                       help="largest order for the submonoid census (default 16)")
        p.add_argument("--cong-cap", type=int, default=8,
                       help="largest order for congruence enumeration (default 8)")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("analyze", help="full structural report for a monoid")
    p.add_argument("monoid")
    common(p)

    p = sub.add_parser("classify-act", help="hierarchy verdicts for one act")
    p.add_argument("monoid")
    p.add_argument("act")
    common(p)

    p = sub.add_parser("tensor", help="tensor product classes of a right and a left act")
    p.add_argument("monoid")
    p.add_argument("right_act")
    p.add_argument("left_act")
    p.add_argument("--pair", default=None, metavar="a,b/a',b'",
                   help="query one pair equality and print its witness")
    common(p)

    p = sub.add_parser("cu", help="census of right unitary right collapsible submonoids")
    p.add_argument("monoid")
    common(p)

    p = sub.add_parser("witness", help="factorisation-hub sets per non-identity idempotent")
    p.add_argument("monoid")
    common(p)

    p = sub.add_parser("from-dfa", help="transition monoid of a DFA, with the word map")
    p.add_argument("dfa")
    common(p)

    p = sub.add_parser("congruences", help="left congruences with strong-flatness flags")
    p.add_argument("monoid")
    common(p)
    return parser


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(payload: dict, args) -> None:
    if args.format == "json":
        text = ingest.serialize_report(payload)
    else:
        lines: list[str] = []
        _render_text(payload, lines, 0)
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_text(obj, lines: list[str], depth: int, key: str | None = None) -> None:
    pad = "  " * depth
    head = f"{pad}{key}: " if key is not None else pad
    if isinstance(obj, dict):
        if key is not None:
            lines.append(f"{pad}{key}:")
        for k, v in obj.items():
            _render_text(v, lines, depth + (key is not None), k)
    elif isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        lines.append(f"{pad}{key}:")
        for i, v in enumerate(obj):
            _render_text(v, lines, depth + 1, f"[{i}]")
    else:
        lines.append(f"{head}{obj}")


def _parse_pair_flag(flag: str):
    try:
        left, right = flag.split("/")
        a, b = (int(x) for x in left.split(","))
        a2, b2 = (int(x) for x in right.split(","))
        return (a, b), (a2, b2)
    except (ValueError, AttributeError) as err:
        raise ParseError(f"--pair expects a,b/a',b' with integers, got {flag!r}") from err


def _cmd_analyze(args) -> int:
    m = ingest.parse_monoid(_read(args.monoid))
    report = monoid_report(m, cu_cap=args.cu_cap, cong_cap=args.cong_cap, m_max=args.m_max)
    _emit(report, args)
    return EXIT_OK


def _cmd_classify_act(args) -> int:
    m = ingest.parse_monoid(_read(args.monoid))
    act = ingest.parse_act(_read(args.act), monoid=m)
    verdicts = hierarchy_verdicts(act, m_max=args.m_max)
    chain = [verdicts["free"], verdicts["projective"],
             verdicts["strongly_flat"]["status"],
             verdicts["flat"].get("status") != "no",
             verdicts["weakly_flat"]["status"]]
    consistent = all(not a or b for a, b in zip(chain, chain[1:]))
    payload = {"schema": "acta/1", **verdicts, "hierarchy_consistent": consistent}
    _emit(payload, args)
    return EXIT_OK if consistent else EXIT_INCONSISTENT


def _cmd_tensor(args) -> int:
    m = ingest.parse_monoid(_read(args.monoid))
    right = ingest.parse_act(_read(args.right_act), monoid=m)
    left = ingest.parse_act(_read(args.left_act), monoid=m)
    tp = tensor(right, left)
    payload = {
        "schema": "acta/1",
        "class_count": tp.class_count(),
        "classes": [[list(p) for p in cls] for cls in tp.class_members()],
    }
    if args.pair is not None:
        p, q = _parse_pair_flag(args.pair)
        equal, toss = tensor_equal(right, left, p, q, tp)
        query = {"pair": [list(p), list(q)], "equal": equal}
        if toss is not None:
            query["tossing"] = {"skeleton": list(toss.skeleton.entries),
                                "left_chain": list(toss.left_chain),
                                "right_chain": list(toss.right_chain)}
        else:
            query["tossing"] = None
        payload["pair_query"] = query
    _emit(payload, args)
    return EXIT_OK


def _cmd_cu(args) -> int:
    m = ingest.parse_monoid(_read(args.monoid))
    subs = enumerate_cu(m, cap=args.cu_cap)
    payload = {"schema": "acta/1", "count": len(subs),
               "members": [list(s.members) for s in subs]}
    _emit(payload, args)
    return EXIT_OK


def _cmd_witness(args) -> int:
    m = ingest.parse_monoid(_read(args.monoid))
    stars = star_witness(m)
    payload = {"schema": "acta/1",
               "witnesses": [{"idempotent": e, "hubs": list(f)} for e, f in stars.items()]}
    _emit(payload, args)
    return EXIT_OK


def _cmd_from_dfa(args) -> int:
    dfa = ingest.parse_dfa(_read(args.dfa))
    m, words = ingest.transition_monoid(dfa)
    payload = {"schema": "acta/1",
               "monoid": {"order": m.order, "identity": m.identity,
                          "table": [list(r) for r in m.mul],
                          "labels": list(m.labels)},
               "words": [list(w) for w in words]}
    _emit(payload, args)
    return EXIT_OK


def _cmd_congruences(args) -> int:
    m = ingest.parse_monoid(_read(args.monoid))
    congs = left_congruences(m, cap=args.cong_cap)
    payload = {"schema": "acta/1", "count": len(congs),
               "congruences": [{"classes": list(c.classes),
                                "strongly_flat": is_strongly_flat_congruence(m, c)}
                               for c in congs]}
    _emit(payload, args)
    return EXIT_OK


_COMMANDS = {
    "analyze": _cmd_analyze,
    "classify-act": _cmd_classify_act,
    "tensor": _cmd_tensor,
    "cu": _cmd_cu,
    "witness": _cmd_witness,
    "from-dfa": _cmd_from_dfa,
    "congruences": _cmd_congruences,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except OSError as err:
        print(f"io error: {err}", file=sys.stderr)
        return EXIT_IO
    except OrderExceedsCap as err:
        print(f"cap exceeded: {err}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, ValidationError) as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return EXIT_VALIDATION
    except ActaError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_VALIDATION


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
