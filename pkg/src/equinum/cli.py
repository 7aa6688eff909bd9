"""Command-line driver. Each invocation writes one JSON document to stdout.

Exit codes: 0 the claim holds, 1 the claim is refuted (a certificate is
emitted), 2 usage, parse or semantic error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .cardinal import NumberRegistry, number_of
from .dsl import DslError, format_document, parse_universe
from .equinumerosity import (
    DEFAULT_ENUM_CAP,
    count_phi,
    enumerate_phi,
    exists_phi,
    exists_phi_within,
)
from .equivalence import (
    count_bijections,
    equivalence_report,
    find_nonreciprocal_phi,
    random_pair_generator,
)
from .laws import is_exclusive, is_functional, is_injective_mapping, law_violations
from .model import (
    CardinalityMismatch,
    Correspondence,
    DeficiencySet,
    DirectedRelation,
    EquinumError,
    Witness,
)

EXIT_OK, EXIT_REFUTED, EXIT_ERROR = 0, 1, 2


class UsageError(EquinumError):
    pass


def relation_json(r: DirectedRelation):
    return [[s.symbol, t.symbol] for s, t in r.sorted_pairs()]


def phi_json(phi: Correspondence):
    return {"forward": relation_json(phi.forward), "backward": relation_json(phi.backward)}


def certificate_json(cert):
    if cert is None:
        return None
    if isinstance(cert, Witness):
        return {"type": "Witness", **phi_json(cert.correspondence)}
    if isinstance(cert, CardinalityMismatch):
        return {"type": "CardinalityMismatch", "size_f": cert.size_f, "size_g": cert.size_g}
    if isinstance(cert, DeficiencySet):
        return {
            "type": "DeficiencySet",
            "side": cert.side,
            "objects": [o.symbol for o in sorted(cert.objects)],
        }
    raise TypeError(f"not a certificate: {cert!r}")


def report_json(report):
    return {
        "max_size": report.max_size,
        "cells": [
            {"size_f": c.size_f, "size_g": c.size_g, "verdicts": c.verdicts}
            for c in report.cells
        ],
        "discrepancies": [
            {"size_f": d.size_f, "size_g": d.size_g, "kind": d.kind, "detail": _plain(d.detail)}
            for d in report.discrepancies
        ],
        "phi_counts": [str(n) for n in report.phi_counts],
        "bijection_counts": [str(n) for n in report.bijection_counts],
        "reciprocal_counts": [str(n) for n in report.reciprocal_counts],
    }


def _plain(value):
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, Correspondence):
        return phi_json(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return value


def _doc(command, verdict=None, certificate=None, counts=None, result=None, diagnostics=None):
    return {
        "command": command,
        "verdict": verdict,
        "certificate": certificate_json(certificate),
        "counts": {k: str(v) for k, v in (counts or {}).items()},
        "diagnostics": diagnostics or [],
        "result": result,
    }


def _load(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_universe(text)


def _lookup(doc, category, name):
    table = doc.universe.concepts if category == "concept" else doc.universe.relations
    if name not in table:
        raise UsageError(f"unknown {category} {name!r}")
    return table[name]


def cmd_check_laws(args):
    doc = _load(args.file)
    r = _lookup(doc, "relation", args.relation)
    result = {
        "functional": is_functional(r),
        "exclusive": is_exclusive(r),
        "violations": [
            {"law": law, "pairs": [[a.symbol, b.symbol], [c.symbol, d.symbol]]}
            for law, (a, b), (c, d) in law_violations(r)
        ],
    }
    verdict = result["functional"] and result["exclusive"]
    if args.source or args.target:
        if not (args.source and args.target):
            raise UsageError("--from and --to must be given together")
        f = _lookup(doc, "concept", args.source)
        g = _lookup(doc, "concept", args.target)
        result["total"] = f.extension <= r.sources()
        result["injective_mapping"] = is_injective_mapping(r, f, g)
        verdict = result["injective_mapping"]
    return _doc("check-laws", verdict, result=result)


def cmd_equinum(args):
    doc = _load(args.file)
    f = _lookup(doc, "concept", args.f)
    g = _lookup(doc, "concept", args.g)
    if args.within:
        ok, cert = exists_phi_within(f, g, _lookup(doc, "relation", args.within))
    else:
        ok, cert = exists_phi(f, g)
    return _doc("equinum", ok, cert, counts={"size_f": len(f), "size_g": len(g)})


def cmd_enumerate_phi(args):
    doc = _load(args.file)
    f = _lookup(doc, "concept", args.f)
    g = _lookup(doc, "concept", args.g)
    phis = [phi_json(p) for p in enumerate_phi(f, g, cap=args.enum_cap)]
    return _doc("enumerate-phi", bool(phis), counts={"phi": len(phis)}, result=phis)


def cmd_count_phi(args):
    doc = _load(args.file)
    f = _lookup(doc, "concept", args.f)
    g = _lookup(doc, "concept", args.g)
    counts = {"phi": count_phi(f, g)}
    cap = DEFAULT_ENUM_CAP if args.enum_cap is None else args.enum_cap
    if len(f) <= cap and len(g) <= cap:
        counts["bijections"] = count_bijections(f, g, cap=cap)
    return _doc("count-phi", True, counts=counts)


def cmd_number(args):
    doc = _load(args.file)
    target = _lookup(doc, "concept", args.f)
    reg = NumberRegistry(doc.universe)
    for c in doc.universe.concepts.values():
        number_of(c, reg)
    handle = number_of(target, reg)
    members = [c.name for c in reg.concepts(handle)]
    return _doc(
        "number",
        True,
        counts={"number": handle.class_id},
        result={"concept": target.name, "class_id": handle.class_id, "equinumerous": members},
    )


def cmd_nonreciprocal(args):
    doc = _load(args.file)
    f = _lookup(doc, "concept", args.f)
    g = _lookup(doc, "concept", args.g)
    phi = find_nonreciprocal_phi(f, g)
    return _doc("nonreciprocal", phi is not None, result=None if phi is None else phi_json(phi))


def cmd_equiv_suite(args):
    make = random_pair_generator(args.seed) if args.seed is not None else None
    kwargs = {"cap": args.enum_cap}
    if make is not None:
        kwargs["make_pair"] = make
    report = equivalence_report(args.max_n, **kwargs)
    result = report_json(report)
    if args.figure:
        from .plotting import plot_report

        plot_report(report, args.figure)
        result["figure"] = args.figure
    return _doc(
        "equiv-suite",
        report.ok,
        counts={"cells": len(report.cells), "discrepancies": len(report.discrepancies)},
        result=result,
    )


def cmd_fmt(args):
    doc = _load(args.file)
    text = format_document(doc.source)
    return _doc("fmt", True, result={"document": text})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--enum-cap", type=int, default=None, metavar="N",
                        help=f"enumeration cap per concept (default {DEFAULT_ENUM_CAP})")
    common.add_argument("--human", action="store_true", help="human-readable output instead of JSON")

    parser = argparse.ArgumentParser(prog="equinum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-laws", parents=[common], help="functionality/exclusivity of a relation")
    p.add_argument("--relation", required=True)
    p.add_argument("--from", dest="source")
    p.add_argument("--to", dest="target")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_laws)

    p = sub.add_parser("equinum", parents=[common], help="decide equinumerosity with a certificate")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--within", metavar="R")
    p.add_argument("file")
    p.set_defaults(func=cmd_equinum)

    for name, func, text in [
        ("enumerate-phi", cmd_enumerate_phi, "list every valid correspondence"),
        ("count-phi", cmd_count_phi, "count valid correspondences"),
        ("nonreciprocal", cmd_nonreciprocal, "a valid correspondence that is not a bijection"),
    ]:
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("f")
        p.add_argument("g")
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("number", parents=[common], help="number class of a concept")
    p.add_argument("f")
    p.add_argument("file")
    p.set_defaults(func=cmd_number)

    p = sub.add_parser("equiv-suite", parents=[common], help="cross-check the definitions")
    p.add_argument("--max-n", type=int, required=True, metavar="K")
    p.add_argument("--seed", type=int, default=None, help="draw overlapping random concepts")
    p.add_argument("--figure", metavar="PATH", help="also render the report to an image file")
    p.set_defaults(func=cmd_equiv_suite)

    p = sub.add_parser("fmt", parents=[common], help="print the canonical form of a document")
    p.add_argument("file")
    p.set_defaults(func=cmd_fmt)
    return parser


def render_human(doc) -> str:
    if doc["command"] == "fmt" and doc["result"]:
        return doc["result"]["document"].rstrip("\n")
    lines = [f"{doc['command']}: {'holds' if doc['verdict'] else 'refuted'}"]
    cert = doc["certificate"]
    if cert:
        kind = cert["type"]
        if kind == "Witness":
            lines.append(f"  witness forward  {_pairs(cert['forward'])}")
            lines.append(f"          backward {_pairs(cert['backward'])}")
        elif kind == "CardinalityMismatch":
            lines.append(f"  cardinality mismatch {cert['size_f']} vs {cert['size_g']}")
        else:
            lines.append(f"  Hall violation on {cert['side']}: {{{', '.join(cert['objects'])}}}")
    for k, v in doc["counts"].items():
        lines.append(f"  {k} = {v}")
    for d in doc["diagnostics"]:
        lines.append(f"  {d.get('line', '-')}:{d.get('column', '-')}: {d['message']}")
    return "\n".join(lines)


def _pairs(pairs):
    return "{" + ", ".join(f"({s},{t})" for s, t in pairs) + "}"


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK

    try:
        doc = args.func(args)
        code = EXIT_OK if doc["verdict"] in (True, None) else EXIT_REFUTED
    except DslError as exc:
        doc = _doc(args.command, diagnostics=[exc.as_dict()])
        code = EXIT_ERROR
    except EquinumError as exc:
        doc = _doc(args.command, diagnostics=[{"kind": "error", "message": str(exc)}])
        code = EXIT_ERROR
    for d in doc["diagnostics"]:
        where = f"{getattr(args, 'file', '-')}:{d['line']}:{d['column']}: " if "line" in d else ""
        print(f"equinum: {where}{d['message']}", file=stderr)

    if args.human:
        print(render_human(doc), file=stdout)
    else:
        print(json.dumps(doc, indent=2), file=stdout)
    return code


def main(argv: Optional[list] = None) -> None:
    sys.exit(run_cli(argv))


if __name__ == "__main__":
    main()
