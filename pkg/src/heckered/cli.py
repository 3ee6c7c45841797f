"""Command-line front end.

Exit status: 0 success, 1 usage or parse error, 2 computation error
(invalid nilpotent datum and the like), 3 internal disagreement between the
independent reducibility routes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from fractions import Fraction

from ._exact import fmt
from .grading import good_parabolic_dims, orbit_dim
from .levi import maximal_levi, parse_datum
from .reducibility import (
    InductionSpec,
    ReducibilityReport,
    full_report,
    infinitesimal_character,
    nilradical_counts,
    report_to_dict,
)
from .rootsys import CartanType, build_root_system, height

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cartan_type(text: str) -> CartanType:
    try:
        return CartanType.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="heckered",
        description="Reducibility points of generic standard modules of graded Hecke algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--type", required=True, type=_cartan_type, help="Cartan type, e.g. E8")
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = sub.add_parser("roots", help="list positive roots")
    common(p)
    for name, help_ in (("reduce", "reducibility points for a maximal parabolic"),
                        ("check", "irreducibility verdict at one value of nu")):
        p = sub.add_parser(name, help=help_)
        common(p)
        p.add_argument("--node", required=True, type=int, help="simple root removed from the Levi")
        p.add_argument("--nilpotent", default="principal",
                       help="principal | marks:q1,q2,... | partitions:p.p;p.p")
        if name == "check":
            p.add_argument("--nu", required=True, type=_rational, help="positive rational p/q")
    p = sub.add_parser("scan", help="all maximal parabolics with principal Levi nilpotents")
    common(p)
    return parser


# --- rendering ------------------------------------------------------------


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _strings_line(ds) -> str:
    counts = Counter(ds)
    terms = []
    for d in sorted(counts, reverse=True):
        k = counts[d]
        terms.append(f"({d})" if k == 1 else f"{k}*({d})")
    return "+".join(terms) if terms else "0"


def render_roots(t: CartanType, fmt_: str) -> str:
    rs = build_root_system(t)
    top = rs.highest_root
    if fmt_ == "json":
        data = {
            "type": str(t),
            "positive_roots": [list(b) for b in rs.positive_roots],
            "heights": [height(b) for b in rs.positive_roots],
            "highest_root": list(top),
        }
        return json.dumps(data, indent=2) + "\n"
    if fmt_ == "csv":
        rows = [["index", "root", "height"]]
        rows += [[n, " ".join(map(str, b)), height(b)] for n, b in enumerate(rs.positive_roots, 1)]
        return _csv(rows)
    width = max(len(str(b)) for b in rs.positive_roots)
    lines = [f"# {t}: {len(rs.positive_roots)} positive roots"]
    lines += [f"{n:4d}  {str(b):<{width}}  height {height(b)}"
              for n, b in enumerate(rs.positive_roots, 1)]
    lines.append(f"highest root {top}, height {height(top)}")
    lines.append("k per node: " + ", ".join(f"{j}:{c}" for j, c in enumerate(top, 1)))
    return "\n".join(lines) + "\n"


def render_report(report: ReducibilityReport, fmt_: str) -> str:
    data = report_to_dict(report)
    if fmt_ == "json":
        return json.dumps(data, indent=2) + "\n"
    if fmt_ == "csv":
        return _csv([
            ["type", "node", "levi", "k_alpha", "dim_n", "points"],
            [data["type"], data["removed_node"], data["levi_type"], data["k_alpha"],
             data["dim_n"], " ".join(data["points"])],
        ])
    agree = report.method_agreement
    lines = [
        f"type         {data['type']}",
        f"removed node {data['removed_node']}",
        f"levi         {data['levi_type']}",
        f"nilpotent    {data['nilpotent']}",
        f"k(alpha)     {data['k_alpha']}",
        f"dim n        {data['dim_n']}",
        "strings",
    ]
    for i, ds in sorted(report.strings.per_eigenvalue.items()):
        lines.append(f"  n_{i} = {_strings_line(ds)}")
    lines.append(f"points ({len(data['points'])})  {{{', '.join(data['points'])}}}")
    lines.append(
        "methods      "
        f"rational={'ok' if agree.rational else 'MISMATCH'} "
        f"scan={'ok' if agree.scan else 'MISMATCH'} "
        f"orbit={'ok' if agree.orbit else 'MISMATCH'}"
    )
    return "\n".join(lines) + "\n"


def _spec(t: CartanType, node: int, nilpotent: str) -> InductionSpec:
    rs = build_root_system(t)
    if not 1 <= node <= t.rank:
        raise UsageError(f"node {node} out of range 1..{t.rank} for {t}")
    levi = maximal_levi(rs, node)
    return InductionSpec(t, levi, parse_datum(nilpotent, levi), node)


def render_check(spec: InductionSpec, nu: Fraction, fmt_: str) -> str:
    rs = spec.root_system
    h = spec.middle().h
    ones, zeros = nilradical_counts(rs, spec.levi, h, spec.removed_node, nu)
    chi = infinitesimal_character(rs, spec.levi, h, spec.removed_node, nu)
    gp = good_parabolic_dims(rs, chi, h)
    odim = orbit_dim(gp)
    verdict = "IRREDUCIBLE" if ones == zeros else "REDUCIBLE"
    data = {
        "type": str(spec.ambient),
        "removed_node": spec.removed_node,
        "nu": fmt(nu),
        "verdict": verdict,
        "count_one": ones,
        "count_zero": zeros,
        "orbit_dim": odim,
        "dim_g1": gp.g1,
    }
    if fmt_ == "json":
        return json.dumps(data, indent=2) + "\n"
    if fmt_ == "csv":
        return _csv([list(data), list(data.values())])
    rel = "=" if odim == gp.g1 else "<"
    return (
        f"{verdict} at nu={fmt(nu)}: #{{<beta,chi>=1}}={ones} #{{<beta,chi>=0}}={zeros}; "
        f"orbit dim {odim} {rel} dim g_1 {gp.g1}\n"
    )


def render_scan(t: CartanType, fmt_: str) -> tuple[str, bool]:
    reports = [full_report(InductionSpec.maximal(t, node)) for node in range(1, t.rank + 1)]
    ok = all(r.method_agreement.all for r in reports)
    rows = [report_to_dict(r) for r in reports]
    if fmt_ == "json":
        return json.dumps(rows, indent=2) + "\n", ok
    table = [["type", "node", "levi", "k_alpha", "dim_n", "points"]]
    table += [[d["type"], d["removed_node"], d["levi_type"], d["k_alpha"], d["dim_n"],
               " ".join(d["points"])] for d in rows]
    if fmt_ == "csv":
        return _csv(table), ok
    widths = [max(len(str(row[c])) for row in table) for c in range(5)]
    lines = []
    for row in table:
        head = "  ".join(str(v).ljust(w) for v, w in zip(row[:5], widths))
        tail = row[5] if row is table[0] else "{" + ", ".join(row[5].split()) + "}"
        lines.append(f"{head}  {tail}")
    return "\n".join(lines) + "\n", ok


def run(args) -> tuple[str, int]:
    if args.command == "roots":
        return render_roots(args.type, args.format), EXIT_OK
    if args.command == "scan":
        text, ok = render_scan(args.type, args.format)
        return text, EXIT_OK if ok else EXIT_DISAGREE
    spec = _spec(args.type, args.node, args.nilpotent)
    if args.command == "check":
        if args.nu <= 0:
            raise UsageError(f"--nu must be positive, got {fmt(args.nu)}")
        return render_check(spec, args.nu, args.format), EXIT_OK
    report = full_report(spec)
    code = EXIT_OK if report.method_agreement.all else EXIT_DISAGREE
    return render_report(report, args.format), code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = run(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"heckered: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"heckered: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code == EXIT_DISAGREE:
        print("heckered: reducibility routes disagree", file=sys.stderr)
    return code
