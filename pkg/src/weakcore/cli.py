"""Command line front end.

Exit codes: 0 success, 1 input error, 2 the requested inverse does not
exist, 3 a uniqueness theorem was falsified on a proper ring.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from pathlib import Path

from weakcore import central, classical, corefamily
from weakcore.matrix import DimensionError, Matrix
from weakcore.oracle import build_ring, existence_table, uniqueness_violations
from weakcore.reference_examples import run_examples
from weakcore.report import consistency_report
from weakcore.scalar import RationalParseError, rat_parse
from weakcore.verify import InverseKind, check_axioms

EXIT_OK, EXIT_INPUT, EXIT_ABSENT, EXIT_THEOREM = 0, 1, 2, 3

COMPUTE_KINDS = (
    "mp",
    "drazin",
    "group",
    "core",
    "core-ep",
    "weak-group",
    "weak-core",
    "central-drazin",
    "central-weak-core",
)


class InputError(Exception):
    pass


_STRING = re.compile(r'"(?:[^"\\]|\\.)*"')


def _locate(text: str, ordinal: int) -> tuple[int, int] | None:
    """Line/column of the ``ordinal``-th string literal after the "matrix" key."""
    start = text.find('"matrix"')
    if start < 0:
        return None
    for i, m in enumerate(_STRING.finditer(text, start + len('"matrix"'))):
        if i == ordinal:
            line = text.count("\n", 0, m.start()) + 1
            col = m.start() - (text.rfind("\n", 0, m.start()) + 1) + 1
            return line, col
    return None


def parse_matrix_text(text: str, source: str = "<input>") -> Matrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise InputError(f'{source}: expected an object with key "matrix"')
    rows = doc["matrix"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise InputError(f"{source}: matrix must be a non-empty array of arrays")
    width = len(rows[0])
    if width == 0 or any(len(r) != width for r in rows):
        raise InputError(f"{source}: matrix rows must be non-empty and of equal length")
    parsed = []
    ordinal = 0
    for i, row in enumerate(rows):
        out = []
        for j, entry in enumerate(row):
            try:
                if not isinstance(entry, str):
                    raise RationalParseError(repr(entry), 0, "entries must be rational strings")
                out.append(rat_parse(entry))
            except RationalParseError as exc:
                where = _locate(text, ordinal) if isinstance(entry, str) else None
                loc = f"{source}:{where[0]}:{where[1] + 1 + exc.position}" if where else source
                raise InputError(f"{loc}: matrix[{i}][{j}]: {exc}") from None
            ordinal += 1
        parsed.append(out)
    return Matrix(parsed)


def load_matrix(path: str) -> Matrix:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return parse_matrix_text(text, path)


def format_matrix(m: Matrix) -> str:
    return "[" + ",".join("[" + ",".join(row) + "]" for row in m.to_strings()) + "]"


def _compute_one(a: Matrix, kind: str) -> tuple[Matrix | None, int, InverseKind, str]:
    """(value, index, axiom kind, reason-if-absent)."""
    if kind == "mp":
        return classical.moore_penrose(a), 0, InverseKind.MP, ""
    if not a.is_square:
        raise InputError(f"--kind {kind} needs a square matrix, got {a.rows}x{a.cols}")
    idx = classical.drazin_index(a)
    k = idx.paper_index
    if kind == "drazin":
        return classical.drazin(a), k, InverseKind.DRAZIN, ""
    if kind == "group":
        g = classical.group_inverse(a)
        return g, 1, InverseKind.GROUP, f"no group inverse (index {idx.drazin_index})"
    if kind == "core":
        c = corefamily.core_inverse(a)
        return c, 1, InverseKind.CORE, f"no core inverse (index {idx.drazin_index})"
    if kind == "core-ep":
        return corefamily.core_ep(a), k, InverseKind.CORE_EP, ""
    if kind == "weak-group":
        return corefamily.weak_group(a), k, InverseKind.WEAK_GROUP, ""
    if kind == "weak-core":
        res = corefamily.weak_core(a)
        return res.inverse, res.index, InverseKind.WEAK_CORE, ""
    if kind == "central-drazin":
        res = central.central_drazin(a)
        return res.inverse, res.index, InverseKind.CENTRAL_DRAZIN, f"no central Drazin inverse ({res.obstruction})"
    if kind == "central-weak-core":
        res = central.central_weak_core(a)
        return (
            res.inverse,
            res.index,
            InverseKind.CENTRAL_WEAK_CORE,
            f"no central weak core inverse ({res.obstruction})",
        )
    raise InputError(f"unknown kind {kind!r}")


def cmd_compute(args: argparse.Namespace) -> int:
    a = load_matrix(args.input)
    kinds = COMPUTE_KINDS if args.kind == "all" else (args.kind,)
    identities = None
    if args.verify and a.is_square:
        identities = [{"name": n, "holds": ok} for n, ok in consistency_report(a).identities]
    results = []
    code = EXIT_OK
    for kind in kinds:
        value, index, axiom_kind, reason = _compute_one(a, kind)
        entry = {"kind": kind, "inverse": None, "index": index}
        if value is None:
            entry["absent"] = reason
            if args.kind != "all":
                code = EXIT_ABSENT
        else:
            entry["inverse"] = value.to_strings()
            if args.verify:
                rep = check_axioms(a, value, axiom_kind, max(index, 1))
                entry["axioms"] = [{"name": n, "holds": ok} for n, ok in rep.verdicts]
                entry["identities"] = identities or []
        results.append((entry, value, reason))

    if args.json:
        payload = [e for e, _, _ in results]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
        return code
    for entry, value, reason in results:
        if value is None:
            print(f"{entry['kind']}: {reason}")
            continue
        print(f"{entry['kind']} (index {entry['index']}): {format_matrix(value)}")
        for ax in entry.get("axioms", []):
            print(f"  axiom {ax['name']}: {'ok' if ax['holds'] else 'FAIL'}")
    if identities is not None:
        for ident in identities:
            print(f"  identity {ident['name']}: {'ok' if ident['holds'] else 'FAIL'}")
    return code


def cmd_paper_examples(args: argparse.Namespace) -> int:
    checks = run_examples()
    if args.json:
        print(json.dumps({"checks": [c.to_dict() for c in checks],
                          "all_ok": all(c.ok for c in checks)}, indent=2))
        return EXIT_OK
    width = max(len(c.name) for c in checks)
    for c in checks:
        verdict = "PASS" if c.ok else c.status.upper()
        line = f"{c.name.ljust(width)}  {verdict}"
        if c.computed is not None:
            line += f"  {format_matrix(c.computed)}"
        print(line)
        if c.status == "discrepancy":
            print(f"{''.ljust(width)}  published {format_matrix(c.published)} fails the axioms")
    print(f"{sum(c.ok for c in checks)}/{len(checks)} checks pass")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.modulus < 2:
        raise InputError("--modulus must be at least 2")
    if args.kmax is not None and args.kmax < 1:
        raise InputError("--kmax must be positive")
    ring = build_ring(args.modulus)
    kinds = list(InverseKind) if args.kind == "all" else [InverseKind.from_slug(args.kind)]
    rows = existence_table(ring, kinds, args.kmax)
    violations = uniqueness_violations(ring, kinds, args.kmax) if ring.proper else []

    def cell(values):
        return ";".join("-" if v is None else str(v) for v in values) or "-"

    if args.json:
        print(json.dumps({"modulus": ring.modulus, "proper": ring.proper, "rows": rows,
                          "uniqueness_violations": len(violations)}, indent=2))
    else:
        if not ring.proper:
            print(f"# Z_{ring.modulus} is not proper: uniqueness not asserted")
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["element", "kind", "inverse", "k", "unique"])
        for r in rows:
            writer.writerow([r["element"], r["kind"], cell(r["inverse"]), cell(r["k"]),
                             "true" if r["unique"] else "false"])
    if violations:
        for v in violations:
            print(f"uniqueness violated: {v.kind.slug} of {v.element}: {v.solutions}",
                  file=sys.stderr)
        return EXIT_THEOREM
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weakcore", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute a generalized inverse of a matrix file")
    p.add_argument("input", help='JSON file {"matrix": [["1","2"],["3","4"]]}')
    p.add_argument("--kind", choices=COMPUTE_KINDS + ("all",), default="weak-core")
    p.add_argument("--verify", action="store_true", help="report axiom and identity checks")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("paper-examples", help="recompute the published worked examples")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_paper_examples)

    p = sub.add_parser("oracle", help="brute-force existence table over Z_n")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--kind", choices=[k.slug for k in InverseKind] + ["all"], default="weak-core")
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; 2 means "inverse absent" here
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
