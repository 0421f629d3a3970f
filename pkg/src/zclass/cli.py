"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from zclass import classifier as cf
from zclass import verify
from zclass.oracle import MAX_DEGREE, OracleCapacityError
from zclass.partitions import (
    Partition,
    count_delta,
    count_epsilon,
    count_p,
    count_p_tilde,
    count_q,
    count_q_tilde,
    delta_witnesses,
)
from zclass.symgroup import (
    Group,
    all_parts_square,
    canonical_representative,
    center_exception_in_alt,
    centralizer_shape,
    is_even_partition,
    splits_in_alt,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

FORMATS = ("text", "csv", "json")
TABLES = ("p_tilde", "q_qtilde", "eps_delta")


class DomainError(ValueError):
    """Well-formed input outside the range a command is defined on."""


@dataclass
class ReportDocument:
    format: str
    body: str
    exit_code: int = EXIT_OK


def _render(fmt: str, payload: dict[str, Any], header: Sequence[str], rows: Sequence[Sequence[Any]], text: str) -> ReportDocument:
    if fmt == "json":
        return ReportDocument(fmt, json.dumps(payload, indent=2) + "\n")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return ReportDocument(fmt, buf.getvalue())
    return ReportDocument(fmt, text)


def _kv_text(fields: dict[str, Any]) -> str:
    def show(v: Any) -> str:
        if v is None:
            return "-"
        if isinstance(v, bool):
            return "true" if v else "false"
        return str(v)

    return "".join(f"{k}: {show(v)}\n" for k, v in fields.items())


# -- tables ------------------------------------------------------------------


def cmd_tables(table: str, max_m: int, fmt: str = "text") -> ReportDocument:
    if table not in TABLES:
        raise ValueError(f"unknown table {table!r}")
    if max_m < 1:
        raise DomainError("--max must be >= 1")
    if table == "p_tilde":
        header = ["m", "p_tilde"]
        rows = [[m, count_p_tilde(m)] for m in range(1, max_m + 1)]
        records = [dict(zip(header, r)) for r in rows]
    elif table == "q_qtilde":
        header = ["m", "q", "q_tilde"]
        rows = [[m, count_q(m), count_q_tilde(m)] for m in range(1, max_m + 1)]
        records = [dict(zip(header, r)) for r in rows]
    else:
        header = ["n", "epsilon", "delta", "partitions"]
        rows, records = [], []
        for n in range(1, max_m + 1):
            witnesses = [w.to_text(explicit=True) for w in delta_witnesses(n)]
            delta = count_delta(n)
            assert delta == len(witnesses)
            rows.append([n, count_epsilon(n), delta, "; ".join(witnesses)])
            records.append({"n": n, "epsilon": rows[-1][1], "delta": delta, "partitions": witnesses})
    if table == "eps_delta":
        lines = [" ".join(header)]
        for n, eps, delta, ws in rows:
            tail = " " + ws.replace("; ", ", ") if ws else ""
            lines.append(f"{n} {eps} {delta}{tail}")
    else:
        lines = [" ".join(header)] + [" ".join(map(str, r)) for r in rows]
    payload = {"command": "tables", "table": table, "rows": records}
    return _render(fmt, payload, header, rows, "\n".join(lines) + "\n")


# -- classify ----------------------------------------------------------------


def _check_group_n(group: Group, n: int) -> None:
    low = 3 if group is Group.SYM else 4
    if n < low:
        raise DomainError(f"{'S' if group is Group.SYM else 'A'}_n needs n >= {low}, got {n}")


def classify_partition(group: Group, lam: Partition) -> dict[str, Any]:
    group = Group(group)
    n = lam.weight
    _check_group_n(group, n)
    even = is_even_partition(lam)
    fields: dict[str, Any] = {"command": "classify", "group": group.value, "partition": str(lam), "n": n, "even": even}
    if group is Group.SYM:
        partner = cf.zpartner_sym(lam)
        fields.update(
            splits=splits_in_alt(lam) if even else False,
            zpartner=str(partner) if partner else None,
            split_zclasses_distinct=None,
            rational=True,
            center_exception=None,
            centralizer_order=centralizer_shape(lam, Group.SYM).order,
        )
        return fields
    if not even:
        raise DomainError(
            f"{lam} is odd: n - (number of parts) = {n - lam.num_parts} must be even for A_n"
        )
    splits = splits_in_alt(lam)
    partner = cf.zpartner_alt(lam)
    label = cf.ClassLabel(lam, cf.Tag.SPLIT_POS if splits else cf.Tag.WHOLE)
    fields.update(
        splits=splits,
        zpartner=str(partner) if partner else None,
        split_zclasses_distinct=all_parts_square(lam) if splits else None,
        rational=cf.is_rational_conjugacy_class(label),
        center_exception=center_exception_in_alt(lam),
        centralizer_order=centralizer_shape(lam, Group.ALT).order,
    )
    return fields


def cmd_classify(group: Group, partition: str, fmt: str = "text") -> ReportDocument:
    fields = classify_partition(Group(group), Partition.parse(partition))
    shown = {k: v for k, v in fields.items() if k != "command"}
    return _render(fmt, fields, list(shown), [list(shown.values())], _kv_text(shown))


# -- count -------------------------------------------------------------------


def count_fields(group: Group, n: int) -> dict[str, Any]:
    group = Group(group)
    _check_group_n(group, n)
    if group is Group.SYM:
        return {"command": "count", "group": group.value, "n": n,
                "conjugacy_classes": count_p(n), "z_classes": cf.count_zclasses_sym(n)}
    return {
        "command": "count",
        "group": group.value,
        "n": n,
        "conjugacy_classes": cf.cl_alt(n),
        "z_classes": cf.count_zclasses_alt(n),
        "rational_conjugacy_classes": cf.cl_alt(n) - 2 * count_q(n) + 2 * count_delta(n),
        "rational_classes": cf.cl_alt(n) - count_q(n) + count_delta(n),
        "rational_characters": cf.count_rational_characters(n),
    }


def cmd_count(group: Group, n: int, fmt: str = "text") -> ReportDocument:
    fields = count_fields(group, n)
    shown = {k: v for k, v in fields.items() if k != "command"}
    return _render(fmt, fields, list(shown), [list(shown.values())], _kv_text(shown))


# -- zclasses ----------------------------------------------------------------


def _classification(group: Group, n: int) -> cf.ZClassification:
    group = Group(group)
    _check_group_n(group, n)
    if group is Group.SYM:
        return cf.classify_zclasses_sym(n)
    return cf.classify_zclasses_alt(n)


def cmd_zclasses(group: Group, n: int, fmt: str = "text", merged_only: bool = False) -> ReportDocument:
    z = _classification(group, n)
    groups = z.merged_groups() if merged_only else z.groups()
    lines = ["{" + ", ".join(str(label.partition) for label in g) + "}" for g in groups]
    payload = {
        "command": "zclasses",
        "group": z.group.value,
        "n": n,
        "conjugacy_classes": len(z.classes),
        "z_classes": z.z_count,
        "groups": [[{"partition": str(label.partition), "tag": label.tag.value} for label in g] for g in groups],
    }
    rows = [[z.zclass_of[g[0]], str(label.partition), label.tag.value] for g in groups for label in g]
    return _render(fmt, payload, ["zclass", "partition", "tag"], rows, "".join(line + "\n" for line in lines))


# -- rep ---------------------------------------------------------------------


def cmd_rep(partition: str, fmt: str = "text") -> ReportDocument:
    lam = Partition.parse(partition)
    sigma = str(canonical_representative(lam))
    payload = {"command": "rep", "partition": str(lam), "permutation": sigma}
    return _render(fmt, payload, ["partition", "permutation"], [[str(lam), sigma]], sigma + "\n")


# -- verify ------------------------------------------------------------------


def cmd_verify(n_max: int, checks: Sequence[str] = verify.CHECKS, fmt: str = "text") -> ReportDocument:
    if not 3 <= n_max <= MAX_DEGREE:
        raise DomainError(f"--max must be in 3..{MAX_DEGREE} for verification")
    results = verify.run_checks(n_max, checks)
    failures = [r for r in results if not r.passed]
    summary = "all checks passed" if not failures else f"{len(failures)} check(s) failed"
    payload = {
        "command": "verify",
        "n_max": n_max,
        "passed": not failures,
        "results": [{"check": r.check, "n": r.n, "passed": r.passed, "detail": r.detail} for r in results],
    }
    rows = [[r.check, r.n, "pass" if r.passed else "fail", r.detail] for r in results]
    text = "".join(r.line() + "\n" for r in results) + summary + "\n"
    doc = _render(fmt, payload, ["check", "n", "status", "detail"], rows, text)
    doc.exit_code = EXIT_MISMATCH if failures else EXIT_OK
    return doc


# -- argument parsing --------------------------------------------------------


def _checks_arg(text: str) -> list[str]:
    if text == "all":
        return list(verify.CHECKS)
    names = [t.strip() for t in text.split(",") if t.strip()]
    bad = [t for t in names if t not in verify.CHECKS]
    if bad or not names:
        raise argparse.ArgumentTypeError(f"unknown checks {bad}; choose from {', '.join(verify.CHECKS)} or all")
    return names


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("-v", "--verbose", action="store_true")

    grouped = argparse.ArgumentParser(add_help=False)
    grouped.add_argument("--group", choices=[g.value for g in Group], default=Group.ALT.value)

    parser = argparse.ArgumentParser(
        prog="zclass",
        description="z-classes, rational classes and restricted partition counts for S_n and A_n",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", parents=[common], help="reproduce the restricted-partition tables")
    p.add_argument("table", choices=TABLES)
    p.add_argument("--max", type=int, default=20, dest="max_m")

    p = sub.add_parser("classify", parents=[common, grouped], help="classify one cycle type")
    p.add_argument("partition", nargs="+", help='partition such as 1^3 5')

    p = sub.add_parser("count", parents=[common, grouped], help="class and z-class counts at n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("zclasses", parents=[common, grouped], help="list every z-class at n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--merged-only", action="store_true", help="only z-classes with more than one class")

    p = sub.add_parser("rep", parents=[common], help="canonical representative in cycle notation")
    p.add_argument("partition", nargs="+")

    p = sub.add_parser("verify", parents=[common], help="check the classifier against brute force")
    p.add_argument("--max", type=int, default=8, dest="max_n")
    p.add_argument("--checks", type=_checks_arg, default=list(verify.CHECKS))
    return parser


def run(argv: Optional[Sequence[str]] = None) -> ReportDocument:
    """Parse ``argv`` and run the command; argparse usage errors still exit with 2."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        if args.command == "tables":
            return cmd_tables(args.table, args.max_m, args.format)
        if args.command == "classify":
            return cmd_classify(Group(args.group), " ".join(args.partition), args.format)
        if args.command == "count":
            return cmd_count(Group(args.group), args.n, args.format)
        if args.command == "zclasses":
            return cmd_zclasses(Group(args.group), args.n, args.format, args.merged_only)
        if args.command == "rep":
            return cmd_rep(" ".join(args.partition), args.format)
        return cmd_verify(args.max_n, args.checks, args.format)
    except (DomainError, OracleCapacityError) as exc:
        return ReportDocument(args.format, f"error: {exc}\n", EXIT_DOMAIN)
    except ValueError as exc:
        return ReportDocument(args.format, f"error: {exc}\n", EXIT_USAGE)


def main(argv: Optional[Sequence[str]] = None) -> int:
    doc = run(argv)
    stream = sys.stdout if doc.exit_code in (EXIT_OK, EXIT_MISMATCH) else sys.stderr
    stream.write(doc.body)
    return doc.exit_code


if __name__ == "__main__":
    sys.exit(main())
