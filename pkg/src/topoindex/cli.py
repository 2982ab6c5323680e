"""Command-line interface: ``topoindex {compute,parse,octanes,correlate,verify}``.

Exit codes: 0 success, 1 input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import warnings
from importlib.metadata import PackageNotFoundError, version
from typing import Sequence, TextIO

from .estimators import resolve_indices
from .graph import Graph, GraphError, format_edge_list, parse_edge_list
from .indices import INDEX_LABELS, INDEX_NAMES, IndexVector, index_vector
from .octanes import (
    GOLDEN_COLUMNS,
    PRINTED_TABLE2,
    PRINTED_TABLE4,
    PRINTED_TABLE5,
    PRINTED_TABLE6,
    PROPERTY_LABELS,
    PROPERTY_NAMES,
    REAL_COLUMNS,
    dataset_csv,
    find_isomer,
    golden_index_table,
    octane_isomers,
)
from .smiles import SmilesError, parse_alkane
from .stats import (
    CorrelationError,
    CorrelationTable,
    correlation_table,
    cross_table,
    index_property_table,
    old_vs_new_table,
    squared_table,
)
from .verifier import GRAPH_GUARD, TREE_GUARD, must_hold, verify_all

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2

COMPUTE_ORDER = ("wiener", "m1", "m2", "randic", "s_ev", "s_alpha", "s_beta", "s_mu", "r_ve", "forgotten", "t_total")
TABLE3_ORDER = GOLDEN_COLUMNS


class InputError(Exception):
    """User input problem; message is printed as-is and exits with 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _fmt(name: str, value, decimals: int = 3) -> str:
    if isinstance(value, float):
        return f"{value:.{decimals}f}"
    return str(value)


# ---------------------------------------------------------------------------
# compute


def _compute_line(vec: IndexVector) -> str:
    return " ".join(f"{INDEX_LABELS[k]}={_fmt(k, getattr(vec, k))}" for k in COMPUTE_ORDER)


def _emit_vectors(items: list[tuple[str, IndexVector]], fmt: str, out: TextIO) -> None:
    if fmt == "text":
        for label, vec in items:
            out.write((f"{label}: " if len(items) > 1 else "") + _compute_line(vec) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["input", *(INDEX_LABELS[k] for k in COMPUTE_ORDER)])
        for label, vec in items:
            writer.writerow([label, *(_fmt(k, getattr(vec, k), 6) for k in COMPUTE_ORDER)])
    else:
        for label, vec in items:
            record = {"input": label, **{INDEX_LABELS[k]: getattr(vec, k) for k in COMPUTE_ORDER}}
            out.write(json.dumps(record) + "\n")


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except FileNotFoundError:
        raise InputError(f"{path}: file not found") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def cmd_compute(args, out: TextIO) -> int:
    items = []
    if args.smiles:
        for s in args.smiles:
            items.append((s, index_vector(_parse_smiles(s, 1))))
    if args.graph:
        text = _read_source(args.graph)
        try:
            g = parse_edge_list(text)
        except GraphError as exc:
            raise InputError(f"{args.graph}:{exc}") from None
        items.append((args.graph, index_vector(g)))
    if not items:
        raise InputError("compute: give a graph file or --smiles")
    _emit_vectors(items, args.format, out)
    return EXIT_OK


def _parse_smiles(text: str, line: int) -> Graph:
    try:
        return parse_alkane(text)
    except SmilesError as exc:
        raise InputError(f"{line}:{exc.position}: {exc.message}") from None


# ---------------------------------------------------------------------------
# parse


def cmd_parse(args, out: TextIO) -> int:
    if args.smiles:
        lines = list(args.smiles)
    else:
        lines = sys.stdin.read().splitlines()
    status = EXIT_OK
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text and not args.smiles:
            continue
        try:
            g = _parse_smiles(text, lineno)
        except InputError as exc:
            print(exc, file=sys.stderr)
            status = EXIT_INPUT
            continue
        out.write(format_edge_list(g, comment=text))
    return status


# ---------------------------------------------------------------------------
# octanes


def _golden_discrepancies() -> list[str]:
    lines = []
    for record, row in zip(octane_isomers(), golden_index_table()):
        vec = index_vector(record.skeleton)
        for col in TABLE3_ORDER:
            got, ref = getattr(vec, col), row.values[col]
            bad = abs(got - ref) > 5e-4 if col in REAL_COLUMNS else got != ref
            if bad:
                lines.append(f"{record.name} {INDEX_LABELS[col]}: printed {ref}, computed {_fmt(col, got, 4)}")
    return lines


def _table3(fmt: str, out: TextIO) -> None:
    rows = [(r.name, index_vector(r.skeleton)) for r in octane_isomers()]
    header = ["Molecule", *(INDEX_LABELS[c] for c in TABLE3_ORDER)]
    body = [[name, *(_fmt(c, getattr(v, c)) for c in TABLE3_ORDER)] for name, v in rows]
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["name", *header[1:]])
        writer.writerows(body)
        return
    discrepancies = _golden_discrepancies()
    if fmt == "json":
        payload = {
            "table": 3,
            "rows": [{"name": name, **{INDEX_LABELS[c]: getattr(v, c) for c in TABLE3_ORDER}} for name, v in rows],
            "discrepancies": discrepancies,
        }
        out.write(json.dumps(payload) + "\n")
        return
    out.write(_markdown(header, body))
    _write_discrepancies(discrepancies, out)


def _table1(fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        out.write(dataset_csv())
        return
    records = octane_isomers()
    if fmt == "json":
        payload = {
            "table": 1,
            "rows": [{"name": r.name, "smiles": r.smiles, **dict(zip(PROPERTY_NAMES, map(float, r.raw_properties)))} for r in records],
        }
        out.write(json.dumps(payload) + "\n")
        return
    header = ["Molecule", "SMILES", *(PROPERTY_LABELS[p] for p in PROPERTY_NAMES)]
    out.write(_markdown(header, [[r.name, r.smiles, *r.raw_properties] for r in records]))


def _markdown(header: list[str], body: list[list[str]]) -> str:
    widths = [max(len(str(line[k])) for line in [header, *body]) for k in range(len(header))]
    fmt = lambda cells: "| " + " | ".join(str(c).ljust(w) for c, w in zip(cells, widths)) + " |"
    sep = "|" + "|".join("-" * (w + 2) for w in widths) + "|"
    return "\n".join([fmt(header), sep, *(fmt(line) for line in body)]) + "\n"


def _write_discrepancies(lines: list[str], out: TextIO) -> None:
    out.write(f"\ndiscrepancies vs printed table: {len(lines)}\n")
    for line in lines:
        out.write(f"  {line}\n")


def correlation_tables() -> dict[int, tuple[CorrelationTable, tuple]]:
    records = octane_isomers()
    t2 = index_property_table(records)
    return {
        2: (t2, PRINTED_TABLE2),
        4: (squared_table(t2), PRINTED_TABLE4),
        5: (old_vs_new_table(records), PRINTED_TABLE5),
        6: (cross_table(records), PRINTED_TABLE6),
    }


def _correlation_output(table: CorrelationTable, printed, fmt: str, out: TextIO, number=None) -> None:
    if fmt == "csv":
        out.write(table.to_csv())
        return
    discrepancies = []
    if printed is not None:
        for d in table.compare(printed):
            discrepancies.append(
                f"{INDEX_LABELS.get(d.row, d.row)} / {INDEX_LABELS.get(d.col) or PROPERTY_LABELS.get(d.col, d.col)}: "
                f"printed {d.printed:.4f}, computed {d.computed:.4f}"
            )
    if fmt == "json":
        payload = table.to_dict()
        if number is not None:
            payload = {"table": number, **payload, "discrepancies": discrepancies}
        out.write(json.dumps(payload) + "\n")
        return
    out.write(table.to_markdown())
    if printed is not None:
        _write_discrepancies(discrepancies, out)


def cmd_octanes(args, out: TextIO) -> int:
    if args.export:
        out.write(dataset_csv())
        return EXIT_OK
    if args.table == 1:
        _table1(args.format, out)
    elif args.table == 3:
        _table3(args.format, out)
    else:
        table, printed = correlation_tables()[args.table]
        _correlation_output(table, printed, args.format, out, args.table)
    return EXIT_OK


# ---------------------------------------------------------------------------
# correlate


def read_property_csv(text: str, source: str = "<csv>") -> tuple[list[Graph], dict[str, list[float]]]:
    """Rows keyed by molecule name (or an explicit ``smiles`` column)."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise InputError(f"{source}:1:1: empty CSV") from None
    lowered = [h.strip().lower() for h in header]
    if "name" not in lowered and "smiles" not in lowered:
        raise InputError(f"{source}:1:1: header needs a 'name' or 'smiles' column")
    name_col = lowered.index("name") if "name" in lowered else None
    smiles_col = lowered.index("smiles") if "smiles" in lowered else None
    prop_cols = [k for k in range(len(header)) if k not in (name_col, smiles_col)]
    if not prop_cols:
        raise InputError(f"{source}:1:1: no property columns")
    graphs: list[Graph] = []
    props: dict[str, list[float]] = {header[k].strip(): [] for k in prop_cols}
    for row in reader:
        lineno = reader.line_num
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(header):
            raise InputError(f"{source}:{lineno}:1: expected {len(header)} fields, found {len(row)}")
        if smiles_col is not None:
            try:
                graphs.append(parse_alkane(row[smiles_col].strip()))
            except SmilesError as exc:
                raise InputError(f"{source}:{lineno}:{_col(row, smiles_col) + exc.position - 1}: {exc.message}") from None
        else:
            record = find_isomer(row[name_col])
            if record is None:
                raise InputError(f"{source}:{lineno}:{_col(row, name_col)}: unknown molecule {row[name_col]!r}")
            graphs.append(record.skeleton)
        for k in prop_cols:
            try:
                props[header[k].strip()].append(float(row[k]))
            except ValueError:
                raise InputError(f"{source}:{lineno}:{_col(row, k)}: not a number: {row[k]!r}") from None
    if len(graphs) < 2:
        raise InputError(f"{source}: need at least two data rows")
    return graphs, props


def _col(row: list[str], k: int) -> int:
    return sum(len(c) + 1 for c in row[:k]) + 1


def cmd_correlate(args, out: TextIO) -> int:
    graphs, props = read_property_csv(_read_source(args.properties), args.properties)
    names = resolve_indices(args.indices) if args.indices else tuple(n for n in INDEX_NAMES if n != "t_total")
    vectors = [index_vector(g) for g in graphs]
    rows = {n: [getattr(v, n) for v in vectors] for n in names}
    try:
        table = correlation_table(rows, props)
    except CorrelationError as exc:
        raise InputError(f"{args.properties}: {exc}") from None
    _correlation_output(table, None, args.format, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args, out: TextIO) -> int:
    tree_guard, graph_guard = TREE_GUARD, GRAPH_GUARD
    if args.allow_large:
        tree_guard = max(tree_guard, args.n_trees)
        graph_guard = max(graph_guard, args.n_graphs)
        if args.n_trees > TREE_GUARD or args.n_graphs > GRAPH_GUARD:
            warnings.warn("enumeration guard raised; this may run for a very long time", RuntimeWarning)
    try:
        reports = verify_all(
            args.n_trees, args.n_graphs, workers=args.jobs, tree_guard=tree_guard, graph_guard=graph_guard
        )
    except GraphError as exc:
        raise InputError(f"verify: {exc}") from None
    for report in reports:
        out.write((report.to_json() if args.format == "jsonl" else report.to_text() + "\n") + "\n")
    failed = [r.claim_id for r in reports if must_hold(r) and not r.holds]
    if failed:
        print(f"verification failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


# ---------------------------------------------------------------------------


def _version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "unknown"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="topoindex", description="Topological indices of molecular graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {_version()}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="print all indices of a graph")
    p.add_argument("graph", nargs="?", help="edge-list file ('-' for stdin)")
    p.add_argument("--smiles", action="append", help="alkane SMILES (repeatable)")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("parse", help="print the carbon skeleton of SMILES as an edge list")
    p.add_argument("--smiles", action="append", help="alkane SMILES; default reads one per line from stdin")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("octanes", help="regenerate the octane-isomer tables")
    p.add_argument("--table", type=int, choices=range(1, 7), default=3, metavar="{1..6}")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--export", action="store_true", help="write the dataset as CSV and exit")
    p.set_defaults(func=cmd_octanes)

    p = sub.add_parser("correlate", help="correlate indices with properties from a CSV")
    p.add_argument("--properties", required=True, help="CSV with a name or smiles column ('-' for stdin)")
    p.add_argument("--indices", nargs="+", help="index labels to include (default: all but Te)")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("verify", help="exhaustively check identities and bounds")
    p.add_argument("--n-trees", type=int, default=TREE_GUARD, help=f"largest tree order (default {TREE_GUARD})")
    p.add_argument("--n-graphs", type=int, default=GRAPH_GUARD, help=f"largest connected-graph order (default {GRAPH_GUARD})")
    p.add_argument("--allow-large", action="store_true", help="lift the enumeration guards")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--format", choices=("jsonl", "text"), default="jsonl")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except InputError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
