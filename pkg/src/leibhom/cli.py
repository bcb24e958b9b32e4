"""Batch front end: JSON file formats, command dispatch, report emission.

Input documents keep every rational as a string ("3/2", "-1"), so nothing
in the pipeline ever touches a float.  Bracket and action tables are lists
of sparse entries

    {"left": <name>, "right": <name>, "value": {<name>: "p/q", ...}}

indexed by basis names; omitted pairs are zero.  Reports are emitted as
canonical JSON (sorted keys) with the wall-clock timing kept outside the
verdict section, so verdicts are byte-identical across reruns.

Exit codes: 0 success, 1 verdict failure or internal invariant violation,
2 malformed input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .dgla import IllDefinedAction, NotInCategory
from .exactla import CompositionNotZero, NotInvariant, ShapeMismatch, format_scalar, parse_scalar
from .freealg import WeightOverflow
from .homology import (
    DEFAULT_WEIGHT_BUDGET,
    FALLBACK_WEIGHT_BUDGET,
    DifferentialSquareNonzero,
    NotAChainMap,
    ce_chain,
    ce_cochain,
    ce_projection,
    conjecture_check,
    fg_subcomplex,
    lie_coefficients,
    loday_cochain_complex,
    loday_complex,
    rep_coefficients,
    trivial_coefficients,
)
from .leibcore import (
    IllDefinedQuotient,
    LeibnizAlgebra,
    LieModule,
    Representation,
    check_leibniz,
    check_lie_module,
    check_representation,
    lie_quotient,
    opposite,
    opposite_representation,
    tensor3,
)

FORMAT_VERSION = 1

COMMANDS = ("check", "quotient", "homology", "cohomology", "ce-homology",
            "ce-cohomology", "compare", "fg", "free-conjecture")

# Exceptions that mean "the tool's own mathematics is inconsistent" rather
# than "the user's file is bad".  They exit 1, like a failed verdict.
INVARIANT_ERRORS = (DifferentialSquareNonzero, NotAChainMap, NotInvariant,
                    CompositionNotZero, ShapeMismatch, IllDefinedQuotient,
                    IllDefinedAction, NotInCategory)


class ParseError(Exception):
    """Malformed input file: bad JSON, unknown or duplicate names."""


class AxiomError(Exception):
    """Input parses but violates the declared axioms."""

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)


# ---------------------------------------------------------------------------
# parsing


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be a JSON object")
    return doc


def _sha256(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _scalar(raw, where: str) -> Fraction:
    if not isinstance(raw, str):
        raise ParseError(f"{where}: rationals must be strings, got {raw!r}")
    try:
        return parse_scalar(raw)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def _name_index(names, where: str) -> dict:
    if not isinstance(names, list) or not names or not all(isinstance(s, str) for s in names):
        raise ParseError(f"{where}: \"basis\" must be a nonempty list of strings")
    index = {}
    for i, s in enumerate(names):
        if s in index:
            raise ParseError(f"{where}: duplicate basis name {s!r}")
        index[s] = i
    return index


def _entry_triple(entry, left_index, right_index, value_index, where: str):
    """Decode one sparse table entry into (i, j, {k: Fraction})."""
    if not isinstance(entry, dict):
        raise ParseError(f"{where}: entries must be objects")
    for key in ("left", "right", "value"):
        if key not in entry:
            raise ParseError(f"{where}: entry missing {key!r}")
    ln, rn, val = entry["left"], entry["right"], entry["value"]
    if ln not in left_index:
        raise ParseError(f"{where}: unknown name {ln!r}")
    if rn not in right_index:
        raise ParseError(f"{where}: unknown name {rn!r}")
    if not isinstance(val, dict):
        raise ParseError(f"{where}: \"value\" must be an object")
    out = {}
    for kn, raw in val.items():
        if kn not in value_index:
            raise ParseError(f"{where}: unknown name {kn!r} in value")
        c = _scalar(raw, where)
        if c:
            out[value_index[kn]] = c
    return left_index[ln], right_index[rn], out


def _sparse_table(entries, left_index, right_index, value_index, where: str) -> dict:
    if entries is None:
        return {}
    if not isinstance(entries, list):
        raise ParseError(f"{where}: must be a list of entries")
    table = {}
    for entry in entries:
        i, j, val = _entry_triple(entry, left_index, right_index, value_index, where)
        if (i, j) in table:
            raise ParseError(f"{where}: duplicate entry for ({entry['left']}, {entry['right']})")
        table[(i, j)] = val
    return table


def parse_algebra(path: str) -> tuple[LeibnizAlgebra, list[str], bool]:
    """Load an algebra file, verify its axioms, normalise to the left
    convention.  Returns the algebra, report notices, and whether the
    input was right-convention (companion module files are then read in
    that convention as well)."""
    doc = _load_json(path)
    index = _name_index(doc.get("basis"), path)
    names = list(doc["basis"])
    convention = doc.get("convention")
    if convention not in ("left", "right"):
        raise ParseError(f"{path}: \"convention\" must be \"left\" or \"right\"")
    table = _sparse_table(doc.get("brackets"), index, index, index, f"{path} brackets")
    g = LeibnizAlgebra.from_brackets(names, table, convention=convention)
    bad = check_leibniz(g)
    if bad:
        listed = ", ".join(f"({names[i]}, {names[j]}, {names[k]})" for i, j, k in bad[:8])
        more = "" if len(bad) <= 8 else f" and {len(bad) - 8} more"
        raise AxiomError(
            f"{path}: {convention} Leibniz identity fails at {listed}{more}", bad)
    notices = []
    if convention == "right":
        g = opposite(g)
        notices.append("right-convention input converted to the left convention "
                       "(arguments swapped)")
    return g, notices, convention == "right"


def algebra_echo(g: LeibnizAlgebra) -> dict:
    """Re-emit an algebra as an input document (always left convention)."""
    brackets = []
    for i in range(g.dim):
        for j in range(g.dim):
            vec = g.bracket_basis(i, j)
            value = {g.basis_names[k]: format_scalar(c)
                     for k, c in enumerate(vec) if c}
            if value:
                brackets.append({"left": g.basis_names[i],
                                 "right": g.basis_names[j],
                                 "value": value})
    return {"basis": list(g.basis_names), "convention": "left", "brackets": brackets}


def parse_representation(path: str, g: LeibnizAlgebra,
                         was_right: bool = False) -> Representation:
    """Module file over g.  When the algebra file was right-convention the
    module actions are read in that convention too, so the two action
    tables trade places on conversion."""
    doc = _load_json(path)
    index = _name_index(doc.get("basis"), path)
    names = list(doc["basis"])
    gindex = {s: i for i, s in enumerate(g.basis_names)}
    d = len(names)
    left_tab = _sparse_table(doc.get("left_action"), gindex, index, index,
                             f"{path} left_action")
    right_tab = _sparse_table(doc.get("right_action"), index, gindex, index,
                              f"{path} right_action")
    left = tensor3(g.dim, d, d, {(i, j, k): c for (i, j), val in left_tab.items()
                                 for k, c in val.items()})
    right = tensor3(d, g.dim, d, {(j, i, k): c for (j, i), val in right_tab.items()
                                  for k, c in val.items()})
    rep = Representation(d, tuple(names), left, right)
    if was_right:
        rep = opposite_representation(g, rep)
    bad = check_representation(g, rep)
    if bad:
        listed = ", ".join(str(v) for v in bad[:8])
        more = "" if len(bad) <= 8 else f" and {len(bad) - 8} more"
        raise AxiomError(f"{path}: representation identities fail at {listed}{more}", bad)
    return rep


def parse_lie_module(path: str, g: LeibnizAlgebra) -> LieModule:
    """Module file over the maximal Lie quotient; actors are named by the
    quotient basis (the `quotient` command prints those names)."""
    doc = _load_json(path)
    index = _name_index(doc.get("basis"), path)
    names = list(doc["basis"])
    qdata = lie_quotient(g)
    qindex = {s: a for a, s in enumerate(qdata.quotient.basis_names)}
    d = len(names)
    table = _sparse_table(doc.get("action"), qindex, index, index, f"{path} action")
    action = tensor3(qdata.quotient.dim, d, d,
                     {(a, j, k): c for (a, j), val in table.items()
                      for k, c in val.items()})
    mod = LieModule(d, action)
    bad = check_lie_module(qdata.quotient, mod)
    if bad:
        listed = ", ".join(str(v) for v in bad[:8])
        more = "" if len(bad) <= 8 else f" and {len(bad) - 8} more"
        raise AxiomError(f"{path}: Lie-module identity fails at {listed}{more}", bad)
    return mod


def _coefficients(selector: str, g: LeibnizAlgebra, inputs: dict,
                  was_right: bool = False):
    """Decode --coefficients into a coefficient system, recording file hashes."""
    if selector == "trivial":
        return trivial_coefficients()
    if selector.startswith("lie:"):
        path = selector[4:]
        mod = parse_lie_module(path, g)
        inputs["module"] = {"path": path, "sha256": _sha256(path)}
        return lie_coefficients(mod)
    if selector.startswith("rep:"):
        path = selector[4:]
        rep = parse_representation(path, g, was_right)
        inputs["module"] = {"path": path, "sha256": _sha256(path)}
        return rep_coefficients(rep)
    raise ParseError(f"--coefficients must be trivial, lie:<file> or rep:<file>, "
                     f"got {selector!r}")


# ---------------------------------------------------------------------------
# report plumbing


def _report_skeleton(command: str, parameters: dict) -> dict:
    return {
        "command": command,
        "tool": {"name": "leibhom", "version": __version__, "format": FORMAT_VERSION},
        "parameters": parameters,
        "inputs": {},
        "notices": [],
        "tables": {},
        "verdicts": {},
    }


def emit_report(report: dict, json_path: str | None, quiet: bool,
                human_lines: list[str]) -> None:
    if json_path:
        text = json.dumps(report, sort_keys=True, indent=2)
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if not quiet:
        for note in report.get("notices", ()):
            print(f"note: {note}")
        for line in human_lines:
            print(line)


def _betti_lines(label: str, betti: list[int]) -> list[str]:
    lines = [label]
    for n, b in enumerate(betti):
        lines.append(f"  degree {n}: {b}")
    return lines


def _load_main_algebra(args, report: dict) -> tuple[LeibnizAlgebra, bool]:
    g, notices, was_right = parse_algebra(args.algebra)
    report["inputs"]["algebra"] = {"path": args.algebra, "sha256": _sha256(args.algebra)}
    report["notices"].extend(notices)
    report["algebra_echo"] = algebra_echo(g)
    return g, was_right


# ---------------------------------------------------------------------------
# commands


def _cmd_check(args, report):
    g, was_right = _load_main_algebra(args, report)
    qdata = lie_quotient(g)
    report["tables"]["dimensions"] = {
        "g": g.dim, "g_ann": qdata.ann.dim, "g_Lie": qdata.quotient.dim}
    report["verdicts"]["valid"] = True
    line = (f"valid left Leibniz algebra, dim {g.dim}, "
            f"g_ann {qdata.ann.dim}, g_Lie {qdata.quotient.dim}")
    return [line], 0


def _cmd_quotient(args, report):
    g, was_right = _load_main_algebra(args, report)
    qdata = lie_quotient(g)
    q = qdata.quotient
    brackets = []
    for i in range(q.dim):
        for j in range(q.dim):
            vec = q.bracket_basis(i, j)
            value = {q.basis_names[k]: format_scalar(c) for k, c in enumerate(vec) if c}
            if value:
                brackets.append({"left": q.basis_names[i], "right": q.basis_names[j],
                                 "value": value})
    report["tables"]["quotient"] = {"basis": list(q.basis_names), "brackets": brackets}
    report["tables"]["ann"] = {
        "dim": qdata.ann.dim,
        "basis": [[format_scalar(c) for c in qdata.ann.basis.column(t)]
                  for t in range(qdata.ann.dim)],
    }
    report["tables"]["projection"] = [
        [format_scalar(c) for c in row] for row in qdata.projection.entries]
    report["verdicts"]["quotient_well_defined"] = True
    lines = [f"g_Lie basis: {', '.join(q.basis_names)} (dim {q.dim}), "
             f"g_ann dim {qdata.ann.dim}"]
    for e in brackets:
        terms = " + ".join(f"{v}*{k}" if v != "1" else k for k, v in e["value"].items())
        lines.append(f"  [{e['left']}, {e['right']}] = {terms}")
    if not brackets:
        lines.append("  (abelian quotient)")
    return lines, 0


def _betti_command(args, report, builder, label):
    g, was_right = _load_main_algebra(args, report)
    coeffs = _coefficients(args.coefficients, g, report["inputs"], was_right)
    n = args.max_degree
    # one degree above the report range, so the top reported homology is
    # computed with both adjacent boundary maps present
    cplx = builder(g, coeffs, n + 1)
    betti = list(cplx.betti())[: n + 1]
    dims = list(cplx.dims)[: n + 1]
    report["parameters"]["coefficients"] = args.coefficients
    report["parameters"]["max_degree"] = n
    report["tables"]["dims"] = {str(k): d for k, d in enumerate(dims)}
    report["tables"]["betti"] = {str(k): b for k, b in enumerate(betti)}
    return _betti_lines(f"{label}, coefficients {args.coefficients}:", betti), 0


def _cmd_compare(args, report):
    g, was_right = _load_main_algebra(args, report)
    coeffs = _coefficients(args.coefficients, g, report["inputs"], was_right)
    n = args.max_degree
    _, _, cmp = ce_projection(g, coeffs, n)
    report["parameters"]["coefficients"] = args.coefficients
    report["parameters"]["max_degree"] = n
    report["tables"]["degrees"] = list(cmp.degrees)
    report["tables"]["tensor_homology"] = list(cmp.loday_homology)
    report["tables"]["ce_homology"] = list(cmp.ce_homology)
    report["tables"]["tensor_cohomology"] = list(cmp.loday_cohomology)
    report["tables"]["ce_cohomology"] = list(cmp.ce_cohomology)
    report["tables"]["chain_map_ranks"] = list(cmp.chain_map_ranks)
    report["tables"]["cochain_map_ranks"] = list(cmp.cochain_map_ranks)
    verdicts = {
        "chain_map": True,
        "h0_iso": cmp.h0_iso,
        "h1_iso": cmp.h1_iso,
        "hl2_to_h2_surjective": cmp.hl2_to_h2_surjective,
        "h2_to_hl2_injective": cmp.h2_to_hl2_injective,
    }
    report["verdicts"].update(verdicts)
    failed = [k for k, v in verdicts.items() if v is False]
    lines = ["comparison of the tensor-module and enveloping-algebra complexes:"]
    for k in range(len(cmp.degrees)):
        lines.append(f"  degree {k}: HL={cmp.loday_homology[k]} H={cmp.ce_homology[k]} "
                     f"HL^={cmp.loday_cohomology[k]} H^={cmp.ce_cohomology[k]}")
    for k, v in verdicts.items():
        if v is not None:
            lines.append(f"  {k}: {'pass' if v else 'FAIL'}")
    return lines, (1 if failed else 0)


def _cmd_fg(args, report):
    g, was_right = _load_main_algebra(args, report)
    n = args.max_degree
    cplx = fg_subcomplex(g, n + 1)
    betti = list(cplx.betti())[: n + 1]
    dims = list(cplx.dims)[: n + 1]
    report["parameters"]["max_degree"] = n
    report["tables"]["dims"] = {str(k): d for k, d in enumerate(dims)}
    report["tables"]["betti"] = {str(k): b for k, b in enumerate(betti)}
    report["verdicts"]["closed_under_boundary"] = True
    lines = ["graded-commutator subcomplex:"]
    for k in range(n + 1):
        lines.append(f"  degree {k}: dim {dims[k]}, homology {betti[k]}")
    return lines, 0


def _cmd_free_conjecture(args, report):
    d = args.generators
    if d is None:
        raise ParseError("free-conjecture requires --generators")
    if d not in (1, 2, 3):
        raise ParseError("--generators must be 1, 2 or 3")
    budget = DEFAULT_WEIGHT_BUDGET.get(d, FALLBACK_WEIGHT_BUDGET)
    w = args.max_weight if args.max_weight is not None else budget
    if w < 1:
        raise ParseError("--max-weight must be at least 1")
    if w > budget:
        raise ParseError(f"--max-weight {w} exceeds the configured budget {budget} "
                         f"for {d} generator(s)")
    params = {"generators": d, "max_weight": w}
    report["parameters"].update(params)
    report["inputs"]["parameters"] = {
        "sha256": hashlib.sha256(
            json.dumps(params, sort_keys=True).encode()).hexdigest()}
    rep = conjecture_check(d, w)
    rows = []
    for v in rep.weights:
        rows.append({"weight": v.weight, "h1": v.h1, "expected_h1": v.expected_h1,
                     "higher": list(v.higher), "ok": v.ok})
    report["tables"]["weights"] = rows
    report["verdicts"]["verdict"] = rep.verdict
    lines = [f"free algebra on {d} generator(s), weights 1..{w}:"]
    for r in rows:
        higher = ", ".join(str(h) for h in r["higher"]) or "-"
        lines.append(f"  weight {r['weight']}: H1 {r['h1']} (expected {r['expected_h1']}), "
                     f"higher [{higher}] {'ok' if r['ok'] else 'MISMATCH'}")
    lines.append(f"verdict: {rep.verdict}")
    return lines, (0 if rep.verdict == "PASS" else 1)


# ---------------------------------------------------------------------------
# dispatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leibhom",
        description="Homology of Leibniz algebras from JSON structure constants.")
    parser.add_argument("--version", action="version",
                        version=f"leibhom {__version__} (format {FORMAT_VERSION})")
    sub = parser.add_subparsers(dest="command", metavar="command")

    def common(p, algebra=True):
        if algebra:
            p.add_argument("algebra", help="algebra file (JSON structure constants)")
        p.add_argument("--json", dest="json_path", metavar="OUT",
                       help="write the canonical JSON report to this path")
        p.add_argument("--quiet", action="store_true",
                       help="suppress the human-readable table")
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                       help="accepted for compatibility; evaluation is sequential "
                            "and deterministic")

    p = sub.add_parser("check", help="validate axioms, report dimensions")
    common(p)
    p = sub.add_parser("quotient", help="maximal Lie quotient and kernel ideal")
    common(p)
    for name, help_text in (
            ("homology", "tensor-module homology (Betti table)"),
            ("cohomology", "tensor-module cohomology"),
            ("ce-homology", "homology of the enveloping-algebra complex"),
            ("ce-cohomology", "cohomology of the enveloping-algebra complex"),
            ("compare", "compare the two complexes and their induced maps"),
    ):
        p = sub.add_parser(name, help=help_text)
        common(p)
        p.add_argument("--max-degree", type=int, default=3, metavar="N")
        p.add_argument("--coefficients", default="trivial", metavar="C",
                       help="trivial | lie:<file> | rep:<file>")
    p = sub.add_parser("fg", help="graded-commutator subcomplex of the tensor complex")
    common(p)
    p.add_argument("--max-degree", type=int, default=3, metavar="N")
    p = sub.add_parser("free-conjecture",
                       help="vanishing check over a truncated free algebra")
    common(p, algebra=False)
    p.add_argument("--generators", type=int, metavar="D")
    p.add_argument("--max-weight", type=int, default=None, metavar="W")
    return parser


HANDLERS = {
    "check": _cmd_check,
    "quotient": _cmd_quotient,
    "homology": lambda a, r: _betti_command(a, r, loday_complex, "tensor-module homology"),
    "cohomology": lambda a, r: _betti_command(a, r, loday_cochain_complex,
                                              "tensor-module cohomology"),
    "ce-homology": lambda a, r: _betti_command(a, r, ce_chain,
                                               "enveloping-algebra homology"),
    "ce-cohomology": lambda a, r: _betti_command(a, r, ce_cochain,
                                                 "enveloping-algebra cohomology"),
    "compare": _cmd_compare,
    "fg": _cmd_fg,
    "free-conjecture": _cmd_free_conjecture,
}


def run(args) -> int:
    parameters = {}
    if getattr(args, "max_degree", None) is not None:
        if args.max_degree < 0:
            raise ParseError("--max-degree must be nonnegative")
        parameters["max_degree"] = args.max_degree
    report = _report_skeleton(args.command, parameters)
    start = time.perf_counter()
    lines, code = HANDLERS[args.command](args, report)
    report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    emit_report(report, args.json_path, args.quiet, lines)
    return code


def entrypoint(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 2
    try:
        return run(args)
    except (ParseError, AxiomError, WeightOverflow, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except INVARIANT_ERRORS as exc:
        print(f"invariant violation ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(entrypoint())
