"""Command-line front end.

    kslogic validate --set paper_set_O
    kslogic valuate  --set paper_set_O --state z+z+ --semantics bivalent
    kslogic color    --set paper_set_O --mode enumerate
    kslogic lattice  --set paper_set_O --ops meet:P_z++,P_z+- join:C_z

``--set`` takes a file path or the name of a bundled set. Exit status is
0 for success or an affirmative verdict, 1 for a negative verdict and 2
for usage or input errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Sequence

from . import coloring, lattice
from .documents import (
    BUNDLED_SETS,
    DocumentError,
    bundled_set_path,
    dumps,
    parse_set,
    parse_state_document,
)
from .linalg import rank
from .model import (
    OperatorSet,
    PreparedState,
    State,
    commutation_report,
    parse_state_spec,
    validate_context,
)
from .scalar import format_rational
from .valuation import (
    Atom,
    born,
    disjunction,
    entailment_check,
    is_total,
    state_induced,
    supervaluate,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


# -- rendering ----------------------------------------------------------------


def _is_grid(x) -> bool:
    return (
        isinstance(x, list)
        and bool(x)
        and all(isinstance(r, list) and all(isinstance(e, str) for e in r) for r in x)
    )


def _scalar_text(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return "-"
    return str(x)


def _render(obj: Any, indent: int, lines: list[str]):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not (
                isinstance(v, list) and all(not isinstance(e, (dict, list)) for e in v)
            ):
                lines.append(f"{pad}{k}:")
                _render(v, indent + 1, lines)
            elif isinstance(v, list):
                lines.append(f"{pad}{k}: [{', '.join(_scalar_text(e) for e in v)}]")
            elif isinstance(v, dict):
                lines.append(f"{pad}{k}: {{}}")
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif _is_grid(obj):
        width = max(len(e) for r in obj for e in r)
        for r in obj:
            lines.append(pad + "[ " + "  ".join(e.rjust(width) for e in r) + " ]")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, dict):
                sub: list[str] = []
                _render(item, indent + 1, sub)
                first = sub[0].lstrip() if sub else ""
                lines.append(f"{pad}- {first}")
                lines.extend(sub[1:])
            elif isinstance(item, list):
                lines.append(f"{pad}- [{', '.join(_scalar_text(e) for e in item)}]")
            else:
                lines.append(f"{pad}- {_scalar_text(item)}")
    else:
        lines.append(pad + _scalar_text(obj))


def render_human(report: dict) -> str:
    lines: list[str] = []
    _render(report, 0, lines)
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    return dumps(report) if fmt == "machine" else render_human(report)


# -- inputs -------------------------------------------------------------------


def load_set(spec: str) -> OperatorSet:
    if spec in BUNDLED_SETS:
        path = bundled_set_path(spec)
    else:
        path = Path(spec)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read set file {spec!r}: {exc.strerror}") from None
    return parse_set(text)


def load_state(spec: str) -> State:
    if len(spec) == 4 and not Path(spec).exists():
        try:
            return parse_state_spec(spec)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        text = Path(spec).read_text(encoding="utf-8")
    except OSError:
        raise UsageError(f"state {spec!r} is neither a builtin like 'z+x-' nor a readable file") from None
    return parse_state_document(text).build()


def _state_json(st: State) -> dict:
    out: dict[str, Any] = {"name": st.name, "vector": st.vector.to_strings()}
    if isinstance(st, PreparedState):
        out["correlated"] = st.correlated
    return out


def _context_of(s: OperatorSet) -> dict[str, str]:
    return {p.label: c.name for c in s.contexts for p in c}


# -- commands -----------------------------------------------------------------


def cmd_validate(args, s: OperatorSet) -> dict:
    contexts = []
    all_ok = True
    for c in s.contexts:
        rep = validate_context(c)
        all_ok &= rep.ok
        contexts.append(
            {
                "name": c.name,
                "members": c.labels,
                "all_projectors": rep.all_projectors,
                "sums_to_identity": rep.sums_to_identity,
                "pairwise_orthogonal": rep.pairwise_orthogonal,
                "valid": rep.ok,
                "failures": list(rep.failures),
            }
        )
    pairs = commutation_report(s)
    noncommuting = [e for e in pairs if not e.commutes]
    return {
        "command": "validate",
        "arguments": {"set": args.set},
        "dimension": s.ambient_dim,
        "contexts": contexts,
        "commutation": {
            "cross_context_pairs": len(pairs),
            "commuting": len(pairs) - len(noncommuting),
            "noncommuting": len(noncommuting),
            "commuting_pairs": [[e.first, e.second] for e in pairs if e.commutes],
        },
        "verdict": {"all_contexts_valid": all_ok},
        "exit_status": EXIT_OK if all_ok else EXIT_NEGATIVE,
    }


def _entailment_json(e) -> dict:
    return {
        "lhs": None if e.lhs is None else format_rational(e.lhs),
        "rhs": format_rational(e.rhs),
        "assigned": e.assigned,
        "gaps": list(e.gaps),
        "nonzero": list(e.nonzero),
        "verdict": e.verdict.value,
    }


def cmd_valuate(args, s: OperatorSet) -> dict:
    for c in s.contexts:
        if not validate_context(c).ok:
            raise UsageError(f"context {c.name} is not a resolution of the identity")
    st = load_state(args.state)
    if st.vector.dim != s.ambient_dim:
        raise UsageError(f"state has dimension {st.vector.dim}, set has {s.ambient_dim}")
    v = state_induced(st, s)
    mv = born(st, s) if args.semantics == "born" else None
    where = _context_of(s)

    rows = []
    for p in s.projectors:
        m = v.memberships[p.label]
        tv = v.value(p.label)
        row: dict[str, Any] = {
            "label": p.label,
            "context": where[p.label],
            "bivalent": "gap" if tv is None else str(int(tv)),
            "in_ran": m.in_ran,
            "in_ker": m.in_ker,
        }
        if mv is not None:
            row["born"] = format_rational(mv.value(p.label))
        if args.semantics == "super":
            sv = supervaluate(v, s.context(where[p.label]), Atom(p.label))
            row["super"] = sv.verdict.value
            row["completions"] = sv.completions_examined
        rows.append(row)

    contexts = []
    for c in s.contexts:
        entry: dict[str, Any] = {
            "name": c.name,
            "entailment": _entailment_json(entailment_check(mv if mv is not None else v, c)),
        }
        if args.semantics == "super":
            sv = supervaluate(v, c, disjunction(c))
            entry["disjunction"] = {"verdict": sv.verdict.value, "completions": sv.completions_examined}
        contexts.append(entry)

    tot = is_total(v, s)
    notes = []
    if isinstance(st, PreparedState) and not st.correlated:
        zeros = [lbl for lbl, x in v.assignments.items() if x == 0]
        ones = v.true_labels()
        notes.append(
            f"uncorrelated state: {len(ones)} operators valued 1; "
            f"{len(zeros)} operators valued 0 because the state lies in their kernel"
        )
    return {
        "command": "valuate",
        "arguments": {"set": args.set, "state": args.state, "semantics": args.semantics},
        "state": _state_json(st),
        "operators": rows,
        "contexts": contexts,
        "totality": {"total": tot.total, "gap_count": len(tot.gaps), "gaps": list(tot.gaps)},
        "notes": notes,
        "exit_status": EXIT_OK,
    }


def cmd_color(args, s: OperatorSet) -> dict:
    try:
        prob = coloring.build_problem(s)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.mode == "enumerate" and args.limit is not None:
        res = coloring.solve(prob, "enumerate_up_to", args.limit)
    else:
        res = coloring.solve(prob, args.mode)
    witness = None
    if res.witness is not None:
        witness = {}
        for lbl in s.labels:
            witness.setdefault(lbl, res.witness[prob.identification[lbl]])
    notes = []
    if not prob.shared:
        notes.append(
            "no projector is shared between contexts; colorability of this set does not "
            "bear on state-induced non-totality"
        )
    return {
        "command": "color",
        "arguments": {"set": args.set, "mode": args.mode, "limit": args.limit},
        "problem": {
            "contexts": len(prob.contexts),
            "variables": len(prob.variables),
            "orthogonality_edges": len(prob.edges),
            "shared": prob.shared,
        },
        "result": {
            "status": res.status.value,
            "count": res.count,
            "nodes_explored": res.nodes_explored,
            "witness": witness,
        },
        "notes": notes,
        "exit_status": EXIT_OK if res.status is coloring.Status.COLORABLE else EXIT_NEGATIVE,
    }


def _operand(token: str, s: OperatorSet) -> list[lattice.LatticeElement]:
    if token == "1":
        return [lattice.top(s.ambient_dim)]
    if token == "0":
        return [lattice.bottom(s.ambient_dim)]
    try:
        return [lattice.element(s.projector(token))]
    except KeyError:
        pass
    try:
        return [lattice.element(p) for p in s.context(token)]
    except KeyError:
        raise UsageError(f"unknown label or context {token!r}") from None


_ARITY = {"meet": 2, "leq": 2, "complement": 1}


def _lattice_op(selector: str, s: OperatorSet) -> dict:
    op, sep, rest = selector.partition(":")
    if not sep or op not in ("meet", "join", "leq", "complement"):
        raise UsageError(f"bad selector {selector!r}; use meet|join|leq|complement:LABEL[,LABEL]")
    tokens = [t for t in rest.split(",") if t]
    elems = [e for t in tokens for e in _operand(t, s)]
    if op in _ARITY and len(elems) != _ARITY[op]:
        raise UsageError(f"{op} takes {_ARITY[op]} operand(s), got {len(elems)}")
    if not elems:
        raise UsageError(f"{op} needs operands")
    out: dict[str, Any] = {"op": op, "operands": tokens}
    if op == "leq":
        out["holds"] = lattice.leq(*elems)
        return out
    if op == "meet":
        res = lattice.meet(*elems)
        where = _context_of(s)
        ctxs = {where.get(t) for t in tokens}
        out["within_context"] = len(ctxs) == 1 and None not in ctxs
    elif op == "join":
        res = lattice.join(elems)
    else:
        res = lattice.orthocomplement(elems[0])
    out["matrix"] = res.matrix.to_strings()
    out["rank"] = rank(res.matrix)
    out["classification"] = lattice.classify_constant(res).value
    return out


def cmd_lattice(args, s: OperatorSet) -> dict:
    results = [_lattice_op(sel, s) for sel in args.ops]
    return {
        "command": "lattice",
        "arguments": {"set": args.set, "ops": list(args.ops)},
        "results": results,
        "exit_status": EXIT_OK,
    }


COMMANDS = {
    "validate": cmd_validate,
    "valuate": cmd_valuate,
    "color": cmd_color,
    "lattice": cmd_lattice,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kslogic", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--set", required=True, help="set file or bundled name (paper_set_O)")
    common.add_argument("--format", choices=("human", "machine"), default="human")
    common.add_argument("--output", help="write the report here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common], help="check contexts and commutation")

    p = sub.add_parser("valuate", parents=[common], help="valuate the set in a state")
    p.add_argument("--state", required=True, help="builtin like z+x- or a state file")
    p.add_argument("--semantics", choices=("bivalent", "born", "super"), default="bivalent")

    p = sub.add_parser("color", parents=[common], help="search for noncontextual colorings")
    p.add_argument("--mode", choices=("decide", "enumerate"), default="decide")
    p.add_argument("--limit", type=int, help="stop enumerating after N colorings")

    p = sub.add_parser("lattice", parents=[common], help="meet/join/leq/complement")
    p.add_argument("--ops", nargs="+", required=True, metavar="OP:LABELS")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    if getattr(args, "limit", None) is not None and args.limit < 1:
        print("kslogic: error: --limit must be positive", file=sys.stderr)
        return EXIT_ERROR
    try:
        s = load_set(args.set)
        report = COMMANDS[args.command](args, s)
    except (UsageError, DocumentError) as exc:
        print(f"kslogic: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    text = render(report, args.format)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return report["exit_status"]


if __name__ == "__main__":
    sys.exit(main())
