"""Command-line front end: basis expansions, step-by-step insertion and
rapture demos, tableau enumeration, derivation trees, and the exhaustive
verification and conjecture suites.

All output is deterministic; identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .compositions import from_string
from .dirt import enumerate_dirts
from .insertion import insert, insert_word, rapture
from .qsym import (
    DUAL_IMMACULATE,
    FUNDAMENTAL,
    IMMACULATE,
    MONOMIAL,
    YOUNG_NCSCHUR,
    YOUNG_QS,
    BasisExpansion,
    check_conjectures,
    dimm_f_expansion,
    dimm_to_yqs,
    dual_immaculate_mexpr,
    expand_in,
    f_to_m,
    yns_to_imm,
    young_qs_mexpr,
    yqs_f_expansion,
)
from .rw import rw_dual, rw_forward, tree_to_dot, tree_to_json
from .tableaux import (
    from_json_obj,
    make_rows,
    parse_rows,
    render,
    semistandard_tableaux,
    standard_tableaux,
)
from .verify import DEFAULT_MAX_N, SUITES, run_suite

VERIFY_GUARD = 9
CONJECTURE_GUARD = 8

TABLEAU_HELP = (
    "tableau as JSON ('{\"shape\": [1,3,2], \"rows\": [[2],[3,4,7],[6,8]]}'"
    " or just the row lists) or as compact text '2/3,4,7/6,8'"
    " (rows separated by '/', bottom row first)"
)


def _guard_limit(default: int) -> int:
    override = os.environ.get("QSC_MAX_N")
    if override is None or not override.strip():
        return default
    return int(override)


def _jsonable(value):
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, dict):
        return {key: _jsonable(v) for key, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(obj) -> None:
    print(json.dumps(_jsonable(obj)))


def _read_tableau(text: str):
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        obj = json.loads(stripped)
        if isinstance(obj, dict):
            return from_json_obj(obj)
        return make_rows(obj)
    return parse_rows(stripped)


def _rows_list(rows) -> list[list[int]]:
    return [list(r) for r in rows]


def _print_expansion(expansion: BasisExpansion, fmt: str) -> None:
    obj = expansion.to_json_obj()
    if fmt == "json":
        _emit(obj)
        return
    if not obj["coeffs"]:
        print("0")
        return
    for key, coeff in obj["coeffs"].items():
        print(f"{key}\t{coeff}")


_ROUTES = {
    (DUAL_IMMACULATE, YOUNG_QS): dimm_to_yqs,
    (DUAL_IMMACULATE, FUNDAMENTAL): dimm_f_expansion,
    (DUAL_IMMACULATE, MONOMIAL):
        lambda alpha: expand_in(dual_immaculate_mexpr(alpha), MONOMIAL),
    (YOUNG_QS, FUNDAMENTAL): yqs_f_expansion,
    (YOUNG_QS, MONOMIAL):
        lambda alpha: expand_in(young_qs_mexpr(alpha), MONOMIAL),
    (YOUNG_QS, DUAL_IMMACULATE):
        lambda alpha: expand_in(young_qs_mexpr(alpha), DUAL_IMMACULATE),
    (YOUNG_NCSCHUR, IMMACULATE): yns_to_imm,
    (FUNDAMENTAL, MONOMIAL): lambda alpha: expand_in(f_to_m(alpha), MONOMIAL),
}


def cmd_expand(args) -> int:
    route = _ROUTES.get((args.source, args.target))
    if route is None:
        supported = ", ".join(f"{s}->{t}" for s, t in _ROUTES)
        print(
            f"error: no expansion route from {args.source} to {args.target}"
            f" (supported: {supported})",
            file=sys.stderr,
        )
        return 2
    _print_expansion(route(from_string(args.alpha)), args.format)
    return 0


def cmd_demo_insert(args) -> int:
    rows = _read_tableau(args.tableau)
    events: list[dict] = []
    result = insert(rows, args.k, events)
    _emit({
        "input": _rows_list(rows),
        "k": args.k,
        "steps": events,
        "result": _rows_list(result.rows),
        "new_cell": list(result.new_cell),
        "path": [list(cell) for cell in result.path],
    })
    return 0


def cmd_demo_rapture(args) -> int:
    rows = _read_tableau(args.tableau)
    cell = from_string(args.cell)
    if len(cell) != 2:
        raise ValueError(f"cell must be 'column,row', got {args.cell!r}")
    events: list[dict] = []
    result = rapture(rows, cell, events)
    _emit({
        "input": _rows_list(rows),
        "cell": list(cell),
        "steps": events,
        "result": _rows_list(result.rows),
        "output": result.output,
        "route": [list(c) for c in result.route],
    })
    return 0


def cmd_demo_word(args) -> int:
    word = from_string(args.word)
    insertions = []
    current: tuple = ()
    for letter in word:
        events: list[dict] = []
        result = insert(current, letter, events)
        insertions.append({
            "letter": letter,
            "steps": events,
            "new_cell": list(result.new_cell),
            "path": [list(cell) for cell in result.path],
        })
        current = result.rows
    p_rows, q_rows = insert_word(word)
    _emit({
        "word": list(word),
        "insertions": insertions,
        "p": _rows_list(p_rows),
        "q": _rows_list(q_rows),
    })
    return 0


def _print_fillings(payload: dict, items, fmt: str) -> None:
    if fmt == "json":
        _emit(payload)
        return
    print(f"count: {len(items)}")
    for rows in items:
        print()
        print(render(rows))


def cmd_enumerate_tableaux(args) -> int:
    shape = from_string(args.shape)
    if args.standard:
        items = standard_tableaux(shape, args.kind)
    else:
        items = semistandard_tableaux(shape, args.kind, args.max_entry)
    payload = {
        "shape": list(shape),
        "kind": args.kind,
        "count": len(items),
        "tableaux": [_rows_list(rows) for rows in items],
    }
    _print_fillings(payload, items, args.format)
    return 0


def cmd_enumerate_dirts(args) -> int:
    shape = from_string(args.shape)
    strips = from_string(args.strips)
    items = enumerate_dirts(shape, strips)
    payload = {
        "shape": list(shape),
        "strips": list(strips),
        "count": len(items),
        "dirts": [_rows_list(rows) for rows in items],
    }
    _print_fillings(payload, items, args.format)
    return 0


def cmd_tree(args) -> int:
    alpha = from_string(args.alpha)
    builder = rw_forward if args.direction == "forward" else rw_dual
    root, expansion = builder(alpha)
    if args.format == "dot":
        sys.stdout.write(tree_to_dot(root, args.direction))
    else:
        _emit({
            "alpha": list(alpha),
            "direction": args.direction,
            "expansion": expansion.to_json_obj(),
            "tree": tree_to_json(root, args.direction),
        })
    return 0


def cmd_verify(args) -> int:
    max_n = args.max_n if args.max_n is not None else DEFAULT_MAX_N[args.suite]
    if max_n < 1:
        raise ValueError(f"max-n must be at least 1, got {max_n}")
    limit = _guard_limit(VERIFY_GUARD)
    if max_n > limit and not args.force:
        print(
            f"error: max-n {max_n} exceeds the guard ({limit});"
            " pass --force to run anyway",
            file=sys.stderr,
        )
        return 2
    result = run_suite(args.suite, max_n)
    status = "PASS" if result.passed else "FAIL"
    print(f"suite {result.suite}: {status}"
          f" ({result.cases} cases, max_n={result.max_n})")
    for failure in result.failures[:5]:
        print(f"  counterexample: {failure}")
    if len(result.failures) > 5:
        print(f"  ... and {len(result.failures) - 5} more")
    return 0 if result.passed else 1


def _equation(alpha_key: str, coeffs: dict[str, int]) -> str:
    lhs = f"young-qs[{alpha_key}]"
    if not coeffs:
        return f"{lhs} = 0"
    parts: list[str] = []
    for key, c in coeffs.items():
        term = f"dual-immaculate[{key}]"
        if abs(c) != 1:
            term = f"{abs(c)}*{term}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {term}")
    return f"{lhs} = " + " ".join(parts)


def cmd_conjectures(args) -> int:
    if args.n < 1:
        raise ValueError(f"n must be at least 1, got {args.n}")
    limit = _guard_limit(CONJECTURE_GUARD)
    if args.n > limit and not args.force:
        print(
            f"error: n {args.n} exceeds the guard ({limit});"
            " pass --force to run anyway",
            file=sys.stderr,
        )
        return 2
    report = check_conjectures(args.n)
    if args.format == "json":
        _emit(report)
        return 0
    print(f"conjecture report at degree {report['degree']}")
    bounded = report["bounded"]
    if bounded["holds"]:
        print("coefficients in {-1, 0, 1}: no violations")
    else:
        print(f"coefficients in {{-1, 0, 1}}:"
              f" {len(bounded['violations'])} violations")
        for item in bounded["violations"]:
            print(f"  alpha={item['alpha']} beta={item['beta']}"
                  f" value={item['value']}")
    sums = report["sum_rule"]
    if sums["holds"]:
        print("coefficient sums (1 at reversed hooks, else 0): no violations")
    else:
        print(f"coefficient sums (1 at reversed hooks, else 0):"
              f" {len(sums['violations'])} violations")
        for item in sums["violations"]:
            print(f"  alpha={item['alpha']} sum={item['sum']}"
                  f" expected={item['expected']}")
    alt = report["alternating"]
    checked = ", ".join(f"({key})" for key in alt["checked"]) or "none"
    if alt["holds"]:
        print(f"signed-permutation formula at distinct-part partitions:"
              f" no violations (checked: {checked})")
    else:
        print(f"signed-permutation formula at distinct-part partitions:"
              f" {len(alt['violations'])} violations")
        for item in alt["violations"]:
            print(f"  lambda={item['lambda']} difference={item['difference']}")
    print("expansions in the dual immaculate basis:")
    for alpha_key, coeffs in report["expansions"].items():
        print(f"  {_equation(alpha_key, coeffs)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsc",
        description="Exact calculator for Young composition tableau"
        " insertion and the quasisymmetric function expansions it proves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand one basis element in another basis")
    p.add_argument("--from", dest="source", required=True,
                   choices=[DUAL_IMMACULATE, YOUNG_QS, YOUNG_NCSCHUR, FUNDAMENTAL])
    p.add_argument("--alpha", required=True, help="composition as 'a,b,c'")
    p.add_argument("--to", dest="target", required=True,
                   choices=[YOUNG_QS, DUAL_IMMACULATE, FUNDAMENTAL, MONOMIAL,
                            IMMACULATE])
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("demo", help="step-by-step traces of the procedures")
    dsub = p.add_subparsers(dest="demo_kind", required=True)
    ins = dsub.add_parser("insert", help="trace one insertion")
    ins.add_argument("--tableau", required=True, help=TABLEAU_HELP)
    ins.add_argument("--k", type=int, required=True, help="value to insert")
    ins.set_defaults(func=cmd_demo_insert)
    rap = dsub.add_parser("rapture", help="trace one rapture")
    rap.add_argument("--tableau", required=True, help=TABLEAU_HELP)
    rap.add_argument("--cell", required=True, help="cell as 'column,row'")
    rap.set_defaults(func=cmd_demo_rapture)
    wrd = dsub.add_parser("word", help="insert a duplicate-free word")
    wrd.add_argument("--word", required=True, help="letters as 'a,b,c'")
    wrd.set_defaults(func=cmd_demo_word)

    p = sub.add_parser("enumerate", help="list fillings of a shape")
    esub = p.add_subparsers(dest="what", required=True)
    tab = esub.add_parser("tableaux", help="tableaux of a given kind")
    tab.add_argument("--shape", required=True, help="composition as 'a,b,c'")
    tab.add_argument("--kind", required=True, choices=["ssyct", "immaculate"])
    group = tab.add_mutually_exclusive_group(required=True)
    group.add_argument("--standard", action="store_true",
                       help="standard fillings (entries 1..n once each)")
    group.add_argument("--max-entry", dest="max_entry", type=int,
                       help="semistandard fillings with entries at most this")
    tab.add_argument("--format", choices=["json", "text"], default="json")
    tab.set_defaults(func=cmd_enumerate_tableaux)
    dts = esub.add_parser("dirts", help="recording tableaux by strip shape")
    dts.add_argument("--shape", required=True, help="composition as 'a,b,c'")
    dts.add_argument("--strips", required=True,
                     help="row-strip shape as 'a,b,c'")
    dts.add_argument("--format", choices=["json", "text"], default="json")
    dts.set_defaults(func=cmd_enumerate_dirts)

    p = sub.add_parser("tree", help="emit a derivation tree")
    p.add_argument("--alpha", required=True, help="composition as 'a,b,c'")
    p.add_argument("--direction", required=True, choices=["forward", "dual"])
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", required=True, choices=list(SUITES))
    p.add_argument("--max-n", dest="max_n", type=int, default=None,
                   help="largest degree to check (suite default otherwise)")
    p.add_argument("--force", action="store_true",
                   help="run past the size guard")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjectures",
                       help="empirical report on the open conjectures")
    p.add_argument("--n", type=int, required=True, help="degree to survey")
    p.add_argument("--force", action="store_true",
                   help="run past the size guard")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_conjectures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
