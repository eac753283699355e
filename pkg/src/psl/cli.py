"""Batch front end.

    psl check           --workspace ws.json NAME
    psl smash           --workspace ws.json ACTION
    psl radicals        --workspace ws.json ACTION
    psl enumerate-ideals --workspace ws.json ACTION
    psl verify THEOREM  [--workspace ws.json] [--seed N] [--trials N]

Exit codes: 0 pass, 1 mathematical failure (with witness), 2 usage or
parse error.  All reported entries are exact rationals or residues.
"""

from __future__ import annotations

import argparse
import json
import sys

from psl.algebra import check_algebra
from psl.exactla import Subspace
from psl.hopf import check_hopf
from psl.paction import check_partial_action, is_global
from psl.pmod import check_partial_module
from psl.radicals import (
    DimensionTooLarge,
    FieldNotFinite,
    UnsupportedCharacteristic,
    enumerate_h_stable_ideals,
    h_jacobson_radical,
    h_prime_radical,
    jacobson_radical,
    prime_radical,
)
from psl.smash import build_partial_smash
from psl.verify import THEOREM_SUITES, VerifyReport, apply_theorem_to_instance, run_theorem
from psl.workspace import (
    ParseError,
    UnresolvedReference,
    WorkspaceAxiomError,
    format_subspace,
    load_workspace,
)

EXIT_PASS = 0
EXIT_MATH_FAIL = 1
EXIT_USAGE = 2


def _emit(payload: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in payload.get("lines", []):
            print(line)


def cmd_check(ws, name: str, output: str) -> int:
    kind, obj = ws.resolve(name)
    if kind == "hopf":
        report = check_hopf(obj)
    elif kind == "algebra":
        report = check_algebra(obj)
    elif kind == "action":
        report = check_partial_action(obj)
    elif kind == "module":
        report = check_partial_module(obj)
    elif kind == "group":
        report = None  # construction already validated the table
    else:
        report = None  # ideals are canonical subspaces; nothing to check
    ok = report.ok if report is not None else True
    failures = list(report.failures) if report is not None else []
    payload = {
        "command": "check",
        "name": name,
        "kind": kind,
        "ok": ok,
        "failures": failures,
        "lines": [f"check {name} ({kind}): {'pass' if ok else 'FAIL'}"]
        + [f"  witness: {f}" for f in failures],
    }
    _emit(payload, output)
    return EXIT_PASS if ok else EXIT_MATH_FAIL


def cmd_smash(ws, name: str, output: str) -> int:
    pa = ws.action(name)
    sp = build_partial_smash(pa)
    field = pa.field
    payload = {
        "command": "smash",
        "action": name,
        "full_dim": sp.full.dim,
        "carrier_dim": sp.carrier.dim,
        "is_global": is_global(pa),
        "unit": [field.format_scalar(x) for x in sp.unit_element],
        "carrier_basis": [[field.format_scalar(x) for x in row] for row in sp.coords.rows],
        "dual_action_global": is_global(sp.dual_action),
    }
    payload["lines"] = [
        f"smash {name}: full {sp.full.dim}, partial {sp.carrier.dim}",
        f"  action is global: {payload['is_global']}",
        f"  unit (A(x)H coords): {payload['unit']}",
        f"  dual H*-action passes and is global: {payload['dual_action_global']}",
    ] + [f"  basis[{i}] = {row}" for i, row in enumerate(payload["carrier_basis"])]
    _emit(payload, output)
    return EXIT_PASS


def cmd_radicals(ws, name: str, output: str) -> int:
    pa = ws.action(name)
    field = pa.field
    try:
        sp = build_partial_smash(pa)
        ja = jacobson_radical(pa.alg)
        pa_rad = prime_radical(pa.alg)
        jh = h_jacobson_radical(pa)
        ph = h_prime_radical(pa)
        jc = jacobson_radical(sp.carrier)
        pc = prime_radical(sp.carrier)
    except UnsupportedCharacteristic as exc:
        print(
            f"error: {exc}\nhint: use a field with characteristic 0 or larger than the "
            "algebra dimension, or shrink the instance below the brute-force cap",
            file=sys.stderr,
        )
        return EXIT_MATH_FAIL
    entries = [
        ("J(A)", ja.radical), ("P(A)", pa_rad),
        ("J_H(A)", jh), ("P_H(A)", ph),
        ("J(A#H)", jc.radical), ("P(A#H)", pc),
    ]
    payload = {
        "command": "radicals",
        "action": name,
        "radicals": {
            label: {"dim": s.dim, "basis": format_subspace(field, s)} for label, s in entries
        },
        "method": ja.method,
    }
    payload["lines"] = [f"radicals for {name} (method: {ja.method})"] + [
        f"  {label}: dim {s.dim}"
        + (f", basis {format_subspace(field, s)}" if s.dim else "")
        for label, s in entries
    ]
    _emit(payload, output)
    return EXIT_PASS


def cmd_enumerate_ideals(ws, name: str, dim_cap: int, field_cap: int, output: str) -> int:
    pa = ws.action(name)
    try:
        ideals = enumerate_h_stable_ideals(pa, dim_cap=dim_cap, field_cap=field_cap)
    except (FieldNotFinite, DimensionTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = {
        "command": "enumerate-ideals",
        "action": name,
        "count": len(ideals),
        "ideals": [
            {"dim": I.dim, "basis": format_subspace(pa.field, I)} for I in ideals
        ],
    }
    payload["lines"] = [f"{len(ideals)} H-stable ideals of {name}"] + [
        f"  dim {I.dim}: {format_subspace(pa.field, I)}" for I in ideals
    ]
    _emit(payload, output)
    return EXIT_PASS


def cmd_verify(args) -> int:
    theorem = args.theorem
    if theorem not in THEOREM_SUITES:
        print(
            f"error: unknown theorem id {theorem!r}; known: {', '.join(sorted(THEOREM_SUITES))}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    report = run_theorem(
        theorem,
        seed=args.seed,
        trials=args.trials,
        dim_cap=args.dim_cap,
        field_cap=args.field_cap,
    )
    if args.workspace:
        ws = load_workspace(args.workspace)
        extra = VerifyReport(report.theorem)
        for name, pa in ws.actions.items():
            apply_theorem_to_instance(
                theorem, f"workspace:{name}", pa, extra,
                dim_cap=args.dim_cap, field_cap=args.field_cap, seed=args.seed,
            )
        report.cases.extend(extra.cases)
    payload = {
        "command": "verify",
        "theorem": theorem,
        "ok": report.ok,
        "checks": len(report.cases),
        "failures": [
            {"name": c.name, "detail": c.detail} for c in report.cases if not c.ok
        ],
        "lines": report.summary().splitlines(),
    }
    _emit(payload, args.output)
    return EXIT_PASS if report.ok else EXIT_MATH_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psl",
        description="exact checks for partial Hopf actions, smash products and H-radicals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_workspace=True):
        p.add_argument("--workspace", required=needs_workspace, help="workspace JSON file")
        p.add_argument("--output", choices=("text", "json"), default="text")

    p_check = sub.add_parser("check", help="run the axiom checker for a named object")
    common(p_check)
    p_check.add_argument("name")

    p_smash = sub.add_parser("smash", help="build the partial smash product of an action")
    common(p_smash)
    p_smash.add_argument("action")

    p_rad = sub.add_parser("radicals", help="compute all six radicals for an action")
    common(p_rad)
    p_rad.add_argument("action")

    p_enum = sub.add_parser("enumerate-ideals", help="list all H-stable ideals (finite fields)")
    common(p_enum)
    p_enum.add_argument("action")
    p_enum.add_argument("--dim-cap", type=int, default=6)
    p_enum.add_argument("--field-cap", type=int, default=5)

    p_ver = sub.add_parser("verify", help="machine-verify one of the named theorems")
    common(p_ver, needs_workspace=False)
    p_ver.add_argument("theorem")
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--trials", type=int, default=None)
    p_ver.add_argument("--dim-cap", type=int, default=6)
    p_ver.add_argument("--field-cap", type=int, default=5)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        if args.command == "verify":
            return cmd_verify(args)
        # `check` defers axiom validation to its own checker so that a
        # corrupted tensor reports a witness and exit code 1, not a parse error
        ws = load_workspace(args.workspace, check=args.command != "check")
        if args.command == "check":
            return cmd_check(ws, args.name, args.output)
        if args.command == "smash":
            return cmd_smash(ws, args.action, args.output)
        if args.command == "radicals":
            return cmd_radicals(ws, args.action, args.output)
        if args.command == "enumerate-ideals":
            return cmd_enumerate_ideals(ws, args.action, args.dim_cap, args.field_cap, args.output)
        parser.error(f"unknown command {args.command!r}")
    except WorkspaceAxiomError as exc:
        print(f"axiom failure: {exc}", file=sys.stderr)
        for witness in exc.failures[:5]:
            print(f"  witness: {witness}", file=sys.stderr)
        return EXIT_MATH_FAIL
    except (ParseError, UnresolvedReference) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
