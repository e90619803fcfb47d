"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 mathematical refusal, 4 triangular
certificate failure, 1 survey failures or internal errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .algebra import NakayamaAlgebra, load_algebra, parse_kupisch, parse_module
from .core_equiv import position
from .defring import jn_generators, udr
from .errors import InputError, NakayamaError
from .gorenstein import (
    build_core,
    elementaries,
    gorenstein_projectives,
    is_minimal_projective,
)
from .oracle import survey
from .triangular import TriangularSpec, reduce_udr, zhang_gp_check


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _algebra(args) -> tuple[NakayamaAlgebra, dict]:
    if args.kupisch and args.input:
        raise InputError("give either --kupisch or --input, not both")
    if args.kupisch:
        return parse_kupisch(args.kupisch), {}
    if args.input:
        return load_algebra(args.input)
    raise InputError("an algebra is required: use --kupisch a,b,... or --input file.json")


def _module(args, payload, A):
    raw = args.module if args.module is not None else payload.get("module")
    if raw is None:
        raise InputError("a module is required: use --module top,len")
    return A.check(parse_module(raw))


def cmd_info(args, out):
    A, _ = _algebra(args)
    minimal = [v for v in range(A.s) if is_minimal_projective(A, v)]
    core = build_core(A)
    data = {
        "kupisch": list(A.kupisch),
        "s": A.s,
        "indecomposables": sum(A.kupisch),
        "minimal_projectives": minimal,
        "gp_nonprojective": len(gorenstein_projectives(A)),
        "core_empty": core is None,
    }
    if args.json:
        print(_dump(data), file=out)
    else:
        print(f"algebra {A}: s={A.s}, {data['indecomposables']} indecomposables", file=out)
        print(f"minimal projective vertices: {minimal}", file=out)
        print(f"non-projective Gorenstein-projective indecomposables: {data['gp_nonprojective']}", file=out)
        print("Gorenstein core: " + ("empty" if core is None else f"g={core.g}, ell_core={core.ell_core}"), file=out)


def cmd_gp_list(args, out):
    A, _ = _algebra(args)
    mods = gorenstein_projectives(A, include_projective=True)
    rows = [dict(M.as_dict(), projective=A.is_projective(M)) for M in mods]
    if args.json:
        print(_dump({"kupisch": list(A.kupisch), "modules": rows}), file=out)
    else:
        for M in mods:
            print(f"{M.top},{M.length}" + ("  projective" if A.is_projective(M) else ""), file=out)


def cmd_elementaries(args, out):
    A, _ = _algebra(args)
    elems = elementaries(A)
    if args.json:
        print(_dump({"kupisch": list(A.kupisch), "elementaries": [E.as_dict() for E in elems]}), file=out)
    else:
        for E in elems:
            print(f"{E.top},{E.length}", file=out)


def cmd_core(args, out):
    A, _ = _algebra(args)
    core = build_core(A)
    if args.json:
        print(_dump({"kupisch": list(A.kupisch), "empty": True} if core is None else core.as_dict()), file=out)
    elif core is None:
        print("empty core", file=out)
    else:
        print(f"g = {core.g}", file=out)
        print("elementaries: " + " ".join(f"{E.top},{E.length}" for E in core.elementaries), file=out)
        print(f"X = {sorted(core.x_set)}", file=out)
        print(f"ell_core = {core.ell_core}", file=out)
        print(f"hypothesis s < |P(E_i)|: {'ok' if core.hypothesis_ok else 'violated'}", file=out)


def cmd_position(args, out):
    A, payload = _algebra(args)
    M = _module(args, payload, A)
    pos = position(A, build_core(A), M)
    if args.json:
        print(_dump(pos.as_dict()), file=out)
    else:
        print(f"m = {pos.core_length}, d = {pos.distance}, ell_v = {pos.ell_v}", file=out)


def cmd_defring(args, out):
    A, payload = _algebra(args)
    M = _module(args, payload, A)
    R = udr(A, build_core(A), M)
    print(R.to_json() if args.json else R.display, file=out)


def cmd_jn(args, out):
    if args.n < 0 or args.a < 0:
        raise InputError("--n and --a must be nonnegative")
    gens = jn_generators(args.n, args.a)
    if args.json:
        print(_dump({"n": args.n, "a": args.a, "generators": [p.to_json() for p in gens]}), file=out)
    else:
        print(", ".join(str(p) for p in gens), file=out)


def cmd_triangular(args, out):
    try:
        spec = TriangularSpec.load(args.spec)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {args.spec}: {exc}") from exc
    verdict = zhang_gp_check(spec.algebra, spec.gamma, spec.bimodule, spec.module)
    R = reduce_udr(spec.algebra, spec.gamma, spec.bimodule, spec.module)
    if args.json:
        print(_dump({"verdict": verdict.as_dict(), "defring": R.as_dict()}), file=out)
    else:
        print("Gorenstein-projective: yes", file=out)
        print(f"V Gorenstein-projective over Lambda: {'yes' if verdict.v_gorenstein_projective else 'no'}", file=out)
        print(R.display, file=out)


def cmd_survey(args, out):
    report = survey(args.max_s, args.max_c, workers=args.workers)
    if args.csv:
        report.write_csv(args.csv)
    if args.json:
        print(_dump({
            "algebras_checked": report.algebras_checked,
            "failures": [[list(f.kupisch), f.invariant, f.witness] for f in report.failures],
            "empty_cores": report.empty_cores,
            "unsupported": report.unsupported,
            "g_values": {str(k): v for k, v in sorted(report.g_values.items())},
            "presentations": [[n, m, k] for (n, m), k in sorted(report.presentations.items())],
        }), file=out)
    else:
        print(report.summary(), file=out)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nakayama-gp",
        description="Gorenstein-projective modules and deformation rings over cyclic Nakayama algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("--kupisch", help="Kupisch series, e.g. 4,5")
    algebra.add_argument("--input", help='JSON file {"kupisch": [...], "module": "v,l"}')
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--json", action="store_true", help="machine-readable output")
    module = argparse.ArgumentParser(add_help=False)
    module.add_argument("--module", help="uniserial module as top,len (0-indexed vertices)")

    for name, func, parents, help_ in [
        ("info", cmd_info, [algebra, output], "basic facts about the algebra"),
        ("gp-list", cmd_gp_list, [algebra, output], "Gorenstein-projective indecomposables"),
        ("elementaries", cmd_elementaries, [algebra, output], "elementary Gorenstein-projectives"),
        ("core", cmd_core, [algebra, output], "Gorenstein core invariants"),
        ("position", cmd_position, [algebra, module, output], "core length and boundary distance"),
        ("defring", cmd_defring, [algebra, module, output], "universal deformation ring"),
    ]:
        p = sub.add_parser(name, parents=parents, help=help_)
        p.set_defaults(func=func)

    p = sub.add_parser("jn", parents=[output], help="generators of J_n(a)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.set_defaults(func=cmd_jn)

    p = sub.add_parser("triangular", parents=[output], help="triangular matrix algebra reduction")
    p.add_argument("--spec", required=True, help="triangular module spec (JSON)")
    p.set_defaults(func=cmd_triangular)

    p = sub.add_parser("survey", parents=[output], help="exhaustive invariant survey")
    p.add_argument("--max-s", type=int, required=True)
    p.add_argument("--max-c", type=int, required=True)
    p.add_argument("--csv", help="write per-module rows to this CSV file")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_survey)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "survey" and (args.max_s < 1 or args.max_c < 2):
            raise InputError("survey needs --max-s >= 1 and --max-c >= 2")
        code = args.func(args, out)
    except NakayamaError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return exc.exit_code
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 2
    return code or 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
