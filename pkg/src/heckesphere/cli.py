"""Command-line front end.

Subcommands:
    kl        print the Kazhdan-Lusztig basis element b_x
    act       expand 1 (x) b_{x_} in the spherical standard basis
    rank      graded rank polynomial for a pair of expressions
    stroll    coset strolls / decorations of subexpressions
    localize  multiset of subexpression products
    sll       spherical light-leaf recipe
    sdl       double-leaf recipe
    nsll      non-spherical light-leaf recipe
    verify    run the identity-verification suites

Exit codes: 0 success, 1 verification failure, 2 parse/configuration error,
3 length budget exceeded, 4 endpoint mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import catalog, lightleaf, strolls, verify
from .coxeter import CoxeterMatrix, CoxeterSystem
from .errors import BudgetExceeded, EndpointMismatch, HeckesphereError
from .hecke import HeckeAlgebra
from .spherical import SphericalModule


def _load_system(args) -> CoxeterSystem:
    name = args.system
    if name in catalog.BUILTIN:
        matrix = catalog.BUILTIN[name]
    else:
        matrix = CoxeterMatrix.load(name)
    return CoxeterSystem(matrix, args.budget)


def _parse_J(system: CoxeterSystem, spec: str | None) -> frozenset[int]:
    if not spec:
        return frozenset()
    names = {g: i for i, g in enumerate(system.matrix.generators)}
    out = set()
    for part in spec.split(","):
        part = part.strip()
        if part not in names:
            raise HeckesphereError(f"unknown generator {part!r} in --J")
        out.add(names[part])
    return frozenset(out)


def _parse_bits(spec: str, n: int) -> tuple[int, ...]:
    spec = spec.strip()
    if len(spec) != n or any(ch not in "01" for ch in spec):
        raise HeckesphereError(f"--bits must be a 0/1 string of length {n}")
    return tuple(int(ch) for ch in spec)


def _print_csv(rows: list[dict]):
    if not rows:
        return
    writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0].keys()))
    writer.writeheader()
    writer.writerows(rows)


def cmd_kl(args) -> int:
    system = _load_system(args)
    alg = HeckeAlgebra(system)
    x = system.element(system.parse_word(args.x))
    b = alg.kl_basis(x)
    if args.format == "json":
        print(json.dumps(b.to_json(system), indent=2))
    elif args.format == "csv":
        _print_csv([
            {"elt": system.format_word(w) or "e", "coeff": str(c)}
            for w, c in b.items()
        ])
    else:
        print(alg.format(b))
    return 0


def cmd_act(args) -> int:
    system = _load_system(args)
    J = _parse_J(system, args.J)
    mod = SphericalModule(HeckeAlgebra(system), J)
    m = mod.expand_expression(system.parse_word(args.x))
    if args.format == "json":
        print(json.dumps(mod.to_json(m), indent=2))
    elif args.format == "csv":
        _print_csv([
            {"elt": system.format_word(w) or "e", "coeff": str(c)}
            for w, c in m.items()
        ])
    else:
        print(mod.format(m))
    return 0


def cmd_rank(args) -> int:
    system = _load_system(args)
    J = _parse_J(system, args.J)
    x = system.parse_word(args.x)
    y = system.parse_word(args.y)
    poly = strolls.rank_poly(system, J, x, y)
    if args.format == "json":
        print(json.dumps(poly.to_json()))
    else:
        print(poly)
    return 0


def cmd_stroll(args) -> int:
    system = _load_system(args)
    J = _parse_J(system, args.J)
    word = system.parse_word(args.x)
    if args.bits is not None:
        bit_lists = [_parse_bits(args.bits, len(word))]
    else:
        bit_lists = list(strolls.subexpressions(len(word)))
    rows = [
        strolls.decoration_json(system, strolls.decorate(system, J, word, bits))
        for bits in bit_lists
    ]
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "csv":
        _print_csv([
            {
                "bits": "".join(map(str, r["bits"])),
                "labels": " ".join(r["labels"]),
                "stroll": " ".join(z or "e" for z in r["stroll"]),
                "endpoint": r["endpoint"] or "e",
                "sdef": r["sdef"],
            }
            for r in rows
        ])
    else:
        for r in rows:
            print(
                f"bits={''.join(map(str, r['bits']))} "
                f"labels={','.join(r['labels'])} "
                f"stroll={','.join(z or 'e' for z in r['stroll'])} "
                f"sdef={r['sdef']}"
            )
    return 0


def cmd_localize(args) -> int:
    system = _load_system(args)
    word = system.parse_word(args.x)
    counts = strolls.localized_summands(system, word)
    items = sorted(counts.items(), key=lambda kv: (len(kv[0]), kv[0]))
    if args.format == "json":
        print(json.dumps(
            [{"elt": system.format_word(w) or "e", "multiplicity": n}
             for w, n in items], indent=2))
    elif args.format == "csv":
        _print_csv([
            {"elt": system.format_word(w) or "e", "multiplicity": n}
            for w, n in items
        ])
    else:
        for w, n in items:
            print(f"{system.format_word(w) or 'e'}: {n}")
    return 0


def cmd_sll(args) -> int:
    system = _load_system(args)
    J = _parse_J(system, args.J)
    word = system.parse_word(args.x)
    if args.all:
        bit_lists = list(strolls.subexpressions(len(word)))
    else:
        if args.bits is None:
            raise HeckesphereError("sll needs --bits or --all")
        bit_lists = [_parse_bits(args.bits, len(word))]
    outputs = []
    for bits in bit_lists:
        recipe = lightleaf.build_sll(system, J, word, bits)
        outputs.append(recipe)
    if args.format == "json":
        print(json.dumps(
            [lightleaf.recipe_to_json(system, r) for r in outputs]
            if args.all else lightleaf.recipe_to_json(system, outputs[0]),
            indent=2))
    else:
        print("\n\n".join(lightleaf.render(system, r, args.format) for r in outputs))
    return 0


def cmd_sdl(args) -> int:
    system = _load_system(args)
    J = _parse_J(system, args.J)
    x = system.parse_word(args.x)
    y = system.parse_word(args.y)
    if args.bits is None or args.bits2 is None:
        raise HeckesphereError("sdl needs --bits and --bits2")
    e = _parse_bits(args.bits, len(x))
    f = _parse_bits(args.bits2, len(y))
    dl = lightleaf.build_sdl(system, J, x, e, y, f)
    print(lightleaf.render(system, dl, args.format))
    return 0


def cmd_nsll(args) -> int:
    system = _load_system(args)
    J = _parse_J(system, args.J)
    word = system.parse_word(args.x)
    if args.bits is None:
        raise HeckesphereError("nsll needs --bits")
    bits = _parse_bits(args.bits, len(word))
    recipe = lightleaf.build_nsll(system, J, word, bits)
    print(lightleaf.render(system, recipe, args.format))
    return 0


def cmd_verify(args) -> int:
    system = _load_system(args)
    names = args.suite
    if "all" in names:
        names = list(verify.SUITES)
    for name in names:
        if name not in verify.SUITES:
            print(f"unknown suite {name!r}", file=sys.stderr)
            return 2
    results = verify.run_suites(system, names)
    failed = False
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        print(f"{status} {res.suite}/{res.name}")
        if not res.ok:
            failed = True
            for msg in res.failures[:5]:
                print(f"  counterexample: {msg}")
            if len(res.failures) > 5:
                print(f"  ... and {len(res.failures) - 5} more")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckesphere",
        description="Exact Hecke-algebra and spherical-module computations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_J=True):
        p.add_argument("--system", required=True,
                       help="Coxeter matrix JSON file or a built-in name "
                            f"({', '.join(sorted(catalog.BUILTIN))})")
        p.add_argument("--budget", type=int, default=12,
                       help="length budget for group enumeration (default 12)")
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        if needs_J:
            p.add_argument("--J", default="",
                           help="comma-separated generator names, e.g. 's' or 's,t'")

    p = sub.add_parser("kl", help="Kazhdan-Lusztig basis element")
    common(p, needs_J=False)
    p.add_argument("-x", required=True, help="group element as a word")
    p.set_defaults(fn=cmd_kl)

    p = sub.add_parser("act", help="expand 1 (x) b_expr in the spherical module")
    common(p)
    p.add_argument("-x", required=True, help="expression (word)")
    p.set_defaults(fn=cmd_act)

    p = sub.add_parser("rank", help="graded rank polynomial")
    common(p)
    p.add_argument("-x", required=True)
    p.add_argument("-y", required=True)
    p.set_defaults(fn=cmd_rank)

    p = sub.add_parser("stroll", help="coset strolls and decorations")
    common(p)
    p.add_argument("-x", required=True)
    p.add_argument("--bits", help="single subexpression (default: all)")
    p.set_defaults(fn=cmd_stroll)

    p = sub.add_parser("localize", help="subexpression product multiset")
    common(p, needs_J=False)
    p.add_argument("-x", required=True)
    p.set_defaults(fn=cmd_localize)

    p = sub.add_parser("sll", help="spherical light-leaf recipe")
    common(p)
    p.add_argument("-x", required=True)
    p.add_argument("--bits")
    p.add_argument("--all", action="store_true", help="all subexpressions")
    p.set_defaults(fn=cmd_sll)

    p = sub.add_parser("sdl", help="double-leaf recipe")
    common(p)
    p.add_argument("-x", required=True)
    p.add_argument("-y", required=True)
    p.add_argument("--bits", help="bits for -x")
    p.add_argument("--bits2", help="bits for -y")
    p.set_defaults(fn=cmd_sdl)

    p = sub.add_parser("nsll", help="non-spherical light-leaf recipe")
    common(p)
    p.add_argument("-x", required=True)
    p.add_argument("--bits")
    p.set_defaults(fn=cmd_nsll)

    p = sub.add_parser("verify", help="run identity-verification suites")
    common(p, needs_J=False)
    p.add_argument("--suite", action="append", required=True,
                   help="hecke, spherical, strolls, lightleaf, or all "
                        "(repeatable)")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except EndpointMismatch as exc:
        print(f"endpoint mismatch: {exc}", file=sys.stderr)
        return 4
    except (HeckesphereError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
