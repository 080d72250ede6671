"""Command-line entry point: ``cycbrauer <command> [options]``.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input,
3 a resource cap would be exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from .combinatorics import OrbitLabel, enumerate_lambda, mp_from_json, orbit_representative, stabiliser_index
from .cyclotomic import DeltaParams, generic_delta, parse_cyc
from .diagrams import (CapExceeded, LabelledDiagram, basis_size, compose, concatenate,
                       enumerate_basis, gen_e, gen_s, gen_s_star, gen_t)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- parsing helpers --------------------------------------------------------------

def load_json(text: str, what: str):
    """Inline JSON, or @path / an existing path to a UTF-8 JSON file."""
    source = what
    if text.startswith("@") or (not text.lstrip().startswith(("{", "[")) and Path(text).exists()):
        path = Path(text[1:] if text.startswith("@") else text)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {what} file {path}: {exc}") from exc
        source = str(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{source}: JSON parse error at line {exc.lineno} column {exc.colno}: "
                         f"{exc.msg}") from exc


def parse_diagram(text: str, what: str) -> LabelledDiagram:
    data = load_json(text, what)
    try:
        return LabelledDiagram.from_dict(data)
    except ValueError as exc:
        raise UsageError(f"{what}: {exc}") from exc


def get_delta(args) -> DeltaParams:
    m, p = args.m, args.p
    if args.delta is None:
        return generic_delta(m, p, seed=args.seed)
    values = [parse_cyc(v, m) for v in args.delta]
    return DeltaParams(m, p, values)


def parse_label(text: str, m: int, p: int, n: int):
    """An m-partition as JSON (p = 1) or ``JSON#rK`` for B(m,p,n)."""
    body, _, r = text.partition("#r")
    lam = mp_from_json(load_json(body, "label"))
    if len(lam) != m:
        raise UsageError(f"label {text} has {len(lam)} components, expected {m}")
    size = sum(sum(part) for part in lam)
    if size > n or (n - size) % 2:
        raise UsageError(f"label {text} does not index a module for n={n}")
    if p == 1:
        if r:
            raise UsageError("residues #r are only meaningful for p > 1")
        return lam
    rep = orbit_representative(lam, m, p)
    t = stabiliser_index(rep, m, p)
    r = int(r or 0)
    if not 0 <= r < p // t:
        raise UsageError(f"residue {r} out of range [0, {p // t})")
    return OrbitLabel(rep, t, r)


def named_generator(name: str, m: int, p: int, n: int) -> LabelledDiagram:
    """t1, t1^p (tp), sstar, s<i>, e12 / e<i>."""
    try:
        if name == "t1":
            return gen_t(n, m, p, 1, 1)
        if name == "tp":
            return gen_t(n, m, p, 1, p)
        if name == "sstar":
            return gen_s_star(n, m, p)
        if name == "e12":
            return gen_e(n, m, p, 1)
        if name[0] in "se" and name[1:].isdigit():
            i = int(name[1:])
            return gen_s(n, m, p, i) if name[0] == "s" else gen_e(n, m, p, i)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown generator {name!r}")


def matrix_strings(mat) -> list[list[str]]:
    return [[str(x) for x in row] for row in mat]


def check_cap_dim(module, args):
    if module.dim > args.cap_dim:
        raise CapExceeded(f"module dimension {module.dim} exceeds --cap-dim {args.cap_dim}")


def emit(obj, args, out):
    out.write(json.dumps(obj, indent=None if args.compact else 1) + "\n")


# -- commands -------------------------------------------------------------------------

def cmd_basis(args, out) -> int:
    count = basis_size(args.m, args.p, args.n)
    if args.count:
        if args.verify:
            count = len(enumerate_basis(args.m, args.p, args.n, cap=args.cap_basis))
        out.write(f"{count}\n")
        return EXIT_OK
    for d in enumerate_basis(args.m, args.p, args.n, cap=args.cap_basis):
        out.write(d.to_json() + "\n")
    return EXIT_OK


def cmd_mul(args, out) -> int:
    x = parse_diagram(args.left, "left diagram")
    y = parse_diagram(args.right, "right diagram")
    if (x.n, x.m, x.p) != (y.n, y.m, y.p):
        raise UsageError("diagrams belong to different algebras")
    d, loops = concatenate(x, y)
    if args.symbolic:
        if any(lab % x.p for lab in loops):
            coeff, diagram = "0", None
        else:
            powers = Counter(lab for lab in loops)
            coeff = "*".join(f"d{lab}" + (f"^{k}" if k > 1 else "")
                             for lab, k in sorted(powers.items())) or "1"
            diagram = d.to_dict()
    else:
        comb = compose(x, y, get_delta(args))
        if comb.is_zero():
            coeff, diagram = "0", None
        else:
            (diag, c), = list(comb)
            coeff, diagram = str(c), diag.to_dict()
    emit({"coefficient": coeff, "diagram": diagram, "loops": loops}, args, out)
    return EXIT_OK


def _module(args):
    from .modules import simple_head, standard_module
    delta = get_delta(args)
    label = parse_label(args.label, args.m, args.p, args.n)
    mod = standard_module(label, args.n, delta)
    check_cap_dim(mod, args)
    if getattr(args, "head", False):
        mod = simple_head(mod)
    return label, mod


def cmd_act(args, out) -> int:
    label, mod = _module(args)
    g = named_generator(args.gen, args.m, args.p if args.p > 1 else 1, args.n)
    emit({"label": str(label), "generator": args.gen, "dim": mod.dim,
          "matrix": matrix_strings(mod.matrix(g))}, args, out)
    return EXIT_OK


def cmd_standard(args, out) -> int:
    label, mod = _module(args)
    gens = {str(g): matrix_strings(mod.matrix(g)) for g in mod.generators()}
    emit({"label": str(label), "dim": mod.dim, "generators": gens}, args, out)
    return EXIT_OK


def cmd_simple(args, out) -> int:
    from .clifford import SimpleModule
    label = parse_label(args.label, args.m, args.p, args.n)
    if sum(sum(part) for part in (label.lam if args.p > 1 else label)) != args.n:
        raise UsageError("simple modules of G(m,p,n) need a label of size n")
    lab = label if args.p > 1 else OrbitLabel(label, 1, 0)
    mod = SimpleModule(lab, args.m, args.p)
    check_cap_dim(mod, args)
    gens = {"tp": mod.t_p}
    if args.n >= 2 and args.p > 1:
        gens["sstar"] = mod.s_star
    for i in range(1, args.n):
        gens[f"s{i}"] = mod.s(i)
    emit({"label": str(lab), "dim": mod.dim,
          "generators": {k: matrix_strings(v) for k, v in gens.items()}}, args, out)
    return EXIT_OK


def cmd_homdim(args, out) -> int:
    from .decomposition import hom_dim
    from .modules import standard_module
    delta = get_delta(args)
    a = standard_module(parse_label(args.source, args.m, args.p, args.n), args.n, delta)
    b = standard_module(parse_label(args.target, args.m, args.p, args.n), args.n, delta)
    check_cap_dim(a, args)
    check_cap_dim(b, args)
    out.write(f"{hom_dim(a, b)}\n")
    return EXIT_OK


def cmd_decomp(args, out) -> int:
    from .decomposition import decomp_formula, decomp_oracle
    delta = get_delta(args)
    oracle = decomp_oracle(args.m, args.p, args.n, delta, cap=args.cap_basis)
    formula = decomp_formula(args.m, args.p, args.n, delta, cols=oracle.cols)
    diff = oracle.diff(formula)
    if args.csv:
        out.write("# formula\n" + formula.to_csv() + "# oracle\n" + oracle.to_csv())
        out.write(f"# differences: {len(diff)}\n")
    else:
        emit({"formula": formula.to_json(), "oracle": oracle.to_json(), "diff": diff}, args, out)
    return EXIT_OK if not diff else EXIT_FAIL


def cmd_verify(args, out) -> int:
    from .verify import run_suites
    results = run_suites(args.m, args.p, args.n, get_delta(args), seed=args.seed,
                         cap=args.cap_basis)
    failed = [r for r in results if not r[1]]
    for name, ok, detail in results:
        out.write(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else "") + "\n")
    return EXIT_FAIL if failed else EXIT_OK


# -- argument parsing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, required=True)
    common.add_argument("--p", type=int, default=1)
    common.add_argument("--n", type=int, required=True)
    common.add_argument("--delta", nargs="+", metavar="VALUE",
                        help="m/p loop parameters as cyclotomic strings, e.g. 2 '1/2*x'; "
                             "random generic values when omitted")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap-basis", type=int, default=2000)
    common.add_argument("--cap-dim", type=int, default=500)
    common.add_argument("--compact", action="store_true", help="single-line JSON")

    parser = argparse.ArgumentParser(prog="cycbrauer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common], help="list or count basis diagrams")
    p.add_argument("--count", action="store_true")
    p.add_argument("--verify", action="store_true", help="count by enumeration")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("mul", parents=[common], help="multiply two diagrams")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--symbolic", action="store_true", help="print loop factors as d<label>")
    p.set_defaults(func=cmd_mul)

    for name, func, helptext in (("act", cmd_act, "matrix of one generator on a module"),
                                 ("standard", cmd_standard, "dump a standard module")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--label", required=True, help="m-partition JSON, with #r<k> when p > 1")
        p.add_argument("--head", action="store_true", help="use the simple head instead")
        if name == "act":
            p.add_argument("--gen", required=True, help="t1, tp, sstar, s<i>, e<i>, e12")
        p.set_defaults(func=func)

    p = sub.add_parser("simple", parents=[common], help="dump a simple kG(m,p,n)-module")
    p.add_argument("--label", required=True)
    p.set_defaults(func=cmd_simple)

    p = sub.add_parser("homdim", parents=[common], help="dim Hom between standard modules")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(func=cmd_homdim)

    p = sub.add_parser("decomp", parents=[common], help="decomposition matrix, formula and oracle")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--json", action="store_true", help="JSON output (the default)")
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suites")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.m < 1 or args.p < 1 or args.n < 0 or args.m % args.p:
        print(f"error: need p | m with m, p >= 1 and n >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except CapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
