"""Command-line front end: ``heiscurve <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, List, Optional

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
REGULAR_GUARD = 10 ** 5


class UsageError(Exception):
    pass


class Guard(Exception):
    pass


def _flatten(prefix: str, value: Any, out: list) -> None:
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], out)
    elif isinstance(value, (list, tuple)) and value and isinstance(value[0], (dict, list, tuple)):
        for i, v in enumerate(value):
            _flatten(f"{prefix}.{i}", v, out)
    else:
        out.append((prefix, value))


def emit(data: Any, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, sort_keys=True)
    rows: list = []
    _flatten("", data, rows)
    if fmt == "tsv":
        return "\n".join(f"{k}\t{json.dumps(v, sort_keys=True) if isinstance(v, (list, tuple, dict)) else v}" for k, v in rows)
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _guard_limit() -> int:
    return int(os.environ.get("HEISCURVE_GUARD", REGULAR_GUARD))


def _check_size(n: int, force: bool, what: str) -> None:
    if not force and n > _guard_limit():
        raise Guard(f"{what} = {n} exceeds the guard {_guard_limit()}; use --force or HEISCURVE_GUARD")


def _parse_elem(text: str):
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"bad element {text!r}; expected a,c,b")
    if len(parts) != 3:
        raise UsageError(f"bad element {text!r}; expected a,c,b")
    return parts


def cmd_genus(args) -> Any:
    from .actions import PermAction
    from .curves import genus_closed_form, rh_genus
    from .heisenberg import HeisParams, regular_action

    if args.action:
        with open(args.action) as fh:
            act = PermAction.from_json(fh.read())
        cd = rh_genus(act)
        return json.loads(cd.to_json()) | {"cusp_count": cd.cusp_count}
    if None in (args.m, args.n, args.l):
        raise UsageError("genus needs --m, --n and --l, or --action FILE")
    try:
        p = HeisParams(args.m, args.n, args.l)
    except ValueError as exc:
        raise UsageError(str(exc))
    out = {"M": p.M, "N": p.N, "L": p.L, "genus": genus_closed_form(p.M, p.N, p.L)}
    if not args.closed_form_only:
        _check_size(p.order, args.force, "M*N*L")
        cd = rh_genus(regular_action(p))
        out["rh_genus"] = cd.genus
        out["cusp_count"] = cd.cusp_count
        out["cusps"] = {k: list(v) for k, v in cd.cusps.items()}
    return out


def cmd_classify(args) -> Any:
    from .curves import classify_small_genus

    if args.bound < 1:
        raise UsageError("--bound must be >= 1")
    return {"bound": args.bound, "target": args.target,
            "triples": [list(t) for t in classify_small_genus(args.bound, args.target)]}


def cmd_homology(args) -> Any:
    from .homology import GuardError, h1_report

    if args.n < 1:
        raise UsageError("--n must be >= 1")
    try:
        return h1_report(args.n, force=args.force).as_dict()
    except GuardError as exc:
        raise Guard(str(exc))


def cmd_cuspidal(args) -> Any:
    from .cuspidal import report

    if args.n < 3 or args.n % 2 == 0:
        raise UsageError("--n must be odd and >= 3")
    return report(args.n)


def cmd_cyclotomic(args) -> Any:
    from .cyclotomic import report

    if args.n < 3 or args.n % 2 == 0:
        raise UsageError("--n must be odd and >= 3")
    return report(args.n, mod11=args.mod11)


def cmd_dessin(args) -> Any:
    from .dessin import dessin_genus, export_dot, export_json, heisenberg_dessin

    if args.n < 1:
        raise UsageError("--n must be >= 1")
    _check_size(args.n ** 3, args.force, "N^3")
    d = heisenberg_dessin(args.n)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(export_dot(d))
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(export_json(d))
    return {
        "N": args.n,
        "edges": d.num_edges,
        "black_vertices": len(d.black_vertices()),
        "white_vertices": len(d.white_vertices()),
        "faces": len(d.faces()),
        "genus": dessin_genus(d),
        "out": args.out,
    }


def _word_to_mat(word: str, n: int):
    from .psl2 import gen_A, gen_B, identity

    A, B = gen_A(n), gen_B(n)
    out = identity(n)
    for ch in word:
        step = {"A": A, "a": A.inverse(), "B": B, "b": B.inverse()}.get(ch)
        if step is None:
            raise UsageError(f"bad letter {ch!r} in generator {word!r}")
        out = out * step
    return out


def cmd_psl2(args) -> Any:
    from .psl2 import GuardError, closure, derived_closure, gamma2_index_mod, psl2_order, sorted_elements

    try:
        gens = [_word_to_mat(w, args.n) for w in args.gens.split(",") if w]
        H = closure(gens, args.n)
        if args.derived:
            H = derived_closure(H)
        out = {
            "n": args.n,
            "gens": args.gens,
            "derived": args.derived,
            "order": len(H),
            "psl2_order": psl2_order(args.n),
            "gamma2_index": gamma2_index_mod(args.n),
        }
    except GuardError as exc:
        raise Guard(str(exc))
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.list:
        out["elements"] = [list(e) for e in sorted_elements(H)]
    return out


def cmd_congruence(args) -> Any:
    from .curves import congruence_refutation
    from .heisenberg import HeisParams, heisenberg_level, regular_action

    if args.n < 1:
        raise UsageError("--n must be >= 1")
    p = heisenberg_level(args.n) if args.subgroup == "phi-prime" else HeisParams(args.n, args.n, 1)
    _check_size(p.order, args.force, "index")
    act = regular_action(p)
    cert = congruence_refutation(act, act.degree)
    return {"subgroup": args.subgroup, "N": args.n, **cert.as_dict()}


def cmd_heisenberg(args) -> Any:
    from .heisenberg import (HeisElement, HeisParams, exponent_closed_form, h_center_order,
                             h_exponent, h_order)

    try:
        p = HeisParams(args.m, args.n, args.l)
    except ValueError as exc:
        raise UsageError(str(exc))
    out = {"M": p.M, "N": p.N, "L": p.L, "op": args.op}
    if args.op in ("exponent", "center"):
        _check_size(p.order, args.force, "M*N*L")
    if args.op == "exponent":
        out["exponent"] = h_exponent(p)
        out["closed_form"] = exponent_closed_form(p)
    elif args.op == "center":
        out["center_order"] = h_center_order(p)
    elif args.op in ("order", "inverse"):
        if not args.g:
            raise UsageError(f"{args.op} needs --g a,c,b")
        g = HeisElement(*_parse_elem(args.g), p)
        out["g"] = list(g.astuple())
        if args.op == "order":
            out["order"] = h_order(g)
        else:
            out["inverse"] = list(g.inverse().astuple())
    elif args.op == "mul":
        if not (args.g and args.h):
            raise UsageError("mul needs --g a,c,b and --h a,c,b")
        g = HeisElement(*_parse_elem(args.g), p)
        h = HeisElement(*_parse_elem(args.h), p)
        out["product"] = list((g * h).astuple())
    elif args.op == "word":
        from .heisenberg import h_from_word
        from .words import FreeWord

        if args.word is None:
            raise UsageError("word needs --word over A a B b")
        try:
            w = FreeWord.parse(args.word)
        except ValueError as exc:
            raise UsageError(str(exc))
        out["image"] = list(h_from_word(w, p).astuple())
    return out


def cmd_verify(args) -> Any:
    from .verify import run_verify

    rep = run_verify(quick=args.quick)
    args._exit = rep.exit_code
    if args.format == "json":
        return rep.as_dict()
    lines = [f"{r.check_id}\t{r.status}" for r in rep.results]
    lines.append(f"overall\t{'PASS' if rep.ok else 'FAIL'}")
    args._raw = "\n".join(lines)
    return None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="heiscurve", description="Heisenberg curves, Fermat curves and modular symbols.")
    parser.add_argument("--format", choices=("json", "tsv", "text"), default="json")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("json", "tsv", "text"), default=argparse.SUPPRESS)
        p.set_defaults(func=fn)
        return p

    p = add("genus", cmd_genus, "genus and cusps of X_{M,N,L} or of a permutation action")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--action", help="JSON file with {x: [...], y: [...]}")
    p.add_argument("--closed-form-only", action="store_true")
    p.add_argument("--force", action="store_true")

    p = add("classify-genus", cmd_classify, "all (M,N,L) up to a bound with a given genus")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--target", type=int, required=True)

    p = add("homology", cmd_homology, "invariant factors of H_1(X'_N) from modular symbols")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--force", action="store_true")

    p = add("cuspidal", cmd_cuspidal, "cuspidal group of the Fermat curve F_N")
    p.add_argument("--n", type=int, required=True)

    p = add("cyclotomic-checks", cmd_cyclotomic, "identities in Z[mu_N]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mod11", action="store_true")

    p = add("dessin", cmd_dessin, "dessin of X'_N as DOT")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--json-out")
    p.add_argument("--force", action="store_true")

    p = add("psl2", cmd_psl2, "subgroups of PSL_2(Z/nZ) generated by words in A, B")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gens", default="A,B", help="comma-separated words over A a B b")
    p.add_argument("--derived", action="store_true")
    p.add_argument("--list", action="store_true")

    p = add("congruence", cmd_congruence, "Wohlfahrt non-congruence certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--subgroup", choices=("phi", "phi-prime"), default="phi-prime")
    p.add_argument("--force", action="store_true")

    p = add("heisenberg", cmd_heisenberg, "arithmetic in H_{M,N,L}")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("op", choices=("exponent", "center", "order", "inverse", "mul", "word"))
    p.add_argument("--g")
    p.add_argument("--h")
    p.add_argument("--word")
    p.add_argument("--force", action="store_true")

    p = add("verify", cmd_verify, "run the acceptance checks")
    p.add_argument("--quick", action="store_true")
    return parser


def run(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    args._exit = EXIT_OK
    args._raw = None
    try:
        data = args.func(args)
    except UsageError as exc:
        print(f"heiscurve: error: {exc}", file=stderr)
        return EXIT_USAGE
    except Guard as exc:
        print(f"heiscurve: guard: {exc}", file=stderr)
        return EXIT_GUARD
    except OSError as exc:
        print(f"heiscurve: error: {exc}", file=stderr)
        return EXIT_USAGE
    text = args._raw if args._raw is not None else emit(data, args.format)
    print(text, file=stdout)
    return args._exit


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
