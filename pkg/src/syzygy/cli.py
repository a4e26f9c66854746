"""Command-line front end.

Targets name a module: a module file, an algebra file or built-in algebra name
(meaning the regular module), optionally followed by ``:P<v>``, ``:I<v>``,
``:S<v>`` or ``:inj0`` (the first term of the injective resolution of the
regular module).  Exit codes: 0 computed, 1 violation found, 2 bad input.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .formats import ParseError, format_algebra, format_module, parse_algebra, parse_module
from .path_algebra import MonomialAlgebra
from .rep import Rep, format_types, regular, standard_module

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# ---------------------------------------------------------------- target loading


def load_algebra_ref(ref: str, p: int = 2) -> tuple[MonomialAlgebra, str]:
    """Returns the algebra and the reference to write in module files."""
    from .corpus import builtin

    if os.path.isfile(ref):
        with open(ref) as fh:
            text = fh.read()
        if _first_keyword(text) == "module":
            raise InputError(f"{ref} is a module file, an algebra was expected")
        return parse_algebra(text, ref), os.path.abspath(ref)
    try:
        return builtin(ref, p).algebra, ref
    except ValueError as e:
        raise InputError(f"{ref!r} is neither a file nor a built-in algebra ({e})") from None


def _first_keyword(text: str) -> str | None:
    for line in text.splitlines():
        words = line.split("#", 1)[0].split()
        if words:
            return words[0]
    return None


def _module_over(text: str, base_dir: str) -> str:
    for line in text.splitlines():
        words = line.split("#", 1)[0].split()
        if words[:2] == ["module", "over"] and len(words) == 3:
            path = os.path.join(base_dir, words[2])
            return os.path.abspath(path) if os.path.isfile(path) else words[2]
    raise InputError("missing 'module over' line")


def load_target(ref: str, p: int = 2, side: str = "left") -> tuple[Rep, str]:
    """Module named by ``ref`` plus the algebra reference for serialization."""
    if os.path.isfile(ref):
        with open(ref) as fh:
            text = fh.read()
        if _first_keyword(text) == "module":
            if side != "left":
                raise InputError("--side applies to algebra targets only")
            base_dir = os.path.dirname(os.path.abspath(ref))
            M = parse_module(text, ref, base_dir)
            return M, _module_over(text, base_dir)
    base, _, kind = ref.rpartition(":") if ":" in ref else (ref, "", "")
    alg, over = load_algebra_ref(base, p)
    if side == "right":
        alg = alg.opposite()
    elif side != "left":
        raise InputError(f"unknown side {side!r}")
    if not kind or kind == "regular":
        return regular(alg), over
    if kind == "inj0":
        from .resolutions import regular_injective_resolution

        return regular_injective_resolution(alg, 1).terms[0], over
    letters = {"P": "projective", "I": "injective", "S": "simple"}
    if kind[0] in letters and kind[1:].isdigit():
        try:
            return standard_module(alg, letters[kind[0]], int(kind[1:])), over
        except ValueError as e:
            raise InputError(str(e)) from None
    raise InputError(f"unknown module selector {kind!r}")


# ---------------------------------------------------------------- commands


def cmd_resolve(args, out) -> int:
    from .resolutions import INJECTIVE, PROJECTIVE, min_resolution

    M, _ = load_target(args.target, args.p, args.side)
    direction = PROJECTIVE if args.projective else INJECTIVE
    res = min_resolution(M, direction, args.depth)
    for i, (term, types) in enumerate(zip(res.terms, res.types)):
        print(f"{i}\t{format_types(types)}\t{term.dim}", file=out)
    print("terminated" if res.terminated else f"truncated\t{args.depth}", file=out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    from . import conditions as C
    from .homological import is_n_torsionfree

    cond = args.condition
    if cond in ("gnk", "gorenstein", "cogenerator"):
        alg, _ = load_algebra_ref(args.target, args.p)
        if cond == "gnk":
            sides = ("left", "right") if args.side == "both" else (args.side,)
            for side in sides:
                print(C.check_Gnk(alg, side, args.n, args.k, args.cap).format(), file=out)
        elif cond == "gorenstein":
            if args.n is None:
                print(C.gorenstein_summary(alg, args.cap or 6).format(), file=out)
            else:
                print(C.is_n_gorenstein(alg, args.n, args.cap).format(), file=out)
        else:
            print(C.cogenerator_check(alg, args.n).format(), file=out)
        return EXIT_OK
    M, _ = load_target(args.target, args.p)
    if cond == "rn":
        print(C.rn_property(M, args.n).format(), file=out)
    elif cond == "torsionfree":
        ok = is_n_torsionfree(M, args.n)
        print(f"torsionfree [n={args.n}]: {'true' if ok else 'false'}", file=out)
    elif cond == "syzygy":
        tv = C.syzygy_membership(M, args.n)
        print(f"syzygy [n={args.n}]: {tv.verdict}", file=out)
        for k, v in tv.certificate.items():
            print(f"  {k}: {v}", file=out)
    return EXIT_OK


def cmd_fuzz(args, out) -> int:
    from .fuzz import run_campaign

    algebras = None
    if args.algebra:
        algebras = [a for chunk in args.algebra for a in _split_names(chunk)]
        for name in algebras:
            load_algebra_ref(name, args.p)
    start = time.perf_counter()
    summary = run_campaign(args.kind, args.trials, args.seed, algebras, args.jobs, args.p,
                           args.budget)
    print(summary.format(), end="", file=out)
    print(f"elapsed {time.perf_counter() - start:.2f}s", file=sys.stderr)
    bad = summary.counterexample()
    if bad is not None:
        print(f"counterexample\ttrial {bad.index}\t{bad.algebra}", file=out)
        print(bad.detail, file=out)
        return EXIT_VIOLATION
    return EXIT_OK


def _split_names(chunk: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    names, depth, cur = [], 0, ""
    for ch in chunk:
        depth += ch == "("
        depth -= ch == ")"
        if ch == "," and depth == 0:
            names.append(cur)
            cur = ""
        else:
            cur += ch
    names.append(cur)
    return [n.strip() for n in names if n.strip()]


def cmd_verify(args, out) -> int:
    from .acceptance import run_all

    return EXIT_OK if run_all(out, sys.stderr) else EXIT_VIOLATION


def cmd_export(args, out) -> int:
    if ":" not in args.target and not os.path.isfile(args.target):
        alg, _ = load_algebra_ref(args.target, args.p)
        print(format_algebra(alg), end="", file=out)
        return EXIT_OK
    M, over = load_target(args.target, args.p)
    print(format_module(M, over), end="", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="syzygy", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add_p(p):
        p.add_argument("--p", type=int, default=2, help="field size for built-in algebras")

    r = sub.add_parser("resolve", help="minimal injective or projective resolution")
    r.add_argument("target")
    g = r.add_mutually_exclusive_group()
    g.add_argument("--injective", action="store_true", default=True)
    g.add_argument("--projective", action="store_true")
    r.add_argument("--depth", type=int, default=3)
    r.add_argument("--side", choices=("left", "right"), default="left")
    add_p(r)
    r.set_defaults(func=cmd_resolve)

    c = sub.add_parser("check", help="evaluate a condition")
    c.add_argument("condition", choices=("rn", "gnk", "gorenstein", "torsionfree", "syzygy",
                                         "cogenerator"))
    c.add_argument("target")
    c.add_argument("--n", type=int, default=None)
    c.add_argument("--k", type=int, default=0)
    c.add_argument("--side", choices=("left", "right", "both"), default="both")
    c.add_argument("--cap", type=int, default=None)
    add_p(c)
    c.set_defaults(func=cmd_check)

    f = sub.add_parser("fuzz", help="randomized property campaign")
    f.add_argument("kind", choices=("lemma21", "prop22", "resolving"))
    f.add_argument("--trials", type=int, default=100)
    f.add_argument("--seed", type=int, default=None, help="master seed (default $SYZYGY_SEED or 0)")
    f.add_argument("--algebra", action="append", help="built-in names or files; default: corpus")
    f.add_argument("--jobs", type=int, default=1)
    f.add_argument("--budget", type=int, default=4)
    add_p(f)
    f.set_defaults(func=cmd_fuzz)

    v = sub.add_parser("verify-paper", help="run the acceptance checklist")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="print an algebra or module in the text format")
    e.add_argument("target")
    add_p(e)
    e.set_defaults(func=cmd_export)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "check":
        needs_n = args.condition != "gorenstein"
        if needs_n and args.n is None:
            ap.error(f"check {args.condition} needs --n")
        if args.n is not None and args.n < (1 if args.condition in ("gnk", "gorenstein", "syzygy", "torsionfree") else 0):
            ap.error("--n is out of range for this condition")
    if args.command == "fuzz" and args.trials < 1:
        ap.error("--trials must be at least 1")
    if args.command == "resolve" and args.depth < 0:
        ap.error("--depth must be nonnegative")
    try:
        return args.func(args, out)
    except (ParseError, InputError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
