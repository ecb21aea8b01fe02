"""Command-line front end.

Subcommands: eval, verify, count-nonvanishing, coeffs.  Exit codes:
0 success, 1 argument/parse error (message names the argument),
2 pole flag, 3 identity-suite failure beyond error bounds.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

import mpmath as mp

from .characters import DirichletCharacter, character_by_index, principal_character, quadratic_character
from .lerch import LerchArgument, LerchPole, applicable_routes, lerch_eval
from .lvalues import TwistedHurwitzArg, TwistedPeriodicArg, dirichlet_l, twisted_hurwitz_l, twisted_periodic_l
from .moments import WideMomentSpec
from .nonvanishing import count_nonvanishing, nonvanishing_ratio
from .precision import default_dps, make_config, mpc_to_str, mpf_to_str
from .reports import RunConfig, write_csv, write_json
from .verify import REGISTRY, prime_ladder


class ArgumentError(Exception):
    def __init__(self, name: str, message: str):
        super().__init__(f"argument {name}: {message}")
        self.name = name


def parse_rational(text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ArgumentError(name, f"expected an exact rational like 2/7, got {text!r}") from exc


_S_RE = re.compile(r"^(?P<re>[+-]?[\d.]+(?:[eE][+-]?\d+)?|[+-]?\d+/\d+)(?P<im>[+-](?:[\d.]+(?:[eE][+-]?\d+)?|\d+/\d+))?i?$")


def parse_s(text: str, name: str = "--s") -> mp.mpc:
    """Parse 're', 're+imi', or 're-imi'; each part decimal or p/q."""
    t = text.strip().replace(" ", "")
    has_imag = t.endswith("i")
    m = _S_RE.match(t)
    if not m or (m.group("im") and not has_imag):
        raise ArgumentError(name, f"expected re[+imi], got {text!r}")

    def part(p: str) -> mp.mpf:
        if "/" in p:
            f = Fraction(p)
            return mp.mpf(f.numerator) / f.denominator
        return mp.mpf(p)

    try:
        if m.group("im") is not None:
            return mp.mpc(part(m.group("re")), part(m.group("im")))
        if has_imag:
            return mp.mpc(0, part(m.group("re")))
        return mp.mpc(part(m.group("re")))
    except ValueError as exc:
        raise ArgumentError(name, f"cannot parse {text!r}") from exc


def parse_character(modulus: int, spec: str, name: str) -> DirichletCharacter:
    if spec == "trivial" or spec == "principal":
        return principal_character(modulus)
    if spec == "quadratic":
        try:
            return quadratic_character(modulus)
        except ValueError as exc:
            raise ArgumentError(name, str(exc)) from exc
    try:
        return character_by_index(modulus, int(spec))
    except ValueError as exc:
        raise ArgumentError(name, str(exc)) from exc


def _print_value(label: str, value, err, dps: int, route: str | None = None) -> None:
    line = f"{label} = {mpc_to_str(value, dps)}  +-  {mpf_to_str(err, 6)}"
    if route:
        line += f"  [route: {route}]"
    print(line)


def cmd_eval(args) -> int:
    cfg = make_config(args.prec)
    s = parse_s(args.s)
    if args.kind == "lerch":
        alpha = parse_rational(args.alpha, "--alpha")
        c = parse_rational(args.c, "--c")
        arg = LerchArgument(alpha, c, s)
        val = lerch_eval(arg, cfg, route=args.route)
        routes = [args.route] if args.route else applicable_routes(arg, cfg)
        _print_value(f"zeta({alpha}, {c}, {args.s})", val.value, val.err, cfg.dps, routes[0] if routes else "?")
        return 0
    if args.kind == "lfun":
        chi = parse_character(args.modulus, args.char, "--char")
        val = dirichlet_l(chi, s, cfg)
        _print_value(f"L(chi_{args.modulus}[{args.char}], {args.s})", val.value, val.err, cfg.dps)
        return 0
    if args.kind == "thurwitz":
        chi = parse_character(args.modulus, args.char, "--char")
        val = twisted_hurwitz_l(TwistedHurwitzArg(chi, args.b, args.ell, s), cfg)
        _print_value(f"L(chi, {args.b}/{args.ell}, {args.s})", val.value, val.err, cfg.dps)
        return 0
    if args.kind == "tperiodic":
        alpha = parse_rational(args.alpha, "--alpha")
        psi = parse_character(args.modulus, args.char, "--char")
        val = twisted_periodic_l(TwistedPeriodicArg(alpha, psi, s), cfg)
        _print_value(f"L({alpha}, psi_{args.modulus}[{args.char}], {args.s})", val.value, val.err, cfg.dps)
        return 0
    raise ArgumentError("kind", f"unknown eval target {args.kind!r}")


def _strip_runtime(d: dict) -> dict:
    return {k: v for k, v in d.items() if k != "runtime_s"}


def _emit(result, run: RunConfig, extra_meta: dict | None = None) -> None:
    meta = {
        "command": run.command,
        "theorem": result.theorem,
        "precision": run.dps,
        "seed": run.seed,
        "workers": run.workers,
        "identity_class": result.identity_class,
        "ok": result.ok,
    }
    if extra_meta:
        meta.update(extra_meta)
    rows = [_strip_runtime(r) for r in result.rows]
    summary = _strip_runtime(result.summary)
    summary["ok"] = result.ok
    if run.out:
        if run.format == "json":
            write_json(run.out, meta, rows, summary, run.dps)
        else:
            write_csv(run.out, rows, run.dps)
        print(f"wrote {len(rows)} rows to {run.out}")


def cmd_verify(args) -> int:
    if args.theorem not in REGISTRY:
        raise ArgumentError("theorem", f"unknown id {args.theorem!r}; known: {', '.join(sorted(set(REGISTRY)))}")
    cfg = make_config(args.prec) if args.prec else None
    driver = REGISTRY[args.theorem]
    kwargs = {}
    if args.theorem in ("thm3.5",) and args.primes_to:
        kwargs["primes"] = tuple(prime_ladder(3, args.primes_to, 15))
        if args.m:
            kwargs["ms"] = tuple(args.m)
        kwargs["workers"] = args.workers
    if args.theorem in ("thm1.1", "thm3.1"):
        kwargs["workers"] = args.workers
        if args.primes_to:
            kwargs["primes_by_class"] = {
                1: tuple(prime_ladder(5, args.primes_to, 8, residue=1, modulus=3)),
                2: tuple(prime_ladder(5, args.primes_to, 8, residue=2, modulus=3)),
            }
    if args.theorem in ("fe", "functional-equation", "routes") and args.points:
        kwargs["n_points"] = args.points
        kwargs["seed"] = args.seed
    if args.theorem == "fourier":
        if args.q:
            kwargs["q_max"] = max(args.q)
        if args.m:
            kwargs["ms"] = tuple(args.m)
    if args.theorem in ("thm1.2", "thm1.3") and args.q:
        kwargs["qs"] = tuple(args.q)
    if args.theorem == "thm3.6" and args.q:
        kwargs["qs"] = tuple(args.q)
    result = driver(cfg, **kwargs) if cfg else driver(**kwargs)
    run = RunConfig(command="verify", dps=args.prec or default_dps(), theorem=args.theorem,
                    out=args.out, format=args.format, seed=args.seed, workers=args.workers)
    _emit(result, run)
    summary = {k: v for k, v in result.summary.items() if k != "runtime_s"}
    print(f"theorem {result.theorem}: {'PASS' if result.ok else 'FAIL'}")
    for k, v in summary.items():
        print(f"  {k}: {v}")
    for w in result.warnings:
        print(f"  warning: {w}")
    if not result.ok and result.identity_class:
        return 3
    if not result.ok:
        print("envelope-class failure (reported as warning)", file=sys.stderr)
        return 0 if args.lenient else 3
    return 0


def _parse_twist(text: str, name: str) -> DirichletCharacter:
    if ":" in text:
        kind, mod = text.split(":", 1)
        return parse_character(int(mod), kind, name)
    if text in ("trivial", "principal"):
        return principal_character(1)
    raise ArgumentError(name, f"expected 'trivial' or kind:modulus, got {text!r}")


def cmd_count_nonvanishing(args) -> int:
    cfg = make_config(args.prec)
    rows = []
    for q in args.q:
        twists = tuple(_parse_twist(t, "--twist") for t in args.twist) if args.twist else ()
        if twists and len(twists) != args.m:
            raise ArgumentError("--twist", f"need {args.m} twists, got {len(twists)}")
        spec = WideMomentSpec(q, args.m, twists=twists)
        rep = count_nonvanishing(spec, cfg)
        rows.append({
            "q": q, "m": args.m,
            "certified": rep.certified, "indeterminate": rep.indeterminate,
            "family": rep.family_size,
            "cs_bound": rep.cs_lower_bound,
            "cs_lo": rep.cs_interval[0], "cs_hi": rep.cs_interval[1],
            "first_moment": rep.first_moment.value, "second_moment": rep.second_moment.value,
            "ratio_log10": nonvanishing_ratio(rep),
        })
        print(f"q={q} m={args.m}: certified {rep.certified} / {rep.family_size}, "
              f"indeterminate {rep.indeterminate}, CS bound {mpf_to_str(rep.cs_lower_bound, 8)}")
    if args.out:
        run = RunConfig(command="count-nonvanishing", dps=args.prec, out=args.out, format=args.format)
        meta = {"command": "count-nonvanishing", "m": args.m, "precision": args.prec}
        if args.format == "json":
            write_json(args.out, meta, rows, {"families": len(rows)}, args.prec)
        else:
            write_csv(args.out, rows, args.prec)
        print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_coeffs(args) -> int:
    from .verify import verify_expansion

    cfg = make_config(args.prec, target_eps=1e-14)
    kwargs = {"psi_mod": args.twist_mod, "m": args.m, "K": args.K, "workers": args.workers}
    if args.primes_to:
        kwargs["primes_by_class"] = {
            1: tuple(prime_ladder(5, args.primes_to, 8, residue=1, modulus=3)),
            2: tuple(prime_ladder(5, args.primes_to, 8, residue=2, modulus=3)),
        }
    result = verify_expansion(cfg, **kwargs)
    print(f"expansion fit ({'PASS' if result.ok else 'FAIL'}):")
    for k, v in result.summary.items():
        if k.startswith(("coeff", "fit", "C_", "limit")):
            print(f"  {k}: {v}")
    if args.out:
        run = RunConfig(command="coeffs", dps=args.prec, theorem="thm1.1", out=args.out,
                        format=args.format, workers=args.workers)
        _emit(result, run)
    return 0 if result.ok else 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lerchzeta", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate one special value")
    pe.add_argument("kind", choices=["lerch", "lfun", "thurwitz", "tperiodic"])
    pe.add_argument("--alpha", default="0")
    pe.add_argument("--c", default="1")
    pe.add_argument("--s", required=True)
    pe.add_argument("--modulus", type=int, default=1)
    pe.add_argument("--char", default="trivial")
    pe.add_argument("--b", type=int, default=1)
    pe.add_argument("--ell", type=int, default=1)
    pe.add_argument("--prec", type=int, default=None)
    pe.add_argument("--route", choices=["series", "em", "comb", "taylor", "integral"], default=None)
    pe.set_defaults(func=cmd_eval)

    pv = sub.add_parser("verify", help="run one verification suite")
    pv.add_argument("theorem")
    pv.add_argument("--q", type=int, nargs="+", default=None)
    pv.add_argument("--m", type=int, nargs="+", default=None)
    pv.add_argument("--primes-to", type=int, default=None)
    pv.add_argument("--points", type=int, default=None)
    pv.add_argument("--out", default=None)
    pv.add_argument("--format", choices=["csv", "json"], default="json")
    pv.add_argument("--seed", type=int, default=20260810)
    pv.add_argument("--workers", type=int, default=1)
    pv.add_argument("--prec", type=int, default=None)
    pv.add_argument("--lenient", action="store_true", help="exit 0 on envelope-class failures")
    pv.set_defaults(func=cmd_verify)

    pc = sub.add_parser("count-nonvanishing", help="certified non-vanishing counts")
    pc.add_argument("--q", type=int, nargs="+", required=True)
    pc.add_argument("--m", type=int, default=3)
    pc.add_argument("--twist", nargs="*", default=None, help="e.g. quadratic:3 trivial")
    pc.add_argument("--out", default=None)
    pc.add_argument("--format", choices=["csv", "json"], default="json")
    pc.add_argument("--prec", type=int, default=25)
    pc.set_defaults(func=cmd_count_nonvanishing)

    pf = sub.add_parser("coeffs", help="fit the expansion coefficients of T(d)")
    pf.add_argument("--twist-mod", type=int, default=3)
    pf.add_argument("--m", type=int, default=3)
    pf.add_argument("--K", type=int, default=3)
    pf.add_argument("--primes-to", type=int, default=None)
    pf.add_argument("--out", default=None)
    pf.add_argument("--format", choices=["csv", "json"], default="json")
    pf.add_argument("--prec", type=int, default=20)
    pf.add_argument("--workers", type=int, default=1)
    pf.set_defaults(func=cmd_coeffs)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    if getattr(args, "prec", None) is None and args.command in ("eval", "verify"):
        args.prec = default_dps()
    try:
        return args.func(args)
    except ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except LerchPole as exc:
        print(f"pole: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
