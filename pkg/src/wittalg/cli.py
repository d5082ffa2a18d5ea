"""Command-line front end.

    wittalg verify all --format json --out report.json
    wittalg kernel --map lambda --a generic --degree 6
    wittalg eval --map phi --expr "e1*e3 - e2^2 - e4"
    wittalg adpow --x e-1 --k 3 --y "e1*e3 - e2^2 - e4"

Exit status is 0 on success, 1 when a verified claim fails and 2 for usage
or internal errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .envelope import WITT, WPLUS, ad_power, parse_env
from .parsing import ParseError
from .scalars import DomainError, format_rational, parse_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _param(text: str):
    if text == "generic":
        return text
    try:
        return parse_rational(text)
    except (DomainError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"--a expects 'generic' or p/q, got {text!r} ({exc})")


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _mode(text: str) -> str:
    t = text.lower()
    if t in ("wplus", "w+", "plus"):
        return WPLUS
    if t == "witt":
        return WITT
    raise argparse.ArgumentTypeError("mode is 'wplus' or 'witt'")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wittalg", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def output_opts(sp):
        sp.add_argument("--format", choices=("json", "table"), default="table")
        sp.add_argument("--out", metavar="PATH", help="write the output here instead of stdout")

    v = sub.add_parser("verify", help="re-check registered claims")
    v.add_argument("ids", nargs="*", default=["all"], help="claim ids, or 'all'")
    v.add_argument("--max-degree", type=_positive, default=10)
    v.add_argument("--hilbert-degree", type=_positive, default=20)
    v.add_argument("--intersect-degree", type=_positive, default=12)
    v.add_argument("--exclude-witt", action="store_true")
    v.add_argument("--seed", type=int, default=20240601)
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--list", action="store_true", help="list claim ids and exit")
    output_opts(v)

    k = sub.add_parser("kernel", help="kernel of lambda_a or phi in one degree")
    k.add_argument("--map", choices=("lambda", "phi"), required=True)
    k.add_argument("--a", type=_param, default="generic")
    k.add_argument("--degree", type=_positive, required=True)
    output_opts(k)

    h = sub.add_parser("hilbert", help="measured Hilbert series of a family")
    h.add_argument("--family", required=True)
    h.add_argument("--degree", type=_positive, default=10)
    h.add_argument("--a", type=_param, default="generic")
    output_opts(h)

    e = sub.add_parser("eval", help="image of an element of U(W+)")
    e.add_argument("--map", choices=("lambda", "phi"), required=True)
    e.add_argument("--a", type=_param, default="generic")
    e.add_argument("--expr", required=True)

    s = sub.add_parser("straighten", help="normal form in the PBW basis")
    s.add_argument("--mode", type=_mode, default=WPLUS)
    s.add_argument("--expr", required=True)

    a = sub.add_parser("adpow", help="ad(x)^k (y)")
    a.add_argument("--mode", type=_mode, default=WITT)
    a.add_argument("--x", required=True)
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--y", required=True)

    n = sub.add_parser("nonfg", help="witnesses that I is not finitely generated")
    n.add_argument("--max-degree", type=_positive, default=10)
    output_opts(n)

    g = sub.add_parser("geom", help="pullback squares and curve checks")
    output_opts(g)
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _morphism(args):
    from .morphlab import GENERIC, LAMBDA, PHI, EnvMorphism
    if args.map == "phi":
        return EnvMorphism(PHI)
    return EnvMorphism(LAMBDA, GENERIC if args.a == "generic" else args.a)


def _field_for(args):
    from .scalars import RATIONALS, ratfunc_field
    if args.map == "lambda" and args.a == "generic":
        return ratfunc_field("a")
    return RATIONALS


def cmd_verify(args) -> int:
    from .veritas import Config, UnknownClaim, claim_ids, run_all
    if args.list:
        _emit("\n".join(claim_ids()), args.out)
        return EXIT_OK
    ids = () if args.ids in ([], ["all"]) else tuple(args.ids)
    if "all" in ids:
        raise UsageError("'all' cannot be combined with claim ids")
    cfg = Config(max_degree=args.max_degree, hilbert_degree=args.hilbert_degree,
                 intersect_degree=args.intersect_degree, exclude_witt=args.exclude_witt,
                 seed=args.seed, jobs=args.jobs, claims=ids)
    try:
        report = run_all(cfg)
    except UnknownClaim as exc:
        raise UsageError(f"unknown claim id {exc.args[0]!r}")
    _emit(report.to_json() if args.format == "json" else report.to_table(), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_kernel(args) -> int:
    from .morphlab import kernel_at_degree
    rep = kernel_at_degree(_morphism(args), args.degree)
    if args.format == "json":
        data = {"map": args.map, "a": args.a if args.a == "generic" else format_rational(args.a),
                "degree": rep.degree, "dimension": rep.dimension,
                "basis": [str(b) for b in rep.basis], "excluded": list(rep.excluded)}
        _emit(json.dumps(data, indent=2), args.out)
    else:
        lines = [f"degree {rep.degree}: dimension {rep.dimension}"]
        lines += [f"  {b}" for b in rep.basis]
        if rep.excluded:
            lines.append("valid away from: " + ", ".join(f"{f} = 0" for f in rep.excluded))
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    from .hilbert import FAMILIES, GENERIC, closed_form, compare, measure
    if args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}")
    a = GENERIC if args.a == "generic" else args.a
    m = measure(args.family, args.degree, a)
    try:
        verdict = compare(m, closed_form(args.family))
    except KeyError:
        verdict = None
    if args.format == "json":
        data = {"family": args.family, "start": m.start, "coefficients": list(m.coefficients)}
        if verdict is not None:
            data["closed_form"] = str(closed_form(args.family))
            data["match"] = verdict.match
            data["first_mismatch"] = verdict.first_mismatch
        _emit(json.dumps(data, indent=2), args.out)
    else:
        lines = [str(m)]
        if verdict is not None:
            status = "matches" if verdict.match else f"differs at degree {verdict.first_mismatch} from"
            lines.append(f"{status} {closed_form(args.family)}")
        _emit("\n".join(lines), args.out)
    return EXIT_OK if verdict is None or verdict.match else EXIT_FAIL


def cmd_eval(args) -> int:
    m = _morphism(args)
    f = parse_env(args.expr, WPLUS, _field_for(args))
    print(m(f))
    return EXIT_OK


def cmd_straighten(args) -> int:
    from .scalars import RATIONALS
    print(parse_env(args.expr, args.mode, RATIONALS))
    return EXIT_OK


def cmd_adpow(args) -> int:
    if args.k < 0:
        raise UsageError("--k must be non-negative")
    x = parse_env(args.x, args.mode)
    y = parse_env(args.y, args.mode)
    print(ad_power(x, args.k, y))
    return EXIT_OK


def cmd_nonfg(args) -> int:
    from .veritas import Config, run_claim
    res = run_claim("nonfg-witnesses", Config(max_degree=args.max_degree))
    if args.format == "json":
        _emit(json.dumps({"status": res.status, "computed": res.computed}, indent=2), args.out)
    else:
        lines = []
        comp = res.computed or {}
        for key, vals in comp.items():
            if isinstance(vals, list):
                lines.append(f"{key}: " + " ".join("yes" if x else "no" for x in vals))
            else:
                lines.append(f"{key}: {'yes' if vals else 'no'}")
        lines.append(f"n = 4..{args.max_degree}: {res.status}")
        _emit("\n".join(lines), args.out)
    return EXIT_OK if res.status == "pass" else EXIT_FAIL


def cmd_geom(args) -> int:
    from .veritas import Config, run_claim
    ids = ["geom-psi-square", "geom-ia-square", "geom-Ca", "geom-f"]
    results = [run_claim(c, Config()) for c in ids]
    if args.format == "json":
        _emit(json.dumps({r.id: {"status": r.status, "computed": r.computed} for r in results},
                         indent=2), args.out)
    else:
        lines = []
        for r in results:
            lines.append(f"{r.id}: {r.status}")
            for key, val in (r.computed or {}).items():
                lines.append(f"  {key}: {val}")
        _emit("\n".join(lines), args.out)
    return EXIT_OK if all(r.status == "pass" for r in results) else EXIT_FAIL


COMMANDS = {"verify": cmd_verify, "kernel": cmd_kernel, "hilbert": cmd_hilbert,
            "eval": cmd_eval, "straighten": cmd_straighten, "adpow": cmd_adpow,
            "nonfg": cmd_nonfg, "geom": cmd_geom}


def parse_args(argv=None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)   # argparse exits with status 2 on usage errors
    try:
        return COMMANDS[args.verb](args)
    except (UsageError, ParseError, DomainError) as exc:
        print(f"wittalg {args.verb}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # internal error
        print(f"wittalg {args.verb}: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
