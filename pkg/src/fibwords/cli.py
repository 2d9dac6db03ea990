"""Command-line entry point.

Exit codes: 0 success, 1 domain or validation error, 2 inconclusive Gray
search, 3 verify-suite failure. JSON integers are emitted as decimal strings.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import graycode, limits, recurrence, series, words
from .core import DomainError, ResourceError, parse_rational

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE, EXIT_VERIFY = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=True)


def _cap(args):
    return getattr(args, "max_n", None)


def cmd_count(args, out):
    c = words.census(args.q, args.n, cap=_cap(args))
    if args.format == "json":
        print(_dump(c.to_json()), file=out)
    else:
        for v in c.by_length:
            print(v, file=out)
    return EXIT_OK


def cmd_enumerate(args, out):
    ws = words.enumerate_words(args.q, args.n, cap=_cap(args))
    if args.format == "json":
        print(_dump(ws), file=out)
    else:
        for w in ws:
            print(w, file=out)
    return EXIT_OK


def cmd_member(args, out):
    ok = words.is_member(words.check_word(args.word), args.q)
    print(_dump(ok) if args.format == "json" else str(ok).lower(), file=out)
    return EXIT_OK


def cmd_decompose(args, out):
    f = words.factorize(words.check_word(args.word), args.q)
    if args.format == "json":
        print(_dump({"q": str(args.q), "word": args.word, "leading_ones": f.leading_ones,
                     "factors": list(f.factors), "pieces": f.pieces()}), file=out)
    else:
        print(" ".join(f.pieces()), file=out)
    return EXIT_OK


def cmd_suffixes(args, out):
    ws = words.suffix_elements(args.q, args.max_len)
    if args.format == "json":
        print(_dump(ws), file=out)
    else:
        for w in ws:
            print(w, file=out)
    return EXIT_OK


def cmd_recurrence(args, out):
    spec = recurrence.derive(args.q)
    if args.format == "json":
        print(_dump({"q": str(args.q), "lags": list(spec.lags), "extra_lag": spec.extra_lag,
                     "relation": spec.relation(), "initial": [str(v) for v in spec.initial]}), file=out)
    else:
        print(spec.relation(), file=out)
        print("initial: " + ", ".join(str(v) for v in spec.initial), file=out)
    return EXIT_OK


def cmd_sequence(args, out):
    if args.terms < 1:
        raise DomainError("--terms must be at least 1")
    seq = recurrence.generate(recurrence.derive(args.q), args.terms - 1)
    if args.format == "lines":
        print(",".join(str(v) for v in seq), file=out)
    else:
        print(_dump([str(v) for v in seq]), file=out)
    return EXIT_OK


def cmd_series(args, out):
    if args.kind == "suffix":
        s = series.suffix_series(args.q, args.order)
    elif args.kind == "word":
        s = series.word_series(args.q, args.order)
    else:
        s = series.length_series(args.q, args.order)
    if args.format == "lines":
        if args.kind == "length":
            for v in s.coeffs:
                print(v, file=out)
        else:
            for (r, i), v in s.items():
                print(f"{r} {i} {v}", file=out)
    else:
        print(_dump(s.to_json()), file=out)
    return EXIT_OK


def cmd_popularity(args, out):
    s = series.zero_popularity_series(args.q, args.order)
    if args.format == "lines":
        for v in s.coeffs:
            print(v, file=out)
    else:
        print(_dump(s.to_json()), file=out)
    return EXIT_OK


def cmd_gray(args, out):
    if args.validate is not None:
        ws = [w for w in args.validate.split(",")] if args.validate else []
        for w in ws:
            words.check_word(w)
        ok = graycode.check_gray(ws, args.k)
        odd = sum(w.count("1") % 2 for w in ws)
        print(_dump({"status": "valid" if ok else "invalid", "path": ws, "odd": odd,
                     "even": len(ws) - odd, "nodes": 0}), file=out)
        return EXIT_OK if ok else EXIT_ERROR
    if args.n is None:
        raise DomainError("gray needs --n (or --validate)")
    res = graycode.search_1gray(args.q, args.n, budget=args.budget, cap=_cap(args))
    payload = res.to_json()
    if args.format == "lines":
        print(f"status: {res.status}", file=out)
        if res.certificate:
            print(f"certificate: {res.certificate}", file=out)
        for w in res.path:
            print(w, file=out)
    else:
        print(_dump(payload), file=out)
    return {"found": EXIT_OK, "impossible": EXIT_ERROR}.get(res.status, EXIT_INCONCLUSIVE)


def cmd_ratio(args, out):
    est = limits.growth_rate(args.q, args.tol)
    if args.format == "lines":
        print(est.ratio, file=out)
    else:
        print(_dump(est.to_json()), file=out)
    return EXIT_OK


def cmd_sweep(args, out):
    grid = limits.default_grid(args.denominator, args.count)
    out.write(limits.sweep_csv(limits.ratio_sweep(grid, args.tol)))
    return EXIT_OK


def cmd_verify(args, out):
    from .verify import run_all

    failed = 0
    for res in run_all():
        failed += not res.ok
        print(res.line(), file=out)
    print(f"{'FAILED' if failed else 'OK'}: {failed} failing check(s)", file=out)
    return EXIT_VERIFY if failed else EXIT_OK


def _q(text):
    try:
        return parse_rational(text)
    except DomainError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fibwords", description="Restricted binary words W_{q,n} and their counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, fmt="json", q=True):
        p = sub.add_parser(name, help=help_)
        if q:
            p.add_argument("--q", type=_q, required=True, help="positive rational, e.g. 3/2, 4 or 0.02")
        p.add_argument("--format", choices=["lines", "json", "csv"], default=fmt)
        p.set_defaults(func=func)
        return p

    def add_cap(p):
        p.add_argument("--max-n", type=int, default=None,
                       help=f"override the brute-force cap (default {words.DEFAULT_MAX_N}, env {words.MAX_N_ENV})")

    p = add("count", cmd_count, "brute-force census for lengths 0..n")
    p.add_argument("--n", type=int, required=True)
    add_cap(p)
    p = add("enumerate", cmd_enumerate, "list W_{q,n} in lexicographic order", fmt="lines")
    p.add_argument("--n", type=int, required=True)
    add_cap(p)
    p = add("member", cmd_member, "test membership of a word", fmt="lines")
    p.add_argument("--word", required=True)
    p = add("decompose", cmd_decompose, "factor a word into a 1-run and suffix words", fmt="lines")
    p.add_argument("--word", required=True)
    p = add("suffixes", cmd_suffixes, "suffix words up to a length", fmt="lines")
    p.add_argument("--max-len", type=int, required=True)
    add("recurrence", cmd_recurrence, "print the 0-1 recurrence and initial values", fmt="lines")
    p = add("sequence", cmd_sequence, "w_0.. from the recurrence")
    p.add_argument("--terms", type=int, default=12)
    p = add("series", cmd_series, "truncated generating-function coefficients")
    p.add_argument("--kind", choices=["suffix", "word", "length"], default="length")
    p.add_argument("--order", type=int, default=series.DEFAULT_ORDER)
    p = add("popularity", cmd_popularity, "total number of zeros per length")
    p.add_argument("--order", type=int, default=series.DEFAULT_ORDER)
    p = add("gray", cmd_gray, "search for or validate a Gray code")
    p.add_argument("--n", type=int)
    p.add_argument("--budget", type=int, default=graycode.DEFAULT_BUDGET)
    p.add_argument("--validate", help="comma-separated word list to check instead of searching")
    p.add_argument("--k", type=int, default=1, help="allowed Hamming distance when validating")
    add_cap(p)
    p = add("ratio", cmd_ratio, "limit of w_(n+1)/w_n")
    p.add_argument("--tol", type=float, default=limits.DEFAULT_TOL)
    p = add("sweep", cmd_sweep, "growth ratios over k/D, k=1..count, as CSV", fmt="csv", q=False)
    p.add_argument("--denominator", type=int, default=50)
    p.add_argument("--count", type=int, default=101)
    p.add_argument("--tol", type=float, default=limits.DEFAULT_TOL)
    add("verify", cmd_verify, "run the cross-module oracle suite", fmt="lines", q=False)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse uses 2 for usage errors; report them as validation errors
        return EXIT_OK if e.code == 0 else EXIT_ERROR
    try:
        return args.func(args, out)
    except (DomainError, ResourceError) as e:
        print(f"error: {e}", file=err)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
