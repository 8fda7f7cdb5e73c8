"""Command-line front end.

Exit codes: 0 success, 1 a mismatch was found, 2 usage error.
Reports carry ``elapsed_ms = 0`` unless ``--timing`` is given, so that
identical arguments produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import __version__
from .charpoly import f_poly, f_sequence, g_sequence
from .hankel import HankelSpec, build_hankel, det_bareiss, determinant
from .moments import build_table, moments
from .oracle import MODELS, enum_paths, enum_pillars, lgv_expand
from .ring import as_poly, to_text
from .weights import DYCK, MOTZKIN, from_descriptor, symbolic
from .verify import (LIMITS, NAMED_IDS, VerificationReport, detect_recurrence, named_suite, run_named,
                     scaled_determinants, test_conjecture8, verify_cor2, verify_cor3, verify_cor3_closed,
                     verify_cor4, verify_cor6, verify_cor7, verify_limits, verify_thm1, verify_thm5)
from .verify.identities import _tail_params
from .verify.report import random_weights


class UsageError(Exception):
    pass


def _weights(text, default=None):
    if text is None:
        if default is None:
            raise UsageError("--weights is required")
        return default
    try:
        return from_descriptor(text)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad --weights: {exc}") from None


def _roots(text):
    if not text:
        return ()
    try:
        return tuple(as_poly(r.strip()) for r in text.split(","))
    except Exception as exc:  # parse errors of user input
        raise UsageError(f"bad --roots: {exc}") from None


def _bindings(text):
    out = {}
    if not text:
        return out
    for part in text.split(","):
        if "=" not in part:
            raise UsageError(f"bad --bind entry {part!r}; expected name=value")
        k, v = part.split("=", 1)
        try:
            out[k.strip()] = as_poly(v.strip())
        except Exception as exc:
            raise UsageError(f"bad --bind value {v!r}: {exc}") from None
    return out


def _emit_report(rep: VerificationReport, args, out) -> int:
    if not getattr(args, "timing", False):
        rep.elapsed_ms = 0
    out.write(rep.to_json(indent=2) + "\n")
    if rep.status == "mismatch":
        sys.stderr.write(json.dumps(rep.witnesses, sort_keys=True) + "\n")
        return 1
    return 0


# -- subcommands ----------------------------------------------------------------

def cmd_moments(args, out) -> int:
    ws = _weights(args.weights)
    seq = moments(ws, args.n)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        for i, v in enumerate(seq):
            w.writerow([i, to_text(v)])
        out.write(buf.getvalue())
    else:
        out.write(json.dumps({"weights": args.weights, "moments": [to_text(v) for v in seq]}, indent=2) + "\n")
    return 0


def cmd_det(args, out) -> int:
    ws = _weights(args.weights)
    roots = _roots(args.roots)
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    seq = moments(ws, 2 * args.n + args.shift + len(roots))
    m = build_hankel(seq, HankelSpec(args.shift, roots), args.n)
    out.write(to_text(determinant(m, args.method)) + "\n")
    return 0


def cmd_fpoly(args, out) -> int:
    ws = _weights(args.weights)
    seq = f_sequence(ws, args.n, args.var) if ws.mode == MOTZKIN else g_sequence(ws, args.n, args.var)
    name = "f" if ws.mode == MOTZKIN else "g"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "value"])
    for i, v in enumerate(seq):
        w.writerow([i, to_text(v)])
    out.write(f"# {name}_n({args.var})\n" if args.format == "csv" else "")
    if args.format == "csv":
        out.write(buf.getvalue())
    else:
        out.write(json.dumps({name: [to_text(v) for v in seq]}, indent=2) + "\n")
    return 0


def _identity_report(ident, args) -> VerificationReport:
    ns = range(args.nmin, args.nmax + 1)
    bind = _bindings(args.bind)
    seed = args.seed
    ident = ident.strip("()")
    if ident in ("thm1", "thm5"):
        ws = random_weights(seed) if seed is not None else _weights(args.weights, symbolic(MOTZKIN))
        fn = verify_thm1 if ident == "thm1" else verify_thm5
        rep = fn(ws, ns, bind or "symbolic")
    elif ident in ("cor2_even", "cor2_odd"):
        ws = random_weights(seed, DYCK) if seed is not None else _weights(args.weights, symbolic(DYCK))
        rep = verify_cor2(ws, ident.split("_")[1], ns, bind or "symbolic")
    elif ident in LIMITS:
        dflt = symbolic(MOTZKIN if ident in ("3.1", "3.2") else DYCK)
        ws = _weights(args.weights, dflt)
        rep = verify_limits(ws, ident, ns, bind.get("alpha", "alpha"))
    elif ident in ("cor3_num", "cor3_closed", "cor6", "conj8"):
        ws = _weights(args.weights, None) if args.weights else None
        params = _tail_params(ws) if ws is not None else ("s0", "s", "t0", "t")
        if ident == "cor3_num":
            rep = verify_cor3(params, ns, bindings=bind)
        elif ident == "cor3_closed":
            rep = verify_cor3_closed(params, range(max(0, args.nmin - 1), args.nmax + 1))
        elif ident == "cor6":
            rep = verify_cor6(params, ns, bindings=bind)
        else:
            roots = _roots(args.roots)
            if not roots:
                raise UsageError("conj8 needs --roots with distinct rational values")
            rep = test_conjecture8(len(roots), params, roots, ns)
    elif ident == "rec_order4":
        rep = verify_cor4()
    elif ident == "rec_order8":
        rep = verify_cor7()
    elif ident in NAMED_IDS:
        rep = run_named(ident, ns)
    else:
        raise UsageError(f"unknown identity {ident!r}")
    if seed is not None:
        rep.seed = seed
    return rep


def cmd_verify(args, out) -> int:
    try:
        rep = _identity_report(args.identity, args)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from None
    return _emit_report(rep, args, out)


SUITE_PROPERTIES = (
    ("thm1", lambda s: verify_thm1(symbolic(), range(1, 4))),
    ("thm1_random", lambda s: verify_thm1(random_weights(s), range(4, 6))),
    ("cor2_even", lambda s: verify_cor2(symbolic(DYCK), "even", range(1, 4))),
    ("cor2_odd", lambda s: verify_cor2(symbolic(DYCK), "odd", range(1, 4))),
    *((f"({w})", (lambda w: lambda s: verify_limits(symbolic(MOTZKIN if w in ("3.1", "3.2") else DYCK),
                                                    w, range(1, 4)))(w)) for w in LIMITS),
    ("cor3_closed", lambda s: verify_cor3_closed(("s0", "s", "t0", "t"), range(0, 7))),
    ("cor3_num", lambda s: verify_cor3(("s0", "s", "t0", "t"), range(1, 4))),
    ("thm5", lambda s: verify_thm5(symbolic(), range(1, 3))),
    ("cor6", lambda s: verify_cor6(("s0", "s", "t0", "t"), range(1, 3))),
    ("conj8", lambda s: test_conjecture8(4, (1, 1, 1, 1), (1, 2, 3, 5), range(1, 5))),
    ("rec_order4", lambda s: verify_cor4()),
    ("rec_order8", lambda s: verify_cor7()),
)


def cmd_suite(args, out) -> int:
    try:
        pattern = re.compile(args.filter) if args.filter else None
    except re.error as exc:
        raise UsageError(f"bad --filter: {exc}") from None
    seed = 0 if args.seed is None else args.seed
    reports = []
    for rep in named_suite(lambda i: pattern is None or pattern.search(f"({i})")):
        reports.append(rep)
    for name, fn in SUITE_PROPERTIES:
        if pattern is None or pattern.search(name):
            rep = fn(seed)
            rep.seed = seed if name == "thm1_random" else None
            reports.append(rep)
    worst = 0
    summary = []
    for rep in reports:
        if not args.timing:
            rep.elapsed_ms = 0
        summary.append(rep.to_dict())
        if rep.status == "mismatch":
            worst = 1
            sys.stderr.write(f"{rep.identity}: {json.dumps(rep.witnesses, sort_keys=True)}\n")
    if args.format == "json":
        out.write(json.dumps({"seed": seed, "reports": summary}, indent=2, sort_keys=True) + "\n")
    else:
        for rep in reports:
            line = f"{rep.identity:14s} {rep.status}"
            if rep.status == "mismatch" and rep.notes:
                line += "  # " + "; ".join(rep.notes)
            out.write(line + "\n")
        out.write(f"seed {seed}; {len(reports)} reports; "
                  f"{sum(r.status == 'mismatch' for r in reports)} mismatch\n")
    return worst


def cmd_recurrence(args, out) -> int:
    ws = _weights(args.weights)
    try:
        s0, s, t0, t = _tail_params(ws)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    roots = _roots(args.roots)
    if not roots:
        raise UsageError("--roots is required")
    try:
        fit = scaled_determinants(s0, s, t0, t, roots, range(1, args.terms + 1))
        rec = detect_recurrence(fit, args.max_order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = {"weights": args.weights, "roots": [to_text(r) for r in roots], "terms": args.terms,
              "recurrence": rec.to_dict() if rec else None}
    status = 0
    if rec is not None and args.held_out:
        held = range(args.terms + 1, args.terms + args.held_out + 1)
        actual = scaled_determinants(s0, s, t0, t, roots, held)
        predicted = rec.extend(fit, len(actual))
        result["held_out"] = [{"n": n, "actual": str(a), "predicted": str(p)}
                              for n, a, p in zip(held, actual, predicted)]
        if actual != predicted:
            status = 1
    out.write(json.dumps(result, indent=2) + "\n")
    return status


def cmd_oracle(args, out) -> int:
    ws = _weights(args.weights)
    rows = []
    ok = True
    if args.check == "paths":
        tbl = build_table(ws, args.n)
        for n in range(args.n + 1):
            for k in range(n + 1):
                a, b = enum_paths(ws, n, k), tbl.entry(n, k)
                ok &= a == b
                rows.append({"n": n, "k": k, "oracle": to_text(a), "table": to_text(b)})
    elif args.check == "pillars":
        if ws.mode != MOTZKIN:
            raise UsageError("pillars need Motzkin weights")
        for n in range(args.n + 1):
            a, b = enum_pillars(ws, n), f_poly(ws, n)
            ok &= a == b
            rows.append({"n": n, "oracle": to_text(a), "recurrence": to_text(b)})
    else:
        model = args.model
        try:
            for n in range(1, args.n + 1):
                a = lgv_expand(ws, n, model, allow_extended=args.extended)
                d = 3 if model == "thm5" else 2
                roots = ("alpha", "beta", "gamma")[:d]
                seq = moments(ws, 2 * n + d)
                b = det_bareiss(build_hankel(seq, HankelSpec(1 if model == "cor2_odd" else 0, roots), n))
                ok &= a == b
                rows.append({"n": n, "oracle": to_text(a), "determinant": to_text(b)})
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    out.write(json.dumps({"check": args.check, "ok": ok, "rows": rows}, indent=2) + "\n")
    return 0 if ok else 1


# -- parser ----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hankelmoments", description="Exact Hankel determinants of moment combinations.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    m = sub.add_parser("moments", help="moment sequence m_0..m_N (or c_0..c_N)")
    m.add_argument("--weights", required=True)
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--format", choices=("csv", "json"), default="csv")
    m.set_defaults(func=cmd_moments)

    d = sub.add_parser("det", help="Hankel determinant of a moment combination")
    d.add_argument("--weights", required=True)
    d.add_argument("--shift", type=int, default=0)
    d.add_argument("--roots", default="")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--method", choices=("bareiss", "cofactor"), default="bareiss")
    d.set_defaults(func=cmd_det)

    f = sub.add_parser("fpoly", help="f_0..f_N (Motzkin) or g_0..g_N (Dyck)")
    f.add_argument("--weights", required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--var", default="alpha")
    f.add_argument("--format", choices=("csv", "json"), default="csv")
    f.set_defaults(func=cmd_fpoly)

    v = sub.add_parser("verify", help="verify one identity, print a JSON report")
    v.add_argument("--identity", required=True)
    v.add_argument("--weights")
    v.add_argument("--nmin", type=int, default=1)
    v.add_argument("--nmax", type=int, required=True)
    v.add_argument("--bind", default="")
    v.add_argument("--roots", default="")
    v.add_argument("--seed", type=int)
    v.add_argument("--timing", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("suite", help="run the named suite and the property suites")
    s.add_argument("--filter")
    s.add_argument("--seed", type=int)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--timing", action="store_true")
    s.set_defaults(func=cmd_suite)

    r = sub.add_parser("recurrence", help="fit a recurrence to scaled determinants")
    r.add_argument("--weights", required=True)
    r.add_argument("--roots", required=True)
    r.add_argument("--terms", type=int, required=True)
    r.add_argument("--max-order", type=int, required=True)
    r.add_argument("--held-out", type=int, default=4)
    r.set_defaults(func=cmd_recurrence)

    o = sub.add_parser("oracle", help="compare brute-force oracles with the fast paths")
    o.add_argument("--check", choices=("paths", "pillars", "lgv"), required=True)
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--weights", required=True)
    o.add_argument("--model", choices=MODELS, default="thm1")
    o.add_argument("--extended", action="store_true")
    o.set_defaults(func=cmd_oracle)
    return p


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "n", 0) is not None and getattr(args, "n", 0) < 0:
            raise UsageError("--n must be non-negative")
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"hankelmoments: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
