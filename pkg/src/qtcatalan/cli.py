"""Command-line front end.

Exit codes: 0 on success, 1 when a verification or certificate fails,
2 on a usage error (including unsupported parameters).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import chainfw as cf
from . import garsia_haiman as gh
from . import mchains as mc
from . import ratslope as rs
from . import verify
from .dyck import format_word, genfun, iter_words_with_stats
from .errors import QtCatalanError
from .qtpoly import Poly, format_poly

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ helpers


def _emit(text: str, out) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _poly_csv(p: Poly) -> str:
    return _csv(([j, k, c] for (j, k), c in p.sorted_terms()), ["q", "t", "coeff"])


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


def _positive(args, *names):
    for n in names:
        v = getattr(args, n)
        if v is not None and v < 1:
            raise UsageError(f"--{n.replace('_', '-')} must be a positive integer")


def _no_format(args, allowed):
    if args.format not in allowed:
        raise UsageError(f"{args.command} does not support --format {args.format}")


def _word_label(g) -> str:
    return format_word(g, compact=True)


# ------------------------------------------------------------- chain reports


def _stat_text(s: cf.ChainSystem, w) -> str:
    a, d = s.bidegree(w)
    return f"(q^{a} t^{d})"


def chain_report_text(s: cf.ChainSystem, label, title: str) -> str:
    dec = cf.decompose_chains(s)
    order = sorted(range(len(dec.chains)), key=lambda i: (-len(dec.chains[i]), s.rank(dec.chains[i][0])))
    lines = [title, f"objects: {len(s)}", ""]
    k = 0
    zero = []
    for i in order:
        chain = dec.chains[i]
        if len(chain) == 1:
            zero.append(chain[0])
            continue
        k += 1
        lines.append(f"chain {k}: length {len(chain) - 1}")
        lines.extend(f"  {label(w)} {_stat_text(s, w)}" for w in chain)
    if zero:
        lines.append(f"length-zero chains ({len(zero)}):")
        lines.extend(f"  {label(w)} {_stat_text(s, w)}" for w in zero)
    lines.append("")
    lines.append("I: " + ", ".join(f"{label(w)} {_stat_text(s, w)}" for w in dec.initial))
    lines.append("T: " + ", ".join(f"{label(w)} {_stat_text(s, w)}" for w in dec.terminal))
    c_i, c_t, c_w = cf.endpoint_genfuns(s)
    lines.append(f"C_I(q,t) = {format_poly(c_i)}")
    lines.append(f"C_T(q,t) = {format_poly(c_t)}")
    ok = cf.verify_symmetry_via_chains(s)
    lines.append(f"C_T(q,t) = C_I(t,q): {'PASS' if ok else 'FAIL'}")
    return "\n".join(lines) + "\n"


def chain_report_json(s: cf.ChainSystem, label, meta: dict) -> dict:
    dec = cf.decompose_chains(s)
    c_i, c_t, c_w = cf.endpoint_genfuns(s)
    out = dict(meta)
    out.update({
        "objects": len(s),
        "lengths": sorted(dec.lengths(), reverse=True),
        **dec.to_json(label),
        "C_I": c_i.to_json(),
        "C_T": c_t.to_json(),
        "C_W": c_w.to_json(),
        "symmetric": cf.verify_symmetry_via_chains(s),
    })
    return out


def chain_report_csv(s: cf.ChainSystem, label) -> str:
    dec = cf.decompose_chains(s)
    rows = []
    for i, chain in enumerate(dec.chains, 1):
        for pos, w in enumerate(chain):
            rows.append([i, pos, label(w), *s.bidegree(w)])
    return _csv(rows, ["chain", "position", "word", "area", "dinv"])


def _render_chains(args, s, label, title, meta) -> int:
    if args.format == "text":
        text = chain_report_text(s, label, title)
    elif args.format == "json":
        text = _json(chain_report_json(s, label, meta))
    elif args.format == "csv":
        text = chain_report_csv(s, label)
    else:
        text = cf.to_dot(s, cf.canonical_h(s), label)
    _emit(text, args.out)
    if args.figure:
        from .plotting import plot_chains

        plot_chains(s, cf.decompose_chains(s), args.figure, title, label)
    return EXIT_OK if cf.verify_symmetry_via_chains(s) else EXIT_FAIL


# --------------------------------------------------------------- subcommands


def cmd_enumerate(args) -> int:
    _no_format(args, ("text", "csv", "json"))
    if args.rational:
        r, s = args.rational
        rows = [(list(p.row_cells), *rs.path_stats(p, r, s)) for p in rs.enumerate_paths(r, s)]
        header = ["row_cells", "area", "h_plus", "h_minus"]
        pairs = [(row[1], row[2]) for row in rows]
        ylabel = "h+"
    else:
        _require(args, "n", "m")
        rows = [(list(g), a, d) for g, a, d in iter_words_with_stats(args.n, args.m)]
        header = ["gamma", "area", "dinv"]
        pairs = [(row[1], row[2]) for row in rows]
        ylabel = "dinv"
    if args.format == "json":
        text = _json([dict(zip(header, row)) for row in rows])
    elif args.format == "csv":
        text = _csv(([",".join(map(str, row[0])), *row[1:]] for row in rows), header)
    else:
        text = "".join(
            f"{','.join(map(str, row[0]))}\t" + "\t".join(map(str, row[1:])) + "\n" for row in rows
        )
    _emit(text, args.out)
    if args.figure:
        from .plotting import plot_stats

        plot_stats(pairs, args.figure, ylabel=ylabel)
    return EXIT_OK


def _sigma_case(args) -> tuple[str, int]:
    if args.rational:
        r, s = args.rational
        if s == 4 and (r - 2) % 4 == 0 and r > 2:
            return "C_2m1_2_2", (r - 2) // 4
        if s == 4 and (r + 1) % 4 == 0:
            return "C_4m1_4_1", (r + 1) // 4
        raise UsageError("--kind sigma with --rational needs (4m+2, 4) or (4m-1, 4)")
    if args.n == 3:
        return "C3", args.m
    if args.n == 4:
        return "AC4", args.m
    raise UsageError("--kind sigma needs --n 3 or --n 4")


def cmd_genfun(args) -> int:
    _no_format(args, ("text", "csv", "json"))
    kind = args.kind or "comb"
    if args.rational:
        r, s = args.rational
        if kind == "gh":
            raise UsageError("--kind gh is only defined for --n/--m")
        if kind == "sigma":
            case, m = _sigma_case(args)
            p = gh.sigma_form(case, m)
        else:
            p = rs.rs_genfun(r, s)
        meta = {"r": r, "s": s, "kind": kind}
    else:
        _require(args, "n", "m")
        if kind == "gh":
            p = gh.ac_genfun(args.n, args.m)
        elif kind == "sigma":
            case, m = _sigma_case(args)
            p = gh.sigma_form(case, m)
        else:
            p = genfun(args.n, args.m)
        meta = {"n": args.n, "m": args.m, "kind": kind}
    if args.format == "json":
        text = _json({**meta, "poly": p.to_json(), "symmetric": p.is_symmetric(), "value_at_1": p.evaluate(1, 1)})
    elif args.format == "csv":
        text = _poly_csv(p)
    else:
        text = format_poly(p) + "\n"
    _emit(text, args.out)
    if args.figure:
        from .plotting import plot_genfun

        plot_genfun(p, args.figure)
    return EXIT_OK


def cmd_chains(args) -> int:
    _require(args, "n", "m")
    if not 2 <= args.n <= 5:
        raise UsageError(f"unsupported n: {args.n} (chain maps exist for 2 <= n <= 5)")
    s = mc.build_system(args.n, args.m)
    title = f"f-chains for n={args.n}, m={args.m}"
    return _render_chains(args, s, _word_label, title, {"n": args.n, "m": args.m})


def cmd_gh(args) -> int:
    _require(args, "n", "m")
    _no_format(args, ("text", "json"))
    ac = gh.ac_genfun(args.n, args.m)
    comb = genfun(args.n, args.m)
    ok = ac == comb
    if args.format == "json":
        text = _json({
            "n": args.n,
            "m": args.m,
            "summands": gh.summand_report(args.n, args.m),
            "AC": ac.to_json(),
            "C": comb.to_json(),
            "equal": ok,
        })
    else:
        lines = []
        for row in gh.summand_report(args.n, args.m):
            mu = "(" + ",".join(map(str, row["mu"])) + ")"
            parts = "  ".join(f"{k}={format_poly(Poly.from_json(row[k]))}" for k in ("T", "B", "Pi", "w"))
            lines.append(f"mu={mu}  {parts}")
        lines.append(f"AC(q,t) = {format_poly(ac)}")
        lines.append(f"AC = C: {'PASS' if ok else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    if args.figure:
        from .plotting import plot_genfun

        plot_genfun(ac, args.figure)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rational(args) -> int:
    if args.case:
        _require(args, "m")
        s = rs.build_rs_system(args.case, args.m)
        r, s_ = rs.case_dims(args.case, args.m)
        title = f"f-chains for the {r}x{s_} case {args.case}, m={args.m}"
        return _render_chains(args, s, _word_label, title, {"case": args.case, "m": args.m, "r": r, "s": s_})
    if not args.rational:
        raise UsageError("rational needs --rational R S or --case CASE --m M")
    _no_format(args, ("text", "csv", "json"))
    r, s = args.rational
    p = rs.rs_genfun(r, s)
    paths = rs.enumerate_paths(r, s)
    ok = p.is_symmetric()
    if args.format == "json":
        text = _json({"r": r, "s": s, "paths": len(paths), "poly": p.to_json(), "symmetric": ok})
    elif args.format == "csv":
        text = _poly_csv(p)
    else:
        text = (f"{r}x{s} Dyck paths: {len(paths)}\n"
                f"C(q,t) = {format_poly(p)}\n"
                f"C(q,t) = C(t,q): {'PASS' if ok else 'FAIL'}\n")
    _emit(text, args.out)
    if args.figure:
        from .plotting import plot_genfun

        plot_genfun(p, args.figure)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_gm(args) -> int:
    _require(args, "r")
    _no_format(args, ("text", "csv", "json"))
    con = rs.gm_construct(args.r)
    checks = rs.gm_check(con)
    ok = all(checks.values())
    if args.format == "csv":
        text = con.to_csv()
    elif args.format == "json":
        text = _json({
            "r": con.r,
            "k": con.k,
            "f": [{"c": c, "d": d, "a": a, "b": b} for (c, d), (a, b) in sorted(con.f.items())],
            "checks": checks,
            "poly": con.genfun().to_json(),
        })
    else:
        lines = [f"r={con.r} k={con.k} |X|={len(con.X)} |Y|={len(con.Y)}"]
        lines.extend(f"{name}: {'PASS' if v else 'FAIL'}" for name, v in checks.items())
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    if args.figure:
        from .plotting import plot_gm

        plot_gm(con, args.figure)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    _no_format(args, ("json", "text"))
    if args.suite not in verify.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(verify.SUITES)}")
    report = verify.run_suite(args.suite, args.m_max).to_json()
    if args.format == "text":
        lines = [f"{'PASS' if c['passed'] else 'FAIL'}{'' if c['fatal'] else ' (non-fatal)'}  {c['name']}"
                 + (f"  [{c['detail']}]" if c["detail"] else "") for c in report["checks"]]
        lines.append(f"suite {report['suite']}: {'PASS' if report['passed'] else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    else:
        text = _json(report)
    _emit(text, args.out)
    if args.figure:
        from . import plotting

        if args.suite == "involution":
            system, h = verify.worked_system_four_chains()
            plotting.plot_cycle_drawings(cf.cycle_drawings(system, h), args.figure)
        else:
            # one point per check: x = index, y = 1 for pass, 0 for fail
            plotting.plot_stats([(i, int(c["passed"])) for i, c in enumerate(report["checks"])], args.figure,
                                title=f"verify {args.suite}", xlabel="check", ylabel="passed")
    return EXIT_OK if report["passed"] else EXIT_FAIL


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qtcat", description="q,t-Catalan symmetry toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="text"):
        p.add_argument("--format", choices=["json", "csv", "text", "dot"], default=default_format)
        p.add_argument("--out", metavar="PATH")
        p.add_argument("--figure", metavar="PATH", help="also render a figure to PATH")

    def nm(p):
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int)

    p = sub.add_parser("enumerate", help="list words (or r x s paths) with their statistics")
    nm(p)
    p.add_argument("--rational", type=int, nargs=2, metavar=("R", "S"))
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("genfun", help="print a generating function")
    nm(p)
    p.add_argument("--rational", type=int, nargs=2, metavar=("R", "S"))
    p.add_argument("--kind", choices=["comb", "gh", "sigma"])
    common(p)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("chains", help="f-chain report for n in 2..5")
    nm(p)
    common(p)
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("gh", help="Garsia-Haiman formula, summand by summand")
    nm(p)
    common(p)
    p.set_defaults(func=cmd_gh)

    p = sub.add_parser("rational", help="rational-slope generating functions and chain reports")
    p.add_argument("--rational", type=int, nargs=2, metavar=("R", "S"))
    p.add_argument("--case", choices=list(rs.CASES))
    p.add_argument("--m", type=int)
    common(p)
    p.set_defaults(func=cmd_rational)

    p = sub.add_parser("gm", help="the r x 3 bijection")
    p.add_argument("--r", type=int)
    common(p)
    p.set_defaults(func=cmd_gm)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=", ".join(verify.SUITES))
    p.add_argument("--m-max", type=int)
    common(p, default_format="json")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        _positive(args, *(k for k in ("n", "m", "r", "m_max") if hasattr(args, k)))
        if getattr(args, "rational", None) and min(args.rational) < 1:
            raise UsageError("--rational needs positive R and S")
        return args.func(args)
    except (UsageError, QtCatalanError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
