"""Command-line entry point: ``forkalg <command> [n] [k] [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import factorial
from pathlib import Path
from typing import List, Optional, Sequence

from .algebra import (
    CapExceeded,
    build_algebra,
    export_json,
    format_basis_element,
    parse_basis_element,
    size_cap,
)
from .diagrams import common_etas
from .polyring import format_laurent
from .weights import block, encodings, format_perm

# Listing weights never builds the algebra, so it tolerates larger n.
ENUMERATE_CAP = 12

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(rows: List[dict], columns: Sequence[str], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(rows, sort_keys=True, indent=1) + "\n")
    elif fmt == "tsv":
        out.write("\t".join(columns) + "\n")
        for r in rows:
            out.write("\t".join(str(r[c]) for c in columns) + "\n")
    else:
        widths = {c: max([len(c)] + [len(str(r[c])) for r in rows]) for c in columns}
        out.write("  ".join(c.ljust(widths[c]) for c in columns).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(str(r[c]).ljust(widths[c]) for c in columns).rstrip() + "\n")


def _tuple(t) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _need(value: Optional[int], name: str) -> int:
    if value is None:
        raise UsageError(f"missing {name}")
    return value


def _cap(n: int, cap: Optional[int] = None) -> None:
    cap = size_cap() if cap is None else cap
    if n > cap:
        raise UsageError(f"n={n} exceeds the cap {cap}; set FORKALG_CAP to raise it")


def _check_nk(n: int, k: Optional[int]) -> None:
    if n < 0 or (k is not None and not 0 <= k <= n):
        raise UsageError(f"need 0 <= k <= n, got n={n}, k={k}")


# commands ----------------------------------------------------------------------------

def cmd_enumerate(args, out) -> int:
    n, k = _need(args.n, "n"), _need(args.k, "k")
    _check_nk(n, k)
    _cap(n, max(size_cap(), ENUMERATE_CAP))
    weights = block(n, k)
    perms = factorial(k)
    rows = []
    for w in weights:
        e = encodings(w)
        rows.append({
            "weight": str(w),
            "wedges": _tuple(e.wedge_pos),
            "vees": _tuple(e.vee_pos),
            "wedge_dist": _tuple(e.wedge_dist),
            "vee_dist": _tuple(e.vee_dist),
            "b_seq": _tuple(e.b_seq),
        })
    size = sum(perms * len(common_etas(lo, up)) for lo in weights for up in weights)
    if args.format == "json":
        out.write(json.dumps({"n": n, "k": k, "weights": rows, "basis_size": size}, sort_keys=True, indent=1) + "\n")
    else:
        _emit(rows, ["weight", "wedges", "vees", "wedge_dist", "vee_dist", "b_seq"], args.format, out)
        if args.format == "text":
            out.write(f"{len(weights)} weights; dim A_{n},{k} = {size}\n")
    return EXIT_OK


def cmd_mult(args, out) -> int:
    try:
        x, y = parse_basis_element(args.x), parse_basis_element(args.y)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"cannot parse basis element: {exc}") from exc
    n, k = x.lower.n, x.lower.k
    if (args.n is not None and args.n != n) or (args.k is not None and args.k != k):
        raise UsageError(f"elements live in A_{n},{k}, not A_{args.n},{args.k}")
    if (y.lower.n, y.lower.k) != (n, k):
        raise UsageError("the two elements lie in different algebras")
    _cap(n)
    alg = build_algebra(n, k)
    for d in (x, y):
        if d not in alg.index:
            raise UsageError(f"{format_basis_element(d)} is not a basis element of A_{n},{k}")
    note = None
    if x.upper != y.lower:
        note = f"upper weight {x.upper} of the left factor differs from lower weight {y.lower} of the right factor"
    result = alg.multiply_basis(alg.index[x], alg.index[y])
    terms = [(c, format_basis_element(alg.basis[i])) for i, c in sorted(result.items())]
    if args.format == "json":
        out.write(json.dumps({"terms": [[c, s] for c, s in terms], "note": note}, sort_keys=True) + "\n")
    elif args.format == "tsv":
        out.write("coefficient\telement\n")
        for c, s in terms:
            out.write(f"{c}\t{s}\n")
    else:
        if not terms:
            out.write("0" + (f"  ({note})" if note else "") + "\n")
        for c, s in terms:
            out.write(f"{c} * {s}\n")
            if args.render:
                out.write(alg.basis[alg.index[parse_basis_element(s)]].render() + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    from .verify import SUITES, run_suite

    suite = args.suite or "all"
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}")
    n = _need(args.n, "n")
    _check_nk(n, args.k)
    _cap(n)
    checks = run_suite(suite, n, args.k)
    rows = [
        {"suite": c.suite, "check": c.name, "status": "pass" if c.ok else "FAIL", "detail": c.detail}
        for c in checks
    ]
    _emit(rows, ["status", "suite", "check", "detail"], args.format, out)
    failed = sum(not c.ok for c in checks)
    if args.format == "text":
        out.write(f"{len(checks) - failed} passed, {failed} failed\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_export(args, out) -> int:
    n, k = _need(args.n, "n"), _need(args.k, "k")
    _check_nk(n, k)
    _cap(n)
    alg = build_algebra(n, k)
    alg.build_products(args.jobs)
    text = export_json(alg)
    if args.out in (None, "-"):
        out.write(text)
    else:
        Path(args.out).write_bytes(text.encode("utf-8"))
    return EXIT_OK


def _matrix(args, out, entry) -> int:
    n, k = _need(args.n, "n"), _need(args.k, "k")
    _check_nk(n, k)
    _cap(n)
    alg = build_algebra(n, k)
    ws = alg.weights
    fmt = "tsv" if args.format == "text" else args.format
    if fmt == "json":
        data = {str(l): {str(m): format_laurent(entry(alg, l, m)) for m in ws} for l in ws}
        out.write(json.dumps(data, sort_keys=True, indent=1) + "\n")
        return EXIT_OK
    out.write("\t".join([""] + [str(m) for m in ws]) + "\n")
    for l in ws:
        out.write("\t".join([str(l)] + [format_laurent(entry(alg, l, m)) for m in ws]) + "\n")
    return EXIT_OK


def cmd_cartan(args, out) -> int:
    cache = {}

    def entry(alg, l, m):
        if not cache:
            cache.update(alg.graded_cartan())
        return cache[(l, m)]

    return _matrix(args, out, entry)


def cmd_decomposition(args, out) -> int:
    from .repr import decomposition_matrix

    cache = {}

    def entry(alg, l, m):
        if "d" not in cache:
            cache["d"] = decomposition_matrix(alg)
        return cache["d"].entry(l, m)

    return _matrix(args, out, entry)


def cmd_kl(args, out) -> int:
    from .hecke import kl_table

    n = _need(args.n, "n")
    _check_nk(n, None)
    _cap(n)
    rows = [
        {"y": format_perm(y), "w": format_perm(w), "coefficient": format_laurent(c)}
        for y, w, c in kl_table(n)
    ]
    _emit(rows, ["w", "y", "coefficient"], "tsv" if args.format == "text" else args.format, out)
    return EXIT_OK


def cmd_center(args, out) -> int:
    from .functors import center_vs_presentation

    n = _need(args.n, "n")
    ks = [args.k] if args.k is not None else list(range(n))
    _check_nk(n, args.k)
    _cap(n)
    rows, failed = [], False
    for k in ks:
        if k >= n:
            raise UsageError("the centre comparison needs k < n")
        rep = center_vs_presentation(n, k)
        failed |= not rep.ok
        rows.append({
            "n": n, "k": k,
            "center": format_laurent(rep.tables["center"]),
            "bimodule_endomorphisms": format_laurent(rep.tables["bimodule_endomorphisms"]),
            "presentation": format_laurent(rep.tables["presentation"]),
            "status": "pass" if rep.ok else "FAIL",
        })
    _emit(rows, ["n", "k", "center", "bimodule_endomorphisms", "presentation", "status"], args.format, out)
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "enumerate": (cmd_enumerate, "list block weights, their encodings and dim A_{n,k}"),
    "mult": (cmd_mult, "multiply two basis elements"),
    "verify": (cmd_verify, "run verification suites"),
    "export": (cmd_export, "write the algebra as canonical JSON"),
    "cartan": (cmd_cartan, "graded Cartan matrix"),
    "decomposition": (cmd_decomposition, "graded decomposition matrix"),
    "kl": (cmd_kl, "Kazhdan-Lusztig coefficients of the canonical basis of H_n"),
    "center": (cmd_center, "centre of e^v A_k e^v against C[x]/I_k"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="forkalg", description="Fork-diagram algebras A_{n,k}: build, query and verify.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if name == "verify":
            p.add_argument("suite_pos", nargs="?", metavar="suite")
            p.add_argument("--suite", default=None)
        if name == "mult":
            p.add_argument("x", help='e.g. "(lower=^v^ eta=^v^ sigma=1,2 upper=^v^)"')
            p.add_argument("y")
            p.add_argument("--render", action="store_true", help="also draw each resulting diagram")
        else:
            p.add_argument("n_pos", nargs="?", type=int, metavar="n")
            p.add_argument("k_pos", nargs="?", type=int, metavar="k")
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--k", type=int, default=None)
        p.add_argument("--format", choices=["text", "tsv", "json"], default="text")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for product tables")
        p.add_argument("--out", default=None, help="output file (export only; default stdout)")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    for name in ("n", "k"):
        pos = getattr(args, f"{name}_pos", None)
        if pos is not None:
            if getattr(args, name) is not None and getattr(args, name) != pos:
                print(f"forkalg: error: conflicting values for {name}", file=sys.stderr)
                return EXIT_USAGE
            setattr(args, name, pos)
    if args.command == "verify" and args.suite_pos is not None:
        if args.suite is not None and args.suite != args.suite_pos:
            print("forkalg: error: conflicting suites", file=sys.stderr)
            return EXIT_USAGE
        args.suite = args.suite_pos
    if args.jobs < 1:
        print("forkalg: error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    handler = COMMANDS[args.command][0]
    try:
        return handler(args, out)
    except (UsageError, CapExceeded) as exc:
        print(f"forkalg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"forkalg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
