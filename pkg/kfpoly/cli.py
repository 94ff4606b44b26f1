# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

"""
Command-line front end.

Exit status is 0 on success, 1 when a verify suite finds a failing
identity (or is interrupted), and 2 on usage errors.
"""

import argparse
import csv
import io
import sys

from ._version import __version__
from .config import (
    check_limit,
    get_limits,
    get_quiet,
    get_threads,
    set_limit,
    set_quiet,
    set_threads,
)
from .crystal import (
    CRYSTAL_TYPES,
    CrystalWord,
    check_length,
    conjugate_word,
    crystal_graph_dot,
    energy_H,
    highest_weight_words,
    is_highest_weight,
    one_dim_sum_X,
    oscillating_tableau,
    xi_class,
)
from .kostka import kostka_A, kostka_full, kostka_tilde
from .lrbranch import branch_alt_stabilized, branch_stable, lr_coeff
from .qmult import FAMILIES, K1, U, compute, u
from .utils import format_vector, iter_partitions, json_dump, parse_vector
from .verify import SUITE_ALIASES, list_suites, run_suites

TABLE_FAMILIES = ["kostka_A", "ktilde_B", "ktilde_C", "ktilde_D", "u", "U", "K1", "X"]
TABLE_FORMATS = ["json", "csv"]
CSV_HEADER = ["family", "lambda", "mu", "value"]


def _vector(text):
    try:
        return parse_vector(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _print_json(obj):
    json_dump(obj, sys.stdout)


def _print_value(args, value, **fields):
    if args.json:
        fields["value"] = value.to_json() if hasattr(value, "to_json") else value
        _print_json(fields)
    else:
        print(value)


def _check_rank(vector, n, name):
    if len(vector) != n:
        raise ValueError("%s must have exactly %d entries: %r" % (name, n, vector))


def cmd_kostka(args):
    lam, mu = args.lam, args.mu
    if args.type == "A":
        if args.tilde:
            raise ValueError("--tilde needs type B, C or D")
        value = kostka_A(lam, mu)
    elif args.tilde:
        value = kostka_tilde(args.type, lam, mu)
    else:
        value = kostka_full(args.type, lam, mu)
    _print_value(
        args,
        value,
        type=args.type,
        tilde=args.tilde,
        **{"lambda": list(lam), "mu": list(mu)}
    )
    return 0


def cmd_qmult(args):
    value = compute(args.family, args.lam, args.mu)
    _print_value(args, value, family=args.family, **{"lambda": list(args.lam), "mu": list(args.mu)})
    return 0


def cmd_lr(args):
    value = lr_coeff(args.nu, args.lam, args.gamma)
    _print_value(
        args,
        value,
        nu=list(args.nu),
        gamma=list(args.gamma),
        **{"lambda": list(args.lam)}
    )
    return 0


def cmd_branch(args):
    if args.method == "stable":
        value = branch_stable(args.type, args.lam, args.nu)
    else:
        value = branch_alt_stabilized(args.type, args.lam, args.nu)
    _print_value(
        args,
        value,
        type=args.type,
        method=args.method,
        nu=list(args.nu),
        **{"lambda": list(args.lam)}
    )
    return 0


def _describe_word(type, n, b):
    info = {
        "word": str(b),
        "weight": list(b.weight_C() if type == "C" else b.weight_A()),
        "energy": energy_H(b),
        "xi": list(xi_class(b)),
        "highest_weight": is_highest_weight(type, n, b),
    }
    if type == "C" and info["highest_weight"]:
        info["oscillating_tableau"] = [
            format_vector(q) for q in oscillating_tableau(b).diagrams
        ]
        info["conjugate"] = str(conjugate_word(b))
    return info


def cmd_crystal(args):
    n = args.n
    check_limit("max_crystal_rank", n)
    if args.length is not None:
        check_length(args.length)
    if args.dot:
        sys.stdout.write(crystal_graph_dot(args.type, n, args.length))
        return 0
    if args.word is not None:
        b = CrystalWord.from_string(args.word, n)
        info = _describe_word(args.type, n, b)
        if args.json:
            _print_json(info)
        else:
            for key in sorted(info):
                value = info[key]
                if isinstance(value, list):
                    value = " ".join(str(x) for x in value)
                print("%s: %s" % (key, value))
        return 0
    weight = args.lam
    if weight is not None:
        _check_rank(weight, n if args.type == "C" else 2 * n, "--lambda")
    words = highest_weight_words(args.type, n, weight=weight, length=args.length)
    if args.json:
        _print_json([_describe_word(args.type, n, b) for b in words])
    else:
        for b in words:
            weight_b = b.weight_C() if args.type == "C" else b.weight_A()
            print("%s\twt=%s\tH=%d" % (b, format_vector(weight_b), energy_H(b)))
    return 0


def cmd_x(args):
    _check_rank(args.lam, args.n, "--lambda")
    check_limit("max_crystal_rank", args.n)
    value = one_dim_sum_X(args.lam, args.n)
    _print_value(args, value, n=args.n, **{"lambda": list(args.lam)})
    return 0


def cmd_verify(args):
    names = args.suite or ["all"]
    reports = run_suites(names, n=args.n, max_size=args.max_size)
    if args.json:
        _print_json([report.to_json() for report in reports])
    else:
        for report in reports:
            print(report)
    if any(report.interrupted for report in reports):
        return 1
    return max(report.exit_status for report in reports)


def _table_rows(family, n, max_size):
    if max_size < 0:
        return []
    partitions = [lam for size in range(max_size + 1) for lam in iter_partitions(size, n)]
    if family == "X":
        ones = (1,) * n
        return [
            (lam, ones, one_dim_sum_X(lam, n)) for lam in partitions if sum(lam) <= n
        ]
    rows = []
    for lam in partitions:
        for mu in partitions:
            if family == "kostka_A":
                if sum(lam) != sum(mu):
                    continue
                value = kostka_A(lam, mu)
            elif family.startswith("ktilde_"):
                value = kostka_tilde(family[-1], lam, mu)
            else:
                value = {"u": u, "U": U, "K1": K1}[family](lam, mu)
            rows.append((lam, mu, value))
    return rows


def emit_table(family, n, max_size, format="json", fp=None):
    """
    Write every (lambda, mu) value of a family, for partitions of rank n
    and size at most max_size, sorted by (lambda, mu).

    Args:
        * family: (str) one of TABLE_FAMILIES
        * n: (int) rank
        * max_size: (int) size cap; a negative cap gives an empty table
        * format: (str) "json" or "csv"
        * fp: (file) destination, stdout if None
    """
    if family not in TABLE_FAMILIES:
        raise ValueError("unknown table family: %r" % (family,))
    if format not in TABLE_FORMATS:
        raise ValueError("unknown table format: %r" % (format,))
    if n < 1:
        raise ValueError("rank must be positive: %r" % (n,))
    check_limit("max_rank", n)
    check_limit("max_size", max_size)
    if family == "X":
        check_limit("max_crystal_rank", n)
    fp = sys.stdout if fp is None else fp
    rows = sorted(_table_rows(family, n, max_size), key=lambda row: (row[0], row[1]))
    if format == "csv":
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for lam, mu, value in rows:
            writer.writerow([family, format_vector(lam), format_vector(mu), str(value)])
    else:
        json_dump(
            {
                "family": family,
                "n": n,
                "max_size": max_size,
                "rows": [
                    {
                        "lambda": format_vector(lam),
                        "mu": format_vector(mu),
                        "value": value.to_json(),
                    }
                    for lam, mu, value in rows
                ],
            },
            fp,
        )


def cmd_table(args):
    if args.output is None:
        emit_table(args.family, args.n, args.max_size, args.format)
    else:
        buffer = io.StringIO()
        emit_table(args.family, args.n, args.max_size, args.format, buffer)
        with open(args.output, "w", encoding="utf-8", newline="") as fp:
            fp.write(buffer.getvalue())
    return 0


def make_parser():
    parser = argparse.ArgumentParser(
        prog="kfpoly",
        description="Kostka-Foulkes polynomials, q-multiplicities and one-dimension sums.",
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("--threads", type=int, default=None, help="verify worker threads")
    parser.add_argument("--quiet", action="store_true", help="no progress bars or status lines")
    parser.add_argument(
        "--max-q-degree", type=int, default=None, help="refuse partition functions of higher degree"
    )
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    sub = subparsers.add_parser("kostka", help="Kostka-Foulkes polynomial")
    sub.add_argument("--type", choices=["A", "B", "C", "D"], required=True)
    sub.add_argument("--tilde", action="store_true", help="restricted polynomial K~")
    sub.add_argument("--lambda", dest="lam", type=_vector, required=True)
    sub.add_argument("--mu", type=_vector, required=True)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(function=cmd_kostka)

    sub = subparsers.add_parser("qmult", help="q-multiplicities u, U and derived families")
    sub.add_argument("--family", choices=FAMILIES, required=True)
    sub.add_argument("--lambda", dest="lam", type=_vector, required=True)
    sub.add_argument("--mu", type=_vector, required=True)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(function=cmd_qmult)

    sub = subparsers.add_parser("lr", help="Littlewood-Richardson coefficient c^nu_{gamma,lambda}")
    sub.add_argument("--nu", type=_vector, required=True)
    sub.add_argument("--lambda", dest="lam", type=_vector, required=True)
    sub.add_argument("--gamma", type=_vector, required=True)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(function=cmd_lr)

    sub = subparsers.add_parser("branch", help="branching multiplicity [V^A(lambda) : V(nu)]")
    sub.add_argument("--type", choices=["B", "C", "D"], required=True)
    sub.add_argument("--lambda", dest="lam", type=_vector, required=True)
    sub.add_argument("--nu", type=_vector, required=True)
    sub.add_argument("--method", choices=["stable", "alt"], default="stable")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(function=cmd_branch)

    sub = subparsers.add_parser("crystal", help="words in the crystals of types A and C")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--type", choices=CRYSTAL_TYPES, default="C")
    sub.add_argument("--lambda", dest="lam", type=_vector, default=None, help="weight filter")
    sub.add_argument("--length", type=int, default=None, help="word length, default n")
    sub.add_argument("--list-hw", action="store_true", help="list highest weight words (default)")
    sub.add_argument("--dot", action="store_true", help="crystal graph in DOT format")
    sub.add_argument("--word", default=None, help='describe one word, e.g. "1 2 -2"')
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(function=cmd_crystal)

    sub = subparsers.add_parser("x", help="one-dimension sum X_{lambda,(1^n)}")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--lambda", dest="lam", type=_vector, required=True)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(function=cmd_x)

    sub = subparsers.add_parser("verify", help="run identity sweeps")
    sub.add_argument(
        "--suite", action="append", choices=list_suites() + sorted(SUITE_ALIASES) + ["all"], default=None
    )
    sub.add_argument("--n", type=int, default=None, help="largest rank swept")
    sub.add_argument("--max-size", type=int, default=None, help="largest partition size swept")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(function=cmd_verify)

    sub = subparsers.add_parser("table", help="write a table of values")
    sub.add_argument("--family", choices=TABLE_FAMILIES, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--max-size", type=int, required=True)
    sub.add_argument("--format", choices=TABLE_FORMATS, default="json")
    sub.add_argument("--output", default=None)
    sub.set_defaults(function=cmd_table)
    return parser


def run(argv=None):
    """
    Parse argv, run the subcommand and return the exit status.
    """
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    # flags override the configuration for this run only
    saved = (get_threads(), get_quiet(), get_limits())
    try:
        if args.threads is not None:
            set_threads(args.threads)
        if args.quiet:
            set_quiet(True)
        if args.max_q_degree is not None:
            set_limit("max_q_degree", args.max_q_degree)
        return args.function(args)
    except ValueError as exc:
        print("kfpoly: error: %s" % exc, file=sys.stderr)
        return 2
    finally:
        threads, quiet, limits = saved
        set_threads(threads)
        set_quiet(quiet)
        for name, value in limits.items():
            set_limit(name, value)


def main():
    sys.exit(run())
