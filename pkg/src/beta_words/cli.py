"""Command-line front end: parse a beta specification, run one computation,
emit plain/CSV/JSON tables, and drive the verification harness.

Exit codes: 0 success, 2 input error, 3 verification mismatch, 4 integer
beta where the run-length theory needs beta irrational.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .corpus import default_corpus, load_corpus
from .errors import BetaWordsError, IntegerBeta, VerificationError
from .expansion import (
    BetaInterval,
    ExpansionOfOne,
    expansion_digits_from_beta,
    max_zero_run,
    modified_expansion,
    nonzero_sequence,
    solve_beta,
)
from .runs import maximal_runs, run_sets_formula, tau_table
from .structure import (
    DEFAULT_TOL,
    UNDECIDED,
    cylinder,
    decompose,
    is_full_by_length,
    smallest_tail_length,
)
from .verify import render_report, run_sets_check, verify_report
from .words import Word, count, iter_words, scan_states

OK = 0
INPUT_ERROR = 2
MISMATCH = 3
PRECONDITION = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beta-words",
        description="Full and non-full words of beta-expansions: expansions, "
                    "admissible words, fullness criteria, run-length sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, beta_ok=False, n_default=None, shards=False, check=False, corpus=False):
        if corpus:
            p.add_argument("--corpus", metavar="FILE",
                           help="file with one digit-sequence spec per line (# comments)")
        else:
            p.add_argument("--seq", metavar="DIGITS",
                           help="expansion of 1 as 'a,b,c' (finite) or 'a,b;c,d' (preperiod;period)")
        if beta_ok:
            p.add_argument("--beta", metavar="DECIMAL", help="beta as a decimal string")
        p.add_argument("--tol", default=str(DEFAULT_TOL), metavar="T",
                       help="tolerance for numeric work (default 1e-12)")
        if n_default != "range-only":
            p.add_argument("--n", type=int, metavar="N", default=n_default, help="word length")
        if n_default == "range-only" or check:
            p.add_argument("--n-range", dest="n_range", metavar="A..B",
                           help="inclusive range of word lengths")
        if shards:
            p.add_argument("--shards", type=int, default=1, metavar="K",
                           help="number of enumeration shards (default 1)")
        if check:
            p.add_argument("--check", action="store_true",
                           help="cross-check all fullness criteria and fail on disagreement")
        p.add_argument("--format", choices=("plain", "csv", "json"), default="plain",
                       help="output format (default plain)")

    p = sub.add_parser("expand", help="digits of eps(1,beta) and eps*(1,beta)")
    add_common(p, beta_ok=True, n_default=16)

    p = sub.add_parser("validate", help="check that a spec is a valid expansion of 1")
    add_common(p, beta_ok=True, n_default=16)

    p = sub.add_parser("enumerate", help="admissible words of length n in lex order")
    add_common(p)

    p = sub.add_parser("classify", help="fullness of every admissible word of length n")
    add_common(p, check=True)

    p = sub.add_parser("runs", help="maximal runs and run-length sets at length n")
    add_common(p, shards=True)

    p = sub.add_parser("tau", help="greedy step counts tau(s) for s = 1..n")
    add_common(p)

    p = sub.add_parser("verify", help="formula-vs-enumeration report over a corpus")
    add_common(p, n_default="range-only", shards=True, corpus=True)
    return parser


def _parse_tol(args) -> Fraction:
    try:
        tol = Fraction(args.tol)
    except (ValueError, ZeroDivisionError):
        raise BetaWordsError(f"cannot parse tolerance {args.tol!r}")
    if tol <= 0:
        raise BetaWordsError("tolerance must be positive")
    return tol


def _parse_n(args) -> int:
    n = args.n
    if n is None:
        raise BetaWordsError("--n is required")
    if n < 1:
        raise BetaWordsError("word length n must be >= 1")
    return n


def _parse_n_range(text: str) -> range:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise BetaWordsError(f"cannot parse n-range {text!r}; expected A..B")
    if lo < 1 or hi < lo:
        raise BetaWordsError(f"invalid n-range {text!r}")
    return range(lo, hi + 1)


def _expansion(args) -> ExpansionOfOne:
    if getattr(args, "beta", None) is not None:
        raise BetaWordsError("--beta is only supported by expand and validate; "
                             "use --seq with exact digits")
    if args.seq is None:
        raise BetaWordsError("--seq is required")
    return ExpansionOfOne.parse(args.seq)


def _decimal(value: Fraction, places: int) -> str:
    scaled = round(value * 10**places)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return f"{sign}{scaled // 10**places}.{scaled % 10**places:0{places}d}"


def _places(tol: Fraction) -> int:
    places = 1
    while Fraction(1, 10**places) > tol and places < 30:
        places += 1
    return min(30, places + 2)


def _interval(lo: Fraction, hi: Fraction, places: int) -> str:
    return f"[{_decimal(lo, places)},{_decimal(hi, places)}]"


def _emit_rows(fmt: str, header: list[str], rows, out) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    elif fmt == "json":
        payload = [dict(zip(header, row)) for row in rows]
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        rows = [[str(c) for c in row] for row in rows]
        widths = [len(h) for h in header]
        for row in rows:
            widths = [max(w, len(c)) for w, c in zip(widths, row)]
        out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for row in rows:
            out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _digit_text(digits) -> str:
    if all(d <= 9 for d in digits):
        return "".join(str(d) for d in digits)
    return ",".join(str(d) for d in digits)


def cmd_expand(args, out) -> int:
    n = _parse_n(args)
    tol = _parse_tol(args)
    if args.beta is not None and args.seq is not None:
        raise BetaWordsError("give exactly one of --seq and --beta")
    if args.beta is not None:
        beta = BetaInterval.from_decimal(args.beta, tol)
        digits = tuple(expansion_digits_from_beta(beta, n))
        rows = [
            ("eps", _digit_text(digits)),
            ("nonzero", ",".join(str(i) for i, d in enumerate(digits, start=1) if d)),
        ]
    else:
        e = _expansion(args)
        star = modified_expansion(e)
        star_text = "(" + _digit_text(star.period) + ")*"
        if star.preperiod:
            star_text = _digit_text(star.preperiod) + ";" + star_text
        rows = [
            ("eps", _digit_text(e.digits_prefix(n))),
            ("eps_star", _digit_text(star.digits_prefix(n))),
            ("eps_star_rep", star_text),
            ("nonzero", ",".join(str(i) for i in nonzero_sequence(e, n))),
            (f"r_{n}", str(max_zero_run(e, n))),
        ]
    _emit_rows(args.format, ["field", "value"], rows, out)
    return OK


def cmd_validate(args, out) -> int:
    n = _parse_n(args)
    tol = _parse_tol(args)
    if args.beta is not None and args.seq is not None:
        raise BetaWordsError("give exactly one of --seq and --beta")
    if args.beta is not None:
        beta = BetaInterval.from_decimal(args.beta, tol)
        expansion_digits_from_beta(beta, n)
        out.write(f"ok beta in [{beta.lo}, {beta.hi}]\n")
        return OK
    e = _expansion(args)
    beta = solve_beta(e, tol)
    places = _places(tol)
    out.write(f"ok {e.text()} beta={_interval(beta.lo, beta.hi, places)}\n")
    return OK


def cmd_enumerate(args, out) -> int:
    e = _expansion(args)
    n = _parse_n(args)
    rows = [
        (i, w.text(), int(scan_states(w.digits, e)[-1] == 1))
        for i, w in enumerate(iter_words(e, n))
    ]
    _emit_rows(args.format, ["index", "word", "full"], rows, out)
    return OK


def cmd_classify(args, out, err) -> int:
    e = _expansion(args)
    tol = _parse_tol(args)
    if args.n_range is not None:
        n_values = _parse_n_range(args.n_range)
    else:
        n_values = [_parse_n(args)]
    places = _places(tol)
    disagreements = 0
    rows = []
    for n in n_values:
        for w in iter_words(e, n):
            full = scan_states(w.digits, e)[-1] == 1
            if not args.check:
                rows.append((w.text(), int(full)))
                continue
            tail_s = smallest_tail_length(w, e)
            dec = decompose(w, e)
            cyl = cylinder(w, e, tol)
            by_tail = tail_s is None
            by_length = is_full_by_length(w, e, tol)
            if by_tail != full:
                disagreements += 1
                err.write(f"{w.text()}: structural says {full}, tail criterion says {by_tail}\n")
            if by_length is UNDECIDED:
                disagreements += 1
                err.write(f"{w.text()}: length criterion undecided at tol {tol}\n")
            elif by_length != full:
                disagreements += 1
                err.write(f"{w.text()}: structural says {full}, length criterion says {by_length}\n")
            rows.append((
                w.text(),
                int(full),
                "" if tail_s is None else tail_s,
                len(dec.blocks),
                dec.tail[0],
                _interval(*cyl.left, places),
                _interval(*cyl.right, places),
            ))
    if args.check:
        header = ["word", "full", "tail_s", "block_count", "tail_l", "cyl_left", "cyl_right"]
    else:
        header = ["word", "full"]
    _emit_rows(args.format, header, rows, out)
    if disagreements:
        err.write(f"{disagreements} criterion disagreements\n")
        return MISMATCH
    return OK


def cmd_runs(args, out, err) -> int:
    e = _expansion(args)
    n = _parse_n(args)
    formula = run_sets_formula(e, n)
    row, failures = run_sets_check(e, n, shards=max(1, args.shards))
    records = maximal_runs(e, n)
    rows = [
        (r.kind, r.start_index, r.length, r.first_word.text(), r.last_word.text())
        for r in records
    ]
    summary = {
        "F_formula": sorted(formula.full),
        "F_enum": row["F_enum"],
        "N_formula": sorted(formula.nonfull),
        "N_enum": row["N_enum"],
        "match": row["match"] and not failures,
    }
    if args.format == "json":
        payload = {
            "records": [dict(zip(["kind", "start_index", "length", "first_word", "last_word"], r))
                        for r in rows],
            **summary,
        }
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        _emit_rows(args.format, ["kind", "start_index", "length", "first_word", "last_word"], rows, out)
        if args.format == "plain":
            for key in ("F_formula", "F_enum", "N_formula", "N_enum"):
                out.write(f"{key} {{{','.join(str(v) for v in summary[key])}}}\n")
            out.write(f"match {str(summary['match']).lower()}\n")
    for message in failures:
        err.write(message + "\n")
    return OK if summary["match"] else MISMATCH


def cmd_tau(args, out) -> int:
    e = _expansion(args)
    n = _parse_n(args)
    taus = tau_table(e, n)
    rows = [(s, taus[s]) for s in range(1, n + 1)]
    _emit_rows(args.format, ["s", "tau"], rows, out)
    return OK


def cmd_verify(args, out, err) -> int:
    tol = _parse_tol(args)
    shards = max(1, args.shards)
    n_values = _parse_n_range(args.n_range) if args.n_range else range(1, 13)
    corpus = load_corpus(args.corpus) if args.corpus else default_corpus()
    rows, failures = verify_report(corpus, n_values, tol, shards)
    out.write(render_report(rows))
    for message in failures:
        err.write(message + "\n")
    return MISMATCH if failures else OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    out, err = sys.stdout, sys.stderr
    try:
        if args.command == "expand":
            return cmd_expand(args, out)
        if args.command == "validate":
            return cmd_validate(args, out)
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        if args.command == "classify":
            return cmd_classify(args, out, err)
        if args.command == "runs":
            return cmd_runs(args, out, err)
        if args.command == "tau":
            return cmd_tau(args, out)
        if args.command == "verify":
            return cmd_verify(args, out, err)
        parser.error(f"unknown command {args.command!r}")
    except IntegerBeta as exc:
        err.write(f"error: {exc}\n")
        return PRECONDITION
    except VerificationError as exc:
        err.write(f"error: {exc}\n")
        return MISMATCH
    except (BetaWordsError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return INPUT_ERROR
    return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
