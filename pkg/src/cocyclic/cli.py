"""Command-line interface.

Exit status: 0 on success, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .classify import GROUP_MODES, census, format_census, orbit
from .diagram import (
    Diagram,
    diagram_from_set,
    format_index_set,
    grid_key,
    parse,
    parse_index_set,
    render,
)
from .errors import InvalidParameter, ParseError
from .group import check_t
from .hprime import hp_apply, parse_op_word
from .matrix import assemble, format_matrix, hadamard_full, hadamard_rowsum
from .search import SearchAborted, format_hits, parse_hits, search_exhaustive, search_parallel
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _odd_t(text: str) -> int:
    try:
        return check_t(int(text))
    except (ValueError, InvalidParameter):
        raise argparse.ArgumentTypeError(f"t must be an odd integer > 1, got {text!r}") from None


def _diagram_arg(args) -> Diagram:
    if args.set is not None and args.file is not None:
        raise UsageError("give either --set or --file, not both")
    try:
        if args.file is not None:
            return parse(Path(args.file).read_text(), args.t)
        return diagram_from_set(parse_index_set(args.set or "", args.t), args.t)
    except (ParseError, InvalidParameter) as exc:
        raise UsageError(str(exc)) from None
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_gen(args) -> int:
    d = _diagram_arg(args)
    m = assemble(d.indices, args.t, include_rho=not args.no_rho)
    print(format_matrix(m))
    full, short = hadamard_full(m), hadamard_rowsum(m)
    print(f"hadamard: {_yes(full)}")
    print(f"rowsum-test: {_yes(short)}")
    return 0


def cmd_diagram(args) -> int:
    d = _diagram_arg(args)
    print(format_index_set(d.indices) or "-")
    print(render(d))
    return 0


def cmd_apply(args) -> int:
    d = _diagram_arg(args)
    try:
        ops = parse_op_word(args.op, args.t)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    for e in ops:
        d = hp_apply(e, d)
    print(format_index_set(d.indices) or "-")
    print(render(d))
    return 0


def cmd_search(args) -> int:
    out = open(args.out, "w") if args.out else None
    try:
        if args.workers > 1:
            summary = search_parallel(args.t, args.workers, quotient_v=args.quotient_v)
        else:
            summary = search_exhaustive(args.t, quotient_v=args.quotient_v)
    except SearchAborted as exc:
        print(str(exc), file=sys.stderr)
        return 1
    text = format_hits(summary)
    if out:
        out.write(text)
        out.close()
    else:
        sys.stdout.write(text)
    print(
        f"visited={summary.visited} hits={summary.hit_count} "
        f"with_index1={summary.hits_with_index1} elapsed={summary.elapsed:.2f}s",
        file=sys.stderr,
    )
    return 0


def cmd_classify(args) -> int:
    if args.file is None:
        raise UsageError("classify needs --file with a hits file")
    try:
        header_t, sets = parse_hits(Path(args.file).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    except ValueError as exc:
        raise UsageError(f"malformed hits file: {exc}") from None
    if header_t is not None and header_t != args.t:
        raise UsageError(f"hits file is for t={header_t}, not t={args.t}")
    try:
        reports = census(sets, args.group, args.t)
    except InvalidParameter as exc:
        raise UsageError(str(exc)) from None
    if reports:
        print(format_census(reports))
    return 0


def cmd_orbit(args) -> int:
    d = _diagram_arg(args)
    members = sorted(orbit(d, args.group, args.t), key=lambda x: grid_key(x.mask, args.t))
    print(f"# orbit size {len(members)} ({args.group})")
    for m in members:
        print(format_index_set(m.indices) or "-")
    return 0


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, args.t)
    for c in checks:
        print(c.line())
    return 0 if all(c.passed for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cocyclic", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, diagram=True):
        p.add_argument("--t", type=_odd_t, required=True)
        if diagram:
            p.add_argument("--set", help="comma-separated indices, e.g. 4,6,9")
            p.add_argument("--file", help="diagram file (4 rows of x/-)")
        return p

    p = common(sub.add_parser("gen", help="print the assembled matrix"))
    p.add_argument("--no-rho", action="store_true", help="omit the rho factor")
    p.set_defaults(func=cmd_gen)

    common(sub.add_parser("diagram", help="render a set or parse a diagram")).set_defaults(func=cmd_diagram)

    p = common(sub.add_parser("apply", help="apply an op word such as 'C2;T:2'"))
    p.add_argument("--op", required=True)
    p.set_defaults(func=cmd_apply)

    p = common(sub.add_parser("search", help="exhaustive search for orthogonal cocycles"), diagram=False)
    p.add_argument("--out")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--quotient-v", action="store_true")
    p.set_defaults(func=cmd_search)

    p = common(sub.add_parser("classify", help="census of a hits file"), diagram=False)
    p.add_argument("--file")
    p.add_argument("--group", choices=GROUP_MODES, default="hstar")
    p.set_defaults(func=cmd_classify)

    p = common(sub.add_parser("orbit", help="orbit of one cocycle"))
    p.add_argument("--group", choices=GROUP_MODES, default="hstar")
    p.set_defaults(func=cmd_orbit)

    p = common(sub.add_parser("verify", help="run a named verification suite"), diagram=False)
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


def run(argv) -> int:
    """Run the CLI, turning argparse's SystemExit into an exit code."""
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
