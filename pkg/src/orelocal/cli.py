"""Command-line entry point: ``orelocal run|repl|check``."""

from __future__ import annotations

import argparse
import sys

from .errors import InvariantViolation
from .oresets import DEFAULT_BOUND
from .session import Session, render

EXIT_OK, EXIT_DIAGNOSTICS, EXIT_INTERNAL = 0, 1, 2


def _parser():
    p = argparse.ArgumentParser(prog="orelocal", description="Ore localization of G-algebras")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                        help="monoidal search bound (powers of g)")
    common.add_argument("--order", default="degrevlex",
                        help="default monomial order: degrevlex|deglex|lex (or dp|Dp|lp)")
    common.add_argument("--format", choices=("plain", "json"), default="plain")
    sub = p.add_subparsers(dest="command", required=True)
    for name, text in (("run", "execute a session script"),
                       ("check", "parse and validate a script without computing")):
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("script", help="script path, or - for stdin")
    sub.add_parser("repl", parents=[common], help="interactive line mode")
    return p


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(records, fmt, stream):
    if records:
        stream.write(render(records, fmt) + "\n")
        stream.flush()


def main(argv=None):
    args = _parser().parse_args(argv)
    session = Session(bound=args.bound, order=args.order, check_only=args.command == "check")
    errors = False
    try:
        if args.command == "repl":
            interactive = sys.stdin.isatty()
            index = 0
            while True:
                if interactive:
                    sys.stdout.write("orelocal> ")
                    sys.stdout.flush()
                line = sys.stdin.readline()
                if not line:
                    break
                index += 1
                recs = session.execute(line, index)
                errors |= any(r.is_error for r in recs)
                _emit(recs, args.format, sys.stdout)
        else:
            try:
                text = _read(args.script)
            except OSError as exc:
                sys.stderr.write(f"orelocal: {exc}\n")
                return EXIT_DIAGNOSTICS
            for index, line in enumerate(text.splitlines(), 1):
                recs = session.execute(line, index)
                errors |= any(r.is_error for r in recs)
                _emit(recs, args.format, sys.stdout)
            if args.command == "check" and not errors:
                sys.stdout.write("ok\n")
    except InvariantViolation as exc:
        sys.stderr.write(f"orelocal: internal invariant violated: {exc}\n")
        return EXIT_INTERNAL
    except Exception as exc:  # anything the session did not turn into a diagnostic
        sys.stderr.write(f"orelocal: internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL
    return EXIT_DIAGNOSTICS if errors else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
