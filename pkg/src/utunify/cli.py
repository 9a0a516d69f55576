"""``ut-unify``: unify two terms from the command line.

Exit status is 0 when the terms unify, 1 when they do not and 2 on parse
or usage errors.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .table import build_table
from .terms import ParseError, parse_term
from .unifier import DEFAULT_DEPTH_LIMIT, Failure, UnifyConfig, unify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    term_x: str
    term_y: str
    show_table: bool = False
    occur_check: bool = False
    depth_limit: int = DEFAULT_DEPTH_LIMIT
    output_format: str = "text"


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("depth must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ut-unify",
        description="Compute the most general unifier of two logic terms. "
                    "Use '-' for a term to read it from standard input.",
    )
    parser.add_argument("term_x", help="first term, e.g. 'p(Z,h(Z,W),f(W))'")
    parser.add_argument("term_y", help="second term")
    parser.add_argument("--table", action="store_true", help="print the unification table first")
    parser.add_argument("--occur-check", action="store_true", help="reject cyclic bindings")
    parser.add_argument("--depth", type=_positive_int, default=DEFAULT_DEPTH_LIMIT, metavar="N",
                        help="guarded-write depth for cyclic results (default %(default)s)")
    parser.add_argument("--json", action="store_true", help="emit a JSON object")
    return parser


def parse_args(argv: Sequence[str], out: TextIO, err: TextIO) -> CliConfig:
    parser = build_parser()
    buf_out, buf_err = io.StringIO(), io.StringIO()
    try:
        with contextlib.redirect_stdout(buf_out), contextlib.redirect_stderr(buf_err):
            ns = parser.parse_args(list(argv))
    except SystemExit as exc:
        out.write(buf_out.getvalue())
        err.write(buf_err.getvalue())
        if exc.code:
            raise UsageError() from None
        raise
    return CliConfig(
        term_x=ns.term_x,
        term_y=ns.term_y,
        show_table=ns.table,
        occur_check=ns.occur_check,
        depth_limit=ns.depth,
        output_format="json" if ns.json else "text",
    )


def _read_terms(cfg: CliConfig, stdin: TextIO) -> tuple[str, str]:
    texts = [cfg.term_x, cfg.term_y]
    for k, text in enumerate(texts):
        if text == "-":
            line = stdin.readline()
            if not line:
                raise UsageError(f"expected a term on standard input for {'xy'[k]}")
            texts[k] = line.rstrip("\r\n")
    return texts[0], texts[1]


def run_cli(argv: Sequence[str], stdin: TextIO | None = None, stdout: TextIO | None = None,
            stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        cfg = parse_args(argv, stdout, stderr)
    except UsageError:
        return EXIT_USAGE
    except SystemExit:
        return EXIT_OK

    try:
        text_x, text_y = _read_terms(cfg, stdin)
    except UsageError as exc:
        stderr.write(f"ut-unify: error: {exc}\n")
        return EXIT_USAGE

    terms = []
    for label, text in (("x", text_x), ("y", text_y)):
        try:
            terms.append(parse_term(text))
        except ParseError as exc:
            stderr.write(f"ut-unify: term {label}: {exc}\n")
            return EXIT_USAGE
    x, y = terms

    table = build_table(x, y)
    outcome = unify(table, table.root_y, table.root_x,
                    UnifyConfig(occur_check=cfg.occur_check, print_depth_limit=cfg.depth_limit))

    if cfg.output_format == "json":
        doc: dict = {"result": "success" if outcome.ok else "fail"}
        if isinstance(outcome, Failure):
            doc["mgu"] = {}
            doc["truncated"] = False
            doc["cause"] = outcome.cause.kind
            doc["pair"] = list(_cause_pair(outcome))
        else:
            doc["mgu"] = outcome.substitution.as_text_dict()
            doc["truncated"] = outcome.substitution.truncated
        if cfg.show_table:
            doc["table"] = table.to_json_obj()
        stdout.write(json.dumps(doc) + "\n")
    else:
        if cfg.show_table:
            stdout.write(table.dump_tsv())
        if isinstance(outcome, Failure):
            stdout.write(f"fail: {outcome.cause.kind}\n")
        else:
            for b in outcome.substitution.bindings:
                stdout.write(f"{b}\n")

    return EXIT_OK if outcome.ok else EXIT_FAIL


def _cause_pair(outcome: Failure) -> tuple[int, int]:
    c = outcome.cause
    return (c.left, c.right) if c.kind == "clash" else (c.var, c.term)


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
