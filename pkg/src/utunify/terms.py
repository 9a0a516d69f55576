"""Logic terms: AST, tokenizer, parser and printer.

Concrete syntax::

    term := VARIABLE | NAME | NAME "(" term ("," term)* ")"

Variables start with an uppercase letter or underscore, names with a
lowercase letter; a decimal integer is accepted as a constant.  Parsing and
printing are iterative so deeply nested terms never hit the interpreter's
recursion limit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Union

DEFAULT_MAX_DEPTH = 10_000

_VAR_RE = re.compile(r"[A-Z_][A-Za-z0-9_]*\Z")
_NAME_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")
_INT_RE = re.compile(r"[0-9]+\Z")


class ParseError(ValueError):
    """Raised when text is not a well-formed term.

    ``position`` is the 0-based character offset where the problem was
    detected; for premature end of input it equals ``len(input)``.
    """

    def __init__(self, message: str, position: int, expected: str | None = None):
        super().__init__(message)
        self.message = message
        self.position = position
        self.expected = expected

    def __str__(self) -> str:
        return f"parse error at offset {self.position}: {self.message}"


@dataclass(frozen=True, slots=True)
class Variable:
    name: str

    def __post_init__(self):
        if not _VAR_RE.match(self.name):
            raise ValueError(f"invalid variable name {self.name!r}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Constant:
    name: str

    def __post_init__(self):
        if not (_NAME_RE.match(self.name) or _INT_RE.match(self.name)):
            raise ValueError(f"invalid constant name {self.name!r}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True, eq=False)
class Compound:
    functor: str
    args: tuple[Term, ...]

    def __post_init__(self):
        if not _NAME_RE.match(self.functor):
            raise ValueError(f"invalid functor name {self.functor!r}")
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))
        if not self.args:
            raise ValueError("compound term needs at least one argument")

    @property
    def arity(self) -> int:
        return len(self.args)

    def __eq__(self, other):
        if not isinstance(other, Compound):
            return NotImplemented
        return terms_equal(self, other)

    def __hash__(self):
        # Shallow on purpose: hashing the whole tree would recurse.
        return hash((self.functor, len(self.args)))

    def __str__(self) -> str:
        return print_term(self)


@dataclass(frozen=True, slots=True)
class Elided:
    """Placeholder for a subterm cut off by a depth-limited resolution."""

    def __str__(self) -> str:
        return "..."


Term = Union[Variable, Constant, Compound]


def terms_equal(a: Term, b: Term) -> bool:
    """Structural equality without recursion."""
    pending = [(a, b)]
    while pending:
        s, t = pending.pop()
        if s is t:
            continue
        if isinstance(s, Compound):
            if not isinstance(t, Compound):
                return False
            if s.functor != t.functor or len(s.args) != len(t.args):
                return False
            pending.extend(zip(s.args, t.args))
        elif type(s) is not type(t) or s != t:
            return False
    return True


def variables(t: Term) -> list[str]:
    """Distinct variable names of ``t`` in left-to-right order of first occurrence."""
    seen: dict[str, None] = {}
    stack = [t]
    while stack:
        s = stack.pop()
        if isinstance(s, Variable):
            seen.setdefault(s.name)
        elif isinstance(s, Compound):
            stack.extend(reversed(s.args))
    return list(seen)


def term_depth(t: Term) -> int:
    """Nesting depth; leaves have depth 1."""
    best = 0
    stack = [(t, 1)]
    while stack:
        s, d = stack.pop()
        best = max(best, d)
        if isinstance(s, Compound):
            stack.extend((a, d + 1) for a in s.args)
    return best


# -- tokenizer ---------------------------------------------------------------

class Token(NamedTuple):
    kind: str  # "name", "var", "int", "(", ")", ","
    text: str
    offset: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<var>[A-Z_][A-Za-z0-9_]*)
  | (?P<name>[a-z][A-Za-z0-9_]*)
  | (?P<int>[0-9]+)
  | (?P<punct>[(),])
    """,
    re.VERBOSE | re.ASCII,
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind == "punct":
            tokens.append(Token(m.group(), m.group(), pos))
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    return tokens


# -- parser ------------------------------------------------------------------

def parse_term(text: str, max_depth: int = DEFAULT_MAX_DEPTH) -> Term:
    """Parse ``text`` into a term; the whole input must be consumed.

    >>> parse_term("f(X, a)")
    Compound(functor='f', args=(Variable(name='X'), Constant(name='a')))
    """
    tokens = tokenize(text)
    end = len(text)
    pos = 0

    def peek() -> Token | None:
        return tokens[pos] if pos < len(tokens) else None

    def fail(expected: str) -> ParseError:
        tok = peek()
        if tok is None:
            return ParseError(f"unexpected end of input, expected {expected}", end, expected)
        return ParseError(f"unexpected {tok.text!r}, expected {expected}", tok.offset, expected)

    # Each frame is a compound under construction: (functor, args so far).
    frames: list[tuple[str, list[Term]]] = []
    while True:
        tok = peek()
        if tok is None:
            raise fail("a term")
        if tok.kind == "var":
            pos += 1
            value: Term = Variable(tok.text)
        elif tok.kind == "int":
            pos += 1
            value = Constant(tok.text)
        elif tok.kind == "name":
            pos += 1
            nxt = peek()
            if nxt is not None and nxt.kind == "(":
                pos += 1
                if len(frames) >= max_depth:
                    raise ParseError(f"nesting deeper than {max_depth}", nxt.offset)
                frames.append((tok.text, []))
                after = peek()
                if after is not None and after.kind == ")":
                    raise ParseError("empty argument list", after.offset, "a term")
                continue
            value = Constant(tok.text)
        else:
            raise fail("a term")

        # Attach the finished value to enclosing frames, closing as many as we can.
        while frames:
            frames[-1][1].append(value)
            tok = peek()
            if tok is not None and tok.kind == ",":
                pos += 1
                break
            if tok is not None and tok.kind == ")":
                pos += 1
                functor, args = frames.pop()
                value = Compound(functor, tuple(args))
                continue
            raise fail("',' or ')'")
        else:
            if peek() is not None:
                raise fail("end of input")
            return value


# -- printer -----------------------------------------------------------------

def print_term(t: Term | Elided) -> str:
    out: list[str] = []
    # Stack items are either terms to render or literal strings to emit.
    stack: list[object] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif isinstance(item, Compound):
            stack.append(")")
            for k in range(len(item.args) - 1, -1, -1):
                stack.append(item.args[k])
                if k:
                    stack.append(",")
            stack.append(item.functor + "(")
        else:
            out.append(str(item))
    return "".join(out)
