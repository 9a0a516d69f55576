"""Reference unifier working directly on term ASTs.

This is the textbook recursive algorithm with substitution composition and
an unconditional occur check.  It is slow and obviously correct, and exists
to cross-check the table-based engine.
"""

from __future__ import annotations

from typing import Mapping

from .terms import Compound, Term, Variable

OracleSubstitution = dict[str, Term]


class NotUnifiable(Exception):
    kind = "fail"


class OracleClash(NotUnifiable):
    kind = "clash"


class OracleOccurs(NotUnifiable):
    kind = "occur-check"


def apply_substitution(s: Mapping[str, Term], t: Term) -> Term:
    """Replace every variable bound in ``s`` by its image, simultaneously."""
    if isinstance(t, Variable):
        return s.get(t.name, t)
    if isinstance(t, Compound):
        return Compound(t.functor, tuple(apply_substitution(s, a) for a in t.args))
    return t


def occurs_in(name: str, t: Term) -> bool:
    if isinstance(t, Variable):
        return t.name == name
    if isinstance(t, Compound):
        return any(occurs_in(name, a) for a in t.args)
    return False


def compose(s: OracleSubstitution, name: str, t: Term) -> OracleSubstitution:
    """``s`` followed by the single binding ``name -> t``."""
    single = {name: t}
    out = {k: apply_substitution(single, v) for k, v in s.items()}
    out[name] = t
    return out


def oracle_unify(x: Term, y: Term) -> OracleSubstitution:
    """Most general unifier of ``x`` and ``y``; raises :class:`NotUnifiable`.

    >>> from utunify.terms import parse_term
    >>> oracle_unify(parse_term("f(X,b)"), parse_term("f(a,Y)"))
    {'X': Constant(name='a'), 'Y': Constant(name='b')}
    """
    return _unify(x, y, {})


def _unify(x: Term, y: Term, s: OracleSubstitution) -> OracleSubstitution:
    x = apply_substitution(s, x)
    y = apply_substitution(s, y)
    if isinstance(x, Variable) or isinstance(y, Variable):
        if x == y:
            return s
        var, other = (x, y) if isinstance(x, Variable) else (y, x)
        if occurs_in(var.name, other):
            raise OracleOccurs(f"{var} occurs in {other}")
        return compose(s, var.name, other)
    if isinstance(x, Compound) and isinstance(y, Compound):
        if x.functor != y.functor or len(x.args) != len(y.args):
            raise OracleClash(f"{x} vs {y}")
        for a, b in zip(x.args, y.args):
            s = _unify(a, b, s)
        return s
    if x != y:
        raise OracleClash(f"{x} vs {y}")
    return s


def _match_renaming(pairs, forward: dict[str, str], backward: dict[str, str]) -> bool:
    stack = list(pairs)
    while stack:
        a, b = stack.pop()
        if isinstance(a, Variable) and isinstance(b, Variable):
            if forward.setdefault(a.name, b.name) != b.name:
                return False
            if backward.setdefault(b.name, a.name) != a.name:
                return False
        elif isinstance(a, Compound) and isinstance(b, Compound):
            if a.functor != b.functor or len(a.args) != len(b.args):
                return False
            stack.extend(zip(a.args, b.args))
        elif isinstance(a, Variable) or isinstance(b, Variable) or a != b:
            return False
    return True


def variant(a: Term, b: Term) -> bool:
    """True if ``a`` and ``b`` differ only by a bijective variable renaming."""
    return _match_renaming([(a, b)], {}, {})


def equivalent_mgus(s1: Mapping[str, Term], s2: Mapping[str, Term], x: Term, y: Term) -> bool:
    """True if both substitutions give the same instances of ``x`` and ``y`` up to renaming."""
    pairs = [
        (apply_substitution(s1, x), apply_substitution(s2, x)),
        (apply_substitution(s1, y), apply_substitution(s2, y)),
    ]
    return _match_renaming(pairs, {}, {})
