"""Seeded random term generators for property and oracle testing."""

from __future__ import annotations

import random

from .terms import Compound, Constant, Term, Variable

FUNCTORS = ("f", "g", "h", "p")
CONSTANTS = ("a", "b", "c", "0", "42")
VARIABLES = ("X", "Y", "Z", "W", "V", "_U", "X1", "Long_name")


def random_term(rng: random.Random, max_depth: int = 5, max_arity: int = 3,
                n_vars: int = 6, leaf_bias: float = 0.35) -> Term:
    """A term of depth at most ``max_depth`` over a small fixed alphabet.

    Small alphabets keep the chance of two random terms unifying reasonable.
    """
    pool = VARIABLES[:n_vars]
    if max_depth <= 1 or rng.random() < leaf_bias:
        if pool and rng.random() < 0.5:
            return Variable(rng.choice(pool))
        return Constant(rng.choice(CONSTANTS))
    arity = rng.randint(1, max_arity)
    return Compound(rng.choice(FUNCTORS),
                    tuple(random_term(rng, max_depth - 1, max_arity, n_vars, leaf_bias)
                          for _ in range(arity)))


def _mutate(rng: random.Random, t: Term, max_depth: int, max_arity: int, n_vars: int) -> Term:
    # Replace a few subterms by variables or fresh terms, keeping depth bounded.
    if max_depth <= 1:
        return t if not isinstance(t, Compound) else random_term(rng, 1, max_arity, n_vars)
    r = rng.random()
    if r < 0.15:
        return Variable(rng.choice(VARIABLES[:n_vars]))
    if r < 0.2:
        return random_term(rng, max_depth, max_arity, n_vars)
    if isinstance(t, Compound):
        return Compound(t.functor, tuple(_mutate(rng, a, max_depth - 1, max_arity, n_vars)
                                         for a in t.args))
    if isinstance(t, Constant) and r < 0.4:
        return Variable(rng.choice(VARIABLES[:n_vars]))
    return t


def random_pair(rng: random.Random, max_depth: int = 5, max_arity: int = 3,
                n_vars: int = 6) -> tuple[Term, Term]:
    """Two terms; half the time the second is a perturbed copy of the first."""
    x = random_term(rng, max_depth, max_arity, n_vars)
    if rng.random() < 0.5:
        y = _mutate(rng, x, max_depth, max_arity, n_vars)
    else:
        y = random_term(rng, max_depth, max_arity, n_vars)
    if rng.random() < 0.5:
        x, y = y, x
    return x, y


def chain(depth: int, functor: str = "f", leaf: str = "a") -> Term:
    """``f(f(...f(a)...))`` with ``depth`` compounds, built without recursion."""
    t: Term = Constant(leaf)
    for _ in range(depth):
        t = Compound(functor, (t,))
    return t
