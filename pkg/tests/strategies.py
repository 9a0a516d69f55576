"""Hypothesis strategies for logic terms."""

from hypothesis import strategies as st

from utunify.terms import Compound, Constant, Variable

VAR_NAMES = ["X", "Y", "Z", "W", "V", "_U"]


def leaves(var_names=VAR_NAMES):
    return st.one_of(
        st.sampled_from(var_names).map(Variable),
        st.sampled_from(["a", "b", "c", "0", "17"]).map(Constant),
    )


def terms(max_depth=5, max_arity=3, var_names=VAR_NAMES):
    """Terms of bounded depth built over a small alphabet."""
    if max_depth <= 1:
        return leaves(var_names)
    sub = terms(max_depth - 1, max_arity, var_names)
    compound = st.builds(
        Compound,
        st.sampled_from(["f", "g", "h"]),
        st.lists(sub, min_size=1, max_size=max_arity).map(tuple),
    )
    return st.one_of(leaves(var_names), compound)


ident_chars = st.sampled_from("abcxyzABCXYZ0189_")


def rich_terms(max_depth=6, max_arity=4):
    """Terms with arbitrary legal identifiers, for printer/parser round trips."""
    var = st.builds(lambda h, t: Variable(h + t),
                    st.sampled_from("ABZ_"), st.text(ident_chars, max_size=4))
    name = st.builds(lambda h, t: h + t, st.sampled_from("abz"), st.text(ident_chars, max_size=4))
    const = st.one_of(name.map(Constant),
                      st.integers(min_value=0, max_value=10**6).map(lambda n: Constant(str(n))))
    leaf = st.one_of(var, const)

    def build(depth):
        if depth <= 1:
            return leaf
        return st.one_of(leaf, st.builds(Compound, name,
                                         st.lists(build(depth - 1), min_size=1,
                                                  max_size=max_arity).map(tuple)))
    return build(max_depth)
