"""Term unification through a flattened unification table."""

from .oracle import NotUnifiable, apply_substitution, equivalent_mgus, oracle_unify
from .table import EntryKind, TableRow, UnificationTable, UtEntry, build_table, table_to_rows
from .terms import (
    Compound,
    Constant,
    Elided,
    ParseError,
    Term,
    Token,
    Variable,
    parse_term,
    print_term,
    tokenize,
)
from .unifier import (
    BindingStore,
    Clash,
    Failure,
    OccurViolation,
    Substitution,
    Success,
    Unification,
    UnifyConfig,
    UnifyOutcome,
    dereference,
    extract_mgu,
    occurs,
    resolve,
    unify,
    unify_terms,
)

__version__ = "0.1.0"
