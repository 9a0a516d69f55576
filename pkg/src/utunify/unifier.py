"""Two-stack unification over a :class:`UnificationTable`.

The table itself is never mutated.  A run owns a :class:`BindingStore` with
one binding slot and one MGU mark per row, pops index pairs off two
parallel stacks and dispatches on the (VAR/STR, VAR/STR) kinds of the pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .table import UnificationTable, build_table
from .terms import Compound, Constant, Elided, Term, Variable, print_term

DEFAULT_DEPTH_LIMIT = 10


class InternalError(RuntimeError):
    """A broken engine invariant; never raised on valid control flow."""


class StackImbalance(InternalError):
    pass


@dataclass(frozen=True)
class UnifyConfig:
    occur_check: bool = False
    print_depth_limit: int = DEFAULT_DEPTH_LIMIT

    def __post_init__(self):
        if self.print_depth_limit < 1:
            raise ValueError("print_depth_limit must be >= 1")


class BindingStore:
    """Binding slots and MGU marks for one unification run.

    ``binding[i]`` is ``None`` while row ``i`` is free, otherwise the index
    it is bound to.  Slots are write-once.
    """

    def __init__(self, table: UnificationTable):
        self.table = table
        self.binding: list[int | None] = [None] * len(table)
        self.mgu_mark: list[bool] = [False] * len(table)

    def is_free(self, i: int) -> bool:
        return self.binding[i] is None

    def bind(self, var_i: int, target_j: int, mark: bool = True) -> None:
        if not self.table.entries[var_i].is_var:
            raise InternalError(f"bind: row {var_i} is not a variable")
        if self.binding[var_i] is not None:
            raise InternalError(f"bind: row {var_i} is already bound")
        if var_i == target_j:
            raise InternalError(f"bind: row {var_i} bound to itself")
        self.binding[var_i] = target_j
        if mark:
            self.mgu_mark[var_i] = True

    def copy(self) -> BindingStore:
        other = BindingStore.__new__(BindingStore)
        other.table = self.table
        other.binding = list(self.binding)
        other.mgu_mark = list(self.mgu_mark)
        return other


def bind(b: BindingStore, var_i: int, target_j: int, mark: bool = True) -> BindingStore:
    b.bind(var_i, target_j, mark)
    return b


def dereference(t: UnificationTable, b: BindingStore, i: int) -> int:
    """Follow bindings from ``i`` to a STR row or a free variable row."""
    hops = 0
    while t.entries[i].is_var and b.binding[i] is not None:
        hops += 1
        if hops > len(t):
            raise InternalError(f"binding cycle through row {i}")
        i = b.binding[i]
    return i


def occurs(t: UnificationTable, b: BindingStore, var_i: int, term_j: int) -> bool:
    """True if variable row ``var_i`` is reachable from row ``term_j``.

    Reachability follows component lists and variable bindings.
    """
    if not t.entries[var_i].is_var:
        raise InternalError(f"occurs: row {var_i} is not a variable")
    visited = set()
    work = [term_j]
    while work:
        k = work.pop()
        if k in visited:
            continue
        visited.add(k)
        if k == var_i:
            return True
        e = t.entries[k]
        if e.is_var:
            if b.binding[k] is not None:
                work.append(b.binding[k])
        else:
            work.extend(e.components)
    return False


def resolve(t: UnificationTable, b: BindingStore, i: int,
            depth_limit: int | None = DEFAULT_DEPTH_LIMIT) -> tuple[Term, bool]:
    """Rebuild row ``i`` with all bindings applied.

    Compounds nested deeper than ``depth_limit`` are replaced by
    :class:`Elided` and the returned flag is set.  ``None`` means no limit,
    which is only safe when the store is known to be acyclic.
    """
    if depth_limit is not None and depth_limit < 1:
        raise ValueError("depth_limit must be >= 1")
    truncated = False
    done: list[Term] = []
    # Built subterms are shared, keyed by (row, level); without a limit the
    # level is irrelevant.  Keeps cyclic stores from expanding exponentially.
    memo: dict[tuple[int, int], Term] = {}
    # (row, nesting level of the compound about to be built, expanded?)
    stack: list[tuple[int, int, bool]] = [(i, 1, False)]
    while stack:
        k, level, expanded = stack.pop()
        k = dereference(t, b, k)
        e = t.entries[k]
        key = (k, level if depth_limit is not None else 0)
        if e.is_var:
            done.append(Variable(e.functor))
        elif e.arity == 0:
            done.append(Constant(e.functor))
        elif expanded:
            n = e.arity
            args = tuple(reversed(done[-n:]))
            del done[-n:]
            memo[key] = Compound(e.functor, args)
            done.append(memo[key])
        elif key in memo:
            done.append(memo[key])
        elif depth_limit is not None and level > depth_limit:
            truncated = True
            done.append(Elided())
        else:
            stack.append((k, level, True))
            stack.extend((c, level + 1, False) for c in e.components)
    return done[0], truncated


@dataclass(frozen=True)
class Binding:
    name: str
    term: Term
    truncated: bool = False

    def __str__(self) -> str:
        return f"{self.name}={print_term(self.term)}"


@dataclass(frozen=True)
class Substitution:
    """Resolved MGU, in table-index order of the marked variables."""

    bindings: tuple[Binding, ...] = ()

    @property
    def truncated(self) -> bool:
        return any(x.truncated for x in self.bindings)

    def as_dict(self) -> dict[str, Term]:
        return {x.name: x.term for x in self.bindings}

    def as_text_dict(self) -> dict[str, str]:
        return {x.name: print_term(x.term) for x in self.bindings}

    def __len__(self) -> int:
        return len(self.bindings)

    def __str__(self) -> str:
        return "\n".join(map(str, self.bindings))


def extract_mgu(t: UnificationTable, b: BindingStore, cfg: UnifyConfig = UnifyConfig()) -> Substitution:
    # With the occur check on the store is acyclic and resolution is
    # bounded by the table size, so the guard is not applied.
    limit = None if cfg.occur_check else cfg.print_depth_limit
    out = []
    for k, marked in enumerate(b.mgu_mark):
        if marked:
            term, cut = resolve(t, b, b.binding[k], limit)
            out.append(Binding(t.entries[k].functor, term, cut))
    return Substitution(tuple(out))


@dataclass(frozen=True)
class Clash:
    left: int
    right: int

    kind = "clash"


@dataclass(frozen=True)
class OccurViolation:
    var: int
    term: int

    kind = "occur-check"


@dataclass(frozen=True)
class Success:
    substitution: Substitution
    store: BindingStore = field(repr=False, compare=False)
    steps: int = 0

    ok = True


@dataclass(frozen=True)
class Failure:
    cause: Union[Clash, OccurViolation]
    store: BindingStore = field(repr=False, compare=False)
    steps: int = 0

    ok = False


UnifyOutcome = Union[Success, Failure]


class Unification:
    """One unify run, steppable for inspection.

    ``step()`` pops and processes a single pair; ``run()`` loops until the
    stacks drain or a failure is found.
    """

    def __init__(self, table: UnificationTable, ix: int, iy: int, cfg: UnifyConfig = UnifyConfig()):
        self.table = table
        self.cfg = cfg
        self.store = BindingStore(table)
        self.sx: list[int] = [ix]
        self.sy: list[int] = [iy]
        self.steps = 0
        self.max_stack = 1
        self.failure: Clash | OccurViolation | None = None
        # STR/STR pairs whose components were already pushed; makes runs
        # over cyclic bindings terminate.
        self._matched: set[tuple[int, int]] = set()

    @property
    def finished(self) -> bool:
        return self.failure is not None or not (self.sx or self.sy)

    def _bind(self, var_i: int, target_j: int) -> bool:
        if self.cfg.occur_check and occurs(self.table, self.store, var_i, target_j):
            self.failure = OccurViolation(var_i, target_j)
            return False
        self.store.bind(var_i, target_j, mark=True)
        return True

    def step(self) -> None:
        t, b = self.table, self.store
        sx, sy = self.sx, self.sy
        if len(sx) != len(sy):
            raise StackImbalance(f"|Sx|={len(sx)} |Sy|={len(sy)}")
        i = sx.pop()
        j = sy.pop()
        self.steps += 1

        if i == j or dereference(t, b, i) == dereference(t, b, j):
            pass
        else:
            ei, ej = t.entries[i], t.entries[j]
            if not ei.is_var and not ej.is_var:
                if ei.functor != ej.functor or ei.arity != ej.arity:
                    self.failure = Clash(i, j)
                elif ei.arity and (i, j) not in self._matched:
                    self._matched.add((i, j))
                    sx.extend(ei.components)
                    sy.extend(ej.components)
            elif not ei.is_var:
                self._str_var(i, j, str_on_x=True)
            elif not ej.is_var:
                self._str_var(j, i, str_on_x=False)
            else:
                free_i, free_j = b.is_free(i), b.is_free(j)
                if free_i:
                    self._bind(i, j)
                elif free_j:
                    self._bind(j, i)
                else:
                    sx.append(dereference(t, b, i))
                    sy.append(dereference(t, b, j))

        if len(sx) != len(sy):
            raise StackImbalance(f"|Sx|={len(sx)} |Sy|={len(sy)}")
        self.max_stack = max(self.max_stack, len(sx))

    def _str_var(self, s: int, v: int, str_on_x: bool) -> None:
        t, b = self.table, self.store
        if b.is_free(v):
            self._bind(v, s)
            return
        d = dereference(t, b, v)
        if t.entries[d].is_var:
            self._bind(d, s)
        elif str_on_x:
            self.sx.append(s)
            self.sy.append(d)
        else:
            self.sx.append(d)
            self.sy.append(s)

    def run(self) -> UnifyOutcome:
        while self.sx and self.sy and self.failure is None:
            self.step()
        if self.failure is not None:
            return Failure(self.failure, self.store, self.steps)
        if self.sx or self.sy:
            raise StackImbalance(f"|Sx|={len(self.sx)} |Sy|={len(self.sy)}")
        return Success(extract_mgu(self.table, self.store, self.cfg), self.store, self.steps)


def unify(t: UnificationTable, ix: int, iy: int, cfg: UnifyConfig = UnifyConfig()) -> UnifyOutcome:
    return Unification(t, ix, iy, cfg).run()


def unify_terms(x: Term, y: Term, cfg: UnifyConfig = UnifyConfig()) -> UnifyOutcome:
    """Build the table for ``x`` and ``y`` and unify them.

    The run starts from the root of ``y`` on the left stack and the root of
    ``x`` on the right one, matching the table's construction order.
    """
    t = build_table(x, y)
    return unify(t, t.root_y, t.root_x, cfg)
