"""Flattening of two terms into a unification table.

Every subterm occurrence gets one row; variables are shared across both
terms so each variable name owns exactly one row.  Rows are appended
bottom-up, so a compound's components always have smaller indexes than the
compound itself.  The second term (``y``) is flattened first and arguments
are visited right to left, which gives the rightmost leaf of ``y`` index 0.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, NamedTuple

from .terms import Compound, Constant, Term, Variable


class EntryKind(str, enum.Enum):
    VAR = "VAR"
    STR = "STR"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class UtEntry:
    index: int
    functor: str
    kind: EntryKind
    arity: int
    components: tuple[int, ...] = ()

    @property
    def is_var(self) -> bool:
        return self.kind is EntryKind.VAR


class TableRow(NamedTuple):
    term: str
    index: int
    functor: str
    kind: EntryKind
    arity: int
    components: tuple[int, ...]


@dataclass(frozen=True)
class UnificationTable:
    entries: tuple[UtEntry, ...]
    var_index: Mapping[str, int]
    root_x: int
    root_y: int

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> UtEntry:
        return self.entries[i]

    def reconstruct(self, i: int) -> Term:
        """Rebuild the source subterm at row ``i`` from the table alone."""
        built: dict[int, Term] = {}
        stack = [(i, False)]
        while stack:
            k, ready = stack.pop()
            if k in built:
                continue
            e = self.entries[k]
            if e.is_var:
                built[k] = Variable(e.functor)
            elif e.arity == 0:
                built[k] = Constant(e.functor)
            elif ready:
                built[k] = Compound(e.functor, tuple(built[c] for c in e.components))
            else:
                stack.append((k, True))
                stack.extend((c, False) for c in e.components)
        return built[i]

    def term_texts(self) -> list[str]:
        """Printed form of every row, computed bottom-up in one pass."""
        texts: list[str] = []
        for e in self.entries:
            if e.arity == 0:
                texts.append(e.functor)
            else:
                texts.append(f"{e.functor}({','.join(texts[c] for c in e.components)})")
        return texts

    def to_rows(self) -> list[TableRow]:
        return table_to_rows(self)

    def dump_tsv(self) -> str:
        lines = []
        for row in table_to_rows(self):
            comps = " ".join(map(str, row.components))
            lines.append(f"{row.index}\t{row.functor}\t{row.kind}\t{row.arity}\t{comps}\t{row.term}\n")
        return "".join(lines)

    def to_json_obj(self) -> list[dict]:
        return [
            {
                "index": row.index,
                "functor": row.functor,
                "kind": row.kind.value,
                "arity": row.arity,
                "components": list(row.components),
                "term": row.term,
            }
            for row in table_to_rows(self)
        ]

    def dump_json(self) -> str:
        return json.dumps(self.to_json_obj())


def build_table(x: Term, y: Term) -> UnificationTable:
    entries: list[UtEntry] = []
    var_index: dict[str, int] = {}

    def flatten(root: Term) -> int:
        # Post-order walk; children are pushed left to right so the
        # rightmost one is visited first.  Finished indexes go on `done`,
        # where a parent later pops its children back in left-to-right order.
        done: list[int] = []
        stack: list[tuple[Term, bool]] = [(root, False)]
        while stack:
            t, expanded = stack.pop()
            if isinstance(t, Variable):
                k = var_index.get(t.name)
                if k is None:
                    k = var_index[t.name] = len(entries)
                    entries.append(UtEntry(k, t.name, EntryKind.VAR, 0))
                done.append(k)
            elif isinstance(t, Constant):
                k = len(entries)
                entries.append(UtEntry(k, t.name, EntryKind.STR, 0))
                done.append(k)
            elif expanded:
                n = len(t.args)
                comps = tuple(reversed(done[-n:]))
                del done[-n:]
                k = len(entries)
                entries.append(UtEntry(k, t.functor, EntryKind.STR, n, comps))
                done.append(k)
            else:
                stack.append((t, True))
                stack.extend((a, False) for a in t.args)
        assert len(done) == 1
        return done[0]

    root_y = flatten(y)
    root_x = flatten(x)
    return UnificationTable(tuple(entries), MappingProxyType(var_index), root_x, root_y)


def table_to_rows(table: UnificationTable) -> list[TableRow]:
    texts = table.term_texts()
    return [
        TableRow(texts[e.index], e.index, e.functor, e.kind, e.arity, e.components)
        for e in table.entries
    ]
