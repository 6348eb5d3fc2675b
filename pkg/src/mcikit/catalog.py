"""Plain-text group catalog: parsing, loading and writing.

A catalog file holds one or more blocks separated by blank lines::

    group <label>
    perm <degree>
    <1-based image list of generator 1>
    ...

or::

    group <label>
    table <n>
    <n rows of n 0-based indices; row r, column c is r*c>

In a table block element 0 must be the identity.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .group import DEFAULT_CAP, CapExceededError, Group, GroupError


class CatalogError(GroupError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line
        self.source = source


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    kind: str          # "perm" or "table"
    size: int          # degree for perm blocks, n for table blocks
    rows: tuple[tuple[int, ...], ...]
    line: int          # 1-based line of the ``group`` header
    source: str | None = None

    def build(self, cap: int = DEFAULT_CAP) -> Group:
        return _build(self, cap)


def _ints(text: str, lineno: int, source):
    try:
        return tuple(int(tok) for tok in text.split())
    except ValueError:
        raise CatalogError(f"expected integers, got {text.strip()!r}", lineno, source) from None


def parse_catalog(text: str, source: str | None = None) -> list[CatalogEntry]:
    """Split catalog text into entries without building the groups."""
    lines = text.splitlines()
    entries = []
    i = 0
    while i < len(lines):
        if not lines[i].strip():
            i += 1
            continue
        head = lines[i].strip()
        start = i + 1
        if not head.startswith("group"):
            raise CatalogError(f"expected 'group <label>', got {head!r}", start, source)
        label = head[len("group"):].strip()
        if not label or not head[len("group"):][:1].isspace():
            raise CatalogError("group header needs a label", start, source)
        i += 1
        if i >= len(lines) or not lines[i].strip():
            raise CatalogError("missing 'perm' or 'table' line", i + 1, source)
        kind_line = lines[i].split()
        if len(kind_line) != 2 or kind_line[0] not in ("perm", "table"):
            raise CatalogError(f"expected 'perm <degree>' or 'table <n>', got {lines[i].strip()!r}",
                               i + 1, source)
        kind = kind_line[0]
        try:
            size = int(kind_line[1])
        except ValueError:
            raise CatalogError(f"bad size {kind_line[1]!r}", i + 1, source) from None
        if size < 1:
            raise CatalogError("size must be positive", i + 1, source)
        i += 1
        rows = []
        if kind == "table":
            for r in range(size):
                if i >= len(lines) or not lines[i].strip():
                    raise CatalogError(f"table ended after {r} of {size} rows", i + 1, source)
                row = _ints(lines[i], i + 1, source)
                if len(row) != size:
                    raise CatalogError(f"row has {len(row)} entries, expected {size}", i + 1, source)
                bad = [v for v in row if not 0 <= v < size]
                if bad:
                    raise CatalogError(f"entry {bad[0]} outside [0, {size})", i + 1, source)
                rows.append(row)
                i += 1
        else:
            while i < len(lines) and lines[i].strip() and not lines[i].lstrip().startswith("group"):
                row = _ints(lines[i], i + 1, source)
                if len(row) != size:
                    raise CatalogError(f"image list has {len(row)} entries, expected {size}",
                                       i + 1, source)
                if sorted(row) != list(range(1, size + 1)):
                    raise CatalogError("image list is not a permutation of 1..degree", i + 1, source)
                rows.append(row)
                i += 1
        if i < len(lines) and lines[i].strip():
            raise CatalogError(f"unexpected line {lines[i].strip()!r}", i + 1, source)
        entries.append(CatalogEntry(label, kind, size, tuple(rows), start, source))
    return entries


def _build(entry: CatalogEntry, cap: int) -> Group:
    try:
        if entry.kind == "table":
            t = np.array(entry.rows, dtype=np.int32)
            n = entry.size
            if n > cap:
                raise GroupError(f"table of order {n} exceeds element cap {cap}")
            if not (np.array_equal(t[0], np.arange(n)) and np.array_equal(t[:, 0], np.arange(n))):
                raise GroupError("element 0 is not the identity")
            return Group.from_table(t, label=entry.label)
        gens = [np.array(r, dtype=np.int32) - 1 for r in entry.rows]
        return Group.from_permutations(gens, degree=entry.size, label=entry.label, cap=cap)
    except CatalogError:
        raise
    except CapExceededError as exc:
        where = f"{entry.source}:" if entry.source else ""
        raise CapExceededError(f"{where}{entry.line}: group {entry.label!r}: {exc}") from None
    except GroupError as exc:
        raise CatalogError(f"group {entry.label!r}: {exc}", entry.line, entry.source) from None


def load_group(source: str, cap: int = DEFAULT_CAP) -> Group:
    """Build the single group described by catalog text ``source``."""
    entries = parse_catalog(source)
    if len(entries) != 1:
        raise CatalogError(f"expected exactly one group, found {len(entries)}")
    return entries[0].build(cap)


def read_entries(path: str | Path) -> list[CatalogEntry]:
    path = Path(path)
    return parse_catalog(path.read_text(encoding="utf-8"), source=str(path))


def load_catalog(path: str | Path, cap: int = DEFAULT_CAP) -> list[Group]:
    return [e.build(cap) for e in read_entries(path)]


def catalog_files(paths) -> list[Path]:
    """Expand files and directories into a sorted list of catalog files."""
    out = []
    for p in paths:
        p = Path(p)
        if p.is_dir():
            out.extend(sorted(q for q in p.rglob("*.txt") if q.is_file()))
        elif p.is_file():
            out.append(p)
        else:
            raise CatalogError(f"no such file or directory: {p}")
    return out


def format_table(G: Group, label: str | None = None) -> str:
    n = G.order
    t = G.table
    if t is None:
        t = G.mul_many(np.arange(n)[:, None], np.arange(n)[None, :])
    lines = [f"group {label or G.label or 'G'}", f"table {n}"]
    lines.extend(" ".join(str(int(v)) for v in row) for row in t)
    return "\n".join(lines) + "\n"


def format_perm(G: Group, label: str | None = None) -> str:
    perms, degree = G.permutation_generators()
    lines = [f"group {label or G.label or 'G'}", f"perm {degree}"]
    lines.extend(" ".join(str(int(v) + 1) for v in p) for p in perms)
    return "\n".join(lines) + "\n"
