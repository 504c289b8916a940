"""Text file formats: .tbl tables, .edg edge lists, DOT, manifests, witness dumps.

All formats are line-oriented with 0-based indices and fixed field orders so
that outputs diff cleanly and parse trivially elsewhere.
"""

from __future__ import annotations

import os

from .core import Loop, validate_table
from .errors import ParseError
from .powergraph import Digraph, Graph


def write_table(path, loop: Loop):
    """.tbl: first line n, then n rows of n space-separated indices."""
    with open(path, "w") as fh:
        fh.write(f"{loop.n}\n")
        for row in loop.table:
            fh.write(" ".join(str(int(v)) for v in row) + "\n")


def read_table(path) -> Loop:
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ParseError("empty table file", path, 1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"expected the order, got {lines[0]!r}", path, 1) from None
    if n < 1:
        raise ParseError(f"order must be positive, got {n}", path, 1)
    if len(lines) < n + 1:
        raise ParseError(f"expected {n} rows, file has {len(lines) - 1}", path, len(lines))
    rows = []
    for i in range(1, n + 1):
        parts = lines[i].split()
        if len(parts) != n:
            raise ParseError(f"expected {n} entries, got {len(parts)}", path, i + 1)
        try:
            rows.append([int(p) for p in parts])
        except ValueError:
            raise ParseError(f"non-integer entry in {lines[i]!r}", path, i + 1) from None
        if any(v < 0 or v >= n for v in rows[-1]):
            raise ParseError(f"entry out of range [0, {n})", path, i + 1)
    try:
        return validate_table(rows)
    except Exception as exc:
        raise ParseError(f"not a valid loop table: {exc}", path) from exc


def write_graph(path, g):
    """.edg: header "n m d" with d = 1 for directed, then one edge per line."""
    edges = g.edges()
    with open(path, "w") as fh:
        fh.write(f"{g.n} {len(edges)} {1 if g.directed else 0}\n")
        for u, v in edges:
            fh.write(f"{u} {v}\n")


def read_graph(path):
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ParseError("empty graph file", path, 1)
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError(f'expected header "n m d", got {lines[0]!r}', path, 1)
    try:
        n, m, d = (int(p) for p in head)
    except ValueError:
        raise ParseError(f"non-integer header field in {lines[0]!r}", path, 1) from None
    if d not in (0, 1):
        raise ParseError(f"directed flag must be 0 or 1, got {d}", path, 1)
    if len(lines) < m + 1:
        raise ParseError(f"expected {m} edges, file has {len(lines) - 1}", path, len(lines))
    edges = []
    for i in range(1, m + 1):
        parts = lines[i].split()
        if len(parts) != 2:
            raise ParseError(f'expected "u v", got {lines[i]!r}', path, i + 1)
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer endpoint in {lines[i]!r}", path, i + 1) from None
    cls = Digraph if d else Graph
    try:
        return cls.from_edges(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc), path) from exc


def write_dot(path, g, labels=None, name="powergraph"):
    """DOT export; labels default to vertex indices."""
    arrow = "->" if g.directed else "--"
    kind = "digraph" if g.directed else "graph"
    with open(path, "w") as fh:
        fh.write(f"{kind} {name} {{\n")
        for v in range(g.n):
            label = labels[v] if labels is not None else str(v)
            fh.write(f'  {v} [label="{label}"];\n')
        for u, v in g.edges():
            fh.write(f"  {u} {arrow} {v};\n")
        fh.write("}\n")


def write_corpus_manifest(path, entries, table_dir):
    """One line per entry: label<TAB>order<TAB>table-path, tables alongside."""
    os.makedirs(table_dir, exist_ok=True)
    with open(path, "w") as fh:
        for i, entry in enumerate(entries):
            table_path = os.path.join(table_dir, f"loop{i:03d}.tbl")
            write_table(table_path, entry.loop)
            fh.write(f"{entry.label}\t{entry.order}\t{table_path}\n")


def write_octonion_witness(path, witness):
    """Element coordinates at 17 significant digits, then the .tbl block."""
    n = witness.loop.n
    with open(path, "w") as fh:
        for i, elem in enumerate(witness.elements):
            coords = " ".join(f"{c:.17g}" for c in elem.coords)
            fh.write(f"{i} {coords}\n")
        fh.write(f"{n}\n")
        for row in witness.loop.table:
            fh.write(" ".join(str(int(v)) for v in row) + "\n")
