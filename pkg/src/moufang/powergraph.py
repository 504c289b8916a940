"""Directed and undirected power graphs and the statistics built on them.

The directed power graph has an arc x -> y (x != y) exactly when y lies in
the cyclic subloop <x>; the undirected power graph is its symmetrization.
Self-loops are dropped so that standard simple-graph tooling applies.
"""

from __future__ import annotations

import numpy as np

from .errors import NotPowerAssociative, OrderTooLarge

CLIQUE_ORDER_LIMIT = 256


class Digraph:
    """Simple digraph on vertices 0..n-1, stored as a boolean matrix."""

    directed = True

    def __init__(self, matrix):
        m = np.asarray(matrix, dtype=bool)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"adjacency matrix must be square, got {m.shape}")
        if m.diagonal().any():
            raise ValueError("self-loops are not allowed")
        m.flags.writeable = False
        self.n = m.shape[0]
        self.matrix = m

    @classmethod
    def from_edges(cls, n, edges):
        m = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            m[u, v] = True
        return cls(m)

    def out_neighbors(self, v):
        return [int(u) for u in np.flatnonzero(self.matrix[v])]

    def in_neighbors(self, v):
        return [int(u) for u in np.flatnonzero(self.matrix[:, v])]

    def edges(self):
        return [(int(u), int(v)) for u, v in zip(*np.nonzero(self.matrix))]

    @property
    def edge_count(self):
        return int(self.matrix.sum())

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.edge_count})"


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    directed = False

    def __init__(self, matrix):
        m = np.asarray(matrix, dtype=bool)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"adjacency matrix must be square, got {m.shape}")
        if m.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if not (m == m.T).all():
            raise ValueError("adjacency matrix must be symmetric")
        m.flags.writeable = False
        self.n = m.shape[0]
        self.matrix = m

    @classmethod
    def from_edges(cls, n, edges):
        m = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            m[u, v] = m[v, u] = True
        return cls(m)

    def neighbors(self, v):
        return [int(u) for u in np.flatnonzero(self.matrix[v])]

    def degree(self, v):
        return int(self.matrix[v].sum())

    def edges(self):
        return [(int(u), int(v)) for u, v in zip(*np.nonzero(self.matrix)) if u < v]

    @property
    def edge_count(self):
        return int(self.matrix.sum()) // 2

    def is_complete(self):
        return self.edge_count == self.n * (self.n - 1) // 2

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def directed_power_graph(loop) -> Digraph:
    """Arcs x -> y for every y in <x> other than x itself."""
    cached = loop._cache.get("directed_power_graph")
    if cached is not None:
        return cached
    if not loop.is_power_associative():
        raise NotPowerAssociative("power graphs need unambiguous powers")
    n = loop.n
    m = np.zeros((n, n), dtype=bool)
    for x in range(n):
        for y in loop.cyclic_closure(x):
            if y != x:
                m[x, y] = True
    g = Digraph(m)
    loop._cache["directed_power_graph"] = g
    return g


def undirected_power_graph(loop) -> Graph:
    """An edge between x and y when either is a power of the other."""
    cached = loop._cache.get("undirected_power_graph")
    if cached is not None:
        return cached
    d = directed_power_graph(loop).matrix
    g = Graph(d | d.T)
    loop._cache["undirected_power_graph"] = g
    return g


def underlying(d: Digraph) -> Graph:
    """Forget arc directions."""
    return Graph(d.matrix | d.matrix.T)


def universal_vertices(g: Graph) -> set:
    """Vertices adjacent to all others."""
    return {int(v) for v in np.flatnonzero(g.matrix.sum(axis=1) == g.n - 1)}


def max_clique(g: Graph) -> int:
    """Exact maximum clique size, branch and bound with a coloring bound."""
    if g.n > CLIQUE_ORDER_LIMIT:
        raise OrderTooLarge(f"max_clique capped at {CLIQUE_ORDER_LIMIT} vertices, got {g.n}")
    n = g.n
    if n == 0:
        return 0
    nb = [0] * n
    for u, v in zip(*np.nonzero(g.matrix)):
        nb[int(u)] |= 1 << int(v)
    order = sorted(range(n), key=lambda v: -bin(nb[v]).count("1"))
    best = 0

    def color_bound(cand):
        """Greedy coloring upper bound; returns vertices sorted by color."""
        colors = []
        ordered = []
        rest = cand
        while rest:
            cls = rest
            color_mask = 0
            while cls:
                low = cls & -cls
                v = low.bit_length() - 1
                color_mask |= low
                cls &= ~nb[v] & ~low
            colors.append(color_mask)
            rest &= ~color_mask
        for ci, mask in enumerate(colors, start=1):
            mm = mask
            while mm:
                low = mm & -mm
                ordered.append((low.bit_length() - 1, ci))
                mm ^= low
        return ordered

    def expand(cand, size):
        nonlocal best
        ordered = color_bound(cand)
        for v, bound in reversed(ordered):
            if size + bound <= best:
                return
            cand &= ~(1 << v)
            if size + 1 > best:
                best = size + 1
            nxt = cand & nb[v]
            if nxt:
                expand(nxt, size + 1)

    full = 0
    for v in order:
        full |= 1 << v
    expand(full, 0)
    return best


def closed_twin_classes(g: Graph) -> list:
    """Partition by equal closed neighborhoods N[x], ordered by least member."""
    groups = {}
    for v in range(g.n):
        key = frozenset(g.neighbors(v)) | {v}
        groups.setdefault(key, []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])
