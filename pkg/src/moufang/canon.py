"""Exact canonical forms and isomorphism tests for small graphs and loops.

Canonical labeling runs iterated neighborhood-count refinement plus
backtracking over the cells of the stable partition, returning the
lexicographically least adjacency encoding over all explored labelings.
Two prunings keep highly symmetric inputs (complete graphs, power graphs
with large twin classes) tractable without changing the result: subtrees
reachable from a candidate equivalent to an already-explored one under a
discovered prefix-fixing automorphism are skipped, and a node whose cells
are all pairwise homogeneous contributes a single labeling because every
completion encodes identically.
"""

from __future__ import annotations

import numpy as np

from .errors import OrderTooLarge

CANON_ORDER_LIMIT = 512
LOOP_ISO_ORDER_LIMIT = 128


def _masks_from_matrix(matrix: np.ndarray):
    n = matrix.shape[0]
    out = [0] * n
    inn = [0] * n
    for u, v in zip(*np.nonzero(matrix)):
        out[int(u)] |= 1 << int(v)
        inn[int(v)] |= 1 << int(u)
    return out, inn


def _cell_mask(cell):
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(partition, out_nb, in_nb, directed):
    """Equitable refinement; subcells are ordered by their count keys."""
    part = [list(c) for c in partition]
    while True:
        masks = [_cell_mask(c) for c in part]
        new_part = []
        changed = False
        for cell in part:
            if len(cell) == 1:
                new_part.append(cell)
                continue
            keyed = {}
            for v in cell:
                if directed:
                    key = tuple(
                        ((out_nb[v] & mk).bit_count(), (in_nb[v] & mk).bit_count())
                        for mk in masks
                    )
                else:
                    key = tuple((out_nb[v] & mk).bit_count() for mk in masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) > 1:
                changed = True
            for key in sorted(keyed):
                new_part.append(keyed[key])
        part = new_part
        if not changed:
            return part


def _is_homogeneous(partition, masks, out_nb):
    """True when adjacency is constant within and between all cells."""
    for i, cell in enumerate(partition):
        for j, mj in enumerate(masks):
            if i == j:
                if len(cell) == 1:
                    continue
                first = out_nb[cell[0]] & mj
                if first == 0:
                    if any(out_nb[v] & mj for v in cell[1:]):
                        return False
                elif all(out_nb[v] & mj == mj ^ (1 << v) for v in cell):
                    continue
                else:
                    return False
            else:
                first = out_nb[cell[0]] & mj
                if first != 0 and first != mj:
                    return False
                if any(out_nb[v] & mj != first for v in cell[1:]):
                    return False
    return True


def _encode(perm, out_nb, n, directed):
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    big = 0
    for i in range(n):
        row = 0
        mm = out_nb[perm[i]]
        while mm:
            low = mm & -mm
            row |= 1 << (n - 1 - pos[low.bit_length() - 1])
            mm ^= low
        big = (big << n) | row
    head = (b"D" if directed else b"U") + n.to_bytes(4, "big")
    return head + big.to_bytes((n * n + 7) // 8, "big")


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _canonical_bytes(n, out_nb, in_nb, directed):
    if n == 0:
        return (b"D" if directed else b"U") + (0).to_bytes(4, "big")
    best = {"code": None, "perm": None}
    autos = []  # discovered automorphisms, as position->vertex image arrays

    def visit_leaf(perm):
        code = _encode(perm, out_nb, n, directed)
        if best["code"] is None or code < best["code"]:
            best["code"] = code
            best["perm"] = perm
        elif code == best["code"] and perm != best["perm"]:
            sigma = [0] * n
            for bp, pp in zip(best["perm"], perm):
                sigma[bp] = pp
            autos.append(sigma)

    def dfs(partition, fixed):
        masks = [_cell_mask(c) for c in partition]
        if _is_homogeneous(partition, masks, out_nb):
            visit_leaf([v for cell in partition for v in cell])
            return
        target = min(
            (i for i, c in enumerate(partition) if len(c) > 1),
            key=lambda i: (len(partition[i]), i),
        )
        cell = partition[target]
        uf = _UnionFind(n)
        seen_autos = 0

        def absorb():
            nonlocal seen_autos
            while seen_autos < len(autos):
                sigma = autos[seen_autos]
                seen_autos += 1
                if all(sigma[f] == f for f in fixed):
                    for v in range(n):
                        uf.union(v, sigma[v])

        absorb()
        processed = []
        for v in cell:
            absorb()
            rv = uf.find(v)
            if any(uf.find(w) == rv for w in processed):
                continue
            rest = [w for w in cell if w != v]
            child = partition[:target] + [[v], rest] + partition[target + 1 :]
            dfs(_refine(child, out_nb, in_nb, directed), fixed + (v,))
            processed.append(v)

    initial = _refine([list(range(n))], out_nb, in_nb, directed)
    dfs(initial, ())
    return best["code"]


def canonical_form(g) -> bytes:
    """Permutation-invariant byte encoding of a graph or digraph."""
    if g.n > CANON_ORDER_LIMIT:
        raise OrderTooLarge(f"canonical form capped at {CANON_ORDER_LIMIT} vertices, got {g.n}")
    cached = getattr(g, "_canon_cache", None)
    if cached is None:
        out_nb, in_nb = _masks_from_matrix(g.matrix)
        cached = _canonical_bytes(g.n, out_nb, in_nb, g.directed)
        g._canon_cache = cached
    return cached


def are_isomorphic(g1, g2) -> bool:
    """Equality of canonical forms (directedness is part of the form)."""
    return canonical_form(g1) == canonical_form(g2)


# -- loop isomorphism ----------------------------------------------------


def _left_order(table: np.ndarray, x: int) -> int:
    """Cycle length of the identity under right-multiplication by x."""
    k, y = 1, x
    while y != 0:
        y = int(table[y, x])
        k += 1
    return k


def _greedy_generators(loop) -> list:
    """Generating sequence picked by largest closure growth, ties by index."""
    gens = []
    covered = loop._close_mask(())
    while not covered.all():
        best_x, best_size = -1, -1
        for x in range(loop.n):
            if covered[x]:
                continue
            size = int(loop._close_mask(tuple(gens) + (x,)).sum())
            if size > best_size:
                best_x, best_size = x, size
        gens.append(best_x)
        covered = loop._close_mask(tuple(gens))
    return gens


def _propagate(t1, t2, assignments, n):
    """Grow a partial map from generator images by closing under products."""
    phi = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    phi[0] = 0
    used[0] = True
    for a, b in assignments:
        if phi[a] == -1:
            if used[b]:
                return None
            phi[a] = b
            used[b] = True
        elif phi[a] != b:
            return None
    while True:
        known = np.flatnonzero(phi >= 0)
        p1 = t1[np.ix_(known, known)].ravel()
        p2 = t2[np.ix_(phi[known], phi[known])].ravel()
        ph = phi[p1]
        if ((ph >= 0) & (ph != p2)).any():
            return None
        fresh = ph < 0
        if not fresh.any():
            return phi
        for c, d in zip(p1[fresh].tolist(), p2[fresh].tolist()):
            if phi[c] == -1:
                if used[d]:
                    return None
                phi[c] = d
                used[d] = True
            elif phi[c] != d:
                return None


def loop_isomorphic(l1, l2):
    """A multiplication-preserving bijection between two loops, or None.

    Backtracks over images of a greedy generating set of l1, pruning by
    element order and by consistency of the partially propagated map.
    """
    if l1.n > LOOP_ISO_ORDER_LIMIT or l2.n > LOOP_ISO_ORDER_LIMIT:
        raise OrderTooLarge(f"loop isomorphism capped at order {LOOP_ISO_ORDER_LIMIT}")
    if l1.n != l2.n:
        return None
    n = l1.n
    t1, t2 = l1.table, l2.table
    orders1 = [_left_order(t1, x) for x in range(n)]
    orders2 = [_left_order(t2, x) for x in range(n)]
    if sorted(orders1) != sorted(orders2):
        return None
    if l1.is_associative() != l2.is_associative():
        return None
    if l1.is_commutative() != l2.is_commutative():
        return None
    gens = _greedy_generators(l1)
    candidates = {
        g: [x for x in range(n) if orders2[x] == orders1[g]] for g in gens
    }

    def search(i, assignments):
        phi = _propagate(t1, t2, assignments, n)
        if phi is None:
            return None
        if i == len(gens):
            if (phi[t1] == t2[phi[:, None], phi[None, :]]).all():
                return [int(v) for v in phi]
            return None
        a = gens[i]
        if phi[a] >= 0:
            return search(i + 1, assignments + [(a, int(phi[a]))])
        taken = set(int(v) for v in phi if v >= 0)
        for b in candidates[a]:
            if b in taken:
                continue
            found = search(i + 1, assignments + [(a, b)])
            if found is not None:
                return found
        return None

    return search(0, [])
