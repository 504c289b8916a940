"""Independent brute-force oracles used to check the library's answers.

Everything here works on plain nested lists with naive loops, deliberately
sharing no code path with the package.
"""

import itertools


def naive_closure(table, seed):
    s = set(seed) | {0}
    while True:
        new = {table[a][b] for a in s for b in s} - s
        if not new:
            return frozenset(s)
        s |= new


def naive_is_associative(table):
    n = len(table)
    rng = range(n)
    return all(
        table[table[x][y]][z] == table[x][table[y][z]]
        for x in rng
        for y in rng
        for z in rng
    )


def naive_is_commutative(table):
    n = len(table)
    return all(table[x][y] == table[y][x] for x in range(n) for y in range(n))


def naive_moufang_checks(table):
    t = table
    rng = range(len(t))
    m1 = all(t[z][t[x][t[z][y]]] == t[t[t[z][x]][z]][y] for x in rng for y in rng for z in rng)
    m2 = all(t[x][t[z][t[y][z]]] == t[t[t[x][z]][y]][z] for x in rng for y in rng for z in rng)
    m3 = all(t[t[z][x]][t[y][z]] == t[t[z][t[x][y]]][z] for x in rng for y in rng for z in rng)
    m4 = all(t[t[z][x]][t[y][z]] == t[z][t[t[x][y]][z]] for x in rng for y in rng for z in rng)
    return (m1, m2, m3, m4)


def naive_element_order(table, x):
    k, y = 1, x
    while y != 0:
        y = table[y][x]
        k += 1
    return k


def naive_two_sided_inverse(table, x):
    n = len(table)
    for y in range(n):
        if table[x][y] == 0 and table[y][x] == 0:
            return y
    return None


def naive_all_subloops(table):
    """Subset enumeration; only usable for small n."""
    n = len(table)
    found = []
    for r in range(n):
        for combo in itertools.combinations(range(1, n), r):
            s = set(combo) | {0}
            if all(table[a][b] in s for a in s for b in s):
                found.append(frozenset(s))
    return found


def naive_power_graph_edges(table):
    """Undirected edge set {x, y} with one a power of the other."""
    n = len(table)
    edges = set()
    for x in range(n):
        for y in naive_closure(table, {x}):
            if y != x:
                edges.add(frozenset((x, y)))
    return edges


def naive_max_clique(adjacency):
    """Exhaustive search over subsets; n must stay tiny, or use nx instead."""
    n = len(adjacency)
    best = 0
    for r in range(n, 0, -1):
        if r <= best:
            break
        for combo in itertools.combinations(range(n), r):
            if all(adjacency[u][v] for u, v in itertools.combinations(combo, 2)):
                best = r
                break
    return best


def brute_force_graph_isomorphic(m1, m2, directed=False):
    """All-permutations isomorphism test for matrices up to ~8 vertices."""
    n = len(m1)
    if n != len(m2):
        return False
    for perm in itertools.permutations(range(n)):
        if all(
            m1[u][v] == m2[perm[u]][perm[v]]
            for u in range(n)
            for v in range(n)
            if directed or u < v
        ):
            return True
    return False


def permute_table(table, perm):
    """Relabel a multiplication table by x -> perm[x]."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            out[perm[x]][perm[y]] = perm[table[x][y]]
    return out


def permute_matrix(matrix, perm):
    n = len(matrix)
    out = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(n):
            out[perm[u]][perm[v]] = matrix[u][v]
    return out
