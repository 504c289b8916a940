import random

import numpy as np
import pytest

from moufang import (
    Digraph,
    Graph,
    are_isomorphic,
    canonical_form,
    cyclic,
    dihedral,
    direct_product,
    directed_power_graph,
    generalized_octonion,
    generalized_quaternion,
    generate_octonion_subloop,
    loop_isomorphic,
    undirected_power_graph,
    validate_table,
)
from moufang.errors import OrderTooLarge
from oracles import brute_force_graph_isomorphic, permute_matrix, permute_table


def shuffled_graph(g, perm):
    cls = Digraph if g.directed else Graph
    return cls(np.array(permute_matrix(g.matrix.tolist(), perm), dtype=bool))


def random_graph(rng, n, p=0.5, directed=False):
    m = np.zeros((n, n), dtype=bool)
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            if directed:
                m[u, v] = rng.random() < p
            elif u < v:
                m[u, v] = m[v, u] = rng.random() < p
    return Digraph(m) if directed else Graph(m)


def test_canonical_form_permutation_invariance(corpus16):
    rng = random.Random(7)
    for entry in corpus16:
        g = undirected_power_graph(entry.loop)
        base = canonical_form(g)
        for _ in range(5):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(shuffled_graph(g, perm)) == base, entry.label


def test_canonical_form_many_permutations_of_z8():
    rng = random.Random(11)
    g = undirected_power_graph(cyclic(8))
    base = canonical_form(g)
    for _ in range(100):
        perm = list(range(8))
        rng.shuffle(perm)
        assert canonical_form(shuffled_graph(g, perm)) == base


def test_digraph_canonical_form_invariance(corpus16):
    rng = random.Random(23)
    for entry in corpus16[:20]:
        g = directed_power_graph(entry.loop)
        base = canonical_form(g)
        for _ in range(3):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(shuffled_graph(g, perm)) == base, entry.label


def test_k4_differs_from_c4():
    k4 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert canonical_form(k4) != canonical_form(c4)


def test_directedness_is_part_of_the_form():
    g = Graph.from_edges(2, [(0, 1)])
    d = Digraph.from_edges(2, [(0, 1), (1, 0)])
    assert canonical_form(g) != canonical_form(d)
    assert not are_isomorphic(g, d)


def test_are_isomorphic_basics():
    g = undirected_power_graph(cyclic(6))
    assert are_isomorphic(g, g)
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert not are_isomorphic(star, path)


def test_q8_vs_z8_power_graphs_differ(q8):
    assert not are_isomorphic(
        undirected_power_graph(q8), undirected_power_graph(cyclic(8))
    )


def test_are_isomorphic_matches_bruteforce_random():
    rng = random.Random(99)
    graphs = [random_graph(rng, rng.randint(2, 7)) for _ in range(60)]
    for g in graphs[:30]:
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = shuffled_graph(g, perm)
        assert are_isomorphic(g, h)
        assert brute_force_graph_isomorphic(g.matrix.tolist(), h.matrix.tolist())
    by_n = {}
    for g in graphs:
        by_n.setdefault(g.n, []).append(g)
    checked = 0
    for group in by_n.values():
        for a, b in zip(group, group[1:]):
            expect = brute_force_graph_isomorphic(a.matrix.tolist(), b.matrix.tolist())
            assert are_isomorphic(a, b) == expect
            checked += 1
    assert checked > 10


def test_digraph_isomorphism_matches_bruteforce():
    rng = random.Random(5)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 5), directed=True)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = shuffled_graph(g, perm)
        assert are_isomorphic(g, h)
    a = random_graph(rng, 5, directed=True)
    b = random_graph(rng, 5, directed=True)
    expect = brute_force_graph_isomorphic(a.matrix.tolist(), b.matrix.tolist(), directed=True)
    assert are_isomorphic(a, b) == expect


def test_canonical_form_guard():
    with pytest.raises(OrderTooLarge):
        canonical_form(Graph(np.zeros((600, 600), dtype=bool)))


def test_loop_isomorphic_identity(q8):
    phi = loop_isomorphic(q8, q8)
    assert phi is not None
    assert phi[0] == 0


def test_loop_isomorphic_rejects_different_exponent():
    assert loop_isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2))) is None


def test_loop_isomorphic_relabelled(q8, o16):
    rng = random.Random(3)
    for loop in (q8, o16, dihedral(6)):
        perm = [0] + rng.sample(range(1, loop.n), loop.n - 1)
        other = validate_table(permute_table(loop.table.tolist(), perm))
        phi = loop_isomorphic(loop, other)
        assert phi is not None
        t1, t2 = loop.table, other.table
        for x in range(loop.n):
            for y in range(loop.n):
                assert phi[t1[x, y]] == t2[phi[x], phi[y]]


def test_loop_isomorphic_octonion_witness(o16):
    w = generate_octonion_subloop(2)
    assert loop_isomorphic(o16, w.loop) is not None


def test_loop_isomorphic_symmetric(q8):
    perm = [0, 3, 1, 6, 2, 5, 7, 4]
    other = validate_table(permute_table(q8.table.tolist(), perm))
    phi = loop_isomorphic(q8, other)
    psi = loop_isomorphic(other, q8)
    assert phi is not None and psi is not None
    inverse = [0] * 8
    for x, y in enumerate(phi):
        inverse[y] = x
    t1, t2 = other.table, q8.table
    for x in range(8):
        for y in range(8):
            assert inverse[t1[x, y]] == t2[inverse[x], inverse[y]]


def test_loop_isomorphic_implications(corpus16):
    # one-way checks: isomorphic loops share order multisets, subloop
    # counts, and power graph classes
    import itertools

    pairs = 0
    rng = random.Random(17)
    for entry in corpus16:
        if entry.order > 12 or pairs >= 6:
            continue
        loop = entry.loop
        perm = [0] + rng.sample(range(1, loop.n), loop.n - 1)
        other = validate_table(permute_table(loop.table.tolist(), perm))
        assert loop_isomorphic(loop, other) is not None
        assert sorted(loop.element_order_counts().items()) == sorted(
            other.element_order_counts().items()
        )
        assert len(loop.all_subloops()) == len(other.all_subloops())
        assert are_isomorphic(
            undirected_power_graph(loop), undirected_power_graph(other)
        )
        pairs += 1
    assert pairs > 0


def test_loop_isomorphic_guard():
    import moufang.canon as canon_mod

    class FakeLoop:
        n = 200

    with pytest.raises(OrderTooLarge):
        canon_mod.loop_isomorphic(FakeLoop(), FakeLoop())


def test_octonion_not_isomorphic_to_quaternion_double():
    from moufang import chein_double

    m = chein_double(generalized_quaternion(2), 0)  # c = 1: nine involutions
    assert loop_isomorphic(m, generalized_octonion(2)) is None
