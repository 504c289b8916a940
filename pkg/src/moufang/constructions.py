"""Loop families and the verification corpus.

Builds cyclic, dihedral and generalized quaternion groups, direct products,
Chein doubles M(G,2;c) on G u Gu, and the generalized octonion loops
M(Q_4m,2).  The corpus assembles all of these up to a cutoff order and
deduplicates up to loop isomorphism.

Element encodings are fixed: quaternion Q_4m puts a^i at index i (i < 2m)
and a^i b at index 2m + i; a Chein double keeps the base group at indices
0..|G|-1 and puts gu at index |G| + g.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import canon
from .core import CayleyTable, Loop, Subloop
from .errors import BaseNotGroup, NoDecomposition, NotCentral, OrderTooLarge, ParamTooSmall

CORPUS_ORDER_LIMIT = 64


@dataclass(frozen=True)
class CorpusEntry:
    """A constructed loop tagged with the recipe that produced it."""

    loop: Loop
    label: str
    order: int

    def __post_init__(self):
        if self.loop.n != self.order:
            raise ValueError(f"{self.label}: recipe predicts order {self.order}, table has {self.loop.n}")


@dataclass(frozen=True)
class CheinParams:
    """Validated input of the doubling construction."""

    base: Loop
    c: int

    def __post_init__(self):
        if not self.base.is_associative():
            raise BaseNotGroup("Chein doubling requires an associative base")
        if self.c not in self.base.center():
            raise NotCentral(f"element {self.c} is not central in the base group")
        if self.base.mul(self.c, self.c) != 0:
            # The doubled loop has two-sided inverses only when c = c^-1, so
            # central elements of order > 2 never produce a Moufang loop.
            raise NotCentral(f"element {self.c} must square to the identity")


def cyclic(n: int) -> Loop:
    if n < 1:
        raise ParamTooSmall("cyclic group order must be at least 1")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    names = [_pow_name("g", i) for i in range(n)]
    return Loop(CayleyTable(table), names=names)


def dihedral(m: int) -> Loop:
    """Symmetries of the m-gon, order 2m; index i is r^i, index m+i is r^i s."""
    if m < 1:
        raise ParamTooSmall("dihedral parameter must be at least 1")
    n = 2 * m
    table = np.zeros((n, n), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            table[i, j] = (i + j) % m
            table[i, m + j] = m + (i + j) % m       # r^i (r^j s) = r^{i+j} s
            table[m + i, j] = m + (i - j) % m       # (r^i s) r^j = r^{i-j} s
            table[m + i, m + j] = (i - j) % m       # (r^i s)(r^j s) = r^{i-j}
    names = [_pow_name("r", i) for i in range(m)] + [_pow_name("r", i, "s") for i in range(m)]
    return Loop(CayleyTable(table), names=names)


def direct_product(l1: Loop, l2: Loop) -> Loop:
    """Componentwise product; index of (x, y) is x * |l2| + y."""
    n1, n2 = l1.n, l2.n
    t1, t2 = l1.table, l2.table
    table = (t1[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    names = None
    if l1.names is not None and l2.names is not None:
        names = [f"({a},{b})" for a in l1.names for b in l2.names]
    return Loop(CayleyTable(table), names=names)


def generalized_quaternion(m: int) -> Loop:
    """Q_4m from the presentation a^m = b^2, a^2m = 1, b^-1 a b = a^-1."""
    if m < 2:
        raise ParamTooSmall("generalized quaternion requires m >= 2 (m = 1 degenerates to Z_4)")
    k = 2 * m
    n = 4 * m
    table = np.zeros((n, n), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            table[i, j] = (i + j) % k                  # a^i a^j
            table[i, k + j] = k + (i + j) % k          # a^i (a^j b) = a^{i+j} b
            table[k + i, j] = k + (i - j) % k          # (a^i b) a^j = a^{i-j} b
            table[k + i, k + j] = (i - j + m) % k      # (a^i b)(a^j b) = a^{i-j} b^2
    names = [_pow_name("a", i) for i in range(k)] + [_pow_name("a", i, "b") for i in range(k)]
    return Loop(CayleyTable(table), names=names)


def chein_double(base: Loop, c: int, strict_paper: bool = False) -> Loop:
    """M(G,2;c): the loop on G u Gu with gh, (hg)u, (g h^-1)u and c h^-1 g.

    c must be a central element with c^2 = 1; the identity is allowed by
    default (the classical M(G,2) catalog), while strict_paper additionally
    enforces c != 1 as in the doubling theorem's printed statement.
    """
    params = CheinParams(base, c)
    if strict_paper and c == 0:
        raise NotCentral("strict mode: c must differ from the identity")
    t = base.table
    n = base.n
    inv = np.array([base.inv(x) for x in range(n)], dtype=np.int64)
    table = np.zeros((2 * n, 2 * n), dtype=np.int64)
    table[:n, :n] = t
    table[:n, n:] = n + t.T                  # g (hu) = (hg)u
    table[n:, :n] = n + t[:, inv]            # (gu) h = (g h^-1) u
    table[n:, n:] = t[t[params.c, inv]].T    # (gu)(hu) = (c h^-1) g
    names = None
    if base.names is not None:
        names = list(base.names) + [f"{g}u" if g != "1" else "u" for g in base.names]
    return Loop(CayleyTable(table), names=names)


def generalized_octonion(m: int) -> Loop:
    """O_8m = M(Q_4m, 2) doubled over the unique involution a^m."""
    q = generalized_quaternion(m)
    return chein_double(q, m)


def _pow_name(sym: str, i: int, suffix: str = "") -> str:
    if i == 0:
        return suffix or "1"
    head = sym if i == 1 else f"{sym}^{i}"
    return head + suffix


# -- Chein recognition --------------------------------------------------


def _chein_candidates(m: Loop):
    """Yield (G, u, c) witnesses satisfying the doubling hypotheses of m."""
    if m.n % 2 != 0:
        return
    n = m.n
    half = n // 2
    for sub in m.all_subloops():
        if len(sub) != half or not sub.is_group():
            continue
        g_set = set(sub.elements)
        g_loop = sub.to_loop()
        local = {e: i for i, e in enumerate(sub.elements)}
        for u in range(n):
            if u in g_set:
                continue
            c = m.mul(u, u)
            if c not in g_set:
                continue  # u^2 outside G means the factorization exponent is not 2
            # u^2 must lie in the nucleus of <u^2, G> (= G here).
            if local[c] not in g_loop.nucleus():
                continue
            # Conjugation by u must map G into itself.
            try:
                u_inv = m.inv(u)
            except Exception:
                continue
            theta = {}
            ok = True
            for g in sub.elements:
                img = m.mul(u_inv, m.mul(g, u))
                if img not in g_set:
                    ok = False
                    break
                theta[g] = img
            if not ok or set(theta.values()) != g_set:
                continue
            # Each element must factor uniquely as g u^alpha.
            coset = [m.mul(g, u) for g in sub.elements]
            if set(coset) & g_set or len(set(coset)) != half:
                continue
            yield sub, u, c, g_loop, local, theta, coset


def _matches_doubling_rules(m: Loop, sub: Subloop, u: int, c: int, coset) -> bool:
    """Exact table check of the four M(G,2;c) rules under g -> g, gu -> g*u."""
    t = m.table
    elems = sub.elements
    pos = {g: i for i, g in enumerate(elems)}
    for gi, g in enumerate(elems):
        gu = coset[gi]
        for hi, h in enumerate(elems):
            hu = coset[hi]
            hg = int(t[h, g])
            if int(t[g, hu]) != coset[pos[hg]]:
                return False
            ghinv = int(t[g, m.inv(h)])
            if int(t[gu, h]) != coset[pos[ghinv]]:
                return False
            chg = int(t[t[c, m.inv(h)], g])
            if int(t[gu, hu]) != chg:
                return False
    return True


def _matches_general_formula(m: Loop, sub: Subloop, u: int, theta, coset) -> bool:
    """Check the k=2 specialization of the general doubling formula.

    With theta the actual conjugation by u and g0 = u^2, products must equal
    [theta^-beta(theta^beta(g1) theta^{beta-alpha}(g2)) g0^eps] u^rho.
    """
    t = m.table
    elems = sub.elements
    pos = {g: i for i, g in enumerate(elems)}
    theta_inv = {v: k for k, v in theta.items()}
    g0 = m.mul(u, u)

    def theta_pow(g, e):
        f = theta if e > 0 else theta_inv
        for _ in range(abs(e)):
            g = f[g]
        return g

    for alpha in (0, 1):
        for beta in (0, 1):
            eps = (alpha + beta) // 2
            rho = alpha + beta - 2 * eps
            for g1 in elems:
                lhs_x = g1 if alpha == 0 else coset[pos[g1]]
                for g2 in elems:
                    lhs_y = g2 if beta == 0 else coset[pos[g2]]
                    inner = int(t[theta_pow(g1, beta), theta_pow(g2, beta - alpha)])
                    word = theta_pow(inner, -beta)
                    if eps:
                        word = int(t[word, g0])
                    expect = word if rho == 0 else coset[pos[word]]
                    if int(t[lhs_x, lhs_y]) != expect:
                        return False
    return True


def chein_recognize(m: Loop, witness_filter=None):
    """Find (G, u, c) exhibiting m as a Chein double of an index-2 group.

    Searches index-2 subloops that are groups together with outside elements
    u, requiring u^2 in the nucleus of <u^2, G> and conjugation by u to fix G
    setwise.  A witness is accepted when the four doubling rules hold under
    the natural correspondence, or when the general k=2 formula holds and the
    rebuilt double is loop-isomorphic to m.  witness_filter, if given, must
    accept (G, u, c) for a witness to count.
    """
    for sub, u, c, g_loop, local, theta, coset in _chein_candidates(m):
        if witness_filter is not None and not witness_filter(sub, u, c):
            continue
        if _matches_doubling_rules(m, sub, u, c, coset):
            return sub, u, c
        if _matches_general_formula(m, sub, u, theta, coset):
            try:
                rebuilt = chein_double(g_loop, local[c])
            except (BaseNotGroup, NotCentral):
                continue
            if canon.loop_isomorphic(rebuilt, m) is not None:
                return sub, u, c
    raise NoDecomposition(f"no index-2 group/element pair reproduces the order-{m.n} table")


# -- corpus -------------------------------------------------------------


def _abelian_factorizations(max_order: int):
    """Non-increasing factor tuples (each >= 2, at least two factors)."""
    out = []

    def rec(prefix, cap, budget):
        for f in range(min(cap, budget), 1, -1):
            tup = prefix + (f,)
            if len(tup) >= 2:
                out.append(tup)
            if budget // f >= 2:
                rec(tup, f, budget // f)

    rec((), max_order, max_order)
    return sorted(out, key=lambda t: (int(np.prod(t)), len(t), t))


def _quick_invariants(loop: Loop):
    return (
        loop.n,
        loop.is_associative(),
        loop.is_commutative(),
        tuple(sorted(loop.element_order_counts().items())),
    )


def build_corpus(max_order: int, strict_paper: bool = False) -> list:
    """Deterministic corpus of constructed loops, deduplicated up to isomorphism.

    Contains cyclic groups, multi-factor abelian products, dihedral and
    generalized quaternion groups, and the Chein double of every nonabelian
    group in the list with each admissible central c (including the identity
    unless strict_paper is set).
    """
    if max_order > CORPUS_ORDER_LIMIT:
        raise OrderTooLarge(f"corpus capped at order {CORPUS_ORDER_LIMIT}, got {max_order}")
    raw = []
    for n in range(1, max_order + 1):
        raw.append(CorpusEntry(cyclic(n), f"Z_{n}", n))
    for factors in _abelian_factorizations(max_order):
        loop = cyclic(factors[0])
        for f in factors[1:]:
            loop = direct_product(loop, cyclic(f))
        raw.append(CorpusEntry(loop, "x".join(f"Z_{f}" for f in factors), int(np.prod(factors))))
    for m in range(3, max_order // 2 + 1):
        raw.append(CorpusEntry(dihedral(m), f"D_{m}", 2 * m))
    for m in range(2, max_order // 4 + 1):
        raw.append(CorpusEntry(generalized_quaternion(m), f"Q_{4 * m}", 4 * m))

    doubles = []
    for entry in raw:
        g = entry.loop
        if 2 * g.n > max_order or not g.is_associative() or g.is_commutative():
            continue
        for c in g.center().elements:
            if g.mul(c, c) != 0:
                continue
            if strict_paper and c == 0:
                continue
            doubles.append(
                CorpusEntry(
                    chein_double(g, c, strict_paper=strict_paper),
                    f"M({entry.label},2;c={g.name_of(c)})",
                    2 * g.n,
                )
            )
    raw.extend(doubles)
    raw.sort(key=lambda e: e.order)

    kept = []
    buckets = {}
    for entry in raw:
        key = _quick_invariants(entry.loop)
        dup = False
        for other in buckets.get(key, ()):
            if canon.loop_isomorphic(entry.loop, other.loop) is not None:
                dup = True
                break
        if not dup:
            kept.append(entry)
            buckets.setdefault(key, []).append(entry)
    return kept
