"""Floating-point unit-octonion arithmetic and numeric subloop generation.

The product is the Cayley-Dickson doubling of quaternion pairs,
(a, b)(c, d) = (ac - conj(d) b, da + b conj(c)), over the basis
e0 = 1, e1 = i, e2 = j, e3 = k, e4 = l, e5 = il, e6 = jl, e7 = kl.
Closing {cos(pi/n) + sin(pi/n) e2, e3, e5} under this product recovers the
order-8n loop with a unique involution, as an exact integer table extracted
by matching products against stored elements within a tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import CayleyTable, Loop, validate_table
from .errors import ClosureOverflow, MatchAmbiguous, ParamTooSmall

GENERATION_ORDER_LIMIT = 64
DEFAULT_EPS = 1e-9


def _qmul(a, b):
    w1, x1, y1, z1 = a
    w2, x2, y2, z2 = b
    return np.array(
        [
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        ]
    )


def _qconj(a):
    return np.array([a[0], -a[1], -a[2], -a[3]])


class Octon:
    """An octonion as 8 real coordinates on the basis e0..e7."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        arr = np.asarray(coords, dtype=np.float64)
        if arr.shape != (8,):
            raise ValueError(f"octonion needs 8 coordinates, got shape {arr.shape}")
        self.coords = arr

    @classmethod
    def basis(cls, i: int) -> "Octon":
        v = np.zeros(8)
        v[i] = 1.0
        return cls(v)

    def __mul__(self, other: "Octon") -> "Octon":
        a, b = self.coords[:4], self.coords[4:]
        c, d = other.coords[:4], other.coords[4:]
        return Octon(
            np.concatenate(
                [_qmul(a, c) - _qmul(_qconj(d), b), _qmul(d, a) + _qmul(b, _qconj(c))]
            )
        )

    def __neg__(self):
        return Octon(-self.coords)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))

    def conjugate(self) -> "Octon":
        v = -self.coords
        v[0] = -v[0]
        return Octon(v)

    def __repr__(self):
        terms = [f"{c:+.3g}e{i}" for i, c in enumerate(self.coords) if abs(c) > 1e-12]
        return "Octon(" + (" ".join(terms) or "0") + ")"


def oct_mul(x: Octon, y: Octon) -> Octon:
    return x * y


def oct_exp_e2(theta: float) -> Octon:
    """cos(theta) + sin(theta) e2, a unit octonion on the (1, e2) circle."""
    v = np.zeros(8)
    v[0] = math.cos(theta)
    v[2] = math.sin(theta)
    return Octon(v)


@dataclass(frozen=True)
class NumericLoopWitness:
    """A numerically closed set of unit octonions with its exact table."""

    elements: list
    table: CayleyTable
    loop: Loop
    eps: float

    def embedding(self, i: int) -> Octon:
        return self.elements[i]


def generate_octonion_subloop(n: int, eps: float = DEFAULT_EPS) -> NumericLoopWitness:
    """Close {e^(e2 pi/n), e3, e5} under multiplication and extract the table.

    Products are matched to stored elements by max-norm distance; a product
    near two stored elements raises MatchAmbiguous (tolerance too coarse),
    and a closure passing 16n elements raises ClosureOverflow (tolerance too
    fine for the accumulated drift).  The closure of these generators has
    exactly 8n elements.
    """
    if n < 2:
        raise ParamTooSmall("octonion subloop generation needs n >= 2")
    if n > GENERATION_ORDER_LIMIT:
        raise ValueError(
            f"n capped at {GENERATION_ORDER_LIMIT}; element separation decays like sin(pi/n)"
        )
    if not eps > 0:
        raise ValueError("eps must be positive")
    limit = 16 * n
    gens = [oct_exp_e2(math.pi / n), Octon.basis(3), Octon.basis(5)]
    elems = [Octon.basis(0)] + gens
    coords = np.stack([e.coords for e in elems])

    def match(vec):
        # A 2*eps guard band keeps matching well-defined: if two stored
        # elements could both sit within eps of one product, or a product
        # lands in the band between eps and 2*eps of something, the
        # tolerance cannot separate drift from distinct elements.
        dist = np.max(np.abs(coords - vec), axis=1)
        near = np.flatnonzero(dist < 2 * eps)
        if len(near) > 1:
            raise MatchAmbiguous(
                f"product within {2 * eps:g} of {len(near)} stored elements; decrease eps"
            )
        if len(near) == 1:
            if dist[near[0]] >= eps:
                raise MatchAmbiguous(
                    f"product at distance {dist[near[0]]:.3g} from element {int(near[0])}, "
                    f"inside the guard band of eps={eps:g}"
                )
            return int(near[0])
        return -1

    table = {}
    frontier = list(range(len(elems)))
    while frontier:
        fresh = []
        pairs = [(i, j) for i in range(len(elems)) for j in frontier]
        pairs += [(i, j) for i in frontier for j in range(len(elems)) if j not in frontier]
        for i, j in pairs:
            p = elems[i] * elems[j]
            k = match(p.coords)
            if k < 0:
                elems.append(p)
                coords = np.vstack([coords, p.coords])
                k = len(elems) - 1
                fresh.append(k)
                if len(elems) > limit:
                    raise ClosureOverflow(
                        f"closure exceeded {limit} elements; eps too small or drift too large"
                    )
            table[(i, j)] = k
        frontier = fresh

    m = len(elems)
    raw = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            raw[i, j] = table[(i, j)]

    # Put the identity (e0, stored first) at index 0; it already is, but the
    # validator would relabel and desynchronize the embedding if not.
    loop = validate_table(raw)
    assert (loop.table == raw).all(), "identity unexpectedly moved during validation"
    witness = NumericLoopWitness(elements=elems, table=loop.cayley, loop=loop, eps=eps)
    _check_embedding(witness)
    return witness


def _check_embedding(w: NumericLoopWitness):
    t = w.table.table
    for i, xi in enumerate(w.elements):
        for j, xj in enumerate(w.elements):
            prod = (xi * xj).coords
            stored = w.elements[int(t[i, j])].coords
            if np.max(np.abs(prod - stored)) >= w.eps:
                raise MatchAmbiguous(
                    f"embedding drift at ({i}, {j}) exceeds eps={w.eps:g}"
                )
