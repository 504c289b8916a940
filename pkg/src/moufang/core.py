"""Cayley-table loops and exhaustive property checkers.

Every finite loop is stored as an n x n table of element indices with the
two-sided identity at index 0 (validation relabels if needed).  All property
checks are exact scans over the table; at desk scale (n <= 128) the cubic
ones are vectorized with numpy instead of being sampled.
"""

from __future__ import annotations

import math
from collections import Counter

import numpy as np

from .errors import (
    NoIdentity,
    NotLatinSquare,
    NotPowerAssociative,
    NoTwoSidedInverse,
    OrderTooLarge,
)

SUBLOOP_ORDER_LIMIT = 128


def _as_table(raw) -> np.ndarray:
    arr = np.asarray(raw, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ValueError(f"table must be square and non-empty, got shape {arr.shape}")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError(f"table entries must lie in [0, {n})")
    return arr


class CayleyTable:
    """Validated Latin square whose row 0 and column 0 are the identity map."""

    __slots__ = ("n", "table")

    def __init__(self, table):
        arr = _as_table(table)
        n = arr.shape[0]
        ident = np.arange(n)
        if not (np.sort(arr, axis=1) == ident).all():
            raise NotLatinSquare("some row repeats an entry")
        if not (np.sort(arr, axis=0) == ident[:, None]).all():
            raise NotLatinSquare("some column repeats an entry")
        if not ((arr[0] == ident).all() and (arr[:, 0] == ident).all()):
            raise NoIdentity("element 0 is not a two-sided identity")
        arr.flags.writeable = False
        self.n = n
        self.table = arr

    def __repr__(self):
        return f"CayleyTable(n={self.n})"


def validate_table(raw, names=None) -> "Loop":
    """Validate a raw multiplication table and wrap it as a Loop.

    Tables whose two-sided identity sits at an index other than 0 are
    relabeled by the transposition swapping it with 0.
    """
    arr = _as_table(raw)
    n = arr.shape[0]
    ident = np.arange(n)
    if not (np.sort(arr, axis=1) == ident).all():
        raise NotLatinSquare("some row repeats an entry")
    if not (np.sort(arr, axis=0) == ident[:, None]).all():
        raise NotLatinSquare("some column repeats an entry")
    e = -1
    for x in range(n):
        if (arr[x] == ident).all() and (arr[:, x] == ident).all():
            e = x
            break
    if e < 0:
        raise NoIdentity("no two-sided identity element")
    if e != 0:
        perm = ident.copy()
        perm[0], perm[e] = e, 0
        arr = perm[arr[np.ix_(perm, perm)]]
        if names is not None:
            names = list(names)
            names[0], names[e] = names[e], names[0]
    return Loop(CayleyTable(arr), names=names)


class Loop:
    """Finite loop over indices 0..n-1, immutable once built.

    Structural flags (associative, Moufang, ...) are computed on first use
    and cached; recomputation always yields the same value, so concurrent
    duplicate writes to the cache are harmless.
    """

    def __init__(self, cayley: CayleyTable, names=None):
        self.cayley = cayley
        self.names = tuple(names) if names is not None else None
        if self.names is not None and len(self.names) != cayley.n:
            raise ValueError("names length must match the loop order")
        self._cache = {}

    @property
    def n(self) -> int:
        return self.cayley.n

    @property
    def table(self) -> np.ndarray:
        return self.cayley.table

    def __repr__(self):
        return f"Loop(n={self.n})"

    def name_of(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def same_table(self, other: "Loop") -> bool:
        return self.n == other.n and bool((self.table == other.table).all())

    def _cached(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    # -- multiplication and inverses ------------------------------------

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def left_inverse(self, x: int) -> int:
        """The unique y with y*x = identity."""
        return int(self._inv_arrays()[0][x])

    def right_inverse(self, x: int) -> int:
        """The unique y with x*y = identity."""
        return int(self._inv_arrays()[1][x])

    def inv(self, x: int) -> int:
        linv, rinv = self._inv_arrays()
        if linv[x] != rinv[x]:
            raise NoTwoSidedInverse(
                f"element {x}: left inverse {linv[x]} != right inverse {rinv[x]}"
            )
        return int(linv[x])

    def _inv_arrays(self):
        def compute():
            eq = self.table == 0
            linv = eq.argmax(axis=0)  # linv[x]: row y with y*x = 0
            rinv = eq.argmax(axis=1)  # rinv[x]: column y with x*y = 0
            return linv, rinv

        return self._cached("inv_arrays", compute)

    # -- closures and subloops -------------------------------------------

    def _close_mask(self, seed) -> np.ndarray:
        members = np.zeros(self.n, dtype=bool)
        members[0] = True
        for x in seed:
            members[x] = True
        size = int(members.sum())
        while True:
            idx = np.flatnonzero(members)
            members[self.table[np.ix_(idx, idx)].ravel()] = True
            new_size = int(members.sum())
            if new_size == size:
                return members
            size = new_size

    def subloop_closure(self, seed) -> "Subloop":
        """Smallest subloop containing the given indices (and the identity)."""
        return Subloop(self, np.flatnonzero(self._close_mask(seed)))

    def cyclic_closure(self, x: int) -> tuple:
        """Elements of <x>, cached per element."""
        closures = self._cached("cyclic_closures", lambda: [None] * self.n)
        if closures[x] is None:
            closures[x] = tuple(int(v) for v in np.flatnonzero(self._close_mask((x,))))
        return closures[x]

    def element_order(self, x: int) -> int:
        """Least k >= 1 with the left-iterated power x^k equal to the identity."""
        orders = self._cached("element_orders", lambda: [0] * self.n)
        if orders[x] == 0:
            sub = self.cyclic_closure(x)
            if not _subtable_associative(self.table, sub):
                raise NotPowerAssociative(
                    f"<{x}> is not associative; element order is ill-defined"
                )
            k, y = 1, x
            while y != 0:
                y = int(self.table[y, x])
                k += 1
            orders[x] = k
        return orders[x]

    def element_order_counts(self) -> Counter:
        return Counter(self.element_order(x) for x in range(self.n))

    def exponent(self) -> int:
        """Least common multiple of all element orders."""
        return math.lcm(*(self.element_order(x) for x in range(self.n)))

    def all_subloops(self) -> list:
        """Every subloop, by breadth-first one-element extensions of {0}."""
        if self.n > SUBLOOP_ORDER_LIMIT:
            raise OrderTooLarge(
                f"subloop enumeration capped at order {SUBLOOP_ORDER_LIMIT}, got {self.n}"
            )

        def compute():
            start = frozenset(int(v) for v in np.flatnonzero(self._close_mask(())))
            seen = {start}
            frontier = [start]
            while frontier:
                nxt = []
                for s in frontier:
                    for x in range(self.n):
                        if x not in s:
                            mask = self._close_mask(tuple(s) + (x,))
                            c = frozenset(int(v) for v in np.flatnonzero(mask))
                            if c not in seen:
                                seen.add(c)
                                nxt.append(c)
                frontier = nxt
            return sorted(seen, key=lambda s: (len(s), sorted(s)))

        sets = self._cached("all_subloops", compute)
        return [Subloop(self, sorted(s)) for s in sets]

    def has_unique_subloop_of_order_p(self, p: int) -> bool:
        """Exactly one subloop of size p; p must be a prime dividing the order."""
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"p must be prime, got {p}")
        if self.n % p != 0:
            raise ValueError(f"{p} does not divide the loop order {self.n}")
        return sum(1 for s in self.all_subloops() if len(s) == p) == 1

    # -- property checkers -------------------------------------------------

    def is_associative(self) -> bool:
        return self._cached("associative", lambda: _table_associative(self.table))

    def is_group(self) -> bool:
        return self.is_associative()

    def is_commutative(self) -> bool:
        return self._cached("commutative", lambda: bool((self.table == self.table.T).all()))

    def moufang_identity_checks(self) -> tuple:
        """The four Moufang identities, each quantified over all triples."""

        def compute():
            t = self.table
            n = self.n
            z = np.arange(n).reshape(n, 1, 1)
            x = np.arange(n).reshape(1, n, 1)
            y = np.arange(n).reshape(1, 1, n)
            m1 = bool((t[z, t[x, t[z, y]]] == t[t[t[z, x], z], y]).all())
            m2 = bool((t[x, t[z, t[y, z]]] == t[t[t[x, z], y], z]).all())
            zx_yz = t[t[z, x], t[y, z]]
            m3 = bool((zx_yz == t[t[z, t[x, y]], z]).all())
            m4 = bool((zx_yz == t[z, t[t[x, y], z]]).all())
            return (m1, m2, m3, m4)

        return self._cached("moufang_checks", compute)

    def is_moufang(self) -> bool:
        checks = self.moufang_identity_checks()
        # The four identities are equivalent as universally quantified laws
        # on loops; a disagreement here would mean a table that is not a loop.
        assert len(set(checks)) == 1, f"Moufang identity checks disagree: {checks}"
        return checks[0]

    def is_power_associative(self) -> bool:
        """<x> is a group for every x."""

        def compute():
            seen = set()
            for x in range(self.n):
                sub = self.cyclic_closure(x)
                if sub in seen:
                    continue
                seen.add(sub)
                if not _subtable_associative(self.table, sub):
                    return False
            return True

        return self._cached("power_associative", compute)

    def is_diassociative(self) -> bool:
        """<x, y> is a group for every pair x, y."""

        def compute():
            seen = set()
            for x in range(self.n):
                for y in range(x, self.n):
                    sub = tuple(int(v) for v in np.flatnonzero(self._close_mask((x, y))))
                    if sub in seen:
                        continue
                    seen.add(sub)
                    if not _subtable_associative(self.table, sub):
                        return False
            return True

        return self._cached("diassociative", compute)

    def has_inverse_property(self) -> bool:
        """x^-1 (xy) = y and (xy) y^-1 = x for all x, y, with two-sided inverses.

        Any witnessing bijections are forced to be the left/right inverse
        maps (set y resp. x to the identity), so those are what is tested.
        """

        def compute():
            linv, rinv = self._inv_arrays()
            if not (linv == rinv).all():
                return False
            t = self.table
            n = self.n
            lip = bool((t[linv[:, None], t] == np.arange(n)[None, :]).all())
            rip = bool((t[t, rinv[None, :]] == np.arange(n)[:, None]).all())
            return lip and rip

        return self._cached("inverse_property", compute)

    def check_element_lagrange(self) -> bool:
        """Every element order divides the loop order.

        Elements are scanned in index order; the first well-defined order
        failing divisibility returns False, while a non-associative <x>
        encountered first raises NotPowerAssociative.
        """
        for x in range(self.n):
            if self.n % self.element_order(x) != 0:
                return False
        return True

    # -- nucleus and center --------------------------------------------

    def nucleus(self) -> "Subloop":
        """Elements associating with all pairs in each of the three positions."""

        def compute():
            t = self.table
            members = []
            for a in range(self.n):
                row = t[a]       # row[x] = a*x
                col = t[:, a]    # col[x] = x*a
                left = (t[row] == row[t]).all()        # (a x) y == a (x y)
                middle = (t[col] == t[:, row]).all()   # (x a) y == x (a y)
                right = (col[t] == t[:, col]).all()    # (x y) a == x (y a)
                if left and middle and right:
                    members.append(a)
            return tuple(members)

        return Subloop(self, self._cached("nucleus", compute))

    def center(self) -> "Subloop":
        """Nucleus elements commuting with everything."""

        def compute():
            t = self.table
            return tuple(
                a for a in self.nucleus().elements if (t[a] == t[:, a]).all()
            )

        return Subloop(self, self._cached("center", compute))


def _subtable(table: np.ndarray, elements) -> np.ndarray:
    idx = np.asarray(elements, dtype=np.int64)
    pos = np.full(table.shape[0], -1, dtype=np.int64)
    pos[idx] = np.arange(len(idx))
    sub = pos[table[np.ix_(idx, idx)]]
    if (sub < 0).any():
        raise ValueError("element set is not closed under multiplication")
    return sub


def _table_associative(t: np.ndarray) -> bool:
    n = t.shape[0]
    x = np.arange(n).reshape(n, 1, 1)
    y = np.arange(n).reshape(1, n, 1)
    z = np.arange(n).reshape(1, 1, n)
    return bool((t[t[x, y], z] == t[x, t[y, z]]).all())


def _subtable_associative(table: np.ndarray, elements) -> bool:
    return _table_associative(_subtable(table, elements))


class Subloop:
    """A subset of a loop closed under its multiplication, as sorted indices."""

    __slots__ = ("parent", "elements", "_loop")

    def __init__(self, parent: Loop, elements):
        elems = tuple(int(v) for v in sorted(set(int(e) for e in elements)))
        if not elems or elems[0] != 0:
            raise ValueError("a subloop must contain the identity 0")
        t = parent.table
        sub = set(elems)
        for a in elems:
            for b in elems:
                if int(t[a, b]) not in sub:
                    raise ValueError(f"not closed: {a}*{b} = {int(t[a, b])} escapes")
        # Closure under left/right inverses holds automatically for a finite
        # closed subset; assert it anyway.
        for a in elems:
            if not any(int(t[a, b]) == 0 for b in elems):
                raise ValueError(f"no right inverse of {a} inside the subloop")
            if not any(int(t[b, a]) == 0 for b in elems):
                raise ValueError(f"no left inverse of {a} inside the subloop")
        self.parent = parent
        self.elements = elems
        self._loop = None

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"Subloop(order={len(self.elements)}, elements={self.elements})"

    def to_loop(self) -> Loop:
        """The subloop as a standalone loop; element i maps to self.elements[i]."""
        if self._loop is None:
            names = None
            if self.parent.names is not None:
                names = [self.parent.names[e] for e in self.elements]
            self._loop = Loop(CayleyTable(_subtable(self.parent.table, self.elements)), names=names)
        return self._loop

    def is_group(self) -> bool:
        return self.to_loop().is_associative()

    def is_commutative(self) -> bool:
        return self.to_loop().is_commutative()

    def is_cyclic(self) -> bool:
        sub = self.to_loop()
        return any(len(sub.cyclic_closure(x)) == sub.n for x in range(sub.n))
