import numpy as np
import pytest

from moufang import (
    Subloop,
    cyclic,
    dihedral,
    direct_product,
    validate_table,
)
from moufang.errors import (
    NoIdentity,
    NotLatinSquare,
    NotPowerAssociative,
    NoTwoSidedInverse,
    OrderTooLarge,
)
from conftest import ORDER5_TABLE
from oracles import (
    naive_all_subloops,
    naive_closure,
    naive_element_order,
    naive_is_associative,
    naive_moufang_checks,
    naive_two_sided_inverse,
    permute_table,
)


def test_validate_singleton():
    loop = validate_table([[0]])
    assert loop.n == 1
    assert loop.element_order(0) == 1


def test_validate_z2():
    loop = validate_table([[0, 1], [1, 0]])
    assert loop.n == 2
    assert loop.mul(1, 1) == 0


def test_validate_rejects_repeats():
    with pytest.raises(NotLatinSquare):
        validate_table([[0, 1], [1, 1]])


def test_validate_rejects_column_repeats():
    # rows are permutations but column 0 repeats
    with pytest.raises(NotLatinSquare):
        validate_table([[0, 1, 2], [0, 2, 1], [1, 0, 2]])


def test_validate_rejects_no_identity():
    # Latin square in which no row is the identity permutation
    with pytest.raises(NoIdentity):
        validate_table([[1, 0, 2], [0, 2, 1], [2, 1, 0]])


def test_validate_relabels_identity_to_zero():
    z3 = [[(i + j) % 3 for j in range(3)] for i in range(3)]
    shuffled = permute_table(z3, [2, 1, 0])  # identity now at index 2
    loop = validate_table(shuffled)
    assert list(loop.table[0]) == [0, 1, 2]
    assert list(loop.table[:, 0]) == [0, 1, 2]
    assert loop.is_associative()


def test_mul_inverse_cyclic():
    z4 = cyclic(4)
    assert z4.mul(1, 3) == 0
    assert z4.inv(0) == 0
    assert z4.inv(1) == 3


def test_q8_inverse_matches_bruteforce(q8):
    table = q8.table.tolist()
    for x in range(8):
        assert q8.inv(x) == naive_two_sided_inverse(table, x)
    assert q8.inv(1) == 3  # a^-1 = a^3


def test_no_two_sided_inverse():
    loop = validate_table(ORDER5_TABLE)
    with pytest.raises(NoTwoSidedInverse):
        loop.inv(2)
    assert loop.left_inverse(2) == 4
    assert loop.right_inverse(2) == 3


def test_subloop_closure_empty(q8):
    assert q8.subloop_closure(()).elements == (0,)


def test_subloop_closure_q8(q8):
    table = q8.table.tolist()
    assert q8.subloop_closure({1}).elements == tuple(sorted(naive_closure(table, {1})))
    assert len(q8.subloop_closure({1})) == 4
    assert len(q8.subloop_closure({1, 4})) == 8


def test_subloop_closure_idempotent_monotone(q8):
    small = q8.subloop_closure({1})
    again = q8.subloop_closure(small.elements)
    assert again.elements == small.elements
    bigger = q8.subloop_closure({1, 4})
    assert set(small.elements) <= set(bigger.elements)


def test_subloop_invariants_rejected(q8):
    with pytest.raises(ValueError):
        Subloop(q8, (0, 1))  # not closed: 1*1 = a^2 escapes


def test_element_order_examples(o16):
    z6 = cyclic(6)
    assert z6.element_order(0) == 1
    assert z6.element_order(1) == 6
    assert o16.element_order(8) == 4  # u squares to c = a^2 of order 2


def test_element_order_not_power_associative():
    loop = validate_table(ORDER5_TABLE)
    with pytest.raises(NotPowerAssociative):
        loop.element_order(2)
    assert loop.element_order(1) == 2  # <1> is a group even here


def test_element_order_matches_bruteforce(q8, o16):
    for loop in (q8, o16, cyclic(12)):
        table = loop.table.tolist()
        for x in range(loop.n):
            assert loop.element_order(x) == naive_element_order(table, x)


def test_property_checkers_on_groups():
    for loop in (cyclic(8), dihedral(4), direct_product(cyclic(2), cyclic(2))):
        assert loop.is_associative()
        assert loop.is_power_associative()
        assert loop.is_diassociative()
        assert loop.is_moufang()
        assert loop.has_inverse_property()


def test_o16_associativity_profile(o16):
    assert not o16.is_associative()
    assert o16.is_diassociative()
    assert o16.is_power_associative()


def test_order5_table_properties():
    loop = validate_table(ORDER5_TABLE)
    assert naive_is_associative(ORDER5_TABLE) is False
    assert not loop.is_associative()
    assert not loop.is_moufang()
    assert not loop.has_inverse_property()
    assert loop.moufang_identity_checks() == naive_moufang_checks(ORDER5_TABLE)


def test_moufang_chein_double_s3():
    from moufang import chein_double

    m12 = chein_double(dihedral(3), 0)
    assert m12.n == 12
    assert m12.is_moufang()
    assert naive_moufang_checks(m12.table.tolist()) == (True, True, True, True)
    assert not m12.is_associative()


def test_inverse_property_examples(o16):
    assert cyclic(7).has_inverse_property()
    assert o16.has_inverse_property()
    assert not validate_table(ORDER5_TABLE).has_inverse_property()


def test_exponent():
    assert cyclic(6).exponent() == 6
    assert direct_product(cyclic(2), cyclic(2)).exponent() == 2


def test_exponent_o16(o16):
    assert sorted(o16.element_order_counts().items()) == [(1, 1), (2, 1), (4, 14)]
    assert o16.exponent() == 4


def test_exponent_not_power_associative():
    with pytest.raises(NotPowerAssociative):
        validate_table(ORDER5_TABLE).exponent()


def test_all_subloops_counts(q8):
    assert len(cyclic(5).all_subloops()) == 2
    assert len(cyclic(4).all_subloops()) == 3
    assert len(q8.all_subloops()) == 6


def test_all_subloops_matches_subset_enumeration(q8):
    for loop in (cyclic(6), q8, dihedral(4)):
        expected = {s for s in naive_all_subloops(loop.table.tolist())}
        got = {frozenset(s.elements) for s in loop.all_subloops()}
        assert got == expected


def test_all_subloops_guard(monkeypatch):
    import moufang.core as core

    monkeypatch.setattr(core, "SUBLOOP_ORDER_LIMIT", 3)
    with pytest.raises(OrderTooLarge):
        cyclic(4).all_subloops()


def test_unique_subloop_of_order_p(o16):
    assert cyclic(4).has_unique_subloop_of_order_p(2)
    assert not direct_product(cyclic(2), cyclic(2)).has_unique_subloop_of_order_p(2)
    assert o16.has_unique_subloop_of_order_p(2)
    with pytest.raises(ValueError):
        cyclic(4).has_unique_subloop_of_order_p(4)  # not prime
    with pytest.raises(ValueError):
        cyclic(5).has_unique_subloop_of_order_p(2)  # does not divide


def test_element_lagrange(q8, o16):
    assert cyclic(12).check_element_lagrange()
    assert q8.check_element_lagrange()
    assert o16.check_element_lagrange()
    # element 1 has order 2, which does not divide 5; it is hit before the
    # non-power-associative elements, so the scan returns False.
    assert validate_table(ORDER5_TABLE).check_element_lagrange() is False


def test_center_nucleus(q8, o16):
    assert cyclic(6).center().elements == (0, 1, 2, 3, 4, 5)
    assert q8.center().elements == (0, 2)
    assert q8.nucleus().elements == tuple(range(8))
    assert o16.nucleus().elements == (0, 2)
    assert o16.center().elements == (0, 2)


def test_identity_axiom_over_corpus(corpus16):
    for entry in corpus16:
        t = entry.loop.table
        n = entry.loop.n
        assert (t[0] == np.arange(n)).all()
        assert (t[:, 0] == np.arange(n)).all()


def test_moufang_implies_prop211_over_corpus(corpus16):
    for entry in corpus16:
        loop = entry.loop
        if loop.is_moufang():
            assert loop.is_diassociative(), entry.label
            assert loop.is_power_associative(), entry.label
            assert loop.has_inverse_property(), entry.label
            assert loop.check_element_lagrange(), entry.label


def test_four_moufang_identities_agree_over_corpus(corpus16):
    for entry in corpus16:
        checks = entry.loop.moufang_identity_checks()
        assert len(set(checks)) == 1, entry.label


def test_diassociative_order_equals_closure_size(corpus16):
    for entry in corpus16:
        loop = entry.loop
        if loop.is_diassociative():
            for x in range(loop.n):
                assert loop.element_order(x) == len(loop.cyclic_closure(x))


def test_element_orders_divide_exponent(corpus16):
    for entry in corpus16:
        loop = entry.loop
        exp = loop.exponent()
        for x in range(loop.n):
            assert exp % loop.element_order(x) == 0


def test_cached_flags_are_stable(o16):
    first = o16.is_moufang()
    assert o16.is_moufang() is first
    assert o16._cache["moufang_checks"] == (True, True, True, True)
