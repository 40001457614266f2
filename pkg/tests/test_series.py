import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ocrank.series import (
    TruncSeries,
    add,
    etaq,
    inv_one_minus_pow,
    invert,
    make_series,
    mul,
    mul_reference,
    neg_qpoch,
    overpartition_gf,
    partition_gf,
    substitute_power,
)

from oracles import count_overpartitions, count_partitions, series_power_product


def test_make_series_zero_fills():
    assert make_series([1], 3).coeffs == (1, 0, 0, 0)
    assert make_series([0, 1], 2).coeffs == (0, 1, 0)
    assert make_series([1, 2, 4, 8], 3).coeffs == tuple(count_overpartitions(n) for n in range(4))


def test_make_series_rejects_overflow():
    with pytest.raises(ValueError):
        make_series([1, 2, 3], 1)


def test_length_invariant():
    with pytest.raises(ValueError):
        TruncSeries(2, (1, 2))


def test_add():
    assert add(make_series([1, 1], 2), make_series([1, -1], 2)) == make_series([2], 2)
    a = make_series([3, -1, 7], 2)
    assert a + make_series([], 2) == a
    assert make_series([0, 1, 1], 2) + make_series([0, 0, 1], 2) == make_series([0, 1, 2], 2)


def test_order_mismatch_is_an_error():
    with pytest.raises(ValueError):
        add(make_series([1], 2), make_series([1], 3))
    with pytest.raises(ValueError):
        mul(make_series([1], 2), make_series([1], 3))


def test_mul_small():
    assert mul(make_series([1, 1], 3), make_series([1, -1], 3)) == make_series([1, 0, -1], 3)
    a = make_series([5, -2, 0, 9], 3)
    assert mul(a, make_series([1], 3)) == a


def test_ovr_times_eta_is_neg_qpoch():
    for n in (10, 60, 200):
        assert mul(etaq(1, n), overpartition_gf(n)) == neg_qpoch(n)


def test_invert():
    assert invert(make_series([1, -1], 5)).coeffs == (1,) * 6
    assert invert(make_series([1], 4)) == make_series([1], 4)
    assert partition_gf(6).coeffs == (1, 1, 2, 3, 5, 7, 11)
    with pytest.raises(ValueError):
        invert(make_series([2, 1], 3))


def test_invert_negative_unit():
    a = make_series([-1, 3, 0, -2], 6)
    assert mul(a, invert(a)) == make_series([1], 6)


def test_substitute_power():
    assert substitute_power(make_series([0, 1, 1], 4), 2) == make_series([0, 0, 1, 0, 1], 4)
    a = make_series([4, 3, 2], 2)
    assert substitute_power(a, 1) == a
    h1 = make_series([0, 1, 1, 0, 1, 0, 2, 0, 1, 1], 9)
    s = substitute_power(h1, 3)
    assert (s[3], s[6], s[9]) == (1, 1, 0)
    with pytest.raises(ValueError):
        substitute_power(a, 0)


def test_inv_one_minus_pow():
    assert inv_one_minus_pow(1, 1, 4).coeffs == (1, 1, 1, 1, 1)
    assert inv_one_minus_pow(2, 2, 6).coeffs == (1, 0, 2, 0, 3, 0, 4)
    geo3 = [1 if i % 3 == 0 else 0 for i in range(10)]
    assert list(inv_one_minus_pow(3, 3, 9).coeffs) == series_power_product([geo3] * 3, 9)
    with pytest.raises(ValueError):
        inv_one_minus_pow(0, 1, 3)


def test_etaq():
    assert etaq(1, 7).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)
    assert etaq(2, 3).coeffs == (1, 0, -1, 0)
    assert mul(etaq(1, 40), invert(etaq(1, 40))) == make_series([1], 40)
    factors = [[1] + [0] * (e - 1) + [-1] for e in range(1, 13)]
    assert list(etaq(1, 12).coeffs) == series_power_product(factors, 12)
    with pytest.raises(ValueError):
        etaq(0, 3)


def test_overpartition_gf_matches_enumeration():
    ovr = overpartition_gf(30)
    assert ovr[3] == 8
    assert ovr[0] == 1
    assert ovr.coeffs[:7] == (1, 2, 4, 8, 14, 24, 40)
    assert list(ovr.coeffs[:19]) == [count_overpartitions(n) for n in range(19)]
    assert list(partition_gf(20).coeffs) == [count_partitions(n) for n in range(21)]


@pytest.mark.slow
def test_overpartition_gf_enumeration_to_thirty():
    ovr = overpartition_gf(30)
    assert list(ovr.coeffs) == [count_overpartitions(n) for n in range(31)]


coeff_lists = st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=60)


@settings(max_examples=40, deadline=None)
@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(x, y, z):
    n = max(len(x), len(y), len(z)) - 1
    a, b, c = make_series(x, n), make_series(y, n), make_series(z, n)
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(a, b) == add(b, a)


@settings(max_examples=30, deadline=None)
@given(coeff_lists, coeff_lists, st.integers(0, 30))
def test_mul_truncation_consistent(x, y, extra):
    n = max(len(x), len(y)) - 1
    big = mul(make_series(x, n + extra), make_series(y, n + extra))
    assert big.truncate(n) == mul(make_series(x, n), make_series(y, n))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-10**12, 10**12), min_size=1, max_size=80), st.sampled_from([1, -1]))
def test_invert_two_sided(tail, unit):
    a = make_series([unit] + tail, len(tail))
    one = make_series([1], len(tail))
    assert mul(a, invert(a)) == one
    assert mul(invert(a), a) == one


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-10**40, 10**40), min_size=30, max_size=120))
def test_dense_mul_matches_reference(x):
    a = make_series(x, len(x) - 1)
    b = make_series(list(reversed(x)), len(x) - 1)
    assert mul(a, b) == mul_reference(a, b)
