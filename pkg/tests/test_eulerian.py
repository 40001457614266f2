from math import factorial

import pytest

from ocrank.eulerian import eulerian_eval, eulerian_triangle

from oracles import eulerian_by_descents


def test_small_rows():
    tri = eulerian_triangle(4)
    assert tri.row(1) == (1,)
    assert tri.row(3) == (1, 4, 1)
    assert tri.row(4) == (1, 11, 11, 1)
    assert tri[4, -1] == 0 and tri[4, 4] == 0


@pytest.mark.parametrize("k", range(1, 13))
def test_row_sums_and_palindromes(k):
    row = eulerian_triangle(12).row(k)
    assert sum(row) == factorial(k)
    assert row == row[::-1]


@pytest.mark.parametrize("k", range(1, 8))
def test_recurrence_matches_descent_count(k):
    assert list(eulerian_triangle(k).row(k)) == eulerian_by_descents(k)


def test_eval():
    assert eulerian_eval(1, 4, 6).coeffs == (1, 0, 0, 0, 0, 0, 0)
    assert eulerian_eval(2, 3, 5).coeffs == (1, 0, 0, 1, 0, 0)
    assert eulerian_eval(3, 2, 10).coeffs == (1, 0, 4, 0, 1, 0, 0, 0, 0, 0, 0)


@pytest.mark.parametrize("k,n", [(k, n) for k in range(1, 7) for n in range(1, 5)])
def test_eval_at_one_is_factorial(k, n):
    order = n * (k - 1)
    assert sum(eulerian_eval(k, n, order).coeffs) == factorial(k)


def test_bad_input():
    with pytest.raises(ValueError):
        eulerian_triangle(0)
    with pytest.raises(ValueError):
        eulerian_eval(0, 1, 3)
