from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from exact_arith import (ClassMismatchError, RadicalSum, SqClass, c_t, ceil_div, is_squarefree,
                         isqrt_exact, squarefree_split)


@pytest.mark.parametrize("k,omega,beta", [(1, 1, 1), (8, 2, 2), (9, 1, 3), (72, 2, 6), (30, 30, 1)])
def test_squarefree_split_examples(k, omega, beta):
    assert squarefree_split(k) == SqClass(omega=omega, beta=beta)


@given(st.integers(min_value=1, max_value=10**6))
@settings(max_examples=100)
def test_squarefree_split_reconstructs(k):
    split = squarefree_split(k)
    assert split.square == k
    assert is_squarefree(split.omega)


def test_squarefree_split_rejects_nonpositive():
    with pytest.raises(ValueError):
        squarefree_split(0)


def test_is_squarefree():
    assert is_squarefree(1)
    assert is_squarefree(30)
    assert not is_squarefree(12)
    assert not is_squarefree(0)


def test_sqclass_validation_and_rendering():
    assert str(SqClass(2, 2)) == "2√2"
    assert str(SqClass(6, 1)) == "√6"
    assert str(SqClass(1, 4)) == "4"
    with pytest.raises(ValueError):
        SqClass(4, 1)
    with pytest.raises(ValueError):
        SqClass(2, 0)


@pytest.mark.parametrize("a,b,t,expected", [(20, 5, 4, 4), (13, 13, 4, 9), (23, 7, 5, 6)])
def test_c_t(a, b, t, expected):
    assert c_t(a, b, t) == expected


def test_c_t_class_mismatch():
    # 8 - 4 = 4 lies in class 1, 6 - 4 = 2 in class 2
    with pytest.raises(ClassMismatchError):
        c_t(8, 6, 4)


@pytest.mark.parametrize("k,root", [(865, None), (0, 0), (7056, 84), (193, None), (576, 24)])
def test_isqrt_exact(k, root):
    assert isqrt_exact(k) == root


def test_isqrt_exact_negative():
    with pytest.raises(ValueError):
        isqrt_exact(-1)


def test_ceil_div():
    assert ceil_div(224, 15) == 15
    assert ceil_div(-7, 2) == -3
    assert ceil_div(0, 7) == 0


def test_radical_sum_normalizes_radicands():
    assert RadicalSum.sqrt(8) == RadicalSum.surd(2, 2)
    assert str(RadicalSum.sqrt(8)) == "2√2"
    assert RadicalSum.sqrt(9) == RadicalSum.rational(3)
    assert RadicalSum.sqrt(0) == RadicalSum()
    assert RadicalSum.sqrt(Fraction(1, 2)) * 2 == RadicalSum.sqrt(2)


def test_radical_sum_arithmetic():
    root2 = RadicalSum.sqrt(2)
    assert root2 * root2 == RadicalSum.rational(2)
    assert RadicalSum.sqrt(6) * RadicalSum.sqrt(10) == RadicalSum.surd(2, 15)
    assert (root2 + 1) - 1 == root2
    assert 3 - root2 == RadicalSum.rational(3) + (-root2)
    assert str(3 - root2) == "3 - √2"
    assert str(-RadicalSum.sqrt(6)) == "-√6"
    assert (root2 + RadicalSum.sqrt(3)).is_rational is False
    assert (root2 * RadicalSum.sqrt(8)).rational_part == 4


def test_radical_sum_rejects_negative_root():
    with pytest.raises(ValueError):
        RadicalSum.sqrt(-2)


@given(st.integers(min_value=0, max_value=500), st.integers(min_value=0, max_value=500))
@settings(max_examples=100)
def test_product_of_roots_is_root_of_product(a, b):
    assert RadicalSum.sqrt(a) * RadicalSum.sqrt(b) == RadicalSum.sqrt(a * b)


@given(st.integers(min_value=3, max_value=29), st.integers(min_value=1, max_value=30),
       st.integers(min_value=1, max_value=30), st.sampled_from([1, 2, 3, 5, 6, 7]))
@settings(max_examples=100)
def test_c_t_is_exact_and_symmetric(t, beta_a, beta_b, omega):
    a, b = t + omega * beta_a ** 2, t + omega * beta_b ** 2
    assert c_t(a, b, t) ** 2 == (a - t) * (b - t)
    assert c_t(a, b, t) == c_t(b, a, t)
