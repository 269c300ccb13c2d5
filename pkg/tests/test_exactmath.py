from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slopewalk.exactmath import (
    TruncatedSeries,
    conjugate_partition,
    gen_binomial,
    jacobi_trudi_schur,
    newton_e_from_p,
    partitions,
)

import oracles


# -- generalized binomials -----------------------------------------------------

def test_gen_binomial_integer():
    assert gen_binomial(6, 2) == 15


def test_gen_binomial_empty_product():
    for x in (0, 5, F(3, 2), F(-7, 3)):
        assert gen_binomial(x, 0) == 1


def test_gen_binomial_single_factor():
    assert gen_binomial(F(3, 2), 1) == F(3, 2)


def test_gen_binomial_rejects_negative_k():
    with pytest.raises(ValueError):
        gen_binomial(3, -1)


@given(
    num=st.integers(-30, 30),
    den=st.integers(1, 12),
    k=st.integers(1, 10),
)
@settings(max_examples=60, deadline=None)
def test_gen_binomial_pascal_recurrence(num, den, k):
    x = F(num, den)
    assert gen_binomial(x, k) == gen_binomial(x - 1, k - 1) * x / k


# -- truncated series ----------------------------------------------------------

def _rand_series(coeffs, order=8):
    return TruncatedSeries.from_coeffs([F(c, 3) for c in coeffs], order)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=9),
       st.lists(st.integers(-6, 6), min_size=1, max_size=9),
       st.lists(st.integers(-6, 6), min_size=1, max_size=9))
@settings(max_examples=60, deadline=None)
def test_series_multiplication_associative(a, b, c):
    s, t, r = _rand_series(a), _rand_series(b), _rand_series(c)
    assert (s * t) * r == s * (t * r)


def test_series_min_order_propagation():
    s = TruncatedSeries.from_coeffs([1, 1], 10)
    t = TruncatedSeries.from_coeffs([1, 2, 3], 4)
    assert (s * t).order == 4
    assert (s + t).order == 4


def test_series_division_roundtrip():
    s = TruncatedSeries.from_coeffs([1, 2, F(1, 3), 4], 7)
    t = TruncatedSeries.from_coeffs([2, -1, 5], 7)
    assert (s * t) / t == s


def test_series_division_needs_unit():
    s = TruncatedSeries.from_coeffs([0, 1], 4)
    with pytest.raises(ZeroDivisionError):
        TruncatedSeries.one(4) / s


def test_series_exp_log_inverse():
    s = TruncatedSeries.from_coeffs([0, 1, F(-1, 2), F(2, 7)], 9)
    assert s.exp().log() == s


def test_series_geometric_identity():
    # 1/(1-z) = sum z^n
    one = TruncatedSeries.one(10)
    geom = one / TruncatedSeries.from_coeffs([1, -1], 10)
    assert geom.coeffs == tuple(F(1) for _ in range(11))


def test_series_shift_guards():
    s = TruncatedSeries.from_coeffs([0, 0, 3], 5)
    assert s.div_z_power(2).coeffs[0] == 3
    with pytest.raises(ValueError):
        s.div_z_power(3)


# -- partitions -----------------------------------------------------------------

def test_partitions_of_zero():
    assert partitions(0) == [()]


def test_partition_counts_small():
    assert len(partitions(4)) == 5
    assert len(partitions(6)) == 11


def test_partition_counts_vs_series_oracle():
    counts = oracles.partition_counts(30)
    for n in range(31):
        assert len(partitions(n)) == counts[n]


def test_partitions_are_valid_and_sorted():
    for n in (5, 8):
        seen = set()
        vecs = partitions(n)
        for vec in vecs:
            assert sum((j + 1) * e for j, e in enumerate(vec)) == n
            seen.add(vec)
        assert len(seen) == len(vecs)
        assert vecs == sorted(vecs)


# -- Newton's identities and Jacobi-Trudi ----------------------------------------

def _const(x, order=6):
    return TruncatedSeries.from_coeffs([x], order)


def test_newton_single_variable():
    s = TruncatedSeries.from_coeffs([0, 1, 2], 6)
    assert newton_e_from_p([s]) == [s]


def test_newton_two_variables():
    p1 = TruncatedSeries.from_coeffs([0, 3, 1], 6)
    p2 = TruncatedSeries.from_coeffs([0, 0, 5], 6)
    e1, e2 = newton_e_from_p([p1, p2])
    assert e1 == p1
    assert e2 == (p1 * p1 - p2) / 2


def test_conjugate_partition():
    assert conjugate_partition((4, 1)) == (2, 1, 1, 1)
    assert conjugate_partition((3, 3, 1)) == (3, 2, 2)
    assert conjugate_partition(()) == ()


def test_jacobi_trudi_trivial_shapes():
    e1 = TruncatedSeries.from_coeffs([0, 2, 1], 6)
    e2 = TruncatedSeries.from_coeffs([0, 0, 3], 6)
    assert jacobi_trudi_schur((1,), [e1, e2]) == e1
    assert jacobi_trudi_schur((1, 1), [e1, e2]) == e2
    assert jacobi_trudi_schur((), [e1, e2]) == TruncatedSeries.one(6)


@pytest.mark.parametrize("xs", [(2, 3), (1, 4), (-2, 5)])
def test_jacobi_trudi_vs_alternants_two_vars(xs):
    lams = [
        (lam1, lam2)
        for lam1 in range(5)
        for lam2 in range(lam1 + 1)
    ]
    p = [_const(sum(F(x) ** h for x in xs)) for h in (1, 2)]
    es = newton_e_from_p(p)
    for lam in lams:
        got = jacobi_trudi_schur(lam, es)
        want = oracles.schur_by_alternants(lam, xs)
        assert got.coeffs[0] == want, lam


@pytest.mark.parametrize("xs", [(1, 2, 3), (2, -1, 4)])
def test_jacobi_trudi_vs_alternants_three_vars(xs):
    lams = [
        (l1, l2, l3)
        for l1 in range(5)
        for l2 in range(l1 + 1)
        for l3 in range(l2 + 1)
    ]
    p = [_const(sum(F(x) ** h for x in xs)) for h in (1, 2, 3)]
    es = newton_e_from_p(p)
    for lam in lams:
        got = jacobi_trudi_schur(lam, es)
        want = oracles.schur_by_alternants(lam, xs)
        assert got.coeffs[0] == want, lam


def test_jacobi_trudi_rejects_too_many_parts():
    e1 = TruncatedSeries.from_coeffs([0, 1], 4)
    with pytest.raises(ValueError):
        jacobi_trudi_schur((2, 1, 1), [e1])
