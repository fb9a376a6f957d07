import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerfaces.coefficients import (
    BetaTable,
    beta,
    decompose,
    is_antisymmetric,
    s_m_sum,
    theta,
)
from eulerfaces.exactmath import Polynomial, neg_z_over_cosh_series, poly_affine_substitute
from oracles import bernoulli_akiyama_tanigawa, genocchi

rationals = st.builds(F, st.integers(-49, 49), st.integers(1, 30))


def even_polys(max_degree):
    return st.lists(rationals, max_size=max_degree // 2 + 1).map(
        lambda cs: Polynomial([x for c in cs for x in (c, 0)])
    )


@pytest.mark.parametrize("n,want", [(-1, F(-2)), (0, F(1)), (2, F(-1, 2)), (4, F(1)), (6, F(-17, 4))])
def test_beta_values(n, want):
    assert beta(n) == want


def test_beta_rejects_below_minus_one():
    with pytest.raises(ValueError):
        beta(-2)


def test_beta_odd_indices_vanish():
    assert all(beta(n) == 0 for n in range(1, 22, 2))


def test_beta_defining_formula_against_oracle_bernoulli():
    B = bernoulli_akiyama_tanigawa(30)
    for n in range(1, 31):
        assert beta(n - 2) == F(4 * (2**n - 1)) * B[n] / n


def test_genocchi_cross_check():
    B = bernoulli_akiyama_tanigawa(20)
    assert [genocchi(n, B) for n in (2, 4, 6, 8)] == [-1, 1, -3, 17]
    for n in range(2, 21, 2):
        assert beta(n - 2) == -2 * genocchi(n, B) / n


def test_fourfold_coefficient_by_elimination():
    # chi = f0 - f1 + f2 - f3 + f4 with f3 = 5/2 f4 and 2f1 - 3f2 + 4f3 - 5f4 = 0
    # => f1 = 3/2 f2 - 5/2 f4, so chi = f0 - 1/2 f2 + (1 + 5/2 - 5/2) f4
    f4_coefficient = 1 + F(5, 2) - F(5, 2)
    assert beta(4) == f4_coefficient


def test_beta_table():
    t = BetaTable(6)
    assert len(t) == 8
    assert t[-1] == -2 and t[6] == F(-17, 4)
    with pytest.raises(ValueError):
        BetaTable(-2)


@pytest.mark.parametrize(
    "p,want",
    [(Polynomial([1]), F(-2)), (Polynomial([1, 2]) ** 3, F(0)), (Polynomial([0, 0, 1]), F(0))],
)
def test_theta_examples(p, want):
    assert theta(p) == want


@pytest.mark.parametrize("m", range(1, 16, 2))
def test_theta_kills_odd_powers_of_one_plus_two_z(m):
    assert theta(Polynomial([1, 2]) ** m) == 0


@settings(max_examples=100)
@given(st.lists(rationals, min_size=1, max_size=8))
def test_theta_kills_antisymmetric_combinations(cs):
    p = sum((c * Polynomial([1, 2]) ** (2 * i + 1) for i, c in enumerate(cs)), Polynomial())
    assert is_antisymmetric(p)
    assert theta(p) == 0


@settings(max_examples=100)
@given(even_polys(14))
def test_theta_on_even_polynomials(q):
    assert q.is_even() and q.degree <= 14
    assert theta(q) == -2 * q(0)


def test_symmetric_reading_of_even_fails():
    q = Polynomial([0, 1, 1])  # z^2 + z is symmetric under z -> -1-z
    assert poly_affine_substitute(q, -1, -1) == q
    assert theta(q) != -2 * q(0)


@pytest.mark.parametrize(
    "P,p,q",
    [
        (Polynomial([0, 1]), Polynomial([F(1, 2), 1]), Polynomial([F(-1, 2)])),
        (Polynomial([0, 0, 1]), Polynomial(), Polynomial([0, 0, 1])),
        (Polynomial([1, 2]) ** 3, Polynomial([1, 2]) ** 3, Polynomial()),
    ],
)
def test_decompose_examples(P, p, q):
    assert decompose(P) == (p, q)


@settings(max_examples=100)
@given(st.lists(rationals, max_size=13).map(Polynomial))
def test_decompose_is_projection_pair(P):
    p, q = decompose(P)
    assert p + q == P
    assert is_antisymmetric(p)
    assert q.is_even()
    assert decompose(p) == (p, Polynomial())
    assert decompose(q) == (Polynomial(), q)
    assert theta(P) == theta(q) == -2 * q(0)


@pytest.mark.parametrize("m", [1, 3, 5])
def test_s_m_examples(m):
    assert s_m_sum(m) == 0


@pytest.mark.parametrize("m", range(1, 22, 2))
def test_s_m_vanishes_and_matches_series(m):
    assert s_m_sum(m) == 0
    assert s_m_sum(m) == neg_z_over_cosh_series(m + 1)[m + 1]


@pytest.mark.parametrize("m", range(1, 14, 2))
def test_theta_equals_two_m_factorial_s_m(m):
    assert theta(Polynomial([1, 2]) ** m) == 2 * math.factorial(m) * s_m_sum(m)


@pytest.mark.parametrize("m", [0, 2, -1])
def test_s_m_rejects_bad_m(m):
    with pytest.raises(ValueError):
        s_m_sum(m)


def test_s_m_terms_reproduce_odd_series_coefficients():
    # the generating series sum (4^n - 2^n) B_n z^n / n! times e^z
    # gives -z/cosh z in every degree, odd degrees included
    from eulerfaces.exactmath import bernoulli

    N = 12
    series = neg_z_over_cosh_series(N)
    for k in range(1, N + 1):
        total = sum(
            F((4**n - 2**n) * bernoulli(n)) / (math.factorial(n) * math.factorial(k - n))
            for n in range(1, k + 1)
        )
        assert total == series[k]
