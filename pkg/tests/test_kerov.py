import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from kerov.characters import normalized_character
from kerov.kerov import (
    ConsistencyError,
    candidate_monomials,
    cumulant_polynomial,
    evaluate,
    kerov_polynomial,
    multi_kerov_polynomial,
    positivity_report,
    set_partitions,
)
from kerov.cumulants import free_cumulants
from kerov.linalg import InconsistentSystemError, RankDeficientError, solve_exact
from kerov.partitions import dilate, partitions_of, partitions_up_to
from kerov.polynomials import R, RPolynomial, graded_degree

CH5 = R(6) + 15 * R(4) + 5 * R(2) ** 2 + 8 * R(2)


def test_rendering():
    assert str(CH5) == "R6 + 15*R4 + 5*R2^2 + 8*R2"
    assert str(RPolynomial()) == "0"
    assert str(-(6 * R(2) * R(3) + R(5))) == "-R5 - 6*R2*R3"
    assert str(Fraction(1, 2) * R(2) + 3) == "1/2*R2 + 3"


def test_json_round_trip():
    data = CH5.to_json()
    assert data[0] == {"monomial": [6], "coefficient": "1"}
    assert RPolynomial.from_json(data) == CH5


def test_polynomial_algebra():
    p = R(2) + R(3)
    assert p * p == R(2) ** 2 + 2 * R(2) * R(3) + R(3) ** 2
    assert p - p == RPolynomial()
    assert RPolynomial({(3, 2): 1}) == R(2) * R(3)
    with pytest.raises(ValueError):
        R(1)


def test_evaluate_examples():
    assert evaluate(R(3), (3, 1)) == 4
    assert evaluate(RPolynomial(), (5, 2)) == 0
    assert evaluate(CH5, (3, 1)) == 0


@pytest.mark.parametrize(
    "k, expected",
    [
        (1, R(2)),
        (2, R(3)),
        (3, R(4) + R(2)),
        (4, R(5) + 5 * R(3)),
        (5, CH5),
    ],
)
def test_kerov_polynomial(k, expected):
    assert kerov_polynomial(k) == expected


def test_kerov_bound():
    with pytest.raises(ValueError):
        kerov_polynomial(8)
    with pytest.raises(ValueError):
        kerov_polynomial(6, max_k=5)


def test_multi_kerov_examples():
    assert multi_kerov_polynomial((3, 2)) == R(3) * R(4) - 5 * R(2) * R(3) - 6 * R(5) - 18 * R(3)
    assert multi_kerov_polynomial((2,)) == kerov_polynomial(2)
    p22 = multi_kerov_polynomial((2, 2))
    for lam in partitions_up_to(8):
        assert evaluate(p22, lam) == normalized_character(lam, (2, 2))


def test_cumulant_polynomial_examples():
    assert cumulant_polynomial((3, 2)) == -(6 * R(2) * R(3) + 6 * R(5) + 18 * R(3))
    assert cumulant_polynomial((4,)) == kerov_polynomial(4)
    assert graded_degree(cumulant_polynomial((2, 2))) <= 4


def test_covariance_definition():
    cov = cumulant_polynomial((3, 2))
    assert cov == multi_kerov_polynomial((3, 2)) - kerov_polynomial(3) * kerov_polynomial(2)


def test_three_argument_cumulant():
    expected = (
        multi_kerov_polynomial((2, 2, 2))
        - 3 * multi_kerov_polynomial((2, 2)) * kerov_polynomial(2)
        + 2 * kerov_polynomial(2) ** 3
    )
    assert cumulant_polynomial((2, 2, 2)) == expected
    assert graded_degree(cumulant_polynomial((2, 2, 2))) < 3 * 3


def test_graded_degree():
    assert graded_degree(kerov_polynomial(5)) == 6
    assert graded_degree(RPolynomial()) == 0
    assert graded_degree(cumulant_polynomial((3, 2))) == 5


def test_graded_degree_is_dilation_degree():
    p = cumulant_polynomial((3, 2))
    lam = (3, 1)
    vals = [evaluate(p, dilate(lam, s)) for s in range(1, 9)]
    s = sympy.Symbol("s")
    fit = sympy.interpolate(list(zip(range(1, 9), vals)), s)
    assert sympy.degree(fit, s) == graded_degree(p)


def test_positivity_examples():
    assert positivity_report(kerov_polynomial(5)).ok
    report = positivity_report(multi_kerov_polynomial((3, 2)))
    assert not report.ok
    assert ((2, 3), -5) in report.offending
    assert positivity_report(-cumulant_polynomial((3, 2))).ok
    assert not positivity_report(Fraction(1, 2) * R(2)).ok


def test_round_trip_against_characters():
    for k in range(1, 7):
        p = kerov_polynomial(k)
        for lam in partitions_up_to(9):
            assert evaluate(p, lam) == normalized_character(lam, (k,))


@pytest.mark.parametrize("k", range(1, 8))
def test_structure(k):
    p = kerov_polynomial(k)
    top = p.sorted_terms()[0]
    assert top == ((k + 1,), 1)
    assert all(sum(m) % 2 == (k + 1) % 2 for m in p.terms)
    assert positivity_report(p).ok


@pytest.mark.parametrize("cycles", [(2, 2), (3, 2), (3, 3), (4, 2)])
def test_covariance_degree_drop(cycles):
    k, l = cycles
    assert graded_degree(cumulant_polynomial(cycles)) < k + l + 2


def test_candidate_basis():
    assert candidate_monomials(5, 1) == [(), (2,), (2, 2), (4,), (2, 2, 2), (2, 4), (3, 3), (6,)]
    assert all(sum(m) % 2 == 1 for m in candidate_monomials(5, 2))


def test_set_partitions_count():
    assert [sum(1 for _ in set_partitions(list(range(n)))) for n in range(6)] == [1, 1, 2, 5, 15, 52]


def test_solve_is_order_independent():
    basis = candidate_monomials(4, 1)
    sample = [lam for n in range(5, 9) for lam in partitions_of(n)]
    rng = random.Random(7)
    solutions = set()
    for _ in range(3):
        rng.shuffle(sample)
        a = [[_monomial_value(lam, m) for m in basis] for lam in sample]
        b = [normalized_character(lam, (4,)) for lam in sample]
        solutions.add(tuple(solve_exact(a, b)))
    assert len(solutions) == 1


def _monomial_value(lam, mono):
    r = free_cumulants(lam, 6)
    v = Fraction(1)
    for i in mono:
        v *= r[i - 1]
    return v


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5), st.integers(0, 3), st.randoms(use_true_random=False))
def test_solve_exact_matches_sympy(n, extra, rnd):
    a = [[Fraction(rnd.randint(-9, 9), rnd.randint(1, 4)) for _ in range(n)] for _ in range(n + extra)]
    x = [Fraction(rnd.randint(-9, 9), rnd.randint(1, 5)) for _ in range(n)]
    b = [sum(ai * xi for ai, xi in zip(row, x)) for row in a]
    m = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in a])
    if m.rank() < n:
        with pytest.raises(RankDeficientError):
            solve_exact(a, b)
    else:
        assert solve_exact(a, b) == x


def test_solve_exact_inconsistent():
    with pytest.raises(InconsistentSystemError):
        solve_exact([[1], [1]], [1, 2])


def test_consistency_error_is_distinct():
    assert not issubclass(ConsistencyError, ValueError)
