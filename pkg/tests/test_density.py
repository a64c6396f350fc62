from fractions import Fraction

import pytest

from cyclogcd.arith import li, sieve_primes
from cyclogcd.density import (
    dependence_exponent,
    empirical_density,
    empirical_tolerance,
    group_complement_count,
    predicted_density,
)
from cyclogcd.errors import HypothesisError


def test_dependence_exponent_examples():
    assert dependence_exponent(2, 3, 2) == 3
    assert dependence_exponent(2, 4, 3) == 2   # vectors (1), (2) over F_3
    assert dependence_exponent(12, 18, 5) == 3
    assert dependence_exponent(2, 8, 2) == 2   # 8 = 2^3, (1) and (3) agree mod 2
    with pytest.raises(HypothesisError):
        dependence_exponent(4, 3, 2)           # 4 is a square


def test_dependence_exponent_symmetric():
    for a, b, l in ((2, 3, 2), (2, 8, 2), (12, 18, 5), (6, 10, 3), (2, 4, 3)):
        assert dependence_exponent(a, b, l) == dependence_exponent(b, a, l)


def test_predicted_density_examples():
    assert predicted_density(2, 1, 2, 3).ratio == Fraction(1, 8)
    # (3-1)^3 / (phi(3) * 3^3) = 8/54 = 4/27
    assert predicted_density(3, 1, 2, 3).ratio == Fraction(4, 27)
    assert predicted_density(2, 1, 2, 8).ratio == Fraction(1, 4)
    assert predicted_density(1, 1, 2, 3).ratio == Fraction(1, 1)


def test_predicted_density_monotone_in_d():
    last = Fraction(2)
    for d in (1, 3, 5, 15, 105):
        ratio = predicted_density(2, d, 2, 3).ratio
        assert ratio < last
        last = ratio


def test_predicted_density_hypotheses():
    with pytest.raises(HypothesisError):
        predicted_density(2, 4, 2, 3)   # d not squarefree
    with pytest.raises(HypothesisError):
        predicted_density(2, 2, 3, 5)   # d shares a factor with N
    with pytest.raises(HypothesisError):
        predicted_density(2, 1, 4, 3)   # base is a square


def brute_count(x, modulus, d, a, b, ells):
    count = 0
    for p in sieve_primes(x):
        if (p - 1) % (modulus * d):
            continue
        ok = True
        for l in ells:
            if (p - 1) % (modulus * l) == 0:
                ok = False
                break
            if a % p == 0 or pow(a, (p - 1) // l, p) == 1:
                ok = False
                break
            if b % p == 0 or pow(b, (p - 1) // l, p) == 1:
                ok = False
                break
        if ok:
            count += 1
    return count


def test_empirical_density_matches_brute_force():
    for modulus, d, a, b, ells in ((2, 1, 2, 3, (2,)), (2, 3, 2, 3, (2,)), (3, 1, 2, 3, (3,)), (1, 1, 2, 3, ())):
        check = empirical_density(10**4, modulus, d, a, b)
        assert check.count == brute_count(10**4, modulus, d, a, b, ells)


def test_empirical_density_no_conditions_for_index_one():
    check = empirical_density(1000, 1, 1, 2, 3)
    assert check.count == 168          # pi(1000); p | ab is not excluded when N = 1
    assert check.expected == pytest.approx(li(1000), rel=1e-9)


def test_empirical_density_accuracy_medium():
    check = empirical_density(10**5, 2, 1, 2, 3)
    assert check.relative_error < empirical_tolerance(check.count)
    check = empirical_density(10**5, 3, 1, 2, 3)  # the 4/27 case
    assert check.relative_error < empirical_tolerance(check.count)
    check = empirical_density(10**5, 2, 5, 2, 3)  # d sharing no factor with a, b
    assert check.relative_error < empirical_tolerance(check.count)


def test_empirical_density_entangled_d():
    # When a base shares a prime with d the independence behind the ratio
    # formula breaks: for (N, d, a, b) = (2, 3, 2, 3), p = 1 mod 6 with
    # p != 1 mod 4 forces p = 7 mod 12, where 3 is automatically a
    # non-square by quadratic reciprocity.  The true count is twice the
    # formula value; the empirical scan is the authority here.
    check = empirical_density(10**5, 2, 3, 2, 3)
    assert check.count / check.expected == pytest.approx(2.0, rel=0.1)


def test_empirical_density_parallel_agrees():
    seq = empirical_density(2 * 10**4, 2, 1, 2, 3, jobs=1)
    par = empirical_density(2 * 10**4, 2, 1, 2, 3, jobs=4)
    assert seq == par


def test_empirical_density_rejects_tiny_x():
    with pytest.raises(ValueError):
        empirical_density(50, 2, 1, 2, 3)


def test_group_complement_count():
    for l in (2, 3, 5, 7, 11, 13):
        for f in (2, 3):
            assert group_complement_count(l, f) == (l - 1) ** f
    assert group_complement_count(2, 3) == 1
    assert group_complement_count(3, 3) == 8
    assert group_complement_count(5, 2) == 16
