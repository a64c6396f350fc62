import math

import pytest

from cyclogcd.errors import HypothesisError
from cyclogcd.oracles import (
    delta_count,
    delta_count_range,
    delta_squarefree_count,
    delta_squarefree_range,
    gcd_seq_exact,
    multiplicatively_independent,
    upper_bound_monitor,
)


def test_gcd_seq_basic():
    rows = gcd_seq_exact(2, 3, 1, 1, 4)
    assert [(r.n, r.gcd_value) for r in rows] == [(1, 1), (2, 1), (3, 1), (4, 5)]
    assert rows[3].log_gcd == pytest.approx(math.log(5))
    assert rows[3].distinct_prime_count == 1


def test_gcd_seq_cyclotomic_indices():
    rows = gcd_seq_exact(3, 5, 2, 2, 3)
    # gcd(3^n + 1, 5^n + 1): n = 3 gives gcd(28, 126) = 14
    assert [(r.n, r.gcd_value) for r in rows] == [(1, 2), (2, 2), (3, 14)]


def test_gcd_seq_size_cap():
    with pytest.raises(ValueError, match="bits"):
        gcd_seq_exact(2, 3, 1, 1, 10**7)
    with pytest.raises(ValueError):
        gcd_seq_exact(1, 3, 1, 1, 5)


def test_gcd_seq_parallel_matches():
    assert gcd_seq_exact(2, 3, 2, 2, 40, jobs=3) == gcd_seq_exact(2, 3, 2, 2, 40)


def test_cyclotomic_rows_divide_full_rows():
    # Phi_N(x) | x^N - 1, so the (N, N) row at n divides the (1, 1) row at N*n
    for idx in (2, 3, 4):
        small = gcd_seq_exact(2, 3, idx, idx, 40)
        full = gcd_seq_exact(2, 3, 1, 1, 40 * idx)
        for row in small:
            assert full[idx * row.n - 1].gcd_value % row.gcd_value == 0


def test_delta_goldens():
    # confirmed against divisor enumeration before freezing
    assert delta_count(1) == 1
    assert delta_count(12) == 5     # d in {1, 2, 4, 6, 12}
    assert delta_count(7) == 1      # only d = 1 (7 + 1 = 8 is composite)
    assert delta_squarefree_count(12) == 3   # d = 4 and d = 12 are not squarefree
    assert delta_squarefree_count(1) == 1


def test_delta_range_agrees_with_single_calls():
    table = delta_count_range(2000)
    for n in (1, 2, 7, 12, 100, 720, 1999):
        assert table[n] == delta_count(n)
    sf = delta_squarefree_range(2000)
    for n in (1, 12, 360, 1999):
        assert sf[n] == delta_squarefree_count(n)


def test_delta_squarefree_never_exceeds_delta():
    table = delta_count_range(5000)
    sf = delta_squarefree_range(5000)
    for n in range(1, 5001):
        assert sf[n] <= table[n]


def test_upper_bound_monitor_examples():
    assert upper_bound_monitor(2, 3, 1, 1) == (0.0, 1)
    ratio, arg = upper_bound_monitor(2, 3, 1, 10)
    assert arg == 4 and ratio == pytest.approx(math.log(5) / 4)


def test_upper_bound_monitor_range_nesting():
    inner, _ = upper_bound_monitor(2, 3, 100, 400)
    outer, _ = upper_bound_monitor(2, 3, 1, 400)
    assert inner <= outer


def test_upper_bound_monitor_requires_independence():
    with pytest.raises(HypothesisError, match="dependent"):
        upper_bound_monitor(2, 8, 1, 10)
    with pytest.raises(HypothesisError):
        upper_bound_monitor(4, 2, 1, 10)


def test_multiplicative_independence():
    assert multiplicatively_independent(2, 3)
    assert multiplicatively_independent(12, 18)
    assert not multiplicatively_independent(2, 8)
    assert not multiplicatively_independent(4, 8)
    assert not multiplicatively_independent(1, 5)
