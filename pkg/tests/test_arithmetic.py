from math import gcd

import pytest

from crownmagic.arithmetic import (
    BezoutData,
    bounded_bezout,
    conflict_pair,
    conflict_values,
    exceptional_r,
    is_odd_prime,
    scan_conflict_values,
)
from crownmagic.exceptions import InvalidInput

PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def prime_pairs(limit):
    return [
        (p, q)
        for i, p in enumerate(PRIMES)
        for q in PRIMES[i + 1 :]
        if p * q <= limit
    ]


def brute_bezout(p, q):
    """All alpha with |alpha p| within the bound and alpha p + beta q = 1."""
    hits = []
    for alpha in range(-q, q + 1):
        rest = 1 - alpha * p
        if rest % q == 0 and max(abs(alpha * p), abs(rest)) <= (p * q + 1) // 2:
            hits.append((alpha, rest // q))
    return hits


@pytest.mark.parametrize(
    "p,q,alpha,beta", [(3, 5, 2, -1), (3, 7, -2, 1), (5, 7, 3, -2)]
)
def test_bounded_bezout_examples(p, q, alpha, beta):
    data = bounded_bezout(p, q)
    assert (data.alpha, data.beta) == (alpha, beta)


@pytest.mark.parametrize("p,q", prime_pairs(200))
def test_bounded_bezout_matches_brute_force(p, q):
    data = bounded_bezout(p, q)
    assert (data.alpha, data.beta) in brute_bezout(p, q)
    assert data.alpha * p + data.beta * q == 1
    assert max(abs(data.alpha * p), abs(data.beta * q)) <= (p * q + 1) // 2
    positives = [v for v in (data.alpha * p, data.beta * q) if v > 0]
    assert positives == [data.x]
    assert data.x_prime == p * q - data.x + 1
    for y in (data.x, data.x_prime):
        assert 1 < y < p * q
        assert gcd(y, p * q) != 1 and gcd(y - 1, p * q) != 1


def test_bezout_rejects_bad_inputs():
    with pytest.raises(InvalidInput):
        bounded_bezout(3, 3)
    with pytest.raises(InvalidInput):
        bounded_bezout(3, 6)
    with pytest.raises(InvalidInput):
        bounded_bezout(3, 9)


@pytest.mark.parametrize(
    "p,q,pair", [(3, 5, (6, 10)), (3, 7, (7, 15)), (5, 7, (15, 21))]
)
def test_conflict_pair_examples(p, q, pair):
    assert conflict_pair(p, q) == pair


@pytest.mark.parametrize("p,q", prime_pairs(200))
def test_conflict_pair_matches_exhaustive_scan(p, q):
    assert list(conflict_pair(p, q)) == scan_conflict_values(p * q)
    assert sum(conflict_pair(p, q)) == p * q + 1


def test_conflict_values_examples():
    assert conflict_values(3, 1, 5) == [6, 10]
    assert conflict_values(3, 2, 5) == [6, 10, 21, 25, 36, 40]
    assert conflict_values(5, 1, 3) == [6, 10]


def test_conflict_values_match_scan_up_to_500():
    for p, q in [(3, 5), (3, 7), (3, 11), (3, 13), (5, 7), (5, 11), (5, 13), (7, 11)]:
        k = 1
        while p**k * q <= 500:
            values = conflict_values(p, k, q)
            assert values == scan_conflict_values(p**k * q)
            assert len(values) == 2 * p ** (k - 1)
            k += 1


def test_exceptional_r_examples():
    assert [r - 1 for r in exceptional_r(3, 5, 1)] == [2, 13]
    assert [r - 1 for r in exceptional_r(3, 5, 2)] == [2, 13, 17, 28]
    assert [r - 1 for r in exceptional_r(3, 7, 1)] == [4, 17]


@pytest.mark.parametrize("p,q", prime_pairs(143))
@pytest.mark.parametrize("n", [1, 2])
def test_exceptional_r_families_and_pairing(p, q, n):
    m = p * q
    data = bounded_bezout(p, q)
    e0 = ((m + 1) // 2 - data.x) % m
    expected = sorted(
        e + lam * m
        for e in (e0, m - e0)
        for lam in range(n)
        if e + lam * m <= m * n
    )
    shifts = [r - 1 for r in exceptional_r(p, q, n)]
    assert shifts == expected
    # complement pairing within the shift range
    assert sorted(m * n - s for s in shifts) == shifts


def test_is_odd_prime():
    assert [x for x in range(50) if is_odd_prime(x)] == [
        3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    ]


def test_bezout_data_validates():
    with pytest.raises(AssertionError):
        BezoutData(p=3, q=5, alpha=1, beta=1, x=6, x_prime=10, alpha_prime=2, beta_prime=3)
