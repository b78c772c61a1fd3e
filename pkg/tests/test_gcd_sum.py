import math
import random

import pytest

from gcdsum import (
    Algorithm,
    divisor_summatory,
    lattice_count,
    s_brute,
    s_exact,
    s_identity,
    s_lemma1,
    sieve_tau,
    tau,
)
from oracles import common_divisors, s_by_pair_enumeration


def test_examples_brute():
    assert s_brute(1) == 1
    assert s_brute(4) == 9
    assert s_brute(10) == 31


def test_examples_lemma1():
    assert s_lemma1(1) == 1
    # d=1 and d=2 pieces of N=4
    assert lattice_count(4) == 8 and lattice_count(1) == 1
    assert s_lemma1(4) == 9
    assert s_lemma1(10) == lattice_count(10) + lattice_count(2) + lattice_count(1) == 31


def test_examples_identity():
    assert s_identity(4) == divisor_summatory(4) + divisor_summatory(1) == 9
    assert s_identity(10) == 31


def test_regression_value_at_1e6():
    # agreed across all three algorithms when first computed
    assert s_identity(10**6) == 21107131
    assert s_lemma1(10**6) == 21107131


def test_brute_matches_pair_enumeration():
    for n in list(range(1, 120)) + [137, 200, 256]:
        assert s_brute(n) == s_by_pair_enumeration(n)


def test_three_way_agreement_small():
    for n in range(1, 301):
        assert s_brute(n) == s_lemma1(n) == s_identity(n)


def test_three_way_agreement_random():
    rng = random.Random(424242)
    for _ in range(10):
        n = rng.randrange(1, 10**5)
        assert s_brute(n) == s_lemma1(n) == s_identity(n)


def test_s_is_strictly_increasing_with_tau_sized_steps():
    # S(N) - S(N-1) = sum over divisor pairs a*b = N of tau(gcd(a, b)),
    # which has tau(N) terms, each >= 1, and the pairs (1,N),(N,1) give 2.
    t = sieve_tau(10**4)
    prev = 0
    for n in range(1, 10**4 + 1):
        cur = s_identity(n)
        step = cur - prev
        assert step >= int(t.tau[n])
        if n >= 2:
            assert step >= 2
        prev = cur


def test_s_dominates_divisor_summatory():
    for n in range(1, 10**4 + 1, 7):
        assert s_identity(n) >= divisor_summatory(n)


def test_common_divisor_count_is_tau_of_gcd():
    rng = random.Random(31337)
    for _ in range(1000):
        a = rng.randrange(1, 5000)
        b = rng.randrange(1, 5000)
        assert len(common_divisors(a, b)) == tau(math.gcd(a, b))


def test_rejects_zero():
    for fn in (s_brute, s_lemma1, s_identity):
        with pytest.raises(ValueError):
            fn(0)


def test_brute_cap():
    with pytest.raises(ValueError):
        s_brute(10**7 + 1)
    with pytest.raises(ValueError):
        s_brute(50, cap=10)


def test_dispatch_matches_direct_calls():
    n = 1234
    assert s_exact(n, Algorithm.BRUTE) == s_brute(n)
    assert s_exact(n, Algorithm.LEMMA1_LATTICE) == s_lemma1(n)
    assert s_exact(n, Algorithm.IDENTITY_SUMMATORY) == s_identity(n)
    assert s_exact(n) == s_identity(n)
