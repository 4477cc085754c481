import math
import random

import pytest

from lrclcd.cosets import (
    all_cosets,
    cyclotomic_coset,
    defining_set,
    longest_consecutive_run,
    negate_set,
)
from lrclcd.errors import EmptySet, NotCoprime
from lrclcd.galois import multiplicative_order


def test_coset_of_one_mod_63():
    assert cyclotomic_coset(1, 63, 2).members == (1, 2, 4, 8, 16, 32)


def test_coset_of_zero_is_fixed_point():
    assert cyclotomic_coset(0, 63, 2).members == (0,)


def test_singleton_cosets_when_q_is_one_mod_n():
    assert cyclotomic_coset(5, 16, 17).members == (5,)
    assert all(len(c) == 1 for c in all_cosets(12, 13))


def test_not_coprime_rejected():
    with pytest.raises(NotCoprime):
        cyclotomic_coset(1, 14, 2)
    with pytest.raises(NotCoprime):
        all_cosets(9, 3)


def test_all_cosets_partition_small():
    cosets = all_cosets(7, 2)
    assert [c.members for c in cosets] == [(0,), (1, 2, 4), (3, 5, 6)]
    assert [c.members for c in all_cosets(3, 2)] == [(0,), (1, 2)]


def test_all_cosets_is_partition_random():
    rng = random.Random(11)
    for _ in range(100):
        q = rng.choice([2, 3, 4, 5, 7, 8, 9])
        n = rng.randrange(1, 200)
        if math.gcd(n, q) != 1:
            continue
        cosets = all_cosets(n, q)
        flattened = [v for c in cosets for v in c.members]
        assert sorted(flattened) == list(range(n))
        for c in cosets:
            assert c.rep == min(c.members)
            assert all(v * q % n in c.members for v in c.members)


def test_negation_examples():
    assert negate_set(defining_set(9, [0])).exponents == (0,)
    neg = negate_set(defining_set(63, cyclotomic_coset(1, 63, 2).members))
    assert neg.exponents == (31, 47, 55, 59, 61, 62)
    assert neg.exponents == cyclotomic_coset(62, 63, 2).members
    window = defining_set(36, [s % 36 for s in range(-6, 7)])
    assert negate_set(window) == window


def test_negation_is_involution():
    rng = random.Random(12)
    for _ in range(200):
        n = rng.randrange(1, 100)
        s = defining_set(n, rng.sample(range(n), rng.randrange(min(n, 20) + 1)))
        assert negate_set(negate_set(s)) == s


def test_mirror_coset_law_random():
    # for any b in [a], n - b lies in [n - a]
    rng = random.Random(13)
    checked = 0
    while checked < 200:
        q = rng.choice([2, 3, 4, 5, 7, 8, 9])
        n = rng.randrange(2, 300)
        if math.gcd(n, q) != 1:
            continue
        a = rng.randrange(n)
        mirror = cyclotomic_coset((n - a) % n, n, q)
        for b in cyclotomic_coset(a, n, q).members:
            assert (n - b) % n in mirror
        checked += 1


def test_coset_sizes_divide_order_sweep():
    # sizes divide ord_n(q) and the coset of 1 realizes it, for every n <= 512
    for q in (2, 3, 4, 5, 7, 8, 9):
        for n in range(2, 513):
            if math.gcd(n, q) != 1:
                continue
            order = multiplicative_order(q, n)
            assert len(cyclotomic_coset(1, n, q)) == order
            for coset in all_cosets(n, q):
                assert order % len(coset) == 0


def test_run_detection_reference_sets():
    z33 = defining_set(36, list(range(0, 36, 6)) + [s % 36 for s in range(-6, 7)])
    assert longest_consecutive_run(z33) == (30, 13)

    base31 = list(range(0, 63, 3))
    extra31 = list(cyclotomic_coset(1, 63, 2).members) + list(cyclotomic_coset(62, 63, 2).members)
    assert longest_consecutive_run(defining_set(63, base31 + extra31)) == (59, 9)

    assert longest_consecutive_run(defining_set(10, range(10))) == (0, 10)


def test_run_detection_edge_cases():
    assert longest_consecutive_run(defining_set(10, [3])) == (3, 1)
    assert longest_consecutive_run(defining_set(10, [9, 0, 1, 5])) == (9, 3)
    # ties on length resolve toward the smaller start
    assert longest_consecutive_run(defining_set(12, [1, 2, 7, 8])) == (1, 2)
    with pytest.raises(EmptySet):
        longest_consecutive_run(defining_set(10, []))


def test_run_detection_against_rotation_oracle():
    # brute-force oracle: try every rotation offset and count prefixes
    rng = random.Random(14)
    for _ in range(200):
        n = rng.randrange(2, 40)
        members = {v for v in range(n) if rng.random() < 0.45}
        if not members:
            continue
        s = defining_set(n, members)
        best = (0, -1)
        for start in range(n):
            if start not in members:
                continue
            length = 0
            while length < n and (start + length) % n in members:
                length += 1
            if length > best[1] or (length == best[1] and start < best[0]):
                best = (start, length)
        expected = (0, n) if len(members) == n else best
        assert longest_consecutive_run(s) == expected


def test_defining_set_normalization():
    s = defining_set(10, [-1, 11, 3, 3])
    assert s.exponents == (1, 3, 9)
    assert 11 in s and 9 in s and 4 not in s
    assert s.complement().exponents == (0, 2, 4, 5, 6, 7, 8)
    assert s.union([4]).exponents == (1, 3, 4, 9)


def test_closure_predicate():
    s = defining_set(7, [1, 2, 4])
    assert s.is_closed_under(2)
    assert not defining_set(7, [1, 2]).is_closed_under(2)
