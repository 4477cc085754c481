import random

import pytest

from lrclcd.analysis import LocalCheck, LrcProfile, verify_locality
from lrclcd.constructions import (
    binary_construction1,
    binary_construction2,
    qary_lrc_lcd_even,
    qary_lrc_lcd_general,
)
from lrclcd.cyclic import encode, from_defining_set
from lrclcd.errors import NoLocalCheck, ParameterViolation
from lrclcd.repair import ErasurePattern, RepairStats, SplitMix64, erase, repair_erasure, simulate


def test_splitmix64_reference_sequence():
    # the canonical seed-0 vector, as published for the reference implementation
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [
        16294208416658607535, 7960286522194355700, 487617019471545679]
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(3)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423]


def test_splitmix64_determinism():
    a = SplitMix64(42)
    b = SplitMix64(42)
    assert [a.next() for _ in range(100)] == [b.next() for _ in range(100)]


def test_erasure_pattern_validation():
    erase([1, 2, 3], 1)
    with pytest.raises(ParameterViolation):
        erase([1, 2, 3], 5)
    with pytest.raises(ParameterViolation):
        ErasurePattern(erased_index=0, received=[1, 2, 3])
    with pytest.raises(ParameterViolation):
        ErasurePattern(erased_index=0, received=[None, None, 3])


def test_zero_word_repairs_to_zero(gf37):
    code = qary_lrc_lcd_even(37, 36, 20, 5)
    profile = verify_locality(code, 5)
    word = encode(code, [0] * 20)
    for i in (0, 7, 35):
        assert repair_erasure(code, profile, erase(word, i)) == 0


def test_parity_code_repair(gf2):
    code = from_defining_set(gf2, 3, [0])
    profile = verify_locality(code, 2)
    # (1, 1, 0) is a codeword of the even-weight code; erase its last symbol
    assert repair_erasure(code, profile, erase([1, 1, 0], 2)) == 0
    assert repair_erasure(code, profile, erase([1, 0, 1], 1)) == 0


class _TrackingWord(list):
    def __init__(self, seq):
        super().__init__(seq)
        self.reads = []

    def __getitem__(self, i):
        self.reads.append(i)
        return super().__getitem__(i)


def test_repair_reads_only_the_recovering_set(gf37):
    code = qary_lrc_lcd_even(37, 36, 20, 5)
    profile = verify_locality(code, 5)
    rng = random.Random(77)
    message = [rng.randrange(37) for _ in range(20)]
    word = encode(code, message)
    tracked = _TrackingWord(word)
    tracked[7] = None
    pattern = ErasurePattern(erased_index=7, received=tracked)
    tracked.reads.clear()
    value = repair_erasure(code, profile, pattern)
    assert value == word[7]
    assert set(tracked.reads) == set(profile.recovering_set(7)) == {1, 13, 19, 25, 31}


def test_no_local_check(gf2):
    code = from_defining_set(gf2, 3, [0])
    bogus = LrcProfile(n=3, r=2, checks=(None, None, None))
    with pytest.raises(NoLocalCheck):
        repair_erasure(code, bogus, erase([0, 0, 0], 1))


def test_simulation_full_success_and_reproducibility(gf37):
    code = qary_lrc_lcd_even(37, 36, 20, 5)
    profile = verify_locality(code, 5)
    stats = simulate(code, profile, 500, seed=7)
    again = simulate(code, profile, 500, seed=7)
    assert stats.successes == 500
    assert stats.symbols_read_mean == 5.0
    assert stats.failures == []
    assert sum(stats.per_coordinate_hits) == 500
    assert stats.to_dict() == again.to_dict()
    shifted = simulate(code, profile, 500, seed=8)
    assert shifted.per_coordinate_hits != stats.per_coordinate_hits


def test_simulation_across_families():
    cases = [
        (binary_construction1(4, 4), 4),
        (binary_construction2(6, 2), 2),
        (qary_lrc_lcd_general(17, 16, 8, 3), 3),
        (qary_lrc_lcd_even(13, 12, 4, 2), 2),
    ]
    for code, r in cases:
        profile = verify_locality(code, r)
        stats = simulate(code, profile, 300, seed=11)
        assert stats.successes == 300
        assert stats.symbols_read_mean == float(r)


def test_corrupted_profile_is_caught(gf37):
    code = qary_lrc_lcd_even(37, 36, 20, 5)
    profile = verify_locality(code, 5)
    # perturb one coefficient of the group covering coordinates {1, 7, ...}
    checks = list(profile.checks)
    target = checks[7]
    bad_coeffs = list(target.coeffs)
    bad_coeffs[0] = 2  # was 1
    bad = LocalCheck(positions=target.positions, coeffs=tuple(bad_coeffs))
    for p in target.positions:
        checks[p] = bad
    corrupted = LrcProfile(n=36, r=5, checks=tuple(checks))
    stats = simulate(code, corrupted, 200, seed=3)
    assert stats.successes < 200
    assert stats.failures
    first = stats.failures[0]
    assert {"trial", "index", "expected", "recovered"} <= set(first)


def test_repair_stats_json_fields(gf37):
    code = qary_lrc_lcd_even(37, 36, 20, 5)
    profile = verify_locality(code, 5)
    d = simulate(code, profile, 10, seed=1).to_dict()
    assert set(d) == {"trials", "successes", "symbols_read_mean", "per_coordinate_hits"}
