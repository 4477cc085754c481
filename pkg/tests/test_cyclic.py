import math
import random

import pytest

from lrclcd import matrix
from lrclcd.cosets import all_cosets, defining_set, negate_set
from lrclcd.cyclic import (
    code_record,
    contains,
    dual_code,
    encode,
    from_defining_set,
    generator_matrix,
    is_lcd,
    parity_check_matrix,
)
from lrclcd.errors import (
    LengthMismatch,
    NoSplittingField,
    NotGaloisClosed,
    ParameterViolation,
)
from lrclcd.galois import make_field
from lrclcd.polyring import Poly


def random_code(rng, *, qs=(2, 3, 5, 7), max_n=30, max_split=4096, force=None):
    """A random cyclic code with a manageable splitting field.

    force="symmetric" unions in the negated cosets (a mirror-closed set);
    force="asymmetric" keeps resampling until the set is not mirror-closed.
    """
    while True:
        q = rng.choice(qs)
        n = rng.randrange(2, max_n + 1)
        if math.gcd(n, q) != 1:
            continue
        if q**_order(q, n) > max_split:
            continue
        cosets = all_cosets(n, q)
        chosen = [c for c in cosets if rng.random() < 0.45]
        exps = {v for c in chosen for v in c.members}
        if force == "symmetric":
            exps |= {(n - v) % n for v in exps}
        zeros = defining_set(n, exps)
        if force == "asymmetric" and zeros.is_negation_closed():
            continue
        if force == "proper" and (len(zeros) == 0 or len(zeros) == n):
            continue
        return from_defining_set(make_field(q), n, zeros)


def _order(q, n):
    k, x = 1, q % n
    if x == 1 or n == 1:
        return 1
    while x != 1:
        x = x * q % n
        k += 1
    return k


def test_parity_check_code(gf2):
    code = from_defining_set(gf2, 7, [0])
    assert code.g == Poly(gf2, (1, 1))
    assert code.k == 6


def test_reference_qary_code(gf37):
    zeros = defining_set(36, list(range(0, 36, 6)) + [s % 36 for s in range(-6, 7)])
    code = from_defining_set(gf37, 36, zeros)
    assert code.k == 20
    assert code.g.degree == 16


def test_not_galois_closed(gf2):
    with pytest.raises(NotGaloisClosed):
        from_defining_set(gf2, 7, [1])


def test_length_coprime_required(gf2):
    with pytest.raises(ParameterViolation):
        from_defining_set(gf2, 14, [0])


def test_splitting_field_budget(gf2):
    with pytest.raises(NoSplittingField):
        from_defining_set(gf2, 63, [0, 1, 2, 4, 8, 16, 32], table_budget=32)


def test_generator_roots_exactly_defining_set():
    rng = random.Random(21)
    for _ in range(25):
        code = random_code(rng)
        assert code.k == code.n - len(code.zeros)
        assert (code.g * code.h) == Poly.x_pow_n_minus_1(code.field, code.n)
        lift = Poly(code.splitting, [_embed(code, c) for c in code.g.coeffs])
        for i in range(code.n):
            value = lift.eval((code.alpha**i).value)
            assert (value == 0) == (i in code.zeros)


def _embed(code, c):
    from lrclcd.galois import subfield_map

    return subfield_map(code.splitting, code.field).embed(c)


def test_generator_matrix_shapes(gf2):
    code = from_defining_set(gf2, 7, [0])
    g = generator_matrix(code)
    assert len(g) == 6 and all(len(row) == 7 for row in g)
    assert all(sum(row) == 2 for row in g)
    assert matrix.rank(g, gf2) == 6


def test_parity_and_generator_orthogonal():
    rng = random.Random(22)
    for _ in range(20):
        code = random_code(rng, force="proper")
        g = generator_matrix(code)
        h = parity_check_matrix(code)
        assert matrix.rank(g, code.field) == code.k
        assert matrix.rank(h, code.field) == code.n - code.k
        for grow in g:
            for hrow in h:
                assert matrix.dot(grow, hrow, code.field) == 0


def test_every_generator_row_is_a_multiple_of_g():
    rng = random.Random(23)
    code = random_code(rng, force="proper")
    for row in generator_matrix(code):
        assert (Poly.from_coeffs(code.field, row) % code.g).is_zero()


def test_dual_of_parity_check_is_repetition(gf2):
    code = from_defining_set(gf2, 7, [0])
    dual = dual_code(code)
    assert dual.g == Poly(gf2, (1,) * 7)
    assert dual.k == 1
    for grow in generator_matrix(code):
        for drow in generator_matrix(dual):
            assert matrix.dot(grow, drow, gf2) == 0


def test_dual_whole_space_is_zero_code(gf13):
    whole = from_defining_set(gf13, 12, [])
    dual = dual_code(whole)
    assert dual.k == 0
    assert len(dual.zeros) == 12


def test_dual_defining_set_view():
    rng = random.Random(24)
    for _ in range(30):
        code = random_code(rng)
        dual = dual_code(code)
        expected = negate_set(code.zeros).complement()
        assert dual.zeros == expected
        rebuilt = from_defining_set(code.field, code.n, expected)
        assert rebuilt.g == dual.g


def test_dual_generator_is_normalized_reciprocal():
    rng = random.Random(25)
    for _ in range(200):
        code = random_code(rng)
        dual = dual_code(code)
        assert dual.g == code.h.reciprocal().monic()


def test_dual_of_dual_restores_defining_set():
    rng = random.Random(26)
    for _ in range(50):
        code = random_code(rng)
        assert dual_code(dual_code(code)).zeros == code.zeros


def test_gh_product_law_random():
    rng = random.Random(27)
    for _ in range(200):
        code = random_code(rng)
        assert code.g * code.h == Poly.x_pow_n_minus_1(code.field, code.n)


def test_lcd_reference_code(gf37):
    zeros = defining_set(36, list(range(0, 36, 6)) + [s % 36 for s in range(-6, 7)])
    verdict = is_lcd(from_defining_set(gf37, 36, zeros))
    assert verdict.consensus
    assert verdict.self_reciprocal and verdict.negation_closed and verdict.hull_trivial


def test_lcd_negative_hamming(gf2):
    code = from_defining_set(gf2, 7, [1, 2, 4])
    verdict = is_lcd(code)
    assert not verdict.consensus
    assert not verdict.self_reciprocal
    assert not verdict.negation_closed
    assert not verdict.hull_trivial
    # directly: the Gram matrix of G loses rank
    g = generator_matrix(code)
    packed = [matrix.pack_gf2(row) for row in g]
    assert matrix.rank_gf2(matrix.gram_gf2(packed)) < code.k


def test_lcd_whole_space(gf13):
    verdict = is_lcd(from_defining_set(gf13, 12, []))
    assert verdict.consensus


def test_lcd_power_condition_flag(gf2, gf37):
    # 2^2 = -1 mod 5, so every binary cyclic code of length 5 gets the hint
    verdict = is_lcd(from_defining_set(gf2, 5, [0]))
    assert verdict.power_condition
    # 37 = 1 mod 36: the hint is off even though the code is complementary-dual
    zeros = defining_set(36, list(range(0, 36, 6)) + [s % 36 for s in range(-6, 7)])
    assert not is_lcd(from_defining_set(gf37, 36, zeros)).power_condition


def test_lcd_three_way_agreement_random():
    rng = random.Random(28)
    lcd_seen = not_lcd_seen = 0
    for _ in range(200):
        force = "symmetric" if rng.random() < 0.5 else "asymmetric"
        code = random_code(rng, force=force)
        verdict = is_lcd(code)  # raises InvariantViolation on any disagreement
        assert verdict.consensus == code.zeros.is_negation_closed()
        lcd_seen += verdict.consensus
        not_lcd_seen += not verdict.consensus
    assert lcd_seen >= 50 and not_lcd_seen >= 50


def test_reversibility_matches_negation_closure():
    rng = random.Random(29)
    for _ in range(12):
        force = "symmetric" if rng.random() < 0.5 else "asymmetric"
        code = random_code(rng, force=force)
        if code.k == 0:
            continue
        lcd = code.zeros.is_negation_closed()
        reversals_inside = 0
        for _ in range(200):
            message = [rng.randrange(code.q) for _ in range(code.k)]
            word = encode(code, message)
            reversals_inside += contains(code, word[::-1])
        if lcd:
            assert reversals_inside == 200
        else:
            assert reversals_inside < 200


def test_encode_contains(gf2):
    code = from_defining_set(gf2, 7, [0])
    assert encode(code, [0] * 6) == [0] * 7
    rng = random.Random(30)
    for _ in range(50):
        message = [rng.randrange(2) for _ in range(6)]
        assert contains(code, encode(code, message))
    assert not contains(code, [1, 0, 0, 0, 0, 0, 0])
    with pytest.raises(LengthMismatch):
        encode(code, [1, 0])
    with pytest.raises(LengthMismatch):
        contains(code, [1, 0])


def test_code_record_fields(gf37):
    zeros = defining_set(36, list(range(0, 36, 6)) + [s % 36 for s in range(-6, 7)])
    record = code_record(from_defining_set(gf37, 36, zeros))
    assert record["q"] == 37 and record["m"] == 1 and record["n"] == 36
    assert record["modulus"] is None
    assert record["k"] == 20
    assert len(record["defining_set"]) == 16
    assert len(record["g"]) == 17


def test_code_record_binary_extension(gf2):
    record = code_record(from_defining_set(gf2, 7, [1, 2, 4]))
    assert record["m"] == 3
    assert record["modulus"] == [1, 1, 0, 1]
