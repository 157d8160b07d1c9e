"""BCH codes, their duals, codeword generation, and m-sequences."""

from math import comb

import numpy as np
import pytest

from codewigner import codes, gf2


def test_code_params_examples():
    assert codes.code_params(4, 5) == codes.CodeParams(n=15, k=7, k_dual=8, t=2)
    assert codes.code_params(3, 3) == codes.CodeParams(n=7, k=4, k_dual=3, t=1)
    assert codes.code_params(18, 3) == codes.CodeParams(
        n=262143, k=262125, k_dual=18, t=1
    )


def test_code_params_rejects_bad_inputs():
    with pytest.raises(ValueError):
        codes.code_params(1, 3)
    with pytest.raises(ValueError):
        codes.code_params(4, 4)  # even designed distance
    with pytest.raises(ValueError):
        codes.code_params(4, 1)
    with pytest.raises(ValueError):
        codes.code_params(3, 5)  # 2t-1 = 3 not < 2^1+1
    with pytest.raises(ValueError):
        codes.code_params(4, 7)  # 2t-1 = 5 not < 2^2+1


def test_bch_generator_examples(field16):
    assert codes.bch_generator(field16, 3) == 0x13
    # lcm picks up the minimal polynomial of alpha^3 and skips repeats
    assert codes.bch_generator(field16, 5) == 0x1D1
    assert gf2.poly_mul(0x13, 0x1F) == 0x1D1
    field8 = gf2.field_new(3)
    assert codes.bch_generator(field8, 3) == 0xB


def test_generator_degree_matches_regime_prediction():
    for m in range(2, 9):
        delta = 3
        while 2 * ((delta - 1) // 2) - 1 < 2 ** (m // 2) + 1:
            code = codes.bch_code(m, delta)
            assert code.generator.degree == m * code.t, (m, delta)
            delta += 2


def test_dual_check_poly_examples():
    assert codes.dual_check_poly(0xB, 7) == 0x1D
    h = codes.dual_check_poly(0x1D1, 15)
    assert h.degree == 7
    # cross-check against long division by the reciprocal generator
    q, r = gf2.poly_divrem((1 << 15) | 1, gf2.poly_reciprocal(0x1D1))
    assert r == 0 and h == q


def test_dual_check_poly_rejects_nondivisors():
    with pytest.raises(ValueError):
        codes.dual_check_poly(0x5, 7)  # x^2+1 does not divide x^7+1
    with pytest.raises(ValueError):
        codes.dual_check_poly(0, 7)
    with pytest.raises(ValueError):
        codes.dual_check_poly(0x6, 7)  # zero constant term
    with pytest.raises(ValueError):
        codes.dual_check_poly(0xB, 3)  # deg g >= n


def test_check_times_reciprocal_generator(code_3_3, code_4_5):
    for code in (code_3_3, code_4_5):
        prod = gf2.poly_mul(code.generator.reciprocal(), code.check)
        assert prod == (1 << code.n) | 1


def test_bch_code_fields(code_3_3, code_4_5):
    assert code_3_3.m == 3 and code_3_3.n == 7 and code_3_3.delta == 3
    assert code_3_3.t == 1 and code_3_3.k == 4 and code_3_3.k_dual == 3
    assert code_3_3.modulus == 0xB
    assert code_3_3.generator == 0xB
    assert code_3_3.check == 0x1D
    assert code_4_5.generator == 0x1D1
    assert code_4_5.k_dual == 8 and code_4_5.check.degree == 7


def test_bch_code_accepts_explicit_modulus():
    code = codes.bch_code(4, 3, modulus=0x19)
    assert code.modulus == 0x19
    assert code.generator == 0x19
    with pytest.raises(ValueError):
        codes.bch_code(4, 3, modulus=0x1F)  # not primitive


def test_dual_codeword_examples(code_3_3):
    w = codes.dual_codeword(code_3_3, 1)
    assert w.bits.tolist() == [1, 0, 1, 1, 1, 0, 0]
    assert w.weight() == 4 and w.message == 1 and w.n == 7
    # multiplying the message by x shifts the word
    assert codes.dual_codeword(code_3_3, 2).bits.tolist() == [0, 1, 0, 1, 1, 1, 0]
    zero = codes.dual_codeword(code_3_3, 0)
    assert zero.weight() == 0 and zero.bits.tolist() == [0] * 7


def test_dual_codeword_message_range(code_3_3):
    with pytest.raises(ValueError):
        codes.dual_codeword(code_3_3, -1)
    with pytest.raises(ValueError):
        codes.dual_codeword(code_3_3, 8)


def test_enumerate_small_dual_codes(code_3_3, code_4_5):
    words = list(codes.enumerate_dual_codewords(code_3_3))
    assert len(words) == 8
    assert [w.message for w in words] == list(range(8))
    assert words[0].weight() == 0
    # the 7 nonzero words of the simplex code all have weight 4
    assert sorted(w.weight() for w in words[1:]) == [4] * 7
    big = list(codes.enumerate_dual_codewords(code_4_5))
    assert len(big) == 256
    assert len({w.bits.tobytes() for w in big}) == 256


def test_enumerate_refuses_large_dual_dimension():
    code = codes.bch_code(13, 5)  # dual dimension 26
    with pytest.raises(ValueError):
        next(codes.enumerate_dual_codewords(code))


def test_dual_code_is_linear(code_4_5):
    words = {w.message: w.bits for w in codes.enumerate_dual_codewords(code_4_5)}
    rng = np.random.default_rng(0)
    for _ in range(200):
        a, b = rng.integers(0, 256, size=2)
        np.testing.assert_array_equal(
            words[int(a)] ^ words[int(b)], words[int(a ^ b)]
        )


def _primal_words(code):
    for msg in range(1 << code.k):
        word = gf2._mul(msg, code.generator.value)
        yield codes._bits_from_int(word, code.n)


def test_duality_is_exact_orthogonality(code_3_3, code_4_5):
    for code in (code_3_3, code_4_5):
        dual = np.array([w.bits for w in codes.enumerate_dual_codewords(code)])
        primal = np.array(list(_primal_words(code)))
        overlaps = dual.astype(np.int64) @ primal.T.astype(np.int64)
        assert not np.any(overlaps % 2), (code.m, code.delta)


def test_lfsr_example_sequence():
    out = codes.lfsr_msequence(0xB, init=4)
    assert out.tolist() == [0, 0, 1, 0, 1, 1, 1]


def test_lfsr_balance():
    for m, init in ((3, 1), (4, 1), (5, 9), (6, 33), (8, 1)):
        out = codes.lfsr_msequence(gf2.DEFAULT_PRIMITIVE[m], init=init)
        assert len(out) == (1 << m) - 1
        assert int(out.sum()) == 1 << (m - 1)


def test_lfsr_full_period_large_register():
    out = codes.lfsr_msequence(0x40081)
    n = 262143
    assert len(out) == n and int(out.sum()) == 1 << 17
    # the minimal period divides n; a proper one would divide n/q for some
    # prime q | n = 3^3 * 7 * 19 * 73, making the sequence roll-invariant
    for q in (3, 7, 19, 73):
        assert not np.array_equal(out, np.roll(out, n // q))


def test_lfsr_rejects_bad_inputs():
    with pytest.raises(ValueError):
        codes.lfsr_msequence(0xB, init=0)
    with pytest.raises(ValueError):
        codes.lfsr_msequence(0xB, init=8)
    with pytest.raises(ValueError):
        codes.lfsr_msequence(0x1F)  # irreducible but not primitive
    with pytest.raises(ValueError):
        codes.lfsr_msequence(0b11)


def test_shifted_msequences_span_simplex_dual():
    # for designed distance 3 the dual code is exactly the zero word plus
    # every cyclic shift of the m-sequence
    for m in range(3, 7):
        code = codes.bch_code(m, 3)
        seq = codes.lfsr_msequence(code.modulus)
        shifts = {tuple(np.roll(seq, s)) for s in range(code.n)}
        shifts.add((0,) * code.n)
        dual = {tuple(w.bits) for w in codes.enumerate_dual_codewords(code)}
        assert shifts == dual, m


def test_min_distance_examples(code_3_3, code_4_5):
    assert codes.min_distance_bruteforce(code_3_3.generator, 7) == 3
    assert codes.min_distance_bruteforce(code_4_5.generator, 15) == 5
    # dual of the (7,4) code: generated by the reciprocal check polynomial
    assert codes.min_distance_bruteforce(code_3_3.check.reciprocal(), 7) == 4


def test_min_distance_guards():
    with pytest.raises(ValueError):
        codes.min_distance_bruteforce(0, 7)
    with pytest.raises(ValueError):
        codes.min_distance_bruteforce(0xB, 3)
    code = codes.bch_code(5, 3)  # message space 2^26
    with pytest.raises(ValueError):
        codes.min_distance_bruteforce(code.generator, code.n)


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _macwilliams_weights(code):
    """Weight distribution of the primal code from the dual's, exactly.

    A_j = 2^(-k_dual) * sum_w B_w [y^j] (1+y)^(n-w) (1-y)^w with integer
    arithmetic throughout, so divisibility and nonnegativity double as
    self-checks.
    """
    n = code.n
    hist = [0] * (n + 1)
    for w in codes.enumerate_dual_codewords(code):
        hist[w.weight()] += 1
    acc = [0] * (n + 1)
    for w, count in enumerate(hist):
        if not count:
            continue
        plus = [comb(n - w, j) for j in range(n - w + 1)]
        minus = [(-1) ** j * comb(w, j) for j in range(w + 1)]
        for j, c in enumerate(_poly_mul_int(plus, minus)):
            acc[j] += count * c
    size = 1 << code.k_dual
    assert all(c % size == 0 and c >= 0 for c in acc)
    weights = [c // size for c in acc]
    assert weights[0] == 1 and sum(weights) == 1 << code.k
    return weights


def _distance_from_weights(weights):
    return next(j for j, c in enumerate(weights) if j > 0 and c > 0)


def test_weight_transform_agrees_with_bruteforce():
    for m, delta in ((3, 3), (4, 3), (4, 5)):
        code = codes.bch_code(m, delta)
        d = _distance_from_weights(_macwilliams_weights(code))
        assert d == codes.min_distance_bruteforce(code.generator, code.n)


def test_min_distance_beyond_bruteforce_limit():
    # message spaces 2^26 and 2^21: too big to enumerate directly, but the
    # dual codes are tiny, so the transform gives exact distances
    assert _distance_from_weights(_macwilliams_weights(codes.bch_code(5, 3))) == 3
    assert _distance_from_weights(_macwilliams_weights(codes.bch_code(5, 5))) == 5


def test_designed_distance_is_a_lower_bound():
    for m, delta in ((3, 3), (4, 3), (4, 5), (5, 3), (5, 5), (6, 3)):
        code = codes.bch_code(m, delta)
        d = _distance_from_weights(_macwilliams_weights(code))
        assert d >= delta, (m, delta)
