"""Spectra, exact trace moments, semicircle law, KS distance."""

import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.integrate import quad

from codewigner import matgen, spectral


def test_two_by_two_spectrum():
    mat = matgen.build_matrix([1, -1, 1], 2)
    eigs = spectral.eigenvalues_sym(mat).eigenvalues
    assert eigs[0] == pytest.approx(0.0, abs=1e-15)
    assert eigs[1] == pytest.approx(1.0 / math.sqrt(2), abs=1e-15)


def test_constant_matrix_spectrum():
    mat = matgen.ScaledSignMatrix(np.ones((7, 7), dtype=np.int8))
    eigs = spectral.eigenvalues_sym(mat).eigenvalues
    np.testing.assert_allclose(eigs[:6], 0.0, atol=1e-14)
    assert eigs[6] == pytest.approx(math.sqrt(7) / 2, abs=1e-14)


def test_eigenvalues_accept_plain_arrays():
    eigs = spectral.eigenvalues_sym(np.diag([2.0, -1.0])).eigenvalues
    assert eigs.tolist() == [-1.0, 2.0]
    with pytest.raises(ValueError):
        spectral.eigenvalues_sym(np.ones((2, 3)))
    with pytest.raises(ValueError):
        spectral.eigenvalues_sym(np.array([[0.0, 1.0], [0.0, 0.0]]))


def _charpoly_coeffs(signs):
    """Characteristic polynomial of an integer matrix, exactly.

    Faddeev-LeVerrier recursion in Fractions; self-checked by the
    Cayley-Hamilton identity p(A) = 0 before anything is returned.
    """
    n = signs.shape[0]
    a = np.array([[Fraction(int(v)) for v in row] for row in signs], dtype=object)
    eye = np.array(
        [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)],
        dtype=object,
    )
    coeffs = [Fraction(1)]
    mk = np.zeros_like(eye)
    c = Fraction(1)
    for k in range(1, n + 1):
        mk = a @ (mk + c * eye)
        c = Fraction(-sum(mk[i, i] for i in range(n)), k)
        coeffs.append(c)
    value = np.zeros_like(eye)
    for c in coeffs:
        value = value @ a + c * eye
    assert not value.any(), "Cayley-Hamilton failed"
    assert all(c.denominator == 1 for c in coeffs)
    return coeffs


def test_spectrum_against_characteristic_polynomial():
    mat = matgen.sample_random_wigner(6, seed=3)
    coeffs = _charpoly_coeffs(mat.signs)
    roots = np.roots([float(c) for c in coeffs])
    assert np.abs(roots.imag).max() < 1e-10
    oracle = np.sort(roots.real) * mat.scale
    got = spectral.eigenvalues_sym(mat).eigenvalues
    np.testing.assert_allclose(got, oracle, rtol=0.0, atol=1e-10)


def test_spectrum_sorts_and_pools():
    s = spectral.Spectrum(np.array([0.3, -0.2, 0.1]))
    assert s.eigenvalues.tolist() == [-0.2, 0.1, 0.3]
    assert s.size == 3
    pooled = spectral.Spectrum.pooled([s, spectral.Spectrum(np.array([0.0]))])
    assert pooled.size == 4
    assert pooled.eigenvalues.tolist() == [-0.2, 0.0, 0.1, 0.3]


def test_empirical_cdf_steps():
    s = spectral.Spectrum(np.array([-0.5, 0.5, 0.5]))
    assert spectral.empirical_cdf(s, -1.0) == 0.0
    assert spectral.empirical_cdf(s, -0.5) == pytest.approx(1 / 3)
    assert spectral.empirical_cdf(s, 0.49) == pytest.approx(1 / 3)
    assert spectral.empirical_cdf(s, 0.5) == 1.0
    out = spectral.empirical_cdf(s, np.array([-2.0, 0.0, 2.0]))
    np.testing.assert_allclose(out, [0.0, 1 / 3, 1.0])


def test_pooled_cdf_averages_members():
    a = spectral.Spectrum(np.array([-0.4, 0.1]))
    b = spectral.Spectrum(np.array([0.2, 0.6]))
    pooled = spectral.Spectrum.pooled([a, b])
    xs = np.linspace(-1, 1, 41)
    mean = (spectral.empirical_cdf(a, xs) + spectral.empirical_cdf(b, xs)) / 2
    np.testing.assert_allclose(spectral.empirical_cdf(pooled, xs), mean)


def test_second_moment_is_exactly_one_quarter():
    # tr(B^2) = sum of squared entries = N^2 for any sign matrix
    for order, seed in ((2, 0), (17, 1), (50, 2)):
        mat = matgen.sample_random_wigner(order, seed)
        assert spectral.moment_trace(mat, 2) == 0.25


def test_moments_of_constant_matrix():
    # rank one with eigenvalue N: beta_l = N^(l/2 - 1) / 2^l exactly
    mat = matgen.ScaledSignMatrix(np.ones((9, 9), dtype=np.int8))
    assert spectral.moment_trace(mat, 1) == pytest.approx(1 / 6, abs=1e-16)
    assert spectral.moment_trace(mat, 3) == 0.375
    assert spectral.moment_trace(mat, 4) == 0.5625
    assert spectral.moment_trace(mat, 6) == pytest.approx(729 / 576, abs=1e-16)


def test_moments_match_eigenvalue_sums():
    for order, seed in ((5, 4), (23, 5), (50, 6)):
        mat = matgen.sample_random_wigner(order, seed)
        eigs = spectral.eigenvalues_sym(mat).eigenvalues
        for l in range(1, 9):
            want = float(np.mean(eigs**l))
            got = spectral.moment_trace(mat, l)
            assert got == pytest.approx(want, abs=1e-8), (order, l)


def test_high_moment_survives_integer_overflow():
    # entries of B^9 at order 74 exceed int64; the object-dtype path must
    # keep the trace exact
    mat = matgen.sample_random_wigner(74, seed=9)
    eigs = spectral.eigenvalues_sym(mat).eigenvalues
    want = float(np.mean(eigs**20))
    assert spectral.moment_trace(mat, 20) == pytest.approx(want, rel=1e-8)


def test_moment_order_bounds():
    mat = matgen.sample_random_wigner(4, seed=0)
    with pytest.raises(ValueError):
        spectral.moment_trace(mat, 0)
    with pytest.raises(ValueError):
        spectral.moment_trace(mat, 21)


def test_trace_and_square_sum_rules():
    for order, seed in ((10, 7), (33, 8)):
        mat = matgen.sample_random_wigner(order, seed)
        eigs = spectral.eigenvalues_sym(mat).eigenvalues
        assert eigs.sum() == pytest.approx(np.trace(mat.scaled()), abs=1e-9 * order)
        assert (eigs**2).sum() == pytest.approx(order / 4, abs=1e-9 * order)


def test_semicircle_point_values():
    assert spectral.semicircle_pdf(0.0) == pytest.approx(2 / math.pi, abs=1e-15)
    assert spectral.semicircle_pdf(1.0) == 0.0
    assert spectral.semicircle_pdf(-3.0) == 0.0
    assert spectral.semicircle_cdf(-1.0) == 0.0
    assert spectral.semicircle_cdf(0.0) == pytest.approx(0.5, abs=1e-15)
    assert spectral.semicircle_cdf(1.0) == 1.0
    assert spectral.semicircle_cdf(-5.0) == 0.0 and spectral.semicircle_cdf(5.0) == 1.0


def test_semicircle_symmetry():
    xs = np.linspace(-1.3, 1.3, 1001)
    np.testing.assert_allclose(
        spectral.semicircle_cdf(xs) + spectral.semicircle_cdf(-xs), 1.0, atol=1e-14
    )
    np.testing.assert_allclose(
        spectral.semicircle_pdf(xs), spectral.semicircle_pdf(-xs), atol=0.0
    )


def test_semicircle_cdf_monotone_on_fine_grid():
    xs = np.linspace(-1.2, 1.2, 100_001)
    vals = spectral.semicircle_cdf(xs)
    assert np.all(np.diff(vals) >= 0.0)
    assert np.all((vals >= 0.0) & (vals <= 1.0))


def test_cdf_derivative_matches_pdf():
    xs = np.linspace(-0.99, 0.99, 397)
    h = 1e-5
    num = (spectral.semicircle_cdf(xs + h) - spectral.semicircle_cdf(xs - h)) / (2 * h)
    assert np.abs(num - spectral.semicircle_pdf(xs)).max() < 1e-6


def test_semicircle_moment_values():
    assert spectral.semicircle_moment(0) == Fraction(1)
    assert spectral.semicircle_moment(2) == Fraction(1, 4)
    assert spectral.semicircle_moment(4) == Fraction(1, 8)
    assert spectral.semicircle_moment(6) == Fraction(5, 64)
    assert spectral.semicircle_moment(7) == 0
    with pytest.raises(ValueError):
        spectral.semicircle_moment(-2)


def test_semicircle_moments_by_quadrature():
    # weight='alg' integrates f(x) (x+1)^0.5 (1-x)^0.5 over [-1, 1]
    for l in range(13):
        val, err = quad(
            lambda x: (2.0 / math.pi) * x**l, -1.0, 1.0, weight="alg", wvar=(0.5, 0.5)
        )
        assert err < 1e-10
        assert val == pytest.approx(float(spectral.semicircle_moment(l)), abs=1e-10)


def test_law_object_handles():
    law = spectral.SemicircleLaw
    assert law.support == (-1.0, 1.0)
    assert law.pdf(0.0) == spectral.semicircle_pdf(0.0)
    assert law.cdf(0.3) == spectral.semicircle_cdf(0.3)
    assert law.moment(4) == Fraction(1, 8)


def test_ks_single_atom():
    report = spectral.kolmogorov_distance(spectral.Spectrum(np.array([0.5])))
    assert report.distance == pytest.approx(spectral.semicircle_cdf(0.5), abs=1e-15)
    assert report.location == 0.5 and report.size == 1
    assert report.passed is None


def test_ks_atom_outside_support():
    report = spectral.kolmogorov_distance(
        spectral.Spectrum(np.array([-2.0])), threshold=0.5
    )
    assert report.distance == 1.0
    assert report.passed is False
    ok = spectral.kolmogorov_distance(spectral.Spectrum(np.array([-2.0])), threshold=1.0)
    assert ok.passed is True


def test_ks_rejects_empty_spectrum():
    with pytest.raises(ValueError):
        spectral.kolmogorov_distance(spectral.Spectrum(np.array([])))


def test_ks_ignores_input_order():
    rng = np.random.default_rng(2)
    vals = rng.uniform(-1, 1, size=40)
    a = spectral.kolmogorov_distance(spectral.Spectrum(vals))
    b = spectral.kolmogorov_distance(spectral.Spectrum(vals[::-1].copy()))
    assert a.distance == b.distance and a.location == b.location


def _semicircle_quantiles(probs):
    lo = np.full_like(probs, -1.0)
    hi = np.full_like(probs, 1.0)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        below = spectral.semicircle_cdf(mid) < probs
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return 0.5 * (lo + hi)


def test_ks_of_quantile_sample():
    # placing points at the (i - 1/2)/n quantiles makes the KS distance
    # exactly 1/(2n)
    n = 1000
    eigs = _semicircle_quantiles((np.arange(n) + 0.5) / n)
    report = spectral.kolmogorov_distance(spectral.Spectrum(eigs))
    assert report.distance == pytest.approx(0.5 / n, abs=1e-9)
    assert report.distance < 0.01


def _ks_by_scan(spec):
    eigs = spec.eigenvalues
    grid = np.linspace(-1.5, 1.5, 1_000_001)
    pts = np.concatenate([grid, eigs, np.nextafter(eigs, -np.inf)])
    emp = spectral.empirical_cdf(spec, pts)
    return float(np.abs(emp - spectral.semicircle_cdf(pts)).max())


def test_ks_agrees_with_dense_scan():
    for seed in (0, 1, 2):
        spec = spectral.eigenvalues_sym(matgen.sample_random_wigner(40, seed))
        report = spectral.kolmogorov_distance(spec)
        assert report.distance == pytest.approx(_ks_by_scan(spec), abs=1e-12)
