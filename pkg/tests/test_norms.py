import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from _oracles import direct_lp, direct_values
from lacunae.exact import GaussianRational
from lacunae.norms import (
    NormSpace,
    SignVector,
    evaluate_expansion,
    generalized_multinomial,
    lp_norm_even_exact,
    lp_norm_quadrature,
    norm,
    oscillation,
    phi_expansion,
    phi_truncation,
    power_coefficients,
    projection,
    psi,
    sign_range,
    sup_norm,
    theta,
    unconditionality_constant,
)
from lacunae.polynomial import TrigPolynomial, grid_values
from lacunae.relations import is_n_independent

P = TrigPolynomial.from_frequencies
L4 = NormSpace.lp(4)

exact_coeff = st.builds(
    GaussianRational,
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
)
exact_polys = st.dictionaries(st.integers(-12, 12), exact_coeff, min_size=1, max_size=6).map(TrigPolynomial)


# -- exact arithmetic building blocks ----------------------------------------


def test_generalized_multinomial():
    assert generalized_multinomial(2, (1, 1)) == 2
    assert generalized_multinomial(3, (2, 2)) == 0
    assert generalized_multinomial(Fraction(1, 2), (2,)) == Fraction(-1, 8)
    assert generalized_multinomial(Fraction(3, 2), (1, 1)) == Fraction(3, 4)  # (3/2 choose 2)·2


@settings(max_examples=50, deadline=None)
@given(st.fractions(min_value=-5, max_value=5, max_denominator=6), st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_multinomial_zero_iff_integer_below_weight(x, alpha):
    val = generalized_multinomial(x, alpha)
    n = sum(alpha)
    zero_expected = x.denominator == 1 and 0 <= x < n
    assert (val == 0) == zero_expected


def test_power_coefficients():
    assert power_coefficients(P([0, 1]), 2).terms == {0: 1, 1: 2, 2: 1}
    assert power_coefficients(P([0, 1, 2]), 2).terms == {0: 1, 1: 2, 2: 3, 3: 2, 4: 1}
    assert power_coefficients(P([5]), 3).terms == {15: 1}


# -- exact and quadrature norms ----------------------------------------------------


@pytest.mark.parametrize(
    "freqs,value",
    [([0], 1), ([0, 1, 2], 19), ([0, 1, 5, 6], 36), ([0, 1, 3, 7], 28)],
)
def test_exact_L4_examples(freqs, value):
    got = lp_norm_even_exact(P(freqs), 4)
    assert got == value and isinstance(got, Fraction)
    assert direct_lp(P(freqs).terms, 4) ** 4 == pytest.approx(value, rel=1e-12)


def test_quadrature_examples():
    assert lp_norm_quadrature(P([0, 1, 2]), 4, 64) == pytest.approx(19**0.25, abs=1e-12)
    assert lp_norm_quadrature(P([0]), 3.5, 64) == pytest.approx(1.0, abs=1e-14)
    assert lp_norm_quadrature(P([0, 1]), 1, 8192) == pytest.approx(4 / math.pi, abs=1e-6)


def test_quadrature_rejects_coarse_grid():
    with pytest.raises(ValueError):
        lp_norm_quadrature(P([0, 10]), 4, 16)


@settings(max_examples=200, deadline=None)
@given(exact_polys, st.sampled_from([2, 4, 6, 8]))
def test_exact_matches_quadrature(f, p):
    exact = float(lp_norm_even_exact(f, p)) ** (1 / p)
    quad = lp_norm_quadrature(f, p)
    assert quad == pytest.approx(exact, rel=1e-9, abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(exact_polys)
def test_parseval(f):
    assert lp_norm_even_exact(f, 2) == sum(abs(c) ** 2 if not isinstance(c, GaussianRational) else c.abs2() for c in f.terms.values())


@settings(max_examples=60, deadline=None)
@given(exact_polys, st.integers(0, 7), st.sampled_from([2, 4, 6]))
def test_rotation_invariance(f, k, p):
    # κ = i^k keeps coefficients exact: a_q ↦ a_q κ^q
    ipow = [1, GaussianRational(0, 1), -1, GaussianRational(0, -1)]
    g = TrigPolynomial({q: c * ipow[(k * q) % 4] for q, c in f.terms.items()})
    assert lp_norm_even_exact(g, p) == lp_norm_even_exact(f, p)
    kappa = cmath.exp(0.37j * (k + 1))
    h = TrigPolynomial({q: complex(c) * kappa**q for q, c in f.terms.items()})
    for space in (NormSpace.lp(3), NormSpace.sup()):
        assert norm(h, space) == pytest.approx(norm(f, space), rel=1e-9, abs=1e-10)


# -- sup norm -------------------------------------------------------------------------


def test_sup_examples():
    assert sup_norm(P([7])).value == 1
    s = sup_norm(P([0, 1]))
    assert s.value == pytest.approx(2, abs=1e-12) and s.upper >= 2
    assert sup_norm(P([0, 1, 3])).value == pytest.approx(3, abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(
    st.dictionaries(
        st.integers(-20, 20),
        st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False).filter(lambda z: abs(z) > 1e-3),
        min_size=2,
        max_size=6,
    )
)
def test_sup_interval_contains_finer_grid(terms):
    f = TrigPolynomial(terms)
    s = sup_norm(f, 128)
    finer = float(np.abs(grid_values(f, 4 * 128)).max())
    assert s.value <= s.upper
    assert finer <= s.upper * (1 + 1e-12)
    dense = float(np.abs(direct_values(terms, 1 << 14)).max())
    assert dense <= s.upper * (1 + 1e-12)
    assert s.value >= dense - 1e-6


def test_projection():
    f = P([0, 1, 9])
    assert projection(f, {0, 1}) == P([0, 1])
    assert projection(f, set()) == TrigPolynomial.zero()
    assert projection(f, {0, 1, 9, 100}) == f


# -- expansions ----------------------------------------------------------------------


def test_phi_expansion_single():
    cl = phi_expansion([1], 4, 2)
    for r in (0.2, 0.7):
        assert evaluate_expansion(cl, [1], [r]) == pytest.approx(1 + 4 * r**2 + r**4)


def test_phi_expansion_cross_class():
    cl = {c.target_frequency: c for c in phi_expansion([1, 2], 4, 2)}
    members = {m.entries: coeff for m, coeff in cl[2].members}
    assert members == {(2, 0): 1, (0, 1): 2}


def test_phi_expansion_rejects_repeats():
    with pytest.raises(ValueError):
        phi_expansion([1, 1], 4, 2)


def test_phi_expansion_non_even():
    z = [0.3, 0.3]
    a = evaluate_expansion(phi_expansion([1, 2], 3, 6), [1, 1], z)
    b = evaluate_expansion(phi_expansion([1, 2], 3, 8), [1, 1], z)
    assert abs(a - b) < 1e-6
    quad = lp_norm_quadrature(TrigPolynomial({0: 1, 1: 0.3, 2: 0.3}), 3, 4096) ** 3
    assert b == pytest.approx(quad, abs=1e-5)
    assert phi_truncation(3, 2, 0.3) >= 6


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(1, 15), min_size=1, max_size=3, unique=True),
    st.sampled_from([2, 4, 6]),
    st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=3), min_size=3, max_size=3),
)
def test_phi_expansion_matches_exact_norm(q, p, zs):
    z = zs[: len(q)]
    classes = phi_expansion(q, p, p // 2)
    f = TrigPolynomial({0: 1, **{qi: zi for qi, zi in zip(q, z)}}) if 0 not in q else None
    if f is None:
        return
    exact = lp_norm_even_exact(f, p)
    # exact rational evaluation of the classes
    total = Fraction(0)
    for cl in classes:
        s = Fraction(0)
        for alpha, coeff in cl.members:
            term = Fraction(coeff)
            for zi, ai in zip(z, alpha.entries):
                term *= Fraction(zi) ** ai
            s += term
        total += s * s
    assert total == exact


# -- Θ and Ψ ------------------------------------------------------------------------


@pytest.mark.parametrize("rho", [Fraction(1, 3), Fraction(1, 2), Fraction(1)])
@pytest.mark.parametrize("eps", [1, -1])
def test_theta_three_term_progression(rho, eps):
    # centre frequency first: ‖e_1 + ϱ e_0 + ε ϱ e_2‖_4^4 = 1 + 6ϱ⁴ + 4ϱ²(2 + Re ε)
    got = theta((1, 0, 2), (1, eps), (rho, rho), L4)
    assert got == 1 + 6 * rho**4 + 4 * rho**2 * (2 + eps)


def test_theta_first_frequency_zero():
    rho = Fraction(1, 2)
    got = theta((0, 1, 2), (1, 1), (rho, rho), L4)
    assert got == 1 + 8 * rho**2 + 4 * rho**3 + 6 * rho**4


def test_theta_accepts_sign_vector():
    sv = SignVector("real", (1, -1))
    assert theta((1, 0, 2), sv, (1, 1), L4) == 11


@pytest.mark.parametrize("r", [(0, 1, 3), (0, 1, 5, 11), (2, 7, 8)])
def test_theta_sign_free_on_independent_sets(r):
    assert is_n_independent(r, 2).holds
    vals = {float(theta(r, [cmath.exp(1j * a) for a in angles], [0.7] * (len(r) - 1), L4)) for angles in
            [(0,) * (len(r) - 1), (1.0,) * (len(r) - 1), tuple(0.3 * k for k in range(1, len(r)))]}
    assert max(vals) - min(vals) < 1e-12


@pytest.mark.parametrize("r", [(0, 1, 2), (1, 0, 2), (0, 1, 5, 6)])
def test_theta_depends_on_sign_when_dependent(r):
    assert not is_n_independent(r, 2).holds
    ones = float(theta(r, [1] * (len(r) - 1), [1] * (len(r) - 1), L4))
    flip = float(theta(r, [1] * (len(r) - 2) + [-1], [1] * (len(r) - 1), L4))
    assert ones != flip


def test_psi():
    r, z = (0, 2, 1), (1, 1)
    assert psi(r, 1, -1, z, L4) == 19
    assert psi(r, 1, GaussianRational(0, 1), z, L4) == 11
    assert psi(r, 2, -1, z, L4) == theta(r, (1, 1), z, L4)
    eps = cmath.exp(0.8j)
    assert float(psi(r, 0, eps, z, NormSpace.lp(3))) == pytest.approx(float(theta(r, (eps, eps), z, NormSpace.lp(3))))
    assert direct_lp({0: 1, 2: 1, 1: 1j}, 4) ** 4 == pytest.approx(11)


# -- oscillation ----------------------------------------------------------------------


def test_oscillation_examples():
    assert oscillation(P([0]), P([5]), NormSpace.lp(2)) == pytest.approx(0, abs=1e-12)
    osc = oscillation(P([0, 2]), P([1]), L4)
    assert osc == pytest.approx(19**0.25 - 11**0.25, abs=1e-6)
    assert oscillation(P([0, 1]), P([3]), L4) == pytest.approx(0, abs=1e-12)


small_polys = st.dictionaries(
    st.integers(-6, 6),
    st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False).filter(lambda z: abs(z) > 1e-2),
    min_size=1,
    max_size=3,
).map(TrigPolynomial)


@settings(max_examples=40, deadline=None)
@given(small_polys, small_polys, st.floats(0, 2 * math.pi))
def test_oscillation_properties(f, g, phase):
    for space in (NormSpace.lp(2), L4):
        osc = oscillation(f, g, space)
        assert osc >= 0
        g2 = g.scale(cmath.exp(1j * phase))
        assert oscillation(f, g2, space) == pytest.approx(osc, abs=1e-7)
    assert oscillation(f, g, NormSpace.lp(2)) == pytest.approx(0, abs=1e-7) or set(f.support) & set(g.support)


def test_sign_range_real_mode():
    r = sign_range(P([0, 2]), P([1]), L4, "real")
    assert r.norm_max == pytest.approx(19**0.25) and r.norm_min == pytest.approx(19**0.25)


# -- unconditionality constants -----------------------------------------------------


def test_uncond_L2_is_one():
    for mode in ("real", "complex"):
        est = unconditionality_constant([0, 1, 2], NormSpace.lp(2), mode, starts=4)
        assert est.value == pytest.approx(1, abs=1e-9)


def test_uncond_three_term_progression():
    est = unconditionality_constant([0, 1, 2], L4, "real")
    target = (2 * math.sqrt(6) - 3) ** 0.25
    assert abs(est.value - target) < 1e-3
    a = np.abs(est.a)
    assert a[0] / a[1] == pytest.approx(6**-0.25, rel=1e-3)


def test_uncond_four_terms():
    est = unconditionality_constant([0, 1, 5, 6], L4, "real")
    assert abs(est.value - 1.8**0.25) < 1e-3


def test_uncond_certificate_reproduces_value():
    est = unconditionality_constant([0, 1, 2], L4, "real")
    num = TrigPolynomial({q: e * a for q, e, a in zip(est.freqs, est.eps, est.a)})
    den = TrigPolynomial({q: e * a for q, e, a in zip(est.freqs, est.eps_prime, est.a)})
    assert norm(num, L4) / norm(den, L4) == pytest.approx(est.value, rel=1e-9)
    assert est.lower_bound <= est.value * (1 + 1e-12)


def test_uncond_sup_three_terms():
    est = unconditionality_constant([0, 1, 2], NormSpace.sup(), "real")
    assert abs(est.value - math.sqrt(2)) < 5e-3


def test_uncond_deterministic():
    a = unconditionality_constant([0, 1, 3], L4, "complex", starts=6, seed=3).to_json()
    b = unconditionality_constant([0, 1, 3], L4, "complex", starts=6, seed=3).to_json()
    assert a == b


# -- polynomial plumbing -----------------------------------------------------------------


def test_poly_json_round_trip():
    f = TrigPolynomial({0: Fraction(1, 3), 5: GaussianRational(2, -1), -2: 7})
    assert TrigPolynomial.from_json(f.to_json()) == f
    g = TrigPolynomial({1: 0.25 + 1j})
    assert TrigPolynomial.from_json(g.to_json()) == g


def test_poly_drops_zeros_and_derivative():
    f = TrigPolynomial({0: 0, 3: 2})
    assert f.support == (3,)
    assert f.derivative(2).terms == {3: -18}


def test_sign_polynomial_matches_direct_norm():
    from lacunae.norms import sign_polynomial

    f, g = P([0, 2]), P([1])
    b = sign_polynomial(f, g, 4)
    for k in range(8):
        eps = cmath.exp(2j * math.pi * k / 8)
        val = sum(complex(c) * eps**d for d, c in b.items()).real
        h = {0: eps, 2: eps, 1: 1}
        assert val == pytest.approx(direct_lp(h, 4) ** 4, rel=1e-12)
    assert b[0] == 15  # mean over ε of 10 + |2+ε²|²
