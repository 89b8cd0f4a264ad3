import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from _oracles import brute_dioph
from lacunae.relations import Window
from lacunae.sequences import (
    SequenceSpec,
    UncertifiedFloorError,
    certified_floor_powers,
    classify_geometric,
    density_estimate,
    diophantine_families,
    diophantine_geometric,
    fixed_identities,
    generate,
    geometric_expected,
    growth_admissible,
    identity_suite,
)

# -- generation -------------------------------------------------------------------


def test_generate_examples():
    assert generate(SequenceSpec.geometric(3), 5).elements == (1, 3, 9, 27, 81)
    assert generate(SequenceSpec.power(2), 5).elements == (1, 4, 9, 16, 25)
    assert generate(SequenceSpec.integer_part_power("(1+sqrt(5))/2"), 6).elements == (1, 2, 4, 6, 11, 17)


def test_generate_negative_ratio_and_modifiers():
    assert generate(SequenceSpec.geometric(-2), 5).elements == (-8, -2, 1, 4, 16)
    w = generate(SequenceSpec.geometric(2).symmetrize().adjoin(0), 3)
    assert w.elements == (-4, -2, -1, 0, 1, 2, 4)
    assert generate(SequenceSpec.power(2).translate(1).scale(2), 3).elements == (4, 10, 20)
    u = generate(SequenceSpec.geometric(2).union(SequenceSpec.geometric(3)), 3)
    assert u.elements == (1, 2, 3, 4, 9)
    assert generate(SequenceSpec.explicit([5, 1, 3, 9]), 3).elements == (1, 3, 5)


def test_spec_validation():
    with pytest.raises(ValueError):
        SequenceSpec.geometric(1)
    with pytest.raises(ValueError):
        SequenceSpec.polynomial([3])
    with pytest.raises(ValueError):
        generate(SequenceSpec.integer_part_power("1/2"), 3)
    with pytest.raises(ValueError):
        generate(SequenceSpec.explicit([1, 2]), 5)


@pytest.mark.parametrize("sigma", ["(1+sqrt(5))/2", "pi", "3/2", "(3+sqrt(5))/2", "E", "sqrt(3)+1/7"])
def test_certified_floors_match_high_precision(sigma):
    got = certified_floor_powers(sigma, 60)
    mpmath.mp.dps = 200
    try:
        val = mpmath.mpf(eval(sigma.replace("sqrt", "mpmath.sqrt").replace("pi", "mpmath.pi").replace("E", "mpmath.e").replace("1/7", "mpmath.mpf(1)/7")))
        ref = [int(mpmath.floor(val**k)) for k in range(60)]
    finally:
        mpmath.mp.dps = 15
    assert got == ref


def test_rational_sigma_exact():
    assert certified_floor_powers(Fraction(3, 2), 6) == [1, 1, 2, 3, 5, 7]


def test_integer_powers_floored_exactly():
    # a float oracle lands just below these integers, so they are pinned by hand
    assert certified_floor_powers("sqrt(3)", 7) == [1, 1, 3, 5, 9, 15, 27]
    assert certified_floor_powers("2**(1/3)", 10) == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8]


def test_floor_uncertifiable_when_power_is_hidden_integer():
    # equals 5, but sympy does not simplify it, so only intervals are available
    with pytest.raises(UncertifiedFloorError):
        certified_floor_powers("(sqrt(2)+sqrt(3))**2 - 2*sqrt(6)", 3, max_bits=512)


def test_precision_environment_override(monkeypatch):
    monkeypatch.setenv("LACUNAE_PRECISION", "60")
    low = certified_floor_powers("(1+sqrt(5))/2", 80)
    monkeypatch.setenv("LACUNAE_PRECISION", "4096")
    high = certified_floor_powers("(1+sqrt(5))/2", 80)
    assert low == high


# -- geometric classification --------------------------------------------------------


def test_expected_profiles():
    e3, e2, em2 = geometric_expected(3), geometric_expected(2), geometric_expected(-2)
    assert (e3.i_level, e3.cj_level, e3.rj_level) == (3, 3, math.inf)
    assert (e2.i_level, e2.cj_level, e2.rj_level) == (2, 2, 2)
    assert (em2.i_level, em2.cj_level, em2.rj_level) == (1, 2, 2)


@pytest.mark.parametrize(
    "j,n_max,length,row",
    [(2, 4, 20, ("2", "2", "2")), (3, 4, 16, ("3", "3", "≥4")), (-2, 3, 16, ("1", "2", "2"))],
)
def test_classify_examples(j, n_max, length, row):
    c = classify_geometric(j, n_max, length)
    assert c.row() == row and c.agrees
    for m in c.measured.values():
        if m.witness is not None:
            n_fail = m.level + 1
            mode = {"I": None, "CJ": "complex", "RJ": "real"}[m.prop]
            assert m.witness.verify(n_fail, mode)


@pytest.mark.parametrize("j", [-5, -4, 4, 5])
def test_classify_other_ratios(j):
    c = classify_geometric(j, abs(j) + 2, 16)
    assert c.agrees, c.to_json()


def test_classify_parallel_matches_serial():
    a = classify_geometric(3, 4, 14).to_json()
    b = classify_geometric(3, 4, 14, jobs=3).to_json()
    assert a == b


# -- Diophantine solutions ---------------------------------------------------------------


@pytest.mark.parametrize("j", [2, 3, -2, -3])
def test_diophantine_matches_brute_force_and_families(j):
    got = diophantine_geometric(j, 8)
    as_set = {(s.exponents, s.coeffs) for s in got}
    assert len(as_set) == len(got)
    assert as_set == brute_dioph(j, 8, 2 * abs(j))
    assert set(got) == set(diophantine_families(j, 8))
    assert all(s.value(j) == 0 for s in got)


def test_diophantine_two_families_for_two():
    got = {(s.exponents, s.coeffs) for s in diophantine_geometric(2, 6)}
    fam1 = {((k, k + 1), (2, -1)) for k in range(6)}
    fam2 = {((k, k + 1, k + 2), (2, 1, -1)) for k in range(5)}
    assert got == fam1 | fam2


@pytest.mark.parametrize("j", [2, 3, -2, -3])
def test_diophantine_shift_closed(j):
    bound = 8
    sols = set(diophantine_geometric(j, bound))
    for s in sols:
        if max(s.exponents) < bound:
            shifted = type(s)(tuple(k + 1 for k in s.exponents), s.coeffs)
            assert shifted in sols


# -- identities ------------------------------------------------------------------------------


def test_identity_suite_all_verified():
    suite = identity_suite(range(1, 51))
    assert len(suite) == len(fixed_identities()) + 3 * 50
    assert all(c.verified for c in suite)
    assert {c.name for c in suite if c.n is not None} == {"fibonacci-squares", "binet-cubes", "ramanujan-biquadrates"}


def test_fixed_identities_as_integers():
    assert 7**2 + 1**2 == 2 * 5**2
    checks = fixed_identities()
    assert len(checks) == 11 and all(c.lhs == c.rhs for c in checks)
    assert checks[3].lhs == 158**4 + 59**4


def test_fibonacci_first_case_both_indexings():
    fib = next(c for c in identity_suite([1]) if c.name == "fibonacci-squares")
    assert fib.lhs == fib.rhs == 65  # F_0 = F_1 = 1: (1·3 + 2²)² + (2²)² = (1·2 + 2·3)² + 1
    a, b, c = 1, 1, 2  # standard indexing F_1 = F_2 = 1
    assert (a * c + b * b) ** 2 + (b * b) ** 2 == (a * b + b * c) ** 2 + 1 == 10


# -- density and growth --------------------------------------------------------------------------


def brute_density(els, h):
    return max(Fraction(sum(1 for e in els if a < e <= a + h), h) for a in range(min(els) - h, max(els) + 1))


def test_density_examples():
    ap = Window.of(range(0, 3 * 400, 3))
    assert density_estimate(ap, 300) == Fraction(1, 3)
    squares = Window.of(k * k for k in range(1, 101))
    assert density_estimate(squares, 100) == Fraction(1, 10)
    assert density_estimate(generate(SequenceSpec.geometric(2), 12), 64) == Fraction(7, 64)
    with pytest.raises(ValueError):
        density_estimate(Window.of([1, 2, 3]), 10)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-200, 200), min_size=2, max_size=25, unique=True), st.integers(1, 40))
def test_density_matches_brute(vals, h):
    w = Window.of(vals)
    if h > w.elements[-1] - w.elements[0] + 1:
        return
    assert density_estimate(w, h) == brute_density(w.elements, h)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 300), min_size=2, max_size=25, unique=True), st.integers(1, 20), st.integers(2, 5))
def test_density_nonincreasing_under_multiples(vals, h, k):
    w = Window.of(vals)
    if k * h > w.elements[-1] - w.elements[0] + 1:
        return
    assert density_estimate(w, k * h) <= density_estimate(w, h)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9), st.integers(-50, 50), st.integers(1, 30))
def test_density_of_progression(d, start, mult):
    w = Window.of(range(start, start + d * 200, d))
    h = d * mult
    assert density_estimate(w, h) == Fraction(1, d)


def test_growth_examples():
    r5 = growth_admissible(generate(SequenceSpec.geometric(5), 13), 4)
    assert r5.ratio_ok and r5.witness is None and r5.min_ratio == 5
    r3 = growth_admissible(generate(SequenceSpec.geometric(3), 13), 2)
    assert r3.ratio_ok and r3.witness is None
    r2 = growth_admissible(generate(SequenceSpec.geometric(2), 13), 4)
    assert not r2.ratio_ok
    assert sorted(r2.witness.zeta) == [-2, -1, 3] and r2.witness.verify(4)
