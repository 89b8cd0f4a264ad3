import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from _oracles import brute_multiindices, brute_n_independent, brute_pairing, brute_relations, brute_rep_count
from lacunae.relations import (
    MultiIndex,
    Pattern,
    Relation,
    Status,
    Verdict,
    Window,
    Witness,
    canonical_relation,
    check_I,
    check_J,
    check_J_sym,
    enumerate_multiindices,
    enumerate_relations,
    find_relation_pruned,
    is_n_independent,
    pairing_window,
    representation_count,
)


def geo(j, length):
    return Window.of(j**k for k in range(length))


# -- enumeration ------------------------------------------------------------


def test_multiindices_small():
    assert [a.entries for a in enumerate_multiindices(2, 2)] == [(0, 2), (1, 1), (2, 0)]
    assert [a.entries for a in enumerate_multiindices(3, 0)] == [(0, 0, 0)]


@pytest.mark.parametrize("m,n", [(1, 3), (2, 2), (3, 2), (4, 3)])
def test_multiindices_match_brute_force(m, n):
    got = sorted(a.entries for a in enumerate_multiindices(m, n))
    assert got == brute_multiindices(m, n)
    assert all(MultiIndex(e).weight == n for e in got)


def test_relation_examples():
    assert [r.coeffs for r in enumerate_relations(2, 2)] == [(1, -1), (2, -2)]
    assert [r.coeffs for r in enumerate_relations(3, 2)] == [(2, -1, -1)]
    assert enumerate_relations(5, 2) == []


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_relations_match_brute_force(m, n):
    got = {r.coeffs for r in enumerate_relations(m, n)}
    assert got == brute_relations(m, n)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, 4)])
def test_relation_weight_is_even(m, n):
    for r in enumerate_relations(m, n):
        assert r.weight % 2 == 0 and r.coeff_sum == 0 and r.weight <= 2 * n


def test_relations_sorted_by_weight():
    rels = enumerate_relations(4, 3)
    weights = [r.weight for r in rels]
    assert weights == sorted(weights)


def test_canonical_form():
    assert canonical_relation((-1, -1, 2)) == (2, -1, -1)
    assert canonical_relation((1, 1, -2)) == (2, -1, -1)
    assert canonical_relation((-3, 1, 2)) == (3, -1, -2)


def test_pattern_validation():
    with pytest.raises(ValueError):
        Pattern((1, 0, -1))
    with pytest.raises(ValueError):
        Relation((1, 1))
    p = Pattern((3, -1))
    assert p.weight == 4 and p.coeff_sum == 2


# -- representation counts and n-independence -------------------------------


def test_representation_count_examples():
    assert representation_count({0, 1, 3, 7}, 2, 4) == 2
    assert representation_count({1, 2, 3}, 2, 4) == 3
    assert representation_count({1, 2, 3}, 3, 6) == 7


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(-15, 30), min_size=1, max_size=6), st.integers(1, 3), st.integers(-40, 80))
def test_representation_count_matches_brute(E, n, k):
    assert representation_count(E, n, k) == brute_rep_count(E, n, k)


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(0, 60), min_size=2, max_size=7), st.integers(1, 3))
def test_independence_matches_brute(E, n):
    v = is_n_independent(E, n)
    assert v.holds == brute_n_independent(E, n)
    if v.fails:
        assert v.witness.verify(n)
        assert set(v.witness.points) <= E
    else:
        # one direction of the representation bound: at most n! ordered tuples per sum
        sums = {sum(c) for c in __import__("itertools").combinations_with_replacement(sorted(E), n)}
        assert all(representation_count(E, n, k) <= math.factorial(n) for k in sums)


def test_independence_examples():
    assert is_n_independent({0, 1, 3, 7}, 2).holds
    v = is_n_independent({1, 25, 49}, 2)
    assert v.fails and v.witness.zeta == (2, -1, -1) and v.witness.points == (25, 1, 49)


# -- check_I -------------------------------------------------------------------


def test_check_I_powers_of_two():
    w = geo(2, 21)
    assert check_I(w, 2, 0).holds
    v = check_I(w, 3, 5)
    assert v.fails
    wit = v.witness
    assert sorted(wit.zeta) == [-2, -1, 3] and wit.verify(3)
    assert min(wit.points) >= 2**5  # 1..16 removed by the budget
    y = min(wit.points)
    assert sorted(wit.points) == [y, 2 * y, 4 * y]


def test_check_I_squares():
    w = Window.of(k * k for k in range(1, 61))
    v = check_I(w, 2, 5)
    assert v.fails and v.witness.verify(2)
    assert all(p > 25 for p in v.witness.points)


def test_check_I_removed_prefix_is_minimal():
    w = Window.of([1, 2, 3, 10, 100, 1000, 10000, 100000])
    v = check_I(w, 2, 3)
    assert v.holds and v.removed_prefix_len == 1  # 1+3 = 2+2 needs 1 removed; {2,3,10,...} is clean
    assert not is_n_independent(w.by_depth()[0:], 2).holds
    assert is_n_independent(w.by_depth()[1:], 2).holds


# -- check_J / check_J_sym -----------------------------------------------------


def test_check_J_powers_of_two_break_2_4():
    w = geo(2, 21).with_break({2, 4})
    v = check_J(w, 3, "complex")
    assert v.fails
    wit = v.witness
    assert wit.zeta == (2, -1, -2, 1) and wit.points[:2] == (2, 4) and wit.break_sum == 1
    assert wit.points[3] == 2 * wit.points[2]
    assert wit.verify(3, "complex")
    assert check_J(geo(2, 21).with_break({2, 4}), 2, "complex").holds


def test_check_J_symmetric_threes():
    w = Window.of([3**k for k in range(16)] + [-(3**k) for k in range(16)]).with_break({3, -3})
    v = check_J(w, 2, "complex")
    assert v.fails
    assert sorted(v.witness.zeta) == [-1, -1, 1, 1] and v.witness.break_sum == 2
    assert set(v.witness.points[:2]) == {3, -3}
    y = abs(v.witness.points[2])
    assert sorted(v.witness.points[2:]) == [-y, y]


def test_check_J_sym_examples():
    assert check_J_sym(geo(3, 16), 4).holds
    assert check_J_sym(geo(2, 16), 2).holds
    v = check_J_sym(geo(2, 16), 3)
    assert v.fails and v.witness.verify(3, symmetric=True)
    assert v.witness.zeta == (2, -1, 2, -1)


def test_check_J_sym_rejects_nonpositive():
    with pytest.raises(ValueError):
        check_J_sym(Window.of([-1, 2, 3, 5, 8]), 2)


def _sym_equivalence(w, n):
    a = check_J_sym(w, n)
    ws = w.with_break(w.by_depth()[:2], 2).symmetrized()
    b = check_J(ws, n, "real", min_tail=2 * (2 * n - 1))
    return a, b


@pytest.mark.parametrize("j", [2, 3, 4, 5])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_J_sym_equals_real_J_on_symmetrization(j, n):
    a, b = _sym_equivalence(geo(j, 12), n)
    assert a.status == b.status
    if a.holds:
        assert b.removed_prefix_len == 2 * a.removed_prefix_len


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 400), min_size=9, max_size=11, unique=True), st.integers(2, 3))
def test_J_sym_equals_real_J_random(vals, n):
    a, b = _sym_equivalence(Window.of(vals), n)
    assert a.status == b.status


# -- pairing -------------------------------------------------------------------


def test_pairing_examples():
    assert pairing_window((2, -1), geo(2, 10), 3) == 0
    assert pairing_window((1, -1), geo(3, 10), 0) == 2
    assert pairing_window((3, -1, -1), geo(2, 4), 3) is None


tails = st.lists(st.integers(-60, 60), min_size=3, max_size=7, unique=True)
zetas = st.lists(st.integers(-3, 3).filter(bool), min_size=1, max_size=3)


@settings(max_examples=80, deadline=None)
@given(tails, zetas, st.integers(0, 3))
def test_pairing_matches_brute(vals, zeta, ts):
    w = Window.of(vals)
    ts = min(ts, len(w))
    tail = w.by_depth()[ts:]
    expected = brute_pairing(zeta, tail) if len(tail) >= len(zeta) else None
    assert pairing_window(zeta, w, ts) == expected


@settings(max_examples=80, deadline=None)
@given(tails, zetas, st.integers(0, 2))
def test_pairing_monotone(vals, zeta, ts):
    inf = math.inf
    w = Window.of(vals)
    order = w.by_depth()
    val = lambda win, t: inf if (r := pairing_window(zeta, win, t)) is None else r  # noqa: E731
    shorter = Window.of(order[:-1])
    ts = min(ts, len(shorter))
    assert val(w, ts) <= val(shorter, ts)  # longer window: nonincreasing
    assert val(w, ts) <= val(w, ts + 1)  # later tail: nondecreasing


def test_transcendence_pairing_bound():
    # σ = 2 with minimal pattern (2, −1); σ = (3+√5)/2 with x² − 3x + 1
    from lacunae.sequences import SequenceSpec, generate

    w2 = geo(2, 14)
    for ts in range(0, 12):
        assert pairing_window((2, -1), w2, ts) <= 3
    wq = generate(SequenceSpec.integer_part_power("(3+sqrt(5))/2"), 14)
    for ts in range(0, 11):
        assert pairing_window((1, -3, 1), wq, ts) <= 5


# -- growth pruning ---------------------------------------------------------------


def test_pruned_search():
    wit, stats = find_relation_pruned([5**k for k in range(13)], 4)
    assert wit is None and stats["searched_tops"] == 0
    wit, _ = find_relation_pruned([2**k for k in range(13)], 4)
    assert wit is not None and sorted(wit.zeta) == [-2, -1, 3] and wit.verify(4)


# -- serialization -----------------------------------------------------------------


def test_verdict_round_trip():
    v = check_I(geo(2, 16), 3, 2)
    data = json.loads(json.dumps(v.to_json()))
    assert set(data) == {"status", "zeta", "points", "break_len", "removed_prefix_len", "bounds", "reason"}
    assert all(isinstance(p, str) for p in data["points"])
    back = Verdict.from_json(data)
    assert back.status is v.status and back.witness == v.witness


def test_window_round_trip():
    w = Window.of([1, 3, 3**40], name="big").with_break({1}, 1)
    data = json.loads(json.dumps(w.to_json()))
    assert data["elements"][-1] == str(3**40)
    assert Window.from_json(data) == w


def test_verdict_invariants():
    with pytest.raises(ValueError):
        Verdict(Status.FAILS, witness=Witness((1, -1), (2, 3)))
    with pytest.raises(ValueError):
        Verdict(Status.HOLDS)
    with pytest.raises(ValueError):
        Window((3, 1))
    with pytest.raises(ValueError):
        Witness((1, -1), (2, 2))
