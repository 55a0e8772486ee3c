import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from carrays.grassmann import (
    GrassmannElem,
    M11,
    check_identity,
    commutator,
    eval_array,
    random_w,
    scalar_check,
    scalar_evaluation,
    squared_pair_array,
    verify_weak_identity,
)
from carrays.straighten import straighten


def e(gens, *indices):
    return GrassmannElem.monomial(gens, indices)


def test_wedge_basic():
    assert e(4, 1) * e(4, 2) == e(4, 1, 2)
    assert e(4, 2) * e(4, 1) == -1 * e(4, 1, 2)
    assert (e(4, 1) * e(4, 1)).is_zero()


def test_wedge_generator_mismatch():
    with pytest.raises(ValueError):
        e(4, 1) * e(5, 1)


def test_parity():
    assert e(4, 1, 2).is_even()
    assert e(4, 3).is_odd()
    assert GrassmannElem.zero(4).is_even() and GrassmannElem.zero(4).is_odd()


def test_m11_parity_enforced():
    gens = 4
    with pytest.raises(ValueError):
        M11(e(gens, 1), e(gens, 2), e(gens, 3), GrassmannElem.scalar(gens, 1))


def test_supertrace():
    ident = M11.identity(4)
    assert ident.supertrace().is_zero()
    a = M11.antidiag(e(4, 1), e(4, 2))
    sq = a * a
    assert sq.a == e(4, 1, 2) and sq.d == -1 * e(4, 1, 2)
    assert sq.supertrace() == 2 * e(4, 1, 2)
    assert (a + a).supertrace() == a.supertrace() + a.supertrace()


def test_eval_array_single_commutator():
    gens = 4
    w1 = M11.antidiag(e(gens, 1), e(gens, 2))
    w2 = M11.antidiag(e(gens, 3), e(gens, 4))
    value = eval_array(((2, 1),), {1: w1, 2: w2})
    expected = commutator(w2, w1)
    assert value == expected
    assert value.b.is_zero() and value.c.is_zero()
    assert value.a == value.d  # central scalar matrix


def test_eval_array_empty_is_identity():
    assert eval_array((), {}) == M11.identity(0)


def test_eval_array_requires_supertrace_zero():
    gens = 4
    bad = M11(
        GrassmannElem.scalar(gens, 1),
        e(gens, 1),
        e(gens, 2),
        GrassmannElem.zero(gens),
    )
    with pytest.raises(ValueError):
        eval_array(((2, 1),), {1: bad, 2: bad})
    with pytest.raises(ValueError):
        eval_array(((2, 1),), {1: M11.identity(gens)})


def test_commutators_are_central():
    rng = random.Random(7)
    for _ in range(100):
        w1, w2, w3 = (random_w(12, rng) for _ in range(3))
        k = commutator(w1, w2)
        assert commutator(k, w3).is_zero()


def test_central_diagonal_part_is_invisible():
    rng = random.Random(11)
    gens = 8
    for _ in range(10):
        ws = {i: random_w(gens, rng) for i in (1, 2, 3, 4)}
        s = ((2, 1), (4, 3))
        base = eval_array(s, ws)
        shifted = {}
        for i, w in ws.items():
            center = GrassmannElem.scalar(gens, rng.randint(-3, 3))
            mono = tuple(sorted(rng.sample(range(1, gens + 1), 2)))
            center = center + GrassmannElem.monomial(gens, mono, rng.randint(-3, 3))
            shifted[i] = w + M11.central(center)
        assert eval_array(s, shifted) == base


def test_straightening_matches_matrix_model():
    # eval(S) - sum coeff * eval(term) vanishes on shared random draws
    rng = random.Random(3)
    gens = 8
    assignments = []
    for _ in range(20):
        assignments.append({i: random_w(gens, rng) for i in (1, 2, 3, 4)})

    def cached_eval(s, assignment, cache):
        acc = M11.identity(gens)
        for a, b in s:
            key = (a, b)
            if key not in cache:
                cache[key] = commutator(assignment[a], assignment[b])
            acc = acc * cache[key]
        return acc

    for word in product(range(1, 5), repeat=4):
        s = tuple(zip(word[0::2], word[1::2]))
        result = straighten(s)
        for assignment in assignments:
            cache = {}
            value = cached_eval(s, assignment, cache)
            for term, coeff in result.items():
                value = value - cached_eval(term, assignment, cache) * coeff
            assert value.is_zero(), (s, result)


def test_verify_weak_identity_c3():
    assert verify_weak_identity("c3", samples=50, gens=12, seed=5)


def test_verify_weak_identity_p():
    assert verify_weak_identity("p", samples=25, gens=16, seed=5)


def test_bare_commutator_is_not_an_identity():
    witness = check_identity("c2", samples=100, gens=12, seed=5)
    assert witness is not None
    index, matrices = witness
    assert len(matrices) == 2


def test_lincomb_difference_verification():
    s = ((3, 1), (3, 1), (4, 2))
    diff = {s: Fraction(1)}
    for term, coeff in straighten(s).items():
        diff[term] = diff.get(term, Fraction(0)) - coeff
    assert verify_weak_identity(diff, samples=10, gens=10, seed=1)


def test_unknown_identity_name():
    with pytest.raises(ValueError):
        check_identity("c4")


def test_squared_pair_array_layout():
    assert squared_pair_array(1) == ((2, 1), (2, 1))
    assert squared_pair_array(2) == ((3, 2), (3, 2), (4, 1), (4, 1))


def test_scalar_evaluation_exact_values():
    # grouped-monomial coefficients: (-2)^r on e1..e_{4r}
    value = scalar_evaluation(1)
    full = GrassmannElem.monomial(4, (1, 2, 3, 4), -2)
    assert value == M11.central(full)

    value = scalar_evaluation(2)
    full = GrassmannElem.monomial(8, tuple(range(1, 9)), 4)
    assert value == M11.central(full)


def test_scalar_check():
    assert scalar_check(0)
    assert scalar_check(1)
    assert scalar_check(2)
    assert scalar_check(3)


@st.composite
def grassmann_strategy(draw, gens=5, max_terms=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        size = draw(st.integers(0, gens))
        mono = tuple(sorted(draw(st.permutations(range(1, gens + 1)))[:size]))
        terms[mono] = terms.get(mono, 0) + draw(st.integers(-3, 3))
    return GrassmannElem(5, terms)


@given(x=grassmann_strategy(), y=grassmann_strategy(), z=grassmann_strategy())
@settings(max_examples=60, deadline=None)
def test_wedge_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(x=grassmann_strategy(), y=grassmann_strategy())
@settings(max_examples=60, deadline=None)
def test_odd_elements_anticommute(x, y):
    x_odd = GrassmannElem(5, {m: c for m, c in x.terms.items() if len(m) % 2})
    y_odd = GrassmannElem(5, {m: c for m, c in y.terms.items() if len(m) % 2})
    assert x_odd * y_odd == -1 * (y_odd * x_odd)
