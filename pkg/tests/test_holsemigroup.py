import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holsemi.holsemigroup import (
    ConstraintSet,
    admissible,
    audit_candidate,
    factor_over_basis,
    hilbert_basis,
    in_semigroup,
    is_factorial,
    m_vector,
    predicted_basis,
    verify_theorem1,
    verify_theorem2,
)
from holsemi.oracle import check_basis, minimal_elements
from conftest import report

order_vectors = st.integers(2, 5).flatmap(lambda r: st.lists(st.integers(-6, 6), min_size=r, max_size=r))


def monomial_set(name):
    return [d.multiplicities for d in report(name).data]


# -- membership and the m-vector ---------------------------------------------


def test_in_semigroup():
    assert in_semigroup((0, 0), (1, -2))
    assert in_semigroup((1, 3, 3, 4, 5), (0, 2, 0, -1, 0))
    assert not in_semigroup((1, 3, 3, 4, 5), (0, 1, 0, -1, 0))
    assert not in_semigroup((0, 1), (1, -2))
    with pytest.raises(ValueError):
        in_semigroup((1,), (1, 2))


def test_m_vector_examples():
    assert m_vector((1, -2), 0) == (0, 2)
    assert m_vector((2, 0, 5), 0) == (0, 0, 0)
    assert m_vector((2, -3), 0) == (0, 2)
    with pytest.raises(ValueError):
        m_vector((0, 1), 0)


@settings(max_examples=200, deadline=None)
@given(order_vectors)
def test_m_vector_consistency(v):
    for l in (i for i, x in enumerate(v) if x > 0):
        m = m_vector(v, l)
        r = len(v)
        for j in range(r):
            assert (m[j] == 0) == (v[j] >= 0)
            e = [int(i == j) for i in range(r)]
            k = [a + (m[j] if i == l else 0) for i, a in enumerate(e)]
            assert in_semigroup(k, v)
            if m[j] >= 1:
                k[l] -= 1
                assert not in_semigroup(k, v)


# -- Hilbert basis ------------------------------------------------------------


@pytest.mark.parametrize("v,basis,factorial", [
    ((3, 1), [(0, 1), (1, 0)], True),
    ((1, -1), [(1, 0), (1, 1)], True),
    ((2, -3), [(1, 0), (2, 1), (3, 2)], False),
])
def test_hilbert_basis_examples(v, basis, factorial):
    hb = hilbert_basis(v)
    assert list(hb.elements) == basis
    assert is_factorial(v) is factorial
    box = 8 if v == (2, -3) else 6
    assert minimal_elements(v, box) == basis


@pytest.mark.parametrize("v,l,expected,equal", [
    ((1, -1), 0, [(1, 0), (1, 1)], True),
    ((2, -3), 0, [(1, 0), (2, 1)], False),
    ((2, 1, 0), 1, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], True),
])
def test_predicted_basis(v, l, expected, equal):
    pred = predicted_basis(v, l)
    assert sorted(pred) == sorted(expected)
    assert (tuple(sorted(pred)) == hilbert_basis(v).elements) is equal


@settings(max_examples=60, deadline=None)
@given(order_vectors)
def test_hilbert_basis_matches_oracle(v):
    hb = hilbert_basis(v)
    check = check_basis(v, hb.elements, 12)
    assert check == {"matches_minimal": True, "generates_box": True, "each_needed": True}
    assert is_factorial(v) == (len(hb) == len(v))


@settings(max_examples=300, deadline=None)
@given(order_vectors)
def test_structure_lemma(v):
    hb = hilbert_basis(v)
    pos = [i for i, x in enumerate(v) if x > 0]
    for l in pos:
        pred = predicted_basis(v, l)
        # predicted elements are always irreducible
        assert set(pred) <= set(hb.elements)
    if len(hb) == len(v) and pos and min(v) < 0:
        for l in pos:
            assert tuple(sorted(predicted_basis(v, l))) == hb.elements


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=5))
def test_nonnegative_orders_give_units(v):
    r = len(v)
    assert set(hilbert_basis(v).elements) == {tuple(int(i == j) for i in range(r)) for j in range(r)}
    assert is_factorial(v)


def test_basis_elements_are_irreducible_members():
    v = (3, -2, 1, -5)
    hb = hilbert_basis(v)
    members = {k for k in itertools.product(range(7), repeat=4) if in_semigroup(k, v) and any(k)}
    for b in hb:
        assert b in members
        assert not any(tuple(x - y for x, y in zip(b, a)) in members for a in members
                       if all(x <= y for x, y in zip(a, b)) and a != b)


# -- factorization ----------------------------------------------------------


def test_factor_over_basis():
    hb = hilbert_basis((2, -3))
    assert factor_over_basis((3, 2), hb) == (0, 0, 1)
    for i, b in enumerate(hb.elements):
        assert factor_over_basis(b, hb) == tuple(int(j == i) for j in range(len(hb)))
    with pytest.raises(ValueError):
        factor_over_basis((0, 1), hb)
    # zeta_K over the proof's basis: a_j = d_j away from l
    v, d, l = (0, 1, -1), (1, 2, 2), 1
    a = factor_over_basis(d, predicted_basis(v, l), v)
    assert a == (1, 0, 2)
    assert all(a[j] == d[j] for j in range(3) if j != l)


@settings(max_examples=80, deadline=None)
@given(order_vectors, st.data())
def test_factorization_reconstructs(v, data):
    hb = hilbert_basis(v)
    k = tuple(data.draw(st.lists(st.integers(0, 5), min_size=len(v), max_size=len(v))))
    if not in_semigroup(k, v):
        return
    c = factor_over_basis(k, hb)
    assert c is not None
    assert tuple(sum(ci * b[t] for ci, b in zip(c, hb.elements)) for t in range(len(v))) == k


# -- admissibility ------------------------------------------------------------


A5_DEGREES = (1, 3, 3, 4, 5)


def test_admissible_examples():
    C = ConstraintSet(A5_DEGREES, tuple(monomial_set("A5")), use_rhoades=True)
    assert admissible((0,) * 5, C)
    res = admissible((-1, 0, 0, 0, 1), C)
    assert not res and "hecke_dim1[0]" in res.violations
    v = (0, -1, 0, 0, 1)
    res = admissible(v, C)
    assert sum(a * b for a, b in zip(A5_DEGREES, v)) == 2
    expected = all(sum(a * b for a, b in zip(m, v)) >= 0 for m in monomial_set("A5"))
    assert bool(res) is expected is False
    assert all(x.startswith("induced_hecke") for x in res.violations)


def test_admissible_length_mismatch():
    with pytest.raises(ValueError):
        admissible((1, 2), ConstraintSet((1, 2, 2)))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_more_flags_never_enlarge(v):
    M = tuple(monomial_set("A5"))
    flags = [
        ConstraintSet(A5_DEGREES, M, False, False, False),
        ConstraintSet(A5_DEGREES, M, True, False, False),
        ConstraintSet(A5_DEGREES, M, True, True, False),
        ConstraintSet(A5_DEGREES, M, True, True, True),
    ]
    results = [bool(admissible(v, C)) for C in flags]
    assert results == sorted(results, reverse=True)


# -- theorem searches ---------------------------------------------------------


@pytest.mark.parametrize("name", ["A5", "S3"])
def test_verify_theorem1(name):
    rep = report(name)
    out = verify_theorem1(rep.table.degrees, monomial_set(name), 3)
    assert out.counterexamples == []
    assert out.searched == 7 ** len(rep.table.degrees)


def test_monomial_group_has_no_poles_at_all():
    C = ConstraintSet((1, 1, 2), tuple(monomial_set("S3")))
    adm = [v for v in itertools.product(range(-3, 4), repeat=3) if admissible(v, C, report_all=False)]
    assert adm and all(min(v) >= 0 for v in adm)


def test_verify_theorem1_single_character():
    assert verify_theorem1((1,), [(1,)], 5).counterexamples == []


def test_verify_theorem1_without_almost_monomial_data_finds_counterexamples():
    # dropping the induced constraints leaves factorial vectors with poles
    out = verify_theorem1((1, 2, 2), [], 2)
    assert (0, 1, -1) in out.counterexamples


def test_verify_theorem2():
    out = verify_theorem2((1, 2, 2), 1, 3)
    assert out.counterexamples == []
    assert out.audits and all(a.identity_holds and a.basis_is_predicted for a in out.audits)
    with pytest.raises(ValueError):
        verify_theorem2((1, 2, 3), 2, 3)


def test_theorem2_candidate_classification():
    v = (0, 1, -1)
    res = admissible(v, ConstraintSet((1, 2, 3), use_rhoades=True))
    assert not res and res.violations == ["zeta_K"]
    res = admissible(v, ConstraintSet((1, 2, 2), use_rhoades=True))
    assert not res and res.violations == ["rhoades[2]"]


def test_nonnegative_vectors_never_reported():
    out = verify_theorem2((1, 2, 2), 1, 2)
    assert all(min(c) < 0 for c in out.counterexamples)
    assert all(min(a.v) < 0 for a in out.audits)


def test_audit_recomputes_degree_identity():
    a = audit_candidate((0, 2, -2), (1, 2, 2), 1)
    assert a.basis_is_predicted and a.identity_holds
    assert a.a == (1, 0, 2) and a.m == (0, 0, 1)
