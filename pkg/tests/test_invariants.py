import itertools

import pytest
from hypothesis import given, settings, strategies as st

from qgln import invariants as inv
from qgln.invariants import AdmissibilityError, check_admissible, invariant_table, rwc
from qgln.patterns import GTPattern, enumerate_patterns, is_between, is_dominant, subalgebra_weights
from qgln.representations import matrix_element_e_squared, matrix_element_f_squared, rho_qtrace
from qgln.scalars import HalfInt, QRat, eval_at, limit_q1, qnumber, qpow
from qgln.verification import classical

ONE = QRat(1)


def admissible_pairs(max_n=4, max_entry=2):
    for n in range(2, max_n + 1):
        for hw in itertools.combinations_with_replacement(range(max_entry, -1, -1), n):
            for hw0 in subalgebra_weights(hw):
                yield hw, hw0


PAIRS = list(admissible_pairs(3, 2))


@st.composite
def pair(draw, max_n=4, max_entry=3):
    n = draw(st.integers(2, max_n))
    hw = tuple(sorted(draw(st.lists(st.integers(0, max_entry), min_size=n, max_size=n)), reverse=True))
    hw0 = draw(st.sampled_from(subalgebra_weights(hw)))
    return hw, hw0


def shift(w, r, d):
    w = list(w)
    w[r - 1] += d
    return tuple(w)


# --- examples -------------------------------------------------------------


def test_trivial_module_splits():
    assert [inv.omegatilde_k((0, 0), (0,), k) for k in (1, 2)] == [ONE, QRat(0)]
    assert [inv.omega_k((0, 0), (0,), k) for k in (1, 2)] == [QRat(0), ONE]
    assert inv.gammatilde_r((0, 0), (0,), 1) == QRat(0)


def test_qdimension_examples():
    assert inv.qdimension((0, 0)) == ONE
    assert inv.qdimension((1, 0)) == qnumber(2)
    assert inv.qdimension((2, 1, 0)) == rho_qtrace((2, 1, 0))


def test_casimir_examples():
    assert inv.chi_v((1, 0)) == qpow(-2)
    assert inv.chi_C1((0, 0, 0)) == QRat(0)
    ev = inv.casimir_eigenvalues((2, 1, 0), powers=(2,))
    assert ev["chi_C1"] == inv.chi_C1((2, 1, 0))


def test_rwc_phases():
    t = rwc((0, 0), (0,), 1)
    assert t.sign == 1 and t.square == ONE and t.value(1.5) == pytest.approx(1.0)
    assert rwc((2, 1, 0), (2, 0), 1, 1).sign == 1
    assert rwc((2, 1, 0), (1, 0), 2, 1).sign == -1
    with pytest.raises(ValueError):
        rwc((1, 0), (0,), 1, direction="sideways")


def test_closed_form_vector_rep():
    p = GTPattern(((1, 0), (0,)))
    x, b = inv.closed_form_matrix_elements(p, 1, 1, "N")
    assert x == HalfInt(0) and b == QRat(-1)
    assert inv.closed_form_square(p, 1, 1, "N") == ONE
    assert inv.closed_form_matrix_elements(GTPattern(((1, 0), (1,))), 1, 1, "N") == (HalfInt(0), QRat(0))
    with pytest.raises(ValueError):
        inv.closed_form_matrix_elements(p, 1, 1, "X")


def test_admissibility():
    assert check_admissible((2, 1, 0), (1, 1)) == ((2, 1, 0), (1, 1))
    for bad in [((1, 0), (2,)), ((1, 0), (0, 0))]:
        with pytest.raises(AdmissibilityError):
            check_admissible(*bad)
    with pytest.raises(ValueError):
        check_admissible((0, 1), (0,))


def test_table_json_roundtrip_shape():
    t = invariant_table((2, 1, 0), (2, 0))
    d = t.to_json()
    assert d["theta"] == 1
    assert len(d["omega_kr"]) == 3 and len(d["omega_kr"][0]) == 2
    assert len(t.rows(1.5)) > 30


# --- exact identities over the grid ---------------------------------------


@pytest.mark.parametrize("hw, hw0", PAIRS)
def test_sum_rules_exact(hw, hw0):
    n = len(hw)
    ks = range(1, n + 1)
    assert sum((inv.omega_k(hw, hw0, k) for k in ks), QRat()) == ONE
    assert sum((inv.omegatilde_k(hw, hw0, k) for k in ks), QRat()) == ONE
    for r in range(1, n):
        if is_dominant(shift(hw0, r, 1)):
            assert sum((inv.omegatilde_kr(hw, hw0, k, r) for k in ks), QRat()) == ONE
        if is_dominant(shift(hw0, r, -1)):
            assert sum((inv.omega_kr(hw, hw0, k, r) for k in ks), QRat()) == ONE


@pytest.mark.parametrize("hw, hw0", PAIRS)
def test_bracket_forms_agree(hw, hw0):
    n = len(hw)
    for k in range(1, n + 1):
        assert inv.omega_k(hw, hw0, k) == inv.omega_k_bracket(hw, hw0, k)
        assert inv.omegatilde_k(hw, hw0, k) == inv.omegatilde_k_bracket(hw, hw0, k)
        for r in range(1, n):
            assert inv.omega_kr(hw, hw0, k, r) == inv.omega_kr_bracket(hw, hw0, k, r)
            assert inv.omegatilde_kr(hw, hw0, k, r) == inv.omegatilde_kr_bracket(hw, hw0, k, r)
    for r in range(1, n):
        assert inv.gamma_r(hw, hw0, r) == inv.gamma_r_bracket(hw, hw0, r)
        assert inv.gammatilde_r(hw, hw0, r) == inv.gammatilde_r_bracket(hw, hw0, r)
        assert inv.mu_r(hw, hw0, r) == inv.mu_r_bracket(hw, hw0, r)
        assert inv.mutilde_r(hw, hw0, r) == inv.mutilde_r_bracket(hw, hw0, r)


@pytest.mark.parametrize("hw, hw0", PAIRS)
def test_mu_gamma_relations(hw, hw0):
    for r in range(1, len(hw)):
        up, down = shift(hw0, r, 1), shift(hw0, r, -1)
        if is_between(hw, up):
            assert inv.gammatilde_r(hw, up, r) == inv.mutilde_r(hw, hw0, r)
        if is_between(hw, down):
            assert inv.mu_r(hw, hw0, r) == inv.gamma_r(hw, down, r)


@pytest.mark.parametrize("hw, hw0", PAIRS)
def test_forbidden_channels_vanish(hw, hw0):
    for k in range(1, len(hw) + 1):
        if not is_dominant(shift(hw, k, 1)):
            assert inv.omegatilde_k(hw, hw0, k).is_zero()
        if not is_dominant(shift(hw, k, -1)):
            assert inv.omega_k(hw, hw0, k).is_zero()


@pytest.mark.parametrize("hw, hw0", PAIRS)
def test_classical_limit_matches_oracle(hw, hw0):
    n = len(hw)
    for k in range(1, n + 1):
        assert limit_q1(inv.omega_k(hw, hw0, k)) == classical.omega(hw, hw0, k)
        assert limit_q1(inv.omegatilde_k(hw, hw0, k)) == classical.omegatilde(hw, hw0, k)
        for r in range(1, n):
            assert limit_q1(inv.omega_kr(hw, hw0, k, r)) == classical.omega_kr(hw, hw0, k, r)
            assert limit_q1(inv.omegatilde_kr(hw, hw0, k, r)) == classical.omegatilde_kr(hw, hw0, k, r)
    for r in range(1, n):
        assert limit_q1(inv.mu_r(hw, hw0, r)) == classical.mu(hw, hw0, r)
        assert limit_q1(inv.mutilde_r(hw, hw0, r)) == classical.mutilde(hw, hw0, r)
        assert limit_q1(inv.gamma_r(hw, hw0, r)) == classical.gamma(hw, hw0, r)
        assert limit_q1(inv.gammatilde_r(hw, hw0, r)) == classical.gammatilde(hw, hw0, r)


@pytest.mark.parametrize("hw", [(1, 0), (2, 1, 0), (2, 2, 0), (1, 0, 0)])
def test_closed_form_squares_match_generators(hw):
    for p in enumerate_patterns(hw):
        for m in range(1, len(hw)):
            for r in range(1, m + 1):
                assert inv.closed_form_square(p, r, m, "N") == matrix_element_e_squared(p, r, m)
                assert inv.closed_form_square(p, r, m, "Nbar") == matrix_element_f_squared(p, r, m)


# --- properties -----------------------------------------------------------


@settings(max_examples=40)
@given(pair())
def test_sum_rules_random(pr):
    hw, hw0 = pr
    ks = range(1, len(hw) + 1)
    assert sum((inv.omega_k(hw, hw0, k) for k in ks), QRat()) == ONE
    assert sum((inv.omegatilde_k(hw, hw0, k) for k in ks), QRat()) == ONE


@settings(max_examples=25)
@given(st.integers(2, 4).flatmap(lambda n: st.lists(st.integers(-2, 3), min_size=n, max_size=n)))
def test_casimir_C1_agreement(xs):
    hw = tuple(sorted(xs, reverse=True))
    n = len(hw)
    assert inv.chi_C1(hw) == inv.chi_Cm(hw, 1) == inv.chi_Ctilde_m(hw, 1)
    lim = limit_q1(inv.qdimension(hw))
    assert lim == classical.weyl_dim(hw)
    expected = sum((qpow(-(hw[i] + n + 1 - 2 * (i + 1))) * qnumber(hw[i]) for i in range(n)), QRat())
    assert inv.chi_C1(hw) == expected


@settings(max_examples=30)
@given(pair(max_n=3))
def test_invariants_nonnegative_at_real_q(pr):
    hw, hw0 = pr
    for k in range(1, len(hw) + 1):
        for q in (0.5, 1.5, 2.5):
            assert eval_at(inv.omega_k(hw, hw0, k), q) >= -1e-12
            assert eval_at(inv.omegatilde_k(hw, hw0, k), q) >= -1e-12
