import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qgln.patterns import GTPattern, enumerate_patterns
from qgln.representations import (
    DimensionCapError,
    antipode_E,
    antipode_hatE,
    build_irrep,
    check_dimension,
    composite_E,
    composite_E_pivot,
    composite_Eprime,
    hatE,
    matrix_element_e,
    matrix_element_e_squared,
    matrix_element_f,
    matrix_element_f_squared,
    rho_qtrace,
    tildeE,
)
from qgln.scalars import NotASquareError, QRat, eval_at, limit_q1, qpow

Q = 1.5


def P(*rows):
    return GTPattern(tuple(tuple(r) for r in rows))


def unit(n, i, j):
    m = np.zeros((n, n))
    m[i - 1, j - 1] = 1.0
    return m


def test_vector_rep_matrix_elements():
    assert matrix_element_e(P((1, 0), (0,)), 1, 1) == pytest.approx(1.0)
    assert matrix_element_e(P((1, 0), (1,)), 1, 1) == 0
    assert matrix_element_f(P((1, 0), (1,)), 1, 1) == pytest.approx(1.0)
    assert matrix_element_f(P((1, 0), (0,)), 1, 1) == 0
    assert matrix_element_e_squared(P((1, 0), (0,)), 1, 1) == QRat(1)


def test_determinant_module_has_no_shifts():
    for p in enumerate_patterns((1, 1)):
        assert matrix_element_e_squared(p, 1, 1) == QRat(0)
        assert matrix_element_f_squared(p, 1, 1) == QRat(0)


def test_build_vector_rep():
    R = build_irrep((1, 0), Q)
    np.testing.assert_allclose(R.e[0], unit(2, 1, 2))
    np.testing.assert_allclose(R.f[0], unit(2, 2, 1))
    np.testing.assert_allclose(R.k[0], np.diag([Q, 1]))
    np.testing.assert_allclose(R.k[1], np.diag([1, Q]))


def test_trivial_and_determinant_modules():
    R = build_irrep((0, 0, 0), Q)
    assert R.dimension == 1
    assert all(not m.any() for m in R.e + R.f)
    assert all(np.allclose(k, R.identity()) for k in R.k)
    D = build_irrep((1, 1), Q)
    assert not D.e[0].any() and not D.f[0].any()
    assert np.allclose(D.k[0], Q) and np.allclose(D.k[1], Q)


def test_exact_backend():
    R = build_irrep((1, 0), "exact")
    assert R.exact
    assert R.e[0][0, 1] == QRat(1)
    with pytest.raises(NotASquareError):
        build_irrep((2, 0), "exact")


def test_vector_composites_are_matrix_units():
    R = build_irrep((1, 0, 0), Q)
    np.testing.assert_allclose(composite_E(1, 3, R), unit(3, 1, 3), atol=1e-14)
    np.testing.assert_allclose(composite_Eprime(1, 3, R), unit(3, 1, 3), atol=1e-14)
    np.testing.assert_allclose(composite_E(1, 2, R), R.e[0])
    np.testing.assert_allclose(composite_Eprime(1, 2, R), R.e[0])
    T = build_irrep((0, 0, 0), Q)
    assert not composite_E(3, 1, T).any()
    assert not composite_Eprime(1, 3, T).any()


def test_hatE_on_vector_rep():
    R = build_irrep((1, 0), Q)
    np.testing.assert_allclose(hatE(1, 1, R), R.k[0])
    expected = (Q - 1 / Q) * R.qdiag(R.weights[:, 0] + R.weights[:, 1] - 1) @ R.e[0]
    np.testing.assert_allclose(hatE(1, 2, R), expected)
    T = build_irrep((0, 0), Q)
    assert not hatE(1, 2, T).any()


def test_antipode_examples():
    R = build_irrep((1, 0), Q)
    np.testing.assert_allclose(antipode_E(1, 2, R, -1), -Q * composite_Eprime(1, 2, R))
    np.testing.assert_allclose(antipode_E(2, 1, R, -1), -(Q**-1) * composite_Eprime(2, 1, R))
    np.testing.assert_allclose(antipode_hatE(1, 1, R, -1), R.kinv(1))
    np.testing.assert_allclose(antipode_hatE(1, 2, R, -1), tildeE(1, 2, R), atol=1e-14)
    np.testing.assert_allclose(antipode_hatE(2, 1, R, -1), Q**-2 * tildeE(2, 1, R), atol=1e-14)
    V = build_irrep((1, 0, 0), Q)
    np.testing.assert_allclose(antipode_E(1, 3, V, -1), -Q * composite_Eprime(1, 3, V), atol=1e-14)


def test_antipode_is_inverse():
    R = build_irrep((2, 1, 0), Q)
    # S(S^-1(e_1)) on generators: S^{-1}(e) = -q e, S(e) = -q^-1 e
    np.testing.assert_allclose(antipode_E(1, 2, R, 1) * (-Q), R.e[0], atol=1e-12)


def test_rho_qtrace():
    q = qpow(1)
    assert rho_qtrace((0, 0)) == QRat(1)
    assert rho_qtrace((1, 0)) == q + q.inverse()
    assert rho_qtrace((2, 1, 0)) == q**4 + 2 * q**2 + 2 + 2 * q**-2 + q**-4


def test_dimension_cap(monkeypatch):
    with pytest.raises(DimensionCapError):
        check_dimension((4, 2, 0, 0), cap=10)
    monkeypatch.setenv("QGLN_DIM_CAP", "5")
    with pytest.raises(DimensionCapError):
        build_irrep((2, 1, 0), Q)


def test_json_export_is_stable():
    a = build_irrep((2, 1, 0), Q).to_json()
    b = build_irrep((2, 1, 0), Q).to_json()
    assert a == b
    assert a["hw"] == [2, 1, 0] and len(a["basis"]) == 8


hws = st.sampled_from([(1, 0), (2, 0), (2, 1, 0), (1, 1, 0), (2, 0, 0), (1, 0, 0, 0), (1, 1, 0, 0), (2, 2, 1)])


@settings(max_examples=20)
@given(hws, st.sampled_from([0.7, 1.5, 2.5]))
def test_cartan_relation_at_any_q(hw, q):
    R = build_irrep(hw, q)
    for m in range(1, R.n):
        K = R.k[m - 1] @ np.linalg.inv(R.k[m])
        lhs = R.e[m - 1] @ R.f[m - 1] - R.f[m - 1] @ R.e[m - 1]
        assert np.linalg.norm(lhs - (K - np.linalg.inv(K)) / (q - 1 / q)) < 1e-10 * R.dimension
        np.testing.assert_allclose(R.e[m - 1].T, R.f[m - 1])


@settings(max_examples=10)
@given(st.sampled_from([(1, 0, 0, 0), (2, 1, 0, 0), (1, 1, 0, 0), (2, 0, 0, 0)]), st.sampled_from([(1, 4), (4, 1)]))
def test_pivot_independence(hw, ij):
    R = build_irrep(hw, Q)
    i, j = ij
    ref = composite_E(i, j, R)
    for k in range(min(i, j) + 1, max(i, j)):
        np.testing.assert_allclose(composite_E_pivot(i, j, k, R), ref, atol=1e-10)


def test_weight_additivity_of_composites():
    R = build_irrep((2, 1, 0), Q)
    W = R.weights
    for i in range(1, 4):
        for j in range(1, 4):
            if i == j:
                continue
            M = composite_E(i, j, R)
            for a, b in zip(*np.nonzero(np.abs(M) > 1e-12)):
                diff = W[a] - W[b]
                expected = np.zeros(3, dtype=int)
                expected[i - 1] += 1
                expected[j - 1] -= 1
                assert (diff == expected).all()


@given(st.sampled_from(enumerate_patterns((2, 1, 0)) + enumerate_patterns((2, 2, 0))), st.sampled_from([(1, 1), (1, 2), (2, 2)]))
def test_matrix_element_squares_are_nonnegative_at_real_q(p, rm):
    r, m = rm
    for sq in (matrix_element_e_squared(p, r, m), matrix_element_f_squared(p, r, m)):
        for q in (0.5, 1.5, 3.0):
            assert eval_at(sq, q) >= -1e-12
        assert limit_q1(sq) >= 0
