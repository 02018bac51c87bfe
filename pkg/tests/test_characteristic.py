import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qgln.characteristic import (
    KINDS,
    CoincidentRootError,
    block_power,
    build_A,
    build_Abar,
    build_Atilde,
    build_charmat,
    char_identity_residual,
    char_roots,
    partition_check,
    projectors,
    qtrace_invariant,
    shift_components,
    sub_projectors,
)
from qgln.invariants import chi_Cm, chi_Ctilde_m
from qgln.patterns import weyl_dimension
from qgln.representations import build_irrep
from qgln.scalars import ExactBackend, eval_at
from qgln.verification.classical import pieri_dims

Q = 1.5
GRID = [(1, 0), (2, 0), (1, 1), (2, 1, 0), (1, 0, 0), (2, 2, 0), (1, 1, 0, 0)]


@pytest.mark.parametrize("hw", GRID)
@pytest.mark.parametrize("kind", KINDS)
def test_characteristic_identity(hw, kind):
    R = build_irrep(hw, Q)
    M = build_charmat(R, kind)
    assert M.size == R.n * R.dimension
    assert char_identity_residual(M) < 1e-8 * M.size


def test_trivial_rep_identity_is_exactly_zero():
    R = build_irrep((0, 0), "exact")
    M = build_Atilde(R)
    assert char_identity_residual(M) == 0.0


@pytest.mark.parametrize("kind", KINDS)
def test_wrong_roots_leave_a_residual(kind):
    R = build_irrep((1, 0), Q)
    M = build_charmat(R, kind)
    assert char_identity_residual(M, [r + 1 for r in M.roots]) > 0.1


def test_abar_spectrum_matches_roots():
    R = build_irrep((2, 1, 0), Q)
    M = build_Abar(R)
    eig = np.linalg.eigvals(M.dense.astype(float))
    roots = np.array(M.roots, dtype=float)
    assert max(np.min(np.abs(roots - e)) for e in eig) < 1e-8
    for r in roots:
        assert np.min(np.abs(eig - r)) < 1e-8


def test_vector_rep_atilde_is_hermitian_block_matrix():
    R = build_irrep((1, 0), Q)
    M = build_Atilde(R)
    for i in (1, 2):
        for j in (1, 2):
            np.testing.assert_allclose(M.block(i, j).T, M.block(j, i), atol=1e-14)


@pytest.mark.parametrize("hw", GRID)
def test_projector_ranks_match_branching(hw):
    R = build_irrep(hw, Q)
    for kind, sign in (("Atilde", +1), ("Abar", +1), ("A", -1)):
        fam = projectors(build_charmat(R, kind))
        res = fam.residuals()
        tol = 1e-9 * fam.matrix.size
        assert all(v < tol for v in res.values()), res
        assert [fam.rank(r) for r in range(1, R.n + 1)] == pieri_dims(hw, sign)


def test_coincident_roots_are_rejected():
    R = build_irrep((1, 0), Q)
    M = build_Atilde(R)
    with pytest.raises(CoincidentRootError):
        projectors(M, [M.roots[0], M.roots[0]])


@pytest.mark.parametrize("hw", [(2, 1, 0), (1, 0, 0), (2, 0, 0)])
@pytest.mark.parametrize("kind", ["Atilde", "A"])
def test_partition(hw, kind):
    R = build_irrep(hw, Q)
    res = partition_check(build_charmat(R, kind), R)
    assert all(v < 1e-9 * R.n * R.dimension for v in res.values()), res


@pytest.mark.parametrize("kind", ["Atilde", "A"])
def test_sub_projectors_and_shift_components(kind):
    R = build_irrep((2, 1, 0), Q)
    M = build_charmat(R, kind)
    P0 = sub_projectors(M, R)
    assert len(P0) == R.n - 1
    I = sum(p.dense for p in P0)
    np.testing.assert_allclose(I, np.eye((R.n - 1) * R.dimension), atol=1e-10)
    col = sum(shift_components(M, R, r)[0][0] for r in range(1, R.n))
    np.testing.assert_allclose(col, M.block(1, R.n), atol=1e-10)


@pytest.mark.parametrize("hw", [(1, 0), (2, 1, 0), (2, 0, 0)])
def test_qtrace_invariants_are_scalars(hw):
    R = build_irrep(hw, Q)
    for m in (1, 2):
        C = qtrace_invariant(build_A(R), m)
        Ct = qtrace_invariant(build_Atilde(R), m)
        np.testing.assert_allclose(C, eval_at(chi_Cm(hw, m), Q) * np.eye(R.dimension), atol=1e-9)
        np.testing.assert_allclose(Ct, eval_at(chi_Ctilde_m(hw, m), Q) * np.eye(R.dimension), atol=1e-9)
    with pytest.raises(ValueError):
        qtrace_invariant(build_Abar(R), 1)


def test_block_power_and_matmul():
    R = build_irrep((1, 0), Q)
    M = build_Atilde(R)
    np.testing.assert_allclose(block_power(M, 2).dense, (M @ M).dense)
    np.testing.assert_allclose(block_power(M, 0).dense, M.identity())


def test_roots_by_kind():
    B = ExactBackend()
    assert char_roots((2, 1, 0), "A", B) == [B.root(4), B.root(2), B.root(0)]
    assert char_roots((2, 1, 0), "Atilde", B) == [B.root(2), B.root(0), B.root(-2)]
    with pytest.raises(ValueError):
        char_roots((2, 1, 0), "B", B)


def test_exact_charmat_for_vector_rep():
    R = build_irrep((1, 0, 0), "exact")
    for build in (build_A, build_Atilde, build_Abar):
        assert char_identity_residual(build(R)) == 0.0


@settings(max_examples=15)
@given(st.sampled_from([(1, 0), (3, 1), (1, 1, 1), (2, 1, 1), (3, 0, 0), (1, 0, 0, 0)]), st.sampled_from([0.6, 1.5, 2.2]))
def test_trace_of_projectors_gives_dimensions(hw, q):
    R = build_irrep(hw, q)
    fam = projectors(build_Atilde(R))
    assert sum(fam.rank(r) for r in range(1, R.n + 1)) == R.n * weyl_dimension(hw)
