"""Characteristic matrices Abar, Atilde and A on V_0 (x) V(Lambda).

A block matrix is an n x n array of operators on V(Lambda).  It is stored
once as a dense (n*dim) x (n*dim) array whose (i, j) block is
``dense[(i-1)*dim : i*dim, (j-1)*dim : j*dim]``; :meth:`BlockMatrix.block`
returns views into that storage.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional, Sequence

import numpy as np

from .patterns import HighestWeight
from .representations import (
    Irrep,
    antipode_hatE,
    diag,
    hatE,
    identity,
    matrix_to_json,
    zeros,
)
from .scalars import Backend, HalfInt, QRat, eval_at

__all__ = [
    "BlockMatrix",
    "ProjectorFamily",
    "CoincidentRootError",
    "build_Abar",
    "build_Atilde",
    "build_A",
    "build_charmat",
    "char_roots",
    "char_identity_residual",
    "char_identity_product",
    "projectors",
    "sub_projectors",
    "shift_components",
    "subalgebra_root_diagonals",
    "qtrace_invariant",
    "block_power",
    "partition_check",
    "frob",
]

Kind = Literal["Abar", "Atilde", "A"]
KINDS = ("Abar", "Atilde", "A")


class CoincidentRootError(ValueError):
    """Two characteristic roots agree to within 1e-12, so Lagrange projectors do not exist."""


def frob(x) -> float:
    """Frobenius norm; exact entries are evaluated at the probe q = 3/2."""
    if isinstance(x, np.ndarray) and x.dtype == object:
        vals = np.array([eval_at(QRat._coerce(v), 1.5) for v in x.ravel()], dtype=float)
        return float(np.linalg.norm(vals))
    return float(np.linalg.norm(x))


@dataclass
class BlockMatrix:
    n: int
    dim: int
    kind: str
    dense: np.ndarray
    backend: Backend
    roots: Optional[list] = None

    def block(self, i: int, j: int) -> np.ndarray:
        d = self.dim
        return self.dense[(i - 1) * d : i * d, (j - 1) * d : j * d]

    @property
    def blocks(self) -> list[list[np.ndarray]]:
        return [[self.block(i, j) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    @property
    def size(self) -> int:
        return self.n * self.dim

    def identity(self) -> np.ndarray:
        return identity(self.size, self.backend)

    def like(self, dense: np.ndarray, kind: Optional[str] = None) -> "BlockMatrix":
        return BlockMatrix(self.n, self.dim, kind or self.kind, dense, self.backend, None)

    def __matmul__(self, other: "BlockMatrix") -> "BlockMatrix":
        return self.like(self.dense @ other.dense)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "dim": self.dim,
            "roots": None if self.roots is None else [_scalar_json(r) for r in self.roots],
            "blocks": [[matrix_to_json(self.block(i, j)) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)],
        }


def _scalar_json(x):
    if isinstance(x, QRat):
        return str(x)
    return float(x) + 0.0


def _assemble(blocks: list[list[np.ndarray]], dim: int, backend: Backend) -> np.ndarray:
    n = len(blocks)
    out = zeros(n * dim, backend)
    for i in range(n):
        for j in range(n):
            out[i * dim : (i + 1) * dim, j * dim : (j + 1) * dim] = blocks[i][j]
    return out


def char_roots(hw: Sequence[int], kind: Kind, backend: Backend) -> list:
    """Characteristic roots: abar_r for Abar, atilde_r for Atilde, a_r for A."""
    hw = HighestWeight.of(hw).entries
    n = len(hw)
    if kind == "Abar":
        return [backend.root_bar(hw[r - 1] + 1 - r) for r in range(1, n + 1)]
    if kind == "Atilde":
        return [backend.root(hw[r - 1] + 1 - r) for r in range(1, n + 1)]
    if kind == "A":
        return [backend.root(hw[r - 1] + n - r) for r in range(1, n + 1)]
    raise ValueError(f"unknown characteristic matrix kind {kind!r}")


def _entry(irrep: Irrep, kind: Kind, i: int, j: int, size: int) -> np.ndarray:
    B = irrep.backend
    d = irrep.dimension
    acc = identity(d, B) if i == j else zeros(d, B)
    if kind == "Abar":
        for k in range(max(i, j), size + 1):
            acc = acc - hatE(k, i, irrep) @ hatE(j, k, irrep)
    elif kind == "Atilde":
        for k in range(1, min(i, j) + 1):
            acc = acc - antipode_hatE(k, i, irrep, -1) @ antipode_hatE(j, k, irrep, +1)
    elif kind == "A":
        # q^{(rho, eps_j - eps_i)} = q^{i - j}
        c = B.qpow(i - j)
        for k in range(1, min(i, j) + 1):
            acc = acc - c * (antipode_hatE(i, k, irrep, -1) @ antipode_hatE(k, j, irrep, -1))
    else:
        raise ValueError(f"unknown characteristic matrix kind {kind!r}")
    return acc / B.qbar


def build_charmat(irrep: Irrep, kind: Kind, size: Optional[int] = None) -> BlockMatrix:
    """The kind-characteristic matrix of U_q(gl(size)) acting on V(Lambda).

    ``size`` defaults to n; a smaller size builds the subalgebra matrix from
    the subalgebra operators alone (Abar needs size = n since its sums run
    upwards from max(i, j))."""
    size = irrep.n if size is None else size
    if not 1 <= size <= irrep.n:
        raise ValueError("size must satisfy 1 <= size <= n")
    blocks = [[_entry(irrep, kind, i, j, size) for j in range(1, size + 1)] for i in range(1, size + 1)]
    dense = _assemble(blocks, irrep.dimension, irrep.backend)
    roots = char_roots(irrep.hw, kind, irrep.backend) if size == irrep.n else None
    return BlockMatrix(size, irrep.dimension, kind, dense, irrep.backend, roots)


def build_Abar(irrep: Irrep) -> BlockMatrix:
    """Abar_ij = (q - q^-1)^-1 (delta_ij - sum_{k >= max(i,j)} E^_ki E^_jk)."""
    return build_charmat(irrep, "Abar")


def build_Atilde(irrep: Irrep) -> BlockMatrix:
    """Atilde_ij = (q - q^-1)^-1 (delta_ij - sum_{k <= min(i,j)} S^-1(E^_ki) S(E^_jk))."""
    return build_charmat(irrep, "Atilde")


def build_A(irrep: Irrep) -> BlockMatrix:
    """A_ij = (q - q^-1)^-1 (delta_ij - sum_{k <= min(i,j)} q^{(rho, eps_j - eps_i)} S^-1(E^_ik) S^-1(E^_kj))."""
    return build_charmat(irrep, "A")


def char_identity_product(M: BlockMatrix, roots: Optional[Sequence] = None) -> np.ndarray:
    """prod_r (M - a_r I), multiplied left to right."""
    roots = M.roots if roots is None else roots
    I = M.identity()
    X = I
    for a in roots:
        X = X @ (M.dense - a * I)
    return X


def _is_exact_zero(x: np.ndarray) -> bool:
    return all(QRat._coerce(v).is_zero() for v in x.ravel())


def char_identity_residual(M: BlockMatrix, roots: Optional[Sequence] = None) -> float:
    """Frobenius norm of prod_r (M - a_r) over the full n*dim space.

    In the exact backend the product is formed in Q(s); an identically
    vanishing product reports 0.0."""
    X = char_identity_product(M, roots)
    if X.dtype == object:
        return 0.0 if _is_exact_zero(X) else frob(X)
    return frob(X)


# ---------------------------------------------------------------------------
# projectors
# ---------------------------------------------------------------------------


@dataclass
class ProjectorFamily:
    kind: str
    roots: list
    projectors: list[BlockMatrix]
    matrix: BlockMatrix = field(repr=False)

    def __len__(self):
        return len(self.projectors)

    def __getitem__(self, r: int) -> BlockMatrix:
        """1-based access P_r."""
        return self.projectors[r - 1]

    def rank(self, r: int) -> int:
        """rank of P_r = its trace for an idempotent."""
        t = _trace(self[r].dense)
        return int(round(t))

    def residuals(self) -> dict[str, float]:
        P = [p.dense for p in self.projectors]
        I = self.matrix.identity()
        M = self.matrix.dense
        idem = max(frob(p @ p - p) for p in P)
        orth = max((frob(P[a] @ P[b]) for a in range(len(P)) for b in range(len(P)) if a != b), default=0.0)
        comp = frob(sum(P[1:], P[0]) - I)
        eig = max(frob(M @ p - a * p) for p, a in zip(P, self.roots))
        return {"idempotency": idem, "orthogonality": orth, "completeness": comp, "eigen": eig}


def _trace(x: np.ndarray) -> float:
    if x.dtype == object:
        return float(sum(eval_at(QRat._coerce(v), 1.5) for v in np.diag(x)))
    return float(np.trace(x))


def _check_distinct(roots: Sequence) -> None:
    vals = [float(r) if not isinstance(r, QRat) else None for r in roots]
    for a in range(len(roots)):
        for b in range(a + 1, len(roots)):
            if vals[a] is not None:
                if abs(vals[a] - vals[b]) < 1e-12:
                    raise CoincidentRootError(f"roots {a + 1} and {b + 1} coincide")
            elif (roots[a] - roots[b]).is_zero():
                raise CoincidentRootError(f"roots {a + 1} and {b + 1} coincide")


def projectors(M: BlockMatrix, roots: Optional[Sequence] = None) -> ProjectorFamily:
    """P_r = prod_{l != r} (M - a_l) / (a_r - a_l)."""
    roots = list(M.roots if roots is None else roots)
    _check_distinct(roots)
    I = M.identity()
    out = []
    for r, ar in enumerate(roots):
        X = I
        for l, al in enumerate(roots):
            if l != r:
                X = X @ ((M.dense - al * I) / (ar - al))
        out.append(M.like(X, kind=f"P[{M.kind}]"))
    return ProjectorFamily(M.kind, roots, out, M)


def subalgebra_root_diagonals(irrep: Irrep, kind: Kind) -> list[list]:
    """Per-state U_q(gl(n-1)) roots from row n-1 of each pattern.

    Atilde uses atilde_0r = root(Lambda0_r + 1 - r); A uses
    a_0r = root(Lambda0_r + n - 1 - r)."""
    n = irrep.n
    B = irrep.backend
    rows0 = [p.row(n - 1) for p in irrep.basis]
    out = []
    for r in range(1, n):
        if kind == "Atilde":
            out.append([B.root(row[r - 1] + 1 - r) for row in rows0])
        elif kind == "A":
            out.append([B.root(row[r - 1] + n - 1 - r) for row in rows0])
        else:
            raise ValueError("sub-projectors exist for Atilde and A only")
    return out


def _kron_eye_diag(count: int, values: Sequence, backend: Backend) -> np.ndarray:
    return diag(list(values) * count, backend)


def sub_projectors(M: BlockMatrix, irrep: Irrep) -> list[BlockMatrix]:
    """P_0r on the upper-left (n-1) x (n-1) blocks, built by Lagrange
    interpolation with the per-state subalgebra roots as diagonal operators."""
    if M.kind not in ("Atilde", "A"):
        raise ValueError("sub-projectors exist for Atilde and A only")
    n0 = M.n - 1
    d = M.dim
    B = M.backend
    M0 = M.dense[: n0 * d, : n0 * d]
    D = subalgebra_root_diagonals(irrep, M.kind)  # type: ignore[arg-type]
    out = []
    for r in range(n0):
        X = identity(n0 * d, B)
        for l in range(n0):
            if l == r:
                continue
            num = M0 - _kron_eye_diag(n0, D[l], B)
            inv = _kron_eye_diag(n0, [1 / (x - y) for x, y in zip(D[r], D[l])], B)
            X = X @ num @ inv
        out.append(BlockMatrix(n0, d, f"P0[{M.kind}]", X, B))
    return out


def shift_components(M: BlockMatrix, irrep: Irrep, r: int):
    """Shift components of the last column and row of M for subalgebra label r.

    Returns (left, right): ``left[i] = sum_j (P_0r)_ij M_jn`` and
    ``right[i] = sum_j M_nj (P_0r)_ji`` (0-based i over 1..n-1).  For
    Atilde these are phi~[r] and psi~[r]; for A they are psibar[r] and
    phibar[r]."""
    n = M.n
    n0 = n - 1
    P0 = sub_projectors(M, irrep)[r - 1]
    left, right = [], []
    for i in range(1, n):
        left.append(sum((P0.block(i, j) @ M.block(j, n) for j in range(2, n)), P0.block(i, 1) @ M.block(1, n)))
        right.append(sum((M.block(n, j) @ P0.block(j, i) for j in range(2, n)), M.block(n, 1) @ P0.block(1, i)))
    assert len(left) == n0
    return left, right


def block_power(M: BlockMatrix, m: int) -> BlockMatrix:
    """M^m by repeated block multiplication, (M^{k+1})_ij = M_ik (M^k)_kj."""
    if m < 0:
        raise ValueError("power must be nonnegative")
    X = M.identity()
    for _ in range(m):
        X = M.dense @ X
    return M.like(X)


def qtrace_invariant(M: BlockMatrix, m: int, kind: Optional[str] = None) -> np.ndarray:
    """C_m = sum_i q^{-(2 rho, eps_i)} (A^m)_ii or C~_m = sum_i q^{(2 rho, eps_i)} (A~^m)_ii."""
    kind = M.kind if kind is None else kind
    if kind != M.kind:
        raise ValueError(f"kind {kind!r} does not match matrix kind {M.kind!r}")
    if kind == "A":
        sign = -1
    elif kind == "Atilde":
        sign = +1
    else:
        raise ValueError("q-trace invariants are defined for A and Atilde")
    P = block_power(M, m)
    n = M.n
    B = M.backend
    out = zeros(M.dim, B)
    for i in range(1, n + 1):
        out = out + B.qpow(sign * (n + 1 - 2 * i)) * P.block(i, i)
    return out


def partition_check(M: BlockMatrix, irrep: Irrep) -> dict[str, float]:
    """Residuals of the block partition for Atilde or A.

    ``subalgebra`` compares the upper-left blocks with the U_q(gl(n-1))
    matrix built separately; ``nn_invariance`` checks that M_nn commutes
    with the subalgebra generators; ``transformation`` checks the
    commutation laws of the last column and row components."""
    if M.kind not in ("Atilde", "A"):
        raise ValueError("partition_check applies to Atilde and A")
    n = M.n
    if n < 2:
        raise ValueError("partition_check needs n >= 2")
    d = M.dim
    sub = build_charmat(irrep, M.kind, size=n - 1)  # type: ignore[arg-type]
    r_sub = frob(M.dense[: (n - 1) * d, : (n - 1) * d] - sub.dense)
    X = M.block(n, n)
    r_nn = 0.0
    for k in range(1, n - 1):
        r_nn = max(r_nn, frob(X @ irrep.e[k - 1] - irrep.e[k - 1] @ X), frob(X @ irrep.f[k - 1] - irrep.f[k - 1] @ X))
    for i in range(1, n + 1):
        r_nn = max(r_nn, frob(X @ irrep.k[i - 1] - irrep.k[i - 1] @ X))
    return {"subalgebra": r_sub, "nn_invariance": r_nn, "transformation": transformation_law_residual(M, irrep)}


def transformation_law_residual(M: BlockMatrix, irrep: Irrep) -> float:
    """Adjoint-action laws of the last column and row under e_k, f_k (k < n-1).

    With c = delta_ik - delta_{i,k+1} and D = q^{-h_k/2}:
      Atilde column phi_i = Atilde_in (dual vector):
        e_k phi_i - q^{-c/2} phi_i e_k = -q^-1 delta_ik phi_{k+1} D
        f_k phi_i - q^{-c/2} phi_i f_k = -q delta_{i,k+1} phi_k D
      Atilde row psi_i = Atilde_ni (vector):
        e_k psi_i - q^{c/2} psi_i e_k = delta_{i,k+1} psi_k D
        f_k psi_i - q^{c/2} psi_i f_k = delta_ik psi_{k+1} D
      A column psibar_i = A_in (dual pseudo vector):
        e_k psibar_i - q^{c/2} psibar_i e_k = q^-1 delta_{i,k+1} psibar_k D
        f_k psibar_i - q^{c/2} psibar_i f_k = q delta_ik psibar_{k+1} D
      A row phibar_i = A_ni (pseudo vector):
        e_k phibar_i - q^{-c/2} phibar_i e_k = -delta_ik phibar_{k+1} D
        f_k phibar_i - q^{-c/2} phibar_i f_k = -delta_{i,k+1} phibar_k D
    """
    n = M.n
    B = M.backend
    Z = zeros(M.dim, B)
    worst = 0.0
    for k in range(1, n - 1):
        e, f = irrep.e[k - 1], irrep.f[k - 1]
        D = irrep.qdiag(-irrep.h(k))
        for i in range(1, n):
            c = (i == k) - (i == k + 1)
            col = M.block(i, n)
            row = M.block(n, i)
            qm = B.qpow(HalfInt.from_twice(-c))
            qp = B.qpow(HalfInt.from_twice(c))
            if M.kind == "Atilde":
                checks = [
                    (e @ col - qm * (col @ e), -B.qpow(-1) * (M.block(k + 1, n) @ D) if i == k else Z),
                    (f @ col - qm * (col @ f), -B.qpow(1) * (M.block(k, n) @ D) if i == k + 1 else Z),
                    (e @ row - qp * (row @ e), M.block(n, k) @ D if i == k + 1 else Z),
                    (f @ row - qp * (row @ f), M.block(n, k + 1) @ D if i == k else Z),
                ]
            else:
                checks = [
                    (e @ col - qp * (col @ e), B.qpow(-1) * (M.block(k, n) @ D) if i == k + 1 else Z),
                    (f @ col - qp * (col @ f), B.qpow(1) * (M.block(k + 1, n) @ D) if i == k else Z),
                    (e @ row - qm * (row @ e), -(M.block(n, k + 1) @ D) if i == k else Z),
                    (f @ row - qm * (row @ f), -(M.block(n, k) @ D) if i == k + 1 else Z),
                ]
            for lhs, rhs in checks:
                worst = max(worst, frob(lhs - rhs))
    return worst
