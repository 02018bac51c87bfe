"""Named verification suites.

Each suite builds what it needs from (hw, q), evaluates one family of
identities and returns a :class:`SuiteReport`.  Matrix suites run in
float64 at the numeric q; exact suites compare canonical Q(s) values.
"""

from __future__ import annotations

import itertools
import random
import time
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .. import invariants as inv
from ..characteristic import (
    KINDS,
    build_charmat,
    char_identity_residual,
    frob,
    partition_check,
    projectors,
    qtrace_invariant,
    shift_components,
    sub_projectors,
    subalgebra_root_diagonals,
)
from ..patterns import HighestWeight, enumerate_patterns, lower, raise_, subalgebra_weights
from ..representations import (
    Irrep,
    antipode_E,
    antipode_hatE,
    build_irrep,
    composite_E,
    composite_E_pivot,
    composite_Eprime,
    hatE,
    matrix_element_e_squared,
    matrix_element_f_squared,
    mutilde_omegatilde,
    rho_qtrace,
    tildeE,
)
from ..scalars import NotASquareError, QRat, eval_at, limit_q1, qnumber, qpow, _root_exact
from . import classical
from .report import SuiteReport

__all__ = ["SUITES", "ALIASES", "suite_names", "run_suite", "default_grid", "battery", "resolve"]

DEFAULT_Q = 1.5


def _w(hw) -> str:
    return ",".join(str(x) for x in hw)


def _rel(lhs, rhs) -> float:
    return frob(lhs - rhs) / max(1.0, frob(rhs))


def _units(n: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((n, n))
    m[i - 1, j - 1] = 1.0
    return m


def _vector_hw(n: int) -> tuple[int, ...]:
    return (1,) + (0,) * (n - 1)


def _diag_vals(values: Sequence[QRat], q: float) -> np.ndarray:
    return np.diag([eval_at(v, q) for v in values])


# ---------------------------------------------------------------------------
# defining relations
# ---------------------------------------------------------------------------


def suite_relations(hw, q: float = DEFAULT_Q, **_) -> SuiteReport:
    R = build_irrep(hw, q)
    rep = SuiteReport("relations", {"hw": list(R.hw.entries), "q": q})
    n, d = R.n, R.dimension
    tol = 1e-10 * d
    K, Ki = R.k, [R.kinv(i) for i in range(1, n + 1)]
    qbar = q - 1 / q
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rep.check(f"K_{i} K_{j} = K_{j} K_{i}", frob(K[i - 1] @ K[j - 1] - K[j - 1] @ K[i - 1]), tol)
    for i in range(1, n + 1):
        for j in range(1, n):
            c = (i == j) - (i == j + 1)
            rep.check(f"K_{i} e_{j} K_{i}^-1 = q^{c} e_{j}", frob(K[i - 1] @ R.e[j - 1] @ Ki[i - 1] - q**c * R.e[j - 1]), tol)
            rep.check(f"K_{i} f_{j} K_{i}^-1 = q^{-c} f_{j}", frob(K[i - 1] @ R.f[j - 1] @ Ki[i - 1] - q**-c * R.f[j - 1]), tol)
    for i in range(1, n):
        for j in range(1, n):
            lhs = R.e[i - 1] @ R.f[j - 1] - R.f[j - 1] @ R.e[i - 1]
            if i == j:
                Km = K[i - 1] @ Ki[i]
                Kmi = Ki[i - 1] @ K[i]
                rhs = (Km - Kmi) / qbar
            else:
                rhs = np.zeros_like(lhs)
            rep.check(f"[e_{i}, f_{j}] = delta (K - K^-1)/(q - q^-1)", frob(lhs - rhs), tol)
    for i in range(1, n):
        for j in range(i + 1, n):
            ei, ej, fi, fj = R.e[i - 1], R.e[j - 1], R.f[i - 1], R.f[j - 1]
            if j - i >= 2:
                rep.check(f"[e_{i}, e_{j}] = 0", frob(ei @ ej - ej @ ei), tol)
                rep.check(f"[f_{i}, f_{j}] = 0", frob(fi @ fj - fj @ fi), tol)
            else:
                qq = q + 1 / q
                for a, b, nm in ((ei, ej, "e"), (ej, ei, "e"), (fi, fj, "f"), (fj, fi, "f")):
                    s = a @ a @ b - qq * a @ b @ a + b @ a @ a
                    rep.check(f"q-Serre {nm}: x^2 y - [2] x y x + y x^2 = 0 ({nm}_{i},{nm}_{j})", frob(s), tol)
    W = R.weights
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            E = composite_E(i, j, R)
            shift = np.zeros(n, dtype=int)
            shift[i - 1] += 1
            shift[j - 1] -= 1
            bad = 0.0
            for a, b in zip(*np.nonzero(np.abs(E) > 0)):
                if not np.array_equal(W[a] - W[b], shift):
                    bad += abs(E[a, b])
            rep.check(f"E_{i}{j} shifts weights by eps_{i} - eps_{j}", bad, tol)
            for k in range(min(i, j) + 1, max(i, j)):
                rep.check(
                    f"E_{i}{j} independent of pivot k={k}",
                    frob(composite_E_pivot(i, j, k, R) - E),
                    tol,
                )
    return rep


# ---------------------------------------------------------------------------
# characteristic identities and projectors
# ---------------------------------------------------------------------------


def _kinds(which: Optional[str], allowed: Sequence[str] = KINDS) -> list[str]:
    if which is None or which == "all":
        return list(allowed)
    if which not in allowed:
        raise ValueError(f"which must be one of {', '.join(allowed)}")
    return [which]


def suite_char_identity(hw, q: float = DEFAULT_Q, which: Optional[str] = None, **_) -> SuiteReport:
    R = build_irrep(hw, q)
    rep = SuiteReport("char_identity", {"hw": list(R.hw.entries), "q": q, "which": which or "all"})
    n, d = R.n, R.dimension
    for kind in _kinds(which):
        M = build_charmat(R, kind)
        rep.check(f"prod_r ({kind} - root_r) = 0", char_identity_residual(M), 1e-8 * n * d)
        ev = np.linalg.eigvals(M.dense)
        roots = np.array(M.roots, dtype=float)
        dist = max((np.min(np.abs(roots - e)) / max(1.0, abs(e)) for e in ev), default=0.0)
        rep.check(f"dense eigenvalues of {kind} lie in the root set", float(dist), 1e-6)
    if d <= 4:
        try:
            Rx = build_irrep(hw, "exact")
        except NotASquareError:
            Rx = None
        if Rx is not None:
            for kind in _kinds(which):
                M = build_charmat(Rx, kind)
                rep.exact(f"prod_r ({kind} - root_r) = 0 in Q(q^1/2)", char_identity_residual(M) == 0.0)
    return rep


def _shifted(hw: Sequence[int], r: int, d: int) -> list[int]:
    out = list(hw)
    out[r - 1] += d
    return out


def suite_projectors(hw, q: float = DEFAULT_Q, which: Optional[str] = None, **_) -> SuiteReport:
    R = build_irrep(hw, q)
    L = R.hw.entries
    rep = SuiteReport("projectors", {"hw": list(L), "q": q, "which": which or "all"})
    n, d = R.n, R.dimension
    tol = 1e-9 * n * d
    t_state = np.array([q ** sum((n + 1 - 2 * i) * w[i - 1] for i in range(1, n + 1)) for w in R.weights])
    t0 = np.array([q ** (n + 1 - 2 * i) for i in range(1, n + 1)])
    for kind in _kinds(which):
        M = build_charmat(R, kind)
        fam = projectors(M)
        for name, val in fam.residuals().items():
            rep.check(f"{kind} projectors: {name}", val, tol)
        sign = -1 if kind == "A" else +1
        dims = classical.pieri_dims(L, sign)
        for r in range(1, n + 1):
            rep.exact(f"rank P_{r}[{kind}] = dim V({_w(_shifted(L, r, sign))}) = {dims[r - 1]}", fam.rank(r) == dims[r - 1])
        if kind in ("Atilde", "A"):
            T = np.kron(np.diag(t0 ** sign), np.diag(t_state))
            for r in range(1, n + 1):
                target = eval_at(inv.qdimension_formal(_shifted(L, r, sign)), q)
                got = float(np.trace(T @ fam[r].dense))
                rep.check(
                    f"q-trace of P_{r}[{kind}] = D_q[{_w(_shifted(L, r, sign))}]",
                    abs(got - target) / max(1.0, abs(target)),
                    1e-9,
                )
    return rep


def suite_partition(hw, q: float = DEFAULT_Q, which: Optional[str] = None, **_) -> SuiteReport:
    R = build_irrep(hw, q)
    rep = SuiteReport("partition", {"hw": list(R.hw.entries), "q": q, "which": which or "all"})
    n, d = R.n, R.dimension
    if n < 2:
        return rep
    tol = 1e-9 * n * d
    for kind in _kinds(which, ("Atilde", "A")):
        M = build_charmat(R, kind)
        res = partition_check(M, R)
        rep.check(f"{kind}: upper-left blocks equal the gl(n-1) matrix", res["subalgebra"], tol)
        rep.check(f"{kind}_nn commutes with the gl(n-1) generators", res["nn_invariance"], tol)
        rep.check(f"{kind}: last row and column obey the tensor-operator laws", res["transformation"], tol)
    Ab = build_charmat(R, "Abar")
    X = Ab.block(n, n)
    worst = 0.0
    for k in range(1, n - 1):
        worst = max(worst, frob(X @ R.e[k - 1] - R.e[k - 1] @ X), frob(X @ R.f[k - 1] - R.f[k - 1] @ X))
    rep.check("Abar_nn commutes with the gl(n-1) generators (empirical)", worst, tol)
    return rep


# ---------------------------------------------------------------------------
# closed forms against matrices
# ---------------------------------------------------------------------------


def _rows0(R: Irrep) -> list[tuple[int, ...]]:
    return [p.row(R.n - 1) for p in R.basis]


def suite_invariant_crosscheck(hw, q: float = DEFAULT_Q, **_) -> SuiteReport:
    R = build_irrep(hw, q)
    L = R.hw.entries
    rep = SuiteReport("invariant_crosscheck", {"hw": list(L), "q": q})
    n, d = R.n, R.dimension
    if n < 2:
        return rep
    tol = 1e-8
    rows0 = _rows0(R)
    n0 = n - 1
    I0 = np.eye(n0)
    specs = (
        ("Atilde", inv.omegatilde_k, inv.omegatilde_kr, inv.mutilde_r, inv.gammatilde_r),
        ("A", inv.omega_k, inv.omega_kr, inv.mu_r, inv.gamma_r),
    )
    for kind, om, omkr, mu, gam in specs:
        M = build_charmat(R, kind)
        fam = projectors(M)
        tag = "~" if kind == "Atilde" else ""
        for k in range(1, n + 1):
            X = fam[k].block(n, n)
            rhs = _diag_vals([om(L, r0, k) for r0 in rows0], q)
            rep.check(f"omega{tag}_{k} equals (P_{k}[{kind}])_nn", _rel(X, rhs), tol)
        P0 = sub_projectors(M, R)
        for r in range(1, n):
            P0r = P0[r - 1].dense
            for k in range(1, n + 1):
                S = P0r @ fam[k].dense[: n0 * d, : n0 * d] @ P0r
                vals = _diag_vals([omkr(L, r0, k, r) for r0 in rows0], q)
                rep.check(f"omega{tag}_{k}{r} equals P_0{r} P_{k} P_0{r} [{kind}]", _rel(S, P0r @ np.kron(I0, vals)), tol)
            left, right = shift_components(M, R, r)
            mvals = _diag_vals([mu(L, r0, r) for r0 in rows0], q)
            gvals = _diag_vals([gam(L, r0, r) for r0 in rows0], q)
            worst = 0.0
            for i in range(n0):
                for j in range(n0):
                    lhs = left[i] @ right[j]
                    worst = max(worst, _rel(lhs, P0[r - 1].block(i + 1, j + 1) @ mvals))
            label = "phi~_i psi~_j = mu~ (P~_0r)_ij" if kind == "Atilde" else "psibar_i phibar_j = mu (P_0r)_ij"
            rep.check(f"{label}, r={r}", worst, tol)
            g = sum((right[i] @ left[i] for i in range(n0)), np.zeros((d, d)))
            label = "sum_i psi~_i phi~_i = gamma~" if kind == "Atilde" else "sum_i phibar_i psibar_i = gamma"
            rep.check(f"{label}, r={r}", _rel(g, gvals), tol)
    return rep


def suite_shift_roots(hw, q: float = DEFAULT_Q, **_) -> SuiteReport:
    R = build_irrep(hw, q)
    L = R.hw.entries
    rep = SuiteReport("shift_roots", {"hw": list(L), "q": q})
    n, d = R.n, R.dimension
    if n < 2:
        return rep
    tol = 1e-9 * n * d
    for kind in ("Atilde", "A"):
        M = build_charmat(R, kind)
        D = subalgebra_root_diagonals(R, kind)
        for r in range(1, n):
            Dr = np.diag(np.asarray(D[r - 1], dtype=float))
            Sr = q * q * Dr - q * np.eye(d)
            left, right = shift_components(M, R, r)
            raising, lowering = (right, left) if kind == "Atilde" else (left, right)
            rn, ln = ("psi~", "phi~") if kind == "Atilde" else ("psibar", "phibar")
            worst_r = max(frob(x @ Dr - Sr @ x) for x in raising)
            worst_l = max(frob(x @ Sr - Dr @ x) for x in lowering)
            rep.check(f"{rn}[{r}] a_0{r} = (q^2 a_0{r} - q) {rn}[{r}]", worst_r, tol)
            rep.check(f"{ln}[{r}] (q^2 a_0{r} - q) = a_0{r} {ln}[{r}]", worst_l, tol)
        if n >= 2:
            parts = [shift_components(M, R, s) for s in range(1, n)]
            for i in range(1, n):
                col = sum((parts[s][0][i - 1] for s in range(n - 1)), np.zeros((d, d)))
                row = sum((parts[s][1][i - 1] for s in range(n - 1)), np.zeros((d, d)))
                rep.check(f"{kind}: shift components of column entry {i} sum to {kind}_{i}{n}", frob(col - M.block(i, n)), tol)
                rep.check(f"{kind}: shift components of row entry {i} sum to {kind}_{n}{i}", frob(row - M.block(n, i)), tol)
    return rep


# ---------------------------------------------------------------------------
# antipode, adjointness
# ---------------------------------------------------------------------------


def suite_antipode(hw, q: float = DEFAULT_Q, **_) -> SuiteReport:
    R = build_irrep(hw, q)
    rep = SuiteReport("antipode", {"hw": list(R.hw.entries), "q": q})
    n, d = R.n, R.dimension
    tol = 1e-10 * d
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            two_rho = (n + 1 - 2 * i) - (n + 1 - 2 * j)
            if i != j:
                c = -q if i < j else -(q ** (two_rho + 1))
                rep.check(
                    f"S^-1(E_{i}{j}) = {'-q' if i < j else '-q^((2rho, eps_i - eps_j) + 1)'} E'_{i}{j}",
                    frob(antipode_E(i, j, R, -1) - c * composite_Eprime(i, j, R)),
                    tol,
                )
            f = 1.0 if i <= j else q**two_rho
            rep.check(
                f"S^-1(E^_{i}{j}) = {'' if i <= j else 'q^(2rho, eps_i - eps_j) '}E~_{i}{j}",
                frob(antipode_hatE(i, j, R, -1) - f * tildeE(i, j, R)),
                tol,
            )
    return rep


def suite_adjointness(hw, q: float = DEFAULT_Q, **_) -> SuiteReport:
    R = build_irrep(hw, q)
    rep = SuiteReport("adjointness", {"hw": list(R.hw.entries), "q": q})
    n, d = R.n, R.dimension
    tol = 1e-10 * d
    for m in range(1, n):
        rep.check(f"e_{m}^T = f_{m}", frob(R.e[m - 1].T - R.f[m - 1]), tol)
    for kind in ("Atilde", "A"):
        M = build_charmat(R, kind)
        worst = 0.0
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                worst = max(worst, frob(M.block(i, j).T - M.block(j, i)))
        rep.check(f"({kind}_ij)^T = {kind}_ji", worst, tol)
    return rep


# ---------------------------------------------------------------------------
# exact suites
# ---------------------------------------------------------------------------


def suite_root_identities(seed: int = 0, count: int = 100, **_) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("root_identities", {"seed": seed, "count": count})
    a = _root_exact
    q1, q2, qi, qi2 = qpow(1), qpow(2), qpow(-1), qpow(-2)
    ok = [True] * 7
    for _ in range(count):
        n = rng.randint(2, 5)
        x, y = rng.randint(-6, 6), rng.randint(-6, 6)
        ok[0] &= a(x) - q2 * a(y) + q1 == qpow(2 * (n - 1)) * (a(x + n - 1) - a(y + n - 2))
        ok[1] &= qnumber(x - y) == qpow(x + y) * (a(x) - a(y))
        ok[2] &= a(x) - qi2 * a(y) - qi == qpow(-(x + y + 1)) * qnumber(x - y - 1)
        m = rng.randint(2, 4)
        L = sorted((rng.randint(0, 4) for _ in range(m)), reverse=True)
        r = rng.randint(1, m)
        D = inv.qdimension_formal(L)
        ab = [L[k] - k for k in range(m)]
        al = [L[k] + m - 1 - k for k in range(m)]
        others = [l for l in range(m) if l != r - 1]

        def plus(roots):
            t = qpow(-(m - 1))
            for l in others:
                t = t * (a(roots[r - 1]) - q2 * a(roots[l]) + q1) / (a(roots[r - 1]) - a(roots[l]))
            return t

        def minus(roots):
            t = qpow(m - 1)
            for l in others:
                t = t * (a(roots[r - 1]) - qi2 * a(roots[l]) - qi) / (a(roots[r - 1]) - a(roots[l]))
            return t

        Dp = inv.qdimension_formal(_shifted(L, r, +1))
        Dm = inv.qdimension_formal(_shifted(L, r, -1))
        ok[3] &= Dp == D * plus(ab)
        ok[4] &= Dp == D * plus(al)
        ok[5] &= Dm == D * minus(al)
        ok[6] &= Dm == D * minus(ab)
    names = [
        "atilde_k - q^2 atilde_0r + q = q^(2(n-1)) (a_k - a_0r)",
        "[alpha_r - alpha_l] = q^(alpha_r + alpha_l) (a_r - a_l)",
        "a_k - q^-2 a_0r - q^-1 = q^-(alpha_k + alpha_0r + 1) [alpha_k - alpha_0r - 1]",
        "D_q[Lambda + eps_r] / D_q[Lambda] as a product in atilde",
        "D_q[Lambda + eps_r] / D_q[Lambda] as a product in a",
        "D_q[Lambda - eps_r] / D_q[Lambda] as a product in a",
        "D_q[Lambda - eps_r] / D_q[Lambda] as a product in atilde",
    ]
    for nm, good in zip(names, ok):
        rep.exact(f"{nm} ({count} random cases)", good)
    return rep


def suite_classical_limit(hw, **_) -> SuiteReport:
    L = HighestWeight.of(hw).entries
    rep = SuiteReport("classical_limit", {"hw": list(L)})
    n = len(L)
    pats = enumerate_patterns(L)
    bad_e = bad_f = 0
    for p in pats:
        for m in range(1, n):
            for r in range(1, m + 1):
                bad_e += limit_q1(matrix_element_e_squared(p, r, m)) != classical.e_squared(p.rows, r, m)
                bad_f += limit_q1(matrix_element_f_squared(p, r, m)) != classical.f_squared(p.rows, r, m)
    rep.exact(f"N^2 at q = 1 equals the classical GT coefficient ({len(pats)} patterns)", bad_e == 0)
    rep.exact(f"Nbar^2 at q = 1 equals the classical GT coefficient ({len(pats)} patterns)", bad_f == 0)
    rep.exact("D_q[Lambda] at q = 1 equals the Weyl dimension", limit_q1(inv.qdimension(L)) == classical.weyl_dim(L))
    rep.exact("number of GT patterns equals the Weyl dimension", len(pats) == classical.gt_count(L) == classical.weyl_dim(L))
    if n < 2:
        return rep
    fams_k = (
        ("omega_k", inv.omega_k, classical.omega),
        ("omegatilde_k", inv.omegatilde_k, classical.omegatilde),
    )
    fams_r = (
        ("mu_r", inv.mu_r, classical.mu),
        ("mutilde_r", inv.mutilde_r, classical.mutilde),
        ("gamma_r", inv.gamma_r, classical.gamma),
        ("gammatilde_r", inv.gammatilde_r, classical.gammatilde),
    )
    fams_kr = (
        ("omega_kr", inv.omega_kr, classical.omega_kr),
        ("omegatilde_kr", inv.omegatilde_kr, classical.omegatilde_kr),
    )
    subs = subalgebra_weights(L)
    for nm, f, g in fams_k:
        good = all(limit_q1(f(L, L0, k)) == g(L, L0, k) for L0 in subs for k in range(1, n + 1))
        rep.exact(f"{nm} at q = 1 equals the classical value", good)
    for nm, f, g in fams_r:
        good = all(limit_q1(f(L, L0, r)) == g(L, L0, r) for L0 in subs for r in range(1, n))
        rep.exact(f"{nm} at q = 1 equals the classical value", good)
    for nm, f, g in fams_kr:
        good = all(
            limit_q1(f(L, L0, k, r)) == g(L, L0, k, r) for L0 in subs for k in range(1, n + 1) for r in range(1, n)
        )
        rep.exact(f"{nm} at q = 1 equals the classical value", good)
    return rep


# ---------------------------------------------------------------------------
# L-operators
# ---------------------------------------------------------------------------


def l_operator(R: Irrep) -> np.ndarray:
    """(pi_0 (x) pi_Lambda) of sum_{i <= j} e_ji (x) E^_ij on V_0 (x) V(Lambda)."""
    n = R.n
    return sum(np.kron(_units(n, j, i), hatE(i, j, R)) for i in range(1, n + 1) for j in range(i, n + 1))


def _embed(Rm: np.ndarray, n: int, a: int, b: int) -> np.ndarray:
    """Place an operator on V_0 (x) V_0 into factors (a, b) of V_0^(x)3."""
    R4 = Rm.reshape(n, n, n, n)
    I = np.eye(n)
    letters = "xyz"
    c = ({0, 1, 2} - {a, b}).pop()
    out_idx = "".join(letters[k] for k in range(3))
    in_idx = "".join(letters[k].upper() for k in range(3))
    spec = f"{letters[a]}{letters[b]}{letters[a].upper()}{letters[b].upper()},{letters[c]}{letters[c].upper()}->{out_idx}{in_idx}"
    return np.einsum(spec, R4, I).reshape(n**3, n**3)


def suite_L_operators(hw, q: float = DEFAULT_Q, **_) -> SuiteReport:
    R = build_irrep(hw, q)
    rep = SuiteReport("L_operators", {"hw": list(R.hw.entries), "q": q})
    n, d = R.n, R.dimension
    V0 = build_irrep(_vector_hw(n), q)
    Lop = l_operator(R)
    tol = 1e-10 * n * d
    for m in range(1, n):
        h0, h = V0.h(m), R.h(m)
        for nm, x0, x in (("e", V0.e[m - 1], R.e[m - 1]), ("f", V0.f[m - 1], R.f[m - 1])):
            D = np.kron(V0.qdiag(h0), x) + np.kron(x0, R.qdiag(-h))
            DT = np.kron(x0, R.qdiag(h)) + np.kron(V0.qdiag(-h0), x)
            rep.check(f"R Delta({nm}_{m}) = Delta^T({nm}_{m}) R", frob(Lop @ D - DT @ Lop), tol)
    for i in range(1, n + 1):
        Kd = np.kron(V0.k[i - 1], R.k[i - 1])
        rep.check(f"R commutes with Delta(q^E_{i}{i})", frob(Lop @ Kd - Kd @ Lop), tol)
    Rv = l_operator(V0)
    R12, R13, R23 = _embed(Rv, n, 0, 1), _embed(Rv, n, 0, 2), _embed(Rv, n, 1, 2)
    rep.check("R12 R13 R23 = R23 R13 R12 on V_0^(x)3", frob(R12 @ R13 @ R23 - R23 @ R13 @ R12), 1e-10 * n**3)
    return rep


# ---------------------------------------------------------------------------
# generators against characteristic matrices
# ---------------------------------------------------------------------------


def suite_generator_vs_charmat(hw, q: float = DEFAULT_Q, **_) -> SuiteReport:
    R = build_irrep(hw, q)
    rep = SuiteReport("generator_vs_charmat", {"hw": list(R.hw.entries), "q": q})
    n, d = R.n, R.dimension
    tol = 1e-9 * n * d
    At = build_charmat(R, "Atilde")
    A = build_charmat(R, "A")
    for m in range(1, n):
        C = sum((q ** (m + 1 - 2 * i) * At.block(i, i) for i in range(1, m + 1)), np.zeros((d, d)))
        Dm = R.qdiag(-R.h(m))
        e, f = R.e[m - 1], R.f[m - 1]
        rep.check(
            f"[C~_1,{m}, e_{m}] = q^-(m+1/2) Atilde_{m + 1}{m} q^(-h_{m}/2)",
            frob(C @ e - e @ C - q ** -(m + 0.5) * At.block(m + 1, m) @ Dm),
            tol,
        )
        rep.check(
            f"[C~_1,{m}, f_{m}] = -q^-(m-1/2) Atilde_{m}{m + 1} q^(-h_{m}/2)",
            frob(C @ f - f @ C + q ** -(m - 0.5) * At.block(m, m + 1) @ Dm),
            tol,
        )
    families = (
        ("Mt", lambda m: At.block(m + 1, m), +1),
        ("Mtp", lambda m: At.block(m, m + 1), -1),
        ("Mbar", lambda m: A.block(m + 1, m), -1),
        ("Mp", lambda m: A.block(m, m + 1), +1),
        ("N", lambda m: R.e[m - 1], +1),
        ("Nbar", lambda m: R.f[m - 1], -1),
    )
    idx = R.index
    for which, mat, direction in families:
        worst = 0.0
        for p in R.basis:
            for m in range(1, n):
                for r in range(1, m + 1):
                    t = raise_(p, r, m) if direction > 0 else lower(p, r, m)
                    if t is None:
                        continue
                    val = mat(m)[idx[t], idx[p]]
                    sq = eval_at(inv.closed_form_square(p, r, m, which), q)
                    worst = max(worst, abs(val * val - sq) / max(1.0, abs(sq)))
        rep.check(f"{which}: squared matrix elements equal (-1)^m q^2x times the bracket product", worst, 1e-9)
    worst = 0.0
    for p in R.basis:
        for m in range(1, n):
            for r in range(1, m + 1):
                t = raise_(p, r, m)
                if t is None:
                    continue
                val = At.block(m + 1, m)[idx[t], idx[p]]
                sq = eval_at(mutilde_omegatilde(p, r, m), q)
                worst = max(worst, abs(val * val - sq) / max(1.0, abs(sq)))
    rep.check("Atilde_{m+1,m} squared entries equal mu~ omega~", worst, 1e-9)
    return rep


# ---------------------------------------------------------------------------
# Casimirs and q-dimensions
# ---------------------------------------------------------------------------


def suite_casimir(hw, q: float = DEFAULT_Q, powers: Iterable[int] = (1, 2, 3), **_) -> SuiteReport:
    L = HighestWeight.of(hw).entries
    R = build_irrep(L, q)
    rep = SuiteReport("casimir", {"hw": list(L), "q": q})
    n, d = R.n, R.dimension
    c1, ct1 = inv.chi_Cm(L, 1), inv.chi_Ctilde_m(L, 1)
    rep.exact("chi(C_1) = chi(C~_1) in Q(q^1/2)", c1 == ct1)
    rep.exact("chi(C_1) = sum_i q^-(Lambda + 2rho, eps_i) [(Lambda, eps_i)]", c1 == inv.chi_C1(L))
    rep.exact("trace of q^(2 h_rho) on V(Lambda) = D_q[Lambda]", rho_qtrace(L) == inv.qdimension(L))
    A = build_charmat(R, "A")
    At = build_charmat(R, "Atilde")
    for m in powers:
        for nm, M, chi in (("C", A, inv.chi_Cm(L, m)), ("C~", At, inv.chi_Ctilde_m(L, m))):
            X = qtrace_invariant(M, m)
            target = eval_at(chi, q)
            rep.check(f"{nm}_{m} = sum_r root_r^{m} D_q ratio", _rel(X, target * np.eye(d)), 1e-8)
            worst = 0.0
            for k in range(1, n):
                worst = max(worst, frob(X @ R.e[k - 1] - R.e[k - 1] @ X), frob(X @ R.f[k - 1] - R.f[k - 1] @ X))
            rep.check(f"{nm}_{m} commutes with all generators", worst, 1e-9 * max(1.0, abs(target)) * d)
    return rep


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

SUITES: dict[str, Callable[..., SuiteReport]] = {
    "relations": suite_relations,
    "char_identity": suite_char_identity,
    "projectors": suite_projectors,
    "partition": suite_partition,
    "invariant_crosscheck": suite_invariant_crosscheck,
    "shift_roots": suite_shift_roots,
    "antipode": suite_antipode,
    "root_identities": suite_root_identities,
    "adjointness": suite_adjointness,
    "classical_limit": suite_classical_limit,
    "L_operators": suite_L_operators,
    "generator_vs_charmat": suite_generator_vs_charmat,
    "casimir": suite_casimir,
}

ALIASES = {"appendixC": "antipode", "appendixD": "root_identities", "appendixE": "adjointness"}

NEEDS_HW = {name for name in SUITES if name != "root_identities"}


def suite_names() -> list[str]:
    return list(SUITES)


def resolve(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + list(ALIASES))}")
    return name


def run_suite(
    name: str,
    hw: Optional[Sequence[int]] = None,
    q: float = DEFAULT_Q,
    which: Optional[str] = None,
    seed: int = 0,
    count: int = 100,
) -> SuiteReport:
    """Run one named suite (aliases accepted) and time it."""
    name = resolve(name)
    if name in NEEDS_HW and hw is None:
        raise ValueError(f"suite {name!r} needs a highest weight")
    t0 = time.perf_counter()
    rep = SUITES[name](hw=hw, q=q, which=which, seed=seed, count=count)
    rep.seconds = time.perf_counter() - t0
    return rep


def default_grid(ns: Iterable[int] = (2, 3, 4), max_entry: int = 2) -> list[tuple[int, ...]]:
    """Every dominant weight with entries in 0..max_entry for each n."""
    out = []
    for n in ns:
        for w in itertools.product(range(max_entry, -1, -1), repeat=n):
            if all(w[i] >= w[i + 1] for i in range(n - 1)):
                out.append(w)
    return out


def battery(
    grid: Optional[Sequence[Sequence[int]]] = None,
    q: float = DEFAULT_Q,
    seed: int = 0,
    suites: Optional[Sequence[str]] = None,
    classical_max_n: int = 3,
) -> list[SuiteReport]:
    """Every suite over the grid; the classical limit runs for n <= classical_max_n."""
    grid = default_grid() if grid is None else [tuple(w) for w in grid]
    names = [resolve(s) for s in suites] if suites else suite_names()
    reports = []
    for name in names:
        if name not in NEEDS_HW:
            reports.append(run_suite(name, q=q, seed=seed))
            continue
        for hw in grid:
            if name == "classical_limit" and len(hw) > classical_max_n:
                continue
            reports.append(run_suite(name, hw=hw, q=q, seed=seed))
    return reports
