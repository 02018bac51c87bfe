"""Generator matrices of U_q(gl(n)) on V(Lambda) in the Gelfand-Tsetlin basis.

Matrix elements come from the invariant products mu~ omega~ (for e_m) and
mu omega (for f_m), which are sign-correct on every valid shift.  The
matrices live over a scalar :class:`~qgln.scalars.Backend`: float64 at a
numeric q, or exact Q(s) when every matrix element happens to be a square
in Q(s) (the trivial, vector and one-dimensional modules, for instance).
"""

from __future__ import annotations

import os
from functools import reduce
from typing import Optional, Sequence, Union

import numpy as np

from .patterns import (
    GTPattern,
    HighestWeight,
    enumerate_patterns,
    lower,
    raise_,
    weight_of,
    weyl_dimension,
)
from .scalars import Backend, ExactBackend, HalfInt, QRat, make_backend, qpow

__all__ = [
    "DEFAULT_DIM_CAP",
    "DimensionCapError",
    "dimension_cap",
    "Irrep",
    "build_irrep",
    "matrix_element_e",
    "matrix_element_f",
    "matrix_element_e_squared",
    "matrix_element_f_squared",
    "mutilde_omegatilde",
    "mu_omega",
    "composite_E",
    "composite_Eprime",
    "hatE",
    "tildeE",
    "antipode_E",
    "antipode_hatE",
    "rho_qtrace",
    "matrix_to_json",
]

DEFAULT_DIM_CAP = 2000


class DimensionCapError(ValueError):
    """The module dimension exceeds the configured cap."""


def dimension_cap() -> int:
    """The dimension cap, overridable through the QGLN_DIM_CAP environment variable."""
    raw = os.environ.get("QGLN_DIM_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_DIM_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"QGLN_DIM_CAP must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError("QGLN_DIM_CAP must be positive")
    return cap


def check_dimension(hw: Sequence[int], cap: Optional[int] = None) -> int:
    dim = weyl_dimension(hw)
    cap = dimension_cap() if cap is None else cap
    if dim > cap:
        raise DimensionCapError(f"dim V({','.join(map(str, hw))}) = {dim} exceeds the cap {cap}")
    return dim


# ---------------------------------------------------------------------------
# matrix elements
# ---------------------------------------------------------------------------

_EXACT = ExactBackend()


def _prod(xs, one):
    return reduce(lambda a, b: a * b, xs, one)


def mutilde_omegatilde(p: GTPattern, r: int, m: int, backend: Backend = _EXACT):
    """The invariant product mu~_{r,m} omega~_{r,m} on the rows of p."""
    B = backend
    q = B.qpow(1)
    q2 = B.qpow(2)
    ab = lambda k, mm: p.entry(k, mm) + 1 - k
    at = lambda k, mm: B.root(ab(k, mm))
    ar = at(r, m)
    num = _prod((at(k, m + 1) - ar for k in range(1, m + 2)), B.one())
    num = num * _prod((ar - q2 * at(l, m - 1) + q for l in range(1, m)), B.one())
    den = _prod(
        ((ar - q2 * at(l, m) + q) * (ar - at(l, m)) for l in range(1, m + 1) if l != r), B.one()
    )
    sign = -1 if m % 2 else 1
    return sign * num / den


def mu_omega(p: GTPattern, r: int, m: int, backend: Backend = _EXACT):
    """The invariant product mu_{r,m} omega_{r,m} on the rows of p."""
    B = backend
    qi = B.qpow(-1)
    qi2 = B.qpow(-2)
    al = lambda k, mm: p.entry(k, mm) + mm - k
    a = lambda k, mm: B.root(al(k, mm))
    ar = a(r, m)
    num = _prod((a(k, m + 1) - ar for k in range(1, m + 2)), B.one())
    num = num * _prod((ar - qi2 * a(l, m - 1) - qi for l in range(1, m)), B.one())
    den = _prod(
        ((ar - qi2 * a(l, m) - qi) * (ar - a(l, m)) for l in range(1, m + 1) if l != r), B.one()
    )
    sign = -1 if m % 2 else 1
    return sign * num / den


def _h_m(p: GTPattern, m: int) -> int:
    nu = weight_of(p)
    return nu[m - 1] - nu[m]


def matrix_element_e_squared(p: GTPattern, r: int, m: int, backend: Backend = _EXACT):
    """N_{r,m}^2 = |<p + eps_{r,m}| e_m |p>|^2, zero for an invalid raise."""
    if raise_(p, r, m) is None:
        return backend.zero()
    # N = q^(2 alphabar - (nu + rho, eps_m - eps_{m+1})/2) M~ with M~^2 = mu~ omega~
    exponent = 4 * (p.entry(r, m) + 1 - r) - _h_m(p, m) - 1
    return backend.qpow(exponent) * mutilde_omegatilde(p, r, m, backend)


def matrix_element_f_squared(p: GTPattern, r: int, m: int, backend: Backend = _EXACT):
    """Nbar_{r,m}^2 = |<p - eps_{r,m}| f_m |p>|^2, zero for an invalid lower."""
    if lower(p, r, m) is None:
        return backend.zero()
    exponent = 4 * (p.entry(r, m) + m - r) - _h_m(p, m) + 1
    return backend.qpow(exponent) * mu_omega(p, r, m, backend)


def _checked_sqrt(sq, backend: Backend, what: str):
    if backend.exact:
        return backend.sqrt(sq)
    v = float(sq)
    if v < -1e-12 * max(1.0, abs(v)):
        raise ArithmeticError(f"negative squared matrix element for {what}: {v}")
    return float(np.sqrt(max(v, 0.0)))


def matrix_element_e(p: GTPattern, r: int, m: int, q: Union[float, str, Backend, None] = 1.5):
    """N_{r,m}, the positive matrix element of e_m from p to p + eps_{r,m}."""
    backend = make_backend(q)
    sq = matrix_element_e_squared(p, r, m, backend)
    return _checked_sqrt(sq, backend, f"e_{m} on {p}")


def matrix_element_f(p: GTPattern, r: int, m: int, q: Union[float, str, Backend, None] = 1.5):
    """Nbar_{r,m}, the positive matrix element of f_m from p to p - eps_{r,m}."""
    backend = make_backend(q)
    sq = matrix_element_f_squared(p, r, m, backend)
    return _checked_sqrt(sq, backend, f"f_{m} on {p}")


# ---------------------------------------------------------------------------
# Irrep
# ---------------------------------------------------------------------------


class Irrep:
    """Generator matrices e_m, f_m (1 <= m < n) and q^{E_ii} on V(Lambda).

    ``e[m-1]``, ``f[m-1]`` and ``k[i-1]`` are dense square arrays indexed by
    ``basis``.  Composite operators are memoised per instance.
    """

    def __init__(self, hw: HighestWeight, basis: list[GTPattern], backend: Backend, e, f, k):
        self.hw = hw
        self.basis = basis
        self.backend = backend
        self.e = e
        self.f = f
        self.k = k
        self.index = {p: i for i, p in enumerate(basis)}
        self.weights = np.array([weight_of(p) for p in basis], dtype=int).reshape(len(basis), hw.n)
        self._cache: dict = {}

    @property
    def n(self) -> int:
        return self.hw.n

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def exact(self) -> bool:
        return self.backend.exact

    @property
    def q_context(self):
        return "exact" if self.backend.exact else self.backend.q_value

    def identity(self):
        return identity(self.dimension, self.backend)

    def zeros(self):
        return zeros(self.dimension, self.backend)

    def qdiag(self, twice_exponents) -> np.ndarray:
        """Diagonal matrix with entries q^(t/2) for the given per-state integer t."""
        B = self.backend
        vals = [B.qpow(HalfInt.from_twice(int(t))) for t in twice_exponents]
        return diag(vals, B)

    def kinv(self, i: int):
        return self.qdiag(-2 * self.weights[:, i - 1])

    def h(self, m: int) -> np.ndarray:
        """Integer eigenvalues of h_m = E_mm - E_{m+1,m+1} per basis state."""
        return self.weights[:, m - 1] - self.weights[:, m]

    def cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def to_json(self) -> dict:
        return {
            "hw": list(self.hw.entries),
            "q": "exact" if self.exact else self.backend.q_value,
            "basis": [p.to_json() for p in self.basis],
            "e": [matrix_to_json(x) for x in self.e],
            "f": [matrix_to_json(x) for x in self.f],
            "k": [matrix_to_json(x) for x in self.k],
        }

    def __repr__(self):
        return f"Irrep(hw={self.hw.entries}, dim={self.dimension}, backend={self.backend!r})"


def zeros(d: int, backend: Backend) -> np.ndarray:
    if backend.exact:
        out = np.empty((d, d), dtype=object)
        out.fill(QRat())
        return out
    return np.zeros((d, d))


def identity(d: int, backend: Backend) -> np.ndarray:
    out = zeros(d, backend)
    one = backend.one()
    for i in range(d):
        out[i, i] = one
    return out


def diag(values, backend: Backend) -> np.ndarray:
    out = zeros(len(values), backend)
    for i, v in enumerate(values):
        out[i, i] = v
    return out


def _scalar_to_json(x):
    if isinstance(x, QRat):
        return str(x)
    if isinstance(x, (int,)) and not isinstance(x, bool):
        return str(x) if x else "0"
    v = float(x)
    return v + 0.0 if v != 0 else 0.0


def matrix_to_json(m: np.ndarray) -> list:
    """Row-major nested lists: canonical strings (exact) or round-trip floats."""
    if m.dtype == object:
        return [[str(QRat._coerce(x)) for x in row] for row in m]
    return [[(float(x) + 0.0) for x in row] for row in m]


def build_irrep(
    hw: Union[HighestWeight, Sequence[int]],
    q: Union[float, str, Backend, None] = 1.5,
    cap: Optional[int] = None,
) -> Irrep:
    """All generator matrices on V(hw).

    ``q`` is a number for float64 matrices, or ``"exact"``/``None`` for Q(s)
    matrices (which raises NotASquareError when some matrix element is not
    a square in Q(s)).  The dimension cap defaults to QGLN_DIM_CAP or 2000.
    """
    hw = HighestWeight.of(hw)
    backend = make_backend(q)
    check_dimension(hw.entries, cap)
    basis = enumerate_patterns(hw)
    d = len(basis)
    n = hw.n
    index = {p: i for i, p in enumerate(basis)}
    e_mats, f_mats = [], []
    for m in range(1, n):
        e = zeros(d, backend)
        f = zeros(d, backend)
        for p in basis:
            i = index[p]
            for r in range(1, m + 1):
                up = raise_(p, r, m)
                if up is not None:
                    e[index[up], i] = matrix_element_e(p, r, m, backend)
                down = lower(p, r, m)
                if down is not None:
                    f[index[down], i] = matrix_element_f(p, r, m, backend)
        e_mats.append(e)
        f_mats.append(f)
    weights = [weight_of(p) for p in basis]
    k_mats = [diag([backend.qpow(w[i]) for w in weights], backend) for i in range(n)]
    return Irrep(hw, basis, backend, e_mats, f_mats, k_mats)


# ---------------------------------------------------------------------------
# composite operators
# ---------------------------------------------------------------------------


def _check_indices(irrep: Irrep, i: int, j: int) -> None:
    n = irrep.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices ({i},{j}) out of range for n={n}")


def _pivot(i: int, j: int) -> int:
    return j - 1 if i < j else j + 1


def _composite(irrep: Irrep, i: int, j: int, twice_c: int):
    """E_ij by the recursion E_ik E_kj - q^(c) E_kj E_ik with k adjacent to j."""
    _check_indices(irrep, i, j)
    if i == j:
        raise ValueError("composite operators need i != j")

    def build():
        if j == i + 1:
            return irrep.e[i - 1]
        if i == j + 1:
            return irrep.f[j - 1]
        k = _pivot(i, j)
        a = _composite(irrep, i, k, twice_c)
        b = _composite(irrep, k, j, twice_c)
        return a @ b - irrep.backend.qpow(HalfInt.from_twice(twice_c)) * (b @ a)

    return irrep.cached(("E", twice_c, i, j), build)


def composite_E(i: int, j: int, irrep: Irrep):
    """E_ij = E_ik E_kj - q^-1 E_kj E_ik (k = j - 1 for i < j, k = j + 1 for i > j)."""
    return _composite(irrep, i, j, -2)


def composite_Eprime(i: int, j: int, irrep: Irrep):
    """E'_ij = E'_ik E'_kj - q E'_kj E'_ik with the same pivot and base cases."""
    return _composite(irrep, i, j, +2)


def composite_E_pivot(i: int, j: int, k: int, irrep: Irrep):
    """E_ij through an arbitrary pivot k strictly between i and j (no memoisation)."""
    if not (min(i, j) < k < max(i, j)):
        raise ValueError("pivot must lie strictly between i and j")
    a = composite_E(i, k, irrep)
    b = composite_E(k, j, irrep)
    return a @ b - irrep.backend.qpow(-1) * (b @ a)


def hatE(i: int, j: int, irrep: Irrep):
    """E^_ii = q^{E_ii}; E^_ij = (q - q^-1) q^{(E_ii + E_jj - 1)/2} E_ij for i != j."""
    _check_indices(irrep, i, j)

    def build():
        if i == j:
            return irrep.k[i - 1]
        w = irrep.weights
        d = irrep.qdiag(w[:, i - 1] + w[:, j - 1] - 1)
        return irrep.backend.qbar * (d @ composite_E(i, j, irrep))

    return irrep.cached(("hat", i, j), build)


def tildeE(i: int, j: int, irrep: Irrep):
    """E~_ii = q^{-E_ii}; E~_ij = -(q - q^-1) q^{-(E_ii + E_jj - 1)/2} E'_ij for i != j."""
    _check_indices(irrep, i, j)

    def build():
        if i == j:
            return irrep.kinv(i)
        w = irrep.weights
        d = irrep.qdiag(-(w[:, i - 1] + w[:, j - 1] - 1))
        return -irrep.backend.qbar * (d @ composite_Eprime(i, j, irrep))

    return irrep.cached(("tilde", i, j), build)


def antipode_E(i: int, j: int, irrep: Irrep, power: int = 1):
    """pi(S^{power}(E_ij)) for power = +1 or -1, via the anti-homomorphism recursion."""
    _check_indices(irrep, i, j)
    if i == j:
        raise ValueError("antipode_E needs i != j")
    if power not in (1, -1):
        raise ValueError("power must be +1 or -1")

    def build():
        B = irrep.backend
        if j == i + 1:
            return -B.qpow(-power) * irrep.e[i - 1]
        if i == j + 1:
            return -B.qpow(power) * irrep.f[j - 1]
        k = _pivot(i, j)
        s_ik = antipode_E(i, k, irrep, power)
        s_kj = antipode_E(k, j, irrep, power)
        return s_kj @ s_ik - B.qpow(-1) * (s_ik @ s_kj)

    return irrep.cached(("S", power, i, j), build)


def antipode_hatE(i: int, j: int, irrep: Irrep, power: int = 1):
    """pi(S^{power}(E^_ij)): q^{-E_ii} on the diagonal, otherwise
    (q - q^-1) S^{power}(E_ij) q^{-(E_ii + E_jj + 1)/2}."""
    _check_indices(irrep, i, j)
    if power not in (1, -1):
        raise ValueError("power must be +1 or -1")

    def build():
        if i == j:
            return irrep.kinv(i)
        w = irrep.weights
        d = irrep.qdiag(-(w[:, i - 1] + w[:, j - 1] + 1))
        return irrep.backend.qbar * (antipode_E(i, j, irrep, power) @ d)

    return irrep.cached(("Shat", power, i, j), build)


def rho_qtrace(hw: Union[HighestWeight, Sequence[int]]) -> QRat:
    """Exact trace of pi(q^{2 h_rho}) = sum over GT states of q^{(2 rho, nu)}."""
    hw = HighestWeight.of(hw)
    n = hw.n
    total = QRat()
    for p in enumerate_patterns(hw):
        nu = weight_of(p)
        total = total + qpow(sum((n + 1 - 2 * i) * nu[i - 1] for i in range(1, n + 1)))
    return total
