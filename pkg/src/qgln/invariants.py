"""Closed-form U_q(gl(n)) : U_q(gl(n-1)) invariants in exact Q(s).

Conventions: for Lambda of length n and Lambda0 of length n-1,
  alpha_k = Lambda_k + n - k,        alphabar_k = Lambda_k + 1 - k,
  alpha_0r = Lambda0_r + n - 1 - r,  alphabar_0r = Lambda0_r + 1 - r,
  a(x) = atilde(x) = (1 - q^{-2x}) / (q - q^-1),
with a_k = a(alpha_k), atilde_k = a(alphabar_k) and likewise for the
subalgebra roots.  Forbidden channels (a shifted weight that is not
dominant or breaks betweenness) evaluate to exact 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Literal, Optional, Sequence

from .patterns import GTPattern, HighestWeight, is_between, is_dominant, lower, raise_, weight_of
from .scalars import HalfInt, QRat, _root_exact, eval_at, qnumber, qpow

__all__ = [
    "InvariantTable",
    "RWC",
    "AdmissibilityError",
    "check_admissible",
    "omega_k",
    "omegatilde_k",
    "gamma_r",
    "gammatilde_r",
    "mu_r",
    "mutilde_r",
    "omega_kr",
    "omegatilde_kr",
    "omega_k_bracket",
    "omegatilde_k_bracket",
    "gamma_r_bracket",
    "gammatilde_r_bracket",
    "mu_r_bracket",
    "mutilde_r_bracket",
    "omega_kr_bracket",
    "omegatilde_kr_bracket",
    "xi",
    "xitilde",
    "eta",
    "etatilde",
    "qdimension",
    "qdimension_formal",
    "casimir_eigenvalues",
    "chi_v",
    "chi_C1",
    "chi_Cm",
    "chi_Ctilde_m",
    "rwc",
    "closed_form_matrix_elements",
    "closed_form_square",
    "invariant_table",
]

_ONE = QRat(1)
_Q = qpow(1)
_Q2 = qpow(2)
_QI = qpow(-1)
_QI2 = qpow(-2)


class AdmissibilityError(ValueError):
    """Lambda0 does not occur in the branching of Lambda."""


def _prod(xs) -> QRat:
    return reduce(lambda a, b: a * b, xs, _ONE)


def _a(x: int) -> QRat:
    return _root_exact(x)


def _br(x: int) -> QRat:
    return qnumber(x)


def check_admissible(hw, hw0) -> tuple[tuple[int, ...], tuple[int, ...]]:
    L = tuple(HighestWeight.of(hw).entries)
    L0 = tuple(int(x) for x in hw0)
    if len(L0) != len(L) - 1:
        raise AdmissibilityError("Lambda0 must have length n - 1")
    if not is_between(L, L0):
        raise AdmissibilityError(f"{L0} does not interlace {L}")
    return L, L0


def _shift(w: Sequence[int], r: int, d: int) -> tuple[int, ...]:
    out = list(w)
    out[r - 1] += d
    return tuple(out)


def _in_branching(L: Sequence[int], L0: Sequence[int]) -> bool:
    return is_dominant(L) and is_dominant(L0) and is_between(L, L0)


def _alpha(L):
    n = len(L)
    return [L[k - 1] + n - k for k in range(1, n + 1)]


def _alphabar(L):
    return [L[k - 1] + 1 - k for k in range(1, len(L) + 1)]


def _alpha0(L0):
    n = len(L0) + 1
    return [L0[r - 1] + n - 1 - r for r in range(1, n)]


def _alphabar0(L0):
    return [L0[r - 1] + 1 - r for r in range(1, len(L0) + 1)]


def _theta(L, L0) -> int:
    return sum(L) - sum(L0)


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


# ---------------------------------------------------------------------------
# exponents
# ---------------------------------------------------------------------------


def xi(hw, hw0, k: int) -> int:
    L, L0 = check_admissible(hw, hw0)
    return _theta(L, L0) - _alpha(L)[k - 1]


def xitilde(hw, hw0, k: int) -> int:
    L, L0 = check_admissible(hw, hw0)
    return _theta(L, L0) - _alphabar(L)[k - 1]


def eta(hw, hw0, r: int) -> int:
    L, L0 = check_admissible(hw, hw0)
    return -3 * _alpha0(L0)[r - 1] - 1 - _theta(L, L0)


def etatilde(hw, hw0, r: int) -> int:
    L, L0 = check_admissible(hw, hw0)
    return -3 * _alphabar0(L0)[r - 1] + 1 - _theta(L, L0)


# ---------------------------------------------------------------------------
# omega_k and omegatilde_k
# ---------------------------------------------------------------------------


def omega_k(hw, hw0, k: int) -> QRat:
    """prod_r (a_k - q^-2 a_0r - q^-1) / prod_{l != k} (a_k - a_l)."""
    L, L0 = check_admissible(hw, hw0)
    if not _in_branching(_shift(L, k, -1), L0):
        return QRat()
    al, al0 = _alpha(L), _alpha0(L0)
    ak = _a(al[k - 1])
    num = _prod(ak - _QI2 * _a(x) - _QI for x in al0)
    den = _prod(ak - _a(al[l]) for l in range(len(L)) if l != k - 1)
    return num / den


def omegatilde_k(hw, hw0, k: int) -> QRat:
    """prod_r (atilde_k - q^2 atilde_0r + q) / prod_{l != k} (atilde_k - atilde_l)."""
    L, L0 = check_admissible(hw, hw0)
    if not _in_branching(_shift(L, k, +1), L0):
        return QRat()
    ab, ab0 = _alphabar(L), _alphabar0(L0)
    ak = _a(ab[k - 1])
    num = _prod(ak - _Q2 * _a(x) + _Q for x in ab0)
    den = _prod(ak - _a(ab[l]) for l in range(len(L)) if l != k - 1)
    return num / den


def omega_k_bracket(hw, hw0, k: int) -> QRat:
    """q^{xi_k} prod_r [alpha_k - alpha_0r - 1] / prod_{l != k} [alpha_k - alpha_l]."""
    L, L0 = check_admissible(hw, hw0)
    if not _in_branching(_shift(L, k, -1), L0):
        return QRat()
    al, al0 = _alpha(L), _alpha0(L0)
    x = al[k - 1]
    num = _prod(_br(x - y - 1) for y in al0)
    den = _prod(_br(x - al[l]) for l in range(len(L)) if l != k - 1)
    return qpow(xi(L, L0, k)) * num / den


def omegatilde_k_bracket(hw, hw0, k: int) -> QRat:
    """q^{xitilde_k} prod_r [alphabar_k - alphabar_0r + 1] / prod_{l != k} [alphabar_k - alphabar_l]."""
    L, L0 = check_admissible(hw, hw0)
    if not _in_branching(_shift(L, k, +1), L0):
        return QRat()
    ab, ab0 = _alphabar(L), _alphabar0(L0)
    x = ab[k - 1]
    num = _prod(_br(x - y + 1) for y in ab0)
    den = _prod(_br(x - ab[l]) for l in range(len(L)) if l != k - 1)
    return qpow(xitilde(L, L0, k)) * num / den


# ---------------------------------------------------------------------------
# gamma, mu
# ---------------------------------------------------------------------------


def gammatilde_r(hw, hw0, r: int) -> QRat:
    """(-1)^{n-1} prod_k (atilde_k - q^2 atilde_0r + q) / prod_{l != r} (q^2 atilde_0r - q^2 atilde_0l);
    zero unless Lambda0 - eps_r occurs in the branching."""
    L, L0 = check_admissible(hw, hw0)
    if not _in_branching(L, _shift(L0, r, -1)):
        return QRat()
    ab, ab0 = _alphabar(L), _alphabar0(L0)
    ar = _a(ab0[r - 1])
    num = _prod(_a(x) - _Q2 * ar + _Q for x in ab)
    den = _prod(_Q2 * ar - _Q2 * _a(ab0[l]) for l in range(len(L0)) if l != r - 1)
    return _sign(len(L) - 1) * num / den


def gamma_r(hw, hw0, r: int) -> QRat:
    """(-1)^{n-1} prod_k (a_k - q^-2 a_0r - q^-1) / prod_{l != r} (q^-2 a_0r - q^-2 a_0l);
    zero unless Lambda0 + eps_r occurs in the branching."""
    L, L0 = check_admissible(hw, hw0)
    if not _in_branching(L, _shift(L0, r, +1)):
        return QRat()
    al, al0 = _alpha(L), _alpha0(L0)
    ar = _a(al0[r - 1])
    num = _prod(_a(x) - _QI2 * ar - _QI for x in al)
    den = _prod(_QI2 * ar - _QI2 * _a(al0[l]) for l in range(len(L0)) if l != r - 1)
    return _sign(len(L) - 1) * num / den


def mutilde_r(hw, hw0, r: int) -> QRat:
    """(-1)^{n-1} prod_k (atilde_k - atilde_0r) / prod_{l != r} (atilde_0r - q^2 atilde_0l + q);
    zero unless Lambda0 + eps_r occurs in the branching."""
    L, L0 = check_admissible(hw, hw0)
    if not _in_branching(L, _shift(L0, r, +1)):
        return QRat()
    ab, ab0 = _alphabar(L), _alphabar0(L0)
    ar = _a(ab0[r - 1])
    num = _prod(_a(x) - ar for x in ab)
    den = _prod(ar - _Q2 * _a(ab0[l]) + _Q for l in range(len(L0)) if l != r - 1)
    return _sign(len(L) - 1) * num / den


def mu_r(hw, hw0, r: int) -> QRat:
    """(-1)^{n-1} prod_k (a_k - a_0r) / prod_{l != r} (a_0r - q^-2 a_0l - q^-1);
    zero unless Lambda0 - eps_r occurs in the branching."""
    L, L0 = check_admissible(hw, hw0)
    if not _in_branching(L, _shift(L0, r, -1)):
        return QRat()
    al, al0 = _alpha(L), _alpha0(L0)
    ar = _a(al0[r - 1])
    num = _prod(_a(x) - ar for x in al)
    den = _prod(ar - _QI2 * _a(al0[l]) - _QI for l in range(len(L0)) if l != r - 1)
    return _sign(len(L) - 1) * num / den


def gammatilde_r_bracket(hw, hw0, r: int) -> QRat:
    L, L0 = check_admissible(hw, hw0)
    if not _in_branching(L, _shift(L0, r, -1)):
        return QRat()
    ab, ab0 = _alphabar(L), _alphabar0(L0)
    y = ab0[r - 1]
    num = _prod(_br(x - y + 1) for x in ab)
    den = _prod(_br(y - ab0[l]) for l in range(len(L0)) if l != r - 1)
    e = -_theta(L, L0) - 3 * y + 3
    return _sign(len(L) - 1) * qpow(e) * num / den


def gamma_r_bracket(hw, hw0, r: int) -> QRat:
    L, L0 = check_admissible(hw, hw0)
    if not _in_branching(L, _shift(L0, r, +1)):
        return QRat()
    al, al0 = _alpha(L), _alpha0(L0)
    y = al0[r - 1]
    num = _prod(_br(x - y - 1) for x in al)
    den = _prod(_br(y - al0[l]) for l in range(len(L0)) if l != r - 1)
    e = -_theta(L, L0) - 3 * y - 3
    return _sign(len(L) - 1) * qpow(e) * num / den


def mutilde_r_bracket(hw, hw0, r: int) -> QRat:
    """(-1)^{n-1} q^{etatilde_r} prod_k [alphabar_k - alphabar_0r] / prod_{l != r} [alphabar_0r - alphabar_0l + 1]."""
    L, L0 = check_admissible(hw, hw0)
    if not _in_branching(L, _shift(L0, r, +1)):
        return QRat()
    ab, ab0 = _alphabar(L), _alphabar0(L0)
    y = ab0[r - 1]
    num = _prod(_br(x - y) for x in ab)
    den = _prod(_br(y - ab0[l] + 1) for l in range(len(L0)) if l != r - 1)
    return _sign(len(L) - 1) * qpow(etatilde(L, L0, r)) * num / den


def mu_r_bracket(hw, hw0, r: int) -> QRat:
    """(-1)^{n-1} q^{eta_r} prod_k [alpha_k - alpha_0r] / prod_{l != r} [alpha_0r - alpha_0l - 1]."""
    L, L0 = check_admissible(hw, hw0)
    if not _in_branching(L, _shift(L0, r, -1)):
        return QRat()
    al, al0 = _alpha(L), _alpha0(L0)
    y = al0[r - 1]
    num = _prod(_br(x - y) for x in al)
    den = _prod(_br(y - al0[l] - 1) for l in range(len(L0)) if l != r - 1)
    return _sign(len(L) - 1) * qpow(eta(L, L0, r)) * num / den


# ---------------------------------------------------------------------------
# omega_kr, omegatilde_kr
# ---------------------------------------------------------------------------


def _kr_admissible(L, L0, k, r, d) -> bool:
    return _in_branching(_shift(L, k, d), _shift(L0, r, d))


def omegatilde_kr(hw, hw0, k: int, r: int) -> QRat:
    """omegatilde_k mutilde_r / ((atilde_k - atilde_0r)(atilde_k - q^2 atilde_0r + q)).

    Both denominator factors cancel against numerator factors, so the
    quotient is evaluated in its cancelled form and stays finite where
    mutilde_r itself vanishes."""
    L, L0 = check_admissible(hw, hw0)
    if not _kr_admissible(L, L0, k, r, +1):
        return QRat()
    ab, ab0 = _alphabar(L), _alphabar0(L0)
    ak, ar = _a(ab[k - 1]), _a(ab0[r - 1])
    num = _prod(ak - _Q2 * _a(ab0[s]) + _Q for s in range(len(L0)) if s != r - 1)
    num = num * _prod(_a(ab[p]) - ar for p in range(len(L)) if p != k - 1)
    den = _prod(ak - _a(ab[l]) for l in range(len(L)) if l != k - 1)
    den = den * _prod(ar - _Q2 * _a(ab0[l]) + _Q for l in range(len(L0)) if l != r - 1)
    return _sign(len(L) - 1) * num / den


def omega_kr(hw, hw0, k: int, r: int) -> QRat:
    """omega_k mu_r / ((a_k - a_0r)(a_k - q^-2 a_0r - q^-1)), in cancelled form."""
    L, L0 = check_admissible(hw, hw0)
    if not _kr_admissible(L, L0, k, r, -1):
        return QRat()
    al, al0 = _alpha(L), _alpha0(L0)
    ak, ar = _a(al[k - 1]), _a(al0[r - 1])
    num = _prod(ak - _QI2 * _a(al0[s]) - _QI for s in range(len(L0)) if s != r - 1)
    num = num * _prod(_a(al[p]) - ar for p in range(len(L)) if p != k - 1)
    den = _prod(ak - _a(al[l]) for l in range(len(L)) if l != k - 1)
    den = den * _prod(ar - _QI2 * _a(al0[l]) - _QI for l in range(len(L0)) if l != r - 1)
    return _sign(len(L) - 1) * num / den


def omegatilde_kr_bracket(hw, hw0, k: int, r: int) -> QRat:
    """q^{alphabar_k - alphabar_0r} prod_{l != r} [alphabar_k - alphabar_0l + 1] / [alphabar_0r - alphabar_0l + 1]
    * prod_{p != k} [alphabar_p - alphabar_0r] / [alphabar_p - alphabar_k]."""
    L, L0 = check_admissible(hw, hw0)
    if not _kr_admissible(L, L0, k, r, +1):
        return QRat()
    ab, ab0 = _alphabar(L), _alphabar0(L0)
    x, y = ab[k - 1], ab0[r - 1]
    t = qpow(x - y)
    for l in range(len(L0)):
        if l != r - 1:
            t = t * _br(x - ab0[l] + 1) / _br(y - ab0[l] + 1)
    for p in range(len(L)):
        if p != k - 1:
            t = t * _br(ab[p] - y) / _br(ab[p] - x)
    return t


def omega_kr_bracket(hw, hw0, k: int, r: int) -> QRat:
    """q^{alpha_k - alpha_0r} prod_{l != r} [alpha_k - alpha_0l - 1] / [alpha_0r - alpha_0l - 1]
    * prod_{p != k} [alpha_p - alpha_0r] / [alpha_p - alpha_k]."""
    L, L0 = check_admissible(hw, hw0)
    if not _kr_admissible(L, L0, k, r, -1):
        return QRat()
    al, al0 = _alpha(L), _alpha0(L0)
    x, y = al[k - 1], al0[r - 1]
    t = qpow(x - y)
    for l in range(len(L0)):
        if l != r - 1:
            t = t * _br(x - al0[l] - 1) / _br(y - al0[l] - 1)
    for p in range(len(L)):
        if p != k - 1:
            t = t * _br(al[p] - y) / _br(al[p] - x)
    return t


# ---------------------------------------------------------------------------
# q-dimension and central elements
# ---------------------------------------------------------------------------


def qdimension_formal(entries: Sequence[int]) -> QRat:
    """prod_{i<j} [(Lambda + rho, eps_i - eps_j)] / [(rho, eps_i - eps_j)] for any integer tuple."""
    n = len(entries)
    out = _ONE
    for i in range(n):
        for j in range(i + 1, n):
            out = out * _br(entries[i] - entries[j] + j - i) / _br(j - i)
    return out


def qdimension(hw) -> QRat:
    """D_q[Lambda] as an exact product over positive roots."""
    return qdimension_formal(HighestWeight.of(hw).entries)


def _two_rho(n: int, i: int) -> int:
    return n + 1 - 2 * i


def chi_v(hw) -> QRat:
    """Ribbon eigenvalue q^{-(Lambda, Lambda + 2 rho)}."""
    L = HighestWeight.of(hw).entries
    n = len(L)
    return qpow(-sum(L[i - 1] * (L[i - 1] + _two_rho(n, i)) for i in range(1, n + 1)))


def chi_C1(hw) -> QRat:
    """sum_i q^{-(Lambda + 2 rho, eps_i)} [(Lambda, eps_i)]."""
    L = HighestWeight.of(hw).entries
    n = len(L)
    total = QRat()
    for i in range(1, n + 1):
        total = total + qpow(-(L[i - 1] + _two_rho(n, i))) * _br(L[i - 1])
    return total


def chi_Cm(hw, m: int) -> QRat:
    """Eigenvalue of C_m: sum_r a_r^m D_q[Lambda - eps_r] / D_q[Lambda]."""
    L = HighestWeight.of(hw).entries
    d = qdimension(L)
    al = _alpha(L)
    total = QRat()
    for r in range(1, len(L) + 1):
        total = total + _a(al[r - 1]) ** m * qdimension_formal(_shift(L, r, -1))
    return total / d


def chi_Ctilde_m(hw, m: int) -> QRat:
    """Eigenvalue of C~_m: sum_r atilde_r^m D_q[Lambda + eps_r] / D_q[Lambda]."""
    L = HighestWeight.of(hw).entries
    d = qdimension(L)
    ab = _alphabar(L)
    total = QRat()
    for r in range(1, len(L) + 1):
        total = total + _a(ab[r - 1]) ** m * qdimension_formal(_shift(L, r, +1))
    return total / d


def casimir_eigenvalues(hw, powers: Sequence[int] = ()) -> dict:
    """chi_v, chi_C1 and, for each requested m, the C_m and C~_m eigenvalues."""
    return {
        "chi_v": chi_v(hw),
        "chi_C1": chi_C1(hw),
        "chi_Cm": {m: chi_Cm(hw, m) for m in powers},
        "chi_Ctilde_m": {m: chi_Ctilde_m(hw, m) for m in powers},
    }


# ---------------------------------------------------------------------------
# reduced Wigner coefficients and closed-form matrix elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RWC:
    """A signed square root: value = sign * sqrt(square)."""

    sign: int
    square: QRat

    def value(self, q: float = 1.5) -> float:
        v = eval_at(self.square, q)
        if v < -1e-12:
            raise ArithmeticError(f"negative squared coefficient {v}")
        return self.sign * max(v, 0.0) ** 0.5


def _phase(x: int) -> int:
    return 1 if x >= 0 else -1


def rwc(hw, hw0, k: int, r: Optional[int] = None, direction: Literal["raise", "lower"] = "raise") -> RWC:
    """Reduced Wigner coefficient for Lambda -> Lambda +- eps_k with the subalgebra
    label unchanged (r = None) or shifted by +- eps_r; the phase is S(r - k)."""
    if direction == "raise":
        sq = omegatilde_k(hw, hw0, k) if r is None else omegatilde_kr(hw, hw0, k, r)
    elif direction == "lower":
        sq = omega_k(hw, hw0, k) if r is None else omega_kr(hw, hw0, k, r)
    else:
        raise ValueError("direction must be 'raise' or 'lower'")
    sign = 1 if r is None else _phase(r - k)
    return RWC(sign, sq)


Which = Literal["Mt", "Mtp", "Mbar", "Mp", "N", "Nbar"]
_DIRECTION = {"Mt": +1, "Mtp": -1, "Mbar": -1, "Mp": +1, "N": +1, "Nbar": -1}


def closed_form_matrix_elements(p: GTPattern, r: int, m: int, which: Which) -> tuple[HalfInt, QRat]:
    """(exponent x, bracket product B) for one shift on the source pattern p.

    Mt and Mtp are the Atilde_{m+1,m} and Atilde_{m,m+1} entries, Mbar and
    Mp the A_{m+1,m} and A_{m,m+1} entries, N and Nbar the e_m and f_m
    entries.  The squared matrix element is (-1)^m q^{2x} B.  An invalid
    target returns (0, 0)."""
    if which not in _DIRECTION:
        raise ValueError(f"unknown matrix element family {which!r}")
    target = raise_(p, r, m) if _DIRECTION[which] > 0 else lower(p, r, m)
    if target is None:
        return HalfInt(0), QRat()
    ab = lambda k, mm: p.entry(k, mm) + 1 - k
    al = lambda k, mm: p.entry(k, mm) + mm - k
    if which in ("Mt", "N"):
        f, c1, c2, d1, d2 = ab, 0, +1, +1, 0
    elif which in ("Mtp", "Nbar"):
        f, c1, c2, d1, d2 = ab, +1, 0, 0, -1
    elif which == "Mbar":
        f, c1, c2, d1, d2 = al, 0, -1, -1, 0
    else:
        f, c1, c2, d1, d2 = al, -1, 0, 0, +1
    x = f(r, m)
    num = _prod(_br(f(k, m + 1) - x + c1) for k in range(1, m + 2))
    num = num * _prod(_br(x - f(l, m - 1) + c2) for l in range(1, m))
    den = _prod(_br(x - f(l, m) + d1) * _br(x - f(l, m) + d2) for l in range(1, m + 1) if l != r)
    nu = weight_of(p)
    e = HalfInt.from_twice(nu[m - 1] - nu[m] + 1)
    exponent = {
        "Mt": e - 2 * ab(r, m),
        "Mtp": e - 2 * ab(r, m) + 1,
        "Mbar": e - 2 * al(r, m) - 1,
        "Mp": e - 2 * al(r, m) - 2,
        "N": HalfInt(0),
        "Nbar": HalfInt(0),
    }[which]
    return exponent, num / den


def closed_form_square(p: GTPattern, r: int, m: int, which: Which) -> QRat:
    """(-1)^m q^{2x} B from :func:`closed_form_matrix_elements`."""
    x, b = closed_form_matrix_elements(p, r, m, which)
    return _sign(m) * qpow(2 * x) * b


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


@dataclass
class InvariantTable:
    hw: tuple[int, ...]
    hw0: tuple[int, ...]
    a: list[QRat]
    atilde: list[QRat]
    a0: list[QRat]
    atilde0: list[QRat]
    omega: list[QRat]
    omegatilde: list[QRat]
    gamma: list[QRat]
    gammatilde: list[QRat]
    mu: list[QRat]
    mutilde: list[QRat]
    omega_kr: list[list[QRat]]
    omegatilde_kr: list[list[QRat]]
    qdim: QRat
    chi_v: QRat
    chi_C1: QRat
    xi: list[int]
    xitilde: list[int]
    eta: list[int]
    etatilde: list[int]
    theta: int
    extra: dict = field(default_factory=dict)

    _SCALAR_LISTS = ("a", "atilde", "a0", "atilde0", "omega", "omegatilde", "gamma", "gammatilde", "mu", "mutilde")
    _MATRICES = ("omega_kr", "omegatilde_kr")
    _SCALARS = ("qdim", "chi_v", "chi_C1")

    def to_json(self) -> dict:
        out: dict = {"hw": list(self.hw), "hw0": list(self.hw0)}
        for name in self._SCALAR_LISTS:
            out[name] = [str(x) for x in getattr(self, name)]
        for name in self._MATRICES:
            out[name] = [[str(x) for x in row] for row in getattr(self, name)]
        for name in self._SCALARS:
            out[name] = str(getattr(self, name))
        for name in ("xi", "xitilde", "eta", "etatilde"):
            out[name] = list(getattr(self, name))
        out["theta"] = self.theta
        return out

    def rows(self, q: float) -> list[tuple[str, str, float]]:
        """(name, index, decimal value at q) rows for CSV export."""
        rows: list[tuple[str, str, float]] = []
        for name in self._SCALAR_LISTS:
            for i, x in enumerate(getattr(self, name), start=1):
                rows.append((name, str(i), eval_at(x, q)))
        for name in self._MATRICES:
            for k, row in enumerate(getattr(self, name), start=1):
                for r, x in enumerate(row, start=1):
                    rows.append((name, f"{k};{r}", eval_at(x, q)))
        for name in self._SCALARS:
            rows.append((name, "", eval_at(getattr(self, name), q)))
        for name in ("xi", "xitilde", "eta", "etatilde"):
            for i, x in enumerate(getattr(self, name), start=1):
                rows.append((name, str(i), float(x)))
        rows.append(("theta", "", float(self.theta)))
        return rows


def invariant_table(hw, hw0) -> InvariantTable:
    L, L0 = check_admissible(hw, hw0)
    n = len(L)
    ks = range(1, n + 1)
    rs = range(1, n)
    return InvariantTable(
        hw=L,
        hw0=L0,
        a=[_a(x) for x in _alpha(L)],
        atilde=[_a(x) for x in _alphabar(L)],
        a0=[_a(x) for x in _alpha0(L0)],
        atilde0=[_a(x) for x in _alphabar0(L0)],
        omega=[omega_k(L, L0, k) for k in ks],
        omegatilde=[omegatilde_k(L, L0, k) for k in ks],
        gamma=[gamma_r(L, L0, r) for r in rs],
        gammatilde=[gammatilde_r(L, L0, r) for r in rs],
        mu=[mu_r(L, L0, r) for r in rs],
        mutilde=[mutilde_r(L, L0, r) for r in rs],
        omega_kr=[[omega_kr(L, L0, k, r) for r in rs] for k in ks],
        omegatilde_kr=[[omegatilde_kr(L, L0, k, r) for r in rs] for k in ks],
        qdim=qdimension(L),
        chi_v=chi_v(L),
        chi_C1=chi_C1(L),
        xi=[xi(L, L0, k) for k in ks],
        xitilde=[xitilde(L, L0, k) for k in ks],
        eta=[eta(L, L0, r) for r in rs],
        etatilde=[etatilde(L, L0, r) for r in rs],
        theta=_theta(L, L0),
    )
