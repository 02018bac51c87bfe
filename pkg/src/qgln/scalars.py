"""Exact arithmetic in Q(s) with s = q^(1/2), plus a float backend at fixed q.

Every q-dependent scalar in the library is a :class:`QRat`: a quotient of
Laurent polynomials in ``s`` with rational coefficients, kept in canonical
form after every operation.  Generator matrix elements are square roots; they
are exact only when the radicand is a square in Q(s), otherwise use
:class:`NumericBackend`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, total_ordering
from numbers import Rational
from typing import Sequence, Union

__all__ = [
    "HalfInt",
    "QRat",
    "PoleError",
    "NotASquareError",
    "qnumber",
    "qpow",
    "eval_at",
    "limit_q1",
    "Backend",
    "ExactBackend",
    "NumericBackend",
    "make_backend",
]


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at one of its poles."""


class NotASquareError(ValueError):
    """Raised when an exact square root is requested outside Q(s)."""


# ---------------------------------------------------------------------------
# HalfInt
# ---------------------------------------------------------------------------


@total_ordering
class HalfInt:
    """An integer or half-integer stored as twice its value."""

    __slots__ = ("twice",)

    def __init__(self, value: Union[int, Fraction, "HalfInt"] = 0):
        if isinstance(value, HalfInt):
            twice = value.twice
        elif isinstance(value, int):
            twice = 2 * value
        else:
            f = Fraction(value)
            if (2 * f).denominator != 1:
                raise ValueError(f"{value!r} is not a half-integer")
            twice = int(2 * f)
        object.__setattr__(self, "twice", twice)

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @classmethod
    def from_twice(cls, twice: int) -> "HalfInt":
        h = cls.__new__(cls)
        object.__setattr__(h, "twice", int(twice))
        return h

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __int__(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __add__(self, other):
        other = _as_halfint(other)
        if other is NotImplemented:
            return NotImplemented
        return HalfInt.from_twice(self.twice + other.twice)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_halfint(other)
        if other is NotImplemented:
            return NotImplemented
        return HalfInt.from_twice(self.twice - other.twice)

    def __rsub__(self, other):
        other = _as_halfint(other)
        if other is NotImplemented:
            return NotImplemented
        return HalfInt.from_twice(other.twice - self.twice)

    def __neg__(self):
        return HalfInt.from_twice(-self.twice)

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfInt.from_twice(self.twice * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _as_halfint(other)
        if other is NotImplemented:
            return NotImplemented
        return self.twice == other.twice

    def __lt__(self, other):
        other = _as_halfint(other)
        if other is NotImplemented:
            return NotImplemented
        return self.twice < other.twice

    def __hash__(self):
        return hash(("HalfInt", self.twice))

    def __repr__(self):
        return f"HalfInt({self})"

    def __str__(self):
        return str(self.twice // 2) if self.is_integer else f"{self.twice}/2"


def _as_halfint(x) -> HalfInt:
    if isinstance(x, HalfInt):
        return x
    if isinstance(x, (int, Fraction)):
        try:
            return HalfInt(x)
        except ValueError:
            return NotImplemented
    return NotImplemented


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficient tuples, lowest degree first)
# ---------------------------------------------------------------------------

Poly = tuple  # tuple[Fraction, ...], no trailing zeros; () is the zero polynomial

_ONE: Poly = (Fraction(1),)


def _trim(c: list) -> Poly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _p_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _p_scale(a: Poly, c: Fraction) -> Poly:
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def _p_neg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def _p_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _p_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    quot = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        c = c / lead
        quot[i - db] = c
        for j in range(db + 1):
            rem[i - db + j] -= c * b[j]
    return _trim(quot), _trim(rem[:db])


def _p_exact_div(a: Poly, b: Poly) -> Poly:
    quot, rem = _p_divmod(a, b)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return quot


def _p_monic(a: Poly) -> Poly:
    if not a:
        return a
    lead = a[-1]
    if lead == 1:
        return a
    return tuple(x / lead for x in a)


def _p_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return _p_monic(a) if a else _ONE
    if len(b) == 1:
        return _ONE
    while b:
        _, r = _p_divmod(a, b)
        a, b = b, _p_monic(r) if r else r
        if a and len(a) == 1:
            return _ONE
    return _p_monic(a)


def _low_order(a: Poly) -> int:
    for i, x in enumerate(a):
        if x != 0:
            return i
    raise ValueError("zero polynomial has no order")


def _horner(a: Poly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _p_isqrt(a: Poly) -> Poly | None:
    """Exact square root of a polynomial with nonzero constant term, or None."""
    if not a:
        return ()
    if (len(a) - 1) % 2:
        return None
    c0 = _frac_sqrt(a[0])
    if c0 is None:
        return None
    deg = (len(a) - 1) // 2
    root = [c0]
    for k in range(1, deg + 1):
        acc = a[k]
        for i in range(1, k):
            acc -= root[i] * root[k - i]
        root.append(acc / (2 * c0))
    if _p_mul(tuple(root), tuple(root)) != a:
        return None
    return tuple(root)


def _frac_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# QRat
# ---------------------------------------------------------------------------


class QRat:
    """Element of Q(s), s = q^(1/2), stored as s^val * num(s) / den(s).

    Canonical form: ``num`` and ``den`` are ordinary polynomials in s with
    nonzero constant terms, coprime, and ``den`` is monic (so its leading
    coefficient is positive and its lowest exponent is 0).  Zero is stored
    as ``val = 0, num = (), den = (1,)``.  Instances are immutable and
    hashable; equality is structural on the canonical form.
    """

    __slots__ = ("val", "num", "den", "_hash")

    def __init__(self, value: Union[int, Fraction, "QRat"] = 0):
        if isinstance(value, QRat):
            self._set(value.val, value.num, value.den)
            return
        f = Fraction(value)
        if f == 0:
            self._set(0, (), _ONE)
        else:
            self._set(0, (f,), _ONE)

    def _set(self, val: int, num: Poly, den: Poly) -> None:
        object.__setattr__(self, "val", val)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QRat is immutable")

    @classmethod
    def _raw(cls, val: int, num: Poly, den: Poly) -> "QRat":
        obj = cls.__new__(cls)
        obj._set(val, num, den)
        return obj

    @classmethod
    def from_parts(cls, num: Sequence, den: Sequence = (1,), shift: int = 0) -> "QRat":
        """Build ``s^shift * num(s) / den(s)`` from coefficient lists (lowest degree first)."""
        n = _trim([Fraction(c) for c in num])
        d = _trim([Fraction(c) for c in den])
        if not d:
            raise ZeroDivisionError("zero denominator")
        return cls._canonical(shift, n, d)

    @classmethod
    def monomial(cls, twice_exponent: int, coeff=1) -> "QRat":
        """``coeff * s^twice_exponent`` (i.e. ``coeff * q^(twice_exponent/2)``)."""
        c = Fraction(coeff)
        if c == 0:
            return cls()
        return cls._raw(int(twice_exponent), (c,), _ONE)

    @classmethod
    def _canonical(cls, val: int, num: Poly, den: Poly) -> "QRat":
        if not num:
            return cls._raw(0, (), _ONE)
        ln = _low_order(num)
        ld = _low_order(den)
        if ln:
            num = num[ln:]
        if ld:
            den = den[ld:]
        val += ln - ld
        if len(den) > 1 and len(num) > 1:
            g = _p_gcd(num, den)
            if len(g) > 1:
                num = _p_exact_div(num, g)
                den = _p_exact_div(den, g)
        lead = den[-1]
        if lead != 1:
            num = _p_scale(num, 1 / lead)
            den = _p_scale(den, 1 / lead)
        return cls._raw(val, num, den)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        """True when the value is a Laurent polynomial in s."""
        return len(self.den) == 1

    def is_constant(self) -> bool:
        return self.is_zero() or (self.val == 0 and len(self.num) == 1 and len(self.den) == 1)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num[0] if self.num else Fraction(0)

    def has_only_integer_q_powers(self) -> bool:
        """True when every exponent of s that occurs is even (value lies in Q(q))."""
        if self.is_zero():
            return True
        # canonical num/den have nonzero constant terms, so invariance under
        # s -> -s forces even shift and even polynomials
        even = lambda p: all(c == 0 for c in p[1::2])
        return self.val % 2 == 0 and even(self.num) and even(self.den)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "QRat":
        if isinstance(x, QRat):
            return x
        if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
            return QRat(Fraction(x))
        if isinstance(x, HalfInt):
            return QRat(x.as_fraction())
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        # align s-powers: s^a A/B + s^b C/D with a <= b
        a, b = self, other
        if a.val > b.val:
            a, b = b, a
        shift = b.val - a.val
        c_shifted = (Fraction(0),) * shift + b.num
        if a.den == b.den:
            num = _p_add(a.num, c_shifted)
            return QRat._canonical(a.val, num, a.den)
        g = _p_gcd(a.den, b.den)
        if len(g) == 1:
            num = _p_add(_p_mul(a.num, b.den), _p_mul(c_shifted, a.den))
            return QRat._canonical(a.val, num, _p_mul(a.den, b.den))
        bd_g = _p_exact_div(b.den, g)
        ad_g = _p_exact_div(a.den, g)
        num = _p_add(_p_mul(a.num, bd_g), _p_mul(c_shifted, ad_g))
        return QRat._canonical(a.val, num, _p_mul(a.den, bd_g))

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        return QRat._raw(self.val, _p_neg(self.num), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QRat()
        val = self.val + other.val
        if len(self.num) == 1 and len(self.den) == 1:
            return QRat._raw(val, _p_scale(other.num, self.num[0]), other.den)
        if len(other.num) == 1 and len(other.den) == 1:
            return QRat._raw(val, _p_scale(self.num, other.num[0]), self.den)
        # cross-cancel before multiplying keeps degrees small
        a, b = self.num, self.den
        c, d = other.num, other.den
        g1 = _p_gcd(a, d) if len(a) > 1 and len(d) > 1 else _ONE
        g2 = _p_gcd(c, b) if len(c) > 1 and len(b) > 1 else _ONE
        if len(g1) > 1:
            a, d = _p_exact_div(a, g1), _p_exact_div(d, g1)
        if len(g2) > 1:
            c, b = _p_exact_div(c, g2), _p_exact_div(b, g2)
        num = _p_mul(a, c)
        den = _p_mul(b, d)
        lead = den[-1]
        if lead != 1:
            num = _p_scale(num, 1 / lead)
            den = _p_scale(den, 1 / lead)
        return QRat._raw(val, num, den)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(s)")
        num, den = self.den, self.num
        lead = den[-1]
        return QRat._raw(-self.val, _p_scale(num, 1 / lead), _p_scale(den, 1 / lead))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QRat(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def sqrt(self) -> "QRat":
        """Exact square root with positive value for s > 0 large; raises if not in Q(s)."""
        if self.is_zero():
            return self
        if self.val % 2:
            raise NotASquareError(f"{self} is not a square in Q(s)")
        rn = _p_isqrt(self.num)
        if rn is None:
            rn = _p_isqrt(_p_neg(self.num))
            if rn is not None:
                raise NotASquareError(f"{self} is negative of a square")
            raise NotASquareError(f"{self} is not a square in Q(s)")
        rd = _p_isqrt(self.den)
        if rd is None:
            raise NotASquareError(f"{self} is not a square in Q(s)")
        root = QRat._canonical(self.val // 2, rn, rd)
        # choose the branch that is positive at s = 1 (or at the nearest regular point)
        probe = _positive_probe(root)
        return root if probe > 0 else -root

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.val == other.val and self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.is_constant():
                h = hash(self.constant_value())
            else:
                h = hash((self.val, self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return not self.is_zero()

    # -- evaluation ---------------------------------------------------------

    def eval_s(self, s):
        """Evaluate at a given value of s (float, Fraction, ...)."""
        if self.is_zero():
            return 0 * s
        den = _horner(self.den, s)
        if den == 0:
            raise PoleError(f"{self} has a pole at s = {s}")
        return s**self.val * _horner(self.num, s) / den

    # -- formatting -------------------------------------------------------

    def __str__(self):
        num = _format_laurent(self.num, self.val)
        if len(self.den) == 1:
            return num
        return f"({num})/({_format_laurent(self.den, 0)})"

    def __repr__(self):
        return f"QRat({str(self)!r})"


def _positive_probe(x: QRat) -> float:
    for s in (1.0, 1.25, 0.8, 1.5, 2.0):
        try:
            v = float(x.eval_s(s))
        except PoleError:
            continue
        if v != 0:
            return v
    return 1.0


def _format_coeff_term(c: Fraction, twice: int, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if twice == 0:
        body = str(a)
    else:
        if twice == 2:
            power = "q"
        elif twice % 2 == 0:
            power = f"q^{twice // 2}"
        else:
            power = "q^{" + f"{twice}/2" + "}"
        if a == 1:
            body = power
        else:
            body = f"{a}*{power}"
    if first:
        return body if sign == "+" else f"-{body}"
    return f" {sign} {body}"


def _format_laurent(coeffs: Poly, shift: int) -> str:
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        parts.append(_format_coeff_term(c, i + shift, not parts))
    return "".join(parts)


# ---------------------------------------------------------------------------
# q-primitives
# ---------------------------------------------------------------------------


@lru_cache(maxsize=4096)
def _qnumber_cached(x: int) -> QRat:
    if x == 0:
        return QRat()
    if x < 0:
        return -_qnumber_cached(-x)
    # [x]_q = q^(x-1) + q^(x-3) + ... + q^(1-x); in s the exponents are 2(x-1), ..., 2(1-x)
    coeffs = [Fraction(0)] * (4 * (x - 1) + 1)
    for j in range(0, 4 * (x - 1) + 1, 4):
        coeffs[j] = Fraction(1)
    return QRat._raw(-2 * (x - 1), tuple(coeffs), _ONE)


def qnumber(x) -> QRat:
    """The q-number [x]_q = (q^x - q^-x)/(q - q^-1) for integer x."""
    if isinstance(x, HalfInt):
        x = int(x)
    elif isinstance(x, Fraction):
        if x.denominator != 1:
            raise ValueError("q-numbers are only defined here for integer arguments")
        x = int(x)
    return _qnumber_cached(int(x))


def qpow(x) -> QRat:
    """q^x = s^(2x) for integer or half-integer x."""
    h = x if isinstance(x, HalfInt) else HalfInt(x)
    return QRat.monomial(h.twice)


def eval_at(x: QRat, q: float) -> float:
    """Evaluate at a real q > 0 using Horner's rule in s = sqrt(q)."""
    if q <= 0:
        raise ValueError("q must be positive")
    if not isinstance(x, QRat):
        return float(x)
    s = math.sqrt(q)
    num = _horner(x.num, s)
    den = _horner(x.den, s)
    scale = sum(abs(float(c)) * s**i for i, c in enumerate(x.den))
    if den == 0 or abs(den) <= 1e-15 * scale:
        raise PoleError(f"{x} has a pole at q = {q}")
    return float(s**x.val * num / den)


def eval_exact(x: QRat, q: Fraction) -> Fraction:
    """Exact rational value at rational q; requires integer q-powers or square q."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("q must be positive")
    root = _frac_sqrt(q)
    if root is not None:
        return Fraction(x.eval_s(root))
    if not x.has_only_integer_q_powers():
        raise ValueError(f"{x} has half-integer q-powers; it is not rational at q = {q}")
    num = _horner(x.num[::2], q)
    den = _horner(x.den[::2], q)
    if den == 0:
        raise PoleError(f"{x} has a pole at q = {q}")
    return q ** (x.val // 2) * num / den


def limit_q1(x: QRat) -> Fraction:
    """Exact value at q = 1 (s = 1); raises PoleError at a pole."""
    if x.is_zero():
        return Fraction(0)
    den = sum(x.den)
    if den == 0:
        raise PoleError(f"{x} has a pole at q = 1")
    return sum(x.num) / den


# ---------------------------------------------------------------------------
# scalar backends
# ---------------------------------------------------------------------------


class Backend:
    """Scalar context shared by every matrix built from one Irrep.

    The exact backend computes in Q(s); the numeric backend in float64 at a
    fixed q.  Formulas are written once against this interface.
    """

    exact: bool = False
    dtype: object = float

    def scalar(self, x):
        raise NotImplementedError

    def qpow(self, x):
        raise NotImplementedError

    def sqrt(self, x):
        raise NotImplementedError

    @property
    def q(self):
        return self.qpow(1)

    @property
    def qbar(self):
        """q - q^-1."""
        return self.qpow(1) - self.qpow(-1)

    def root(self, alpha: int):
        """(1 - q^(-2 alpha)) / (q - q^-1)."""
        return (1 - self.qpow(-2 * alpha)) / self.qbar

    def root_bar(self, alpha: int):
        """(1 - q^(2 alpha)) / (q - q^-1)."""
        return (1 - self.qpow(2 * alpha)) / self.qbar

    def zero(self):
        return self.scalar(0)

    def one(self):
        return self.scalar(1)


class ExactBackend(Backend):
    exact = True
    dtype = object
    name = "exact"

    def scalar(self, x):
        return QRat._coerce(x) if not isinstance(x, QRat) else x

    def qpow(self, x):
        return qpow(x)

    def sqrt(self, x: QRat) -> QRat:
        return x.sqrt()

    def root(self, alpha: int) -> QRat:
        return _root_exact(alpha)

    def root_bar(self, alpha: int) -> QRat:
        return _root_bar_exact(alpha)

    def __eq__(self, other):
        return isinstance(other, ExactBackend)

    def __hash__(self):
        return hash("exact")

    def __repr__(self):
        return "ExactBackend()"


@lru_cache(maxsize=4096)
def _root_exact(alpha: int) -> QRat:
    return (1 - qpow(-2 * alpha)) / (qpow(1) - qpow(-1))


@lru_cache(maxsize=4096)
def _root_bar_exact(alpha: int) -> QRat:
    return (1 - qpow(2 * alpha)) / (qpow(1) - qpow(-1))


class NumericBackend(Backend):
    """float64 scalars at a fixed q > 0, q != 1."""

    exact = False
    dtype = float
    name = "numeric"

    def __init__(self, q: float = 1.5):
        q = float(q)
        if not q > 0 or q == 1.0 or not math.isfinite(q):
            raise ValueError("numeric q must be a finite positive number different from 1")
        self.q_value = q
        self._s = math.sqrt(q)

    def scalar(self, x) -> float:
        if isinstance(x, QRat):
            return eval_at(x, self.q_value)
        return float(x)

    def qpow(self, x) -> float:
        h = x if isinstance(x, HalfInt) else HalfInt(x)
        return self._s ** h.twice

    def sqrt(self, x, tol: float = 1e-12) -> float:
        v = self.scalar(x)
        if v < 0:
            if v < -tol:
                raise ArithmeticError(f"negative squared matrix element {v}")
            return 0.0
        return math.sqrt(v)

    def __eq__(self, other):
        return isinstance(other, NumericBackend) and other.q_value == self.q_value

    def __hash__(self):
        return hash(("numeric", self.q_value))

    def __repr__(self):
        return f"NumericBackend(q={self.q_value!r})"


def make_backend(q: Union[None, str, float, Fraction, Backend] = 1.5) -> Backend:
    """Backend from a user value: None or "exact" for Q(s), a number for float64."""
    if isinstance(q, Backend):
        return q
    if q is None or (isinstance(q, str) and q == "exact"):
        return ExactBackend()
    return NumericBackend(float(q))
