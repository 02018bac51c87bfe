"""Classical (q = 1) Gelfand-Tsetlin oracle.

Everything here is written in shifted labels l = Lambda_k - k over exact
rationals and shares no code with the q-deformed formulas.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Optional, Sequence

__all__ = [
    "weyl_dim",
    "gt_count",
    "pieri_dims",
    "e_squared",
    "f_squared",
    "omega",
    "omegatilde",
    "mu",
    "mutilde",
    "gamma",
    "gammatilde",
    "omega_kr",
    "omegatilde_kr",
]


def _dominant(w: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(w, w[1:]))


def _interlaces(top: Sequence[int], bottom: Sequence[int]) -> bool:
    return len(top) == len(bottom) + 1 and all(top[i] >= bottom[i] >= top[i + 1] for i in range(len(bottom)))


def weyl_dim(w: Sequence[int]) -> int:
    """prod_{i<j} (w_i - w_j + j - i) / (j - i); zero for non-dominant shifted weights."""
    n = len(w)
    num = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            num *= Fraction(w[i] - w[j] + j - i, j - i)
    return int(num) if _dominant(w) else 0


def gt_count(w: Sequence[int]) -> int:
    """Number of GT patterns with top row w, by direct recursion."""
    if len(w) == 1:
        return 1
    total = 0

    def rec(i: int, acc: list[int]):
        nonlocal total
        if i == len(w) - 1:
            total += gt_count(acc)
            return
        for x in range(w[i + 1], w[i] + 1):
            rec(i + 1, acc + [x])

    rec(0, [])
    return total


def pieri_dims(w: Sequence[int], sign: int) -> list[int]:
    """dim V(w + sign * eps_r) for r = 1..n, zero when the shift is not dominant."""
    out = []
    for r in range(len(w)):
        s = list(w)
        s[r] += sign
        out.append(weyl_dim(s) if _dominant(s) else 0)
    return out


def _labels(rows_by_level: dict[int, Sequence[int]], m: int) -> list[int]:
    return [rows_by_level[m][k] - (k + 1) for k in range(m)]


def _levels(rows: Sequence[Sequence[int]]) -> dict[int, Sequence[int]]:
    n = len(rows)
    return {n - i: rows[i] for i in range(n)}


def e_squared(rows: Sequence[Sequence[int]], r: int, m: int) -> Fraction:
    """Squared classical matrix element of E_{m,m+1} from the pattern to the one
    with entry (r, m) raised; rows[0] is the top row.  Zero if the raise breaks betweenness."""
    lv = _levels(rows)
    up = list(lv[m])
    up[r - 1] += 1
    if not _interlaces(lv[m + 1], up) or (m > 1 and not _interlaces(up, lv[m - 1])):
        return Fraction(0)
    x = lv[m][r - 1] - r
    top = _labels(lv, m + 1)
    mid = _labels(lv, m)
    low = _labels(lv, m - 1) if m > 1 else []
    num = prod(t - x for t in top) * prod(b - x - 1 for b in low)
    den = prod((mid[k] - x) * (mid[k] - x - 1) for k in range(m) if k != r - 1)
    return -Fraction(num, den)


def f_squared(rows: Sequence[Sequence[int]], r: int, m: int) -> Fraction:
    """Squared classical matrix element of E_{m+1,m} lowering entry (r, m)."""
    lv = _levels(rows)
    dn = list(lv[m])
    dn[r - 1] -= 1
    if not _interlaces(lv[m + 1], dn) or (m > 1 and not _interlaces(dn, lv[m - 1])):
        return Fraction(0)
    x = lv[m][r - 1] - r
    top = _labels(lv, m + 1)
    mid = _labels(lv, m)
    low = _labels(lv, m - 1) if m > 1 else []
    num = prod(t - x + 1 for t in top) * prod(b - x for b in low)
    den = prod((mid[k] - x) * (mid[k] - x + 1) for k in range(m) if k != r - 1)
    return -Fraction(num, den)


def _l(w: Sequence[int]) -> list[int]:
    return [w[k] - (k + 1) for k in range(len(w))]


def _shifted(w: Sequence[int], i: int, d: int) -> list[int]:
    s = list(w)
    s[i - 1] += d
    return s


def _ok(top: Sequence[int], bottom: Sequence[int]) -> bool:
    return _dominant(top) and _dominant(bottom) and _interlaces(top, bottom)


def omegatilde(L, L0, k: int) -> Fraction:
    if not _ok(_shifted(L, k, 1), L0):
        return Fraction(0)
    l, l0 = _l(L), _l(L0)
    x = l[k - 1]
    return Fraction(prod(x - y + 1 for y in l0), prod(x - l[j] for j in range(len(l)) if j != k - 1))


def omega(L, L0, k: int) -> Fraction:
    if not _ok(_shifted(L, k, -1), L0):
        return Fraction(0)
    l, l0 = _l(L), _l(L0)
    x = l[k - 1]
    return Fraction(prod(x - y for y in l0), prod(x - l[j] for j in range(len(l)) if j != k - 1))


def _sgn(n: int) -> int:
    return -1 if (n - 1) % 2 else 1


def mutilde(L, L0, r: int) -> Fraction:
    if not _ok(L, _shifted(L0, r, 1)):
        return Fraction(0)
    l, l0 = _l(L), _l(L0)
    y = l0[r - 1]
    return _sgn(len(L)) * Fraction(prod(x - y for x in l), prod(y - l0[j] + 1 for j in range(len(l0)) if j != r - 1))


def mu(L, L0, r: int) -> Fraction:
    if not _ok(L, _shifted(L0, r, -1)):
        return Fraction(0)
    l, l0 = _l(L), _l(L0)
    y = l0[r - 1]
    return _sgn(len(L)) * Fraction(prod(x - y + 1 for x in l), prod(y - l0[j] - 1 for j in range(len(l0)) if j != r - 1))


def gammatilde(L, L0, r: int) -> Fraction:
    if not _ok(L, _shifted(L0, r, -1)):
        return Fraction(0)
    l, l0 = _l(L), _l(L0)
    y = l0[r - 1]
    return _sgn(len(L)) * Fraction(prod(x - y + 1 for x in l), prod(y - l0[j] for j in range(len(l0)) if j != r - 1))


def gamma(L, L0, r: int) -> Fraction:
    if not _ok(L, _shifted(L0, r, 1)):
        return Fraction(0)
    l, l0 = _l(L), _l(L0)
    y = l0[r - 1]
    return _sgn(len(L)) * Fraction(prod(x - y for x in l), prod(y - l0[j] for j in range(len(l0)) if j != r - 1))


def _kr(L, L0, k: int, r: int, d: int) -> Optional[tuple[list[int], list[int], int, int]]:
    L1, L01 = _shifted(L, k, d), _shifted(L0, r, d)
    if not _ok(L1, L01):
        return None
    l, l0 = _l(L), _l(L0)
    return l, l0, l[k - 1], l0[r - 1]


def omegatilde_kr(L, L0, k: int, r: int) -> Fraction:
    got = _kr(L, L0, k, r, 1)
    if got is None:
        return Fraction(0)
    l, l0, x, y = got
    t = Fraction(1)
    for j in range(len(l0)):
        if j != r - 1:
            t *= Fraction(x - l0[j] + 1, y - l0[j] + 1)
    for p in range(len(l)):
        if p != k - 1:
            t *= Fraction(l[p] - y, l[p] - x)
    return t


def omega_kr(L, L0, k: int, r: int) -> Fraction:
    got = _kr(L, L0, k, r, -1)
    if got is None:
        return Fraction(0)
    l, l0, x, y = got
    t = Fraction(1)
    for j in range(len(l0)):
        if j != r - 1:
            t *= Fraction(x - l0[j], y - l0[j] - 1)
    for p in range(len(l)):
        if p != k - 1:
            t *= Fraction(l[p] - y + 1, l[p] - x)
    return t
