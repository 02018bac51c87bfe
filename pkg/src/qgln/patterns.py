"""Gelfand-Tsetlin patterns, weights and characteristic-root bookkeeping."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Literal, Optional, Sequence

from .scalars import QRat, _root_bar_exact, _root_exact

__all__ = [
    "HighestWeight",
    "GTPattern",
    "RootSet",
    "is_dominant",
    "enumerate_patterns",
    "weyl_dimension",
    "weight_of",
    "raise_",
    "lower",
    "theta",
    "char_root_values",
    "is_between",
    "subalgebra_weights",
    "char_root_values_abar",
]


def is_dominant(entries: Sequence[int]) -> bool:
    return all(entries[i] >= entries[i + 1] for i in range(len(entries) - 1))


@dataclass(frozen=True)
class HighestWeight:
    """A dominant integral gl(n) weight (Lambda_1 >= ... >= Lambda_n)."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("highest weight needs at least one entry")
        if not is_dominant(entries):
            raise ValueError(f"{entries} is not dominant (entries must be non-increasing)")

    @classmethod
    def of(cls, value: "HighestWeight | Iterable[int]") -> "HighestWeight":
        return value if isinstance(value, HighestWeight) else cls(tuple(value))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def shifted(self, r: int, d: int = 1) -> Optional["HighestWeight"]:
        """Lambda + d*eps_r (1-based r), or None when not dominant."""
        e = list(self.entries)
        e[r - 1] += d
        return HighestWeight(tuple(e)) if is_dominant(e) else None

    def __str__(self):
        return ",".join(str(x) for x in self.entries)


@dataclass(frozen=True)
class GTPattern:
    """Triangular array Lambda_{k,m}; ``rows[0]`` is the top row (m = n).

    Entries are accessed with 1-based ``entry(k, m)`` to match the usual
    labelling, where row m has m entries.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n - i:
                raise ValueError("pattern rows must have lengths n, n-1, ..., 1")

    @property
    def n(self) -> int:
        return len(self.rows)

    def row(self, m: int) -> tuple[int, ...]:
        return self.rows[self.n - m]

    def entry(self, k: int, m: int) -> int:
        return self.rows[self.n - m][k - 1]

    def is_valid(self) -> bool:
        n = self.n
        for m in range(1, n):
            lo, hi = self.row(m), self.row(m + 1)
            for k in range(m):
                if not (hi[k] >= lo[k] >= hi[k + 1]):
                    return False
        return True

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "GTPattern":
        return cls(tuple(tuple(r) for r in data))

    def flat(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.rows))

    def __str__(self):
        return ";".join("(" + ",".join(str(x) for x in r) + ")" for r in self.rows)


@dataclass(frozen=True)
class RootSet:
    """Classical characteristic roots of one weight row at level m."""

    level: int
    alpha: tuple[int, ...]
    alphabar: tuple[int, ...]


def is_between(upper: Sequence[int], lower_row: Sequence[int]) -> bool:
    """Betweenness upper_k >= lower_k >= upper_{k+1}."""
    if len(upper) != len(lower_row) + 1:
        return False
    return all(upper[k] >= lower_row[k] >= upper[k + 1] for k in range(len(lower_row)))


def subalgebra_weights(hw: Sequence[int]) -> list[tuple[int, ...]]:
    """All gl(n-1) highest weights occurring in the branching of hw, descending lex order."""
    ranges = [range(hw[k], hw[k + 1] - 1, -1) for k in range(len(hw) - 1)]
    return [tuple(c) for c in itertools.product(*ranges)]


def weyl_dimension(hw: Sequence[int]) -> int:
    """Weyl dimension formula for gl(n)."""
    num = 1
    den = 1
    n = len(hw)
    for i in range(n):
        for j in range(i + 1, n):
            num *= hw[i] - hw[j] + j - i
            den *= j - i
    return num // den


@lru_cache(maxsize=256)
def _patterns_cached(hw: tuple[int, ...]) -> tuple[GTPattern, ...]:
    def rec(rows: list[tuple[int, ...]]) -> Iterator[list[tuple[int, ...]]]:
        top = rows[-1]
        if len(top) == 1:
            yield rows
            return
        for below in subalgebra_weights(top):
            yield from rec(rows + [below])

    return tuple(GTPattern(tuple(r)) for r in rec([hw]))


def enumerate_patterns(hw: "HighestWeight | Sequence[int]") -> list[GTPattern]:
    """All patterns with top row hw, in descending lexicographic order of the
    concatenated rows (top row first).  The highest weight state comes first."""
    hw = HighestWeight.of(hw)
    return list(_patterns_cached(hw.entries))


def weight_of(p: GTPattern) -> tuple[int, ...]:
    """nu_m = sum(row m) - sum(row m-1)."""
    sums = [sum(p.row(m)) for m in range(1, p.n + 1)]
    return tuple(sums[m] - (sums[m - 1] if m else 0) for m in range(p.n))


def _shift(p: GTPattern, r: int, m: int, d: int) -> Optional[GTPattern]:
    n = p.n
    if not (1 <= r <= m < n):
        raise ValueError(f"need 1 <= r <= m < n, got r={r}, m={m}, n={n}")
    rows = [list(x) for x in p.rows]
    rows[n - m][r - 1] += d
    q = GTPattern(tuple(tuple(x) for x in rows))
    if not is_between(q.row(m + 1), q.row(m)):
        return None
    if m > 1 and not is_between(q.row(m), q.row(m - 1)):
        return None
    return q


def raise_(p: GTPattern, r: int, m: int) -> Optional[GTPattern]:
    """Increment Lambda_{r,m}; None when betweenness fails."""
    return _shift(p, r, m, +1)


def lower(p: GTPattern, r: int, m: int) -> Optional[GTPattern]:
    """Decrement Lambda_{r,m}; None when betweenness fails."""
    return _shift(p, r, m, -1)


def theta(hw: Sequence[int], hw0: Sequence[int]) -> int:
    if len(hw0) != len(hw) - 1:
        raise ValueError("theta needs weights of lengths n and n-1")
    return sum(hw) - sum(hw0)


def char_root_values(
    row: Sequence[int], level: Optional[int] = None, kind: Literal["plain", "bar"] = "plain"
) -> tuple[RootSet, list[QRat]]:
    """Classical roots of a dominant row and the q-roots a (plain) or a-tilde (bar).

    ``level`` defaults to ``len(row)``; alpha_k = Lambda_k + level - k and
    alphabar_k = Lambda_k + 1 - k.
    """
    if not is_dominant(row):
        raise ValueError(f"{tuple(row)} is not dominant")
    m = len(row) if level is None else level
    alpha = tuple(row[k] + m - (k + 1) for k in range(len(row)))
    alphabar = tuple(row[k] + 1 - (k + 1) for k in range(len(row)))
    roots = alpha if kind == "plain" else alphabar
    if kind not in ("plain", "bar"):
        raise ValueError("kind must be 'plain' or 'bar'")
    return RootSet(m, alpha, alphabar), [_root_exact(x) for x in roots]


def char_root_values_abar(row: Sequence[int]) -> list[QRat]:
    """The adjoint-matrix roots (1 - q^(2 alphabar)) / (q - q^-1)."""
    return [_root_bar_exact(row[k] - k) for k in range(len(row))]
