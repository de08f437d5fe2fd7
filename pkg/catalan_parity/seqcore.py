"""Memoized exact computation of the Catalan-derived sequences.

All values use the shifted Catalan indexing C_0 = 0, C_1 = C_2 = 1, C_3 = 2,
one index ahead of the common convention. The sequences are

    C_n   = sum_{i=1}^{n-1} C_i C_{n-i}
    g_n   = 2^n C_n
    f_n   = sum_{i=1}^{n-1} (2^i C_i - f_i) f_{n-i},   f_1 = 1, f_0 = 0
    t_n   = g_n - f_n,                                 t_0 = 0
    a_n   = C_n + n (n > 1),                           a_0 = 0, a_1 = 1
    a_n(f_n) = f_n + C_n + n,  a_n(t_n) = t_n + C_n + n (n > 1), both 2 at n = 1

Values are plain Python ints, so there is no overflow at any n.
"""
from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from math import comb
from typing import List, Tuple, Union

from .utils import SeqKind

logger = logging.getLogger(__name__)

BigCount = int


@dataclass(frozen=True)
class TriangleRow:
    """The summands T(n, i) = t_i * f_{n-i}, i = 1..n-1, of f_n."""

    n: int
    terms: Tuple[BigCount, ...]

    @property
    def total(self) -> BigCount:
        return sum(self.terms)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


class SeqEngine:
    """Insert-only memo of the Catalan and false-row recurrences.

    The memo lists only ever grow and entries never change, so values read
    outside the lock are stable. Growth happens under a lock, which makes one
    engine safe to share between threads.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        # index 0 holds the n = 0 conventions
        self._catalan: List[BigCount] = [0, 1]
        self._false: List[BigCount] = [0, 1]
        self._true: List[BigCount] = [0, 1]

    @property
    def cached_up_to(self) -> int:
        return len(self._false) - 1

    def _grow_catalan(self, n: int) -> None:
        if n < len(self._catalan):
            return
        with self._lock:
            c = self._catalan
            start = len(c)
            for m in range(start, n + 1):
                c.append(sum(c[i] * c[m - i] for i in range(1, m)))
            logger.debug("catalan memo grown from %d to %d", start - 1, n)

    def _grow_false(self, n: int) -> None:
        if n < len(self._false):
            return
        self._grow_catalan(n)
        with self._lock:
            c, f, t = self._catalan, self._false, self._true
            start = len(f)
            for m in range(start, n + 1):
                f_m = sum(t[i] * f[m - i] for i in range(1, m))
                # t first: readers test len(f), so t[m] must exist once f[m] does
                t.append((c[m] << m) - f_m)
                f.append(f_m)
            logger.debug("false-row memo grown from %d to %d", start - 1, n)

    def catalan(self, n: int) -> BigCount:
        _require(n >= 0, f"n must be >= 0, got {n}")
        self._grow_catalan(n)
        return self._catalan[n]

    def catalan_explicit(self, n: int) -> BigCount:
        """C_n = binom(2n-2, n-1) / n, exact."""
        _require(n >= 1, f"n must be >= 1 for the explicit formula, got {n}")
        numerator = comb(2 * n - 2, n - 1)
        quotient, remainder = divmod(numerator, n)
        if remainder:
            raise ArithmeticError(f"binom(2n-2, n-1) not divisible by n={n}")
        return quotient

    def g_total(self, n: int) -> BigCount:
        """Total truth-table rows over all C_n bracketings: 2^n C_n."""
        return self.catalan(n) << n

    def f_false(self, n: int) -> BigCount:
        _require(n >= 0, f"n must be >= 0, got {n}")
        self._grow_false(n)
        return self._false[n]

    def t_true(self, n: int) -> BigCount:
        _require(n >= 0, f"n must be >= 0, got {n}")
        self._grow_false(n)
        return self._true[n]

    def a_total(self, n: int) -> BigCount:
        """Number of components of the Catalan tree A_n."""
        _require(n >= 0, f"n must be >= 0, got {n}")
        if n <= 1:
            return n
        return self.catalan(n) + n

    def a_explicit(self, n: int) -> BigCount:
        _require(n > 1, f"n must be > 1 for the explicit formula, got {n}")
        return self.catalan_explicit(n) + n

    def fruitful_total(self, n: int, kind: Union[SeqKind, str]) -> BigCount:
        """Components of the fruitful tree A_n(f_n) or A_n(t_n).

        n = 1 gives 2 for both kinds, as tabulated, not the 3 the n > 1
        formula would give.
        """
        kind = SeqKind(kind)
        _require(
            kind in (SeqKind.F, SeqKind.T),
            f"fruit kind must be f or t, got {kind.value}",
        )
        _require(n >= 0, f"n must be >= 0, got {n}")
        if n == 0:
            return 0
        if n == 1:
            return 2
        fruit = self.f_false(n) if kind is SeqKind.F else self.t_true(n)
        return fruit + self.catalan(n) + n

    def triangle_term(self, n: int, i: int) -> BigCount:
        """T(n, i) = (2^i C_i - f_i) f_{n-i}."""
        _require(1 <= i <= n - 1, f"i must lie in [1, {n - 1}], got {i}")
        self._grow_false(n)
        return self._true[i] * self._false[n - i]

    def triangle_row(self, n: int) -> TriangleRow:
        _require(n >= 2, f"n must be >= 2 for a triangle row, got {n}")
        self._grow_false(n)
        t, f = self._true, self._false
        return TriangleRow(n, tuple(t[i] * f[n - i] for i in range(1, n)))

    def value(self, kind: Union[SeqKind, str], n: int) -> BigCount:
        kind = SeqKind(kind)
        if kind is SeqKind.C:
            return self.catalan(n)
        if kind is SeqKind.G:
            return self.g_total(n)
        if kind is SeqKind.F:
            return self.f_false(n)
        if kind is SeqKind.T:
            return self.t_true(n)
        if kind is SeqKind.A:
            return self.a_total(n)
        return self.fruitful_total(n, SeqKind.F if kind is SeqKind.AF else SeqKind.T)

    def table(
        self, kind: Union[SeqKind, str], start: int, stop: int
    ) -> List[Tuple[int, BigCount]]:
        """(n, value) pairs for start <= n <= stop, in index order."""
        _require(start >= 0, f"from must be >= 0, got {start}")
        _require(start <= stop, f"from must be <= to, got from={start} to={stop}")
        kind = SeqKind(kind)
        return [(n, self.value(kind, n)) for n in range(start, stop + 1)]


_default_engine = SeqEngine()


def default_engine() -> SeqEngine:
    """Process-wide engine backing the module-level functions."""
    return _default_engine


def catalan(n: int) -> BigCount:
    return _default_engine.catalan(n)


def catalan_explicit(n: int) -> BigCount:
    return _default_engine.catalan_explicit(n)


def g_total(n: int) -> BigCount:
    return _default_engine.g_total(n)


def f_false(n: int) -> BigCount:
    return _default_engine.f_false(n)


def t_true(n: int) -> BigCount:
    return _default_engine.t_true(n)


def a_total(n: int) -> BigCount:
    return _default_engine.a_total(n)


def a_explicit(n: int) -> BigCount:
    return _default_engine.a_explicit(n)


def fruitful_total(n: int, kind: Union[SeqKind, str]) -> BigCount:
    return _default_engine.fruitful_total(n, kind)


def triangle_term(n: int, i: int) -> BigCount:
    return _default_engine.triangle_term(n, i)


def triangle_row(n: int) -> TriangleRow:
    return _default_engine.triangle_row(n)


def table(
    kind: Union[SeqKind, str], start: int, stop: int
) -> List[Tuple[int, BigCount]]:
    return _default_engine.table(kind, start, stop)
