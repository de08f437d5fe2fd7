"""Exact truncated power series over the rationals.

Just enough ring structure to expand the closed form of the Catalan-tree
generating function

    A(x) = [2x^2(2 - x) + (1 - x)^2 (1 - sqrt(1 - 4x))] / [2 (1 - x)^2]

and compare its coefficients with the recurrence values. Coefficients are
``Fraction`` throughout; nothing here touches floating point.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .seqcore import SeqEngine, default_engine
from .utils import SeqKind

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Series:
    """Coefficients of x^0..x^K; arithmetic truncates at x^K."""

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @classmethod
    def polynomial(cls, coeffs: Iterable[Number], order: int) -> Series:
        """Pad or truncate ``coeffs`` to exactly ``order + 1`` terms."""
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        values = [Fraction(c) for c in coeffs][: order + 1]
        values += [Fraction(0)] * (order + 1 - len(values))
        return cls(tuple(values))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __add__(self, other: Series) -> Series:
        return series_add(self, other)

    def __sub__(self, other: Series) -> Series:
        return series_sub(self, other)

    def __mul__(self, other: Series) -> Series:
        return series_mul(self, other)

    def __truediv__(self, other: Series) -> Series:
        return series_div(self, other)

    def __neg__(self) -> Series:
        return self.scale(-1)

    def scale(self, factor: Number) -> Series:
        return Series(tuple(c * factor for c in self.coeffs))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coeffs(self) -> List[int]:
        if not self.is_integral():
            bad = next(k for k, c in enumerate(self.coeffs) if c.denominator != 1)
            raise ArithmeticError(
                f"coefficient of x^{bad} is not an integer: {self.coeffs[bad]}"
            )
        return [int(c) for c in self.coeffs]


def _check_orders(a: Series, b: Series) -> None:
    if a.order != b.order:
        raise ValueError(
            f"series orders must match, got {a.order} and {b.order}"
        )


def series_add(a: Series, b: Series) -> Series:
    _check_orders(a, b)
    return Series(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def series_sub(a: Series, b: Series) -> Series:
    _check_orders(a, b)
    return Series(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def series_mul(a: Series, b: Series) -> Series:
    _check_orders(a, b)
    K = a.order
    out = []
    for k in range(K + 1):
        out.append(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)))
    return Series(tuple(out))


def series_div(a: Series, b: Series) -> Series:
    """Quotient q with q * b = a to order K; b must be invertible."""
    _check_orders(a, b)
    if b[0] == 0:
        raise ZeroDivisionError("divisor series has zero constant term")
    q: List[Fraction] = []
    for k in range(a.order + 1):
        acc = a[k] - sum((b[i] * q[k - i] for i in range(1, k + 1)), Fraction(0))
        q.append(acc / b[0])
    return Series(tuple(q))


def sqrt_one_minus_4x(K: int) -> Series:
    """sqrt(1 - 4x) to order K from s * s = 1 - 4x with s_0 = 1.

    Matching x^k gives 2 s_k = [x^k](1 - 4x) - sum_{i=1}^{k-1} s_i s_{k-i}.
    """
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    target = Series.polynomial([1, -4], K)
    s: List[Fraction] = [Fraction(1)]
    for k in range(1, K + 1):
        cross = sum((s[i] * s[k - i] for i in range(1, k)), Fraction(0))
        s.append((target[k] - cross) / 2)
    return Series(tuple(s))


def catalan_series(K: int) -> Series:
    """C(x) = (1 - sqrt(1 - 4x)) / 2."""
    one = Series.polynomial([1], K)
    return (one - sqrt_one_minus_4x(K)).scale(Fraction(1, 2))


def naturals_series(K: int) -> Series:
    """N(x) = x / (1 - x)^2 = sum n x^n."""
    one_minus_x = Series.polynomial([1, -1], K)
    return Series.polynomial([0, 1], K) / (one_minus_x * one_minus_x)


def expand_A_closed_form(K: int) -> Series:
    """Expand the closed form of A(x) exactly as written.

    Raises ``ArithmeticError`` if any coefficient comes out non-integral.
    """
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    one_minus_x = Series.polynomial([1, -1], K)
    one_minus_x_sq = one_minus_x * one_minus_x
    # 2x^2(2 - x) = 4x^2 - 2x^3
    polynomial_part = Series.polynomial([0, 0, 4, -2], K)
    radical_part = one_minus_x_sq * (
        Series.polynomial([1], K) - sqrt_one_minus_4x(K)
    )
    result = (polynomial_part + radical_part) / one_minus_x_sq.scale(2)
    result.integer_coeffs()
    logger.debug("expanded closed form to order %d", K)
    return result


def compare_with_sequence(
    s: Series,
    kind: Union[SeqKind, str],
    engine: Optional[SeqEngine] = None,
) -> List[Tuple[int, bool]]:
    """(k, coefficient == value_k) for every k in 0..order."""
    engine = engine or default_engine()
    kind = SeqKind(kind)
    return [(k, s[k] == engine.value(kind, k)) for k in range(s.order + 1)]


def mismatches(verdicts: Sequence[Tuple[int, bool]]) -> List[int]:
    return [k for k, ok in verdicts if not ok]
