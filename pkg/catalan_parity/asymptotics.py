"""Floating-point asymptotic estimates and growth diagnostics.

Formulas, with the shifted Catalan indexing:

    C_n  ~ 2^{2n} / sqrt(pi n^3)
    a_n  ~ (2^{2n} + n^2 sqrt(pi n)) / sqrt(pi n^3)
    f_n  ~ ((3 - sqrt 3) / 6) 2^{3n-2} / sqrt(pi n^3)
    t_n  ~ ((3 + sqrt 3) / 6) 2^{3n-2} / sqrt(pi n^3)

Everything is evaluated in base-2 logs because f_400 is about 2^1190, far past
the double range. The C_n formula drops a constant factor: exact / estimate
settles near 1/4, so only boundedness and flattening are meaningful there.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from ._math import exp2_clipped, int_ratio, log2_of_int
from .seqcore import SeqEngine, default_engine
from .utils import SeqKind

logger = logging.getLogger(__name__)

SQRT3 = float(np.sqrt(3.0))
F_CONSTANT = (3 - SQRT3) / 6
T_CONSTANT = (3 + SQRT3) / 6
T_OVER_F_LIMIT = 2 + SQRT3

ESTIMATE_KINDS = (SeqKind.C, SeqKind.A, SeqKind.F, SeqKind.T)


@dataclass(frozen=True)
class AsymptoticEstimate:
    kind: SeqKind
    n: int
    log2_estimate: float
    exact_ratio: float

    @property
    def estimate(self) -> float:
        """The formula value; inf once it leaves the double range."""
        return exp2_clipped(self.log2_estimate)


@dataclass(frozen=True)
class RatioDiagnostics:
    n: int
    growth_c: float
    growth_f: float
    growth_t: float
    t_over_f: float


def _log2_denominator(n: int) -> float:
    # log2 sqrt(pi n^3)
    return 0.5 * float(np.log2(np.pi * float(n) ** 3))


def log2_estimate(kind: Union[SeqKind, str], n: int) -> float:
    kind = SeqKind(kind)
    if kind not in ESTIMATE_KINDS:
        raise ValueError(f"no asymptotic formula for kind {kind.value}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    denominator = _log2_denominator(n)
    if kind is SeqKind.C:
        return 2 * n - denominator
    if kind is SeqKind.A:
        correction = float(np.log2(n**2 * np.sqrt(np.pi * n)))
        return float(np.logaddexp2(2 * n, correction)) - denominator
    constant = F_CONSTANT if kind is SeqKind.F else T_CONSTANT
    return float(np.log2(constant)) + 3 * n - 2 - denominator


def estimate(
    kind: Union[SeqKind, str], n: int, engine: Optional[SeqEngine] = None
) -> AsymptoticEstimate:
    """Formula value at n and the exact value divided by it."""
    kind = SeqKind(kind)
    engine = engine or default_engine()
    log2_est = log2_estimate(kind, n)
    exact = engine.value(kind, n)
    ratio = exp2_clipped(log2_of_int(exact) - log2_est) if exact > 0 else 0.0
    return AsymptoticEstimate(kind, n, log2_est, ratio)


def ratio_diagnostics(
    n: int, engine: Optional[SeqEngine] = None
) -> RatioDiagnostics:
    """Successive-term growth of C, f, t and the ratio t_n / f_n.

    Limits: 4, 8, 8 and 2 + sqrt 3.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    engine = engine or default_engine()
    f_n, f_prev = engine.f_false(n), engine.f_false(n - 1)
    t_n, t_prev = engine.t_true(n), engine.t_true(n - 1)
    return RatioDiagnostics(
        n=n,
        growth_c=int_ratio(engine.catalan(n), engine.catalan(n - 1)),
        growth_f=int_ratio(f_n, f_prev),
        growth_t=int_ratio(t_n, t_prev),
        t_over_f=int_ratio(t_n, f_n),
    )
