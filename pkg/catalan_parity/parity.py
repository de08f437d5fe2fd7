"""Parity predicates for the Catalan-derived sequences and a mod-2 engine.

The mod-2 engine reruns the Catalan and false-row recurrences with every
product and sum reduced mod 2, so parities can be swept to n in the
thousands without ever building the multi-kilobit values.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from .seqcore import SeqEngine, default_engine
from .utils import Parity, SeqKind

logger = logging.getLogger(__name__)

# Largest n at which residues are also cross-checked against full values.
FULL_VALUE_CHECK_N = 512


@dataclass(frozen=True)
class ParityVerdict:
    n: int
    kind: SeqKind
    observed: Parity
    predicted: Parity

    @property
    def agrees(self) -> bool:
        return self.observed is self.predicted


@dataclass(frozen=True)
class Mod2Table:
    """Residues mod 2 of every sequence, indexed 0..max_n."""

    max_n: int
    bits: Dict[SeqKind, np.ndarray]

    def residue(self, kind: Union[SeqKind, str], n: int) -> int:
        kind = SeqKind(kind)
        if not 0 <= n <= self.max_n:
            raise ValueError(f"n must lie in [0, {self.max_n}], got {n}")
        return int(self.bits[kind][n])

    def parity(self, kind: Union[SeqKind, str], n: int) -> Parity:
        return Parity.of(self.residue(kind, n))


def is_power_of_two(n: int) -> bool:
    """True iff n = 2^i with i >= 1; 1 itself does not count."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return n > 1 and n & (n - 1) == 0


def _first_index(kind: SeqKind) -> int:
    return 2 if kind in (SeqKind.AF, SeqKind.AT) else 1


def predicted_parity(kind: Union[SeqKind, str], n: int) -> Parity:
    """Parity the theorems predict for the n-th term of ``kind``.

    - C, f, t are odd iff n = 1 or n is a power of two.
    - a is odd iff n is odd or a power of two.
    - g is always even.
    - a(f), a(t) are odd iff n is odd; only claimed for n >= 2, the tabulated
      n = 1 value is 2.
    """
    kind = SeqKind(kind)
    if n < _first_index(kind):
        raise ValueError(
            f"no parity claim for {kind.value} at n={n}; "
            f"n must be >= {_first_index(kind)}"
        )
    if kind in (SeqKind.C, SeqKind.F, SeqKind.T):
        odd = n == 1 or is_power_of_two(n)
    elif kind is SeqKind.A:
        odd = n % 2 == 1 or is_power_of_two(n)
    elif kind is SeqKind.G:
        odd = False
    else:
        odd = n % 2 == 1
    return Parity.ODD if odd else Parity.EVEN


def mod2_engine(max_n: int) -> Mod2Table:
    """Run the recurrences in arithmetic mod 2 up to ``max_n``.

    Each step is one convolution, done as a numpy dot product of the residue
    vectors, so the whole table costs O(max_n^2) word operations.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    size = max_n + 1
    c = np.zeros(size, dtype=np.int64)
    f = np.zeros(size, dtype=np.int64)
    t = np.zeros(size, dtype=np.int64)
    c[1] = f[1] = 1
    # t_1 = 2 C_1 - f_1 = 1; 2^i is even for every i >= 1 so t_i = f_i mod 2
    t[1] = 1
    for m in range(2, size):
        c[m] = np.dot(c[1:m], c[m - 1:0:-1]) & 1
        f[m] = np.dot(t[1:m], f[m - 1:0:-1]) & 1
        t[m] = f[m]
    n = np.arange(size, dtype=np.int64)
    a = (c + n) & 1
    a[:2] = (0, 1)
    af = (f + c + n) & 1
    at = (t + c + n) & 1
    af[:2] = at[:2] = 0
    g = np.zeros(size, dtype=np.int64)
    logger.debug("mod-2 table built up to n=%d", max_n)
    return Mod2Table(
        max_n=max_n,
        bits={
            SeqKind.C: c,
            SeqKind.G: g,
            SeqKind.F: f,
            SeqKind.T: t,
            SeqKind.A: a,
            SeqKind.AF: af,
            SeqKind.AT: at,
        },
    )


def verify_parity(
    kind: Union[SeqKind, str], max_n: int, table: Optional[Mod2Table] = None
) -> List[ParityVerdict]:
    """One verdict per n in [first valid index, max_n].

    Reuses ``table`` when it already reaches ``max_n``.
    """
    kind = SeqKind(kind)
    if table is None or table.max_n < max_n:
        table = mod2_engine(max_n)
    return [
        ParityVerdict(n, kind, table.parity(kind, n), predicted_parity(kind, n))
        for n in range(_first_index(kind), max_n + 1)
    ]


def cross_check(
    table: Mod2Table,
    max_n: int = FULL_VALUE_CHECK_N,
    engine: Optional[SeqEngine] = None,
) -> List[Tuple[SeqKind, int]]:
    """(kind, n) pairs where a residue disagrees with the full value mod 2."""
    engine = engine or default_engine()
    max_n = min(max_n, table.max_n)
    mismatches = []
    for kind in SeqKind:
        for n in range(max_n + 1):
            if engine.value(kind, n) & 1 != table.residue(kind, n):
                mismatches.append((kind, n))
    return mismatches


def fruitful_anomalies(engine: Optional[SeqEngine] = None) -> List[ParityVerdict]:
    """The n = 1 fruitful totals against the literal "odd iff n odd" claim.

    Both tabulated values are 2, so both verdicts disagree.
    """
    engine = engine or default_engine()
    return [
        ParityVerdict(
            1, kind, Parity.of(engine.value(kind, 1)), Parity.ODD
        )
        for kind in (SeqKind.AF, SeqKind.AT)
    ]


@dataclass(frozen=True)
class SegnerSplit:
    """Mirrored-summand decomposition of C_n or f_n.

    ``pairs[i-1]`` is term i plus term n-i for i < n/2; ``middle`` is the
    unpaired term at i = n/2 for even n.
    """

    kind: SeqKind
    n: int
    pairs: Tuple[int, ...]
    middle: Optional[int]

    @property
    def total(self) -> int:
        return sum(self.pairs) + (self.middle or 0)

    @property
    def pairs_even(self) -> bool:
        return all(p % 2 == 0 for p in self.pairs)

    @property
    def parity(self) -> Parity:
        """Parity implied by the split: that of the middle term, else even."""
        return Parity.of(self.middle) if self.middle is not None else Parity.EVEN


def segner_split(
    kind: Union[SeqKind, str], n: int, engine: Optional[SeqEngine] = None
) -> SegnerSplit:
    kind = SeqKind(kind)
    if kind not in (SeqKind.C, SeqKind.F):
        raise ValueError(f"kind must be c or f, got {kind.value}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    engine = engine or default_engine()
    if kind is SeqKind.C:

        def term(i: int) -> int:
            return engine.catalan(i) * engine.catalan(n - i)

    else:

        def term(i: int) -> int:
            return engine.triangle_term(n, i)

    pairs = tuple(term(i) + term(n - i) for i in range(1, (n + 1) // 2))
    middle = term(n // 2) if n % 2 == 0 else None
    return SegnerSplit(kind, n, pairs, middle)
