"""Enumerations and configuration shared across the sequence modules."""

import os
from enum import Enum


class SeqKind(str, Enum):
    """Enumerator of the integer sequences the engine can compute.

    Values are the lowercase tags used on the command line and in JSON output.
    """

    C = "c"
    G = "g"
    F = "f"
    T = "t"
    A = "a"
    AF = "af"
    AT = "at"

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    SeqKind.C: "C_n",
    SeqKind.G: "g_n",
    SeqKind.F: "f_n",
    SeqKind.T: "t_n",
    SeqKind.A: "a_n",
    SeqKind.AF: "a_n(f_n)",
    SeqKind.AT: "a_n(t_n)",
}


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, value: int) -> "Parity":
        return cls.ODD if value & 1 else cls.EVEN


class FruitKind(str, Enum):
    """Fruit sequence hung on the sub-branches of a Catalan tree."""

    F = "f"
    T = "t"
    CUSTOM = "custom"


class CensusMode(str, Enum):
    """How the oracle obtains per-tree row counts."""

    TRUTH_TABLE = "truth_table"
    PRODUCT = "product"


class OutputFormat(str, Enum):
    TABLE = "table"
    CSV = "csv"
    JSON = "json"
    MARKDOWN = "markdown"
    DOT = "dot"
    TEXT = "text"


MAX_N_ENV = "CATALAN_MAX_N"

TRUTH_TABLE_CAP = 10
TRUTH_TABLE_HARD_CAP = 20
PRODUCT_CAP = 14


def _max_n_override() -> int:
    raw = os.environ.get(MAX_N_ENV)
    if raw is None or raw.strip() == "":
        return 0
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_N_ENV} must be an integer, got {raw!r}")
    if value < 0:
        raise ValueError(f"{MAX_N_ENV} must be >= 0, got {value}")
    return value


def enumeration_cap(mode: CensusMode) -> int:
    """Largest n the oracle will enumerate in the given mode.

    Defaults are 10 for truth tables and 14 for the product rule.
    ``CATALAN_MAX_N`` can raise either cap; truth tables never go past 20
    variables.
    """
    override = _max_n_override()
    if mode is CensusMode.TRUTH_TABLE:
        return min(max(TRUTH_TABLE_CAP, override), TRUTH_TABLE_HARD_CAP)
    return max(PRODUCT_CAP, override)


def check_cap(n: int, mode: CensusMode) -> None:
    cap = enumeration_cap(mode)
    if n > cap:
        raise ValueError(
            f"n={n} exceeds the {mode.value} enumeration cap of {cap}; "
            f"set {MAX_N_ENV} to raise it"
        )
