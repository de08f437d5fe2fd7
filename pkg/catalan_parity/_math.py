"""Math utils."""
import logging

import numpy as np

logger = logging.getLogger(__name__)

# Leading bits kept when a big integer is squeezed into a double mantissa.
_MANTISSA_BITS = 53


def log2_of_int(value: int) -> float:
    """Base-2 logarithm of an arbitrarily large positive integer.

    Uses the bit length plus the leading mantissa bits, so values far beyond
    the double range (f_400 has about 1200 bits) convert without overflow.
    """
    if value <= 0:
        raise ValueError(f"value must be positive, got {value}")
    shift = max(value.bit_length() - _MANTISSA_BITS, 0)
    mantissa = value >> shift
    return float(np.log2(float(mantissa))) + shift


def int_ratio(numerator: int, denominator: int) -> float:
    """``numerator / denominator`` as a double, computed in log space."""
    if denominator <= 0:
        raise ValueError(f"denominator must be positive, got {denominator}")
    if numerator == 0:
        return 0.0
    return float(np.exp2(log2_of_int(numerator) - log2_of_int(denominator)))


def exp2_clipped(log2_value: float) -> float:
    """2**log2_value, saturating to inf instead of warning on overflow."""
    with np.errstate(over="ignore"):
        return float(np.exp2(log2_value))
