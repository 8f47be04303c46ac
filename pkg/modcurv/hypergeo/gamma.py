# Copyright (c) 2023 Canonical Ltd.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
# implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Gamma function and Pochhammer symbols on the real line.

Lanczos approximation with g=7 and nine coefficients, evaluated in log form
so that ratios of large gamma values never overflow. Negative arguments go
through the reflection formula and carry an explicit sign.
"""

import logging
import math
from typing import Iterable, Tuple

from modcurv.errors import ParamDomainException
from modcurv.utils import is_nonpositive_integer

LOG = logging.getLogger(__name__)

LANCZOS_G = 7
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
# Pochhammer symbols up to this length are plain products.
DIRECT_PRODUCT_MAX = 64


def log_gamma(x: float) -> Tuple[float, float]:
    """Return (log|Γ(x)|, sign Γ(x)).

    :param x: real argument, not a non-positive integer
    :raises: ParamDomainException on a pole
    """
    if is_nonpositive_integer(x):
        raise ParamDomainException(f"Gamma function has a pole at {x}")
    if x < 0.5:
        # Γ(x)Γ(1−x) = π / sin(πx), with Γ(1−x) > 0 here.
        s = math.sin(math.pi * x)
        reflected, _ = log_gamma(1.0 - x)
        return math.log(math.pi / abs(s)) - reflected, math.copysign(1.0, s)

    x -= 1.0
    acc = LANCZOS_COEFFICIENTS[0]
    for i, coeff in enumerate(LANCZOS_COEFFICIENTS[1:], start=1):
        acc += coeff / (x + i)
    t = x + LANCZOS_G + 0.5
    return HALF_LOG_TWO_PI + (x + 0.5) * math.log(t) - t + math.log(acc), 1.0


def gamma(x: float) -> float:
    """Γ(x) for real x away from the poles."""
    value, sign = log_gamma(x)
    return sign * math.exp(value)


def rgamma(x: float) -> float:
    """1/Γ(x); zero on the poles."""
    if is_nonpositive_integer(x):
        return 0.0
    value, sign = log_gamma(x)
    return sign * math.exp(-value)


def pochhammer(q: float, n: int) -> float:
    """Rising factorial (q)_n = Γ(q+n)/Γ(q).

    Short products and non-positive integer q are multiplied out directly so
    that terminating cases give an exact zero; longer ones go through
    log-gamma with sign tracking.

    :param q: real base
    :param n: non-negative integer length
    :rtype: float
    """
    if n < 0:
        raise ParamDomainException(f"Pochhammer length must be >= 0, got {n}")
    if n <= DIRECT_PRODUCT_MAX or is_nonpositive_integer(q):
        prod = 1.0
        for k in range(n):
            prod *= q + k
            if prod == 0.0:
                break
        return prod
    top, top_sign = log_gamma(q + n)
    bottom, bottom_sign = log_gamma(q)
    return top_sign * bottom_sign * math.exp(top - bottom)


def gamma_ratio(numerator: Iterable[float], denominator: Iterable[float]) -> float:
    """ΠΓ(numerator) / ΠΓ(denominator), computed in log space.

    A pole in the denominator makes the ratio vanish; a pole in the
    numerator raises ParamDomainException.
    """
    log_value = 0.0
    sign = 1.0
    for x in numerator:
        value, s = log_gamma(x)
        log_value += value
        sign *= s
    for x in denominator:
        if is_nonpositive_integer(x):
            return 0.0
        value, s = log_gamma(x)
        log_value -= value
        sign *= s
    return sign * math.exp(log_value)
