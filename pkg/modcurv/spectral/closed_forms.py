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

"""Elementary closed forms of the curvature spectral functions.

K_Δ, H_Δ and T_Δ are computed both from their hypergeometric definitions and
from elementary closed forms; the two must agree. Within 0.05 of a
removable singularity (s = 1, t = 1 or st = 1) the closed form cancels
badly and the hypergeometric value is returned instead.
"""

import logging
import math
from typing import Callable, List, NamedTuple, Optional

from modcurv.errors import (
    ArgDomainException,
    InternalMismatchException,
    ParamDomainException,
)
from modcurv.hypergeo.gamma import gamma
from modcurv.hypergeo.reductions import f1_c2_reduction, f1_divided_difference
from modcurv.hypergeo.series import hyp2f1
from modcurv.spectral.families import SpectralIndex, h_family, k_family

LOG = logging.getLogger(__name__)

SINGULAR_RADIUS = 0.05
MISMATCH_TOLERANCE = 1e-6
LIMIT_RADIUS = 1e-3


def _check(m: float, *args: float) -> bool:
    """Validate the arguments; False when only the family combination applies.

    The closed forms carry Γ(m/2 − 1) and need m > 2. For 0 < m ≤ 2 the
    hypergeometric combination is still defined and is returned unchecked.
    """
    if not m > 0:
        raise ParamDomainException(f"dimension must be positive, got {m}")
    if any(not x > 0 for x in args):
        raise ArgDomainException(f"arguments must be positive, got {args}")
    if m > 2:
        return True
    LOG.warning(f"m = {m} <= 2: no closed form, returning the family combination")
    return False


def _k(a: int, b: int, m: float, y: float) -> float:
    return k_family(SpectralIndex(a=a, b=b, m=m), y)


def _cross_check(name: str, closed: float, terms: List[float]) -> float:
    combined = math.fsum(terms)
    scale = max([abs(closed)] + [abs(t) for t in terms])
    if abs(closed - combined) > MISMATCH_TOLERANCE * scale:
        raise InternalMismatchException(
            f"{name}: closed form {closed!r} disagrees with hypergeometric "
            f"value {combined!r}"
        )
    return closed


def _near_singular(*distances: float) -> bool:
    return any(abs(d) < SINGULAR_RADIUS for d in distances)


# K_Δ


def k_delta_at_one(m: float) -> float:
    """K_Δ(1; m) = 2Γ(m/2+2)/(3m) − Γ(m/2+1)/2."""
    return 2 * gamma(m / 2 + 2) / (3 * m) - gamma(m / 2 + 1) / 2


def k_delta_terms(s: float, m: float) -> List[float]:
    """The two terms of (4/m) K₃,₁ − K₂,₁."""
    return [4 / m * _k(3, 1, m, s), -_k(2, 1, m, s)]


def k_delta_closed(s: float, m: float) -> float:
    bracket = (m * (s - 1) - 4 * s) + s ** (1 - m / 2) * (m * (s - 1) + 4)
    return (
        -8
        * bracket
        * gamma(m / 2 + 2)
        / ((m - 2) * m**2 * (m + 2) * (s - 1) ** 3)
    )


def k_delta(s: float, m: float) -> float:
    """K_Δ(s; m), the one-variable curvature function.

    :raises: InternalMismatchException if closed form and hypergeometric
             combination disagree
    """
    closed_ok = _check(m, s)
    terms = k_delta_terms(s, m)
    if not closed_ok or _near_singular(s - 1):
        return math.fsum(terms)
    return _cross_check("K_Delta", k_delta_closed(s, m), terms)


# H_Δ


def h_delta_terms(s: float, t: float, m: float) -> List[float]:
    """(4/m+2)H₂,₁,₁ − (4/m)y₁H₂,₂,₁ − (8/m)H₃,₁,₁ at (y₁, y₂) = (s, t).

    The F₁ values come from divided differences of ₂F₁.
    """
    x, y = 1 - s * t, 1 - s
    f211 = f1_divided_difference(m / 2 + 2, 4, x, y)
    f311 = f1_divided_difference(m / 2 + 3, 5, x, y)
    f221 = f1_c2_reduction(m / 2 + 3, 5, x, y)
    g2, g3 = gamma(m / 2 + 2), gamma(m / 2 + 3)
    return [
        2 * (m + 2) * g2 * f211 / (6 * m),
        -2 * g3 * f311 / (6 * m),
        -g3 * s * f221 / (6 * m),
    ]


def h_delta_closed(s: float, t: float, m: float) -> float:
    st = s * t
    bracket = (
        2 * s ** (-m / 2) * (st - 1) ** 3
        + 2 * (t - 1) ** 2 * (m / 2 * (s - 1) * (st - 1) + s * (1 - 2 * s) * t + 1)
        - 2
        * (s - 1) ** 2
        * t
        * st ** (-m / 2)
        * (m / 2 * (t - 1) * (st - 1) + s * t * t + t - 2)
    )
    return (
        2
        / m
        * gamma(m / 2 - 1)
        * bracket
        / ((s - 1) ** 2 * (t - 1) ** 2 * (st - 1) ** 3)
    )


def h_delta(s: float, t: float, m: float) -> float:
    """H_Δ(s, t; m), the two-variable curvature function at y₁ = s, y₂ = t."""
    closed_ok = _check(m, s, t)
    terms = h_delta_terms(s, t, m)
    if not closed_ok or _near_singular(s - 1, t - 1, s * t - 1):
        return math.fsum(terms)
    return _cross_check("H_Delta", h_delta_closed(s, t, m), terms)


# T_Δ


def _power_quotient(s: float, m: float) -> float:
    """(s^{−m/2} − 1)/(s − 1), equal to −m/2 at s = 1."""
    if s == 1:
        return -m / 2
    return math.expm1(-m / 2 * math.log(s)) / (s - 1)


def _power_quotient_derivative(s: float, m: float) -> float:
    a = m / 2
    h = s - 1
    if abs(h) < LIMIT_RADIUS:
        return a * (a + 1) / 2 - a * (a + 1) * (a + 2) / 3 * h
    return (-a * s ** (-a - 1) * h - math.expm1(-a * math.log(s))) / h**2


def t_delta_terms(s: float, m: float) -> List[float]:
    """−K_Δ(1)(s^{−m/2} − 1)/(s − 1) + H_Δ(s, 1/s) with H reduced to K."""
    return [
        -k_delta_at_one(m) * _power_quotient(s, m),
        (4 / m + 2) * _k(3, 1, m, s),
        -4 * s / m * _k(3, 2, m, s),
        -8 / m * _k(4, 1, m, s),
    ]


def t_delta_closed(s: float, m: float) -> float:
    a = m / 2
    h = s - 1
    sa = s**a
    bracket = (
        -3 * a**2 * h**2 * (-1 + s + sa * (1 + s))
        + 2 * a * (h**3 + h * sa * (-2 + s * (7 + s)))
        + a**3 * h**3 * (sa + 1)
        - 12 * s**2 * (sa - 1)
    )
    return gamma(a - 1) / (6 * a) * bracket / (h**4 * sa)


def t_delta(s: float, m: float) -> float:
    """T_Δ(s; m), the function defining the Einstein–Hilbert gradient."""
    closed_ok = _check(m, s)
    terms = t_delta_terms(s, m)
    if not closed_ok or _near_singular(s - 1):
        return math.fsum(terms)
    return _cross_check("T_Delta", t_delta_closed(s, m), terms)


def t_delta_derivative(s: float, m: float) -> float:
    """dT_Δ/ds from dK_{a,b}/dy = −b K_{a,b+1}."""
    _check(m, s)
    return math.fsum(
        [
            -k_delta_at_one(m) * _power_quotient_derivative(s, m),
            -(4 / m + 2) * _k(3, 2, m, s),
            -4 / m * _k(3, 2, m, s),
            8 * s / m * _k(3, 3, m, s),
            8 / m * _k(4, 2, m, s),
        ]
    )


def phi_variants(s: float, m: float, t: Optional[float] = None) -> float:
    """K_Δφ = √s K_Δ, or H_Δφ = √(st) H_Δ when t is given."""
    if t is None:
        return math.sqrt(s) * k_delta(s, m)
    return math.sqrt(s * t) * h_delta(s, t, m)


# Elementary values in dimensions 2 and 3


def log_ratio(z: float) -> float:
    """₂F₁(1, 1; 2; 1 − z) = ln z/(z − 1)."""
    if z == 1:
        return 1.0
    return math.log(z) / (z - 1)


def h211_dim2(s: float, t: float) -> float:
    """H̃₂,₁,₁ in dimension 2 at s = y₁y₂, t = y₁."""
    numerator = (t - 1) ** 2 * math.log(s) + (s - 1) * (
        (t - 1) * (s - t) - (s - 1) * math.log(t)
    )
    return numerator / ((s - 1) ** 2 * (t - 1) ** 2 * (s - t))


def k21_dim3(z: float) -> float:
    r = math.sqrt(z)
    return math.sqrt(math.pi) * (r + 2) / (2 * (r + 1) ** 2 * r)


def k31_dim3(z: float) -> float:
    r = math.sqrt(z)
    return math.sqrt(math.pi) * (3 * z + 9 * r + 8) / (8 * (r + 1) ** 3 * r)


def h111_dim3(x: float, y: float) -> float:
    """H̃₁,₁,₁(1 − x, 1 − y) in dimension 3."""
    p, q = math.sqrt(x), math.sqrt(y)
    return math.sqrt(math.pi) * (p + q + 1) / ((p + 1) * p * (q + 1) * q * (p + q))


def h211_dim3(x: float, y: float) -> float:
    p, q = math.sqrt(x), math.sqrt(y)
    numerator = x * q + p * y + 4 * p * q + 2 * x + 4 * p + 2 * y + 4 * q + 2
    return (
        math.sqrt(math.pi)
        * numerator
        / (2 * (p + 1) ** 2 * p * (q + 1) ** 2 * q * (p + q))
    )


class Display(NamedTuple):
    """An elementary display and the family evaluation it must match."""

    name: str
    closed: Callable[..., float]
    family: Callable[..., float]


SMALL_DIMENSION_DISPLAYS = (
    Display("2F1(1,1;2;1-z)", log_ratio, lambda z: hyp2f1(1, 1, 2, 1 - z)),
    Display(
        "H~211(s,t;2)",
        h211_dim2,
        lambda s, t: h_family(SpectralIndex(a=2, b=1, c=1, m=2), t, s / t),
    ),
    Display(
        "K~21(1-z;3)", k21_dim3, lambda z: k_family(SpectralIndex(a=2, b=1, m=3), z)
    ),
    Display(
        "K~31(1-z;3)", k31_dim3, lambda z: k_family(SpectralIndex(a=3, b=1, m=3), z)
    ),
    Display(
        "H~111(1-x,1-y;3)",
        h111_dim3,
        lambda x, y: h_family(SpectralIndex(a=1, b=1, c=1, m=3), y, x / y),
    ),
    Display(
        "H~211(1-x,1-y;3)",
        h211_dim3,
        lambda x, y: h_family(SpectralIndex(a=2, b=1, c=1, m=3), y, x / y),
    ),
)


def small_dimension_displays() -> List[Display]:
    return list(SMALL_DIMENSION_DISPLAYS)
