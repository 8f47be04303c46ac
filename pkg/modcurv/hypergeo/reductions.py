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

"""Reductions of F₁ and F₂ to finite combinations of ₂F₁."""

import logging
import math

from modcurv.errors import ArgDomainException, ParamDomainException
from modcurv.hypergeo.gamma import pochhammer
from modcurv.hypergeo.params import GaussParams
from modcurv.hypergeo.series import gauss_2f1
from modcurv.utils import is_integer, is_nonpositive_integer

LOG = logging.getLogger(__name__)

CONFLUENT_RADIUS = 1e-8
# Relative to the distance 1 − max(x, y) to the branch point.
NEAR_CONFLUENT_RADIUS = 1e-3
C2_TAYLOR_RADIUS = 1e-2
TAYLOR_EPS = 1e-17
TAYLOR_MAX_TERMS = 40


def _f(a: float, b: float, c: float, z: float) -> float:
    return gauss_2f1(GaussParams(a=a, b=b, c=c), z).value


def _check_args(c: float, x: float, y: float) -> None:
    if is_nonpositive_integer(c):
        raise ParamDomainException(f"c = {c} is a non-positive integer")
    if x >= 1 or y >= 1:
        raise ArgDomainException(f"arguments must be < 1, got ({x}, {y})")


def _scaled_derivative(a: float, c: float, z: float, n: int) -> float:
    """f⁽ⁿ⁾(z)/n! for f(z) = z·₂F₁(a, 1; c; z)."""
    value = z * pochhammer(a, n) / pochhammer(c, n) * _f(a + n, 1 + n, c + n, z)
    if n > 0:
        value += (
            pochhammer(a, n - 1) / pochhammer(c, n - 1) * _f(a + n - 1, n, c + n - 1, z)
        )
    return value


def f1_divided_difference(a: float, c: float, x: float, y: float) -> float:
    """F₁(a; 1, 1; c; x, y) as the divided difference of z·₂F₁(a, 1; c; z).

    F₁(a;1,1;c;x,y) = (x ₂F₁(a,1;c;x) − y ₂F₁(a,1;c;y)) / (x − y).

    Within 1e-8 the confluent limit d/dz[z ₂F₁(a,1;c;z)] at the midpoint is
    returned; closer than 1e-3 (scaled by the distance to z = 1) the odd
    Taylor series of the divided difference about the midpoint is summed.
    """
    _check_args(c, x, y)
    if x == y or abs(x - y) <= CONFLUENT_RADIUS:
        mid = 0.5 * (x + y)
        return _scaled_derivative(a, c, mid, 1)

    reach = min(1.0, 1.0 - max(x, y))
    if abs(x - y) < NEAR_CONFLUENT_RADIUS * reach:
        mid = 0.5 * (x + y)
        h = 0.5 * (x - y)
        total = 0.0
        for k in range(TAYLOR_MAX_TERMS):
            term = _scaled_derivative(a, c, mid, 2 * k + 1) * h ** (2 * k)
            total += term
            if abs(term) <= TAYLOR_EPS * abs(total):
                break
        LOG.debug(f"near-confluent divided difference at ({x}, {y}): {k + 1} terms")
        return total

    return (x * _f(a, 1, c, x) - y * _f(a, 1, c, y)) / (x - y)


def f1_c2_reduction(a: float, b: float, x: float, y: float) -> float:
    """F₁(a; 1, 2; b; x, y) through ₂F₁ values.

    b⁻¹(x−y)⁻² [b x² F(a,1;b;x) + b y² F(a,2;b;y)
                 + x(−a y² F(a+1,2;b+1;y) − 2b y F(a,1;b;y))]

    Near the diagonal the Taylor series in y − x,
    Σₖ (y−x)^k/k! (a)ₖ(2)ₖ/(b)ₖ ₂F₁(a+k, 3+k; b+k; x), replaces it.
    """
    _check_args(b, x, y)
    reach = min(1.0, 1.0 - max(x, y))
    if abs(x - y) < C2_TAYLOR_RADIUS * reach:
        delta = y - x
        total = 0.0
        scale = 1.0
        for k in range(TAYLOR_MAX_TERMS):
            term = scale * _f(a + k, 3 + k, b + k, x)
            total += term
            if abs(term) <= TAYLOR_EPS * abs(total):
                break
            scale *= delta * (a + k) * (2 + k) / ((b + k) * (k + 1))
        return total

    bracket = (
        b * x * x * _f(a, 1, b, x)
        + b * y * y * _f(a, 2, b, y)
        + x * (-a * y * y * _f(a + 1, 2, b + 1, y) - 2 * b * y * _f(a, 1, b, y))
    )
    return bracket / (b * (x - y) ** 2)


def f2_to_2f1(q: int, a: float, p: int, b: float, x: float, y: float) -> float:
    """F₂(q+1; a, p+1; b, p+2; x, y) as a finite sum of ₂F₁ values.

    For integers 0 ≤ p < q and |x| + |y| < 1,

      −p!/(q(1−q)ₚ) · (p+1)/y^{p+1} · ₂F₁(a, q−p; b; x)
      + (p+1)/y^{p+1} Σₖ (−1)^k/((q−k)(1−y)^{q−k}) C(p,k)
            Σₘ (−x)^m C(p−k,m) (a)ₘ/(b)ₘ ₂F₁(a+m, q−k; b+m; x/(1−y))

    with k = 0..p and m = 0..p−k. At y = 0 the function is ₂F₁(q+1, a; b; x).
    """
    if not (is_integer(p) and is_integer(q)) or not 0 <= p < q:
        raise ParamDomainException(f"need integers 0 <= p < q, got p={p}, q={q}")
    if is_nonpositive_integer(b):
        raise ParamDomainException(f"b = {b} is a non-positive integer")
    if not abs(x) + abs(y) < 1:
        raise ArgDomainException(f"need |x| + |y| < 1, got ({x}, {y})")
    p, q = int(round(p)), int(round(q))
    if y == 0:
        return _f(q + 1, a, b, x)

    scale = (p + 1) / y ** (p + 1)
    first = (
        -math.factorial(p) / (q * pochhammer(1 - q, p)) * scale * _f(a, q - p, b, x)
    )
    w = x / (1 - y)
    second = 0.0
    for k in range(p + 1):
        inner = 0.0
        for m in range(p - k + 1):
            inner += (
                (-x) ** m
                * math.comb(p - k, m)
                * pochhammer(a, m)
                / pochhammer(b, m)
                * _f(a + m, q - k, b + m, w)
            )
        second += (-1) ** k / ((q - k) * (1 - y) ** (q - k)) * math.comb(p, k) * inner
    return first + scale * second


def symbolic_2f1_a1c(a: float, c_int: int, z: float) -> float:
    """₂F₁(a, 1; c; z) for a positive integer c, without any series.

    The parameter c is lowered to 1, where ₂F₁(a, 1; 1; z) = (1 − z)^{−a}:

      F(c) = (1−c)ₚ/(a−c+1)ₚ · ((z−1)/z)^p · (1−z)^{−a}
             + z⁻¹ Σₖ (1−c)ₖ/(a−c+1)ₖ · ((z−1)/z)^{k−1},   p = c − 1, k = 1..p

    Small |z| makes the terms large and cancelling; the accuracy is that of
    the cancellation.
    """
    if not is_integer(c_int) or c_int < 1:
        raise ParamDomainException(f"c must be a positive integer, got {c_int}")
    if not -1 < z < 1:
        raise ArgDomainException(f"z must lie in (-1, 1), got {z}")
    if z == 0:
        return 1.0
    c = int(round(c_int))
    w = (z - 1) / z
    coeff = 1.0
    power = 1.0
    partial = 0.0
    for k in range(1, c):
        denominator = a - c + k
        if denominator == 0:
            raise ParamDomainException(
                f"(a-c+1)_k vanishes for a={a}, c={c} at k={k}"
            )
        coeff *= (k - c) / denominator
        partial += coeff * power
        power *= w
    return coeff * power * (1 - z) ** (-a) + partial / z
