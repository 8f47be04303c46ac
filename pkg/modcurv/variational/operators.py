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

"""Scalar forms of the variational operators on spectral functions.

The operators act on functions T of the modular variable:

- [x, y]T, the divided difference
- D(T)(y₁, y₂) = (T(y₁y₂) − T(y₁))/(y₂ − 1)
- 𝓘(T; j)(u) = u^j T(1/u)
- (I⁽¹⁾ + I⁽²⁾)(T; j)(u) = −T(u) − u^j T(1/u)
- II⁽¹⁾ … II⁽⁴⁾(T; j)(u, v)

Removable singularities resolve through the confluent limit of the divided
difference.
"""

import logging

from modcurv.errors import DomainException
from modcurv.hypergeo.params import AppellF1Params
from modcurv.hypergeo.series import appell_f1_value, hyp2f1
from modcurv.spectral.families import SpectralIndex, h_family, k_family
from modcurv.variational.scalar import (
    ScalarFn,
    gauss_a1c_fn,
    k_family_fn,
    power_fn,
)

LOG = logging.getLogger(__name__)

CONFLUENT_RADIUS = 1e-8


def divided_difference(f: ScalarFn, x: float, y: float) -> float:
    """[x, y]f = (f(x) − f(y))/(x − y), or f′ at the midpoint when x ≈ y."""
    if not (x > 0 and y > 0):
        raise DomainException(f"divided difference needs x, y > 0, got ({x}, {y})")
    if abs(x - y) < CONFLUENT_RADIUS:
        return f.derivative(0.5 * (x + y))
    return (f(x) - f(y)) / (x - y)


def d_op(T: ScalarFn, y1: float, y2: float) -> float:
    """D(T)(y₁, y₂), equal to y₁·[y₁y₂, y₁]T and to y₁T′(y₁) at y₂ = 1."""
    if not (y1 > 0 and y2 > 0):
        raise DomainException(f"D(T) needs y1, y2 > 0, got ({y1}, {y2})")
    return y1 * divided_difference(T, y1 * y2, y1)


def inversion_op(T: ScalarFn, j: float) -> ScalarFn:
    """𝓘(T; j): u ↦ u^j T(1/u); an involution for fixed j."""

    def value(u: float) -> float:
        return u**j * T(1 / u)

    def derivative(u: float) -> float:
        return j * u ** (j - 1) * T(1 / u) - u ** (j - 2) * T.derivative(1 / u)

    return ScalarFn(value, derivative, name=f"I({T.name};{j:g})")


def op_I_sum(T: ScalarFn, j: float, u: float) -> float:
    if not u > 0:
        raise DomainException(f"u must be positive, got {u}")
    return -T(u) - u**j * T(1 / u)


def _power_quotient(j: float, x: float) -> float:
    """[1, x](z^j) = (x^j − 1)/(x − 1)."""
    return divided_difference(power_fn(j), 1.0, x)


def _ii1(T: ScalarFn, j: float, u: float, v: float) -> float:
    return T(u) * _power_quotient(j, u * v)


def _ii2(T: ScalarFn, j: float, u: float, v: float) -> float:
    first = u ** (j - 1) * divided_difference(T, 1 / u, v)
    second = u * (u * v) ** (j - 1) * divided_difference(T, 1 / v, u)
    return first - second


def _ii3(T: ScalarFn, j: float, u: float, v: float) -> float:
    return (
        -_power_quotient(j, u) * T(v)
        + v * divided_difference(T, u * v, v)
        - divided_difference(T, u * v, u)
    )


def _ii4(T: ScalarFn, j: float, u: float, v: float) -> float:
    return _ii3(inversion_op(T, j), j, u, v)


II_OPERATORS = {1: _ii1, 2: _ii2, 3: _ii3, 4: _ii4}


def op_II(T: ScalarFn, j: float, u: float, v: float, which: int) -> float:
    """II⁽ʷʰⁱᶜʰ⁾(T; j)(u, v) for which in 1..4.

    II⁽¹⁾ = T(u)·[1, uv](z^j)
    II⁽²⁾ = u^{j−1}[1/u, v]T − u(uv)^{j−1}[1/v, u]T
    II⁽³⁾ = −[1, u](z^j)·T(v) + v[uv, v]T − [uv, u]T
    II⁽⁴⁾ = II⁽³⁾ applied to 𝓘(T; j)
    """
    if which not in II_OPERATORS:
        raise ValueError(f"which must be one of 1..4, got {which}")
    if not (u > 0 and v > 0):
        raise DomainException(f"u, v must be positive, got ({u}, {v})")
    return II_OPERATORS[which](T, j, u, v)


def op_II_sum(T: ScalarFn, j: float, u: float, v: float) -> float:
    return sum(op_II(T, j, u, v, which) for which in II_OPERATORS)


# Closed-form right-hand sides for hypergeometric T


def d_op_2f1_formula(a: float, c: float, y1: float, y2: float) -> float:
    """D(T) for T(z) = ₂F₁(a, 1; c; 1 − z):

    F₁(a; 1, 1; c; 1 − y₁y₂, 1 − y₁) + [y₁, y₁y₂]T − T(y₁y₂)
    """
    T = gauss_a1c_fn(a, c)
    f1 = appell_f1_value(a, 1, 1, c, 1 - y1 * y2, 1 - y1)
    return f1 + divided_difference(T, y1, y1 * y2) - T(y1 * y2)


def d_op_k_formula(idx: SpectralIndex, y1: float, y2: float) -> float:
    """D(K_{a,1}) = H_{a−1,1,1}(y₁, y₂) + [y₁, y₁y₂]K_{a,1} − K_{a,1}(y₁y₂)."""
    if idx.b != 1 or idx.c is not None or idx.a < 2:
        raise DomainException(f"need K_(a,1) with a >= 2, got {idx}")
    K = k_family_fn(idx)
    h = h_family(SpectralIndex(a=idx.a - 1, b=1, c=1, m=idx.m), y1, y2)
    return h + divided_difference(K, y1, y1 * y2) - K(y1 * y2)


def d_op_tilde_formula(a: float, c: float, j: float, y1: float, y2: float) -> float:
    """D(𝓘(T; j)) for T(z) = ₂F₁(a, 1; c; 1 − z), with G(z) = ₂F₁(c−a, 1; c; 1 − z):

    y₁y₂[y₁, y₁y₂](z^{j+1})·G(y₁y₂) + y₁^{j+1}F₁(c−a; 1, 1; c; 1 − y₁y₂, 1 − y₁)
    + y₁^{j+1}[y₁, y₁y₂]G − (y₁y₂)^{j+1}G(y₁y₂)
    """
    AppellF1Params(a=c - a, b=1, b_prime=1, c=c).check()
    G = gauss_a1c_fn(c - a, c)
    s, t = y1, y1 * y2
    return (
        t * divided_difference(power_fn(j + 1), s, t) * G(t)
        + s ** (j + 1) * appell_f1_value(c - a, 1, 1, c, 1 - t, 1 - s)
        + s ** (j + 1) * divided_difference(G, s, t)
        - t ** (j + 1) * G(t)
    )


def inversion_k_family_residual(idx: SpectralIndex, j: float, u: float) -> float:
    """𝓘(K_{a,b}; j)(u) − u^{j+d̃}K_{b,a}(u; m)."""
    K = k_family_fn(idx)
    swapped = SpectralIndex(a=idx.b, b=idx.a, m=idx.m)
    return inversion_op(K, j)(u) - u ** (j + idx.d_tilde) * k_family(swapped, u)


def pfaff_a1c_residual(a: float, c: float, z: float) -> float:
    """₂F₁(a, 1; c; 1 − 1/z) − z·₂F₁(c − a, 1; c; 1 − z)."""
    if not z > 0:
        raise DomainException(f"z must be positive, got {z}")
    return hyp2f1(a, 1, c, 1 - 1 / z) - z * hyp2f1(c - a, 1, c, 1 - z)


def divided_difference_f1_residual(a: float, c: float, s: float, t: float) -> float:
    """[s, t](zT) − F₁(a; 1, 1; c; 1 − t, 1 − s) − [s, t]T for T = ₂F₁(a,1;c;1−z)."""
    T = gauss_a1c_fn(a, c)
    zT = ScalarFn(lambda u: u * T(u), lambda u: T(u) + u * T.derivative(u))
    return (
        divided_difference(zT, s, t)
        - appell_f1_value(a, 1, 1, c, 1 - t, 1 - s)
        - divided_difference(T, s, t)
    )
