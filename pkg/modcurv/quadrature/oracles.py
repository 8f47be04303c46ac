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

"""Brute-force integral oracles.

Every closed form in the package has an independent integral here: the
Euler-type representations of the hypergeometric families, the smooth and
oscillatory sides of the contour identity, the Mellin identity and the simplex
integrals defining the spectral families.
"""

import logging
import math
from typing import List, Optional, Sequence

import numpy as np

from modcurv.errors import ArgDomainException, ParamDomainException
from modcurv.hypergeo.gamma import gamma_ratio, log_gamma, rgamma
from modcurv.hypergeo.params import (
    AppellF1Params,
    AppellF2Params,
    EvalResult,
    GaussParams,
    LauricellaParams,
)
from modcurv.quadrature.tanhsinh import (
    DEFAULT_QUAD_CONFIG,
    QuadConfig,
    integrate_cube,
    integrate_half_line,
    integrate_simplex,
    integrate_unit,
)

LOG = logging.getLogger(__name__)

# Degree above which the radial peak at t=1 is unfolded by t = 1 − e^{−s}.
PEAK_SUBSTITUTION_DEGREE = 20.0
# Gauss-Legendre panel for the oscillatory line integral.
OSCILLATORY_PANEL_NODES = 24


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0:
            raise ParamDomainException(f"{name} must be positive, got {value}")


def _quad_result(value: float, error: float, nodes: int) -> EvalResult:
    return EvalResult(
        value=value, est_error=error, nodes_used=nodes, method="quadrature"
    )


def _scale_result(result: EvalResult, factor: float) -> EvalResult:
    return EvalResult(
        value=factor * result.value,
        est_error=abs(factor) * result.est_error,
        nodes_used=result.nodes_used,
        method=result.method,
    )


def _log_power(base: np.ndarray, exponent: float) -> np.ndarray:
    """base**exponent for positive base, with 0**0 == 1."""
    if exponent == 0:
        return np.ones_like(base)
    return np.exp(exponent * np.log(base))


# Euler-type integral representations


def euler_integral_2f1(
    p: GaussParams, z: float, config: Optional[QuadConfig] = None
) -> EvalResult:
    """Γ(c)/(Γ(b)Γ(c−b)) ∫₀¹ t^{b−1}(1−t)^{c−b−1}(1−zt)^{−a} dt, for c > b > 0."""
    p.check()
    if not (p.b > 0 and p.c - p.b > 0):
        raise ParamDomainException("Euler integral needs c > b > 0")
    if z >= 1:
        raise ArgDomainException(f"z = {z} must be < 1")

    def integrand(t, tc):
        # 1 − zt = (1 − t) + (1 − z)t
        return (
            _log_power(t, p.b - 1)
            * _log_power(tc, p.c - p.b - 1)
            * _log_power(tc + (1.0 - z) * t, -p.a)
        )

    value, error, nodes = integrate_unit(integrand, config)
    return _scale_result(
        _quad_result(value, error, nodes), gamma_ratio([p.c], [p.b, p.c - p.b])
    )


def euler_integral_1f1(
    a: float, b: float, z: float, config: Optional[QuadConfig] = None
) -> EvalResult:
    """Γ(b)/(Γ(a)Γ(b−a)) ∫₀¹ e^{zt} t^{a−1}(1−t)^{b−a−1} dt, for b > a > 0.

    This is the standard prefactor; see DESIGN.md for the variant that
    appears in some references.
    """
    if not (a > 0 and b - a > 0):
        raise ParamDomainException("Euler integral needs b > a > 0")

    def integrand(t, tc):
        return np.exp(z * t) * _log_power(t, a - 1) * _log_power(tc, b - a - 1)

    value, error, nodes = integrate_unit(integrand, config)
    prefactor = gamma_ratio([b], [a, b - a])
    return _scale_result(_quad_result(value, error, nodes), prefactor)


def euler_integral_f1(
    p: AppellF1Params, x: float, y: float, config: Optional[QuadConfig] = None
) -> EvalResult:
    """Double integral of F₁ over the 2-simplex (b, b′ > 0, c − b − b′ > 0)."""
    p.check()
    if not p.integral_ok:
        raise ParamDomainException("F1 integral needs b, b' > 0 and c - b - b' > 0")
    if x >= 1 or y >= 1:
        raise ArgDomainException(f"F1 arguments must be < 1, got ({x}, {y})")
    rest_exponent = p.c - p.b - p.b_prime - 1

    def integrand(ts, rest):
        u, v = ts
        # 1 − xu − yv = rest + (1 − x)u + (1 − y)v
        return (
            _log_power(u, p.b - 1)
            * _log_power(v, p.b_prime - 1)
            * _log_power(rest, rest_exponent)
            * _log_power(rest + (1.0 - x) * u + (1.0 - y) * v, -p.a)
        )

    value, error, nodes = integrate_simplex(integrand, 2, config)
    prefactor = gamma_ratio([p.c], [p.b, p.b_prime, p.c - p.b - p.b_prime])
    return _scale_result(_quad_result(value, error, nodes), prefactor)


def euler_integral_f2(
    p: AppellF2Params, x: float, y: float, config: Optional[QuadConfig] = None
) -> EvalResult:
    """Double integral of F₂ over the unit square (b, b′ > 0, c > b, c′ > b′)."""
    p.check()
    if not p.integral_ok:
        raise ParamDomainException("F2 integral needs b, b' > 0, c > b and c' > b'")
    if 1.0 - max(x, 0.0) - max(y, 0.0) <= 0:
        raise ArgDomainException(f"1 - xu - yv vanishes on the square at ({x}, {y})")

    def integrand(xs, xcs):
        u, v = xs
        uc, vc = xcs
        return (
            _log_power(u, p.b - 1)
            * _log_power(v, p.b_prime - 1)
            * _log_power(uc, p.c - p.b - 1)
            * _log_power(vc, p.c_prime - p.b_prime - 1)
            * _log_power(1.0 - x * u - y * v, -p.a)
        )

    value, error, nodes = integrate_cube(integrand, 2, config)
    prefactor = gamma_ratio(
        [p.c, p.c_prime], [p.b, p.b_prime, p.c - p.b, p.c_prime - p.b_prime]
    )
    return _scale_result(_quad_result(value, error, nodes), prefactor)


def euler_integral_fd(
    p: LauricellaParams, xs: Sequence[float], config: Optional[QuadConfig] = None
) -> EvalResult:
    """n-simplex integral of F_D (α_j > 0, c − Σα_j > 0)."""
    p.check()
    if len(xs) != p.n:
        raise ParamDomainException(f"Expected {p.n} arguments, got {len(xs)}")
    if not p.integral_ok:
        raise ParamDomainException("F_D integral needs alphas > 0 and c > sum(alphas)")
    if any(x >= 1 for x in xs):
        raise ArgDomainException(f"F_D arguments must be < 1, got {list(xs)}")
    rest_exponent = p.c - sum(p.alphas) - 1

    def integrand(ts, rest):
        values = _log_power(rest, rest_exponent)
        base = rest
        for t, alpha, x in zip(ts, p.alphas, xs):
            values = values * _log_power(t, alpha - 1)
            base = base + (1.0 - x) * t
        return values * _log_power(base, -p.a)

    value, error, nodes = integrate_simplex(integrand, p.n, config)
    prefactor = gamma_ratio([p.c], [*p.alphas, p.c - sum(p.alphas)])
    return _scale_result(_quad_result(value, error, nodes), prefactor)


# Contour identity and Mellin identity


def contour_ab_rhs(
    A: float, B: float, a: float, b: float, config: Optional[QuadConfig] = None
) -> float:
    """(1/Γ(a)Γ(b)) ∫₀¹ (1−t)^{a−1} t^{b−1} e^{−(A−(A−B)t)} dt."""
    _require_positive(A=A, B=B, a=a, b=b)

    def integrand(t, tc):
        return _log_power(tc, a - 1) * _log_power(t, b - 1) * np.exp(-(A * tc + B * t))

    value, _, _ = integrate_unit(integrand, config)
    return value * rgamma(a) * rgamma(b)


def contour_abc_rhs(
    A: float,
    B: float,
    C: float,
    a: float,
    b: float,
    c: float,
    config: Optional[QuadConfig] = None,
) -> float:
    """Three-resolvent version of contour_ab_rhs, a 2-simplex integral."""
    _require_positive(A=A, B=B, C=C, a=a, b=b, c=c)

    def integrand(ts, rest):
        t, u = ts
        return (
            _log_power(rest, a - 1)
            * _log_power(t, b - 1)
            * _log_power(u, c - 1)
            * np.exp(-(A * rest + B * t + C * u))
        )

    value, _, _ = integrate_simplex(integrand, 2, config)
    return value * rgamma(a) * rgamma(b) * rgamma(c)


def oscillatory_lhs_ab(
    A: float, B: float, a: int, b: int, R: Optional[float] = None
) -> float:
    """Real part of (2π)⁻¹ ∫_{−R}^{R} e^{−ix}(A−ix)^{−a}(B−ix)^{−b} dx.

    The integrand decays like |x|^{−(a+b)}, so the truncation error is of
    order R^{1−(a+b)}. Gauss-Legendre panels of width π follow the
    oscillation.
    """
    _require_positive(A=A, B=B)
    if int(a) != a or int(b) != b or a < 1 or b < 1:
        raise ParamDomainException("a and b must be positive integers")
    if a + b < 2:
        raise ParamDomainException("a + b must be at least 2")
    R = DEFAULT_QUAD_CONFIG.truncation_radius if R is None else R
    _require_positive(R=R)

    nodes, weights = np.polynomial.legendre.leggauss(OSCILLATORY_PANEL_NODES)
    panels = max(1, int(math.ceil(2.0 * R / math.pi)))
    edges = np.linspace(-R, R, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    values = np.exp(-1j * x) * (A - 1j * x) ** (-a) * (B - 1j * x) ** (-b)
    return float(np.real(np.dot(w, values))) / (2.0 * math.pi)


def mellin_lhs(A: float, a: float, config: Optional[QuadConfig] = None) -> float:
    """(1/Γ(a)) ∫₀^∞ s^{a−1} e^{−sA} ds, equal to A^{−a}."""
    _require_positive(A=A, a=a)
    log_norm, _ = log_gamma(a)

    def integrand(s):
        return np.exp((a - 1) * np.log(s) - s * A - log_norm)

    value, _, _ = integrate_half_line(integrand, config)
    return value


def mellin_residual(A: float, a: float, config: Optional[QuadConfig] = None) -> float:
    return abs(mellin_lhs(A, a, config) - A ** (-a))


# Spectral-family oracles


def _degree(alphas: Sequence[float], m: float) -> float:
    """d_m = Σα − 2 + (m − 2)/2."""
    return sum(alphas) - 2.0 + (m - 2.0) / 2.0


def spectral_k_oracle(
    a: int, b: int, y: float, m: float, config: Optional[QuadConfig] = None
) -> float:
    """Radial/contour integral behind K_{a,b}(y; m) for a scalar spectrum.

    Γ(d+1)/(Γ(a)Γ(b)) ∫₀¹ (1−t)^{a−1} t^{b−1} (1 − t(1−y))^{−(d+1)} dt with
    d = a + b − 2 + (m − 2)/2.
    """
    _require_positive(a=a, b=b, y=y, m=m)
    d = _degree([a, b], m)
    if not d + 1 > 0:
        raise ParamDomainException(f"degree d_m + 1 = {d + 1} must be positive")
    prefactor = gamma_ratio([d + 1], [a, b])

    if d > PEAK_SUBSTITUTION_DEGREE and y < 1:
        LOG.debug(f"spectral_k_oracle: t = 1 - exp(-s) for d_m = {d}")

        def on_half_line(s):
            tc = np.exp(-s)
            t = -np.expm1(-s)
            return (
                _log_power(tc, a - 1)
                * _log_power(t, b - 1)
                * _log_power(tc + y * t, -(d + 1))
                * tc
            )

        value, _, _ = integrate_half_line(on_half_line, config)
        return prefactor * value

    def integrand(t, tc):
        return (
            _log_power(tc, a - 1)
            * _log_power(t, b - 1)
            * _log_power(tc + y * t, -(d + 1))
        )

    value, _, _ = integrate_unit(integrand, config)
    return prefactor * value


def spectral_h_oracle(
    a: int,
    b: int,
    c: int,
    y1: float,
    y2: float,
    m: float,
    config: Optional[QuadConfig] = None,
) -> float:
    """2-simplex integral behind H_{a,b,c}(y1, y2; m)."""
    return spectral_n_oracle([a, b, c], [y1, y2], m, config)


def spectral_n_oracle(
    alphas: Sequence[float],
    ys: Sequence[float],
    m: float,
    config: Optional[QuadConfig] = None,
) -> float:
    """n-simplex integral of the n-variable spectral family.

    ``alphas`` has n + 1 entries (the exponent of the remainder first) and
    ``ys`` has n entries; variable j is weighted by y₁⋯y_j.
    """
    if len(alphas) != len(ys) + 1:
        raise ParamDomainException("need exactly one more alpha than y values")
    if not 1 <= len(ys) <= 3:
        raise ParamDomainException("spectral oracle supports 1 to 3 variables")
    if len(ys) == 1:
        return spectral_k_oracle(alphas[0], alphas[1], ys[0], m, config)
    _require_positive(m=m, **{f"alpha{i}": v for i, v in enumerate(alphas)})
    _require_positive(**{f"y{i + 1}": v for i, v in enumerate(ys)})
    d = _degree(alphas, m)
    if not d + 1 > 0:
        raise ParamDomainException(f"degree d_m + 1 = {d + 1} must be positive")
    weights: List[float] = list(np.cumprod(ys))
    prefactor = gamma_ratio([d + 1], list(alphas))

    def integrand(ts, rest):
        values = _log_power(rest, alphas[0] - 1)
        base = rest
        for t, alpha, weight in zip(ts, alphas[1:], weights):
            values = values * _log_power(t, alpha - 1)
            base = base + weight * t
        return values * _log_power(base, -(d + 1))

    value, _, _ = integrate_simplex(integrand, len(ys), config)
    return prefactor * value
