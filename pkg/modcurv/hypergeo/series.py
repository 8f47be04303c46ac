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

"""Series evaluators for ₂F₁, ₁F₁, F₁, F₂ and F_D on real arguments.

Single sums run term by term. The multiple sums are folded to one index:
for F₁ and F_D every term factors as g(k₁+…+kₙ)·Πh_j(k_j), so the inner sums
are convolutions of the one-variable coefficient sequences. F₂ does not fold
that way and is summed as a log-domain tensor in row blocks.
"""

import logging
import math
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from modcurv.errors import (
    ArgDomainException,
    NoConvergenceException,
    ParamDomainException,
)
from modcurv.hypergeo.params import (
    AppellF1Params,
    AppellF2Params,
    EvalResult,
    GaussParams,
    LauricellaParams,
)
from modcurv.quadrature import oracles
from modcurv.quadrature.tanhsinh import QuadConfig
from modcurv.utils import is_nonpositive_integer

LOG = logging.getLogger(__name__)

SERIES_EPS = 1e-16
SMALL_TERMS_TO_STOP = 3
MAX_TERMS = 100_000
MAX_TERMS_PER_INDEX = 4_000
FIRST_SIZE = 64
F2_BLOCK_ROWS = 256
MULTI_SERIES_RADIUS = 0.98
PFAFF_THRESHOLD = -0.5
KUMMER_THRESHOLD = -1.0
# Peak term over result beyond which an alternating series is re-done.
CANCELLATION_LIMIT = 1e4
DBL_EPS = float(np.finfo(float).eps)


def _hyp_series(
    numer: Sequence[float],
    denom: Sequence[float],
    z: float,
    max_terms: int = MAX_TERMS,
) -> Tuple[float, float, int, float]:
    """Sum Σₙ Π(numer)ₙ / Π(denom)ₙ · zⁿ/n!.

    :return: (sum, error estimate, terms used, largest term magnitude)
    :raises: NoConvergenceException when max_terms is reached
    """
    term = 1.0
    total = 1.0
    largest = 1.0
    small = 0
    n = 0
    while True:
        if n >= max_terms:
            raise NoConvergenceException(
                f"Series did not converge in {max_terms} terms (z = {z})"
            )
        ratio = z / (n + 1)
        for q in numer:
            ratio *= q + n
        for q in denom:
            ratio /= q + n
        term *= ratio
        n += 1
        if term == 0.0:
            # Terminating series.
            break
        total += term
        largest = max(largest, abs(term))
        if not math.isfinite(total):
            raise NoConvergenceException(f"Series overflowed after {n} terms")
        if abs(term) < SERIES_EPS * abs(total):
            small += 1
            if small >= SMALL_TERMS_TO_STOP:
                break
        else:
            small = 0

    tail = abs(term) / max(1.0 - abs(z), 1e-3) if abs(z) < 1 else abs(term)
    error = tail + DBL_EPS * math.sqrt(n) * largest
    return total, error, n, largest


def hyp2f1_series(p: GaussParams, z: float) -> EvalResult:
    """Plain power series of ₂F₁ for |z| < 1, no transformations."""
    p.check()
    if not abs(z) < 1:
        raise ArgDomainException(f"direct series needs |z| < 1, got {z}")
    if z == 0:
        return EvalResult(value=1.0, terms_used=0)
    value, error, terms, _ = _hyp_series([p.a, p.b], [p.c], z)
    return EvalResult(value=value, est_error=error, terms_used=terms)


def _pfaff(p: GaussParams, z: float) -> EvalResult:
    w = z / (z - 1.0)
    variant_a = (p.a, p.c - p.b)
    variant_b = (p.c - p.a, p.b)
    # Prefer the variant whose numerator parameters are least negative; for
    # w in (0, 1) that keeps the terms of one sign.
    if min(variant_a) >= min(variant_b):
        (alpha, beta), exponent, method = variant_a, p.a, "pfaff_a"
    else:
        (alpha, beta), exponent, method = variant_b, p.b, "pfaff_b"
    value, error, terms, _ = _hyp_series([alpha, beta], [p.c], w)
    prefactor = (1.0 - z) ** (-exponent)
    LOG.debug(f"2F1{p.a, p.b, p.c} at z={z}: {method} with w={w}")
    return EvalResult(
        value=prefactor * value,
        est_error=abs(prefactor) * error,
        terms_used=terms,
        method=method,
    )


def gauss_2f1(p: GaussParams, z: float) -> EvalResult:
    """Gauss hypergeometric function ₂F₁(a, b; c; z) for real z < 1.

    The power series is summed directly on [−0.5, 1); below −0.5 a Pfaff
    transformation maps z to z/(z−1) ∈ (1/3, 1). An alternating direct sum
    whose peak term dwarfs the result is also redone through Pfaff.

    :param p: parameters, c not a non-positive integer
    :param z: real argument below 1
    :raises: ParamDomainException, ArgDomainException, NoConvergenceException
    """
    p.check()
    if not z < 1:
        raise ArgDomainException(f"2F1 is only evaluated for z < 1, got {z}")
    if z == 0:
        return EvalResult(value=1.0, terms_used=0)
    if z < PFAFF_THRESHOLD:
        return _pfaff(p, z)

    value, error, terms, largest = _hyp_series([p.a, p.b], [p.c], z)
    if z < 0 and largest > CANCELLATION_LIMIT * abs(value):
        LOG.debug(f"2F1{p.a, p.b, p.c} at z={z}: cancellation, retry with Pfaff")
        return _pfaff(p, z)
    return EvalResult(value=value, est_error=error, terms_used=terms)


def hyp2f1(a: float, b: float, c: float, z: float) -> float:
    """Value of ₂F₁(a, b; c; z); see gauss_2f1."""
    return gauss_2f1(GaussParams(a=a, b=b, c=c), z).value


def kummer_1f1(a: float, b: float, z: float) -> EvalResult:
    """Confluent hypergeometric function ₁F₁(a; b; z).

    Entire in z. For z < −1 Kummer's transformation
    ₁F₁(a; b; z) = e^z ₁F₁(b−a; b; −z) gives a sum without cancellation.
    """
    if is_nonpositive_integer(b):
        raise ParamDomainException(f"b = {b} is a non-positive integer")
    if z == 0:
        return EvalResult(value=1.0, terms_used=0)
    if z < KUMMER_THRESHOLD:
        value, error, terms, _ = _hyp_series([b - a], [b], -z)
        scale = math.exp(z)
        return EvalResult(
            value=scale * value,
            est_error=scale * error,
            terms_used=terms,
            method="kummer",
        )
    value, error, terms, _ = _hyp_series([a], [b], z)
    return EvalResult(value=value, est_error=error, terms_used=terms)


def hyp1f1(a: float, b: float, z: float) -> float:
    return kummer_1f1(a, b, z).value


def _coefficients(
    numer: Iterable[float], denom: Iterable[float], x: float, n: int, factorial=True
) -> np.ndarray:
    """First n coefficients Π(numer)_k / Π(denom)_k · x^k [/k!]."""
    k = np.arange(n - 1, dtype=float)
    ratio = np.full(n - 1, float(x))
    for q in numer:
        ratio = ratio * (q + k)
    for q in denom:
        ratio = ratio / (q + k)
    if factorial:
        ratio = ratio / (k + 1.0)
    return np.concatenate(([1.0], np.cumprod(ratio)))


def _log_coefficients(
    numer: Iterable[float], denom: Iterable[float], x: float, n: int, factorial=True
) -> Tuple[np.ndarray, np.ndarray]:
    """Log-magnitudes and signs of the coefficients of _coefficients."""
    k = np.arange(n - 1, dtype=float)
    ratio = np.full(n - 1, float(x))
    for q in numer:
        ratio = ratio * (q + k)
    for q in denom:
        ratio = ratio / (q + k)
    if factorial:
        ratio = ratio / (k + 1.0)
    with np.errstate(divide="ignore"):
        logs = np.log(np.abs(ratio))
    return (
        np.concatenate(([0.0], np.cumsum(logs))),
        np.concatenate(([1.0], np.cumprod(np.sign(ratio)))),
    )


def _converged(terms: np.ndarray, total: float) -> bool:
    tail = np.abs(terms[-SMALL_TERMS_TO_STOP:])
    return bool(np.all(tail <= SERIES_EPS * abs(total)))


def _folded_series(
    a: float, c: float, weights: Sequence[Tuple[float, float]]
) -> EvalResult:
    """Σ_K (a)_K/(c)_K · e_K with e_K the K-th coefficient of Π(1−x_j t)^{−α_j}.

    :param weights: (α_j, x_j) pairs
    """
    size = FIRST_SIZE
    while True:
        g = _coefficients([a], [c], 1.0, size, factorial=False)
        e = _coefficients([weights[0][0]], [], weights[0][1], size)
        for alpha, x in weights[1:]:
            e = np.convolve(e, _coefficients([alpha], [], x, size))[:size]
        terms = g * e
        if not np.all(np.isfinite(terms)):
            raise NoConvergenceException("multiple series overflowed")
        total = float(np.sum(terms))
        if _converged(terms, total):
            largest = float(np.max(np.abs(terms)))
            tail = float(np.sum(np.abs(terms[-SMALL_TERMS_TO_STOP:])))
            error = tail + DBL_EPS * math.sqrt(size) * largest
            return EvalResult(value=total, est_error=error, terms_used=size)
        if size >= MAX_TERMS_PER_INDEX:
            raise NoConvergenceException(
                f"multiple series did not converge in {size} terms per index"
            )
        size = min(2 * size, MAX_TERMS_PER_INDEX)


def _relabel(result: EvalResult, prefix: str) -> EvalResult:
    return result.model_copy(update={"method": f"{prefix}{result.method}"})


def appell_f1(
    p: AppellF1Params, x: float, y: float, config: Optional[QuadConfig] = None
) -> EvalResult:
    """Appell F₁(a; b, b′; c; x, y) for real x, y < 1.

    Series when |x| + |y| < 0.98, otherwise (or when the series stalls) the
    2-simplex integral, which needs b, b′ > 0 and c − b − b′ > 0. A vanishing
    argument collapses F₁ to ₂F₁.
    """
    p.check()
    if x >= 1 or y >= 1:
        raise ArgDomainException(f"F1 arguments must be < 1, got ({x}, {y})")
    if x == 0 and y == 0:
        return EvalResult(value=1.0, terms_used=0)
    if x == 0:
        return _relabel(gauss_2f1(GaussParams(a=p.a, b=p.b_prime, c=p.c), y), "2f1-")
    if y == 0:
        return _relabel(gauss_2f1(GaussParams(a=p.a, b=p.b, c=p.c), x), "2f1-")

    if abs(x) + abs(y) < MULTI_SERIES_RADIUS:
        try:
            return _folded_series(p.a, p.c, [(p.b, x), (p.b_prime, y)])
        except NoConvergenceException:
            if not p.integral_ok:
                raise
            LOG.debug(f"F1 series stalled at ({x}, {y}), using quadrature")
    if not p.integral_ok:
        raise ParamDomainException(
            f"F1({x}, {y}) is outside the series region and {p} has no "
            "integral representation"
        )
    return oracles.euler_integral_f1(p, x, y, config)


def appell_f1_value(
    a: float, b: float, b_prime: float, c: float, x: float, y: float
) -> float:
    return appell_f1(AppellF1Params(a=a, b=b, b_prime=b_prime, c=c), x, y).value


def _f2_series(p: AppellF2Params, x: float, y: float) -> EvalResult:
    size = FIRST_SIZE
    while True:
        log_g, sign_g = _log_coefficients([p.a], [], 1.0, 2 * size - 1, factorial=False)
        log_h1, sign_h1 = _log_coefficients([p.b], [p.c], x, size)
        log_h2, sign_h2 = _log_coefficients([p.b_prime], [p.c_prime], y, size)
        cols = np.arange(size)
        total = 0.0
        largest = 0.0
        boundary = 0.0
        for start in range(0, size, F2_BLOCK_ROWS):
            rows = np.arange(start, min(size, start + F2_BLOCK_ROWS))
            diagonal = rows[:, None] + cols[None, :]
            with np.errstate(over="ignore", invalid="ignore"):
                block = (
                    sign_h1[rows][:, None]
                    * sign_h2[None, :]
                    * sign_g[diagonal]
                    * np.exp(log_h1[rows][:, None] + log_h2[None, :] + log_g[diagonal])
                )
            if not np.all(np.isfinite(block)):
                raise NoConvergenceException("F2 series overflowed")
            total += float(np.sum(block))
            magnitude = np.abs(block)
            largest = max(largest, float(np.max(magnitude)))
            edge = (rows[:, None] >= size - SMALL_TERMS_TO_STOP) | (
                cols[None, :] >= size - SMALL_TERMS_TO_STOP
            )
            boundary = max(boundary, float(np.max(np.where(edge, magnitude, 0.0))))
        if boundary <= SERIES_EPS * abs(total):
            error = boundary * size + DBL_EPS * size * largest
            return EvalResult(value=total, est_error=error, terms_used=size)
        if size >= MAX_TERMS_PER_INDEX:
            raise NoConvergenceException(
                f"F2 series did not converge in {size} terms per index"
            )
        size = min(2 * size, MAX_TERMS_PER_INDEX)


def appell_f2(
    p: AppellF2Params, x: float, y: float, config: Optional[QuadConfig] = None
) -> EvalResult:
    """Appell F₂(a; b, b′; c, c′; x, y).

    Series for |x| + |y| < 1, otherwise the unit-square integral
    (b, b′ > 0, c > b, c′ > b′ and 1 − xu − yv > 0 on the square).
    """
    p.check()
    if x == 0 and y == 0:
        return EvalResult(value=1.0, terms_used=0)
    if y == 0:
        return _relabel(gauss_2f1(GaussParams(a=p.a, b=p.b, c=p.c), x), "2f1-")
    if x == 0:
        return _relabel(
            gauss_2f1(GaussParams(a=p.a, b=p.b_prime, c=p.c_prime), y), "2f1-"
        )
    if abs(x) + abs(y) < 1:
        try:
            return _f2_series(p, x, y)
        except NoConvergenceException:
            if not p.integral_ok:
                raise
            LOG.debug(f"F2 series stalled at ({x}, {y}), using quadrature")
    elif not p.integral_ok:
        raise ArgDomainException(
            f"F2 series diverges at ({x}, {y}) and {p} has no integral representation"
        )
    return oracles.euler_integral_f2(p, x, y, config)


def lauricella_fd(
    p: LauricellaParams, xs: Sequence[float], config: Optional[QuadConfig] = None
) -> EvalResult:
    """Lauricella F_D^{(n)}(a; α₁..αₙ; c; x₁..xₙ), n ≤ 4.

    Series when Σ|x_j| < 0.98, otherwise the n-simplex integral. Variables
    at zero drop out before either path is chosen.
    """
    p.check()
    if len(xs) != p.n:
        raise ParamDomainException(f"expected {p.n} arguments, got {len(xs)}")
    if any(x >= 1 for x in xs):
        raise ArgDomainException(f"F_D arguments must be < 1, got {list(xs)}")

    active: List[Tuple[float, float]] = [
        (alpha, x) for alpha, x in zip(p.alphas, xs) if x != 0
    ]
    if not active:
        return EvalResult(value=1.0, terms_used=0)
    if len(active) == 1:
        alpha, x = active[0]
        return _relabel(gauss_2f1(GaussParams(a=p.a, b=alpha, c=p.c), x), "2f1-")

    reduced = LauricellaParams(a=p.a, alphas=[alpha for alpha, _ in active], c=p.c)
    if sum(abs(x) for _, x in active) < MULTI_SERIES_RADIUS:
        try:
            return _folded_series(p.a, p.c, active)
        except NoConvergenceException:
            if not reduced.integral_ok:
                raise
            LOG.debug(f"F_D series stalled at {list(xs)}, using quadrature")
    if not reduced.integral_ok:
        raise ParamDomainException(
            f"F_D{list(xs)} is outside the series region and {p} has no "
            "integral representation"
        )
    return oracles.euler_integral_fd(reduced, [x for _, x in active], config)
