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

import logging

from modcurv.errors import ArgDomainException, NoConvergenceException
from modcurv.hypergeo.params import GaussParams

LOG = logging.getLogger(__name__)

DEFAULT_DEPTH = 40
DEFAULT_TOLERANCE = 1e-12


def cf_coefficient(p: GaussParams, n: int) -> float:
    """n-th partial numerator coefficient k_n of Gauss's continued fraction."""
    a, b, c = p.a, p.b, p.c
    if n % 2:
        j = (n - 1) // 2
        return (a - c - j) * (b + j) / ((c + 2 * j) * (c + 2 * j + 1))
    j = n // 2
    return (b - c - j) * (a + j) / ((c + 2 * j - 1) * (c + 2 * j))


def _backward(p: GaussParams, z: float, depth: int) -> float:
    tail = 1.0
    for n in range(depth, 0, -1):
        if tail == 0.0:
            raise NoConvergenceException(f"continued fraction breaks down at n={n}")
        tail = 1.0 + cf_coefficient(p, n) * z / tail
    if tail == 0.0:
        raise NoConvergenceException("continued fraction breaks down")
    return 1.0 / tail


def gauss_cf_ratio(
    p: GaussParams,
    z: float,
    depth: int = DEFAULT_DEPTH,
    tol: float = DEFAULT_TOLERANCE,
) -> float:
    """₂F₁(a+1, b; c+1; z) / ₂F₁(a, b; c; z) by Gauss's continued fraction.

    1 / (1 + k₁z / (1 + k₂z / (1 + ...))), truncated after ``depth`` levels
    and evaluated from the bottom up. The result at depth − 1 is the
    convergence check.

    :raises: NoConvergenceException if the last two depths differ by more
             than tol (relative, floored at 1)
    """
    p.check()
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    if not -1 < z < 1:
        raise ArgDomainException(f"z must lie in (-1, 1), got {z}")
    if z == 0:
        return 1.0
    value = _backward(p, z, depth)
    previous = _backward(p, z, depth - 1)
    if abs(value - previous) > tol * max(1.0, abs(value)):
        raise NoConvergenceException(
            f"continued fraction not converged at depth {depth}: "
            f"{value!r} vs {previous!r}"
        )
    LOG.debug(f"CF ratio for {p} at z={z}: {value!r}")
    return value
