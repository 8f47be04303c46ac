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

"""Double-exponential quadrature on the unit interval, cubes and simplices.

The tanh-sinh substitution x = (1 + tanh(π/2·sinh t))/2 is computed through
the logistic function, x = expit(2q) and 1 − x = expit(−2q) with
q = π/2·sinh t, so both endpoint distances keep full relative precision.
Integrands receive the nodes *and* their complements; power singularities
such as t^{b−1}(1−t)^{c−b−1} are then evaluated without cancellation.
"""

import functools
import logging
import math
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.special import expit

from modcurv.errors import QuadratureException

LOG = logging.getLogger(__name__)

# Abscissae beyond |t| = 6 carry weights below 1e-270.
T_MAX = 6.0
# Half-line rule range; exp(π/2·sinh 4.5) is about 5e30.
T_MAX_HALF_LINE = 4.5
FIRST_LEVEL = 2
# Per-dimension level caps bound the node count of product rules.
DIMENSION_LEVEL_CAP = {1: 14, 2: 7, 3: 5, 4: 4}

CubeIntegrand = Callable[[List[np.ndarray], List[np.ndarray]], np.ndarray]
SimplexIntegrand = Callable[[List[np.ndarray], np.ndarray], np.ndarray]


class QuadConfig(BaseModel):
    """Refinement controls for the tanh-sinh rules."""

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    abs_tol: float = Field(alias="abs-tol", default=1e-12, gt=0)
    rel_tol: float = Field(alias="rel-tol", default=1e-12, gt=0)
    max_levels: int = Field(alias="max-levels", default=10, ge=3, le=14)
    truncation_radius: float = Field(alias="truncation-radius", default=1e4, gt=0)

    def accepts(self, value: float, delta: float) -> bool:
        return delta <= max(self.abs_tol, self.rel_tol * abs(value))


DEFAULT_QUAD_CONFIG = QuadConfig()


@functools.lru_cache(maxsize=32)
def unit_nodes(level: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Nodes, complements and weights of the level-``level`` rule on (0, 1).

    The step is h = 2^−level. Nodes whose weight underflows are dropped.
    """
    h = 2.0**-level
    count = int(round(T_MAX / h))
    t = np.arange(-count, count + 1) * h
    q = 0.5 * math.pi * np.sinh(t)
    x = expit(2.0 * q)
    xc = expit(-2.0 * q)
    w = h * math.pi * np.cosh(t) * x * xc
    keep = (w > 0.0) & (x > 0.0) & (xc > 0.0)
    return x[keep], xc[keep], w[keep]


@functools.lru_cache(maxsize=16)
def half_line_nodes(level: int) -> Tuple[np.ndarray, np.ndarray]:
    """Exp-sinh nodes s = exp(π/2·sinh t) and weights on (0, ∞)."""
    h = 2.0**-level
    count = int(round(T_MAX_HALF_LINE / h))
    t = np.arange(-count, count + 1) * h
    s = np.exp(0.5 * math.pi * np.sinh(t))
    w = h * 0.5 * math.pi * np.cosh(t) * s
    return s, w


def _evaluate(f: CubeIntegrand, xs: List, xcs: List) -> np.ndarray:
    # Products of complements can underflow to zero deep in a corner; the
    # weights there are negligible, so non-finite samples count as zero.
    with np.errstate(all="ignore"):
        values = np.asarray(f(xs, xcs), dtype=float)
    finite = np.isfinite(values)
    replaced = finite.size - int(np.count_nonzero(finite))
    if replaced:
        LOG.debug(f"{replaced} of {finite.size} samples not finite, counted as zero")
    return np.where(finite, values, 0.0)


def _cube_rule(f: CubeIntegrand, dim: int, level: int) -> Tuple[float, int]:
    x, xc, w = unit_nodes(level)
    if dim == 1:
        return float(np.dot(w, _evaluate(f, [x], [xc]))), len(x)

    # Loop over the first coordinate; the remaining ones form a flat grid.
    grids_x = [g.ravel() for g in np.meshgrid(*([x] * (dim - 1)), indexing="ij")]
    grids_xc = [g.ravel() for g in np.meshgrid(*([xc] * (dim - 1)), indexing="ij")]
    inner_w = np.ones_like(grids_x[0])
    for g in np.meshgrid(*([w] * (dim - 1)), indexing="ij"):
        inner_w = inner_w * g.ravel()

    total = 0.0
    for x1, xc1, w1 in zip(x, xc, w):
        values = _evaluate(f, [x1, *grids_x], [xc1, *grids_xc])
        values = np.broadcast_to(values, inner_w.shape)
        total += w1 * float(np.dot(inner_w, values))
    return total, len(x) ** dim


def _refine(
    rule: Callable[[int], Tuple[float, int]], cap: int, config: QuadConfig
) -> Tuple[float, float, int]:
    previous = None
    for level in range(FIRST_LEVEL, cap + 1):
        value, nodes = rule(level)
        if not math.isfinite(value):
            raise QuadratureException(f"Non-finite quadrature sum at level {level}")
        if previous is not None:
            delta = abs(value - previous)
            LOG.debug(f"level {level}: {value!r} (delta {delta:.3e}, {nodes} nodes)")
            if config.accepts(value, delta):
                return value, delta, nodes
        previous = value
    raise QuadratureException(
        f"Quadrature did not reach tolerance within {cap} levels "
        f"(last estimate {previous!r})"
    )


def integrate_cube(
    f: CubeIntegrand, dim: int, config: Optional[QuadConfig] = None
) -> Tuple[float, float, int]:
    """Integrate over the unit cube (0, 1)^dim by a tanh-sinh product rule.

    :param f: callable taking lists of coordinates and complements
              (arrays that broadcast against each other) and returning values
    :param dim: dimension, 1 to 4
    :param config: refinement controls
    :return: (value, error estimate, number of nodes of the final level)
    :raises: QuadratureException if refinement stalls
    """
    config = config or DEFAULT_QUAD_CONFIG
    if dim not in DIMENSION_LEVEL_CAP:
        raise QuadratureException(f"Unsupported dimension {dim}")
    cap = min(config.max_levels, DIMENSION_LEVEL_CAP[dim])
    return _refine(lambda level: _cube_rule(f, dim, level), cap, config)


def integrate_unit(
    f: Callable[[np.ndarray, np.ndarray], np.ndarray],
    config: Optional[QuadConfig] = None,
) -> Tuple[float, float, int]:
    """Integrate f(x, 1 − x) over (0, 1)."""
    return integrate_cube(lambda xs, xcs: f(xs[0], xcs[0]), 1, config)


def integrate_simplex(
    f: SimplexIntegrand, dim: int, config: Optional[QuadConfig] = None
) -> Tuple[float, float, int]:
    """Integrate over the simplex {t_j > 0, Σ t_j < 1} of dimension ``dim``.

    The cube is mapped by stick breaking, t₁ = s₁, t₂ = (1−s₁)s₂, ..., and
    the integrand receives the coordinates together with the remainder
    1 − Σ t_j, both formed as products so no difference is ever taken.
    """

    def on_cube(xs: Sequence[np.ndarray], xcs: Sequence[np.ndarray]) -> np.ndarray:
        ts = []
        prefix = 1.0
        jacobian = 1.0
        for s, sc in zip(xs, xcs):
            ts.append(prefix * s)
            jacobian = jacobian * prefix
            prefix = prefix * sc
        return f(ts, prefix) * jacobian

    return integrate_cube(on_cube, dim, config)


def integrate_half_line(
    f: Callable[[np.ndarray], np.ndarray], config: Optional[QuadConfig] = None
) -> Tuple[float, float, int]:
    """Integrate f over (0, ∞) with the exp-sinh rule."""
    config = config or DEFAULT_QUAD_CONFIG

    def rule(level: int) -> Tuple[float, int]:
        s, w = half_line_nodes(level)
        with np.errstate(over="ignore", under="ignore"):
            values = f(s)
        values = np.where(np.isfinite(values), values, 0.0)
        return float(np.dot(w, values)), len(s)

    return _refine(rule, min(config.max_levels, DIMENSION_LEVEL_CAP[1]), config)
