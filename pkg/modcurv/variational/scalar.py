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
import math
from typing import Callable, Optional

from modcurv.errors import DomainException
from modcurv.hypergeo.series import hyp2f1
from modcurv.spectral.closed_forms import t_delta, t_delta_derivative
from modcurv.spectral.families import SpectralIndex, k_family

LOG = logging.getLogger(__name__)

MIN_U_MAX = 8.0
STENCIL_STEP = 1e-3


class ScalarFn:
    """A real function on (0, u_max] with an optional analytic derivative.

    Without an analytic derivative, :meth:`derivative` uses the five-point
    central stencil with the relative step 1e-3·u.
    """

    def __init__(
        self,
        func: Callable[[float], float],
        derivative: Optional[Callable[[float], float]] = None,
        name: str = "T",
        u_max: float = math.inf,
    ):
        if not u_max >= MIN_U_MAX:
            raise ValueError(f"u_max must be at least {MIN_U_MAX}, got {u_max}")
        self.func = func
        self._derivative = derivative
        self.name = name
        self.u_max = u_max

    def _check(self, u: float) -> None:
        if not 0 < u <= self.u_max:
            raise DomainException(
                f"{self.name} is defined on (0, {self.u_max}], got {u}"
            )

    def __call__(self, u: float) -> float:
        self._check(u)
        value = self.func(u)
        if not math.isfinite(value):
            raise DomainException(f"{self.name}({u}) is not finite")
        return value

    @property
    def has_derivative(self) -> bool:
        return self._derivative is not None

    def derivative(self, u: float) -> float:
        self._check(u)
        if self._derivative is not None:
            return self._derivative(u)
        h = STENCIL_STEP * u
        return (
            -self.func(u + 2 * h)
            + 8 * self.func(u + h)
            - 8 * self.func(u - h)
            + self.func(u - 2 * h)
        ) / (12 * h)

    def __repr__(self) -> str:
        return f"ScalarFn({self.name})"


def constant_fn(value: float) -> ScalarFn:
    return ScalarFn(lambda u: value, lambda u: 0.0, name=f"{value:g}")


def power_fn(j: float) -> ScalarFn:
    """z ↦ z^j."""
    return ScalarFn(lambda u: u**j, lambda u: j * u ** (j - 1), name=f"z^{j:g}")


def gauss_a1c_fn(a: float, c: float) -> ScalarFn:
    """z ↦ ₂F₁(a, 1; c; 1 − z)."""
    return ScalarFn(
        lambda u: hyp2f1(a, 1, c, 1 - u),
        lambda u: -a / c * hyp2f1(a + 1, 2, c + 1, 1 - u),
        name=f"2F1({a:g},1;{c:g};1-z)",
    )


def k_family_fn(idx: SpectralIndex) -> ScalarFn:
    """K_{a,b}(·; m), with dK_{a,b}/dy = −b K_{a,b+1}."""
    return ScalarFn(
        lambda u: k_family(idx, u),
        lambda u: -idx.b * k_family(idx.shifted(db=1), u),
        name=f"K{idx}",
    )


def t_delta_fn(m: float) -> ScalarFn:
    """The curvature function T_Δ(·; m) with its analytic derivative."""
    return ScalarFn(
        lambda u: t_delta(u, m),
        lambda u: t_delta_derivative(u, m),
        name=f"T_Delta(m={m:g})",
    )
