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

"""Spectral functions K, H and their n-variable generalisation.

K_{a,b}(y; m) = Γ(d̃)/Γ(a+b) · ₂F₁(d̃, b; a+b; 1−y)
H_{a,b,c}(y₁, y₂; m) = Γ(d̃)/Γ(a+b+c) · F₁(d̃; c, b; a+b+c; 1−y₁y₂, 1−y₁)

with d̃ = a + b (+ c) + m/2 − 2. The tilde variants take u = 1 − y (and
v) directly. The overall Vol(S^{m−1})/2 normalisation is not multiplied in.
"""

import logging
import math
from typing import Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from modcurv.errors import ArgDomainException, ParamDomainException
from modcurv.hypergeo.contfrac import DEFAULT_DEPTH, gauss_cf_ratio
from modcurv.hypergeo.gamma import gamma_ratio, pochhammer
from modcurv.hypergeo.params import (
    AppellF1Params,
    GaussParams,
    LauricellaParams,
)
from modcurv.hypergeo.series import appell_f1, gauss_2f1, lauricella_fd
from modcurv.utils import is_integer

LOG = logging.getLogger(__name__)


class SpectralIndex(BaseModel):
    """Indices (a, b[, c]) and dimension m of a spectral function."""

    model_config = ConfigDict(frozen=True)

    a: int = Field(gt=0)
    b: int = Field(gt=0)
    c: Optional[int] = Field(default=None, gt=0)
    m: float = Field(gt=0)

    @property
    def alphas(self) -> List[int]:
        if self.c is None:
            return [self.a, self.b]
        return [self.a, self.b, self.c]

    @property
    def weight(self) -> int:
        """a + b (+ c)."""
        return sum(self.alphas)

    @property
    def d_tilde(self) -> float:
        return self.weight + self.m / 2 - 2

    def check(self) -> None:
        if not self.d_tilde > 0:
            raise ParamDomainException(
                f"d̃ = {self.d_tilde} must be positive for {self}"
            )

    def shifted(
        self, da: int = 0, db: int = 0, dc: int = 0, dm: float = 0
    ) -> "SpectralIndex":
        c = None if self.c is None else self.c + dc
        return SpectralIndex(a=self.a + da, b=self.b + db, c=c, m=self.m + dm)

    def __str__(self) -> str:
        indices = ",".join(str(i) for i in self.alphas)
        return f"({indices}; m={self.m:g})"


class ModularPoint(BaseModel):
    """Scalar stand-ins y₁ (and y₂) for the modular operators."""

    model_config = ConfigDict(frozen=True)

    y1: float = Field(gt=0)
    y2: Optional[float] = Field(default=None, gt=0)

    @property
    def product(self) -> float:
        return self.y1 if self.y2 is None else self.y1 * self.y2


def _prefactor(idx: SpectralIndex) -> float:
    return gamma_ratio([idx.d_tilde], [idx.weight])


def _require_k(idx: SpectralIndex) -> None:
    idx.check()
    if idx.c is not None:
        raise ParamDomainException(f"K family takes two indices, got {idx}")


def _require_h(idx: SpectralIndex) -> None:
    idx.check()
    if idx.c is None:
        raise ParamDomainException(f"H family takes three indices, got {idx}")


def k_tilde(idx: SpectralIndex, u: float) -> float:
    """K̃_{a,b}(u; m) = K_{a,b}(1 − u; m), u < 1."""
    _require_k(idx)
    if not u < 1:
        raise ArgDomainException(f"K̃ needs u < 1, got {u}")
    p = GaussParams(a=idx.d_tilde, b=idx.b, c=idx.weight)
    return _prefactor(idx) * gauss_2f1(p, u).value


def h_tilde(idx: SpectralIndex, u: float, v: float) -> float:
    """H̃_{a,b,c}(u, v; m) = Γ(d̃)/Γ(a+b+c)·F₁(d̃; c, b; a+b+c; u, v)."""
    _require_h(idx)
    if not (u < 1 and v < 1):
        raise ArgDomainException(f"H̃ needs u, v < 1, got ({u}, {v})")
    p = AppellF1Params(a=idx.d_tilde, b=idx.c, b_prime=idx.b, c=idx.weight)
    return _prefactor(idx) * appell_f1(p, u, v).value


def tilde_variants(idx: SpectralIndex, u: float, v: Optional[float] = None) -> float:
    if v is None:
        return k_tilde(idx, u)
    return h_tilde(idx, u, v)


def k_family(idx: SpectralIndex, y: float) -> float:
    if not y > 0:
        raise ArgDomainException(f"K family needs y > 0, got {y}")
    return k_tilde(idx, 1 - y)


def h_family(idx: SpectralIndex, y1: float, y2: float) -> float:
    """H_{a,b,c}(y₁, y₂; m); at y₂ = 1/y₁ this is K_{a+c,b}(y₁; m)."""
    if not (y1 > 0 and y2 > 0):
        raise ArgDomainException(f"H family needs y1, y2 > 0, got ({y1}, {y2})")
    return h_tilde(idx, 1 - y1 * y2, 1 - y1)


def n_family(alphas: Sequence[int], ys: Sequence[float], m: float) -> float:
    """The n-variable spectral function through Lauricella's F_D.

    Γ(d̃)/Γ(Σα) · F_D(d̃; α₂, …, α_{n+1}; Σα; 1−y₁, …, 1−y₁⋯yₙ), where α_{j+1}
    is paired with 1 − y₁⋯y_j and d̃ = Σα + m/2 − 2.
    """
    if len(alphas) != len(ys) + 1:
        raise ParamDomainException("need exactly one more alpha than y values")
    if any(alpha <= 0 for alpha in alphas):
        raise ParamDomainException(f"indices must be positive, got {list(alphas)}")
    if any(not y > 0 for y in ys):
        raise ArgDomainException(f"arguments must be positive, got {list(ys)}")
    weight = sum(alphas)
    d_tilde = weight + m / 2 - 2
    if not d_tilde > 0:
        raise ParamDomainException(f"d̃ = {d_tilde} must be positive")
    xs = [1 - float(w) for w in np.cumprod(ys)]
    p = LauricellaParams(a=d_tilde, alphas=list(alphas[1:]), c=weight)
    return gamma_ratio([d_tilde], [weight]) * lauricella_fd(p, xs).value


def dimension_shift_residuals(
    idx: SpectralIndex, u: float, v: Optional[float] = None
) -> Dict[str, float]:
    """Residuals of the m → m+2 relations and the index-shift relations.

    Derivatives come from ∂ᵤK̃_{a,b} = b K̃_{a,b+1}, ∂ᵤH̃ = c H̃_{c+1} and
    ∂ᵥH̃ = b H̃_{b+1}. For K̃:

    - ``m_shift``: K̃(m+2) = (d̃ + u∂ᵤ) K̃
    - ``recurrence``: K̃(m+2) = a K̃_{a+1,b} + b K̃_{a,b+1}
    - ``b_shift``: K̃_{a,b+1} = K̃_{a+1,b} + u K̃_{a+1,b+1}

    H̃ gets the analogues with both variables plus ``c_shift``.
    """
    if not -1 < u < 1 or (v is not None and not -1 < v < 1):
        raise ArgDomainException(f"arguments must lie in (-1, 1), got ({u}, {v})")
    a, b, c = idx.a, idx.b, idx.c
    if v is None:
        _require_k(idx)
        value = k_tilde(idx, u)
        up_m = k_tilde(idx.shifted(dm=2), u)
        up_a = k_tilde(idx.shifted(da=1), u)
        up_b = k_tilde(idx.shifted(db=1), u)
        up_ab = k_tilde(idx.shifted(da=1, db=1), u)
        return {
            "m_shift": up_m - (idx.d_tilde * value + u * b * up_b),
            "recurrence": up_m - (a * up_a + b * up_b),
            "b_shift": up_b - (up_a + u * up_ab),
        }

    _require_h(idx)
    value = h_tilde(idx, u, v)
    up_m = h_tilde(idx.shifted(dm=2), u, v)
    up_a = h_tilde(idx.shifted(da=1), u, v)
    up_b = h_tilde(idx.shifted(db=1), u, v)
    up_c = h_tilde(idx.shifted(dc=1), u, v)
    up_ab = h_tilde(idx.shifted(da=1, db=1), u, v)
    up_ac = h_tilde(idx.shifted(da=1, dc=1), u, v)
    return {
        "m_shift": up_m - (idx.d_tilde * value + u * c * up_c + v * b * up_b),
        "recurrence": up_m - (a * up_a + b * up_b + c * up_c),
        "b_shift": up_b - (up_a + v * up_ab),
        "c_shift": up_c - (up_a + u * up_ac),
    }


def jet_order(m: float) -> int:
    """j_m = (m − 4)/2 for even m ≥ 4."""
    if not (is_integer(m) and round(m) % 2 == 0 and m >= 4):
        raise ParamDomainException(f"jets need an even dimension m >= 4, got {m}")
    return (int(round(m)) - 4) // 2


def jet_formula(idx: SpectralIndex, u: float, v: Optional[float] = None) -> float:
    """K̃ or H̃ in even dimension as a jet at z = 0.

    The j_m-th z-derivative of (1−z)^{−a}(1−u−z)^{−b} at zero, or of
    (1−z)^{−a}(1−v−z)^{−b}(1−u−z)^{−c} for H̃, expanded by the Leibniz rule.
    """
    j = jet_order(idx.m)
    if not u < 1 or (v is not None and not v < 1):
        raise ArgDomainException(f"jets need arguments < 1, got ({u}, {v})")
    a, b, c = idx.a, idx.b, idx.c
    if v is None:
        if c is not None:
            raise ParamDomainException(f"K jet takes two indices, got {idx}")
        return sum(
            math.comb(j, i)
            * pochhammer(a, i)
            * pochhammer(b, j - i)
            * (1 - u) ** (-b - (j - i))
            for i in range(j + 1)
        )

    if c is None:
        raise ParamDomainException(f"H jet takes three indices, got {idx}")
    total = 0.0
    for i in range(j + 1):
        for k in range(j - i + 1):
            n = j - i - k
            multinomial = math.factorial(j) // (
                math.factorial(i) * math.factorial(k) * math.factorial(n)
            )
            total += (
                multinomial
                * pochhammer(a, i)
                * pochhammer(b, k)
                * pochhammer(c, n)
                * (1 - v) ** (-b - k)
                * (1 - u) ** (-c - n)
            )
    return total


def spectral_cf_ratio(
    idx: SpectralIndex, u: float, depth: int = DEFAULT_DEPTH
) -> float:
    """(a+b)/d̃ · K̃_{a+1,b}(u)/K̃_{a,b}(u) by Gauss's continued fraction."""
    _require_k(idx)
    p = GaussParams(a=idx.d_tilde, b=idx.b, c=idx.weight)
    return gauss_cf_ratio(p, u, depth=depth)
