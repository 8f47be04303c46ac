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

import math
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from modcurv.errors import ParamDomainException
from modcurv.utils import is_nonpositive_integer

MAX_LAURICELLA_VARIABLES = 4


def _check_denominator(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ParamDomainException(f"{name} = {value} is not finite")
    if is_nonpositive_integer(value):
        raise ParamDomainException(f"{name} = {value} is a non-positive integer")


class GaussParams(BaseModel):
    """Parameters (a, b; c) of the Gauss function ₂F₁."""

    model_config = ConfigDict(frozen=True)

    a: float
    b: float
    c: float

    def check(self) -> None:
        """Raise ParamDomainException when c sits on a pole."""
        for name in ("a", "b"):
            if not math.isfinite(getattr(self, name)):
                raise ParamDomainException(f"{name} is not finite")
        _check_denominator("c", self.c)

    def shifted(self, da: float = 0, db: float = 0, dc: float = 0) -> "GaussParams":
        return GaussParams(a=self.a + da, b=self.b + db, c=self.c + dc)


class AppellF1Params(BaseModel):
    """Parameters (a; b, b′; c) of Appell's F₁."""

    model_config = ConfigDict(frozen=True)

    a: float
    b: float
    b_prime: float
    c: float

    def check(self) -> None:
        for name in ("a", "b", "b_prime"):
            if not math.isfinite(getattr(self, name)):
                raise ParamDomainException(f"{name} is not finite")
        _check_denominator("c", self.c)

    def shifted(
        self, da: float = 0, db: float = 0, dbp: float = 0, dc: float = 0
    ) -> "AppellF1Params":
        return AppellF1Params(
            a=self.a + da, b=self.b + db, b_prime=self.b_prime + dbp, c=self.c + dc
        )

    @property
    def integral_ok(self) -> bool:
        """Whether the 2-simplex integral representation applies."""
        return self.b > 0 and self.b_prime > 0 and self.c - self.b - self.b_prime > 0


class AppellF2Params(BaseModel):
    """Parameters (a; b, b′; c, c′) of Appell's F₂."""

    model_config = ConfigDict(frozen=True)

    a: float
    b: float
    b_prime: float
    c: float
    c_prime: float

    def check(self) -> None:
        for name in ("a", "b", "b_prime"):
            if not math.isfinite(getattr(self, name)):
                raise ParamDomainException(f"{name} is not finite")
        _check_denominator("c", self.c)
        _check_denominator("c_prime", self.c_prime)

    @property
    def integral_ok(self) -> bool:
        """Whether the unit-square integral representation applies."""
        return (
            self.b > 0
            and self.b_prime > 0
            and self.c - self.b > 0
            and self.c_prime - self.b_prime > 0
        )


class LauricellaParams(BaseModel):
    """Parameters (a; α₁..αₙ; c) of the Lauricella function F_D."""

    model_config = ConfigDict(frozen=True)

    a: float
    alphas: List[float]
    c: float

    @property
    def n(self) -> int:
        return len(self.alphas)

    def check(self) -> None:
        if not 1 <= self.n <= MAX_LAURICELLA_VARIABLES:
            raise ParamDomainException(
                f"F_D supports 1 to {MAX_LAURICELLA_VARIABLES} variables, "
                f"got {self.n}"
            )
        if not all(math.isfinite(v) for v in [self.a, *self.alphas]):
            raise ParamDomainException("F_D parameters must be finite")
        _check_denominator("c", self.c)

    @property
    def integral_ok(self) -> bool:
        """Whether the n-simplex integral representation applies."""
        return all(alpha > 0 for alpha in self.alphas) and self.c - sum(self.alphas) > 0


class EvalResult(BaseModel):
    """A converged value with its provenance.

    ``method`` names the evaluation path: ``series``, ``pfaff_a``,
    ``pfaff_b``, ``kummer``, ``quadrature``, ``closed_form`` and so on.
    """

    model_config = ConfigDict(frozen=True)

    value: float = Field(allow_inf_nan=False)
    est_error: float = Field(default=0.0, ge=0, allow_inf_nan=False)
    terms_used: Optional[int] = None
    nodes_used: Optional[int] = None
    method: str = "series"

    def __float__(self) -> float:
        return self.value
