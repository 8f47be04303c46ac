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

"""Residuals of the classical identities of ₂F₁ and F₁.

Each function evaluates both sides of an identity and returns the absolute
difference, so callers can compare against their own tolerance.
Derivatives always come from parameter shifts, never finite differences.
"""

import itertools
import logging
from typing import Dict, List

from modcurv.errors import ArgDomainException
from modcurv.hypergeo.params import AppellF1Params, AppellF2Params, GaussParams
from modcurv.hypergeo.series import appell_f1, appell_f2, gauss_2f1, hyp2f1_series

LOG = logging.getLogger(__name__)

PFAFF_EULER_VARIANTS = ("pfaff_a", "pfaff_b", "euler")
CONTIGUOUS_LINES = ("a+", "b+", "c-", "a-", "b-", "c+")


def _f(p: GaussParams, z: float) -> float:
    return gauss_2f1(p, z).value


def _derivative(p: GaussParams, z: float) -> float:
    """dF/dz = (ab/c) F(a+1, b+1; c+1; z)."""
    return p.a * p.b / p.c * _f(p.shifted(1, 1, 1), z)


def z_derivative_lines(p: GaussParams, z: float) -> Dict[str, float]:
    """The six contiguous expressions for z·dF/dz, keyed by shifted parameter."""
    a, b, c = p.a, p.b, p.c
    f = _f(p, z)
    return {
        "a+": a * (_f(p.shifted(da=1), z) - f),
        "b+": b * (_f(p.shifted(db=1), z) - f),
        "c-": (c - 1) * (_f(p.shifted(dc=-1), z) - f),
        "a-": ((c - a) * _f(p.shifted(da=-1), z) + (a - c + b * z) * f) / (1 - z),
        "b-": ((c - b) * _f(p.shifted(db=-1), z) + (b - c + a * z) * f) / (1 - z),
        "c+": z
        * ((c - a) * (c - b) * _f(p.shifted(dc=1), z) + c * (a + b - c) * f)
        / (c * (1 - z)),
    }


def _check_contiguous(p: GaussParams, z: float) -> None:
    p.check()
    p.shifted(dc=-1).check()
    if not -1 < z < 1:
        raise ArgDomainException(f"contiguous relations are checked on (-1, 1), z={z}")


def contiguous_residuals(p: GaussParams, z: float) -> List[float]:
    """The 15 Gauss relations among contiguous functions, as residuals.

    Every pair of the six expressions for z·dF/dz gives one relation; the
    residual is the absolute difference of the pair, ordered as
    itertools.combinations over CONTIGUOUS_LINES.
    """
    _check_contiguous(p, z)
    lines = z_derivative_lines(p, z)
    return [
        abs(lines[left] - lines[right])
        for left, right in itertools.combinations(CONTIGUOUS_LINES, 2)
    ]


def differential_residuals(p: GaussParams, z: float) -> List[float]:
    """Each contiguous line against z·F′ from the parameter-shift derivative."""
    _check_contiguous(p, z)
    target = z * _derivative(p, z)
    lines = z_derivative_lines(p, z)
    return [abs(lines[name] - target) for name in CONTIGUOUS_LINES]


def ode_residual(p: GaussParams, z: float) -> float:
    """z(1−z)F″ + [c − (a+b+1)z]F′ − abF, with shifted-parameter derivatives."""
    p.check()
    a, b, c = p.a, p.b, p.c
    f = _f(p, z)
    f1 = _derivative(p, z)
    f2 = a * (a + 1) * b * (b + 1) / (c * (c + 1)) * _f(p.shifted(2, 2, 2), z)
    return abs(z * (1 - z) * f2 + (c - (a + b + 1) * z) * f1 - a * b * f)


def pfaff_euler_residual(p: GaussParams, z: float, which: str) -> float:
    """|LHS − RHS| of a Pfaff or Euler transformation.

    pfaff_a: F(a,b;c;z) = (1−z)^{−a} F(a, c−b; c; z/(z−1))
    pfaff_b: F(a,b;c;z) = (1−z)^{−b} F(c−a, b; c; z/(z−1))
    euler:   F(a,b;c;z) = (1−z)^{c−a−b} F(c−a, c−b; c; z)

    Both sides are summed as plain power series when their arguments lie in
    (−1, 1); otherwise gauss_2f1 takes over for that side.
    """
    if which not in PFAFF_EULER_VARIANTS:
        raise ValueError(f"unknown transformation {which!r}")
    p.check()
    if not z < 1:
        raise ArgDomainException(f"z = {z} must be < 1")
    w = z / (z - 1.0)
    if not w < 1:
        raise ArgDomainException(f"z/(z-1) = {w} must be < 1")
    if z == 0:
        return 0.0

    def side(q: GaussParams, arg: float) -> float:
        if abs(arg) < 1:
            return hyp2f1_series(q, arg).value
        return gauss_2f1(q, arg).value

    lhs = side(p, z)
    if which == "pfaff_a":
        rhs = (1 - z) ** (-p.a) * side(GaussParams(a=p.a, b=p.c - p.b, c=p.c), w)
    elif which == "pfaff_b":
        rhs = (1 - z) ** (-p.b) * side(GaussParams(a=p.c - p.a, b=p.b, c=p.c), w)
    else:
        rhs = (1 - z) ** (p.c - p.a - p.b) * side(
            GaussParams(a=p.c - p.a, b=p.c - p.b, c=p.c), z
        )
    return abs(lhs - rhs)


def _f1(p: AppellF1Params, x: float, y: float) -> float:
    return appell_f1(p, x, y).value


def f1_partials(p: AppellF1Params, x: float, y: float) -> Dict[str, float]:
    """∂ₓF₁ and ∂_yF₁ from the parameter-shift formulas."""
    return {
        "x": p.a * p.b / p.c * _f1(p.shifted(da=1, db=1, dc=1), x, y),
        "y": p.a * p.b_prime / p.c * _f1(p.shifted(da=1, dbp=1, dc=1), x, y),
    }


def f1_system_residuals(p: AppellF1Params, x: float, y: float) -> Dict[str, float]:
    """Residuals of the first-order shift system satisfied by F₁."""
    p.check()
    p.shifted(dc=-1).check()
    a, b, bp, c = p.a, p.b, p.b_prime, p.c
    f = _f1(p, x, y)
    d = f1_partials(p, x, y)
    euler_op = x * d["x"] + y * d["y"]
    upper = _f1(p.shifted(dc=1), x, y) + (
        a * b * x * _f1(p.shifted(da=1, db=1, dc=2), x, y)
        + a * bp * y * _f1(p.shifted(da=1, dbp=1, dc=2), x, y)
    ) / (c * (c + 1))
    return {
        "a+": abs(_f1(p.shifted(da=1), x, y) - (f + euler_op / a)),
        "b+": abs(_f1(p.shifted(db=1), x, y) - (f + x * d["x"] / b)),
        "b'+": abs(_f1(p.shifted(dbp=1), x, y) - (f + y * d["y"] / bp)),
        "c-": abs(_f1(p.shifted(dc=-1), x, y) - (f + euler_op / (c - 1))),
        "c+": abs(f - upper),
    }


def f1_diagonal_residual(p: AppellF1Params, x: float) -> float:
    """F₁(a; b, b′; c; x, x) = ₂F₁(a, b+b′; c; x)."""
    lhs = _f1(p, x, x)
    rhs = gauss_2f1(GaussParams(a=p.a, b=p.b + p.b_prime, c=p.c), x).value
    return abs(lhs - rhs)


def f1_balanced_residual(
    a: float, b: float, b_prime: float, x: float, y: float
) -> float:
    """F₁(a; b, b′; b+b′; x, y) = (1−y)^{−a} ₂F₁(a, b; b+b′; (x−y)/(1−y))."""
    p = AppellF1Params(a=a, b=b, b_prime=b_prime, c=b + b_prime)
    lhs = _f1(p, x, y)
    rhs = (1 - y) ** (-a) * gauss_2f1(
        GaussParams(a=a, b=b, c=b + b_prime), (x - y) / (1 - y)
    ).value
    return abs(lhs - rhs)


def f1_via_f2_residual(p: AppellF1Params, x: float, y: float) -> float:
    """F₁(a;b,b′;c;x,y) = (x/y)^{b′} F₂(b+b′; a, b′; c, b+b′; x, 1−x/y).

    Valid for x/y > 0 with |x| + |1 − x/y| < 1.
    """
    if y == 0 or x / y <= 0:
        raise ArgDomainException(f"x/y must be positive, got ({x}, {y})")
    w = 1 - x / y
    if not abs(x) + abs(w) < 1:
        raise ArgDomainException(f"F2 series needs |x| + |1 - x/y| < 1 at ({x}, {y})")
    q = AppellF2Params(
        a=p.b + p.b_prime, b=p.a, b_prime=p.b_prime, c=p.c, c_prime=p.b + p.b_prime
    )
    lhs = _f1(p, x, y)
    rhs = (x / y) ** p.b_prime * appell_f2(q, x, w).value
    return abs(lhs - rhs)

