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

"""Functional relations between the curvature functions and T_Δ.

With T = T_Δ(·; m) and j = −m/2 − 1 the gradient of the Einstein–Hilbert
action satisfies

  K_Δ(u; m) = c(m)·(I⁽¹⁾ + I⁽²⁾)(T; j)(u)
  H_Δ(u, v; m) = c(m)·(II⁽¹⁾ + … + II⁽⁴⁾)(T; j)(u, v)

for one constant c(m). The constant is fitted at u = 2 and must then
reproduce both relations on the whole grid.
"""

import logging
from typing import Dict, Optional, Sequence, Tuple

from modcurv.errors import FitFailureException, ParamDomainException
from modcurv.jobs.reports import RelationReport, ResidualRow
from modcurv.spectral.closed_forms import h_delta, k_delta
from modcurv.utils import parallel_map, singular_free_pairs, singular_free_points
from modcurv.variational.operators import op_I_sum, op_II_sum
from modcurv.variational.scalar import t_delta_fn

LOG = logging.getLogger(__name__)

REFERENCE_POINT = 2.0
# Below this every side of both relations counts as zero.
DEGENERATE_ATOL = 1e-10
DEFAULT_TOLERANCE = 1e-7
DEFAULT_EXCLUSION_RADIUS = 1e-3


def theorem_exponent(m: float) -> float:
    """j̃ = −m/2 − 1."""
    return -m / 2 - 1


def candidate_constants(m: float) -> Dict[str, float]:
    """Normalisations c(m) may be compared against."""
    return {
        "candidate:1": 1.0,
        "candidate:(2-m)/2": (2 - m) / 2,
        "candidate:2/(2-m)": 2 / (2 - m),
    }


def _grid_label(m: float, us: Sequence[float], pairs: Sequence) -> str:
    return f"m={m:g}; u={','.join(f'{u:g}' for u in us)}; {len(pairs)} (u,v) pairs"


def verify_theorem_4_10(
    m: float,
    grid_u: Sequence[float],
    grid_v: Sequence[float],
    tolerance: float = DEFAULT_TOLERANCE,
    exclusion_radius: float = DEFAULT_EXCLUSION_RADIUS,
    threads: Optional[int] = None,
    strict: bool = True,
) -> RelationReport:
    """Fit c(m) and check both functional relations on the grid.

    Residuals are relative to the largest |K_Δ| (resp. |H_Δ|) on the grid.
    When every side vanishes, as for m = 4, the report passes with c = None.

    :param strict: raise instead of returning a failing report
    :raises: FitFailureException for too few points, a vanishing reference
             value or (strict only) a relation that does not hold
    """
    if not m > 2:
        raise ParamDomainException(f"the functional relations need m > 2, got {m}")
    us = singular_free_points(grid_u, exclusion_radius)
    pairs = singular_free_pairs(grid_u, grid_v, exclusion_radius)
    if len(us) < 2 or not pairs:
        raise FitFailureException(
            f"insufficient points: {len(us)} u values and {len(pairs)} (u, v) "
            "pairs away from the singular loci"
        )

    T = t_delta_fn(m)
    j = theorem_exponent(m)

    def k_sides(u: float) -> Tuple[float, float]:
        return k_delta(u, m), op_I_sum(T, j, u)

    def h_sides(pair: Tuple[float, float]) -> Tuple[float, float]:
        u, v = pair
        return h_delta(u, v, m), op_II_sum(T, j, u, v)

    k_values = parallel_map(k_sides, us, threads)
    h_values = parallel_map(h_sides, pairs, threads)
    k_ref, i_ref = k_sides(REFERENCE_POINT)
    largest = max(abs(x) for sides in k_values + h_values for x in sides)

    fitted: Dict[str, Optional[float]] = dict(candidate_constants(m))
    if abs(i_ref) <= DEGENERATE_ATOL:
        if largest > DEGENERATE_ATOL:
            raise FitFailureException(
                f"m={m:g}: right side vanishes at u={REFERENCE_POINT} but "
                f"K_Delta = {k_ref!r}"
            )
        LOG.debug(f"m={m:g}: all sides vanish, degenerate relation")
        fitted["c"] = None
        rows = [
            ResidualRow.of(f"K u={u:g}", max(abs(lhs), abs(rhs)))
            for u, (lhs, rhs) in zip(us, k_values)
        ] + [
            ResidualRow.of(f"H u={u:g} v={v:g}", max(abs(lhs), abs(rhs)))
            for (u, v), (lhs, rhs) in zip(pairs, h_values)
        ]
    else:
        c = k_ref / i_ref
        fitted["c"] = c
        k_scale = max(abs(lhs) for lhs, _ in k_values) or 1.0
        h_scale = max(abs(lhs) for lhs, _ in h_values) or 1.0
        rows = [
            ResidualRow.of(f"K u={u:g}", (lhs - c * rhs) / k_scale)
            for u, (lhs, rhs) in zip(us, k_values)
        ] + [
            ResidualRow.of(f"H u={u:g} v={v:g}", (lhs - c * rhs) / h_scale)
            for (u, v), (lhs, rhs) in zip(pairs, h_values)
        ]
        LOG.debug(f"m={m:g}: fitted c = {c!r}")

    report = RelationReport.from_rows(
        f"thm4_10[m={m:g}]", _grid_label(m, us, pairs), rows, tolerance, fitted
    )
    if strict and not report.passed:
        raise FitFailureException(
            f"m={m:g}: c(m) is not constant over the grid, max relative "
            f"residual {report.max_abs_residual!r}"
        )
    return report
