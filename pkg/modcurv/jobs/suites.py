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

"""Verification suites: grids of relation checks built from Settings."""

import functools
import inspect
import itertools
import logging
import math
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from rich.status import Status

from modcurv.config import Settings
from modcurv.hypergeo.contfrac import gauss_cf_ratio
from modcurv.hypergeo.gamma import gamma
from modcurv.hypergeo.params import (
    AppellF1Params,
    AppellF2Params,
    GaussParams,
    LauricellaParams,
)
from modcurv.hypergeo.reductions import (
    f1_c2_reduction,
    f1_divided_difference,
    f2_to_2f1,
    symbolic_2f1_a1c,
)
from modcurv.hypergeo.relations import (
    CONTIGUOUS_LINES,
    PFAFF_EULER_VARIANTS,
    contiguous_residuals,
    differential_residuals,
    f1_balanced_residual,
    f1_diagonal_residual,
    f1_system_residuals,
    f1_via_f2_residual,
    ode_residual,
    pfaff_euler_residual,
)
from modcurv.hypergeo.series import (
    appell_f1,
    appell_f2,
    gauss_2f1,
    hyp1f1,
    hyp2f1,
    kummer_1f1,
    lauricella_fd,
)
from modcurv.jobs.checks import Check, RelationCheck, ReportCheck
from modcurv.jobs.common import BaseStep, Result, ResultType
from modcurv.jobs.reports import RelationReport, ResidualRow
from modcurv.quadrature.oracles import (
    contour_ab_rhs,
    contour_abc_rhs,
    euler_integral_1f1,
    euler_integral_2f1,
    euler_integral_f1,
    euler_integral_f2,
    euler_integral_fd,
    mellin_residual,
    oscillatory_lhs_ab,
    spectral_h_oracle,
    spectral_k_oracle,
    spectral_n_oracle,
)
from modcurv.spectral.closed_forms import (
    h_delta_closed,
    h_delta_terms,
    k_delta,
    k_delta_at_one,
    k_delta_closed,
    k_delta_terms,
    small_dimension_displays,
    t_delta,
    t_delta_closed,
    t_delta_derivative,
    t_delta_terms,
)
from modcurv.spectral.families import (
    SpectralIndex,
    dimension_shift_residuals,
    h_family,
    h_tilde,
    jet_formula,
    k_family,
    k_tilde,
    n_family,
    spectral_cf_ratio,
)
from modcurv.symbols.decompose import (
    derive_decomposition,
    expected_decomposition,
    numeric_crosscheck,
)
from modcurv.utils import get_thread_count
from modcurv.variational.operators import (
    d_op,
    d_op_2f1_formula,
    d_op_k_formula,
    d_op_tilde_formula,
    divided_difference_f1_residual,
    inversion_k_family_residual,
    inversion_op,
    pfaff_a1c_residual,
)
from modcurv.variational.relations import verify_theorem_4_10
from modcurv.variational.scalar import ScalarFn, gauss_a1c_fn, k_family_fn

LOG = logging.getLogger(__name__)

SUITES = (
    "hypergeo",
    "oracles",
    "spectral",
    "recurrences",
    "jets",
    "variational",
    "thm4_10",
)
ALL_SUITES = "all"

GAUSS_PARAMS = [
    GaussParams(a=0.5, b=1.5, c=2.5),
    GaussParams(a=1.0, b=1.0, c=2.0),
    GaussParams(a=2.5, b=1.0, c=4.0),
    GaussParams(a=-0.5, b=1.25, c=3.5),
    GaussParams(a=1.5, b=2.0, c=3.7),
    GaussParams(a=0.3, b=0.7, c=1.6),
]
F1_PARAMS = [
    AppellF1Params(a=1.5, b=0.5, b_prime=1.0, c=3.0),
    AppellF1Params(a=2.0, b=1.0, b_prime=1.0, c=3.5),
    AppellF1Params(a=0.5, b=1.0, b_prime=0.5, c=2.5),
]
F2_PARAMS = [
    AppellF2Params(a=1.5, b=0.5, b_prime=1.0, c=2.0, c_prime=2.5),
    AppellF2Params(a=0.75, b=1.0, b_prime=0.5, c=2.5, c_prime=1.5),
]
F2_POINTS = [(0.2, 0.3), (-0.3, 0.4), (0.5, -0.2), (0.1, 0.05)]
F1_VIA_F2_POINTS = [(0.3, 0.4), (0.2, 0.25), (-0.2, -0.25), (0.5, 0.6)]
FD_CASES = [
    (LauricellaParams(a=1.5, alphas=[1.0, 0.5, 1.0], c=4.0), (0.2, -0.3, 0.5)),
    (LauricellaParams(a=0.5, alphas=[0.5, 0.5], c=2.0), (0.4, -0.6)),
]
A1C_PARAMS = [(2.5, 4.0), (3.5, 5.0), (1.5, 2.5)]
C2_PARAMS = [(2.5, 5.0), (3.5, 5.0)]
F2_REDUCTION_CASES = [(2, 0), (3, 1), (2, 1)]
SYMBOLIC_C = (2, 3, 4)
CF_DEPTH = 120

CONFLUENT_VALUES = (0.5, 1.0, 2.0)
CONFLUENT_ORDERS = (1, 2, 3)
MELLIN_CASES = list(itertools.product((0.5, 1.0, 3.0), (1.0, 2.0, 3.5)))
OSCILLATORY_CASES = [(1.0, 2.0, 1, 2), (1.0, 1.0, 2, 1), (0.5, 1.0, 2, 2)]
OSCILLATORY_TOLERANCE = 1e-3
N_ORACLE_CASES = [
    ((1, 1, 1, 1), (1.2, 0.9, 1.1), 4.0),
    ((2, 1, 1, 1), (0.8, 1.3, 0.7), 5.0),
]
N_ORACLE_TOLERANCE = 1e-7

K_INDICES = [(2, 1), (3, 1), (1, 2)]
H_INDICES = [(1, 1, 1), (2, 1, 1)]
JET_DIMENSIONS = (4.0, 6.0, 8.0)
INVERSION_EXPONENTS = (-2.0, 0.5)
CROSSCHECK_POINTS = [(2.0, 0.5), (0.5, 3.0), (1.5, 0.25)]
H_ORACLE_PAIRS = 8
H_ORACLE_DIMENSIONS = 3
SERIES_REGION = 0.9


def _relative(value: float, reference: float) -> float:
    return (value - reference) / max(1.0, abs(reference))


def _z_values(settings: Settings) -> List[float]:
    """z = 1 − y for every grid argument y, restricted to (−1, 1)."""
    return sorted({1.0 - y for y in settings.grid.points() if -1 < 1.0 - y < 1})


def _z_pairs(settings: Settings) -> List[Tuple[float, float]]:
    zs = _z_values(settings)
    return [(x, y) for x, y in itertools.product(zs, zs) if x != y]


def _series_pairs(settings: Settings) -> List[Tuple[float, float]]:
    """Pairs with |x| + |y| below the two-variable series radius."""
    return [(x, y) for x, y in _z_pairs(settings) if abs(x) + abs(y) < SERIES_REGION]


def _m_values(settings: Settings) -> List[float]:
    return [m for m in settings.grid.m_values if m > 2]


class _Builder:
    """Collects checks sharing one grid description and worker cap."""

    def __init__(self, settings: Settings):
        self.settings = settings
        self.grid_spec = settings.grid.describe()
        self.checks: List[Check] = []

    def add(
        self,
        relation_id: str,
        points: Sequence,
        residual: Callable,
        tolerance: float,
    ) -> None:
        self.checks.append(
            RelationCheck(
                relation_id,
                points,
                residual,
                tolerance,
                self.grid_spec,
                get_thread_count(self.settings.threads),
            )
        )

    def add_report(
        self, relation_id: str, produce: Callable[[], RelationReport], tolerance: float
    ) -> None:
        check = ReportCheck(relation_id, produce, tolerance, self.grid_spec)
        self.checks.append(check)


# hypergeo


@functools.lru_cache(maxsize=None)
def _contiguous(point: Tuple[float, float, float, float]) -> Tuple[float, ...]:
    a, b, c, z = point
    return tuple(contiguous_residuals(GaussParams(a=a, b=b, c=c), z))


def _gauss(point) -> Tuple[GaussParams, float]:
    a, b, c, z = point
    return GaussParams(a=a, b=b, c=c), z


def _cf_residual(point) -> float:
    p, z = _gauss(point)
    direct = hyp2f1(p.a + 1, p.b, p.c + 1, z) / hyp2f1(p.a, p.b, p.c, z)
    return _relative(gauss_cf_ratio(p, z, depth=CF_DEPTH), direct)


def _divided_difference_residual(point) -> float:
    a, c, x, y = point
    reference = appell_f1(AppellF1Params(a=a, b=1, b_prime=1, c=c), x, y).value
    return _relative(f1_divided_difference(a, c, x, y), reference)


def _c2_residual(point) -> float:
    a, b, x, y = point
    reference = appell_f1(AppellF1Params(a=a, b=1, b_prime=2, c=b), x, y).value
    return _relative(f1_c2_reduction(a, b, x, y), reference)


def _f2_reduction_residual(point, a: float = 1.5, b: float = 2.5) -> float:
    q, p, x, y = point
    params = AppellF2Params(a=q + 1, b=a, b_prime=p + 1, c=b, c_prime=p + 2)
    return _relative(f2_to_2f1(q, a, p, b, x, y), appell_f2(params, x, y).value)


def _symbolic_residual(point) -> float:
    a, c, z = point
    return _relative(symbolic_2f1_a1c(a, c, z), hyp2f1(a, 1, c, z))


def hypergeo_checks(settings: Settings) -> List[Check]:
    tol = settings.tolerance
    zs = _z_values(settings)
    pairs = _z_pairs(settings)
    series_pairs = _series_pairs(settings)
    builder = _Builder(settings)
    gauss_points = [(p.a, p.b, p.c, z) for p in GAUSS_PARAMS for z in zs]

    for number in range(1, math.comb(len(CONTIGUOUS_LINES), 2) + 1):
        builder.add(
            f"contiguous.{number}",
            gauss_points,
            lambda point, i=number - 1: _contiguous(point)[i],
            tol.hypergeo,
        )
    builder.add(
        "differential",
        gauss_points,
        lambda point: differential_residuals(*_gauss(point)),
        tol.hypergeo,
    )
    builder.add(
        "ode", gauss_points, lambda point: ode_residual(*_gauss(point)), tol.hypergeo
    )
    for which in PFAFF_EULER_VARIANTS:
        builder.add(
            which,
            gauss_points,
            lambda point, w=which: pfaff_euler_residual(*_gauss(point), w),
            tol.pfaff,
        )
    builder.add("gauss_cf", gauss_points, _cf_residual, tol.hypergeo)

    f1_points = [(p, x, y) for p in F1_PARAMS for x, y in series_pairs]
    builder.add(
        "f1_system", f1_points, lambda point: f1_system_residuals(*point), tol.spectral
    )
    builder.add(
        "f1_diagonal",
        [(p, z) for p in F1_PARAMS for z in zs if abs(z) < SERIES_REGION / 2],
        lambda point: f1_diagonal_residual(*point),
        tol.spectral,
    )
    builder.add(
        "f1_balanced",
        [(p.a, p.b, p.b_prime, x, y) for p in F1_PARAMS for x, y in series_pairs],
        lambda point: f1_balanced_residual(*point),
        tol.spectral,
    )
    builder.add(
        "f1_via_f2",
        [(p, x, y) for p in F1_PARAMS for x, y in F1_VIA_F2_POINTS],
        lambda point: f1_via_f2_residual(*point),
        tol.spectral,
    )
    builder.add(
        "f1_divided_difference",
        [(a, c, x, y) for a, c in A1C_PARAMS for x, y in pairs],
        _divided_difference_residual,
        tol.spectral,
    )
    builder.add(
        "f1_c2_reduction",
        [(a, b, x, y) for a, b in C2_PARAMS for x, y in pairs],
        _c2_residual,
        tol.spectral,
    )
    builder.add(
        "f2_reduction",
        [(q, p, x, y) for q, p in F2_REDUCTION_CASES for x, y in F2_POINTS],
        _f2_reduction_residual,
        tol.hypergeo,
    )
    builder.add(
        "symbolic_a1c",
        [(a, c, z) for a, _ in A1C_PARAMS for c in SYMBOLIC_C for z in zs],
        _symbolic_residual,
        tol.hypergeo,
    )
    return builder.checks


# oracles


def _confluent_residual(point) -> float:
    """Contour integral against e^{−B}/Γ(a+b) · ₁F₁(a; a+b; B − A)."""
    A, B, a, b = point
    rhs = math.exp(-B) / gamma(a + b) * kummer_1f1(a, a + b, B - A).value
    return contour_ab_rhs(A, B, a, b) - rhs


def oracle_checks(settings: Settings) -> List[Check]:
    tol = settings.tolerance
    quad = settings.quadrature
    all_zs = sorted({1.0 - y for y in settings.grid.points()})
    pairs = _series_pairs(settings)
    ys = settings.grid.points()
    ms = _m_values(settings)
    builder = _Builder(settings)

    def euler_2f1(point):
        p, z = point
        return _relative(euler_integral_2f1(p, z, quad).value, gauss_2f1(p, z).value)

    def euler_1f1(point):
        a, b, z = point
        return _relative(euler_integral_1f1(a, b, z, quad).value, hyp1f1(a, b, z))

    def euler_f1(point):
        p, x, y = point
        reference = appell_f1(p, x, y).value
        return _relative(euler_integral_f1(p, x, y, quad).value, reference)

    def euler_f2(point):
        p, x, y = point
        reference = appell_f2(p, x, y).value
        return _relative(euler_integral_f2(p, x, y, quad).value, reference)

    def euler_fd(point):
        p, xs = point
        reference = lauricella_fd(p, xs).value
        return _relative(euler_integral_fd(p, xs, quad).value, reference)

    def contour_merge(point):
        A, B, a, b, c = point
        merged = contour_ab_rhs(A, B, a, b + c, quad)
        return contour_abc_rhs(A, B, B, a, b, c, quad) - merged

    def oscillatory(point):
        A, B, a, b = point
        lhs = oscillatory_lhs_ab(A, B, a, b, quad.truncation_radius)
        return lhs - contour_ab_rhs(A, B, a, b, quad)

    def k_oracle(point):
        a, b, y, m = point
        reference = k_family(SpectralIndex(a=a, b=b, m=m), y)
        return _relative(spectral_k_oracle(a, b, y, m, quad), reference)

    def h_oracle(point):
        (a, b, c), y1, y2, m = point
        reference = h_family(SpectralIndex(a=a, b=b, c=c, m=m), y1, y2)
        return _relative(spectral_h_oracle(a, b, c, y1, y2, m, quad), reference)

    def n_oracle(point):
        alphas, ys_, m = point
        reference = n_family(alphas, ys_, m)
        return _relative(spectral_n_oracle(alphas, ys_, m, quad), reference)

    builder.add(
        "euler_2f1",
        [(p, z) for p in GAUSS_PARAMS for z in all_zs],
        euler_2f1,
        tol.oracles,
    )
    builder.add(
        "euler_1f1",
        [(p.b, p.c, z) for p in GAUSS_PARAMS for z in all_zs],
        euler_1f1,
        tol.oracles,
    )
    builder.add(
        "euler_f1",
        [(p, x, y) for p in F1_PARAMS for x, y in pairs],
        euler_f1,
        tol.spectral,
    )
    builder.add(
        "euler_f2",
        [(p, x, y) for p in F2_PARAMS for x, y in F2_POINTS],
        euler_f2,
        tol.spectral,
    )
    builder.add("euler_fd", FD_CASES, euler_fd, tol.spectral)
    builder.add(
        "contour_confluent",
        list(
            itertools.product(
                CONFLUENT_VALUES, CONFLUENT_VALUES, CONFLUENT_ORDERS, CONFLUENT_ORDERS
            )
        ),
        _confluent_residual,
        tol.oracles,
    )
    builder.add(
        "contour_merge",
        [(1.0, 2.0, *idx) for idx in H_INDICES] + [(0.5, 0.5, *H_INDICES[0])],
        contour_merge,
        tol.oracles,
    )
    builder.add(
        "mellin",
        MELLIN_CASES,
        lambda point: mellin_residual(*point, quad),
        tol.oracles,
    )
    builder.add("oscillatory", OSCILLATORY_CASES, oscillatory, OSCILLATORY_TOLERANCE)
    builder.add(
        "spectral_k_oracle",
        [(a, b, y, m) for a, b in K_INDICES for y in ys for m in ms],
        k_oracle,
        tol.oracles,
    )
    builder.add(
        "spectral_h_oracle",
        [
            (idx, y1, y2, m)
            for idx in H_INDICES
            for y1, y2 in settings.grid.pairs()[:H_ORACLE_PAIRS]
            for m in ms[:H_ORACLE_DIMENSIONS]
        ],
        h_oracle,
        tol.spectral,
    )
    builder.add("spectral_n_oracle", N_ORACLE_CASES, n_oracle, N_ORACLE_TOLERANCE)
    return builder.checks


# spectral


def _display_residual(point) -> float:
    name, args = point
    display = {d.name: d for d in small_dimension_displays()}[name]
    return _relative(display.closed(*args), display.family(*args))


def _display_points(settings: Settings) -> List[Tuple]:
    points = []
    for display in small_dimension_displays():
        arity = len(inspect.signature(display.closed).parameters)
        if arity == 1:
            args = [(y,) for y in settings.grid.points()]
        else:
            args = settings.grid.pairs()
        points.extend((display.name, arg) for arg in args)
    return points


def _stencil_derivative(s: float, m: float) -> float:
    return ScalarFn(lambda u: t_delta(u, m)).derivative(s)


def _b2_report(settings: Settings) -> RelationReport:
    _, _, decomposition = derive_decomposition()
    matches = decomposition == expected_decomposition()
    rows = [ResidualRow.of("b2 decomposition", 0.0 if matches else 1.0)]
    return RelationReport.from_rows(
        "b2.decomposition", "exact", rows, settings.tolerance.symbols
    )


def spectral_checks(settings: Settings) -> List[Check]:
    tol = settings.tolerance
    ys = settings.grid.points()
    ms = _m_values(settings)
    pairs = settings.grid.pairs()
    builder = _Builder(settings)

    def k_closed(point):
        s, m = point
        terms = k_delta_terms(s, m)
        scale = max(1.0, *(abs(t) for t in terms))
        return (k_delta_closed(s, m) - math.fsum(terms)) / scale

    def h_closed(point):
        (s, t), m = point
        terms = h_delta_terms(s, t, m)
        scale = max(1.0, *(abs(x) for x in terms))
        return (h_delta_closed(s, t, m) - math.fsum(terms)) / scale

    def t_closed(point):
        s, m = point
        terms = t_delta_terms(s, m)
        scale = max(1.0, *(abs(t) for t in terms))
        return (t_delta_closed(s, m) - math.fsum(terms)) / scale

    def t_derivative(point):
        s, m = point
        return _relative(t_delta_derivative(s, m), _stencil_derivative(s, m))

    def h_reduction(point):
        (a, b, c), y, m = point
        h = h_family(SpectralIndex(a=a, b=b, c=c, m=m), y, 1 / y)
        return _relative(h, k_family(SpectralIndex(a=a + c, b=b, m=m), y))

    def crosscheck(point):
        (s, t), m = point
        return numeric_crosscheck(_decomposition(), s, t, m)

    builder.add(
        "k_delta.closed", list(itertools.product(ys, ms)), k_closed, tol.spectral
    )
    builder.add(
        "h_delta.closed", list(itertools.product(pairs, ms)), h_closed, tol.spectral
    )
    builder.add(
        "t_delta.closed", list(itertools.product(ys, ms)), t_closed, tol.spectral
    )
    builder.add(
        "t_delta.derivative",
        list(itertools.product(ys, ms)),
        t_derivative,
        tol.spectral,
    )
    builder.add(
        "k_delta.at_one",
        ms,
        lambda m: _relative(k_delta(1.0, m), k_delta_at_one(m)),
        tol.spectral,
    )
    builder.add(
        "h_reduction",
        [(idx, y, m) for idx in H_INDICES for y in ys for m in ms],
        h_reduction,
        tol.spectral,
    )
    builder.add(
        "displays", _display_points(settings), _display_residual, tol.spectral
    )
    builder.add_report(
        "b2.decomposition", lambda: _b2_report(settings), tol.symbols
    )
    builder.add(
        "b2.crosscheck",
        [(pair, m) for pair in CROSSCHECK_POINTS for m in ms],
        crosscheck,
        tol.spectral,
    )
    return builder.checks


@functools.lru_cache(maxsize=1)
def _decomposition():
    return derive_decomposition()[2]


# recurrences


def recurrence_checks(settings: Settings) -> List[Check]:
    tol = settings.tolerance
    zs = _z_values(settings)
    ms = settings.grid.m_values
    builder = _Builder(settings)
    k_points = [
        (SpectralIndex(a=a, b=b, m=m), u) for a, b in K_INDICES for u in zs for m in ms
    ]

    def cf_ratio(point):
        (a, b), u, m = point
        idx = SpectralIndex(a=a, b=b, m=m)
        ratio = k_tilde(idx.shifted(da=1), u) / k_tilde(idx, u)
        direct = idx.weight / idx.d_tilde * ratio
        return _relative(spectral_cf_ratio(idx, u, depth=CF_DEPTH), direct)

    builder.add(
        "dimension_shift.K",
        k_points,
        lambda point: _scaled(dimension_shift_residuals(*point), k_tilde(*point)),
        tol.recurrences,
    )
    builder.add(
        "dimension_shift.H",
        [
            (SpectralIndex(a=a, b=b, c=c, m=m), u, v)
            for a, b, c in H_INDICES
            for u, v in itertools.product(zs, zs)
            for m in ms
        ],
        lambda point: _scaled(dimension_shift_residuals(*point), h_tilde(*point)),
        tol.recurrences,
    )
    builder.add(
        "gauss_cf.spectral",
        [(idx, u, m) for idx in K_INDICES for u in zs for m in ms],
        cf_ratio,
        tol.recurrences,
    )
    return builder.checks


def _scaled(residuals: Dict[str, float], value: float) -> Dict[str, float]:
    scale = max(1.0, abs(value))
    return {name: r / scale for name, r in residuals.items()}


# jets


def jet_checks(settings: Settings) -> List[Check]:
    zs = _z_values(settings)
    ms = [m for m in settings.grid.m_values if m >= 4 and m == int(m) and m % 2 == 0]
    if not ms:
        LOG.debug(f"No even dimension in the grid, using {JET_DIMENSIONS}")
        ms = list(JET_DIMENSIONS)
    builder = _Builder(settings)
    k_points = [
        (SpectralIndex(a=a, b=b, m=m), u) for a, b in K_INDICES for u in zs for m in ms
    ]

    def k_jet(point):
        idx, u = point
        return _relative(jet_formula(idx, u), k_tilde(idx, u))

    def h_jet(point):
        idx, u, v = point
        return _relative(jet_formula(idx, u, v), h_tilde(idx, u, v))

    builder.add(
        "jets.K",
        k_points,
        k_jet,
        settings.tolerance.jets,
    )
    builder.add(
        "jets.H",
        [
            (SpectralIndex(a=a, b=b, c=c, m=m), u, v)
            for a, b, c in H_INDICES
            for u, v in itertools.product(zs, zs)
            for m in ms
        ],
        h_jet,
        settings.tolerance.jets,
    )
    return builder.checks


# variational


def variational_checks(settings: Settings) -> List[Check]:
    tol = settings.tolerance.variational
    ys = settings.grid.points()
    pairs = settings.grid.pairs()
    ms = _m_values(settings)
    builder = _Builder(settings)

    def d_op_2f1(point):
        (a, c), (y1, y2) = point
        lhs = d_op(gauss_a1c_fn(a, c), y1, y2)
        return _relative(lhs, d_op_2f1_formula(a, c, y1, y2))

    def d_op_k(point):
        (a, b), m, (y1, y2) = point
        idx = SpectralIndex(a=a, b=b, m=m)
        return _relative(d_op(k_family_fn(idx), y1, y2), d_op_k_formula(idx, y1, y2))

    def d_op_inversion(point):
        (a, c), j, (y1, y2) = point
        lhs = d_op(inversion_op(gauss_a1c_fn(a, c), j), y1, y2)
        return _relative(lhs, d_op_tilde_formula(a, c, j, y1, y2))

    def inversion_k(point):
        (a, b), m, j, u = point
        idx = SpectralIndex(a=a, b=b, m=m)
        scale = max(1.0, abs(k_family(idx, u)))
        return inversion_k_family_residual(idx, j, u) / scale

    builder.add(
        "pfaff_a1c",
        [(a, c, z) for a, c in A1C_PARAMS for z in ys],
        lambda point: pfaff_a1c_residual(*point) / max(1.0, point[2]),
        tol,
    )
    builder.add(
        "divided_difference_f1",
        [(a, c, s, t) for a, c in A1C_PARAMS for s, t in pairs],
        lambda point: divided_difference_f1_residual(*point),
        tol,
    )
    builder.add(
        "d_op.2f1", list(itertools.product(A1C_PARAMS, pairs)), d_op_2f1, tol
    )
    builder.add(
        "d_op.K",
        list(itertools.product([(2, 1), (3, 1)], ms, pairs)),
        d_op_k,
        tol,
    )
    builder.add(
        "d_op.inversion",
        list(itertools.product(A1C_PARAMS, INVERSION_EXPONENTS, pairs)),
        d_op_inversion,
        tol,
    )
    builder.add(
        "inversion.K",
        list(itertools.product(K_INDICES, ms, INVERSION_EXPONENTS, ys)),
        inversion_k,
        tol,
    )
    return builder.checks


# thm4_10


def theorem_checks(settings: Settings) -> List[Check]:
    grid = settings.grid
    builder = _Builder(settings)
    for m in _m_values(settings):
        builder.add_report(
            f"thm4_10[m={m:g}]",
            functools.partial(
                verify_theorem_4_10,
                m,
                grid.arg_values,
                grid.arg_values,
                tolerance=settings.tolerance.thm4_10,
                exclusion_radius=grid.exclusion_radius,
                threads=get_thread_count(settings.threads),
                strict=False,
            ),
            settings.tolerance.thm4_10,
        )
    return builder.checks


SUITE_BUILDERS: Dict[str, Callable[[Settings], List[Check]]] = {
    "hypergeo": hypergeo_checks,
    "oracles": oracle_checks,
    "spectral": spectral_checks,
    "recurrences": recurrence_checks,
    "jets": jet_checks,
    "variational": variational_checks,
    "thm4_10": theorem_checks,
}


def suite_names(suite: str) -> List[str]:
    """Expand ``all`` into the individual suites.

    :raises: ValueError for an unknown suite
    """
    if suite == ALL_SUITES:
        return list(SUITES)
    if suite not in SUITE_BUILDERS:
        raise ValueError(f"unknown suite {suite!r}")
    return [suite]


class VerifySuiteStep(BaseStep):
    """Run every check of one suite and collect the reports."""

    def __init__(self, suite: str, settings: Settings):
        super().__init__(f"verify-{suite}", f"Verifying {suite} relations")
        self.suite = suite
        self.settings = settings

    def is_skip(self, status: Optional[Status] = None) -> bool:
        return not SUITE_BUILDERS[self.suite](self.settings)

    def run(self, status: Optional[Status] = None) -> Result:
        reports = []
        failures = []
        for check in SUITE_BUILDERS[self.suite](self.settings):
            LOG.debug(f"Starting check {check.name}")
            if status is not None:
                status.update(f"{self.description}: {check.name} ... ")
            if not check.run():
                LOG.debug(f"Check {check.name} failed: {check.message}")
                failures.append(check.message)
            reports.append(check.report)

        if failures:
            return Result(ResultType.FAILED, "; ".join(failures), reports)
        return Result(ResultType.COMPLETED, reports=reports)
