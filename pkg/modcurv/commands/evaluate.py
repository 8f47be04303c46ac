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
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence

import click

from modcurv.errors import ModcurvException
from modcurv.hypergeo.params import (
    AppellF1Params,
    AppellF2Params,
    EvalResult,
    GaussParams,
    LauricellaParams,
)
from modcurv.hypergeo.series import (
    appell_f1,
    appell_f2,
    gauss_2f1,
    kummer_1f1,
    lauricella_fd,
)
from modcurv.spectral.closed_forms import SINGULAR_RADIUS, h_delta, k_delta, t_delta
from modcurv.spectral.families import SpectralIndex, h_family, k_family

LOG = logging.getLogger(__name__)


class Evaluation(NamedTuple):
    value: float
    est_error: Optional[float]
    method: str


def _expect(function: str, values: Sequence[float], count: int) -> None:
    if len(values) != count:
        raise click.UsageError(f"{function} takes {count} numbers, got {len(values)}")


def _from_result(result: EvalResult) -> Evaluation:
    return Evaluation(result.value, result.est_error, result.method)


def _eval_2f1(values: List[float]) -> Evaluation:
    _expect("2f1", values, 4)
    a, b, c, z = values
    return _from_result(gauss_2f1(GaussParams(a=a, b=b, c=c), z))


def _eval_1f1(values: List[float]) -> Evaluation:
    _expect("1f1", values, 3)
    return _from_result(kummer_1f1(*values))


def _eval_f1(values: List[float]) -> Evaluation:
    _expect("f1", values, 6)
    a, b, bp, c, x, y = values
    return _from_result(appell_f1(AppellF1Params(a=a, b=b, b_prime=bp, c=c), x, y))


def _eval_f2(values: List[float]) -> Evaluation:
    _expect("f2", values, 7)
    a, b, bp, c, cp, x, y = values
    params = AppellF2Params(a=a, b=b, b_prime=bp, c=c, c_prime=cp)
    return _from_result(appell_f2(params, x, y))


def _eval_fd(values: List[float]) -> Evaluation:
    """a c α₁..αₙ x₁..xₙ."""
    if len(values) < 4 or len(values) % 2:
        raise click.UsageError("fd takes a, c, then n alphas and n arguments")
    a, c, *rest = values
    n = len(rest) // 2
    params = LauricellaParams(a=a, alphas=rest[:n], c=c)
    return _from_result(lauricella_fd(params, rest[n:]))


def _method(m: float, *distances: float) -> str:
    if m <= 2 or any(abs(d) < SINGULAR_RADIUS for d in distances):
        return "hypergeometric"
    return "closed_form"


def _require(options: Dict[str, Optional[float]], *names: str) -> List[float]:
    missing = [f"--{name}" for name in names if options.get(name) is None]
    if missing:
        raise click.UsageError(f"missing option(s): {', '.join(missing)}")
    return [options[name] for name in names]


def _index(options: Dict[str, Optional[float]], *names: str) -> SpectralIndex:
    values = _require(options, *names, "m")
    if any(v != int(v) for v in values[:-1]):
        raise click.BadParameter(f"indices must be integers, got {values[:-1]}")
    fields = dict(zip(names, (int(v) for v in values[:-1])))
    return SpectralIndex(m=values[-1], **fields)


def _eval_k(options) -> Evaluation:
    idx = _index(options, "a", "b")
    (y,) = _require(options, "y")
    return Evaluation(k_family(idx, y), None, "series")


def _eval_h(options) -> Evaluation:
    idx = _index(options, "a", "b", "c")
    y1, y2 = _require(options, "y", "y2")
    return Evaluation(h_family(idx, y1, y2), None, "series")


def _eval_kdelta(options) -> Evaluation:
    s, m = _require(options, "s", "m")
    return Evaluation(k_delta(s, m), None, _method(m, s - 1))


def _eval_hdelta(options) -> Evaluation:
    s, t, m = _require(options, "s", "t", "m")
    return Evaluation(h_delta(s, t, m), None, _method(m, s - 1, t - 1, s * t - 1))


def _eval_tdelta(options) -> Evaluation:
    s, m = _require(options, "s", "m")
    return Evaluation(t_delta(s, m), None, _method(m, s - 1))


POSITIONAL: Dict[str, Callable[[List[float]], Evaluation]] = {
    "2f1": _eval_2f1,
    "1f1": _eval_1f1,
    "f1": _eval_f1,
    "f2": _eval_f2,
    "fd": _eval_fd,
}
NAMED: Dict[str, Callable[[Dict[str, Optional[float]]], Evaluation]] = {
    "K": _eval_k,
    "H": _eval_h,
    "Kdelta": _eval_kdelta,
    "Hdelta": _eval_hdelta,
    "Tdelta": _eval_tdelta,
}


def evaluate(
    function: str, values: List[float], options: Dict[str, Optional[float]]
) -> Evaluation:
    """Dispatch one evaluation.

    Hypergeometric functions take their parameters and arguments as
    positional numbers; spectral functions take named options.

    :raises: click.UsageError on a wrong call shape, ModcurvException from
             the evaluators
    """
    if function in POSITIONAL:
        return POSITIONAL[function](values)
    if values:
        raise click.UsageError(f"{function} takes options, not positional numbers")
    return NAMED[function](options)


def _parse_numbers(raw: Sequence[str]) -> List[float]:
    try:
        return [float(item) for item in raw]
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="VALUES")


@click.command("eval", context_settings={"ignore_unknown_options": True})
@click.argument("function", type=click.Choice([*POSITIONAL, *NAMED]))
@click.argument("values", nargs=-1)
@click.option("--a", "a", type=float, help="First index")
@click.option("--b", "b", type=float, help="Second index")
@click.option("--c", "c", type=float, help="Third index")
@click.option("--m", "m", type=float, help="Dimension m")
@click.option("--y", "y", type=float, help="Argument y (y1 for H)")
@click.option("--y2", "y2", type=float, help="Second argument of H")
@click.option("--s", "s", type=float, help="Argument s of the curvature functions")
@click.option("--t", "t", type=float, help="Argument t of H_Delta")
def evaluate_cmd(function: str, values: Sequence[str], **options) -> None:
    """Evaluate a special function at one point.

    Prints the value, the error estimate where one exists and the
    evaluation path.
    """
    numbers = _parse_numbers(values)
    LOG.debug(f"eval {function} {numbers} {options}")
    try:
        result = evaluate(function, numbers, options)
    except ModcurvException as e:
        raise click.ClickException(str(e))
    except ValueError as e:
        # pydantic validation of indices and parameters
        raise click.BadParameter(str(e))

    click.echo(f"value: {result.value!r}")
    est_error = "n/a" if result.est_error is None else f"{result.est_error:.3e}"
    click.echo(f"est_error: {est_error}")
    click.echo(f"method: {result.method}")
