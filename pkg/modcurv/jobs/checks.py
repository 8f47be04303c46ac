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
from typing import Any, Callable, Iterable, Mapping, Optional, Sequence, Union

from modcurv.errors import ModcurvException
from modcurv.jobs.reports import RelationReport, ResidualRow
from modcurv.utils import parallel_map

LOG = logging.getLogger(__name__)

Residual = Union[float, Sequence[float], Mapping[str, float]]


class Check:
    """Base class for relation checks.

    A check evaluates one identity and decides whether it holds.
    """

    def __init__(self, name: str, description: str = ""):
        """Initialise the Check.

        :param name: the name of the check
        """
        self.name = name
        self.description = description
        self.message = None
        self.report: Optional[RelationReport] = None

    def run(self) -> bool:
        """Run the check logic here.

        Return True if check is Ok.
        Otherwise update self.message and return False.
        """

        return True


def _largest(residual: Residual) -> float:
    if isinstance(residual, Mapping):
        residual = list(residual.values())
    if isinstance(residual, (list, tuple)):
        return max(abs(r) for r in residual)
    return abs(residual)


def _label(point: Any) -> str:
    if isinstance(point, (tuple, list)):
        return "(" + ", ".join(_label(x) for x in point) + ")"
    return f"{point:g}" if isinstance(point, float) else str(point)


class RelationCheck(Check):
    """Evaluate a residual function on every grid point.

    The residual callable returns one residual, a list of them or a dict of
    named ones; the largest absolute value is recorded per point. Library
    errors at a point mark that point as failed without stopping the sweep.
    """

    def __init__(
        self,
        relation_id: str,
        points: Iterable[Any],
        residual: Callable[[Any], Residual],
        tolerance: float,
        grid_spec: str,
        threads: Optional[int] = None,
    ):
        super().__init__(relation_id, f"Checking {relation_id}")
        self.points = list(points)
        self.residual = residual
        self.tolerance = tolerance
        self.grid_spec = grid_spec
        self.threads = threads

    def _evaluate(self, point: Any) -> ResidualRow:
        label = _label(point)
        try:
            value = _largest(self.residual(point))
        except (ModcurvException, ValueError, ArithmeticError) as e:
            LOG.debug(f"{self.name} failed at {label}: {e}")
            return ResidualRow(point=label, error=f"{type(e).__name__}: {e}")
        return ResidualRow.of(label, value)

    def run(self) -> bool:
        rows = parallel_map(self._evaluate, self.points, self.threads)
        self.report = RelationReport.from_rows(
            self.name, self.grid_spec, rows, self.tolerance
        )
        if not self.report.passed:
            self.message = self.report.error or (
                f"{self.name}: max residual {self.report.max_abs_residual:.3e} "
                f"exceeds {self.tolerance:.1e}"
            )
        return self.report.passed


class ReportCheck(Check):
    """Wrap a callable that produces a complete RelationReport."""

    def __init__(
        self,
        relation_id: str,
        produce: Callable[[], RelationReport],
        tolerance: float,
        grid_spec: str,
    ):
        super().__init__(relation_id, f"Checking {relation_id}")
        self.produce = produce
        self.tolerance = tolerance
        self.grid_spec = grid_spec

    def run(self) -> bool:
        try:
            self.report = self.produce()
        except (ModcurvException, ValueError, ArithmeticError) as e:
            LOG.debug(f"{self.name} failed: {e}")
            self.report = RelationReport.failure(
                self.name, self.grid_spec, self.tolerance, f"{type(e).__name__}: {e}"
            )
        if not self.report.passed:
            self.message = self.report.error or f"{self.name} did not hold"
        return self.report.passed
