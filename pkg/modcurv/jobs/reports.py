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

"""Relation reports and their JSON/CSV serialisation."""

import csv
import json
import logging
import math
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from modcurv.errors import ModcurvException

LOG = logging.getLogger(__name__)

JSON_REPORT = "report.json"
CSV_REPORT = "report.csv"
CSV_COLUMNS = ["relation_id", "point", "residual", "error"]


class ResidualRow(BaseModel):
    """One grid point of a relation check.

    ``residual`` is None when the evaluation failed or was not finite;
    ``error`` then says why.
    """

    model_config = ConfigDict(frozen=True)

    point: str
    residual: Optional[float] = Field(default=None, allow_inf_nan=False)
    error: Optional[str] = None

    @classmethod
    def of(cls, point: str, residual: float) -> "ResidualRow":
        if not math.isfinite(residual):
            return cls(point=point, error=f"non-finite residual {residual!r}")
        return cls(point=point, residual=abs(residual))


class RelationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    relation_id: str
    grid_spec: str
    max_abs_residual: Optional[float] = Field(default=None, allow_inf_nan=False)
    tolerance: float = Field(ge=0)
    passed: bool
    fitted_constants: Optional[Dict[str, Optional[float]]] = None
    rows: List[ResidualRow] = Field(default_factory=list)
    error: Optional[str] = None

    @classmethod
    def from_rows(
        cls,
        relation_id: str,
        grid_spec: str,
        rows: List[ResidualRow],
        tolerance: float,
        fitted_constants: Optional[Dict[str, Optional[float]]] = None,
    ) -> "RelationReport":
        """Aggregate rows; the report passes iff every row has a residual
        and the largest one is within tolerance."""
        errors = [row for row in rows if row.residual is None]
        largest = max(
            (row.residual for row in rows if row.residual is not None), default=None
        )
        error = None
        if not rows:
            error = "no grid points"
        elif errors:
            error = f"{len(errors)} of {len(rows)} points failed: {errors[0].error}"
        passed = error is None and largest is not None and largest <= tolerance
        return cls(
            relation_id=relation_id,
            grid_spec=grid_spec,
            max_abs_residual=largest,
            tolerance=tolerance,
            passed=passed,
            fitted_constants=fitted_constants,
            rows=rows,
            error=error,
        )

    @classmethod
    def failure(
        cls, relation_id: str, grid_spec: str, tolerance: float, error: str
    ) -> "RelationReport":
        return cls(
            relation_id=relation_id,
            grid_spec=grid_spec,
            tolerance=tolerance,
            passed=False,
            error=error,
        )


def write_json(reports: Iterable[RelationReport], path: Union[str, Path]) -> Path:
    path = Path(path)
    payload = {"reports": [report.model_dump(mode="json") for report in reports]}
    with path.open("w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2)
    LOG.debug(f"Wrote {len(payload['reports'])} reports to {path}")
    return path


def write_csv(reports: Iterable[RelationReport], path: Union[str, Path]) -> Path:
    """One row per relation and grid point."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(CSV_COLUMNS)
        for report in reports:
            for row in report.rows:
                residual = "" if row.residual is None else repr(row.residual)
                writer.writerow(
                    [report.relation_id, row.point, residual, row.error or ""]
                )
    return path


def write_reports(reports: List[RelationReport], out: Union[str, Path]) -> List[Path]:
    """Write report.json and report.csv into the directory ``out``."""
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    return [
        write_json(reports, out / JSON_REPORT),
        write_csv(reports, out / CSV_REPORT),
    ]


def load_reports(path: Union[str, Path]) -> List[RelationReport]:
    """Read reports back from report.json or from a directory holding it.

    :raises: ModcurvException if the file is missing or malformed
    """
    path = Path(path)
    if path.is_dir():
        path = path / JSON_REPORT
    try:
        with path.open(encoding="utf-8") as f:
            payload = json.load(f)
        return [RelationReport.model_validate(item) for item in payload["reports"]]
    except (OSError, ValueError, KeyError, TypeError, ValidationError) as e:
        raise ModcurvException(f"Cannot load reports from {path}: {e}") from e
