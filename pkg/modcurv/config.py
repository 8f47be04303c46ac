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
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, ValidationError

from modcurv.errors import ConfigException
from modcurv.quadrature.tanhsinh import QuadConfig
from modcurv.utils import (
    parse_float_list,
    singular_free_pairs,
    singular_free_points,
)

LOG = logging.getLogger(__name__)

DEFAULT_CONFIG = {
    "tolerance.hypergeo": 1e-9,
    "tolerance.pfaff": 1e-11,
    "tolerance.spectral": 1e-8,
    "tolerance.recurrences": 1e-9,
    "tolerance.jets": 1e-10,
    "tolerance.oracles": 1e-9,
    "tolerance.variational": 1e-8,
    "tolerance.thm4_10": 1e-7,
    "tolerance.symbols": 0.0,
    "grid.m": [2.5, 3.0, 3.7, 4.0, 5.0, 6.25, 8.0],
    "grid.args": [0.25, 0.5, 0.8, 1.25, 2.0, 4.0],
    "grid.exclusion-radius": 1e-3,
    "quadrature.abs-tol": 1e-12,
    "quadrature.rel-tol": 1e-12,
    "quadrature.max-levels": 10,
    "quadrature.truncation-radius": 1e4,
    "threads": None,
}
LIST_KEYS = ("grid.m", "grid.args")


class ToleranceConfig(BaseModel):
    """Acceptance thresholds of the verification suites."""

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    hypergeo: float = Field(default=1e-9, ge=0)
    pfaff: float = Field(default=1e-11, ge=0)
    spectral: float = Field(default=1e-8, ge=0)
    recurrences: float = Field(default=1e-9, ge=0)
    jets: float = Field(default=1e-10, ge=0)
    oracles: float = Field(default=1e-9, ge=0)
    variational: float = Field(default=1e-8, ge=0)
    thm4_10: float = Field(default=1e-7, ge=0)
    symbols: float = Field(default=0.0, ge=0)


class GridSpec(BaseModel):
    """Dimensions and argument values swept by the suites.

    Arguments closer than ``exclusion_radius`` to a singular locus are
    dropped from two-variable grids.
    """

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    m_values: List[PositiveFloat] = Field(
        alias="m", default=[2.5, 3.0, 3.7, 4.0, 5.0, 6.25, 8.0], min_length=1
    )
    arg_values: List[PositiveFloat] = Field(
        alias="args", default=[0.25, 0.5, 0.8, 1.25, 2.0, 4.0], min_length=1
    )
    exclusion_radius: float = Field(alias="exclusion-radius", default=1e-3, gt=0)

    def points(self) -> List[float]:
        return singular_free_points(self.arg_values, self.exclusion_radius)

    def pairs(self) -> List[Tuple[float, float]]:
        return singular_free_pairs(
            self.arg_values, self.arg_values, self.exclusion_radius
        )

    def describe(self) -> str:
        m_values = ",".join(f"{m:g}" for m in self.m_values)
        args = ",".join(f"{u:g}" for u in self.arg_values)
        return f"m={m_values}; args={args}; exclusion={self.exclusion_radius:g}"


class Settings(BaseModel):
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    tolerance: ToleranceConfig = Field(default_factory=ToleranceConfig)
    grid: GridSpec = Field(default_factory=GridSpec)
    quadrature: QuadConfig = Field(default_factory=QuadConfig)
    threads: Optional[int] = Field(default=None, ge=1)


def parse_config_text(text: str) -> Dict[str, Any]:
    """Parse ``key = value`` lines into a dict of dotted keys.

    Blank lines and ``#`` comments are skipped. Values of the grid lists
    are comma separated reals; everything else is kept as a string for
    pydantic to coerce.

    :raises: ConfigException on malformed lines or unknown keys
    """
    options = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigException(f"Line {number}: expected 'key = value': {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in DEFAULT_CONFIG:
            raise ConfigException(f"Line {number}: unknown key {key!r}")
        if not value:
            raise ConfigException(f"Line {number}: missing value for {key!r}")
        options[key] = parse_float_list(value) if key in LIST_KEYS else value
    return options


def _nest(options: Dict[str, Any]) -> Dict[str, Any]:
    nested: Dict[str, Any] = {}
    for key, value in options.items():
        if value is None:
            continue
        section, _, name = key.partition(".")
        if name:
            nested.setdefault(section, {})[name] = value
        else:
            nested[section] = value
    return nested


def build_settings(options: Optional[Dict[str, Any]] = None) -> Settings:
    """Settings from DEFAULT_CONFIG updated with ``options``.

    :raises: ConfigException when a value fails validation
    """
    merged = dict(DEFAULT_CONFIG)
    merged.update(options or {})
    try:
        return Settings.model_validate(_nest(merged))
    except ValidationError as e:
        raise ConfigException(f"Invalid configuration: {e}") from e


def load_settings(path: Optional[Union[str, Path]] = None) -> Settings:
    """Load settings, merging the defaults with the file at ``path``."""
    if path is None:
        return build_settings()
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ConfigException(f"Cannot read config file {path}: {e}") from e
    options = parse_config_text(text)
    LOG.debug(f"Loaded {len(options)} options from {path}")
    return build_settings(options)
