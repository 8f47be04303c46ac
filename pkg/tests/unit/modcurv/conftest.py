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

import pytest
from click.testing import CliRunner

from modcurv.config import build_settings
from modcurv.quadrature.tanhsinh import QuadConfig


@pytest.fixture
def settings():
    yield build_settings()


@pytest.fixture
def small_settings():
    """A grid small enough for suites to run in a unit test."""
    yield build_settings(
        {"grid.m": [3.0, 6.0], "grid.args": [0.5, 2.0], "threads": "1"}
    )


@pytest.fixture
def quad_config():
    yield QuadConfig(abs_tol=1e-11, rel_tol=1e-11, max_levels=9)


@pytest.fixture
def runner():
    yield CliRunner()

