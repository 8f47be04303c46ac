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

from modcurv.jobs import suites
from modcurv.jobs.checks import Check
from modcurv.jobs.common import ResultType
from modcurv.jobs.reports import RelationReport, ResidualRow


class FakeCheck(Check):
    def __init__(self, name, passed):
        super().__init__(name)
        self.passed = passed

    def run(self):
        self.report = RelationReport.from_rows(
            self.name,
            "grid",
            [ResidualRow.of("(1)", 0.0 if self.passed else 1.0)],
            1e-9,
        )
        if not self.passed:
            self.message = f"{self.name} failed"
        return self.passed


class TestSuiteNames:
    def test_all(self):
        assert suites.suite_names("all") == list(suites.SUITES)
        assert "thm4_10" in suites.SUITES

    def test_single(self):
        assert suites.suite_names("jets") == ["jets"]

    def test_unknown(self):
        with pytest.raises(ValueError):
            suites.suite_names("nope")

    def test_every_suite_has_a_builder(self):
        assert set(suites.SUITES) == set(suites.SUITE_BUILDERS)


class TestBuilders:
    @pytest.mark.parametrize("suite", suites.SUITES)
    def test_checks_have_unique_names(self, small_settings, suite):
        checks = suites.SUITE_BUILDERS[suite](small_settings)
        assert checks
        names = [check.name for check in checks]
        assert len(names) == len(set(names))

    def test_theorem_checks_per_dimension(self, small_settings):
        names = [c.name for c in suites.theorem_checks(small_settings)]
        assert names == ["thm4_10[m=3]", "thm4_10[m=6]"]

    def test_spectral_checks_run(self, small_settings):
        checks = {c.name: c for c in suites.spectral_checks(small_settings)}
        assert checks["k_delta.at_one"].run()
        assert checks["b2.decomposition"].run()
        assert checks["b2.decomposition"].report.grid_spec == "exact"

    def test_m_values_skip_low_dimensions(self):
        from modcurv.config import build_settings

        settings = build_settings({"grid.m": [1.5, 2.0, 4.0]})
        assert suites._m_values(settings) == [4.0]


class TestVerifySuiteStep:
    def test_completed(self, mocker, small_settings):
        checks = [FakeCheck("a", True), FakeCheck("b", True)]
        mocker.patch.dict(suites.SUITE_BUILDERS, {"jets": lambda s: checks})
        step = suites.VerifySuiteStep("jets", small_settings)
        result = step.run()
        assert result.result_type == ResultType.COMPLETED
        assert [r.relation_id for r in result.reports] == ["a", "b"]

    def test_failed(self, mocker, small_settings):
        checks = [FakeCheck("a", False), FakeCheck("b", True), FakeCheck("c", False)]
        mocker.patch.dict(suites.SUITE_BUILDERS, {"jets": lambda s: checks})
        result = suites.VerifySuiteStep("jets", small_settings).run()
        assert result.result_type == ResultType.FAILED
        assert result.message == "a failed; c failed"
        assert len(result.reports) == 3

    def test_status_updates(self, mocker, small_settings):
        mocker.patch.dict(
            suites.SUITE_BUILDERS, {"jets": lambda s: [FakeCheck("a", True)]}
        )
        status = mocker.Mock()
        suites.VerifySuiteStep("jets", small_settings).run(status)
        status.update.assert_called_once()

    def test_is_skip(self, mocker, small_settings):
        mocker.patch.dict(suites.SUITE_BUILDERS, {"jets": lambda s: []})
        assert suites.VerifySuiteStep("jets", small_settings).is_skip()
