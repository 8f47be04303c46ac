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

import unittest

import pytest

from modcurv.errors import ArgDomainException, ParamDomainException
from modcurv.hypergeo import relations
from modcurv.hypergeo.params import AppellF1Params, GaussParams

TOLERANCE = 1e-11


class ContiguousTestCase(unittest.TestCase):
    def setUp(self):
        self.p = GaussParams(a=1.5, b=2.0, c=3.7)

    def test_contiguous_residuals(self):
        for z in (0.4, -0.6, 0.85):
            residuals = relations.contiguous_residuals(self.p, z)
            self.assertEqual(len(residuals), 15)
            self.assertLess(max(residuals), TOLERANCE)

    def test_differential_residuals(self):
        residuals = relations.differential_residuals(self.p, 0.4)
        self.assertEqual(len(residuals), 6)
        self.assertLess(max(residuals), TOLERANCE)

    def test_ode(self):
        for z in (0.25, -0.8):
            self.assertLess(relations.ode_residual(self.p, z), TOLERANCE)

    def test_domain(self):
        with self.assertRaises(ParamDomainException):
            relations.contiguous_residuals(GaussParams(a=1, b=1, c=1), 0.3)
        with self.assertRaises(ArgDomainException):
            relations.contiguous_residuals(self.p, 1.5)


class TestTransformations:
    @pytest.mark.parametrize("which", relations.PFAFF_EULER_VARIANTS)
    @pytest.mark.parametrize("z", [-0.3, 0.4, -2.0])
    def test_pfaff_euler(self, which, z):
        p = GaussParams(a=0.5, b=1.5, c=2.5)
        assert relations.pfaff_euler_residual(p, z, which) < TOLERANCE

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            relations.pfaff_euler_residual(GaussParams(a=1, b=1, c=2), 0.3, "kummer")

    def test_zero(self):
        p = GaussParams(a=1, b=1, c=2)
        assert relations.pfaff_euler_residual(p, 0.0, "euler") == 0.0


class TestAppellF1Relations:
    p = AppellF1Params(a=1.5, b=0.5, b_prime=1.0, c=3.0)

    def test_system(self):
        residuals = relations.f1_system_residuals(self.p, 0.3, -0.2)
        assert set(residuals) == {"a+", "b+", "b'+", "c-", "c+"}
        assert max(residuals.values()) < TOLERANCE

    def test_diagonal(self):
        assert relations.f1_diagonal_residual(self.p, 0.4) < TOLERANCE

    def test_balanced(self):
        assert relations.f1_balanced_residual(1.5, 0.5, 1.0, 0.3, -0.2) < TOLERANCE

    def test_via_f2(self):
        assert relations.f1_via_f2_residual(self.p, 0.3, 0.4) < TOLERANCE
        assert relations.f1_via_f2_residual(self.p, -0.2, -0.25) < TOLERANCE

    def test_via_f2_domain(self):
        with pytest.raises(ArgDomainException):
            relations.f1_via_f2_residual(self.p, 0.3, -0.4)
        with pytest.raises(ArgDomainException):
            relations.f1_via_f2_residual(self.p, 0.6, 0.1)


if __name__ == "__main__":
    unittest.main()
