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

from modcurv.errors import ArgDomainException, NoConvergenceException
from modcurv.hypergeo import contfrac
from modcurv.hypergeo.params import GaussParams
from modcurv.hypergeo.series import hyp2f1


class ContinuedFractionTestCase(unittest.TestCase):
    def test_first_coefficient(self):
        p = GaussParams(a=1.5, b=2.0, c=3.7)
        self.assertAlmostEqual(
            contfrac.cf_coefficient(p, 1), (1.5 - 3.7) * 2.0 / (3.7 * 4.7)
        )
        self.assertAlmostEqual(
            contfrac.cf_coefficient(p, 2), (2.0 - 3.7 - 1) * 2.5 / (4.7 * 5.7)
        )

    def test_terminating(self):
        p = GaussParams(a=-1.0, b=2.0, c=3.0)
        self.assertAlmostEqual(contfrac.gauss_cf_ratio(p, 0.6), 5 / 3, delta=1e-15)

    def test_zero(self):
        self.assertEqual(contfrac.gauss_cf_ratio(GaussParams(a=1, b=1, c=2), 0.0), 1.0)

    def test_invalid(self):
        p = GaussParams(a=1, b=1, c=2)
        with self.assertRaises(ValueError):
            contfrac.gauss_cf_ratio(p, 0.5, depth=0)
        with self.assertRaises(ArgDomainException):
            contfrac.gauss_cf_ratio(p, 1.0)
        with self.assertRaises(NoConvergenceException):
            contfrac.gauss_cf_ratio(p, 0.9, depth=2)


@pytest.mark.parametrize(
    "a,b,c", [(0.5, 1.5, 2.5), (2.5, 1.0, 4.0), (-0.5, 1.25, 3.5), (1.5, 2.0, 3.7)]
)
@pytest.mark.parametrize("z", [0.5, -0.7, 0.9])
def test_ratio_of_contiguous_functions(a, b, c, z):
    expected = hyp2f1(a + 1, b, c + 1, z) / hyp2f1(a, b, c, z)
    value = contfrac.gauss_cf_ratio(GaussParams(a=a, b=b, c=c), z, depth=120)
    assert value == pytest.approx(expected, rel=1e-11)


if __name__ == "__main__":
    unittest.main()
