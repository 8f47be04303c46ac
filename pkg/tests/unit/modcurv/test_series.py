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

import math
import unittest

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modcurv.errors import ArgDomainException, ParamDomainException
from modcurv.hypergeo import series
from modcurv.hypergeo.params import (
    AppellF1Params,
    AppellF2Params,
    GaussParams,
    LauricellaParams,
)
from modcurv.quadrature.tanhsinh import QuadConfig

QUAD = QuadConfig(abs_tol=1e-11, rel_tol=1e-11, max_levels=9)


class Gauss2F1TestCase(unittest.TestCase):
    def test_log_case(self):
        # 2F1(1, 1; 2; z) = -log(1 - z)/z
        for z in (0.5, -0.9, -1.0, -5.0, 0.95):
            self.assertAlmostEqual(
                series.hyp2f1(1, 1, 2, z), -math.log1p(-z) / z, delta=1e-13
            )

    def test_zero_argument(self):
        result = series.gauss_2f1(GaussParams(a=3, b=4, c=5), 0.0)
        self.assertEqual(result.value, 1.0)
        self.assertEqual(result.terms_used, 0)

    def test_terminating(self):
        a, b, c, z = -2.0, 1.5, 2.5, 0.7
        expected = 1 + a * b / c * z + a * (a + 1) * b * (b + 1) / (
            c * (c + 1)
        ) * z**2 / 2
        self.assertAlmostEqual(series.hyp2f1(a, b, c, z), expected, delta=1e-15)

    def test_method(self):
        p = GaussParams(a=1, b=1, c=2)
        self.assertEqual(series.gauss_2f1(p, 0.5).method, "series")
        self.assertEqual(series.gauss_2f1(p, -1.0).method, "pfaff_a")
        q = GaussParams(a=1.5, b=2.0, c=4.0)
        self.assertEqual(series.gauss_2f1(q, -3.0).method, "pfaff_b")

    def test_domain(self):
        p = GaussParams(a=1, b=1, c=2)
        with self.assertRaises(ArgDomainException):
            series.gauss_2f1(p, 1.0)
        with self.assertRaises(ArgDomainException):
            series.hyp2f1_series(p, -1.0)
        with self.assertRaises(ParamDomainException):
            series.gauss_2f1(GaussParams(a=1, b=1, c=-1), 0.5)
        with self.assertRaises(ParamDomainException):
            series.gauss_2f1(GaussParams(a=math.inf, b=1, c=2), 0.5)


@pytest.mark.parametrize(
    "a,b,c,z",
    [
        (0.5, 1.5, 2.5, 0.3),
        (1.0, 1.0, 2.0, -0.9),
        (2.5, -1.3, 3.2, 0.8),
        (1.5, 2.0, 4.0, -3.0),
        (0.3, 0.7, 1.9, -0.7),
        (3.0, 2.5, 1.5, -0.4),
        (-0.5, 1.25, 3.5, 0.99),
    ],
)
def test_hyp2f1_against_mpmath(a, b, c, z):
    expected = float(mpmath.hyp2f1(a, b, c, z))
    result = series.gauss_2f1(GaussParams(a=a, b=b, c=c), z)
    assert result.value == pytest.approx(expected, rel=1e-11)
    assert result.est_error < 1e-10 * max(1.0, abs(expected))


@settings(max_examples=40, deadline=None)
@given(
    a=st.floats(0.1, 4.0),
    b=st.floats(0.1, 4.0),
    gap=st.floats(0.1, 3.0),
    z=st.floats(-6.0, 0.9),
)
def test_hyp2f1_random_parameters(a, b, gap, z):
    # c > b > 0 keeps the function positive on z < 1
    c = b + gap
    expected = float(mpmath.hyp2f1(a, b, c, z))
    assert series.hyp2f1(a, b, c, z) == pytest.approx(expected, rel=1e-9, abs=1e-14)


class TestKummer:
    @pytest.mark.parametrize(
        "a,b,z,method",
        [
            (0.5, 1.5, 2.0, "series"),
            (1.5, 2.5, -4.0, "kummer"),
            (2.0, 3.5, -0.5, "series"),
            (0.75, 3.0, -20.0, "kummer"),
        ],
    )
    def test_against_mpmath(self, a, b, z, method):
        result = series.kummer_1f1(a, b, z)
        assert result.value == pytest.approx(float(mpmath.hyp1f1(a, b, z)), rel=1e-12)
        assert result.method == method

    def test_exponential(self):
        assert series.hyp1f1(1.0, 1.0, -3.0) == pytest.approx(math.exp(-3.0))
        assert series.hyp1f1(1.0, 1.0, 2.5) == pytest.approx(math.exp(2.5))

    def test_pole(self):
        with pytest.raises(ParamDomainException):
            series.kummer_1f1(1.0, -2.0, 0.5)


class TestAppellF1:
    @pytest.mark.parametrize(
        "a,b,bp,c,x,y",
        [
            (1.5, 0.5, 1.0, 3.0, 0.3, -0.4),
            (2.0, 1.0, 1.0, 3.5, 0.5, 0.2),
            (0.5, 1.0, 0.5, 2.5, -0.6, 0.3),
            (1.0, 2.0, 1.0, 1.5, 0.1, 0.45),
        ],
    )
    def test_series_against_mpmath(self, a, b, bp, c, x, y):
        expected = float(mpmath.appellf1(a, b, bp, c, x, y))
        result = series.appell_f1(AppellF1Params(a=a, b=b, b_prime=bp, c=c), x, y)
        assert result.value == pytest.approx(expected, rel=1e-11)

    def test_quadrature_outside_series_region(self):
        p = AppellF1Params(a=1.5, b=0.5, b_prime=1.0, c=3.0)
        result = series.appell_f1(p, 0.9, 0.5, QUAD)
        assert result.method == "quadrature"
        expected = float(mpmath.appellf1(1.5, 0.5, 1.0, 3.0, 0.9, 0.5))
        assert result.value == pytest.approx(expected, rel=1e-9)

    def test_reduces_to_2f1(self):
        p = AppellF1Params(a=1.5, b=0.5, b_prime=1.0, c=3.0)
        result = series.appell_f1(p, 0.0, 0.6)
        assert result.method == "2f1-series"
        assert result.value == pytest.approx(series.hyp2f1(1.5, 1.0, 3.0, 0.6))
        assert series.appell_f1(p, 0.0, 0.0).value == 1.0

    def test_no_integral_representation(self):
        p = AppellF1Params(a=1.0, b=1.0, b_prime=1.0, c=2.0)
        with pytest.raises(ParamDomainException):
            series.appell_f1(p, 0.9, 0.5)

    def test_argument_domain(self):
        p = AppellF1Params(a=1.0, b=1.0, b_prime=1.0, c=3.0)
        with pytest.raises(ArgDomainException):
            series.appell_f1(p, 1.0, 0.5)


class TestAppellF2:
    @pytest.mark.parametrize("x,y", [(0.3, 0.4), (-0.2, 0.5), (0.5, -0.2)])
    def test_series_against_mpmath(self, x, y):
        p = AppellF2Params(a=2.0, b=1.0, b_prime=1.5, c=3.0, c_prime=2.5)
        expected = float(mpmath.appellf2(2.0, 1.0, 1.5, 3.0, 2.5, x, y))
        assert series.appell_f2(p, x, y).value == pytest.approx(expected, rel=1e-11)

    def test_quadrature(self):
        p = AppellF2Params(a=2.0, b=1.0, b_prime=1.5, c=3.0, c_prime=2.5)
        x, y = 0.7, -0.5
        result = series.appell_f2(p, x, y, QUAD)
        assert result.method == "quadrature"
        integral = mpmath.quad(
            lambda u, v: mpmath.sqrt(v) * (1 - u) * (1 - x * u - y * v) ** -2,
            [0, 1],
            [0, 1],
        )
        prefactor = mpmath.gamma(3) * mpmath.gamma(2.5) / (
            mpmath.gamma(1.5) * mpmath.gamma(2) * mpmath.gamma(1)
        )
        assert result.value == pytest.approx(float(prefactor * integral), rel=1e-9)

    def test_divergent_without_integral(self):
        p = AppellF2Params(a=2.0, b=1.0, b_prime=1.5, c=1.0, c_prime=2.5)
        with pytest.raises(ArgDomainException):
            series.appell_f2(p, 0.7, -0.5)

    def test_one_variable(self):
        p = AppellF2Params(a=2.0, b=1.0, b_prime=1.5, c=3.0, c_prime=2.5)
        assert series.appell_f2(p, 0.0, 0.4).value == pytest.approx(
            series.hyp2f1(2.0, 1.5, 2.5, 0.4)
        )


class TestLauricella:
    def test_equal_arguments(self):
        # F_D with all arguments equal is 2F1(a, sum(alphas); c; x)
        p = LauricellaParams(a=1.5, alphas=[0.5, 1.0, 0.7], c=4.0)
        value = series.lauricella_fd(p, [0.3, 0.3, 0.3]).value
        assert value == pytest.approx(series.hyp2f1(1.5, 2.2, 4.0, 0.3), rel=1e-12)

    def test_drops_zero_arguments(self):
        p = LauricellaParams(a=1.5, alphas=[0.5, 1.0, 0.7], c=4.0)
        value = series.lauricella_fd(p, [0.3, 0.0, -0.4]).value
        expected = float(mpmath.appellf1(1.5, 0.5, 0.7, 4.0, 0.3, -0.4))
        assert value == pytest.approx(expected, rel=1e-11)

    def test_single_argument(self):
        p = LauricellaParams(a=1.5, alphas=[0.5, 1.0], c=4.0)
        result = series.lauricella_fd(p, [0.0, 0.6])
        assert result.method == "2f1-series"

    def test_quadrature(self):
        p = LauricellaParams(a=1.5, alphas=[1.0, 1.5], c=4.0)
        result = series.lauricella_fd(p, [0.6, 0.6], QUAD)
        assert result.method == "quadrature"
        assert result.value == pytest.approx(
            series.hyp2f1(1.5, 2.5, 4.0, 0.6), rel=1e-9
        )

    def test_invalid(self):
        p = LauricellaParams(a=1.5, alphas=[1.0, 1.5], c=4.0)
        with pytest.raises(ParamDomainException):
            series.lauricella_fd(p, [0.1])
        with pytest.raises(ArgDomainException):
            series.lauricella_fd(p, [0.1, 1.2])
        with pytest.raises(ParamDomainException):
            series.lauricella_fd(
                LauricellaParams(a=1, alphas=[1] * 5, c=9), [0.1] * 5
            )


if __name__ == "__main__":
    unittest.main()
