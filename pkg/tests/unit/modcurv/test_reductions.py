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

import mpmath
import pytest

from modcurv.errors import ArgDomainException, ParamDomainException
from modcurv.hypergeo import reductions
from modcurv.hypergeo.series import hyp2f1


class TestDividedDifference:
    @pytest.mark.parametrize(
        "a,c,x,y", [(1.5, 3.0, 0.3, -0.4), (2.5, 4.0, 0.5, 0.2), (0.5, 2.5, -0.8, 0.6)]
    )
    def test_against_mpmath(self, a, c, x, y):
        expected = float(mpmath.appellf1(a, 1, 1, c, x, y))
        assert reductions.f1_divided_difference(a, c, x, y) == pytest.approx(
            expected, rel=1e-11
        )

    def test_confluent(self):
        # F1(a; 1, 1; c; x, x) = 2F1(a, 2; c; x)
        value = reductions.f1_divided_difference(2.5, 4.0, 0.4, 0.4)
        assert value == pytest.approx(hyp2f1(2.5, 2.0, 4.0, 0.4), rel=1e-13)

    @pytest.mark.parametrize("gap", [1e-9, 1e-6, 5e-4, 2e-3])
    def test_continuous_across_the_diagonal(self, gap):
        expected = float(mpmath.appellf1(2.5, 1, 1, 4.0, 0.4, 0.4 + gap))
        value = reductions.f1_divided_difference(2.5, 4.0, 0.4, 0.4 + gap)
        assert value == pytest.approx(expected, rel=1e-10)

    def test_domain(self):
        with pytest.raises(ParamDomainException):
            reductions.f1_divided_difference(1.5, -2.0, 0.3, 0.2)
        with pytest.raises(ArgDomainException):
            reductions.f1_divided_difference(1.5, 3.0, 1.0, 0.2)


class TestC2Reduction:
    @pytest.mark.parametrize("x,y", [(0.3, -0.2), (0.5, 0.1), (0.3, 0.3001)])
    def test_against_mpmath(self, x, y):
        expected = float(mpmath.appellf1(2.5, 1, 2, 5.0, x, y))
        assert reductions.f1_c2_reduction(2.5, 5.0, x, y) == pytest.approx(
            expected, rel=1e-10
        )


class TestF2Reduction:
    @pytest.mark.parametrize("q,p", [(2, 0), (3, 1), (2, 1)])
    def test_against_mpmath(self, q, p):
        a, b, x, y = 1.5, 2.5, 0.3, 0.4
        expected = float(mpmath.appellf2(q + 1, a, p + 1, b, p + 2, x, y))
        assert reductions.f2_to_2f1(q, a, p, b, x, y) == pytest.approx(
            expected, rel=1e-10
        )

    def test_zero_y(self):
        assert reductions.f2_to_2f1(3, 1.5, 1, 2.5, 0.3, 0.0) == pytest.approx(
            hyp2f1(4, 1.5, 2.5, 0.3)
        )

    def test_geometric(self):
        # F2(2; a, 1; b, 2; 0, y) = 1/(1 - y)
        for y in (0.25, -0.5):
            assert reductions.f2_to_2f1(1, 1.5, 0, 2.5, 0.0, y) == pytest.approx(
                1 / (1 - y), rel=1e-13
            )

    def test_domain(self):
        with pytest.raises(ParamDomainException):
            reductions.f2_to_2f1(2, 1.5, 2, 2.5, 0.3, 0.4)
        with pytest.raises(ParamDomainException):
            reductions.f2_to_2f1(2, 1.5, 0.5, 2.5, 0.3, 0.4)
        with pytest.raises(ArgDomainException):
            reductions.f2_to_2f1(2, 1.5, 0, 2.5, 0.6, 0.4)


class TestSymbolicA1C:
    @pytest.mark.parametrize("c", [1, 2, 3, 4])
    @pytest.mark.parametrize("z", [0.5, -0.6, 0.9])
    def test_against_series(self, c, z):
        assert reductions.symbolic_2f1_a1c(2.5, c, z) == pytest.approx(
            hyp2f1(2.5, 1, c, z), rel=1e-9
        )

    def test_c2_closed_form(self):
        a, z = 3.5, 0.3
        expected = ((1 - z) ** (1 - a) - 1) / ((a - 1) * z)
        assert reductions.symbolic_2f1_a1c(a, 2, z) == pytest.approx(expected)

    def test_zero(self):
        assert reductions.symbolic_2f1_a1c(2.5, 3, 0.0) == 1.0

    def test_domain(self):
        with pytest.raises(ParamDomainException):
            reductions.symbolic_2f1_a1c(2.5, 0, 0.3)
        with pytest.raises(ParamDomainException):
            reductions.symbolic_2f1_a1c(2.0, 3, 0.3)
        with pytest.raises(ArgDomainException):
            reductions.symbolic_2f1_a1c(2.5, 3, 1.0)
        assert math.isfinite(reductions.symbolic_2f1_a1c(2.5, 3.0, 0.5))
