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
import math

import numpy as np
import pytest

from modcurv.errors import (
    ArgDomainException,
    ParamDomainException,
    QuadratureException,
)
from modcurv.hypergeo.params import (
    AppellF1Params,
    AppellF2Params,
    GaussParams,
    LauricellaParams,
)
from modcurv.hypergeo.series import (
    appell_f1,
    appell_f2,
    hyp1f1,
    hyp2f1,
    lauricella_fd,
)
from modcurv.quadrature import oracles, tanhsinh
from modcurv.spectral.families import SpectralIndex, h_family, k_family, n_family


class TestTanhSinh:
    def test_endpoint_singularity(self, quad_config):
        value, error, nodes = tanhsinh.integrate_unit(
            lambda t, tc: t**-0.5, quad_config
        )
        assert value == pytest.approx(2.0, rel=1e-10)
        assert error < 1e-9
        assert nodes > 0

    @pytest.mark.parametrize("dim,volume", [(1, 1.0), (2, 0.5), (3, 1 / 6)])
    def test_simplex_volume(self, quad_config, dim, volume):
        value, _, _ = tanhsinh.integrate_simplex(
            lambda ts, rest: np.ones_like(rest), dim, quad_config
        )
        assert value == pytest.approx(volume, rel=1e-10)

    def test_cube(self, quad_config):
        value, _, _ = tanhsinh.integrate_cube(
            lambda xs, xcs: xs[0] * xcs[1], 2, quad_config
        )
        assert value == pytest.approx(0.25, rel=1e-10)

    def test_half_line(self, quad_config):
        value, _, _ = tanhsinh.integrate_half_line(lambda s: np.exp(-s), quad_config)
        assert value == pytest.approx(1.0, rel=1e-10)

    def test_unsupported_dimension(self):
        with pytest.raises(QuadratureException):
            tanhsinh.integrate_cube(lambda xs, xcs: xs[0], 5)

    def test_refinement_stalls(self):
        config = tanhsinh.QuadConfig(abs_tol=1e-300, rel_tol=1e-300, max_levels=3)
        with pytest.raises(QuadratureException):
            tanhsinh.integrate_unit(lambda t, tc: np.sin(50 * t), config)

    def test_non_finite_samples_are_logged(self, quad_config, caplog):
        caplog.set_level(logging.DEBUG, logger="modcurv.quadrature.tanhsinh")
        value, _, _ = tanhsinh.integrate_unit(
            lambda t, tc: np.where(tc < 1e-12, np.nan, 1.0), quad_config
        )
        assert value == pytest.approx(1.0, rel=1e-10)
        assert "samples not finite, counted as zero" in caplog.text

    def test_nodes_stay_inside(self):
        x, xc, w = tanhsinh.unit_nodes(4)
        assert np.all(x > 0) and np.all(xc > 0)
        assert np.all(w > 0)
        assert math.fsum(w) == pytest.approx(1.0, rel=1e-12)


class TestEulerIntegrals:
    @pytest.mark.parametrize("z", [0.7, -3.0])
    def test_2f1(self, quad_config, z):
        p = GaussParams(a=1.5, b=0.5, c=2.5)
        result = oracles.euler_integral_2f1(p, z, quad_config)
        assert result.method == "quadrature"
        assert result.value == pytest.approx(hyp2f1(1.5, 0.5, 2.5, z), rel=1e-9)

    def test_2f1_domain(self):
        with pytest.raises(ParamDomainException):
            oracles.euler_integral_2f1(GaussParams(a=1, b=2, c=2), 0.5)
        with pytest.raises(ArgDomainException):
            oracles.euler_integral_2f1(GaussParams(a=1, b=1, c=2), 1.0)

    def test_1f1(self, quad_config):
        value = oracles.euler_integral_1f1(0.5, 1.5, -2.0, quad_config).value
        assert value == pytest.approx(hyp1f1(0.5, 1.5, -2.0), rel=1e-9)

    def test_f1(self, quad_config):
        p = AppellF1Params(a=1.5, b=0.5, b_prime=1.0, c=3.0)
        value = oracles.euler_integral_f1(p, 0.3, -0.4, quad_config).value
        assert value == pytest.approx(appell_f1(p, 0.3, -0.4).value, rel=1e-9)

    def test_f1_domain(self):
        p = AppellF1Params(a=1.5, b=0.5, b_prime=1.0, c=1.5)
        with pytest.raises(ParamDomainException):
            oracles.euler_integral_f1(p, 0.3, -0.4)

    def test_f2(self, quad_config):
        p = AppellF2Params(a=1.5, b=0.5, b_prime=1.0, c=2.0, c_prime=2.5)
        value = oracles.euler_integral_f2(p, 0.3, 0.4, quad_config).value
        assert value == pytest.approx(appell_f2(p, 0.3, 0.4).value, rel=1e-9)

    def test_fd(self, quad_config):
        p = LauricellaParams(a=1.5, alphas=[1.0, 0.5], c=4.0)
        value = oracles.euler_integral_fd(p, [0.2, -0.3], quad_config).value
        assert value == pytest.approx(
            lauricella_fd(p, [0.2, -0.3]).value, rel=1e-9
        )


class TestContourIdentities:
    def test_two_resolvents(self, quad_config):
        # e^{-1}(1 - e^{-1}) = e^{-2}·1F1(1; 2; 1)
        value = oracles.contour_ab_rhs(1.0, 2.0, 1, 1, quad_config)
        assert value == pytest.approx(math.exp(-1) - math.exp(-2), rel=1e-10)

    @pytest.mark.parametrize("A,B,a,b", [(1.0, 2.0, 1, 2), (0.5, 2.0, 2, 3)])
    def test_confluent_form(self, quad_config, A, B, a, b):
        expected = math.exp(-B) / math.gamma(a + b) * hyp1f1(a, a + b, B - A)
        value = oracles.contour_ab_rhs(A, B, a, b, quad_config)
        assert value == pytest.approx(expected, rel=1e-9)

    def test_equal_arguments(self, quad_config):
        assert oracles.contour_ab_rhs(2.0, 2.0, 2, 3, quad_config) == pytest.approx(
            math.exp(-2) / math.gamma(5), rel=1e-10
        )
        assert oracles.contour_abc_rhs(
            1.5, 1.5, 1.5, 1, 2, 2, quad_config
        ) == pytest.approx(math.exp(-1.5) / math.gamma(5), rel=1e-10)

    @pytest.mark.parametrize("A,B,a,b", [(1.0, 2.0, 1, 2), (1.0, 1.0, 2, 1)])
    def test_oscillatory(self, quad_config, A, B, a, b):
        lhs = oracles.oscillatory_lhs_ab(A, B, a, b)
        assert lhs == pytest.approx(
            oracles.contour_ab_rhs(A, B, a, b, quad_config), abs=1e-3
        )

    def test_oscillatory_domain(self):
        with pytest.raises(ParamDomainException):
            oracles.oscillatory_lhs_ab(1.0, 2.0, 1.5, 1)
        with pytest.raises(ParamDomainException):
            oracles.oscillatory_lhs_ab(-1.0, 2.0, 1, 1)

    @pytest.mark.parametrize("A,a", [(2.0, 1.5), (0.5, 3.5), (3.0, 1.0)])
    def test_mellin(self, quad_config, A, a):
        assert oracles.mellin_lhs(A, a, quad_config) == pytest.approx(
            A**-a, rel=1e-10
        )
        assert oracles.mellin_residual(A, a, quad_config) < 1e-9 * A**-a

    def test_mellin_domain(self):
        with pytest.raises(ParamDomainException):
            oracles.mellin_lhs(-1.0, 1.0)


class TestSpectralOracles:
    def test_k_dimension_three(self, quad_config):
        value = oracles.spectral_k_oracle(2, 1, 4.0, 3, quad_config)
        assert value == pytest.approx(math.sqrt(math.pi) / 9, rel=1e-10)

    @pytest.mark.parametrize("a,b,y,m", [(3, 1, 0.5, 5.0), (2, 2, 3.0, 3.7)])
    def test_k_family(self, quad_config, a, b, y, m):
        expected = k_family(SpectralIndex(a=a, b=b, m=m), y)
        value = oracles.spectral_k_oracle(a, b, y, m, quad_config)
        assert value == pytest.approx(expected, rel=1e-9)

    def test_k_peak_substitution(self, quad_config):
        expected = k_family(SpectralIndex(a=2, b=1, m=60), 0.5)
        value = oracles.spectral_k_oracle(2, 1, 0.5, 60, quad_config)
        assert value == pytest.approx(expected, rel=1e-8)

    def test_h_family(self, quad_config):
        expected = h_family(SpectralIndex(a=2, b=1, c=1, m=3), 0.5, 0.8)
        value = oracles.spectral_h_oracle(2, 1, 1, 0.5, 0.8, 3, quad_config)
        assert value == pytest.approx(expected, rel=1e-9)

    def test_n_family(self):
        config = tanhsinh.QuadConfig(abs_tol=1e-10, rel_tol=1e-10)
        expected = n_family([1, 1, 1, 1], [0.9, 0.9, 0.9], 3)
        value = oracles.spectral_n_oracle([1, 1, 1, 1], [0.9, 0.9, 0.9], 3, config)
        assert value == pytest.approx(expected, rel=1e-8)

    def test_invalid(self):
        with pytest.raises(ParamDomainException):
            oracles.spectral_n_oracle([1, 1], [0.5, 0.5], 3)
        with pytest.raises(ParamDomainException):
            oracles.spectral_k_oracle(2, 1, -0.5, 3)
