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

import pytest

from modcurv.errors import ArgDomainException, ParamDomainException
from modcurv.hypergeo.series import hyp2f1
from modcurv.spectral import families
from modcurv.spectral.families import SpectralIndex


class SpectralIndexTestCase(unittest.TestCase):
    def test_properties(self):
        idx = SpectralIndex(a=2, b=1, c=1, m=3)
        self.assertEqual(idx.alphas, [2, 1, 1])
        self.assertEqual(idx.weight, 4)
        self.assertEqual(idx.d_tilde, 3.5)
        self.assertEqual(str(idx), "(2,1,1; m=3)")
        self.assertEqual(idx.shifted(dc=1, dm=2).alphas, [2, 1, 2])

    def test_validation(self):
        with self.assertRaises(ValueError):
            SpectralIndex(a=0, b=1, m=3)
        with self.assertRaises(ValueError):
            SpectralIndex(a=1, b=1, m=-3)

    def test_modular_point(self):
        self.assertEqual(families.ModularPoint(y1=2.0, y2=1.5).product, 3.0)
        self.assertEqual(families.ModularPoint(y1=2.0).product, 2.0)


class TestKFamily:
    def test_value_at_one(self):
        assert families.k_family(SpectralIndex(a=2, b=1, m=3), 1.0) == pytest.approx(
            math.gamma(2.5) / 2
        )
        assert families.k_family(SpectralIndex(a=3, b=1, m=3), 1.0) == pytest.approx(
            math.gamma(3.5) / 6
        )

    def test_dimension_three(self):
        value = families.k_family(SpectralIndex(a=2, b=1, m=3), 4.0)
        assert value == pytest.approx(math.sqrt(math.pi) / 9, rel=1e-13)

    def test_dimension_four(self):
        # d̃ = a + b collapses the Gauss function to (1 - u)^{-b}
        idx = SpectralIndex(a=3, b=2, m=4)
        assert families.k_tilde(idx, 0.4) == pytest.approx(0.6**-2, rel=1e-14)

    def test_tilde_variants(self):
        idx = SpectralIndex(a=2, b=1, m=5)
        assert families.tilde_variants(idx, 0.3) == families.k_tilde(idx, 0.3)

    def test_domain(self):
        idx = SpectralIndex(a=2, b=1, m=3)
        with pytest.raises(ArgDomainException):
            families.k_family(idx, 0.0)
        with pytest.raises(ArgDomainException):
            families.k_tilde(idx, 1.0)
        with pytest.raises(ParamDomainException):
            families.k_family(SpectralIndex(a=2, b=1, c=1, m=3), 0.5)


class TestHFamily:
    def test_value_at_one(self):
        h111 = families.h_family(SpectralIndex(a=1, b=1, c=1, m=3), 1.0, 1.0)
        h211 = families.h_family(SpectralIndex(a=2, b=1, c=1, m=3), 1.0, 1.0)
        assert h111 == pytest.approx(math.gamma(2.5) / 2)
        assert h211 == pytest.approx(math.gamma(3.5) / math.gamma(4))

    @pytest.mark.parametrize("y1", [0.5, 2.0, 4.0])
    def test_reduces_to_k(self, y1):
        h = families.h_family(SpectralIndex(a=1, b=2, c=1, m=5), y1, 1 / y1)
        k = families.k_family(SpectralIndex(a=2, b=2, m=5), y1)
        assert h == pytest.approx(k, rel=1e-10)

    def test_one_variable(self):
        # y1 = 1 leaves ₂F₁ in 1 - y2 through the c index
        idx = SpectralIndex(a=1, b=1, c=2, m=4)
        expected = math.gamma(4) / math.gamma(4) * hyp2f1(4, 2, 4, 0.3)
        assert families.h_family(idx, 1.0, 0.7) == pytest.approx(expected)

    def test_domain(self):
        idx = SpectralIndex(a=1, b=1, c=1, m=3)
        with pytest.raises(ArgDomainException):
            families.h_family(idx, -1.0, 0.5)
        with pytest.raises(ParamDomainException):
            families.h_tilde(SpectralIndex(a=1, b=1, m=3), 0.1, 0.2)


class TestNFamily:
    def test_matches_k_and_h(self):
        assert families.n_family([2, 1], [0.6], 3.7) == pytest.approx(
            families.k_family(SpectralIndex(a=2, b=1, m=3.7), 0.6), rel=1e-12
        )
        assert families.n_family([2, 1, 1], [0.8, 0.9], 3.7) == pytest.approx(
            families.h_family(SpectralIndex(a=2, b=1, c=1, m=3.7), 0.8, 0.9),
            rel=1e-11,
        )

    def test_invalid(self):
        with pytest.raises(ParamDomainException):
            families.n_family([1, 1], [0.5, 0.5], 3)
        with pytest.raises(ParamDomainException):
            families.n_family([1, 0], [0.5], 3)
        with pytest.raises(ArgDomainException):
            families.n_family([1, 1], [-0.5], 3)


class TestShiftsAndJets:
    @pytest.mark.parametrize("m", [2.5, 3.0, 5.0, 8.0])
    @pytest.mark.parametrize("u", [0.75, -0.6])
    def test_k_dimension_shift(self, m, u):
        residuals = families.dimension_shift_residuals(SpectralIndex(a=2, b=1, m=m), u)
        assert set(residuals) == {"m_shift", "recurrence", "b_shift"}
        scale = families.k_tilde(SpectralIndex(a=2, b=1, m=m + 2), u)
        assert max(abs(r) for r in residuals.values()) < 1e-10 * max(1.0, scale)

    def test_h_dimension_shift(self):
        idx = SpectralIndex(a=1, b=1, c=1, m=3.7)
        residuals = families.dimension_shift_residuals(idx, 0.4, -0.3)
        assert set(residuals) == {"m_shift", "recurrence", "b_shift", "c_shift"}
        scale = families.h_tilde(idx.shifted(dm=2), 0.4, -0.3)
        assert max(abs(r) for r in residuals.values()) < 1e-10 * max(1.0, scale)

    def test_shift_domain(self):
        with pytest.raises(ArgDomainException):
            families.dimension_shift_residuals(SpectralIndex(a=2, b=1, m=3), 1.5)

    def test_jet_order(self):
        assert families.jet_order(4) == 0
        assert families.jet_order(8.0) == 2
        for m in (5, 2, 6.5):
            with pytest.raises(ParamDomainException):
                families.jet_order(m)

    def test_k_jet_dimension_six(self):
        # K̃_{2,1}(u; 6) = (3 - 2u)/(1 - u)²
        idx = SpectralIndex(a=2, b=1, m=6)
        for u in (0.3, -0.5):
            assert families.jet_formula(idx, u) == pytest.approx(
                (3 - 2 * u) / (1 - u) ** 2, rel=1e-14
            )

    @pytest.mark.parametrize("m", [4, 6, 8, 10])
    def test_jets_match_families(self, m):
        k_idx = SpectralIndex(a=3, b=2, m=m)
        assert families.jet_formula(k_idx, 0.45) == pytest.approx(
            families.k_tilde(k_idx, 0.45), rel=1e-11
        )
        h_idx = SpectralIndex(a=2, b=1, c=1, m=m)
        assert families.jet_formula(h_idx, 0.3, -0.2) == pytest.approx(
            families.h_tilde(h_idx, 0.3, -0.2), rel=1e-11
        )

    def test_jet_index_mismatch(self):
        with pytest.raises(ParamDomainException):
            families.jet_formula(SpectralIndex(a=2, b=1, c=1, m=6), 0.3)
        with pytest.raises(ParamDomainException):
            families.jet_formula(SpectralIndex(a=2, b=1, m=6), 0.3, 0.2)


class TestContinuedFraction:
    @pytest.mark.parametrize("u", [0.5, -0.7])
    def test_spectral_cf_ratio(self, u):
        idx = SpectralIndex(a=2, b=1, m=3.7)
        expected = (
            idx.weight
            / idx.d_tilde
            * families.k_tilde(idx.shifted(da=1), u)
            / families.k_tilde(idx, u)
        )
        assert families.spectral_cf_ratio(idx, u, depth=120) == pytest.approx(
            expected, rel=1e-11
        )


if __name__ == "__main__":
    unittest.main()
