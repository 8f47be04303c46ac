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


class ModcurvException(Exception):
    """Base exception for modcurv evaluation and verification errors."""

    def __init__(self, message):
        super().__init__()
        self.message = message

    def __str__(self) -> str:
        return self.message


class ParamDomainException(ModcurvException):
    """Parameters outside the domain of a function family."""

    pass


class ArgDomainException(ModcurvException):
    """Argument outside the supported real evaluation range."""

    pass


class DomainException(ModcurvException):
    """Scalar-function argument outside its domain."""

    pass


class NoConvergenceException(ModcurvException):
    """Series or continued fraction hit its term cap."""

    pass


class QuadratureException(ModcurvException):
    """Quadrature refinement exhausted its levels."""

    pass


class InternalMismatchException(ModcurvException):
    """Two independent evaluation paths disagree."""

    pass


class FitFailureException(ModcurvException):
    """A fitted scale constant is not argument independent."""

    pass


class PatternMismatchException(ModcurvException):
    """Symbol word does not match a spectral-family pattern."""

    pass


class HomogeneityException(ModcurvException):
    """Symbol word violates the homogeneity bookkeeping."""

    pass


class UnsupportedMonomialException(ModcurvException):
    """Sphere averaging requested for an unsupported xi monomial."""

    pass


class ConfigException(ModcurvException):
    """Invalid configuration file or value."""

    pass
