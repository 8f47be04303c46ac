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
from collections import Counter

import sympy

from modcurv.errors import PatternMismatchException, UnsupportedMonomialException
from modcurv.symbols.words import (
    KPOW,
    ModularWeight,
    SymbolPoly,
    SymbolWord,
    b0,
    grad2_k,
    grad_k,
    kpow,
    m,
    word,
)

LOG = logging.getLogger(__name__)


def _check_contracted(w: SymbolWord) -> None:
    free = [i for i, count in Counter(w.indices).items() if count != 2]
    if free:
        raise PatternMismatchException(f"word {w} has free indices {free}")


def sphere_average(poly: SymbolPoly, dimension=m) -> SymbolPoly:
    """Integrate the ξ-monomials over the unit sphere S^{m−1}.

    ξ_a ξ_b becomes (r²/m) δ_ab and odd monomials vanish; the volume of the
    sphere is dropped. ``dimension`` is the symbol m or an exact number.

    :raises: UnsupportedMonomialException for ξ-degree 4 or more
    """
    dimension = sympy.sympify(dimension)
    averaged = []
    for w in poly:
        degree = len(w.xi)
        if degree == 0:
            averaged.append(w)
        elif degree % 2:
            LOG.debug(f"dropping odd monomial in {w}")
        elif degree == 2:
            a, b = w.xi
            factor = 1 if a == b else 1 / dimension
            contracted = w._replace(xi=(), r_power=w.r_power + 2).renamed({b: a})
            averaged.append(contracted.scaled(factor))
        else:
            raise UnsupportedMonomialException(
                f"sphere average of xi-degree {degree} is not supported"
            )
    result = SymbolPoly(averaged)
    for w in result:
        _check_contracted(w)
    return result


def normalize_k_left(poly: SymbolPoly) -> SymbolPoly:
    """Move every power of k to the front of its word.

    A k^q behind the first derivative factor becomes k^q y₁^q in front, as
    the modular operator y₁ records conjugation across that factor.
    """
    normalized = []
    for w in poly:
        if w.xi:
            raise PatternMismatchException(f"word {w} still depends on xi")
        front = weight = crossed = 0
        atoms = []
        for atom in w.atoms:
            if atom.is_rho:
                crossed += 1
                atoms.append(atom)
            elif atom.kind == KPOW:
                if crossed > 1:
                    raise PatternMismatchException(
                        f"k behind the second factor of {w} needs a y2 weight"
                    )
                front += atom.power
                weight += atom.power * crossed
            else:
                atoms.append(atom)
        if front:
            atoms.insert(0, kpow(front))
        normalized.append(
            w._replace(
                atoms=tuple(atoms),
                weight=ModularWeight(w.weight.exponent + weight),
            )
        )
    return SymbolPoly(normalized)


def expected_average() -> SymbolPoly:
    """Sphere average of b₂ written out by hand (up to the sphere volume)."""
    return SymbolPoly(
        [
            word(4 / m, 4, (), [kpow(1), b0(2), grad_k(0), b0(1), grad_k(0), b0(1)]),
            word(2, 4, (), [kpow(1), b0(2), grad_k(0), b0(1), grad_k(0), b0(1)]),
            word(-8 / m, 6, (), [kpow(2), b0(3), grad_k(0), b0(1), grad_k(0), b0(1)]),
            word(
                -4 / m,
                6,
                (),
                [kpow(1), b0(2), grad_k(0), kpow(1), b0(2), grad_k(0), b0(1)],
            ),
            word(-1, 2, (), [kpow(1), b0(2), grad2_k(0, 0), b0(1)]),
            word(4 / m, 4, (), [kpow(2), b0(3), grad2_k(0, 0), b0(1)]),
        ]
    )
