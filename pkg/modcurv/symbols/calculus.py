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

"""Resolvent symbols b₀, b₁, b₂ of the operator k·Δ on a flat torus.

The symbol of k·Δ is p₂ = k r² with r = |ξ| (p₁ = p₀ = 0). With
b₀ = (p₂ − λ)^{−1} the higher terms follow from

  b_j = −Σ a_{|α|}(b_l, p_{2−n}) · b₀,   |α| + l + n = j, l < j

where a_j(b, p) = Σ_{|α|=j} (−i)^j/α! ∂_ξ^α b · ∂_x^α p.
"""

import logging
from typing import Dict, List, Tuple

import sympy

from modcurv.errors import (
    HomogeneityException,
    InternalMismatchException,
    UnsupportedMonomialException,
)
from modcurv.symbols.words import (
    B0,
    GRAD,
    GRAD2,
    KPOW,
    SymbolPoly,
    SymbolWord,
    b0,
    grad2_k,
    grad_k,
    kpow,
    word,
)

LOG = logging.getLogger(__name__)

MAX_ORDER = 2


def d_xi(w: SymbolWord, j: int) -> List[Tuple[SymbolWord, Dict[int, int]]]:
    """∂/∂ξ_j of a word, by the product rule.

    ∂ξ_j r^n = n r^{n−2} ξ_j, ∂ξ_j ξ_l = δ_{jl} and
    ∂ξ_j b₀^p = −2p ξ_j k b₀^{p+1}; k and its derivatives are ξ-free.

    Each term comes with the index substitution its δ induces. The index l
    may be contracted with a factor outside this word, so callers apply the
    substitution to the whole product.
    """
    terms = []
    if w.r_power:
        terms.append(
            (
                w._replace(
                    coeff=w.coeff * w.r_power,
                    r_power=w.r_power - 2,
                    xi=tuple(sorted(w.xi + (j,))),
                ),
                {},
            )
        )
    for position, l in enumerate(w.xi):
        rest = w._replace(xi=w.xi[:position] + w.xi[position + 1 :])
        terms.append((rest.renamed({l: j}), {l: j}))
    for position, atom in enumerate(w.atoms):
        if atom.kind != B0:
            continue
        atoms = (
            w.atoms[:position] + (kpow(1), b0(atom.power + 1)) + w.atoms[position + 1 :]
        )
        terms.append(
            (
                w._replace(
                    coeff=w.coeff * (-2 * atom.power),
                    xi=tuple(sorted(w.xi + (j,))),
                    atoms=atoms,
                ),
                {},
            )
        )
    return terms


def d_x(w: SymbolWord, l: int) -> List[SymbolWord]:
    """∂/∂x_l of a word, by the product rule.

    ∂_l b₀ = −r² b₀ (∇_l k) b₀ since b₀ = (k r² − λ)^{−1}.
    """
    terms = []
    for position, atom in enumerate(w.atoms):
        before, after = w.atoms[:position], w.atoms[position + 1 :]
        replacements: List[tuple] = []
        if atom.kind == KPOW:
            if atom.power < 0:
                raise UnsupportedMonomialException("x-derivative of a negative k power")
            replacements = [
                (1, 0, (kpow(i), grad_k(l), kpow(atom.power - 1 - i)))
                for i in range(atom.power)
            ]
        elif atom.kind == B0:
            replacements = [
                (-1, 2, (b0(i + 1), grad_k(l), b0(atom.power - i)))
                for i in range(atom.power)
            ]
        elif atom.kind == GRAD:
            replacements = [(1, 0, (grad2_k(atom.indices[0], l),))]
        elif atom.kind == GRAD2:
            raise UnsupportedMonomialException("third derivatives of k")
        for sign, extra_r, middle in replacements:
            terms.append(
                w._replace(
                    coeff=w.coeff * sign,
                    r_power=w.r_power + extra_r,
                    atoms=before + tuple(a for a in middle if a.power) + after,
                )
            )
    return terms


def _shift_indices(w: SymbolWord, offset: int) -> SymbolWord:
    return w.renamed({i: i + offset for i in set(w.indices)})


def a_j(order: int, b: SymbolPoly, p: SymbolPoly) -> SymbolPoly:
    """a_j(b, p) for j = 0, 1, 2."""
    if order not in range(MAX_ORDER + 1):
        raise ValueError(f"a_j is implemented for j <= {MAX_ORDER}, got {order}")
    prefactor = {0: 1, 1: -sympy.I, 2: sympy.Rational(-1, 2)}[order]
    terms = []
    for bw in b:
        for pw in p:
            pw = _shift_indices(pw, bw.fresh_index())
            first = max(bw.fresh_index(), pw.fresh_index())
            derivative_indices = list(range(first, first + order))
            left: List[Tuple[SymbolWord, List[Dict[int, int]]]] = [(bw, [])]
            right = [pw]
            for index in derivative_indices:
                left = [
                    (t, substitutions + [substitution])
                    for w, substitutions in left
                    for t, substitution in d_xi(w, index)
                ]
                right = [t for w in right for t in d_x(w, index)]
            for lw, substitutions in left:
                for rw in right:
                    product = lw.times(rw)
                    for substitution in substitutions:
                        product = product.renamed(substitution)
                    terms.append(product.scaled(prefactor))
    return SymbolPoly(terms)


def _times_b0(poly: SymbolPoly) -> SymbolPoly:
    return SymbolPoly(w._replace(atoms=w.atoms + (b0(1),)) for w in poly)


def operator_symbol() -> Dict[int, SymbolPoly]:
    """p₂ = k r², p₁ = p₀ = 0."""
    return {
        2: SymbolPoly([word(1, 2, atoms=[kpow(1)])]),
        1: SymbolPoly(),
        0: SymbolPoly(),
    }


def resolvent_symbols(order: int = MAX_ORDER) -> List[SymbolPoly]:
    """[b₀, …, b_order] from the recursion."""
    if order not in range(MAX_ORDER + 1):
        raise ValueError(f"symbols are built up to order {MAX_ORDER}, got {order}")
    p = operator_symbol()
    symbols = [SymbolPoly([word(1, atoms=[b0(1)])])]
    for j in range(1, order + 1):
        total = SymbolPoly()
        for l in range(j):
            for n in range(3):
                alpha = j - l - n
                if alpha < 0 or not len(p[2 - n]):
                    continue
                total = total + a_j(alpha, symbols[l], p[2 - n])
        symbols.append(-_times_b0(total))
        LOG.debug(f"b{j}: {len(symbols[-1])} words")
    return symbols


def b1() -> SymbolPoly:
    return resolvent_symbols(1)[1]


def homogeneity_degree(w: SymbolWord) -> int:
    """Degree in ξ, counting b₀ as r^{−2}."""
    b0_power = sum(atom.power for atom in w.atoms if atom.kind == B0)
    return w.r_power + len(w.xi) - 2 * b0_power


def build_b2() -> SymbolPoly:
    """The fully expanded b₂, homogeneous of degree −4 in ξ.

    :raises: InternalMismatchException if an imaginary part survives
    :raises: HomogeneityException if a word has the wrong degree
    """
    result = resolvent_symbols(2)[2]
    if not result.is_real():
        raise InternalMismatchException("b2 has a non-vanishing imaginary part")
    for w in result:
        degree = homogeneity_degree(w)
        if degree != -4:
            raise HomogeneityException(f"b2 word {w} has degree {degree}")
    return result


def expected_b2() -> SymbolPoly:
    """The six summands of b₂ written out by hand."""
    return SymbolPoly(
        [
            word(4, 2, (0, 1), [kpow(1), b0(2), grad_k(0), b0(1), grad_k(1), b0(1)]),
            word(2, 4, (), [kpow(1), b0(2), grad_k(0), b0(1), grad_k(0), b0(1)]),
            word(-8, 4, (0, 1), [kpow(2), b0(3), grad_k(0), b0(1), grad_k(1), b0(1)]),
            word(
                -4,
                4,
                (0, 1),
                [kpow(1), b0(2), grad_k(0), kpow(1), b0(2), grad_k(1), b0(1)],
            ),
            word(-1, 2, (), [kpow(1), b0(2), grad2_k(0, 0), b0(1)]),
            word(4, 2, (0, 1), [kpow(2), b0(3), grad2_k(0, 1), b0(1)]),
        ]
    )
