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

"""Noncommuting symbol words with exact coefficients.

A word is coeff · r^n · ξ_{i₁}⋯ξ_{i_d} · A₁A₂⋯A_N where the atoms A are
powers of b₀ = (k r² − λ)^{−1}, powers of k, (∇k)_i and (∇²k)_{ij}. Powers
of b₀ and k commute with each other but not with the derivatives of k, so
a word is a sequence of blocks b₀^p k^q separated by derivative atoms.

Indices are small integers; repeated indices are summed. Canonical words
merge each block into ``k^q b₀^p`` and rename indices in order of first
appearance.
"""

import itertools
import logging
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

import sympy

LOG = logging.getLogger(__name__)

m = sympy.Symbol("m", positive=True)

B0 = "b0"
KPOW = "k"
GRAD = "dk"
GRAD2 = "d2k"
RHO_KINDS = (GRAD, GRAD2)


class Atom(NamedTuple):
    kind: str
    power: int = 1
    indices: Tuple[int, ...] = ()

    @property
    def is_rho(self) -> bool:
        return self.kind in RHO_KINDS

    def renamed(self, mapping: Dict[int, int]) -> "Atom":
        if not self.indices:
            return self
        indices = tuple(mapping.get(i, i) for i in self.indices)
        if self.kind == GRAD2:
            indices = tuple(sorted(indices))
        return self._replace(indices=indices)


def b0(power: int = 1) -> Atom:
    return Atom(B0, power)


def kpow(power: int = 1) -> Atom:
    return Atom(KPOW, power)


def grad_k(i: int) -> Atom:
    return Atom(GRAD, 1, (i,))


def grad2_k(i: int, j: int) -> Atom:
    return Atom(GRAD2, 1, tuple(sorted((i, j))))


class ModularWeight(NamedTuple):
    """Power of the modular operator y₁ collected by moving k to the left."""

    exponent: int = 0


def _merge_blocks(atoms: Iterable[Atom]) -> Tuple[Atom, ...]:
    merged: List[Atom] = []
    q = p = 0

    def flush():
        if q:
            merged.append(kpow(q))
        if p:
            merged.append(b0(p))

    for atom in atoms:
        if atom.kind == KPOW:
            q += atom.power
        elif atom.kind == B0:
            p += atom.power
        else:
            flush()
            q = p = 0
            merged.append(atom)
    flush()
    return tuple(merged)


class SymbolWord(NamedTuple):
    coeff: sympy.Expr
    r_power: int = 0
    xi: Tuple[int, ...] = ()
    atoms: Tuple[Atom, ...] = ()
    weight: ModularWeight = ModularWeight()

    @property
    def key(self) -> Tuple:
        return (self.r_power, self.xi, self.atoms, self.weight)

    @property
    def indices(self) -> List[int]:
        found = list(self.xi)
        for atom in self.atoms:
            found.extend(atom.indices)
        return found

    def fresh_index(self) -> int:
        return max(self.indices, default=-1) + 1

    @property
    def rhos(self) -> List[Atom]:
        return [atom for atom in self.atoms if atom.is_rho]

    def renamed(self, mapping: Dict[int, int]) -> "SymbolWord":
        return self._replace(
            xi=tuple(sorted(mapping.get(i, i) for i in self.xi)),
            atoms=tuple(atom.renamed(mapping) for atom in self.atoms),
        )

    def scaled(self, factor) -> "SymbolWord":
        return self._replace(coeff=self.coeff * factor)

    def times(self, other: "SymbolWord") -> "SymbolWord":
        """Product self·other; shared indices are contracted."""
        return SymbolWord(
            coeff=self.coeff * other.coeff,
            r_power=self.r_power + other.r_power,
            xi=tuple(sorted(self.xi + other.xi)),
            atoms=self.atoms + other.atoms,
            weight=ModularWeight(self.weight.exponent + other.weight.exponent),
        )

    def canonical(self) -> "SymbolWord":
        word = self._replace(
            coeff=sympy.cancel(sympy.sympify(self.coeff)),
            atoms=_merge_blocks(self.atoms),
        )
        candidates = [word.renamed(mapping) for mapping in _namings(word)]
        return min(candidates, key=lambda w: w.key)


def _namings(word: SymbolWord) -> Iterator[Dict[int, int]]:
    """Renamings by order of first appearance.

    Both indices of a fresh (∇²k)_{ij} may come first, so each such atom
    doubles the candidates; the caller keeps the smallest result.
    """
    slots: List[List[Tuple[int, ...]]] = []
    for atom in word.atoms:
        if len(set(atom.indices)) == 2:
            slots.append([atom.indices, atom.indices[::-1]])
        elif atom.indices:
            slots.append([atom.indices])
    for choice in itertools.product(*slots):
        mapping: Dict[int, int] = {}
        for indices in choice:
            for i in indices:
                mapping.setdefault(i, len(mapping))
        for i in sorted(set(word.xi)):
            mapping.setdefault(i, len(mapping))
        yield mapping


class SymbolPoly:
    """A sum of canonical words, merged by structure."""

    def __init__(self, words: Iterable[SymbolWord] = ()):
        self._terms: Dict[Tuple, sympy.Expr] = {}
        for word in words:
            self._add(word.canonical())

    def _add(self, word: SymbolWord) -> None:
        coeff = sympy.cancel(self._terms.get(word.key, 0) + word.coeff)
        if coeff == 0:
            self._terms.pop(word.key, None)
        else:
            self._terms[word.key] = coeff

    @property
    def words(self) -> List[SymbolWord]:
        return [
            SymbolWord(coeff, r_power, xi, atoms, weight)
            for (r_power, xi, atoms, weight), coeff in sorted(
                self._terms.items(), key=lambda item: item[0]
            )
        ]

    def __iter__(self) -> Iterator[SymbolWord]:
        return iter(self.words)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "SymbolPoly") -> "SymbolPoly":
        return SymbolPoly(self.words + other.words)

    def __neg__(self) -> "SymbolPoly":
        return self.scaled(-1)

    def scaled(self, factor) -> "SymbolPoly":
        return SymbolPoly(word.scaled(factor) for word in self.words)

    def coefficient(self, word: SymbolWord) -> sympy.Expr:
        """Coefficient of the structure of ``word``, 0 if absent."""
        return self._terms.get(word.canonical().key, sympy.Integer(0))

    def is_real(self) -> bool:
        return all(sympy.im(coeff) == 0 for coeff in self._terms.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolPoly):
            return NotImplemented
        if self._terms.keys() != other._terms.keys():
            return False
        return all(
            sympy.simplify(coeff - other._terms[key]) == 0
            for key, coeff in self._terms.items()
        )

    def __repr__(self) -> str:
        return f"SymbolPoly({len(self)} words)"


def word(
    coeff,
    r_power: int = 0,
    xi: Iterable[int] = (),
    atoms: Iterable[Atom] = (),
    weight: Optional[int] = None,
) -> SymbolWord:
    """Convenience constructor with exact coefficients."""
    return SymbolWord(
        coeff=sympy.sympify(coeff),
        r_power=r_power,
        xi=tuple(sorted(xi)),
        atoms=tuple(atoms),
        weight=ModularWeight(weight or 0),
    )
