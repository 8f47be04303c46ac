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

"""Decomposition of the averaged b₂ into spectral families.

After averaging and moving k to the left, every word reads

  k^Q y₁^w · b₀^{l₀} ρ₁ b₀^{l₁} [ρ₂ b₀^{l₂}]

and contributes c · y₁^w · K_{l₀,l₁} (one derivative factor) or
c · y₁^w · H_{l₀,l₁,l₂} (two). Homogeneity fixes r^{2(Σl − 2)} and the
k-degree Q + #ρ − Σl = −1.
"""

import logging
import math
from collections import Counter
from typing import Dict, List, NamedTuple, Optional, Tuple

import sympy

from modcurv.errors import HomogeneityException, PatternMismatchException
from modcurv.spectral.closed_forms import h_delta, k_delta
from modcurv.spectral.families import SpectralIndex, h_family, k_family
from modcurv.symbols.averaging import normalize_k_left, sphere_average
from modcurv.symbols.calculus import build_b2
from modcurv.symbols.words import B0, GRAD2, KPOW, SymbolPoly, SymbolWord, m

LOG = logging.getLogger(__name__)

K_FAMILY = "K"
H_FAMILY = "H"


class SpectralEntry(NamedTuple):
    family: str
    indices: Tuple[int, ...]
    weight: int
    coeff: sympy.Expr
    contraction: str

    @property
    def label(self) -> str:
        name = f"{self.family}({','.join(str(i) for i in self.indices)})"
        if self.weight:
            power = "" if self.weight == 1 else f"^{self.weight}"
            name = f"y1{power}*{name}"
        return name


class SpectralDecomposition:
    """Spectral-family entries with coefficients rational in m."""

    def __init__(self, entries: List[SpectralEntry]):
        merged: Dict[Tuple, SpectralEntry] = {}
        for entry in entries:
            key = (entry.family, entry.indices, entry.weight, entry.contraction)
            if key in merged:
                coeff = sympy.cancel(merged[key].coeff + entry.coeff)
                entry = entry._replace(coeff=coeff)
            merged[key] = entry._replace(coeff=sympy.cancel(entry.coeff))
        self.entries = sorted(
            (e for e in merged.values() if e.coeff != 0),
            key=lambda e: (e.family, e.weight, e.indices),
        )

    def part(self, family: str) -> Dict[Tuple[Tuple[int, ...], int], sympy.Expr]:
        return {
            (e.indices, e.weight): e.coeff for e in self.entries if e.family == family
        }

    def as_dict(self) -> Dict[str, str]:
        return {e.label: sympy.sstr(e.coeff) for e in self.entries}

    def evaluate(
        self, family: str, s: float, m_value: float, t: Optional[float] = None
    ) -> float:
        """Numeric value of one family part at y₁ = s (and y₂ = t)."""
        total = []
        for e in self.entries:
            if e.family != family:
                continue
            coeff = float(e.coeff.subs(m, m_value))
            if family == K_FAMILY:
                a, b = e.indices
                value = k_family(SpectralIndex(a=a, b=b, m=m_value), s)
            else:
                a, b, c = e.indices
                value = h_family(SpectralIndex(a=a, b=b, c=c, m=m_value), s, t)
            total.append(coeff * s**e.weight * value)
        return math.fsum(total)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpectralDecomposition):
            return NotImplemented
        mine = {e.label: e.coeff for e in self.entries}
        theirs = {e.label: e.coeff for e in other.entries}
        if mine.keys() != theirs.keys():
            return False
        return all(sympy.simplify(mine[k] - theirs[k]) == 0 for k in mine)

    def __repr__(self) -> str:
        return f"SpectralDecomposition({self.as_dict()})"


def _contraction(rhos: List) -> str:
    if len(rhos) == 1 and rhos[0].kind == GRAD2:
        return "tr(d2k)"
    if len(rhos) == 2 and all(r.kind != GRAD2 for r in rhos):
        return "dk.dk"
    return ".".join(r.kind for r in rhos)


def _entry(w: SymbolWord) -> SpectralEntry:
    if w.xi:
        raise PatternMismatchException(f"word {w} still depends on xi")
    atoms = list(w.atoms)
    front = atoms.pop(0).power if atoms and atoms[0].kind == KPOW else 0
    shape_ok = len(atoms) in (3, 5) and all(
        (atom.kind == B0) if position % 2 == 0 else atom.is_rho
        for position, atom in enumerate(atoms)
    )
    if not shape_ok:
        raise PatternMismatchException(f"word {w} is not b0^l rho b0^l [rho b0^l]")
    free = [i for i, count in Counter(w.indices).items() if count != 2]
    if free:
        raise PatternMismatchException(f"word {w} has free indices {free}")

    ls = tuple(atom.power for atom in atoms[::2])
    rhos = atoms[1::2]
    if w.r_power != 2 * (sum(ls) - 2):
        raise HomogeneityException(
            f"word {w} has r^{w.r_power}, expected r^{2 * (sum(ls) - 2)}"
        )
    if front + len(rhos) - sum(ls) != -1:
        raise HomogeneityException(f"word {w} is not of degree -1 in k")
    family = K_FAMILY if len(rhos) == 1 else H_FAMILY
    return SpectralEntry(family, ls, w.weight.exponent, w.coeff, _contraction(rhos))


def decompose_spectral(poly: SymbolPoly) -> SpectralDecomposition:
    """Read off K and H contributions from a normalised, averaged poly.

    :raises: PatternMismatchException, HomogeneityException
    """
    return SpectralDecomposition([_entry(w) for w in poly])


def derive_decomposition() -> Tuple[SymbolPoly, SymbolPoly, SpectralDecomposition]:
    """b₂, its sphere average and the spectral decomposition."""
    b2 = build_b2()
    averaged = sphere_average(b2)
    decomposition = decompose_spectral(normalize_k_left(averaged))
    LOG.debug(f"b2 decomposition: {decomposition.as_dict()}")
    return b2, averaged, decomposition


def expected_decomposition() -> SpectralDecomposition:
    """K_Δ = (4/m)K₃,₁ − K₂,₁ and
    H_Δ = (4/m + 2)H₂,₁,₁ − (4/m)y₁H₂,₂,₁ − (8/m)H₃,₁,₁."""
    return SpectralDecomposition(
        [
            SpectralEntry(K_FAMILY, (3, 1), 0, 4 / m, "tr(d2k)"),
            SpectralEntry(K_FAMILY, (2, 1), 0, sympy.Integer(-1), "tr(d2k)"),
            SpectralEntry(H_FAMILY, (2, 1, 1), 0, 4 / m + 2, "dk.dk"),
            SpectralEntry(H_FAMILY, (2, 2, 1), 1, -4 / m, "dk.dk"),
            SpectralEntry(H_FAMILY, (3, 1, 1), 0, -8 / m, "dk.dk"),
        ]
    )


def numeric_crosscheck(
    decomposition: SpectralDecomposition, s: float, t: float, m_value: float
) -> float:
    """Largest deviation of the decomposition from K_Δ(s) and H_Δ(s, t).

    Deviations are relative to max(1, |closed form|).
    """
    k_value = decomposition.evaluate(K_FAMILY, s, m_value)
    h_value = decomposition.evaluate(H_FAMILY, s, m_value, t)
    k_ref = k_delta(s, m_value)
    h_ref = h_delta(s, t, m_value)
    return max(
        abs(k_value - k_ref) / max(1.0, abs(k_ref)),
        abs(h_value - h_ref) / max(1.0, abs(h_ref)),
    )
