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

import json
from typing import Dict, Optional

import sympy

from modcurv.symbols.decompose import SpectralDecomposition
from modcurv.symbols.words import B0, GRAD, GRAD2, KPOW, SymbolPoly, SymbolWord

INDEX_NAMES = "ijlnpq"


def _index(i: int) -> str:
    return INDEX_NAMES[i] if i < len(INDEX_NAMES) else f"i{i}"


def _power(base: str, power: int) -> str:
    return base if power == 1 else f"{base}^{power}"


def _atom(atom) -> str:
    if atom.kind == B0:
        return _power("b0", atom.power)
    if atom.kind == KPOW:
        return _power("k", atom.power)
    names = "".join(_index(i) for i in atom.indices)
    if atom.kind in (GRAD, GRAD2):
        return f"d_{names}k"
    return atom.kind


def _coeff(coeff: sympy.Expr) -> str:
    text = sympy.sstr(sympy.factor(coeff))
    return f"({text})" if any(op in text[1:] for op in "+-") else text


def render_word(w: SymbolWord) -> str:
    """Plain-text form, e.g. ``4/m * r^4 * k * b0^2 * d_ik * b0 * d_ik * b0``."""
    parts = [_coeff(w.coeff)]
    if w.r_power:
        parts.append(_power("r", w.r_power))
    parts.extend(f"xi_{_index(i)}" for i in w.xi)
    if w.weight.exponent:
        parts.append(_power("y1", w.weight.exponent))
    parts.extend(_atom(atom) for atom in w.atoms)
    return " * ".join(parts)


def render_poly(poly: SymbolPoly) -> str:
    if not len(poly):
        return "0"
    return "\n".join(f"  + {render_word(w)}" for w in poly)


def render_decomposition(decomposition: SpectralDecomposition) -> str:
    lines = []
    for family, name in (("K", "K_Delta"), ("H", "H_Delta")):
        terms = [
            f"({sympy.sstr(e.coeff)}) * {e.label}"
            for e in decomposition.entries
            if e.family == family
        ]
        lines.append(f"{name} = " + (" + ".join(terms) if terms else "0"))
    return "\n".join(lines)


def render_paper(
    b2: SymbolPoly,
    averaged: SymbolPoly,
    decomposition: SpectralDecomposition,
    crosscheck: Optional[float] = None,
) -> str:
    sections = [
        f"b2 ({len(b2)} words):",
        render_poly(b2),
        f"sphere average ({len(averaged)} words):",
        render_poly(averaged),
        "spectral decomposition:",
        render_decomposition(decomposition),
    ]
    if crosscheck is not None:
        sections.append(f"numeric cross-check deviation: {crosscheck:.3e}")
    return "\n".join(sections)


def render_json(
    b2: SymbolPoly,
    averaged: SymbolPoly,
    decomposition: SpectralDecomposition,
    crosscheck: Optional[float] = None,
) -> str:
    payload: Dict = {
        "b2": [render_word(w) for w in b2],
        "average": [render_word(w) for w in averaged],
        "decomposition": decomposition.as_dict(),
    }
    if crosscheck is not None:
        payload["crosscheck"] = crosscheck
    return json.dumps(payload, indent=2)
