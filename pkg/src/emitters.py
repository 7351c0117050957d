from __future__ import annotations

import json
import numpy as np
from typing import Any, Optional
from uea import UEAElem, Monomial
from liesym import SymPoly
from expmap import SkeinReport
from numeric import GaussRat, Rational, USeries, format_rational


# JSON

def gauss_json(z: GaussRat) -> dict[str, str]:
    return {"re": format_rational(z.x), "im": format_rational(z.y)}


def series_json(s: USeries) -> list[dict[str, str]]:
    return [gauss_json(c) for c in s]


def sympoly_json(p: SymPoly) -> list[dict[str, Any]]:
    return [{"exp": list(monom), "coeff": gauss_json(coeff)} for monom, coeff in sorted(p.items())]


def uea_json(x: UEAElem) -> list[dict[str, Any]]:
    return [{"pbw": list(monom), "coeff": gauss_json(coeff)} for monom, coeff in sorted(x.terms.items())]


def matrix_json(m: np.ndarray) -> list[list[dict[str, str]]]:
    return [[gauss_json(v) for v in row] for row in m]


def quantize_document(kind: str, expr: str, poly: SymPoly, element: UEAElem,
                      center: Optional[list[GaussRat]]) -> dict[str, Any]:
    return {
        "map": kind,
        "expr": expr,
        "input": sympoly_json(poly),
        "terms": uea_json(element),
        "center": None if center is None else [gauss_json(c) for c in center],
    }


def quantize_rep_document(kind: str, expr: str, m: np.ndarray) -> dict[str, Any]:
    return {"map": kind, "expr": expr, "rep": "half", "matrix": matrix_json(m)}


def expmap_document(kind: str, order: int, basis: str, c1: USeries, c2: USeries) -> dict[str, Any]:
    return {"map": kind, "order": order, "basis": basis, "c1": series_json(c1), "c2": series_json(c2)}


def skein_document(report: SkeinReport) -> dict[str, Any]:
    return {
        "map": report.map,
        "order": report.order,
        "basis": "epsilon",
        "c1": series_json(report.c1),
        "c2": series_json(report.c2),
        "product_check": series_json(report.product_check),
        "passes_kauffman": report.passes_kauffman,
        "A": None if report.a_series is None else series_json(report.a_series),
    }


def dump_json(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


# Text and LaTeX

def _rational(q: Rational, latex: bool) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    if latex:
        return f"\\frac{{{q.numerator}}}{{{q.denominator}}}"
    return f"{q.numerator}/{q.denominator}"


def _signed_coefficient(coeff: GaussRat, has_symbol: bool, latex: bool) -> tuple[str, str]:
    # (sign, body); body is empty for a unit coefficient in front of a symbol
    if coeff.x and coeff.y:
        sign = "-" if coeff.y < 0 else "+"
        inner = f"{_rational(coeff.x, latex)} {sign} {_rational(abs(coeff.y), latex)} i"
        return "+", f"\\left({inner}\\right)" if latex else f"({inner})"
    if coeff.y:
        magnitude = abs(coeff.y)
        body = "i" if magnitude == 1 else f"{_rational(magnitude, latex)} i"
        return ("-" if coeff.y < 0 else "+"), body
    magnitude = abs(coeff.x)
    body = "" if magnitude == 1 and has_symbol else _rational(magnitude, latex)
    return ("-" if coeff.x < 0 else "+"), body


def combination(terms: list[tuple[GaussRat, str]], latex: bool = False) -> str:
    parts = []
    for coeff, symbol in terms:
        if not coeff:
            continue
        sign, body = _signed_coefficient(coeff, bool(symbol), latex)
        text = " ".join(t for t in (body, symbol) if t)
        if not parts:
            parts.append(text if sign == "+" else f"-{text}")
        else:
            parts.append(f" {sign} {text}")
    return "".join(parts) if parts else "0"


def monomial_symbol(monom: Monomial, hat: bool, latex: bool = False) -> str:
    pieces = []
    for i, e in enumerate(monom):
        if not e:
            continue
        if latex:
            base = f"\\hat{{E}}_{i+1}" if hat else f"E_{i+1}"
            pieces.append(base if e == 1 else f"{base}^{{{e}}}")
        else:
            base = f"Ê{i+1}" if hat else f"E{i+1}"
            pieces.append(base if e == 1 else f"{base}^{e}")
    return ("" if latex else " ").join(pieces)


def _graded(items) -> list:
    # highest degree first, constants last
    return sorted(items, key=lambda item: (-sum(item[0]), [-e for e in item[0]]))


def uea_text(x: UEAElem, latex: bool = False) -> str:
    return combination([(c, monomial_symbol(m, True, latex)) for m, c in _graded(x.terms.items())], latex)


def center_text(coeffs: list[GaussRat], latex: bool = False) -> str:
    delta = "\\Delta" if latex else "Δ"
    terms = []
    for m in reversed(range(len(coeffs))):
        symbol = "" if m == 0 else delta if m == 1 else f"{delta}^{{{m}}}" if latex else f"{delta}^{m}"
        terms.append((coeffs[m], symbol))
    return combination(terms, latex)


def series_text(s: USeries, latex: bool = False) -> str:
    terms = []
    for n, c in enumerate(s):
        symbol = "" if n == 0 else "u" if n == 1 else f"u^{{{n}}}" if latex else f"u^{n}"
        terms.append((c, symbol))
    tail = f"O(u^{{{s.order}}})" if latex else f"O(u^{s.order})"
    return f"{combination(terms, latex)} + {tail}"


def matrix_text(m: np.ndarray, latex: bool = False) -> str:
    cells = [[combination([(v, "")], latex) for v in row] for row in m]
    if latex:
        body = " \\\\ ".join(" & ".join(row) for row in cells)
        return f"\\begin{{pmatrix}} {body} \\end{{pmatrix}}"
    width = max(len(cell) for row in cells for cell in row)
    return "\n".join("[ " + "  ".join(cell.rjust(width) for cell in row) + " ]" for row in cells)


_BASIS_SYMBOLS = {
    "pauli": (("1⊗1", "Σ τ_i⊗τ_i"), ("\\mathbb{1}\\otimes\\mathbb{1}", "\\sum_i \\tau_i\\otimes\\tau_i")),
    "epsilon": (("δ^A_B δ^C_D", "(-ε^AC ε_BD)"),
                ("\\delta^{A}_{B}\\delta^{C}_{D}", "\\left(-\\epsilon^{AC}\\epsilon_{BD}\\right)")),
    "swap": (("δ^A_B δ^C_D", "δ^A_D δ^C_B"), ("\\delta^{A}_{B}\\delta^{C}_{D}", "\\delta^{A}_{D}\\delta^{C}_{B}")),
}


def decomposition_text(basis: str, c1: USeries, c2: USeries, latex: bool = False) -> str:
    first, second = _BASIS_SYMBOLS[basis][1 if latex else 0]
    if latex:
        return (f"\\left({series_text(c1, True)}\\right) {first}\n"
                f"+ \\left({series_text(c2, True)}\\right) {second}")
    return f"[{series_text(c1)}] {first}\n+ [{series_text(c2)}] {second}"
