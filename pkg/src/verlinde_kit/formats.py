"""Wire formats shared by the CLI and any machine consumer.

Laurent polynomial JSON:  {"offset": j0, "coeffs": [c_{j0}, c_{j0+1}, ...]}
meaning sum_j c_j z^j.  Ring element JSON: {"p": 5, "mults": [a1, ..., a4]}.
Weight JSON: {"m": 3, "parts": [3, 1]}.  The CLI additionally accepts compact
strings: "z^2+1+z^-2" or "[3]_z" for polynomials, "a1,a2,..." for
multiplicities and "3,1,0" for weight parts.
"""
from __future__ import annotations

import re

from .laurent import LaurentPoly, quantum_int
from .ring import VerObj
from .weyl import Weight


def laurent_to_json(f: LaurentPoly) -> dict:
    if not f.is_integral():
        raise ValueError("only integral Laurent polynomials have a wire form")
    if f.is_zero():
        return {"offset": 0, "coeffs": []}
    lo, hi = f.valuation(), f.degree()
    return {"offset": lo, "coeffs": [f.coeff(e) for e in range(lo, hi + 1)]}


def laurent_from_json(obj: dict) -> LaurentPoly:
    try:
        offset = int(obj["offset"])
        coeffs = list(obj["coeffs"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad Laurent polynomial object: {obj!r}") from exc
    return LaurentPoly({offset + k: int(c) for k, c in enumerate(coeffs)})


_TERM_RE = re.compile(
    r"""^(?P<coeff>[+-]?\d*)
         (?:\*?
           (?:
              \[(?P<qint>-?\d+)\]_?z
            | (?P<zvar>z)(?:\^(?P<exp>[+-]?\d+))?
           )
         )?$""",
    re.VERBOSE,
)


def _split_terms(text: str) -> list[str]:
    """Split on + and - at term boundaries, keeping signs; '^-' and '[-' do
    not end a term."""
    terms = []
    current = ""
    for k, ch in enumerate(text):
        if ch in "+-" and k > 0 and text[k - 1] not in "^[+-*":
            terms.append(current)
            current = ch
        else:
            current += ch
    terms.append(current)
    return terms


def parse_laurent(text: str) -> LaurentPoly:
    """Parse "z^2+1+z^-2", "[3]_z", "-[2]_z", "2*[4]_z - 3z" and the like."""
    cleaned = text.replace(" ", "")
    if not cleaned:
        raise ValueError("empty Laurent polynomial")
    total = LaurentPoly.zero()
    for term in _split_terms(cleaned):
        match = _TERM_RE.match(term)
        if not match:
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        raw = match.group("coeff")
        coeff = int(raw) if raw not in ("", "+", "-") else (-1 if raw == "-" else 1)
        if match.group("qint") is not None:
            total = total + quantum_int(int(match.group("qint"))) * coeff
        elif match.group("zvar"):
            exp = int(match.group("exp")) if match.group("exp") is not None else 1
            total = total + LaurentPoly.monomial(exp, coeff)
        elif raw not in ("", "+", "-"):
            total = total + coeff
        else:
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
    return total


def verobj_to_json(x: VerObj) -> dict:
    return {"p": x.p, "mults": list(x.mults)}


def verobj_from_json(obj: dict) -> VerObj:
    try:
        return VerObj.from_mults(int(obj["p"]), obj["mults"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad ring element object: {obj!r}") from exc


def parse_mults(text: str, p: int) -> VerObj:
    try:
        mults = tuple(int(a) for a in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse multiplicity list {text!r}") from exc
    return VerObj(p, mults)


def weight_to_json(w: Weight) -> dict:
    return {"m": w.m, "parts": list(w.parts)}


def weight_from_json(obj: dict) -> Weight:
    try:
        return Weight.of(int(obj["m"]), obj["parts"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad weight object: {obj!r}") from exc


def parse_weight(text: str, m: int) -> Weight:
    try:
        parts = tuple(int(a) for a in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse weight {text!r}") from exc
    return Weight.of(m, parts)
