"""
JSON form of algebra elements.

    {"algebra": "graded" | "sergeev",
     "terms": [{"coeff": "p/q", "e": [...], "perm": [1-based one-line], "c": [sorted 1-based]}]}

Terms are written in canonical order, so equal elements encode to identical JSON.
"""

import json
from typing import Any, Dict, List

from sergeev_tools.algebra import clifford
from sergeev_tools.algebra import permutation as perms
from sergeev_tools.algebra.element import Algebra, AlgebraKind, Element, Monomial
from sergeev_tools.algebra.error import AlgebraError, SerializationError
from sergeev_tools.algebra.scalar import format_scalar, parse_scalar


def encode_monomial(mono: Monomial) -> Dict[str, Any]:
    return {
        "e": list(mono.exponents),
        "perm": perms.to_one_line(mono.perm),
        "c": [j + 1 for j in clifford.indices(mono.clifford)],
    }


def encode_element(z: Element) -> Dict[str, Any]:
    terms: List[Dict[str, Any]] = []
    for mono, coefficient in z.items():
        term = encode_monomial(mono)
        term["coeff"] = format_scalar(coefficient)
        terms.append(term)
    return {"algebra": str(z.kind), "terms": terms}


def decode_element(data: Dict[str, Any], algebra: Algebra) -> Element:
    """
    Decode element JSON into the given algebra. The algebra tags must agree.
    """
    if not isinstance(data, dict) or "terms" not in data:
        raise SerializationError("Element JSON must be an object with a terms list")
    try:
        kind = AlgebraKind(data.get("algebra"))
    except ValueError:
        raise SerializationError(f'Unknown algebra tag "{data.get("algebra")}"')
    if kind != algebra.kind:
        raise SerializationError(
            f"Cannot decode {kind} element into the {algebra.kind} algebra"
        )

    terms = {}
    try:
        for term in data["terms"]:
            if any(not 1 <= j <= algebra.d for j in term["c"]):
                raise SerializationError(f"Clifford indices out of range: {term['c']}")
            mono = algebra.monomial(
                term["e"],
                perms.from_one_line(term["perm"], algebra.d),
                clifford.from_indices(j - 1 for j in term["c"]),
            )
            if mono in terms:
                raise SerializationError(f"Duplicate term {mono}")
            terms[mono] = parse_scalar(term["coeff"])
    except (KeyError, TypeError) as e:
        raise SerializationError(f"Malformed term: {e!r}")
    except AlgebraError as e:
        if isinstance(e, SerializationError):
            raise
        raise SerializationError(str(e))
    return algebra.element(terms)


def dumps_element(z: Element) -> str:
    return json.dumps(encode_element(z), sort_keys=True)


def loads_element(text: str, algebra: Algebra) -> Element:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SerializationError(f"Invalid JSON: {e}")
    return decode_element(data, algebra)
