"""JSON documents for set functions and ray catalogues.

Rationals are serialized as strings ("3", "-1/2") so round-trips are exact.
Subset keys are comma-joined sorted labels ("" for the empty set); every one
of the 2^n keys must be present, absent keys are an authoring error rather
than an implicit zero.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Mapping

from .core import SetFunction, VariableSet
from .rays import RayCatalogue

_RATIONAL = re.compile(r"-?\d+(/[1-9]\d*)?\Z")


class DocumentError(ValueError):
    """Malformed set-function or catalogue document."""


def _parse_rational(text: Any, where: str) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL.match(text):
        raise DocumentError(f"{where}: {text!r} is not an integer or p/q rational")
    return Fraction(text)


def render_rational(v: Fraction) -> str:
    return str(v)


def subset_key(vars: VariableSet, mask: int) -> str:
    return ",".join(vars.labels_of(mask))


def parse_set_function(doc: Mapping[str, Any]) -> SetFunction:
    if not isinstance(doc, Mapping):
        raise DocumentError("document must be a JSON object")
    labels = doc.get("variables")
    if (not isinstance(labels, list) or not labels
            or not all(isinstance(s, str) for s in labels)):
        raise DocumentError("'variables' must be a non-empty list of strings")
    if sorted(set(labels)) != labels:
        raise DocumentError("'variables' must be sorted and distinct")
    try:
        vars = VariableSet.of(labels)
    except ValueError as e:
        raise DocumentError(str(e)) from None
    values = doc.get("values")
    if not isinstance(values, Mapping):
        raise DocumentError("'values' must be an object")
    vals = [None] * vars.size
    for key, raw in values.items():
        parts = key.split(",") if key else []
        if sorted(set(parts)) != sorted(parts):
            raise DocumentError(f"subset key {key!r} repeats a label")
        try:
            mask = vars.mask_of(parts)
        except ValueError:
            raise DocumentError(f"subset key {key!r} uses unknown labels") from None
        if key != subset_key(vars, mask):
            raise DocumentError(f"subset key {key!r} is not in canonical sorted form")
        if vals[mask] is not None:
            raise DocumentError(f"subset key {key!r} appears twice")
        vals[mask] = _parse_rational(raw, f"value of {key!r}")
    missing = [subset_key(vars, s) for s in range(vars.size) if vals[s] is None]
    if missing:
        raise DocumentError(f"missing subset keys: {missing}")
    return SetFunction(vars, tuple(vals))


def parse_set_function_text(text: str) -> SetFunction:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON at line {e.lineno}, column {e.colno}") from None
    return parse_set_function(doc)


def serialize_set_function(m: SetFunction) -> dict:
    return {
        "variables": list(m.vars.labels),
        "values": {subset_key(m.vars, s): render_rational(m.values[s])
                   for s in range(m.vars.size)},
    }


def set_function_text(m: SetFunction) -> str:
    return json.dumps(serialize_set_function(m), indent=2, sort_keys=True) + "\n"


def catalogue_document(catalogue: RayCatalogue) -> dict:
    doc = {
        "n": catalogue.n,
        "variables": list(catalogue.vars.labels),
        "generators": [serialize_set_function(g)["values"] for g in catalogue.generators],
    }
    if catalogue.orbits is not None:
        doc["orbits"] = [{"representative": o.representative, "members": list(o.members)}
                         for o in catalogue.orbits]
    return doc


def catalogue_text(catalogue: RayCatalogue) -> str:
    return json.dumps(catalogue_document(catalogue), indent=2, sort_keys=True) + "\n"


def catalogue_table(catalogue: RayCatalogue) -> str:
    """One generator per line, tab-separated integer values in subset order."""
    lines = []
    for g in catalogue.generators:
        lines.append("\t".join(str(g.values[s]) for s in range(g.vars.size)))
    return "\n".join(lines) + "\n"
