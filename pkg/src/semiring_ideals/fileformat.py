"""JSON semiring files.

Format::

    {"elements": ["0", "u", "1"], "zero": "0", "one": "1",
     "add": [["0", "u", "1"], ...], "mul": [[...], ...]}

Row i, column j holds element_i op element_j.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .core import FiniteSemiring, MalformedTableError, validate_semiring


def semiring_from_json(data) -> FiniteSemiring:
    """Validate a decoded JSON object.  Names in tables are resolved to indices first."""
    if not isinstance(data, dict):
        raise MalformedTableError("top level must be an object", "$")
    for k in ("elements", "zero", "one", "add", "mul"):
        if k not in data:
            raise MalformedTableError("missing key", k)
    names = data["elements"]
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        raise MalformedTableError("must be a list of strings", "elements")
    if len(set(names)) != len(names):
        raise MalformedTableError("names must be distinct", "elements")
    index = {name: i for i, name in enumerate(names)}

    def lookup(v, where):
        if v not in index:
            raise MalformedTableError(f"unknown element {v!r}", where)
        return index[v]

    tables = {}
    for tname in ("add", "mul"):
        rows = data[tname]
        if not isinstance(rows, list) or len(rows) != len(names):
            raise MalformedTableError(f"must have {len(names)} rows", tname)
        table = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != len(names):
                raise MalformedTableError(f"must have {len(names)} entries", f"{tname} row {i}")
            table.append([lookup(v, f"{tname}[{i}][{j}]") for j, v in enumerate(row)])
        tables[tname] = table
    zero = lookup(data["zero"], "zero")
    one = lookup(data["one"], "one")
    return validate_semiring(tables["add"], tables["mul"], zero, one, names)


def semiring_to_json(S: FiniteSemiring) -> dict:
    nm = S.element_names
    return {
        "elements": list(nm),
        "zero": nm[S.zero],
        "one": nm[S.one],
        "add": [[nm[v] for v in row] for row in S.add],
        "mul": [[nm[v] for v in row] for row in S.mul],
    }


def parse_semiring_file(path) -> FiniteSemiring:
    """Load and validate a semiring file.

    Raises OSError, MalformedTableError (JSON or shape problems, with a
    location), or AxiomError.
    """
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedTableError(e.msg, f"line {e.lineno} column {e.colno}") from e
    return semiring_from_json(data)


def write_semiring_file(S: FiniteSemiring, path) -> None:
    Path(path).write_text(json.dumps(semiring_to_json(S), indent=1) + "\n")


def semiring_id(S: FiniteSemiring) -> str:
    """Content hash of the canonical tables; stable across relabelings."""
    from .enumeration import canonical_key

    return hashlib.sha256(canonical_key(S)).hexdigest()[:16]


def ideal_to_json(ideal) -> dict:
    return {"semiring": semiring_id(ideal.semiring), "members": ideal.names()}
