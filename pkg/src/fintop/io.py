"""JSON documents for spaces and maps.

A space document::

    {"points": 2, "opens": [[], [1], [0, 1]], "name": "S"}

A map document carries ``dom`` and ``cod`` (each a space document, a
generator reference such as ``"discrete(2)"``, or a path to a
``.space.json`` file) and an ``assignment`` list.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional

from .errors import DocumentError, FintopError, InvalidParameter
from .generators import from_reference
from .maps import ContinuousMap, make_map
from .space import FiniteSpace, members, validate_topology


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None


def _int(value: Any, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError(f"expected an integer, got {value!r}", where)
    return value


def space_from_document(doc: Any, where: str = "$", base: Optional[Path] = None) -> FiniteSpace:
    if isinstance(doc, str):
        if doc.endswith(".json"):
            path = Path(doc) if base is None else base / doc
            try:
                return parse_space(path.read_text(encoding="utf-8"))
            except OSError as exc:
                raise DocumentError(f"cannot read {path}: {exc.strerror}", where) from None
        try:
            return from_reference(doc)
        except InvalidParameter as exc:
            raise DocumentError(str(exc), where) from None
    if not isinstance(doc, dict):
        raise DocumentError("expected an object", where)
    unknown = set(doc) - {"points", "opens", "name"}
    if unknown:
        raise DocumentError(f"unknown fields {sorted(unknown)}", where)
    for key in ("points", "opens"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}", where)
    n = _int(doc["points"], f"{where}.points")
    opens = doc["opens"]
    if not isinstance(opens, list):
        raise DocumentError("expected a list", f"{where}.opens")
    family = []
    for i, o in enumerate(opens):
        if not isinstance(o, list):
            raise DocumentError("expected a list of point indices", f"{where}.opens[{i}]")
        family.append([_int(p, f"{where}.opens[{i}]") for p in o])
    if "name" in doc and not isinstance(doc["name"], str):
        raise DocumentError("expected a string", f"{where}.name")
    return validate_topology(n, family)


def space_to_document(space: FiniteSpace, name: Optional[str] = None) -> dict:
    doc: dict = {"points": space.n, "opens": [members(o) for o in space.opens]}
    if name is not None:
        doc["name"] = name
    return doc


def parse_space(text: str) -> FiniteSpace:
    return space_from_document(_load_json(text))


def serialize_space(space: FiniteSpace, name: Optional[str] = None) -> str:
    return json.dumps(space_to_document(space, name))


def map_from_document(doc: Any, base: Optional[Path] = None) -> ContinuousMap:
    if not isinstance(doc, dict):
        raise DocumentError("expected an object", "$")
    unknown = set(doc) - {"dom", "cod", "assignment", "name"}
    if unknown:
        raise DocumentError(f"unknown fields {sorted(unknown)}", "$")
    for key in ("dom", "cod", "assignment"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}", "$")
    dom = space_from_document(doc["dom"], "$.dom", base)
    cod = space_from_document(doc["cod"], "$.cod", base)
    if not isinstance(doc["assignment"], list):
        raise DocumentError("expected a list", "$.assignment")
    assignment = [_int(v, f"$.assignment[{i}]") for i, v in enumerate(doc["assignment"])]
    return make_map(dom, cod, assignment)


def map_to_document(f: ContinuousMap, name: Optional[str] = None) -> dict:
    doc: dict = {
        "dom": space_to_document(f.dom),
        "cod": space_to_document(f.cod),
        "assignment": list(f.assignment),
    }
    if name is not None:
        doc["name"] = name
    return doc


def parse_map(text: str, base: Optional[Path] = None) -> ContinuousMap:
    return map_from_document(_load_json(text), base)


def serialize_map(f: ContinuousMap, name: Optional[str] = None) -> str:
    return json.dumps(map_to_document(f, name))


def load_space(path: str | Path) -> FiniteSpace:
    """Read a space file, or build one from a generator reference."""
    p = Path(path)
    if not p.exists() and not str(path).endswith(".json"):
        try:
            return from_reference(str(path))
        except FintopError:
            pass
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {p}: {exc.strerror}") from None
    return parse_space(text)


def load_map(path: str | Path) -> ContinuousMap:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {p}: {exc.strerror}") from None
    return parse_map(text, p.parent)
