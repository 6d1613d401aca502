"""Text and JSON serialization of families.

Text::

    n=6 k=3
    1 2 3
    1 2 4

JSON: ``{"n": 6, "k": 3, "edges": [[1, 2, 3], [1, 2, 4]]}`` with edges in
colex order. Both writers are canonical, so reading and re-writing a file
produced here gives identical bytes.
"""
from __future__ import annotations

import json
import re
from pathlib import Path

from .core import Edge, Family
from .errors import FormatError, HypergraphError

_HEADER = re.compile(r"^\s*n\s*=\s*(\d+)\s+k\s*=\s*(\d+)\s*$")


def family_to_text(f: Family) -> str:
    lines = [f"n={f.n} k={f.k}"]
    lines.extend(str(e) for e in f)
    return "\n".join(lines) + "\n"


def family_from_text(text: str) -> Family:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise FormatError("empty family file")
    m = _HEADER.match(lines[0])
    if not m:
        raise FormatError(f"bad header line {lines[0]!r}; expected 'n=<n> k=<k>'")
    n, k = int(m.group(1)), int(m.group(2))
    try:
        return Family(n, k, (Edge.parse(ln) for ln in lines[1:]))
    except (HypergraphError, ValueError) as exc:
        raise FormatError(str(exc)) from exc


def family_to_dict(f: Family) -> dict:
    return {"n": f.n, "k": f.k, "edges": [list(e) for e in f]}


def family_from_dict(data: dict) -> Family:
    try:
        n, k, edges = int(data["n"]), int(data["k"]), data["edges"]
        return Family(n, k, (Edge(e) for e in edges))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed family object: {exc}") from exc
    except HypergraphError as exc:
        raise FormatError(str(exc)) from exc


def family_to_json(f: Family) -> str:
    return json.dumps(family_to_dict(f)) + "\n"


def family_from_json(text: str) -> Family:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return family_from_dict(data)


def read_family(path: str | Path) -> Family:
    """Read a family, sniffing JSON versus the text format."""
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        return family_from_json(text)
    return family_from_text(text)


def write_family(f: Family, path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix == ".json" else "text"
    payload = family_to_json(f) if fmt == "json" else family_to_text(f)
    path.write_text(payload, encoding="utf-8")
