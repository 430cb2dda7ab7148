"""Textual rendering and parsing of symbol strings and (multi)sets.

Alphabets up to 9 render as contiguous digit strings; larger alphabets use
dot-separated decimal symbols. Parsing accepts both, so output always
round-trips.
"""

from __future__ import annotations

import json
from typing import Iterable

from .strings import Symbols


def format_symbols(s: Iterable[int], k: int, style: str = "auto") -> str:
    s = tuple(s)
    if style == "auto":
        style = "digits" if k <= 9 else "dotted"
    if style == "digits":
        if k > 9:
            raise ValueError("digit rendering needs an alphabet of size <= 9")
        return "".join(str(x) for x in s)
    if style == "dotted":
        return ".".join(str(x) for x in s)
    if style == "json":
        return json.dumps(list(s))
    raise ValueError(f"unknown format {style!r}")


def parse_symbols(text: str) -> Symbols:
    text = text.strip()
    if not text:
        raise ValueError("empty symbol string")
    if text.startswith("["):
        return tuple(int(x) for x in json.loads(text))
    if "." in text:
        return tuple(int(part) for part in text.split("."))
    if not text.isdigit():
        raise ValueError(f"cannot parse symbol string {text!r}")
    return tuple(int(ch) for ch in text)


def format_set(elements: Iterable[int], style: str = "auto") -> str:
    elems = list(elements)
    if style == "json":
        return json.dumps(elems)
    return "{" + ",".join(str(e) for e in elems) + "}"


def parse_set(text: str) -> tuple[int, ...]:
    """Comma-separated integers; surrounding braces or brackets optional."""
    text = text.strip().lstrip("{[").rstrip("}]").strip()
    if not text:
        raise ValueError("empty set")
    return tuple(int(part.strip()) for part in text.split(","))
