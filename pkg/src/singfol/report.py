"""Deterministic structured-text report documents.

A report is a tree of string-keyed mappings, arrays and scalar leaves.
Scalars are rendered exactly (rationals as ``p/q``, booleans as
``true``/``false``); floating point never appears.  The renderer emits
two-space indentation, one ``key: value`` line per leaf and ``- `` items
for arrays; ``parse_document`` reads the text back into a tree whose
leaves are the verbatim strings, so render -> parse -> render is the
identity on rendered documents.  That exact round trip, plus the rule
that identical inputs produce identical documents, is what the golden
tests pin down.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction
from typing import Dict, List, Union

Tree = Union[str, Dict[str, "Tree"], List["Tree"]]


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, str):
        if "\n" in value:
            raise ValueError("scalar values must be single-line")
        return value
    raise TypeError(f"cannot render {type(value).__name__} in a report")


def render_document(tree) -> str:
    lines: List[str] = []
    _render_into(tree, 0, lines)
    return "\n".join(lines) + "\n"


def _render_into(node, depth: int, lines: List[str]):
    pad = "  " * depth
    if isinstance(node, dict):
        if not node:
            raise ValueError("empty mapping cannot be rendered")
        for key, value in node.items():
            if isinstance(value, dict) and value:
                lines.append(f"{pad}{key}:")
                _render_into(value, depth + 1, lines)
            elif isinstance(value, list):
                if not value:
                    lines.append(f"{pad}{key}: []")
                else:
                    lines.append(f"{pad}{key}:")
                    for item in value:
                        if isinstance(item, (dict, list)):
                            lines.append(f"{pad}  -")
                            _render_into(item, depth + 2, lines)
                        else:
                            lines.append(f"{pad}  - {_scalar(item)}")
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    else:
        raise TypeError("document root must be a mapping")


def parse_document(text: str) -> Dict[str, Tree]:
    """Inverse of render_document, with every leaf kept as a string."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    tree, rest = _parse_block(lines, 0, 0)
    if rest != len(lines):
        raise ValueError(f"trailing content at line {rest + 1}")
    return tree


def _indent_of(line: str) -> int:
    stripped = len(line) - len(line.lstrip(" "))
    if stripped % 2 != 0:
        raise ValueError(f"odd indentation: {line!r}")
    return stripped // 2


def _parse_block(lines: List[str], start: int, depth: int):
    mapping: Dict[str, Tree] = {}
    i = start
    while i < len(lines):
        line = lines[i]
        indent = _indent_of(line)
        if indent < depth:
            break
        if indent > depth:
            raise ValueError(f"unexpected indentation at line {i + 1}: {line!r}")
        content = line.strip()
        if content.startswith("- "):
            raise ValueError(f"array item outside an array at line {i + 1}")
        key, sep, rest = content.partition(":")
        if not sep:
            raise ValueError(f"missing ':' at line {i + 1}: {line!r}")
        key = key.strip()
        rest = rest.strip()
        if rest == "[]":
            mapping[key] = []
            i += 1
        elif rest:
            mapping[key] = rest
            i += 1
        else:
            i += 1
            if i < len(lines) and _indent_of(lines[i]) == depth + 1 and (
                lines[i].strip() == "-" or lines[i].strip().startswith("- ")
            ):
                items: List[Tree] = []
                while i < len(lines) and _indent_of(lines[i]) == depth + 1:
                    item_line = lines[i].strip()
                    if item_line == "-":
                        sub, i = _parse_block(lines, i + 1, depth + 2)
                        items.append(sub)
                    elif item_line.startswith("- "):
                        items.append(item_line[2:])
                        i += 1
                    else:
                        break
                mapping[key] = items
            else:
                sub, i = _parse_block(lines, i, depth + 1)
                mapping[key] = sub
    return mapping, i


def input_hash(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
