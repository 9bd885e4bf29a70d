"""Edge-list files and vertex label sidecars.

Edge-list format::

    n 9
    0 2
    1 2
    ...

Header ``n <count>`` first, then one whitespace-separated ``u v`` pair per
line with 0-based ids. Blank lines and ``#`` comments are ignored on read.
The writer emits ``u < v`` in ascending order, LF-terminated.
"""
from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError
from .graph import Graph


def parse_edge_list(text: str) -> Graph:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise InputError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise InputError(f"expected header 'n <count>', got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise InputError(f"bad vertex count {head[1]!r}") from None
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex in {line!r}") from None
        edges.append((u, v))
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"duplicate edge {key}")
        seen.add(key)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    out = [f"n {g.n}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g), newline="\n")


def read_labels(path: str | Path) -> dict[str, int]:
    """Sidecar label map: JSON object ``{"v3": 2, ...}`` or lines ``v3 2``."""
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            name, _, ident = line.partition(" ")
            try:
                data[name] = int(ident.strip())
            except ValueError:
                raise InputError(f"bad label line {line!r}") from None
    if not isinstance(data, dict) or not all(isinstance(v, int) for v in data.values()):
        raise InputError("label map must send names to integer ids")
    if len(set(data.values())) != len(data):
        raise InputError("label map is not injective")
    return data


def resolve_vertex(token: str, labels: dict[str, int] | None) -> int:
    token = token.strip()
    if labels and token in labels:
        return labels[token]
    try:
        return int(token)
    except ValueError:
        raise InputError(f"unknown vertex {token!r}") from None
