"""Edge-list and decomposition file formats plus DOT export.

Edge list: a header line "n m" followed by m lines "u v"; '#' starts a
comment line; blank lines are ignored.  Decomposition documents carry three
sections HOST (an edge list), A1 and A2 (arc lines).
"""

from __future__ import annotations

from typing import Optional

from .decomp import Decomposition
from .digraph import Arc, Digraph


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            out.append((i, stripped))
    return out


def _parse_arc_line(line: str, lineno: int, n: int) -> Arc:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"expected 'u v', got {line!r}", lineno)
    try:
        u, v = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
    if not (0 <= u < n and 0 <= v < n):
        raise ParseError(f"vertex out of range in {line!r}", lineno)
    if u == v:
        raise ParseError(f"loop not allowed: {line!r}", lineno)
    return (u, v)


def _parse_edge_lines(lines: list[tuple[int, str]]) -> Digraph:
    if not lines:
        raise ParseError("empty document", 1)
    lineno, header = lines[0]
    parts = header.split()
    try:
        n, m = int(parts[0]), int(parts[1])
        if len(parts) != 2 or n < 0 or m < 0:
            raise ValueError
    except (ValueError, IndexError):
        raise ParseError(f"malformed header {header!r}, expected 'n m'", lineno) from None
    if len(lines) - 1 != m:
        raise ParseError(
            f"header announces {m} arcs but {len(lines) - 1} arc lines follow", lineno
        )
    arcs: set[Arc] = set()
    for lineno, line in lines[1:]:
        a = _parse_arc_line(line, lineno, n)
        if a in arcs:
            raise ParseError(f"duplicate arc {line!r}", lineno)
        arcs.add(a)
    return Digraph(n, arcs)


def parse_edge_list(text: str) -> Digraph:
    return _parse_edge_lines(_content_lines(text))


def render_edge_list(d: Digraph) -> str:
    lines = [f"{d.n} {d.m}"]
    lines += [f"{u} {v}" for u, v in d.sorted_arcs()]
    return "\n".join(lines) + "\n"


SECTION_NAMES = ("HOST", "A1", "A2")


def parse_decomposition(text: str) -> Decomposition:
    sections: dict[str, list[tuple[int, str]]] = {}
    current: Optional[str] = None
    for lineno, line in _content_lines(text):
        if line in SECTION_NAMES:
            if line in sections:
                raise ParseError(f"duplicate section {line}", lineno)
            current = line
            sections[current] = []
        elif current is None:
            raise ParseError(f"content before any section: {line!r}", lineno)
        else:
            sections[current].append((lineno, line))
    for name in SECTION_NAMES:
        if name not in sections:
            raise ParseError(f"missing section {name}", 1)
    host = _parse_edge_lines(sections["HOST"])

    def arc_set(name: str) -> frozenset[Arc]:
        arcs = set()
        for lineno, line in sections[name]:
            a = _parse_arc_line(line, lineno, host.n)
            if a not in host.arcs:
                raise ParseError(f"{name} arc {line!r} not in HOST", lineno)
            arcs.add(a)
        return frozenset(arcs)

    a1, a2 = arc_set("A1"), arc_set("A2")
    shared = sorted(a1 & a2)
    if shared:
        raise ParseError(f"A1 and A2 share arc {shared[0]}", 1)
    return Decomposition(host, a1, a2)


def render_decomposition(dec: Decomposition) -> str:
    lines = ["HOST", render_edge_list(dec.host).rstrip("\n")]
    for name, side in (("A1", dec.a1), ("A2", dec.a2)):
        lines.append(name)
        lines += [f"{u} {v}" for u, v in sorted(side)]
    return "\n".join(lines) + "\n"


def export_dot(d: Digraph, highlight: Optional[Decomposition] = None) -> str:
    """DOT text; with a decomposition, A1 arcs are red, A2 blue, unused gray."""
    if highlight is not None and highlight.host != d:
        raise ValueError("highlight decomposition host does not match digraph")
    lines = ["digraph {"]
    for v in range(d.n):
        lines.append(f'  {v} [label="{d.label(v)}"];')
    for u, v in d.sorted_arcs():
        if highlight is None:
            lines.append(f"  {u} -> {v};")
        elif (u, v) in highlight.a1:
            lines.append(f"  {u} -> {v} [color=red];")
        elif (u, v) in highlight.a2:
            lines.append(f"  {u} -> {v} [color=blue];")
        else:
            lines.append(f"  {u} -> {v} [color=gray];")
    lines.append("}")
    return "\n".join(lines) + "\n"
