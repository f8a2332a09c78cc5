"""
graph6 (short form) and DOT serialization. The byte encoding is networkx's; this module
checks input up front so malformed strings fail with the offending byte offset.
"""

import networkx as nx

from core.errors import DomainError, ParseError
from core.graph import Graph

GRAPH6_HEADER = ">>graph6<<"
MAX_SHORT_N = 62


def encode_graph6(g: Graph) -> str:
    """Encode g in short-form graph6 (n <= 62)."""
    if g.n > MAX_SHORT_N:
        raise DomainError(f"graph6 short form supports n <= {MAX_SHORT_N}, got {g.n}")
    return nx.to_graph6_bytes(g.nx_view, header=False).decode('ascii').rstrip("\n")


def _check_short_form(text: str, base: int) -> None:
    for index, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", base + index)
    if ord(text[0]) == 126:
        raise ParseError(f"long-form graph6 (n > {MAX_SHORT_N}) is not supported", base)

    n = ord(text[0]) - 63
    pair_count = n * (n - 1) // 2
    expected = 1 + (pair_count + 5) // 6
    if len(text) != expected:
        offset = base + min(len(text), expected)
        raise ParseError(f"graph6 for n={n} needs {expected} bytes, got {len(text)}", offset)

    # networkx drops the pad bits without looking at them
    padding = -pair_count % 6
    if padding and (ord(text[-1]) - 63) & ((1 << padding) - 1):
        raise ParseError("nonzero padding bits", base + len(text) - 1)


def decode_graph6(s: str) -> Graph:
    """Decode a short-form graph6 string; an optional >>graph6<< header is skipped."""
    text = s.rstrip("\r\n \t")
    base = 0
    if text.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        text = text[base:]
    if not text:
        raise ParseError("empty graph6 string", base)

    _check_short_form(text, base)
    return Graph.from_networkx(nx.from_graph6_bytes(text.encode('ascii')))


def to_dot(g: Graph, name: str = "G") -> str:
    """DOT rendering with vertex ids as labels."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
