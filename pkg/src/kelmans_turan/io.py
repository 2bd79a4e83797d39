"""graph6, DOT and edge-list text formats."""

from __future__ import annotations

from .graph import MAX_N, Graph, GraphError, from_edges

_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """graph6 encoding without header (n <= 62 uses the one-byte size field)."""
    n = g.n
    mask = g.upper_mask()
    m = n * (n - 1) // 2
    out = [chr(n + 63)]
    for start in range(0, m, 6):
        chunk = 0
        for b in range(6):
            idx = start + b
            chunk = (chunk << 1) | (mask >> idx & 1 if idx < m else 0)
        out.append(chr(chunk + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c < 64 for c in codes):
        raise GraphError("graph6 string contains bytes outside 63..126")
    n = codes[0]
    if n > MAX_N:
        raise GraphError(f"graph6 size {n} exceeds supported maximum {MAX_N}")
    m = n * (n - 1) // 2
    body = codes[1:]
    if len(body) != (m + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(m + 5) // 6}")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte, bit = divmod(idx, 6)
            if body[byte] >> (5 - bit) & 1:
                edges.append((i, j))
            idx += 1
    return from_edges(n, edges)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g: Graph) -> str:
    """One ``u v`` pair per line; vertex count on a leading ``# n=`` comment."""
    lines = [f"# n={g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines; ``# n=K`` (or ``n``) fixes the vertex count."""
    edges = []
    declared = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("n="):
                declared = int(body[2:])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        n = declared
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return from_edges(n, edges)


def read_graph(text: str) -> Graph:
    """Accept either a graph6 line or an edge list."""
    s = text.strip()
    if s.startswith(_HEADER) or (s and "\n" not in s and " " not in s and not s.startswith("#")):
        return from_graph6(s)
    return from_edge_list(text)
