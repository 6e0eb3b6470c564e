"""graph6 codec (bit-exact, n <= 62) and a DOT emitter.

graph6 packs the upper triangle of the adjacency matrix column by column,
x(0,1) x(0,2) x(1,2) x(0,3) ..., six bits per printable byte with offset 63,
zero-padded to a multiple of six.
"""

from __future__ import annotations

from chromastab.graph import Graph

_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the byte position of the problem."""

    def __init__(self, message, offset=0):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def encode(g: Graph) -> str:
    """graph6 string of a graph (labels are not part of the format)."""
    if g.n > 62:
        raise Graph6Error("graph6 output supports at most 62 vertices", 0)
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = (acc << 1) | (g.rows[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def encode_rows(n: int, rows) -> str:
    """graph6 string straight from raw adjacency rows."""
    return encode(Graph(n, tuple(rows)))


def decode(text) -> Graph:
    """Parse one graph6 string (optionally prefixed by the standard header)."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    base = 0
    if s.startswith(_HEADER):
        base = len(_HEADER)
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string", base)
    first = ord(s[0])
    if first == 126:
        raise Graph6Error("multi-byte vertex counts (n > 62) are not supported", base)
    if not 63 <= first <= 125:
        raise Graph6Error(f"invalid vertex-count byte {s[0]!r}", base)
    n = first - 63
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise Graph6Error(
            f"truncated graph6 string: need {need} data bytes, got {len(body)}",
            base + len(s),
        )
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph6 data", base + 1 + need)
    rows = [0] * n
    bit = 0
    for i, ch in enumerate(body):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"invalid graph6 byte {ch!r}", base + 1 + i)
        code -= 63
        for j in range(5, -1, -1):
            if bit >= n * (n - 1) // 2:
                if code >> j & 1:
                    raise Graph6Error("nonzero padding bits", base + 1 + i)
                continue
            if code >> j & 1:
                u, v = _bit_to_pair(bit)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph(n, tuple(rows))


def _bit_to_pair(bit):
    # column-major upper triangle: column v holds bits for u in 0..v-1
    v = 1
    while v * (v - 1) // 2 + v <= bit:
        v += 1
    return bit - v * (v - 1) // 2, v


def to_dot(g: Graph, name="G") -> str:
    """Graphviz DOT text; vertex labels are rendered when present."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        tag = g.labels[v] if g.labels is not None else None
        if tag is not None:
            lines.append(f'  {v} [label="{tag}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
