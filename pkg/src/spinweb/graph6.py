"""graph6 encoding and decoding (McKay's format).

Supports the one-byte size field for n < 63 and the 4-byte form for
63 <= n < 258048.  Payload bits are the upper triangle column by column,
x(0,1), x(0,2), x(1,2), x(0,3), ..., packed six per byte, each byte + 63.
"""

from __future__ import annotations

from .graphs import Graph

HEADER = b">>graph6<<"
_MAX_N = 258048


class Graph6Error(ValueError):
    pass


class InvalidChar(Graph6Error):
    """A byte outside the printable range 63..126."""


class Truncated(Graph6Error):
    """Fewer payload bytes than the vertex count requires."""


class TrailingGarbage(Graph6Error):
    """Extra bytes after the complete payload."""


def _as_bytes(text) -> bytes:
    if isinstance(text, str):
        try:
            return text.encode("latin-1")
        except UnicodeEncodeError as exc:
            raise InvalidChar(f"non-byte character in graph6 input: {exc}") from None
    return bytes(text)


def parse_graph6(text) -> Graph:
    data = _as_bytes(text).strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    for byte in data:
        if not 63 <= byte <= 126:
            raise InvalidChar(f"byte {byte} outside graph6 range 63..126")
    if not data:
        raise Truncated("empty graph6 string")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("8-byte size form (n >= 258048) not supported")
        if len(data) < 4:
            raise Truncated("4-byte size field cut short")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n < 63:
            raise Graph6Error(f"non-canonical 4-byte size field for n={n}")
        payload = data[4:]
    else:
        n = data[0] - 63
        payload = data[1:]
    if n < 1:
        raise Graph6Error("graph needs at least one vertex")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(payload) < nbytes:
        raise Truncated(f"need {nbytes} payload bytes, got {len(payload)}")
    if len(payload) > nbytes:
        raise TrailingGarbage(f"{len(payload) - nbytes} extra bytes after payload")
    rows = [0] * n
    bit = 0
    for b in range(1, n):
        for a in range(b):
            byte = payload[bit // 6] - 63
            if (byte >> (5 - bit % 6)) & 1:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
            bit += 1
    # padding bits beyond the triangle must be zero
    for extra in range(nbits, nbytes * 6):
        if (payload[extra // 6] - 63) >> (5 - extra % 6) & 1:
            raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> bytes:
    if g.n >= _MAX_N:
        raise Graph6Error(f"n = {g.n} too large for the supported graph6 forms")
    if g.n < 63:
        out = bytearray([g.n + 63])
    else:
        out = bytearray([126, 63 + (g.n >> 12), 63 + ((g.n >> 6) & 63), 63 + (g.n & 63)])
    acc = 0
    have = 0
    for b in range(1, g.n):
        for a in range(b):
            acc = (acc << 1) | ((g.adj[a] >> b) & 1)
            have += 1
            if have == 6:
                out.append(acc + 63)
                acc = 0
                have = 0
    if have:
        out.append((acc << (6 - have)) + 63)
    return bytes(out)


