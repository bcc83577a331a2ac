#!/usr/bin/env python3
"""Build the large named-graph fixtures as graph6 files.

The library deliberately ships these graphs as data rather than exposing
constructors for them; this script is the one-time producer.  Each
construction is verified against the expected strongly-regular parameters
before anything is written.

  schlafli.g6     srg(27, 16, 10, 8): complement of the intersection graph
                  of the 27 lines on a cubic surface (double-six model).
  higman_sims.g6  srg(100, 22, 0, 6): one extra vertex, the 22 points and
                  the 77 blocks of the Steiner system S(3,6,22); the system
                  itself comes from PG(2,4) plus one PSL(3,4)-orbit of
                  hyperovals.
  mclaughlin.g6   srg(275, 112, 30, 56): points, hexads and heptads of
                  S(4,7,23), built from the weight-7 words of the binary
                  Golay code.
"""

import sys
import time
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from spinweb.graph6 import write_graph6
from spinweb.graphs import Graph, complement
from spinweb.regularity import srg_params, three_point_params

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


# ---------------------------------------------------------------------------
# Schlafli graph
# ---------------------------------------------------------------------------

def schlafli() -> Graph:
    labels = ([("a", i) for i in range(6)] + [("b", i) for i in range(6)]
              + [("c", frozenset(p)) for p in combinations(range(6), 2)])

    def meet(u, v):
        (su, xu), (sv, xv) = u, v
        if su == "a" and sv == "a":
            return False
        if su == "b" and sv == "b":
            return False
        if {su, sv} == {"a", "b"}:
            return xu != xv
        if su == "c" and sv == "c":
            return not (xu & xv)
        line, pair = (xu, xv) if su in "ab" else (xv, xu)
        return line in pair

    n = len(labels)
    lines_meet = Graph.from_edges(n, [
        (u, v) for u in range(n) for v in range(u + 1, n)
        if meet(labels[u], labels[v])])
    return complement(lines_meet)


# ---------------------------------------------------------------------------
# Higman-Sims graph via S(3,6,22)
# ---------------------------------------------------------------------------

F4_MUL = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]


def f4_mul(a, b):
    return F4_MUL[a][b]


def normalize(vec):
    """Scale so the first nonzero coordinate is 1 (projective representative)."""
    for co in vec:
        if co:
            inv = next(s for s in range(1, 4) if f4_mul(co, s) == 1)
            return tuple(f4_mul(inv, x) for x in vec)
    raise ValueError("zero vector")


def pg24():
    points = sorted({normalize((x, y, z))
                     for x in range(4) for y in range(4) for z in range(4)
                     if (x, y, z) != (0, 0, 0)})
    index = {p: i for i, p in enumerate(points)}
    lines = []
    for coeffs in points:  # lines are dual to points
        line = frozenset(index[p] for p in points
                         if f4_mul(coeffs[0], p[0]) ^ f4_mul(coeffs[1], p[1])
                         ^ f4_mul(coeffs[2], p[2]) == 0)
        lines.append(line)
    assert len(points) == 21 and all(len(line) == 5 for line in lines)
    return points, index, lines


def hyperoval_orbit(points, index, lines):
    """One PSL(3,4)-orbit (size 56) of hyperovals, by closure under SL(3,4)."""
    collinear = set()
    for line in lines:
        collinear.update(frozenset(t) for t in combinations(sorted(line), 3))

    hyperovals = [frozenset(six) for six in combinations(range(21), 6)
                  if not any(frozenset(t) in collinear
                             for t in combinations(six, 3))]
    assert len(hyperovals) == 168, len(hyperovals)

    def transvection(i, j, lam):
        def apply_point(p):
            vec = list(p)
            vec[i] ^= f4_mul(lam, vec[j])
            return index[normalize(tuple(vec))]
        return [apply_point(p) for p in points]

    generators = [transvection(i, j, lam)
                  for i in range(3) for j in range(3) if i != j
                  for lam in (1, 2, 3)]
    start = hyperovals[0]
    orbit = {start}
    frontier = [start]
    while frontier:
        current = frontier.pop()
        for perm in generators:
            image = frozenset(perm[p] for p in current)
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
    assert len(orbit) == 56, len(orbit)
    return sorted(orbit, key=sorted)


def steiner_3_6_22():
    """Blocks of S(3,6,22) on points 0..21 (21 = the extension point)."""
    points, index, lines = pg24()
    blocks = [frozenset(line | {21}) for line in lines]
    blocks += hyperoval_orbit(points, index, lines)
    assert len(blocks) == 77
    seen = {}
    for triple in combinations(range(22), 3):
        containing = [b for b in blocks if set(triple) <= b]
        assert len(containing) == 1, (triple, len(containing))
        seen[triple] = containing[0]
    return blocks


def higman_sims() -> Graph:
    blocks = steiner_3_6_22()
    # vertex 0: the extra vertex; 1..22: points; 23..99: blocks
    edges = [(0, 1 + p) for p in range(22)]
    for bi, block in enumerate(blocks):
        for p in block:
            edges.append((1 + p, 23 + bi))
    for bi, bj in combinations(range(77), 2):
        if not (blocks[bi] & blocks[bj]):
            edges.append((23 + bi, 23 + bj))
    return Graph.from_edges(100, edges)


# ---------------------------------------------------------------------------
# McLaughlin graph via the binary Golay code / S(4,7,23)
# ---------------------------------------------------------------------------

GOLAY_GEN = 0b101011100011  # x^11 + x^9 + x^7 + x^6 + x^5 + x + 1


def steiner_4_7_23():
    basis = [((GOLAY_GEN << shift) | (GOLAY_GEN >> (23 - shift))) & ((1 << 23) - 1)
             for shift in range(12)]
    blocks = set()
    for combo in range(1 << 12):
        word = 0
        for i in range(12):
            if (combo >> i) & 1:
                word ^= basis[i]
        if word.bit_count() == 7:
            blocks.add(word)
    assert len(blocks) == 253, len(blocks)
    for quad in combinations(range(23), 4):
        mask = sum(1 << q for q in quad)
        assert sum(1 for b in blocks if b & mask == mask) == 1
    return sorted(blocks)


def mclaughlin() -> Graph:
    blocks = steiner_4_7_23()
    infinity = 22
    hexads = [b & ~(1 << infinity) for b in blocks if (b >> infinity) & 1]
    heptads = [b for b in blocks if not (b >> infinity) & 1]
    assert len(hexads) == 77 and len(heptads) == 176

    # vertices: 0..21 points, 22..98 hexads, 99..274 heptads
    edges = []
    for hi, hexad in enumerate(hexads):
        for p in range(22):
            if not (hexad >> p) & 1:
                edges.append((p, 22 + hi))
    for bi, heptad in enumerate(heptads):
        for p in range(22):
            if (heptad >> p) & 1:
                edges.append((p, 99 + bi))
    for hi, hj in combinations(range(77), 2):
        if not hexads[hi] & hexads[hj]:
            edges.append((22 + hi, 22 + hj))
    for hi, hexad in enumerate(hexads):
        for bi, heptad in enumerate(heptads):
            if (hexad & heptad).bit_count() == 3:
                edges.append((22 + hi, 99 + bi))
    for bi, bj in combinations(range(176), 2):
        if (heptads[bi] & heptads[bj]).bit_count() == 1:
            edges.append((99 + bi, 99 + bj))
    return Graph.from_edges(275, edges)


def build(name, maker, expect_srg, check_three_point=True):
    t0 = time.time()
    g = maker()
    params = srg_params(g)
    assert params is not None and params.as_tuple() == expect_srg, \
        f"{name}: got {params}, expected srg{expect_srg}"
    line = f"srg{params.as_tuple()}"
    if check_three_point:
        p3 = three_point_params(g)
        assert p3 is not None, f"{name}: expected 3-point regularity"
        line += f" q={p3.q_vector()}"
    FIXTURE_DIR.mkdir(exist_ok=True)
    path = FIXTURE_DIR / f"{name}.g6"
    path.write_bytes(write_graph6(g) + b"\n")
    print(f"{name}: {line}  ->  {path}  ({time.time()-t0:.1f}s)")


def main():
    build("schlafli", schlafli, (27, 16, 10, 8))
    build("higman_sims", higman_sims, (100, 22, 0, 6))
    build("mclaughlin", mclaughlin, (275, 112, 30, 56))


if __name__ == "__main__":
    main()
