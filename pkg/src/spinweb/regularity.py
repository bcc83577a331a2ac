"""Regularity, strong regularity, 3-point regularity, and freeness.

Parameter conventions: a class with no pair (or triple) of the relevant
kind reports value 0 with its vacuity flag set, mirroring the usual habit
of writing srg(3,2,1,0) for the triangle while keeping vacuity detectable.

Common-neighbor counts are three-way bitset ANDs plus popcounts, so the
triple scan is O(n^3 * n/w); that is census-grade and accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, TripleType


class VacuousParameter(ValueError):
    """A formula was asked to use a parameter whose class is empty."""


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int
    lam_vacuous: bool = False
    mu_vacuous: bool = False

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)


@dataclass(frozen=True)
class ThreePointParams:
    """Common-neighbor counts q3..q0 for triangle, lambda, anti-lambda,
    anti-triangle triples, with per-type vacuity flags."""

    srg: SrgParams
    q3: int
    q2: int
    q1: int
    q0: int
    q3_vacuous: bool = False
    q2_vacuous: bool = False
    q1_vacuous: bool = False
    q0_vacuous: bool = False

    def q_vector(self) -> tuple[int, int, int, int]:
        return (self.q3, self.q2, self.q1, self.q0)

    def any_vacuous(self) -> bool:
        return self.q3_vacuous or self.q2_vacuous or self.q1_vacuous or self.q0_vacuous


@dataclass(frozen=True)
class Freeness:
    triangle_free: bool
    lambda_free: bool
    anti_lambda_free: bool
    anti_triangle_free: bool

    def none_free(self) -> bool:
        return not (self.triangle_free or self.lambda_free
                    or self.anti_lambda_free or self.anti_triangle_free)


def regularity(g: Graph) -> int | None:
    """Common degree k if every vertex has it, else None."""
    k = g.adj[0].bit_count()
    for row in g.adj:
        if row.bit_count() != k:
            return None
    return k


def srg_params(g: Graph) -> SrgParams | None:
    """Strong-regularity parameters, or None if counts are not constant."""
    k = regularity(g)
    if k is None:
        return None
    lam = mu = None
    for a in range(g.n):
        row_a = g.adj[a]
        for b in range(a + 1, g.n):
            common = (row_a & g.adj[b]).bit_count()
            if (row_a >> b) & 1:
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    return SrgParams(
        n=g.n, k=k,
        lam=0 if lam is None else lam,
        mu=0 if mu is None else mu,
        lam_vacuous=lam is None,
        mu_vacuous=mu is None,
    )


def three_point_params(g: Graph) -> ThreePointParams | None:
    """3-point-regularity parameters over distinct triples, or None.

    Returns a value only when the graph is already strongly regular and the
    common-neighbor count of every distinct triple depends only on its
    induced type.
    """
    srg = srg_params(g)
    if srg is None:
        return None
    counts: list[int | None] = [None, None, None, None]  # index = edge count
    for a, b, c in combinations(range(g.n), 3):
        edges = (((g.adj[a] >> b) & 1) + ((g.adj[b] >> c) & 1) + ((g.adj[a] >> c) & 1))
        common = (g.adj[a] & g.adj[b] & g.adj[c]).bit_count()
        if counts[edges] is None:
            counts[edges] = common
        elif counts[edges] != common:
            return None
    return ThreePointParams(
        srg=srg,
        q3=counts[3] or 0, q2=counts[2] or 0, q1=counts[1] or 0, q0=counts[0] or 0,
        q3_vacuous=counts[3] is None, q2_vacuous=counts[2] is None,
        q1_vacuous=counts[1] is None, q0_vacuous=counts[0] is None,
    )


def freeness(g: Graph) -> Freeness:
    """Which of the four induced triple types never occur."""
    present = [False, False, False, False]
    for a, b, c in combinations(range(g.n), 3):
        edges = (((g.adj[a] >> b) & 1) + ((g.adj[b] >> c) & 1) + ((g.adj[a] >> c) & 1))
        present[edges] = True
    return Freeness(
        triangle_free=not present[TripleType.TRIANGLE.value],
        lambda_free=not present[TripleType.LAMBDA.value],
        anti_lambda_free=not present[TripleType.ANTI_LAMBDA.value],
        anti_triangle_free=not present[TripleType.ANTI_TRIANGLE.value],
    )


def q_condition(p: ThreePointParams) -> int:
    """q3 - 3*q2 + 3*q1 - q0.  Only defined when all four types occur."""
    if p.any_vacuous():
        raise VacuousParameter(
            "q-condition needs all four triple types present; "
            f"vacuous flags: q3={p.q3_vacuous} q2={p.q2_vacuous} "
            f"q1={p.q1_vacuous} q0={p.q0_vacuous}")
    return p.q3 - 3 * p.q2 + 3 * p.q1 - p.q0
