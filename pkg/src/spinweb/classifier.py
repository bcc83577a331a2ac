"""Closed-form spin-model classification.

A graph gives a symmetric spin model iff, up to complementation, it is
(i) the pentagon, (ii) a disjoint union of equal-size complete graphs, or
(iii) 3-point regular with q3 - 3*q2 + 3*q1 - q0 != 0.  Cases are tested
in that order, on the graph and then on its complement, and the first
match is recorded; ties (K3 is both complete and a triangle) therefore
resolve to the union case.

Case (iii) splits on freeness.  When all four triple types occur the
q-condition decides directly.  A 3-point regular graph that is
triangle-free but not lambda-free forces q2 = q1 = 0 with q3 vacuous; its
degree k is at least 3 once the pentagon and the unions are excluded, and
then q0 > 0, so the condition holds with value -q0.  The anti-triangle-free
side is the complement of that branch.

A tournament gives a (non-symmetric) spin model iff it is the 3-cycle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graphs import Graph, Tournament, complement, connected_components
from .regularity import (freeness, q_condition, srg_params,
                         three_point_params)


class NotASpinModel(ValueError):
    """family_of was called on a graph that is not a spin model."""


class VerdictCase(enum.Enum):
    PENTAGON = "pentagon"
    UNION_OF_COMPLETES = "union of completes"
    Q_CONDITION_HOLDS = "q-condition holds"
    THREE_CYCLE = "3-cycle"
    NOT_SPIN_MODEL = "not a spin model"


class AppliedTo(enum.Enum):
    GRAPH = "graph"
    COMPLEMENT = "complement"


class FamilyKind(enum.Enum):
    TLJ = "TLJ"
    BISCH_JONES = "Bisch-Jones"
    KAUFFMAN = "Kauffman"


@dataclass(frozen=True)
class Family:
    """Planar-algebra family plus the predicted dim V3.

    ``dims`` lists the possible values: one entry when the table pins it,
    the pair (14, 15) for a generic Kauffman graph, and empty with
    ``untabulated`` set for the mK_2, m > 2 cell the table omits (there the
    exact value is delegated to the oracle's rank computation).
    """

    kind: FamilyKind
    dims: tuple[int, ...]
    untabulated: bool = False


@dataclass(frozen=True)
class Verdict:
    is_spin_model: bool
    case: VerdictCase
    applied_to: AppliedTo | None
    family: Family | None
    reason: str
    q_value: int | None = None


def _as_union_of_equal_completes(g: Graph) -> tuple[int, int] | None:
    """(m, size) if g is a disjoint union of m equal complete graphs."""
    comps = connected_components(g)
    size = len(comps[0])
    for comp in comps:
        if len(comp) != size:
            return None
        for v in comp:
            if g.adj[v].bit_count() != size - 1:
                return None
    return (len(comps), size)


def _is_pentagon(g: Graph) -> bool:
    # the 5-cycle is the only 2-regular graph on 5 vertices
    return g.n == 5 and all(row.bit_count() == 2 for row in g.adj)


def _family_for_union(m: int, size: int) -> Family:
    if m == 1 or size == 1:
        return Family(FamilyKind.TLJ, (5,))
    if m == 2:
        return Family(FamilyKind.BISCH_JONES, (10,) if size == 2 else (11,))
    if size == 2:
        return Family(FamilyKind.BISCH_JONES, (), untabulated=True)
    return Family(FamilyKind.BISCH_JONES, (12,))


def classify_symmetric(g: Graph) -> Verdict:
    """Decide the symmetric spin-model question for a graph."""
    gc = complement(g)
    sides = ((g, AppliedTo.GRAPH), (gc, AppliedTo.COMPLEMENT))

    for side, tag in sides:
        if _is_pentagon(side):
            return Verdict(True, VerdictCase.PENTAGON, tag,
                           Family(FamilyKind.KAUFFMAN, (13,)),
                           f"{tag.value} is the pentagon")

    for side, tag in sides:
        union = _as_union_of_equal_completes(side)
        if union is not None:
            m, size = union
            return Verdict(True, VerdictCase.UNION_OF_COMPLETES, tag,
                           _family_for_union(m, size),
                           f"{tag.value} is {m} disjoint K_{size}")

    params = three_point_params(g)
    if params is None:
        if srg_params(g) is None:
            return Verdict(False, VerdictCase.NOT_SPIN_MODEL, None, None,
                           "not strongly regular")
        return Verdict(False, VerdictCase.NOT_SPIN_MODEL, None, None,
                       "strongly regular but not 3-point regular")

    params_c = three_point_params(gc)
    assert params_c is not None, "3-point regularity must survive complementation"
    for side, tag, p in ((g, AppliedTo.GRAPH, params),
                         (gc, AppliedTo.COMPLEMENT, params_c)):
        free = freeness(side)
        if free.none_free():
            value = q_condition(p)
            if value != 0:
                return Verdict(True, VerdictCase.Q_CONDITION_HOLDS, tag,
                               Family(FamilyKind.KAUFFMAN, (14, 15)),
                               f"3-point regular with q-condition {value} != 0 "
                               f"on the {tag.value}", q_value=value)
            return Verdict(False, VerdictCase.NOT_SPIN_MODEL, None, None,
                           "Smith graph: 3-point regular with q-condition 0",
                           q_value=0)
        if free.triangle_free and not free.lambda_free:
            # pentagon (k = 2) was already caught; k <= 1 would be lambda-free
            k = p.srg.k
            assert k >= 3, "triangle-free non-lambda-free srg with k <= 2 escaped"
            assert not p.q0_vacuous, "triangle-free with k >= 3 forces anti-triangles"
            value = -p.q0
            return Verdict(True, VerdictCase.Q_CONDITION_HOLDS, tag,
                           Family(FamilyKind.KAUFFMAN, (14, 15)),
                           f"{tag.value} is triangle-free, not lambda-free, "
                           f"k = {k} >= 3, so the q-condition holds with value {value}",
                           q_value=value)

    return Verdict(False, VerdictCase.NOT_SPIN_MODEL, None, None,
                   "3-point regular but no classification case applies")


def family_of(g: Graph) -> Family:
    verdict = classify_symmetric(g)
    if not verdict.is_spin_model:
        raise NotASpinModel(verdict.reason)
    return verdict.family


def is_regular_tournament(t: Tournament) -> int | None:
    """k = (n-1)/2 when all in- and out-degrees agree, else None."""
    k = t.arc[0].bit_count()
    for a in range(t.n):
        if t.out_degree(a) != k or t.in_degree(a) != k:
            return None
    return k


def classify_tournament(t: Tournament) -> Verdict:
    """Decide the non-symmetric spin-model question for a tournament."""
    k = is_regular_tournament(t)
    if k is None:
        return Verdict(False, VerdictCase.NOT_SPIN_MODEL, None, None,
                       "not a regular tournament")
    if k == 0:
        return Verdict(False, VerdictCase.NOT_SPIN_MODEL, None, None,
                       "single vertex: the generator is zero, hence symmetric")
    if k == 1:
        return Verdict(True, VerdictCase.THREE_CYCLE, AppliedTo.GRAPH,
                       Family(FamilyKind.BISCH_JONES, (9,)),
                       "the 3-cycle")
    return Verdict(False, VerdictCase.NOT_SPIN_MODEL, None, None,
                   f"regular tournament with k = {k} >= 2: "
                   "the Relation 3b system is inconsistent")
