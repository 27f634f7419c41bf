#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Discrete homotopy actions and their rigidification.

A discrete homotopy action is a simplicial map pi: A -> B where B is a reduced
Segal set and, on every level n >= 1, both

    a -> (d_1 ... d_n a, pi a)      and      a -> (d_0 ... d_0 a, pi a)

are bijections A_n -> A_0 x B_n. The bar projection Bar(X, G) -> B G is the
standard example; rigidify goes the other way and reads off a strict right
action of the group carried by B_1 on A_0.

Key components:
- DiscreteHomotopyAction, RigidAction, ActionEquivalence, Zigzag
- check_homotopy_action, from_bar, rigidify
- comparison_to_rigidification, roundtrip_check, canonical_action_agreement
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .bar import BarComplex, bar, bar_of_hom, nerve, recover_group_from_nerve, segal_check, segal_map
from .crossed import (
    CrossedModule,
    TruncatedSimplicialGroup,
    degenerate_translation_report,
    gamma_from_cm,
)
from .errors import AxiomFailure, DegreeOutOfRange, HomnormError, InvalidAction, NotHomotopyAction
from .groups import FiniteGroup, RightGSet, validate_right_action
from .reports import Report
from .simplicial import (
    SimplicialMap,
    TruncatedSimplicialSet,
    check_simplicial_map,
    compose_face_path,
    compose_maps,
    is_levelwise_bijective,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiscreteHomotopyAction:
    """
    A simplicial map pi: A -> B read as an action of the group of B on A_0.

    Attributes:
        pi: the simplicial map
    """

    pi: SimplicialMap

    @property
    def source(self) -> TruncatedSimplicialSet:
        return self.pi.source

    @property
    def target(self) -> TruncatedSimplicialSet:
        return self.pi.target

    @property
    def carrier(self) -> int:
        """Size of A_0, the set acted upon."""
        return self.pi.source.level_sizes[0]

    @property
    def truncation(self) -> int:
        return self.pi.source.truncation


@dataclass(frozen=True)
class RigidAction:
    """A strict right action of a group on {0..carrier_size-1}."""

    group: FiniteGroup
    action: RightGSet

    @property
    def carrier_size(self) -> int:
        return self.action.carrier_size


def _face_product(a: TruncatedSimplicialSet, pi: SimplicialMap, n: int, path: Sequence[int]) -> Tuple[int, ...]:
    # a -> (face path a, pi a), encoded as vertex * |B_n| + pi a
    faces = compose_face_path(a, n, path)
    width = pi.target.level_sizes[n]
    return tuple(v * width + p for v, p in zip(faces, pi.level_maps[n]))


def check_homotopy_action(pi: SimplicialMap) -> Report:
    """
    Check the three conditions of a discrete homotopy action.

    condition1: pi is a simplicial map with nonempty A_0
    condition2: B is a reduced Segal set with group-like level 1
    condition3: (d_1...d_n, pi) and (d_0...d_0, pi) are bijections on every level n >= 1

    Truncation below 3 is reported, not raised.
    """
    report = Report("homotopy action")
    a, b = pi.source, pi.target
    if a.truncation != b.truncation or a.truncation < 3:
        report.add("truncation", None, (a.truncation, b.truncation), "needs equal truncations of at least 3")
        return report

    structural = check_simplicial_map(pi)
    if a.level_sizes[0] == 0:
        structural.add("carrier", 0, (), "A_0 is empty")
    report.extend(structural, "condition1:")
    report.notes["condition1"] = structural.ok

    segal = segal_check(b)
    report.extend(segal.report, "condition2:")
    report.notes["condition2"] = segal.ok

    condition3 = True
    if structural.ok:
        full = a.level_sizes[0]
        for n in range(1, a.truncation + 1):
            expected = full * b.level_sizes[n]
            for name, path in (("d1...dn", list(range(n, 0, -1))), ("d0...d0", [0] * n)):
                codes = _face_product(a, pi, n, path)
                seen = {}
                for x, code in enumerate(codes):
                    if code in seen:
                        report.add("condition3:" + name, n, (seen[code], x), "map is not injective")
                        condition3 = False
                        break
                    seen[code] = x
                else:
                    if len(codes) != expected:
                        report.add("condition3:" + name, n, (len(codes), expected), "map is not surjective")
                        condition3 = False
    else:
        condition3 = False
    report.notes["condition3"] = condition3
    return report


def from_bar(x: RightGSet, group: FiniteGroup, k: int) -> DiscreteHomotopyAction:
    """
    The projection Bar(X, G) -> B G, (x, g1, ..., gm) -> (g1, ..., gm).

    Raises:
        DegreeOutOfRange: k below 3
    """
    if k < 3:
        raise DegreeOutOfRange(f"from_bar needs truncation >= 3, got {k}", (k,))
    source = bar(x, group, k).underlying
    target = nerve(group, k).underlying
    maps = tuple(
        tuple(sigma % group.order ** m for sigma in range(source.level_sizes[m]))
        for m in range(k + 1)
    )
    return DiscreteHomotopyAction(SimplicialMap(source, target, maps))


def _inverse_d1(action: DiscreteHomotopyAction) -> List[int]:
    # (x, b) -> the unique a in A_1 with d_1 a = x and pi a = b
    a, pi = action.source, action.pi
    width = action.target.level_sizes[1]
    codes = _face_product(a, pi, 1, [1])
    inverse = [0] * len(codes)
    for sigma, code in enumerate(codes):
        inverse[code] = sigma
    return [inverse[c] for c in range(action.carrier * width)]


def rigidify(action: DiscreteHomotopyAction) -> RigidAction:
    """
    The strict action x.b = d_0(e(x, b)), e the inverse of (d_1, pi): A_1 -> A_0 x B_1,
    of the group recovered from B.

    Raises:
        NotHomotopyAction: check_homotopy_action fails
        AxiomFailure: the extracted table is not a right action

    Example:
        >>> rigidify(from_bar(swap, z2, 3)).action.act
        ((0, 1), (1, 0))
    """
    report = check_homotopy_action(action.pi)
    if not report.ok:
        first = report.violations[0]
        raise NotHomotopyAction(f"{first.check} fails: {first.detail}", first.witness)
    group = recover_group_from_nerve(action.target)
    width = group.order
    lift = _inverse_d1(action)
    d0 = action.source.face(1, 0)
    table = [[d0[lift[x * width + b]] for b in range(width)] for x in range(action.carrier)]
    try:
        gset = validate_right_action(group, action.carrier, table)
    except InvalidAction as exc:
        raise AxiomFailure(f"extracted action fails: {exc}", exc.witness) from exc
    logger.debug("rigidified an action of a group of order %d on %d points", group.order, action.carrier)
    return RigidAction(group, gset)


# Equivalences
# ------------

@dataclass(frozen=True)
class ActionEquivalence:
    """
    A commutative square from one homotopy action to another

        A --top--> A'
        |          |
        pi         pi'
        v          v
        B -bottom-> B'

    with both horizontal maps level-wise bijective simplicial maps.
    """

    source: DiscreteHomotopyAction
    target: DiscreteHomotopyAction
    top: SimplicialMap
    bottom: SimplicialMap

    def check(self) -> Report:
        report = Report("action equivalence")
        report.extend(check_simplicial_map(self.top), "top:")
        report.extend(check_simplicial_map(self.bottom), "bottom:")
        if not report.ok:
            return report
        if not is_levelwise_bijective(self.top):
            report.add("top", None, (), "not level-wise bijective")
        if not is_levelwise_bijective(self.bottom):
            report.add("bottom", None, (), "not level-wise bijective")
        left = compose_maps(self.source.pi, self.bottom)
        right = compose_maps(self.top, self.target.pi)
        for m, (lhs, rhs) in enumerate(zip(left.level_maps, right.level_maps)):
            bad = next((x for x, (p, q) in enumerate(zip(lhs, rhs)) if p != q), None)
            if bad is not None:
                report.add("square", m, (bad,), "square does not commute")
        return report


@dataclass
class Zigzag:
    """
    A chain of equivalences between homotopy actions; forward[i] says whether
    steps[i] points from actions[i] to actions[i + 1].
    """

    actions: List[DiscreteHomotopyAction]
    steps: List[ActionEquivalence] = field(default_factory=list)
    forward: List[bool] = field(default_factory=list)

    def check(self) -> Report:
        report = Report("zigzag")
        if len(self.steps) != len(self.actions) - 1 or len(self.forward) != len(self.steps):
            report.add("shape", None, (len(self.actions), len(self.steps)), "one step between consecutive actions")
            return report
        for i, (step, fwd) in enumerate(zip(self.steps, self.forward)):
            start, end = (self.actions[i], self.actions[i + 1]) if fwd else (self.actions[i + 1], self.actions[i])
            if step.source.pi != start.pi or step.target.pi != end.pi:
                report.add("endpoints", None, (i,), "step does not connect its neighbours")
            report.extend(step.check(), f"step{i}:")
        return report


def rigidification_equivalence(
    action: DiscreteHomotopyAction, rigid: Optional[RigidAction] = None
) -> ActionEquivalence:
    """
    The comparison from `action` to from_bar of its rigidification,
    a -> (d_1...d_n a, Segal components of pi a) over the Segal maps B -> B G.
    """
    rigid = rigid or rigidify(action)
    k = action.truncation
    rebuilt = from_bar(rigid.action, rigid.group, k)
    a, b = action.source, action.target
    width = rigid.group.order
    top, bottom = [], []
    for n in range(k + 1):
        if n == 0:
            segal: Tuple[int, ...] = (0,) * b.level_sizes[0]
        elif n == 1:
            segal = tuple(range(b.level_sizes[1]))
        else:
            segal = segal_map(b, n)
        vertex = compose_face_path(a, n, list(range(n, 0, -1)))
        top.append(tuple(vertex[x] * width ** n + segal[action.pi.level_maps[n][x]] for x in range(a.level_sizes[n])))
        bottom.append(tuple(segal))
    return ActionEquivalence(
        action,
        rebuilt,
        SimplicialMap(a, rebuilt.source, tuple(top)),
        SimplicialMap(b, rebuilt.target, tuple(bottom)),
    )


def comparison_to_rigidification(action: DiscreteHomotopyAction) -> Report:
    """from_bar(rigidify(action)) is equivalent to `action` through a single square."""
    report = Report("comparison to rigidification")
    try:
        equivalence = rigidification_equivalence(action)
    except HomnormError as exc:
        report.add("rigidify", None, exc.witness or (), str(exc))
        return report
    report.extend(Zigzag([action, equivalence.target], [equivalence], [True]).check())
    return report


def roundtrip_check(x: RightGSet, group: FiniteGroup, k: int) -> Report:
    """
    rigidify(from_bar(X, G, k)) is (G, X) under the identity relabelling, and
    from_bar of the result is equivalent to the original projection.
    """
    report = Report("roundtrip")
    action = from_bar(x, group, k)
    try:
        rigid = rigidify(action)
    except HomnormError as exc:
        report.add("rigidify", None, exc.witness or (), str(exc))
        return report
    if rigid.group != group:
        bad = next(((a, b) for a in group.elements() for b in group.elements()
                    if rigid.group.mul(a, b) != group.mul(a, b)), (rigid.group.identity,))
        report.add("group", 1, bad, "recovered group differs from G")
    if rigid.action.act != x.act:
        bad = next(((p, g) for p in range(x.carrier_size) for g in group.elements()
                    if rigid.action.apply(p, g) != x.apply(p, g)), ())
        report.add("action", 0, bad, "recovered action differs from X")
    if report.ok:
        report.extend(Zigzag(
            [action, from_bar(rigid.action, rigid.group, k)],
            [rigidification_equivalence(action, rigid)],
            [True],
        ).check())
    return report


def canonical_action_agreement(
    cm: CrossedModule,
    k: int,
    gamma: Optional[TruncatedSimplicialGroup] = None,
    bar_complex: Optional[BarComplex] = None,
) -> Report:
    """
    On every level n <= k, the action of Gamma_0 on Gamma_n by s_{n-1}...s_0(g) * xi
    agrees with the translation action on Bar_n(G, N).

    Args:
        cm: the crossed module
        k: truncation, at least 3
        gamma: the simplicial group to compare; gamma_from_cm(cm, k) by default
        bar_complex: a prebuilt bar_of_hom(cm.boundary, k) to reuse
    """
    report = Report("canonical action agreement")
    if k < 3:
        report.add("truncation", None, (k,), "needs truncation >= 3")
        return report
    if bar_complex is None or bar_complex.truncation != k:
        bar_complex = bar_of_hom(cm.boundary, k)
    gamma = gamma or gamma_from_cm(cm, k, bar_complex=bar_complex)
    report.extend(degenerate_translation_report(gamma, bar_complex, "agreement"))
    return report
