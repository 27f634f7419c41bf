#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Bar constructions, nerves and reduced Segal checks.

Level m of bar(X, G) holds the tuples (x, g1, ..., gm), stored at the mixed-radix
index x*|G|^m + g1*|G|^(m-1) + ... + gm, with

    d_0(x, g1, ..., gm)   = (x.g1, g2, ..., gm)
    d_i(x, g1, ..., gm)   = (x, g1, ..., g_i g_{i+1}, ..., gm)     0 < i < m
    d_m(x, g1, ..., gm)   = (x, g1, ..., g_{m-1})
    s_i(x, g1, ..., gm)   = (x, g1, ..., g_i, e, g_{i+1}, ..., gm)

Key components:
- BarComplex, SegalReport
- bar, nerve, bar_of_hom, monoid_nerve
- segal_map, segal_check, recover_group_from_nerve
- level_G_action, orbit_map, bar_power_comparison
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import (
    AxiomFailure,
    DegreeOutOfRange,
    InputError,
    MismatchedGroups,
    NotHomogeneous,
    SegalFailed,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    RightGSet,
    translation_along,
    trivial_right_action,
    validate_group,
)
from .reports import Report
from .simplicial import (
    FinSetMap,
    SimplicialMap,
    TruncatedSimplicialSet,
    cech_power,
    compose_face_path,
    simplicial_set_from_labels,
    vertex_restriction,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BarComplex:
    """
    A bar construction together with the data it was built from.

    Attributes:
        underlying: the simplicial set, labelled by (x, g1, ..., gm)
        group: the group G of the G^m factors
        gset: the right G-set X of the first factor
        hom: for bar_of_hom, the homomorphism N -> G it came from (X is then its target)
    """

    underlying: TruncatedSimplicialSet
    group: FiniteGroup
    gset: RightGSet
    hom: Optional[GroupHom] = None

    @property
    def truncation(self) -> int:
        return self.underlying.truncation

    def level_actions(self) -> List[Tuple[Tuple[int, ...], ...]]:
        return [level_G_action(self, m) for m in range(self.truncation + 1)]


@dataclass
class SegalReport:
    """
    Outcome of segal_check.

    Attributes:
        basepoint_ok: level 0 is a single point
        segal_ok: level n -> whether the Segal map is a bijection onto (level 1)^n
        pi0_group_ok: the induced product on level 1 has a unit and inverses
        report: witnesses for every failure
    """

    basepoint_ok: bool
    segal_ok: Dict[int, bool] = field(default_factory=dict)
    pi0_group_ok: bool = False
    report: Report = field(default_factory=lambda: Report("segal"))

    @property
    def ok(self) -> bool:
        return self.basepoint_ok and all(self.segal_ok.values()) and self.pi0_group_ok

    def to_dict(self) -> dict:
        return {
            "basepoint_ok": self.basepoint_ok,
            "segal_ok": {str(n): v for n, v in self.segal_ok.items()},
            "pi0_group_ok": self.pi0_group_ok,
            "ok": self.ok,
            "violations": [v.to_dict() for v in self.report.violations],
        }


def _bar_levels(
    carrier_size: int,
    act: Callable[[int, int], int],
    group_order: int,
    mul: Callable[[int, int], int],
    unit: int,
    k: int,
) -> TruncatedSimplicialSet:
    if k < 1:
        raise DegreeOutOfRange(f"truncation must be at least 1, got {k}", (k,))
    levels = [
        list(itertools.product(range(carrier_size), *([range(group_order)] * m)))
        for m in range(k + 1)
    ]

    def face(m: int, i: int, lab: Tuple[int, ...]) -> Tuple[int, ...]:
        if i == 0:
            return (act(lab[0], lab[1]),) + lab[2:]
        if i == m:
            return lab[:-1]
        return lab[:i] + (mul(lab[i], lab[i + 1]),) + lab[i + 2:]

    def degeneracy(m: int, i: int, lab: Tuple[int, ...]) -> Tuple[int, ...]:
        return lab[:i + 1] + (unit,) + lab[i + 1:]

    logger.debug("bar level sizes: %s", [len(level) for level in levels])
    return simplicial_set_from_labels(levels, face, degeneracy)


def bar(x: RightGSet, group: FiniteGroup, k: int) -> BarComplex:
    """
    The bar construction of a right G-set, truncated at k.

    Raises:
        MismatchedGroups: X is a set over a different group

    Example:
        >>> bar(trivial_right_action(z2, 1), z2, 3).underlying.level_sizes
        (1, 2, 4, 8)
    """
    if x.group != group:
        raise MismatchedGroups("the G-set is acted on by a different group")
    underlying = _bar_levels(x.carrier_size, x.apply, group.order, group.mul, group.identity, k)
    return BarComplex(underlying, group, x)


def nerve(group: FiniteGroup, k: int) -> BarComplex:
    """B_.G, the bar construction of the one-point G-set."""
    return bar(trivial_right_action(group, 1), group, k)


def bar_of_hom(f: GroupHom, k: int) -> BarComplex:
    """
    Bar_.(G, N) for f: N -> G, with G a right N-set by x.n = x f(n).

    Level m is labelled by (x, n1, ..., nm) in G x N^m.
    """
    gset = translation_along(f)
    complex_ = bar(gset, gset.group, k)
    return BarComplex(complex_.underlying, complex_.group, gset, f)


def monoid_nerve(table: Sequence[Sequence[int]], unit: int, k: int) -> TruncatedSimplicialSet:
    """
    Nerve of a finite monoid given by its multiplication table.

    Raises:
        InputError: `unit` is not a two-sided unit of the table
    """
    n = len(table)
    if not 0 <= unit < n or any(table[unit][a] != a or table[a][unit] != a for a in range(n)):
        raise InputError(f"{unit} is not a two-sided unit", (unit,))
    return _bar_levels(1, lambda x, g: 0, n, lambda a, b: table[a][b], unit, k)


# Segal machinery
# ---------------

def segal_components(s: TruncatedSimplicialSet, n: int) -> List[Tuple[int, ...]]:
    """The n edge maps level n -> level 1 given by the vertex pairs {k-1, k}."""
    return [compose_face_path(s, n, vertex_restriction(n, [j - 1, j])) for j in range(1, n + 1)]


def segal_map(s: TruncatedSimplicialSet, n: int) -> Tuple[int, ...]:
    """
    The Segal map level n -> (level 1)^n, each n-tuple encoded in base |level 1|
    with the first edge most significant.
    """
    base = s.level_sizes[1]
    comps = segal_components(s, n)
    out = []
    for x in range(s.level_sizes[n]):
        code = 0
        for comp in comps:
            code = code * base + comp[x]
        out.append(code)
    return tuple(out)


def _level_one_product(s: TruncatedSimplicialSet) -> Optional[List[List[int]]]:
    # a.b = d_1(p_2^-1(a, b)); None when p_2 is not a bijection
    base = s.level_sizes[1]
    p2 = segal_map(s, 2)
    if len(set(p2)) != len(p2) or len(p2) != base * base:
        return None
    inverse = {code: x for x, code in enumerate(p2)}
    d1 = s.face(2, 1)
    return [[d1[inverse[a * base + b]] for b in range(base)] for a in range(base)]


def segal_check(s: TruncatedSimplicialSet) -> SegalReport:
    """
    Check the reduced Segal conditions within the truncation.

    Raises:
        DegreeOutOfRange: truncation below 2

    Example:
        >>> segal_check(nerve(s3, 3).underlying).ok
        True
    """
    if s.truncation < 2:
        raise DegreeOutOfRange(f"segal_check needs truncation >= 2, got {s.truncation}", (s.truncation,))
    result = SegalReport(basepoint_ok=s.level_sizes[0] == 1)
    if not result.basepoint_ok:
        result.report.add("basepoint", 0, (s.level_sizes[0],), "level 0 is not a single point")

    base = s.level_sizes[1]
    for n in range(2, s.truncation + 1):
        p = segal_map(s, n)
        seen: Dict[int, int] = {}
        ok = True
        for x, code in enumerate(p):
            if code in seen:
                result.report.add("segal", n, (seen[code], x), "Segal map is not injective")
                ok = False
                break
            seen[code] = x
        if ok and len(p) != base ** n:
            missing = next(c for c in range(base ** n) if c not in seen)
            result.report.add("segal", n, (missing,), "Segal map is not surjective")
            ok = False
        result.segal_ok[n] = ok

    product = _level_one_product(s) if result.basepoint_ok and result.segal_ok.get(2) else None
    if product is None:
        result.pi0_group_ok = False
        result.report.add("pi0_group", 1, (), "no level-1 product: level 2 is not Segal or level 0 is not a point")
        return result
    unit = s.degeneracy(0, 0)[0]
    group_ok = True
    for a in range(base):
        if product[unit][a] != a or product[a][unit] != a:
            result.report.add("pi0_group", 1, (unit, a), "s_0(*) is not a unit")
            group_ok = False
            break
    for a in range(base):
        if not any(product[a][b] == unit and product[b][a] == unit for b in range(base)):
            result.report.add("pi0_group", 1, (a,), "element has no inverse")
            group_ok = False
            break
    result.pi0_group_ok = group_ok
    return result


def recover_group_from_nerve(s: TruncatedSimplicialSet, name: str = "") -> FiniteGroup:
    """
    The group carried by level 1 of a reduced Segal set: a.b = d_1(p_2^-1(a, b)), unit s_0(*).

    Raises:
        SegalFailed: truncation below 3, or a Segal condition fails through level 3
    """
    if s.truncation < 3:
        raise SegalFailed(f"recovery needs truncation >= 3, got {s.truncation}", (s.truncation,))
    report = segal_check(s)
    if not (report.basepoint_ok and report.segal_ok.get(2) and report.segal_ok.get(3) and report.pi0_group_ok):
        witness = report.report.violations[0].witness if report.report.violations else None
        raise SegalFailed("not a reduced Segal set through level 3", witness)
    product = _level_one_product(s)
    assert product is not None
    try:
        return validate_group(product, s.degeneracy(0, 0)[0], name=name or "pi1")
    except InputError as exc:
        raise SegalFailed(f"level-1 product is not a group: {exc}", exc.witness) from exc


# Level actions
# -------------

def level_G_action(b: BarComplex, m: int) -> Tuple[Tuple[int, ...], ...]:
    """
    Left translation of G on the first coordinate of Bar_m(G, N).

    Returns act[g][sigma], the index of g.(x, n1, ..., nm) = (gx, n1, ..., nm).
    The table is checked to be an action commuting with d_i (i >= 1) on level m
    and with every degeneracy leaving level m.

    Raises:
        NotHomogeneous: b was not built by bar_of_hom
        AxiomFailure: the check fails (inconsistent input)
    """
    if b.hom is None:
        raise NotHomogeneous("level actions exist only on bar_of_hom complexes")
    if not 0 <= m <= b.truncation:
        raise DegreeOutOfRange(f"level {m} outside truncation {b.truncation}", (m,))
    g_group = b.hom.target
    act = _translation_table(b, m)
    size = b.underlying.level_sizes[m]
    e = g_group.identity
    for sigma in range(size):
        if act[e][sigma] != sigma:
            raise AxiomFailure(f"identity moves simplex {sigma}", (e, sigma))
    # compatibility on generators of G suffices for every product
    gens = g_group.generators if isinstance(g_group, FiniteGroup) else tuple(range(g_group.order))
    for g in range(g_group.order):
        for h in gens:
            gh = act[g_group.mul(g, h)]
            row_g, row_h = act[g], act[h]
            if any(gh[x] != row_g[row_h[x]] for x in range(size)):
                raise AxiomFailure(f"level {m} action is not compatible with {g}*{h}", (g, h))
    for kind, i, ok in _action_commutation(b, m, act):
        if (kind == "d" and i >= 1 or kind == "s") and not ok:
            raise AxiomFailure(f"level {m} action does not commute with {kind}_{i}", (m, i))
    return act


def _action_commutation(b: BarComplex, m: int, act) -> List[Tuple[str, int, bool]]:
    s = b.underlying
    out = []
    if m >= 1:
        lower = _translation_table(b, m - 1)
        for i in range(m + 1):
            face = s.face(m, i)
            ok = all(face[act[g][x]] == lower[g][face[x]]
                     for g in range(len(act)) for x in range(len(face)))
            out.append(("d", i, ok))
    if m < s.truncation:
        upper = _translation_table(b, m + 1)
        for i in range(m + 1):
            deg = s.degeneracy(m, i)
            ok = all(deg[act[g][x]] == upper[g][deg[x]]
                     for g in range(len(act)) for x in range(len(deg)))
            out.append(("s", i, ok))
    return out


def _translation_table(b: BarComplex, m: int) -> Tuple[Tuple[int, ...], ...]:
    assert b.hom is not None
    g_group = b.hom.target
    stride = b.group.order ** m
    size = b.underlying.level_sizes[m]
    return tuple(
        tuple(g_group.mul(g, sigma // stride) * stride + sigma % stride for sigma in range(size))
        for g in range(g_group.order)
    )


def action_commutation_report(b: BarComplex, m: int) -> Report:
    """Which structure maps at level m commute with the level action (all, including d_0)."""
    report = Report(f"level {m} action commutation")
    act = level_G_action(b, m)
    for kind, i, ok in _action_commutation(b, m, act):
        report.notes[f"{kind}{i}"] = ok
        if not ok:
            report.add(f"{kind}{i}", m, (i,), "does not commute")
    return report


# Comparison with the power construction
# --------------------------------------

def orbit_map(x: RightGSet) -> FinSetMap:
    """X -> X/G, orbits numbered by their smallest point."""
    orbit = [-1] * x.carrier_size
    count = 0
    for p in range(x.carrier_size):
        if orbit[p] == -1:
            for g in x.group.elements():
                orbit[x.apply(p, g)] = count
            count += 1
    return FinSetMap(x.carrier_size, count, tuple(orbit))


def bar_power_comparison(x: RightGSet, group: FiniteGroup, k: int) -> SimplicialMap:
    """
    bar(X, G) -> cech_power(X -> X/G), (x, g1, ..., gn) -> (x, x.g1, x.g1.g2, ..., x.g1...gn).

    A simplicial map for every action, level-wise bijective exactly when the action is free.
    """
    source = bar(x, group, k).underlying
    target = cech_power(orbit_map(x), k)
    maps = []
    for m in range(k + 1):
        index = target.label_index(m)
        level = []
        for lab in source.labels[m]:  # type: ignore[index]
            point = lab[0]
            coords = [point]
            for g in lab[1:]:
                point = x.apply(point, g)
                coords.append(point)
            level.append(index[tuple(coords)])
        maps.append(tuple(level))
    return SimplicialMap(source, target, tuple(maps))
