#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Crossed modules, the normality search and the simplicial group Gamma.

A crossed module is a homomorphism d: N -> G with a left action of G on N
(written g.n) such that

    CM1   d(g.n) = g d(n) g^-1
    CM2   d(n).m = n m n^-1

decide_normal searches every action of G on N for one satisfying both.
gamma_from_cm turns a crossed module into a simplicial group whose underlying
simplicial set is bar_of_hom(d) with the same labels; level m is G x N^m with

    (g, n1..nm)(g', n1'..nm') = (gg', m1..mm),   m_i = (t_i.n_i) n_i'
    t_i = (g' d(n1') ... d(n_{i-1}'))^-1

Key components:
- CrossedModule, NormalitySearch, TwoTypeInvariants
- check_crossed_module, search_crossed_module, decide_normal, conjugation_cm
- GammaLevelGroup, TruncatedSimplicialGroup, gamma_from_cm, constant_simplicial_group
- verify_simplicial_group, equivariant_iso_check, moore_homotopy, two_type_invariants
"""

import itertools
import logging
import math
import random
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .bar import BarComplex, bar_of_hom, level_G_action
from .errors import (
    AxiomFailure,
    DegreeOutOfRange,
    ImageNotNormal,
    InputError,
    InvalidCrossedModule,
    InvariantMismatch,
    MismatchedGroups,
    NotInjective,
    SearchBudgetExceeded,
)
from .groups import (
    FiniteGroup,
    GroupActionOnGroup,
    GroupHom,
    GroupOps,
    are_isomorphic,
    automorphism_group,
    enumerate_actions,
    image_normal,
    kernel,
    quotient,
    quotient_by_image,
    subgroup,
)
from .reports import Report
from .simplicial import TruncatedSimplicialSet, constant_simplicial_set, verify_simplicial

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 64.0


@dataclass(frozen=True)
class CrossedModule:
    """
    A homomorphism d: N -> G with a left G-action on N.

    Attributes:
        boundary: d
        action: action.apply(g, n) is g.n
    """

    boundary: GroupHom
    action: GroupActionOnGroup

    @property
    def source(self) -> FiniteGroup:
        return self.boundary.source  # type: ignore[return-value]

    @property
    def target(self) -> FiniteGroup:
        return self.boundary.target  # type: ignore[return-value]


@dataclass
class NormalitySearch:
    """
    Result of search_crossed_module.

    Attributes:
        certificate: the first crossed module found, None when none exists
        candidates_examined: actions tried before stopping
        aut_order: |Aut N|
        generators: size of the generating set of G the search ran over
        cost: generators * log2 |Aut N|, compared against the budget
    """

    certificate: Optional[CrossedModule]
    candidates_examined: int
    aut_order: int
    generators: int
    cost: float

    @property
    def normal(self) -> bool:
        return self.certificate is not None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "normal": self.normal,
            "candidates_examined": self.candidates_examined,
            "aut_order": self.aut_order,
            "generators": self.generators,
            "cost": round(self.cost, 6),
        }


@dataclass(frozen=True)
class TwoTypeInvariants:
    """
    pi1 = coker d and pi2 = ker d, with the Moore-complex groups they were checked against.
    """

    pi1: FiniteGroup
    pi2: FiniteGroup
    moore: Tuple[FiniteGroup, ...] = ()


# Axioms
# ------

def check_crossed_module(boundary: GroupHom, action: GroupActionOnGroup) -> Report:
    """
    Report every CM1 and CM2 violation.

    Raises:
        MismatchedGroups: the action is not of G = target(d) on N = source(d)

    Example:
        >>> check_crossed_module(quotient_map, trivial_action(z2, z4)).ok
        True
    """
    n_group, g_group = boundary.source, boundary.target
    if action.actor != g_group or action.carrier != n_group:
        raise MismatchedGroups("the action must be of the target of d on its source")
    report = Report("crossed module")
    d = boundary.map
    act = action.act
    for g in range(g_group.order):
        g_inv = g_group.inv(g)
        for n in range(n_group.order):
            lhs = d[act[g][n]]
            rhs = g_group.mul(g_group.mul(g, d[n]), g_inv)
            if lhs != rhs:
                report.add("CM1", None, (g, n), f"d({g}.{n}) = {lhs}, g d(n) g^-1 = {rhs}")
    for n in range(n_group.order):
        n_inv = n_group.inv(n)
        row = act[d[n]]
        for m in range(n_group.order):
            lhs = row[m]
            rhs = n_group.mul(n_group.mul(n, m), n_inv)
            if lhs != rhs:
                report.add("CM2", None, (n, m), f"d({n}).{m} = {lhs}, n m n^-1 = {rhs}")
    return report


def _is_crossed(boundary: GroupHom, act: Sequence[Sequence[int]]) -> bool:
    n_group, g_group = boundary.source, boundary.target
    d = boundary.map
    for g in range(g_group.order):
        g_inv = g_group.inv(g)
        row = act[g]
        if any(d[row[n]] != g_group.mul(g_group.mul(g, d[n]), g_inv) for n in range(n_group.order)):
            return False
    for n in range(n_group.order):
        n_inv = n_group.inv(n)
        row = act[d[n]]
        if any(row[m] != n_group.mul(n_group.mul(n, m), n_inv) for m in range(n_group.order)):
            return False
    return True


def make_crossed_module(boundary: GroupHom, action: GroupActionOnGroup) -> CrossedModule:
    """
    Checked constructor.

    Raises:
        InvalidCrossedModule: with the first CM1/CM2 witness
    """
    report = check_crossed_module(boundary, action)
    if not report.ok:
        first = report.violations[0]
        raise InvalidCrossedModule(f"{first.check} fails: {first.detail}", first.witness)
    return CrossedModule(boundary, action)


# Normality search
# ----------------

def search_crossed_module(f: GroupHom, budget: float = DEFAULT_BUDGET) -> NormalitySearch:
    """
    Run through every action of G on N in lexicographic order of generator images
    and stop at the first one making (f, action) a crossed module.

    Raises:
        SearchBudgetExceeded: |gens G| * log2 |Aut N| is above `budget`
    """
    n_group, g_group = f.source, f.target
    if not isinstance(n_group, FiniteGroup) or not isinstance(g_group, FiniteGroup):
        raise InputError("the normality search needs table groups")
    aut, perms = automorphism_group(n_group)
    gens = len(g_group.generators)
    cost = gens * math.log2(aut.order)
    if cost > budget:
        raise SearchBudgetExceeded(
            f"search cost {cost:.2f} exceeds the budget {budget:g} "
            f"(|gens {g_group.name}| = {gens}, |Aut {n_group.name}| = {aut.order})",
            (gens, aut.order),
        )
    examined = 0
    certificate = None
    for action in enumerate_actions(g_group, n_group, (aut, perms)):
        examined += 1
        if _is_crossed(f, action.act):
            certificate = CrossedModule(f, action)
            break
    logger.debug(
        "normality search %s -> %s: %d of the actions examined, normal=%s",
        n_group.name, g_group.name, examined, certificate is not None,
    )
    return NormalitySearch(certificate, examined, aut.order, gens, cost)


def decide_normal(f: GroupHom, budget: float = DEFAULT_BUDGET) -> Optional[CrossedModule]:
    """
    The first crossed module structure on f, or None when f admits none.

    Example:
        >>> decide_normal(a3_into_s3) is not None
        True
    """
    return search_crossed_module(f, budget).certificate


def conjugation_cm(f: GroupHom) -> CrossedModule:
    """
    The crossed module of a normal inclusion, acting by g.n = f^-1(g f(n) g^-1).

    Raises:
        NotInjective: f is not injective
        ImageNotNormal: im f is not normal
    """
    if not f.is_injective:
        raise NotInjective("conjugation needs an injective map")
    if not image_normal(f):
        raise ImageNotNormal("image is not a normal subgroup of the target")
    g_group = f.target
    preimage = {v: n for n, v in enumerate(f.map)}
    act = tuple(
        tuple(preimage[g_group.mul(g_group.mul(g, v), g_group.inv(g))] for v in f.map)
        for g in range(g_group.order)
    )
    return CrossedModule(f, GroupActionOnGroup(f.target, f.source, act))  # type: ignore[arg-type]


def kernel_centrality_violations(cm: CrossedModule) -> Report:
    """Pairs (k, n) with k in ker d that do not commute; CM2 forces none."""
    report = Report("kernel centrality")
    n_group = cm.source
    e = cm.target.identity
    for k in range(n_group.order):
        if cm.boundary.map[k] != e:
            continue
        for n in range(n_group.order):
            if n_group.mul(k, n) != n_group.mul(n, k):
                report.add("central", None, (k, n), "kernel element does not commute")
    return report


# Simplicial groups
# -----------------

class GammaLevelGroup:
    """
    Level m of Gamma: G x N^m under the twisted product, computed from the formula.

    Element (g, n1, ..., nm) is stored at g*|N|^m + n1*|N|^(m-1) + ... + nm,
    the same index bar_of_hom gives it.
    """

    def __init__(self, cm: CrossedModule, m: int):
        self.cm = cm
        self.m = m
        g_group, n_group = cm.target, cm.source
        self._g = g_group.table
        self._g_inv = g_group.inverse
        self._n = n_group.table
        self._n_inv = n_group.inverse
        self._act = cm.action.act
        self._d = cm.boundary.map
        self._base = n_group.order
        self._n_e = n_group.identity
        self._g_e = g_group.identity
        self.name = f"Gamma_{m}"

    @property
    def order(self) -> int:
        return len(self._g) * self._base ** self.m

    @property
    def identity(self) -> int:
        return self.encode(self._g_e, [self._n_e] * self.m)

    def encode(self, g: int, ns: Sequence[int]) -> int:
        code = g
        for n in ns:
            code = code * self._base + n
        return code

    def decode(self, x: int) -> Tuple[int, List[int]]:
        ns = [0] * self.m
        for i in range(self.m - 1, -1, -1):
            x, ns[i] = divmod(x, self._base)
        return x, ns

    def mul(self, a: int, b: int) -> int:
        g, ns = self.decode(a)
        h, hs = self.decode(b)
        g_tab, n_tab, act, d = self._g, self._n, self._act, self._d
        code = g_tab[g][h]
        t = h
        for i in range(self.m):
            m_i = n_tab[act[self._g_inv[t]][ns[i]]][hs[i]]
            code = code * self._base + m_i
            t = g_tab[t][d[hs[i]]]
        return code

    def inv(self, a: int) -> int:
        g, ns = self.decode(a)
        h = self._g_inv[g]
        out = []
        t = h
        for i in range(self.m):
            inverse = self._n_inv[self._act[self._g_inv[t]][ns[i]]]
            out.append(inverse)
            t = self._g[t][self._d[inverse]]
        return self.encode(h, out)

    def __repr__(self) -> str:
        return f"GammaLevelGroup(m={self.m}, order={self.order})"


@dataclass(frozen=True, eq=False)
class TruncatedSimplicialGroup:
    """
    A truncated simplicial set whose levels carry group structures on the same indices.

    Attributes:
        underlying: the simplicial set
        level_groups: one group per level; table groups or formula groups such as GammaLevelGroup
        crossed_module: the crossed module it was built from, if any
    """

    underlying: TruncatedSimplicialSet
    level_groups: Tuple[GroupOps, ...]
    crossed_module: Optional[CrossedModule] = None

    @property
    def truncation(self) -> int:
        return self.underlying.truncation


def gamma_from_cm(
    cm: CrossedModule, k: int, validate: bool = True, bar_complex: Optional[BarComplex] = None
) -> TruncatedSimplicialGroup:
    """
    The simplicial group of a crossed module, truncated at k.

    Args:
        cm: the crossed module
        k: truncation
        validate: check CM1/CM2 first; switch off only to build deliberately broken objects
        bar_complex: a prebuilt bar_of_hom(cm.boundary, k) to reuse

    Raises:
        InvalidCrossedModule: validate is set and cm fails an axiom
    """
    if validate:
        make_crossed_module(cm.boundary, cm.action)
    if bar_complex is None or bar_complex.truncation != k:
        bar_complex = bar_of_hom(cm.boundary, k)
    underlying = bar_complex.underlying
    levels = tuple(GammaLevelGroup(cm, m) for m in range(k + 1))
    return TruncatedSimplicialGroup(underlying, levels, cm)


def constant_simplicial_group(group: FiniteGroup, k: int) -> TruncatedSimplicialGroup:
    return TruncatedSimplicialGroup(constant_simplicial_set(group.order, k), tuple(group for _ in range(k + 1)))


def _pairs(n: int, limit: int, sample: int, rng: random.Random) -> Tuple[Iterable[Tuple[int, int]], str]:
    if n * n <= limit:
        return itertools.product(range(n), repeat=2), "exhaustive"
    return [(rng.randrange(n), rng.randrange(n)) for _ in range(sample)], f"sampled {sample}"


def _triples(n: int, limit: int, sample: int, rng: random.Random) -> Tuple[Iterable[Tuple[int, int, int]], str]:
    if n ** 3 <= limit:
        return itertools.product(range(n), repeat=3), "exhaustive"
    return [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(sample)], f"sampled {sample}"


def verify_simplicial_group(
    gamma: TruncatedSimplicialGroup,
    pair_limit: int = 40000,
    triple_limit: int = 60000,
    sample_size: int = 2000,
    seed: int = 0,
) -> Report:
    """
    Check the simplicial identities, the group axioms on every level and that every
    face and degeneracy is a homomorphism.

    Levels with more than pair_limit pairs (triple_limit triples) are checked on a
    seeded sample of sample_size pairs (triples); notes record which.

    Example:
        >>> verify_simplicial_group(constant_simplicial_group(s3, 3)).ok
        True
    """
    report = Report("simplicial group")
    s = gamma.underlying
    report.extend(verify_simplicial(s))
    rng = random.Random(seed)
    if len(gamma.level_groups) != len(s.level_sizes):
        report.add("levels", None, (len(gamma.level_groups),), "one group per level is required")
        return report

    sized = [group.order == n for group, n in zip(gamma.level_groups, s.level_sizes)]
    for m, group in enumerate(gamma.level_groups):
        n = s.level_sizes[m]
        if not sized[m]:
            report.add("order", m, (group.order, n), "group order differs from the level size")
            continue
        e = group.identity
        if not 0 <= e < n:
            report.add("identity", m, (e,), "identity outside the level")
            continue
        for x in range(n):
            if group.mul(e, x) != x or group.mul(x, e) != x:
                report.add("identity", m, (x,), "identity law fails")
                break
        for x in range(n):
            y = group.inv(x)
            if not 0 <= y < n or group.mul(x, y) != e or group.mul(y, x) != e:
                report.add("inverse", m, (x,), "inverse law fails")
                break

        triples, how = _triples(n, triple_limit, sample_size, rng)
        report.notes[f"associativity level {m}"] = how
        for a, b, c in triples:
            if group.mul(group.mul(a, b), c) != group.mul(a, group.mul(b, c)):
                report.add("associativity", m, (a, b, c), "product is not associative")
                break

        maps = []
        if m >= 1:
            maps += [(f"d{i}", m - 1, s.face(m, i)) for i in range(m + 1)]
        if m < s.truncation:
            maps += [(f"s{i}", m + 1, s.degeneracy(m, i)) for i in range(m + 1)]
        # maps into a level with the wrong order were already reported there
        maps = [entry for entry in maps if sized[entry[1]]]
        pairs, how = _pairs(n, pair_limit, sample_size, rng)
        report.notes[f"homomorphisms level {m}"] = how
        failed = set()
        for a, b in pairs:
            ab = group.mul(a, b)
            if not 0 <= ab < n:
                report.add("closure", m, (a, b), f"product {ab} outside the level")
                break
            for name, level, fmap in maps:
                if name in failed:
                    continue
                if fmap[ab] != gamma.level_groups[level].mul(fmap[a], fmap[b]):
                    report.add(name, m, (a, b), f"{name} is not a homomorphism")
                    failed.add(name)
    logger.debug("simplicial group check: %d violations, notes %s", len(report.violations), report.notes)
    return report


def iterated_degeneracy(s: TruncatedSimplicialSet, m: int, x: int) -> int:
    """s_{m-1} ... s_0 applied to the vertex x."""
    for level in range(m):
        x = s.degeneracy(level, level)[x]
    return x


def degenerate_translation_report(gamma: TruncatedSimplicialGroup, b: BarComplex, check: str) -> Report:
    report = Report(check)
    if b.hom is None:
        report.add(check, None, (), "the bar complex was not built from a homomorphism")
        return report
    s = gamma.underlying
    g_order = b.hom.target.order
    for m in range(min(gamma.truncation, b.truncation) + 1):
        try:
            act = level_G_action(b, m)
        except AxiomFailure as exc:
            report.add(check, m, exc.witness or (), str(exc))
            continue
        group = gamma.level_groups[m]
        for g in range(g_order):
            lift = iterated_degeneracy(s, m, g)
            row = act[g]
            bad = next((x for x in range(s.level_sizes[m]) if group.mul(lift, x) != row[x]), None)
            if bad is not None:
                report.add(check, m, (g, bad), f"s...s({g}) * {bad} differs from the translation")
                break
    return report


def equivariant_iso_check(gamma: TruncatedSimplicialGroup, b: BarComplex) -> Report:
    """
    Check that the identity labelling Bar(G, N) -> Gamma is a G-equivariant isomorphism:
    (a) faces and degeneracies agree, (b) Gamma_0 is G, (c) left multiplication by
    degenerate vertices is the translation action on every level.
    """
    report = Report("equivariant isomorphism")
    s, t = gamma.underlying, b.underlying
    if s.level_sizes != t.level_sizes:
        report.add("a", None, (s.level_sizes, t.level_sizes), "level sizes differ")
        return report
    for key, face in t.faces.items():
        mismatch = next((x for x, (p, q) in enumerate(zip(face, s.faces[key])) if p != q), None)
        if mismatch is not None:
            report.add("a", key[0], (f"d{key[1]}", mismatch), "face differs")
    for key, deg in t.degeneracies.items():
        mismatch = next((x for x, (p, q) in enumerate(zip(deg, s.degeneracies[key])) if p != q), None)
        if mismatch is not None:
            report.add("a", key[0], (f"s{key[1]}", mismatch), "degeneracy differs")

    if b.hom is None:
        report.add("b", 0, (), "the bar complex was not built from a homomorphism")
        return report
    g_group = b.hom.target
    level0 = gamma.level_groups[0]
    if level0.order != g_group.order or level0.identity != g_group.identity:
        report.add("b", 0, (level0.order, g_group.order), "Gamma_0 is not G")
    else:
        bad = next(((x, y) for x in range(g_group.order) for y in range(g_group.order)
                    if level0.mul(x, y) != g_group.mul(x, y)), None)
        if bad is not None:
            report.add("b", 0, bad, "Gamma_0 product differs from G")

    report.extend(degenerate_translation_report(gamma, b, "c"))
    return report


# Homotopy groups
# ---------------

def moore_level(gamma: TruncatedSimplicialGroup, m: int) -> List[int]:
    """Elements of level m killed by d_1, ..., d_m."""
    s = gamma.underlying
    if m == 0:
        return list(range(s.level_sizes[0]))
    e = gamma.level_groups[m - 1].identity
    faces = [s.face(m, i) for i in range(1, m + 1)]
    return [x for x in range(s.level_sizes[m]) if all(f[x] == e for f in faces)]


def moore_homotopy(gamma: TruncatedSimplicialGroup, m: int) -> FiniteGroup:
    """
    pi_m of the Moore complex: ker(d_0 on M_m) / d_0(M_{m+1}).

    Raises:
        DegreeOutOfRange: m outside [0, truncation - 2]
        ImageNotNormal: the boundaries are not a normal subgroup of the cycles

    Example:
        >>> moore_homotopy(constant_simplicial_group(s3, 3), 0).order
        6
    """
    k = gamma.truncation
    if not 0 <= m <= k - 2:
        raise DegreeOutOfRange(f"moore_homotopy needs 0 <= m <= {k - 2}, got {m}", (m,))
    s = gamma.underlying
    level = gamma.level_groups[m]
    cycles = moore_level(gamma, m)
    if m >= 1:
        d0 = s.face(m, 0)
        e_below = gamma.level_groups[m - 1].identity
        cycles = [x for x in cycles if d0[x] == e_below]
    d0_up = s.face(m + 1, 0)
    boundaries = sorted({d0_up[x] for x in moore_level(gamma, m + 1)})

    z_group, inclusion = subgroup(level, cycles, name=f"Z_{m}")
    position = {v: i for i, v in enumerate(inclusion.map)}
    outside = next((x for x in boundaries if x not in position), None)
    if outside is not None:
        raise ImageNotNormal(f"boundary {outside} on level {m} is not a cycle", (m, outside))
    try:
        pi, _ = quotient(z_group, [position[x] for x in boundaries], name=f"pi_{m}")
    except ImageNotNormal as exc:
        raise ImageNotNormal(f"boundaries on level {m} are not normal in the cycles", (m,)) from exc
    logger.debug("pi_%d: cycles %d, boundaries %d", m, len(cycles), len(boundaries))
    return pi


def two_type_invariants(
    cm: CrossedModule, k: int = 4, gamma: Optional[TruncatedSimplicialGroup] = None
) -> TwoTypeInvariants:
    """
    coker d and ker d, cross-checked against the Moore complex of gamma_from_cm(cm, k).

    Raises:
        InvariantMismatch: ker d is not abelian or a Moore group disagrees
    """
    pi1, _ = quotient_by_image(cm.boundary)
    pi2, _ = kernel(cm.boundary)
    pi1 = FiniteGroup(pi1.table, pi1.identity, pi1.inverse, name="coker", labels=pi1.labels)
    pi2 = FiniteGroup(pi2.table, pi2.identity, pi2.inverse, name="ker", labels=pi2.labels)
    if not pi2.is_abelian:
        raise InvariantMismatch("ker d is not abelian")
    gamma = gamma or gamma_from_cm(cm, k)
    k = gamma.truncation
    moore = tuple(moore_homotopy(gamma, m) for m in range(min(3, k - 1)))
    expected = (pi1, pi2)
    for m, group in enumerate(moore):
        if m < 2 and not are_isomorphic(group, expected[m]):
            raise InvariantMismatch(
                f"pi_{m} of Gamma has order {group.order}, expected {expected[m].order}", (m,)
            )
        if m == 2 and group.order != 1:
            raise InvariantMismatch(f"pi_2 of Gamma has order {group.order}", (2,))
    return TwoTypeInvariants(pi1, pi2, moore)
