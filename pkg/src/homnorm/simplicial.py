#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Truncated simplicial sets.

A TruncatedSimplicialSet materializes levels 0..k as index ranges together
with face maps d_i: level m -> level m-1 and degeneracies s_i: level m -> m+1,
all stored as index arrays. Every claim about a simplicial object is made
within its truncation.

Key components:
- TruncatedSimplicialSet, SimplicialMap, FinSetMap: immutable values
- make_simplicial_set: checked constructor
- verify_simplicial / check_simplicial_map: report-based verifiers
- pi0, cech_power, compose_face_path, vertex_restriction
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import IndexOutOfRange
from .reports import Report

logger = logging.getLogger(__name__)

IndexMap = Tuple[int, ...]
Label = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class TruncatedSimplicialSet:
    """
    Levels 0..k of a simplicial set.

    Attributes:
        level_sizes: number of simplices per level
        faces: (m, i) -> d_i on level m, for 1 <= m <= k and 0 <= i <= m
        degeneracies: (m, i) -> s_i on level m, for 0 <= m < k and 0 <= i <= m
        labels: optional tuple label per simplex, per level
    """

    level_sizes: Tuple[int, ...]
    faces: Mapping[Tuple[int, int], IndexMap]
    degeneracies: Mapping[Tuple[int, int], IndexMap]
    labels: Optional[Tuple[Tuple[Label, ...], ...]] = None

    @property
    def truncation(self) -> int:
        return len(self.level_sizes) - 1

    def face(self, m: int, i: int) -> IndexMap:
        return self.faces[(m, i)]

    def degeneracy(self, m: int, i: int) -> IndexMap:
        return self.degeneracies[(m, i)]

    def label(self, m: int, x: int) -> Label:
        if self.labels is None:
            return (x,)
        return self.labels[m][x]

    def label_index(self, m: int) -> Dict[Label, int]:
        """Label -> simplex index on level m."""
        if self.labels is None:
            return {(x,): x for x in range(self.level_sizes[m])}
        return {lab: x for x, lab in enumerate(self.labels[m])}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSimplicialSet):
            return NotImplemented
        return (self.level_sizes == other.level_sizes
                and dict(self.faces) == dict(other.faces)
                and dict(self.degeneracies) == dict(other.degeneracies)
                and self.labels == other.labels)

    def __hash__(self) -> int:
        return hash(self.level_sizes)


@dataclass(frozen=True, eq=False)
class SimplicialMap:
    """A level-wise index map source -> target of equal truncation."""

    source: TruncatedSimplicialSet
    target: TruncatedSimplicialSet
    level_maps: Tuple[IndexMap, ...]

    def __call__(self, m: int, x: int) -> int:
        return self.level_maps[m][x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return (self.level_maps == other.level_maps and self.source == other.source
                and self.target == other.target)

    def __hash__(self) -> int:
        return hash(self.level_maps)


@dataclass(frozen=True)
class FinSetMap:
    """A map {0..domain_size-1} -> {0..codomain_size-1}."""

    domain_size: int
    codomain_size: int
    map: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.map) != self.domain_size:
            raise IndexOutOfRange(f"map has {len(self.map)} entries, domain has {self.domain_size}")
        for x, y in enumerate(self.map):
            if not 0 <= y < self.codomain_size:
                raise IndexOutOfRange(f"map[{x}] = {y} outside the codomain", (x,))

    def image(self) -> List[int]:
        return sorted(set(self.map))

    @property
    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.codomain_size


def make_simplicial_set(
    level_sizes: Sequence[int],
    faces: Mapping[Tuple[int, int], Sequence[int]],
    degeneracies: Mapping[Tuple[int, int], Sequence[int]],
    labels: Optional[Sequence[Sequence[Sequence[int]]]] = None,
) -> TruncatedSimplicialSet:
    """
    Build a TruncatedSimplicialSet after checking shapes and index ranges.

    Simplicial identities are not checked here; use verify_simplicial.

    Raises:
        IndexOutOfRange: a structure map is missing, has the wrong length or leaves its level
    """
    sizes = tuple(int(n) for n in level_sizes)
    if not sizes:
        raise IndexOutOfRange("a simplicial set needs at least level 0")
    k = len(sizes) - 1

    def checked(maps: Mapping[Tuple[int, int], Sequence[int]], key: Tuple[int, int],
                src: int, dst: int, kind: str) -> IndexMap:
        if key not in maps:
            raise IndexOutOfRange(f"missing {kind}_{key[1]} on level {key[0]}", key)
        arr = tuple(int(v) for v in maps[key])
        if len(arr) != sizes[src]:
            raise IndexOutOfRange(f"{kind}_{key[1]} on level {key[0]} has {len(arr)} entries, expected {sizes[src]}", key)
        for x, y in enumerate(arr):
            if not 0 <= y < sizes[dst]:
                raise IndexOutOfRange(f"{kind}_{key[1]}({x}) = {y} outside level {dst}", key + (x,))
        return arr

    face_maps = {}
    for m in range(1, k + 1):
        for i in range(m + 1):
            face_maps[(m, i)] = checked(faces, (m, i), m, m - 1, "d")
    degeneracy_maps = {}
    for m in range(k):
        for i in range(m + 1):
            degeneracy_maps[(m, i)] = checked(degeneracies, (m, i), m, m + 1, "s")

    label_levels = None
    if labels is not None:
        if len(labels) != len(sizes):
            raise IndexOutOfRange(f"labels cover {len(labels)} levels, expected {len(sizes)}")
        label_levels = []
        for m, level in enumerate(labels):
            if len(level) != sizes[m]:
                raise IndexOutOfRange(f"level {m} has {len(level)} labels, expected {sizes[m]}", (m,))
            label_levels.append(tuple(tuple(int(v) for v in lab) for lab in level))
        label_levels = tuple(label_levels)
    return TruncatedSimplicialSet(sizes, face_maps, degeneracy_maps, label_levels)


def simplicial_set_from_labels(
    levels: Sequence[Sequence[Label]],
    face_fn,
    degeneracy_fn,
) -> TruncatedSimplicialSet:
    """
    Build a simplicial set from labelled levels and label-level structure maps.

    Args:
        levels: labels of each level, in index order
        face_fn: (m, i, label) -> label on level m-1
        degeneracy_fn: (m, i, label) -> label on level m+1
    """
    index = [{lab: x for x, lab in enumerate(level)} for level in levels]
    k = len(levels) - 1
    faces = {}
    for m in range(1, k + 1):
        for i in range(m + 1):
            faces[(m, i)] = tuple(index[m - 1][face_fn(m, i, lab)] for lab in levels[m])
    degeneracies = {}
    for m in range(k):
        for i in range(m + 1):
            degeneracies[(m, i)] = tuple(index[m + 1][degeneracy_fn(m, i, lab)] for lab in levels[m])
    return TruncatedSimplicialSet(
        tuple(len(level) for level in levels),
        faces,
        degeneracies,
        tuple(tuple(level) for level in levels),
    )


def constant_simplicial_set(size: int, k: int) -> TruncatedSimplicialSet:
    """Every level {0..size-1}, every structure map the identity."""
    levels = [[(x,) for x in range(size)] for _ in range(k + 1)]
    return simplicial_set_from_labels(levels, lambda m, i, lab: lab, lambda m, i, lab: lab)


def verify_simplicial(s: TruncatedSimplicialSet) -> Report:
    """
    Check every simplicial identity on every composable pair within the truncation.

    The report names each violated identity once, with the first witness simplex.

    Example:
        >>> verify_simplicial(constant_simplicial_set(3, 2)).ok
        True
    """
    report = Report("simplicial identities")
    k = s.truncation
    d = s.face
    sd = s.degeneracy

    def compare(check: str, level: int, n: int, lhs, rhs) -> None:
        for x in range(n):
            if lhs(x) != rhs(x):
                report.add(check, level, (x,), f"{lhs(x)} != {rhs(x)}")
                return

    for m in range(2, k + 1):
        for j in range(1, m + 1):
            for i in range(j):
                compare(
                    f"d{i}d{j}=d{j - 1}d{i}", m, s.level_sizes[m],
                    lambda x: d(m - 1, i)[d(m, j)[x]],
                    lambda x: d(m - 1, j - 1)[d(m, i)[x]],
                )
    for m in range(k - 1):
        for j in range(m + 1):
            for i in range(j + 1):
                compare(
                    f"s{i}s{j}=s{j + 1}s{i}", m, s.level_sizes[m],
                    lambda x: sd(m + 1, i)[sd(m, j)[x]],
                    lambda x: sd(m + 1, j + 1)[sd(m, i)[x]],
                )
    for m in range(k):
        for j in range(m + 1):
            for i in range(m + 2):
                lhs = lambda x: d(m + 1, i)[sd(m, j)[x]]  # noqa: E731
                if i < j:
                    rhs = lambda x: sd(m - 1, j - 1)[d(m, i)[x]]  # noqa: E731
                    name = f"d{i}s{j}=s{j - 1}d{i}"
                elif i in (j, j + 1):
                    rhs = lambda x: x  # noqa: E731
                    name = f"d{i}s{j}=id"
                else:
                    rhs = lambda x: sd(m - 1, j)[d(m, i - 1)[x]]  # noqa: E731
                    name = f"d{i}s{j}=s{j}d{i - 1}"
                compare(name, m, s.level_sizes[m], lhs, rhs)
    logger.debug("verified simplicial identities up to level %d: %d violations", k, len(report.violations))
    return report


def check_simplicial_map(f: SimplicialMap) -> Report:
    """Check ranges and commutation with every face and degeneracy."""
    report = Report("simplicial map")
    src, dst = f.source, f.target
    if src.truncation != dst.truncation:
        report.add("truncation", None, (src.truncation, dst.truncation), "truncations differ")
        return report
    if len(f.level_maps) != len(src.level_sizes):
        report.add("levels", None, (len(f.level_maps),), "wrong number of level maps")
        return report
    for m, lm in enumerate(f.level_maps):
        if len(lm) != src.level_sizes[m] or any(not 0 <= y < dst.level_sizes[m] for y in lm):
            report.add("range", m, (m,), "level map has the wrong shape")
            return report
    k = src.truncation
    for m in range(1, k + 1):
        for i in range(m + 1):
            fs, ft = src.face(m, i), dst.face(m, i)
            for x in range(src.level_sizes[m]):
                if f.level_maps[m - 1][fs[x]] != ft[f.level_maps[m][x]]:
                    report.add(f"d{i}", m, (x,), "map does not commute with the face")
                    break
    for m in range(k):
        for i in range(m + 1):
            ss, st = src.degeneracy(m, i), dst.degeneracy(m, i)
            for x in range(src.level_sizes[m]):
                if f.level_maps[m + 1][ss[x]] != st[f.level_maps[m][x]]:
                    report.add(f"s{i}", m, (x,), "map does not commute with the degeneracy")
                    break
    return report


def is_levelwise_bijective(f: SimplicialMap) -> bool:
    return all(
        len(set(lm)) == len(lm) == f.target.level_sizes[m]
        for m, lm in enumerate(f.level_maps)
    )


def identity_map(s: TruncatedSimplicialSet) -> SimplicialMap:
    return SimplicialMap(s, s, tuple(tuple(range(n)) for n in s.level_sizes))


def compose_maps(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """g after f."""
    return SimplicialMap(
        f.source,
        g.target,
        tuple(tuple(gm[y] for y in fm) for fm, gm in zip(f.level_maps, g.level_maps)),
    )


def pi0(s: TruncatedSimplicialSet) -> List[List[int]]:
    """
    Path components: the coequalizer of d_0, d_1 from level 1 to level 0.

    Returns:
        Partition of level 0 as sorted classes, ordered by their smallest vertex
    """
    parent = list(range(s.level_sizes[0]))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    if s.truncation >= 1:
        d0, d1 = s.face(1, 0), s.face(1, 1)
        for e in range(s.level_sizes[1]):
            a, b = find(d0[e]), find(d1[e])
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes: Dict[int, List[int]] = {}
    for x in range(s.level_sizes[0]):
        classes.setdefault(find(x), []).append(x)
    return sorted(classes.values(), key=lambda c: c[0])


def cech_power(f: FinSetMap, k: int) -> TruncatedSimplicialSet:
    """
    The power construction of f: E -> B, truncated at k.

    Level m holds the (m+1)-tuples of E lying in one fiber, in lexicographic
    order; d_i deletes coordinate i and s_i repeats it.

    Example:
        >>> cech_power(FinSetMap(3, 2, (0, 0, 1)), 3).level_sizes
        (3, 5, 9, 17)
    """
    if k < 1:
        raise IndexOutOfRange(f"truncation must be at least 1, got {k}")
    fibers: Dict[int, List[int]] = {}
    for e, b in enumerate(f.map):
        fibers.setdefault(b, []).append(e)
    levels = []
    for m in range(k + 1):
        level: List[Label] = []
        for fiber in fibers.values():
            level.extend(itertools.product(fiber, repeat=m + 1))
        levels.append(sorted(level))
    logger.debug("cech power level sizes: %s", [len(level) for level in levels])
    return simplicial_set_from_labels(
        levels,
        lambda m, i, lab: lab[:i] + lab[i + 1:],
        lambda m, i, lab: lab[:i + 1] + lab[i:],
    )


def compose_face_path(s: TruncatedSimplicialSet, m: int, path: Sequence[int]) -> IndexMap:
    """
    Composite of faces starting on level m, applied in the order listed.

    path = [n, n-1, ..., 1] evaluates d_1...d_n (d_n first); path = [0, 0]
    evaluates d_0 d_0.

    Raises:
        IndexOutOfRange: a face index is invalid at its intermediate level
    """
    if not 0 <= m <= s.truncation:
        raise IndexOutOfRange(f"level {m} outside truncation {s.truncation}", (m,))
    current = tuple(range(s.level_sizes[m]))
    level = m
    for i in path:
        if level < 1 or not 0 <= i <= level:
            raise IndexOutOfRange(f"d_{i} is not defined on level {level}", (level, i))
        face = s.face(level, i)
        current = tuple(face[x] for x in current)
        level -= 1
    return current


def vertex_restriction(n: int, keep: Sequence[int]) -> List[int]:
    """
    Face path on level n that deletes every vertex of [n] outside `keep`.

    Higher vertices go first so the remaining indices stay put.
    """
    kept = set(keep)
    return [v for v in range(n, -1, -1) if v not in kept]
