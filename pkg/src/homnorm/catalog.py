#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Built-in finite groups and small constructors.

The catalog holds the groups every acceptance run iterates over:
trivial, Z2..Z12, V4, S3, D4, Q8, D5, D6, A4. Lookups are forgiving
about spelling ("Z/4", "z4", "C4") and suggest close names on a miss.
"""

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

import Levenshtein

from .errors import UnknownGroup
from .groups import (
    FiniteGroup,
    Permutation,
    RightGSet,
    are_isomorphic,
    direct_product,
    enumerate_homomorphisms,
    validate_group,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CatalogEntry:
    """A named built-in group."""

    name: str
    group: FiniteGroup

    @property
    def order(self) -> int:
        return self.group.order


def _cycle_label(p: Permutation) -> str:
    seen = set()
    cycles = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = p[x]
        cycles.append("(" + "".join(str(c + 1) for c in cycle) + ")")
    return "".join(cycles) or "e"


def permutation_group(
    generators: Sequence[Permutation], degree: int, name: str = ""
) -> Tuple[FiniteGroup, List[Permutation]]:
    """
    Close a set of permutations of {0..degree-1} under composition.

    The product p*q applies p first, then q. Elements are sorted, so the
    identity permutation is element 0.

    Returns:
        Tuple of the group and the permutation realizing each element
    """
    identity = tuple(range(degree))
    gens = [tuple(g) for g in generators]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[i]] for i in range(degree))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    perms = sorted(seen)
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(q[p[i]] for i in range(degree))] for q in perms] for p in perms]
    group = validate_group(table, 0, name=name, labels=[_cycle_label(p) for p in perms])
    return group, perms


def cyclic_group(n: int) -> FiniteGroup:
    return validate_group([[(i + j) % n for j in range(n)] for i in range(n)], 0, name=f"Z{n}")


def trivial_group() -> FiniteGroup:
    return validate_group([[0]], 0, name="trivial")


@lru_cache(maxsize=None)
def symmetric_group_with_perms(n: int) -> Tuple[FiniteGroup, Tuple[Permutation, ...]]:
    if n <= 1:
        group, perms = permutation_group([], max(n, 1), name=f"S{max(n, 1)}")
        return group, tuple(perms)
    transposition = (1, 0) + tuple(range(2, n))
    cycle = tuple((i + 1) % n for i in range(n))
    group, perms = permutation_group([transposition, cycle], n, name=f"S{n}")
    return group, tuple(perms)


def symmetric_group(n: int) -> FiniteGroup:
    return symmetric_group_with_perms(n)[0]


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n."""
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((-i) % n for i in range(n))
    return permutation_group([rotation, reflection], n, name=f"D{n}")[0]


def alternating_group_4() -> FiniteGroup:
    return permutation_group([(1, 2, 0, 3), (1, 0, 3, 2)], 4, name="A4")[0]


def quaternion_group() -> FiniteGroup:
    """Q8 with elements 1, -1, i, -i, j, -j, k, -k in that order."""
    # unit products among 1, i, j, k as (sign, unit)
    units = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    elements = [(s, u) for u in range(4) for s in (1, -1)]
    index = {e: i for i, e in enumerate(elements)}
    table = []
    for s1, u1 in elements:
        row = []
        for s2, u2 in elements:
            s, u = units[(u1, u2)]
            row.append(index[(s1 * s2 * s, u)])
        table.append(row)
    labels = [("" if s > 0 else "-") + "1ijk"[u] for s, u in elements]
    return validate_group(table, 0, name="Q8", labels=labels)


_FACTORIES: Dict[str, Callable[[], FiniteGroup]] = {"trivial": trivial_group}
for _n in range(2, 13):
    _FACTORIES[f"Z{_n}"] = (lambda n: lambda: cyclic_group(n))(_n)
_FACTORIES.update({
    "V4": lambda: direct_product(cyclic_group(2), cyclic_group(2), name="V4"),
    "S3": lambda: symmetric_group(3),
    "D4": lambda: dihedral_group(4),
    "Q8": quaternion_group,
    "D5": lambda: dihedral_group(5),
    "D6": lambda: dihedral_group(6),
    "A4": alternating_group_4,
})


def catalog_names() -> List[str]:
    return list(_FACTORIES)


@lru_cache(maxsize=None)
def _build(name: str) -> FiniteGroup:
    return _FACTORIES[name]()


def _normalize(name: str) -> str:
    key = name.strip().replace("/", "").replace(" ", "").replace("_", "")
    match = re.fullmatch(r"[cCzZ](\d+)", key)
    if match:
        return "trivial" if match.group(1) == "1" else f"Z{match.group(1)}"
    for known in _FACTORIES:
        if known.lower() == key.lower():
            return known
    return key


def get_group(name: str) -> FiniteGroup:
    """
    Look up a catalog group by name.

    Raises:
        UnknownGroup: with close-match suggestions when the name is not in the catalog

    Example:
        >>> get_group("Z/4").order
        4
    """
    key = _normalize(name)
    if key in _FACTORIES:
        return _build(key)
    close = sorted(
        (n for n in _FACTORIES if Levenshtein.distance(n.lower(), key.lower()) <= 2),
        key=lambda n: Levenshtein.distance(n.lower(), key.lower()),
    )
    hint = f" Did you mean: {', '.join(close)}?" if close else ""
    raise UnknownGroup(f"Unknown catalog group '{name}'.{hint}")


def catalog(max_order: int = 24, abelian_only: bool = False) -> List[CatalogEntry]:
    """Catalog entries of order <= max_order, in catalog order."""
    entries = []
    for name in _FACTORIES:
        group = _build(name)
        if group.order > max_order or (abelian_only and not group.is_abelian):
            continue
        entries.append(CatalogEntry(name, group))
    return entries


def enumerate_right_actions(group: FiniteGroup, size: int) -> Iterator[RightGSet]:
    """
    Every right action of `group` on {0..size-1}, exactly once.

    Homomorphisms into S_size are right actions directly because the symmetric
    group composes left to right: x.g = phi(g)(x).
    """
    sym, perms = symmetric_group_with_perms(size)
    for phi in enumerate_homomorphisms(group, sym):
        act = tuple(tuple(perms[phi.map[g]][x] for g in group.elements()) for x in range(size))
        yield RightGSet(group, size, act)


def identify(group: FiniteGroup) -> str:
    """Name of the catalog group isomorphic to `group`, or "" when none is."""
    if group.order == 1:
        return "trivial"
    for entry in catalog(max_order=group.order):
        if entry.order == group.order and are_isomorphic(entry.group, group):
            return entry.name
    return ""
