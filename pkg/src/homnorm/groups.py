#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Finite group arithmetic for homnorm.

Groups are multiplication tables over element indices 0..n-1. The identity
is stored explicitly, so third-party tables whose element 0 is not the
identity can be ingested as they are.

Key components:
- FiniteGroup, GroupHom, GroupActionOnGroup, RightGSet: immutable values
- validate_group / validate_hom / validate_action / validate_right_action: checked constructors
- kernel, image_normal, quotient_by_image, subgroup, quotient: subgroup arithmetic
- automorphism_group, enumerate_homomorphisms, enumerate_actions: exhaustive searches
- find_isomorphism: generator backtracking

Example:
    >>> z4 = validate_group([[(i + j) % 4 for j in range(4)] for i in range(4)], name="Z4")
    >>> z2 = validate_group([[0, 1], [1, 0]], name="Z2")
    >>> q = validate_hom(z4, z2, [0, 1, 0, 1])
    >>> kernel(q)[0].order
    2
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Protocol, Sequence, Tuple

from .errors import (
    IdentityNotPreserved,
    ImageNotNormal,
    InputError,
    InvalidAction,
    NoIdentity,
    NoInverse,
    NonAssociative,
    NotHomomorphism,
    OutOfRange,
)

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]
Permutation = Tuple[int, ...]


class GroupOps(Protocol):
    """Anything that multiplies element indices 0..order-1."""

    name: str

    @property
    def order(self) -> int: ...

    @property
    def identity(self) -> int: ...

    def mul(self, a: int, b: int) -> int: ...

    def inv(self, a: int) -> int: ...


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """
    A finite group given by its multiplication table.

    Attributes:
        table (Table): table[i][j] is the index of g_i * g_j
        identity (int): index of the identity element
        inverse (Tuple[int, ...]): inverse[i] is the index of g_i^-1
        name (str): display label
        labels (Tuple[str, ...]): optional per-element display labels

    Equality compares the table and the identity only; names and labels are cosmetic.
    """

    table: Table
    identity: int
    inverse: Tuple[int, ...]
    name: str = ""
    labels: Tuple[str, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(len(self.table))

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in self.elements() for b in range(a))

    @cached_property
    def generators(self) -> Tuple[int, ...]:
        return minimal_generating_set(self)

    def rows(self) -> List[List[int]]:
        return [list(row) for row in self.table]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.identity == other.identity and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.identity, self.table))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"


@dataclass(frozen=True, eq=False)
class GroupHom:
    """
    A homomorphism source -> target, stored as the image of every source element.

    Attributes:
        source: domain group
        target: codomain group
        map: map[a] is the image of source element a
    """

    source: GroupOps
    target: GroupOps
    map: Tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    @property
    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.order

    def image(self) -> List[int]:
        return sorted(set(self.map))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupHom):
            return NotImplemented
        return (self.map == other.map and self.source == other.source
                and self.target == other.target)

    def __hash__(self) -> int:
        return hash(self.map)


@dataclass(frozen=True, eq=False)
class GroupActionOnGroup:
    """
    A left action of `actor` (G) on `carrier` (N) by automorphisms; act[g][n] is g acting on n.
    """

    actor: FiniteGroup
    carrier: FiniteGroup
    act: Table

    def apply(self, g: int, n: int) -> int:
        return self.act[g][n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupActionOnGroup):
            return NotImplemented
        return (self.act == other.act and self.actor == other.actor
                and self.carrier == other.carrier)

    def __hash__(self) -> int:
        return hash(self.act)


@dataclass(frozen=True, eq=False)
class RightGSet:
    """
    A right action of `group` on {0..carrier_size-1}; act[x][g] is x.g.
    """

    group: FiniteGroup
    carrier_size: int
    act: Table

    def apply(self, x: int, g: int) -> int:
        return self.act[x][g]

    @property
    def is_free(self) -> bool:
        e = self.group.identity
        return all(self.act[x][g] != x for x in range(self.carrier_size)
                   for g in self.group.elements() if g != e)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RightGSet):
            return NotImplemented
        return self.act == other.act and self.group == other.group

    def __hash__(self) -> int:
        return hash(self.act)


# Validation
# ----------

def _as_table(rows: Sequence[Sequence[int]], width: int, height: int, what: str) -> Table:
    if len(rows) != height:
        raise OutOfRange(f"{what} has {len(rows)} rows, expected {height}")
    out = []
    for i, row in enumerate(rows):
        if len(row) != width:
            raise OutOfRange(f"{what} row {i} has {len(row)} entries, expected {width}", (i,))
        out.append(tuple(int(v) for v in row))
    return tuple(out)


def validate_group(
    table: Sequence[Sequence[int]],
    identity_hint: Optional[int] = None,
    name: str = "",
    labels: Sequence[str] = (),
) -> FiniteGroup:
    """
    Check a multiplication table and build a FiniteGroup from it.

    Args:
        table: square matrix of element indices, table[i][j] = index of g_i * g_j
        identity_hint: index of the identity, if known
        name: display label for the group
        labels: optional per-element display labels

    Returns:
        FiniteGroup with its inverse array computed

    Raises:
        OutOfRange: table not square or an entry outside [0, order)
        NoIdentity: no two-sided identity (or the hint is not one)
        NoInverse: an element without a two-sided inverse (witness: the element)
        NonAssociative: witness triple (i, j, k)

    Example:
        >>> validate_group([[0, 1], [1, 0]]).inverse
        (0, 1)
    """
    n = len(table)
    if n == 0:
        raise OutOfRange("group table is empty")
    t = _as_table(table, n, n, "group table")
    for i, row in enumerate(t):
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise OutOfRange(f"table[{i}][{j}] = {v} outside [0, {n})", (i, j))

    def is_identity(e: int) -> bool:
        return all(t[e][i] == i and t[i][e] == i for i in range(n))

    if identity_hint is not None:
        if not 0 <= identity_hint < n or not is_identity(identity_hint):
            raise NoIdentity(f"element {identity_hint} is not a two-sided identity", (identity_hint,))
        identity = identity_hint
    else:
        found = next((e for e in range(n) if is_identity(e)), None)
        if found is None:
            raise NoIdentity("table has no two-sided identity")
        identity = found

    inverse = []
    for i in range(n):
        j = next((j for j in range(n) if t[i][j] == identity), None)
        if j is None or t[j][i] != identity:
            raise NoInverse(f"element {i} has no two-sided inverse", (i,))
        inverse.append(j)

    for i in range(n):
        row_i = t[i]
        for j in range(n):
            row_ij = t[row_i[j]]
            row_j = t[j]
            for k in range(n):
                if row_ij[k] != row_i[row_j[k]]:
                    raise NonAssociative(f"(g{i} g{j}) g{k} != g{i} (g{j} g{k})", (i, j, k))

    if labels and len(labels) != n:
        raise OutOfRange(f"{len(labels)} labels for a group of order {n}")
    return FiniteGroup(t, identity, tuple(inverse), name, tuple(labels))


def validate_hom(source: GroupOps, target: GroupOps, mapping: Sequence[int]) -> GroupHom:
    """
    Check that `mapping` is a homomorphism source -> target.

    Raises:
        OutOfRange: wrong length or an image outside the target
        IdentityNotPreserved: identity not sent to identity
        NotHomomorphism: witness pair (a, b) with f(ab) != f(a) f(b)

    """
    if len(mapping) != source.order:
        raise OutOfRange(f"map has length {len(mapping)}, source order is {source.order}")
    m = tuple(int(v) for v in mapping)
    for a, v in enumerate(m):
        if not 0 <= v < target.order:
            raise OutOfRange(f"map[{a}] = {v} outside the target", (a,))
    if m[source.identity] != target.identity:
        raise IdentityNotPreserved(
            f"identity {source.identity} maps to {m[source.identity]}, not {target.identity}",
            (source.identity,),
        )
    for a in range(source.order):
        for b in range(source.order):
            if m[source.mul(a, b)] != target.mul(m[a], m[b]):
                raise NotHomomorphism(f"f({a}*{b}) != f({a})*f({b})", (a, b))
    return GroupHom(source, target, m)


def validate_action(actor: FiniteGroup, carrier: FiniteGroup, act: Sequence[Sequence[int]]) -> GroupActionOnGroup:
    """
    Check that act[g] is an automorphism of N for every g and that g -> act[g] is a homomorphism.

    Raises:
        OutOfRange: shape or range problems
        InvalidAction: witness (g, n) or (g, n, m) for the failed axiom
    """
    t = _as_table(act, carrier.order, actor.order, "action table")
    n_ord = carrier.order
    for g, row in enumerate(t):
        for n, v in enumerate(row):
            if not 0 <= v < n_ord:
                raise OutOfRange(f"action[{g}][{n}] = {v} outside the carrier", (g, n))
        if len(set(row)) != n_ord:
            raise InvalidAction(f"action of {g} is not a bijection", (g,))
        for n in range(n_ord):
            for m in range(n_ord):
                if row[carrier.mul(n, m)] != carrier.mul(row[n], row[m]):
                    raise InvalidAction(f"action of {g} does not respect {n}*{m}", (g, n, m))
    e = actor.identity
    for n in range(n_ord):
        if t[e][n] != n:
            raise InvalidAction(f"identity moves {n}", (e, n))
    for g in range(actor.order):
        for h in range(actor.order):
            gh = t[actor.mul(g, h)]
            for n in range(n_ord):
                if gh[n] != t[g][t[h][n]]:
                    raise InvalidAction(f"({g}{h}).{n} != {g}.({h}.{n})", (g, h, n))
    return GroupActionOnGroup(actor, carrier, t)


def validate_right_action(group: FiniteGroup, carrier_size: int, act: Sequence[Sequence[int]]) -> RightGSet:
    """
    Check the right-action axioms x.e = x and (x.g).h = x.(gh).

    Raises:
        OutOfRange: shape or range problems
        InvalidAction: witness (x, g) or (x, g, h)
    """
    if carrier_size < 1:
        raise OutOfRange(f"carrier size must be positive, got {carrier_size}")
    t = _as_table(act, group.order, carrier_size, "right action table")
    for x, row in enumerate(t):
        for g, v in enumerate(row):
            if not 0 <= v < carrier_size:
                raise OutOfRange(f"act[{x}][{g}] = {v} outside the carrier", (x, g))
        if row[group.identity] != x:
            raise InvalidAction(f"identity moves {x}", (x, group.identity))
    for x in range(carrier_size):
        for g in group.elements():
            xg = t[x][g]
            for h in group.elements():
                if t[xg][h] != t[x][group.mul(g, h)]:
                    raise InvalidAction(f"({x}.{g}).{h} != {x}.({g}{h})", (x, g, h))
    return RightGSet(group, carrier_size, t)


def regular_right_action(group: FiniteGroup) -> RightGSet:
    """G acting on itself by right translation."""
    return RightGSet(group, group.order, group.table)


def trivial_right_action(group: FiniteGroup, carrier_size: int) -> RightGSet:
    return RightGSet(group, carrier_size, tuple(tuple(x for _ in group.elements()) for x in range(carrier_size)))


def translation_along(f: GroupHom) -> RightGSet:
    """The target of f as a right set over the source: x.n = x f(n)."""
    target = f.target
    source = f.source
    if not isinstance(source, FiniteGroup):
        raise InputError("translation_along needs a table group as source")
    act = tuple(tuple(target.mul(x, f.map[n]) for n in range(source.order)) for x in range(target.order))
    return RightGSet(source, target.order, act)


# Subgroups and quotients
# -----------------------

def element_order(group: GroupOps, a: int) -> int:
    k, x = 1, a
    while x != group.identity:
        x = group.mul(x, a)
        k += 1
    return k


def closure(group: GroupOps, gens: Iterable[int]) -> List[int]:
    """Elements of the subgroup generated by `gens`, sorted."""
    gens = list(gens)
    seen = {group.identity}
    queue = deque([group.identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = group.mul(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def minimal_generating_set(group: GroupOps) -> Tuple[int, ...]:
    """
    Smallest generating set, preferring lexicographically smallest index tuples.

    Returns () for the trivial group.
    """
    n = group.order
    if n == 1:
        return ()
    candidates = [a for a in range(n) if a != group.identity]
    for r in range(1, len(candidates) + 1):
        for combo in itertools.combinations(candidates, r):
            if len(closure(group, combo)) == n:
                return combo
    raise InputError("group is not generated by its elements")  # unreachable for valid groups


def subgroup(group: GroupOps, elements: Iterable[int], name: str = "") -> Tuple[FiniteGroup, GroupHom]:
    """
    Turn a subset closed under the group law into a table group with its inclusion.

    Raises:
        InputError: the subset is not closed under multiplication
    """
    elems = sorted(set(elements))
    index: Dict[int, int] = {a: i for i, a in enumerate(elems)}
    if group.identity not in index:
        raise InputError("subset does not contain the identity")
    table = []
    for a in elems:
        row = []
        for b in elems:
            ab = group.mul(a, b)
            if ab not in index:
                raise InputError(f"subset not closed: {a}*{b} = {ab}", (a, b))
            row.append(index[ab])
        table.append(row)
    sub = validate_group(table, index[group.identity], name=name)
    return sub, GroupHom(sub, group, tuple(elems))


def is_normal_subset(group: GroupOps, elements: Iterable[int]) -> bool:
    members = set(elements)
    for g in range(group.order):
        g_inv = group.inv(g)
        for h in members:
            if group.mul(group.mul(g, h), g_inv) not in members:
                return False
    return True


def quotient(group: GroupOps, normal: Iterable[int], name: str = "") -> Tuple[FiniteGroup, GroupHom]:
    """
    Quotient by a normal subgroup, classes numbered by their smallest element.

    Raises:
        ImageNotNormal: the subset is not normal
    """
    members = sorted(set(normal))
    if not is_normal_subset(group, members):
        raise ImageNotNormal("subgroup is not normal")
    cls = [-1] * group.order
    reps: List[int] = []
    for g in range(group.order):
        if cls[g] != -1:
            continue
        for h in members:
            cls[group.mul(g, h)] = len(reps)
        reps.append(g)
    table = [[cls[group.mul(a, b)] for b in reps] for a in reps]
    q = validate_group(table, cls[group.identity], name=name)
    return q, GroupHom(group, q, tuple(cls))


def kernel(f: GroupHom) -> Tuple[FiniteGroup, GroupHom]:
    """
    Kernel of f as a group, with its inclusion into the source.

    Example:
        >>> kernel(sign)[0].order
        3
    """
    e = f.target.identity
    return subgroup(f.source, (a for a, v in enumerate(f.map) if v == e), name=f"ker({_name(f.source)})")


def image_normal(f: GroupHom) -> bool:
    """True iff g f(n) g^-1 lies in im(f) for all g, n."""
    return is_normal_subset(f.target, f.map)


def quotient_by_image(f: GroupHom) -> Tuple[FiniteGroup, GroupHom]:
    """
    G / im(f) with its projection.

    Raises:
        ImageNotNormal: im(f) is not normal in the target
    """
    if not image_normal(f):
        raise ImageNotNormal("image is not a normal subgroup of the target")
    return quotient(f.target, f.map, name=f"{_name(f.target)}/im")


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str = "") -> FiniteGroup:
    """G x H with (a, b) stored at index a*|H| + b."""
    m = h.order
    table = [
        [g.mul(a1, a2) * m + h.mul(b1, b2) for a2 in g.elements() for b2 in h.elements()]
        for a1 in g.elements() for b1 in h.elements()
    ]
    labels = [f"({g.label(a)},{h.label(b)})" for a in g.elements() for b in h.elements()]
    return validate_group(table, g.identity * m + h.identity, name=name or f"{g.name}x{h.name}", labels=labels)


def _name(group: GroupOps) -> str:
    return getattr(group, "name", "") or "G"


# Searches
# --------

def _extend(source: GroupOps, target: GroupOps, gens: Sequence[int], images: Sequence[int]) -> Optional[Tuple[int, ...]]:
    # breadth-first over the Cayley graph; every edge (x, s) is checked once
    mapping = [-1] * source.order
    mapping[source.identity] = target.identity
    queue = deque([source.identity])
    while queue:
        x = queue.popleft()
        fx = mapping[x]
        for s, img in zip(gens, images):
            y = source.mul(x, s)
            val = target.mul(fx, img)
            if mapping[y] == -1:
                mapping[y] = val
                queue.append(y)
            elif mapping[y] != val:
                return None
    return tuple(mapping)


def enumerate_homomorphisms(source: FiniteGroup, target: GroupOps) -> Iterator[GroupHom]:
    """
    Every homomorphism source -> target, exactly once.

    Backtracks over images of a minimal generating set of the source; homomorphisms
    come out in lexicographic order of the generator images.
    """
    gens = source.generators
    target_orders = [element_order(target, h) for h in range(target.order)]
    candidates = []
    for s in gens:
        o = element_order(source, s)
        candidates.append([h for h in range(target.order) if o % target_orders[h] == 0])
    for images in itertools.product(*candidates):
        mapping = _extend(source, target, gens, images)
        if mapping is not None:
            yield GroupHom(source, target, mapping)


def automorphism_group(group: FiniteGroup) -> Tuple[FiniteGroup, List[Permutation]]:
    """
    Aut(N) under composition, with the permutation realizing each element.

    Element i of the returned group acts on N as perms[i]; perms are sorted, so the
    identity automorphism is element 0 and table[i][j] realizes perms[i] after perms[j].

    Example:
        >>> automorphism_group(cyclic_group(4))[0].order
        2
    """
    perms = sorted(h.map for h in enumerate_homomorphisms(group, group) if h.is_injective)
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[n]] for n in group.elements())] for q in perms] for p in perms]
    aut = validate_group(table, index[tuple(group.elements())], name=f"Aut({group.name})")
    logger.debug("Aut(%s) has order %d", group.name, aut.order)
    return aut, perms


def enumerate_actions(
    actor: FiniteGroup,
    carrier: FiniteGroup,
    automorphisms: Optional[Tuple[FiniteGroup, List[Permutation]]] = None,
) -> Iterator[GroupActionOnGroup]:
    """
    Every action of `actor` on `carrier` by automorphisms, one per homomorphism G -> Aut(N).

    Args:
        actor: the acting group G
        carrier: the group N acted on
        automorphisms: a precomputed automorphism_group(carrier)

    Yields:
        GroupActionOnGroup values in lexicographic order of the generator images in Aut(N)
    """
    aut, perms = automorphisms or automorphism_group(carrier)
    for phi in enumerate_homomorphisms(actor, aut):
        act = tuple(perms[phi.map[g]] for g in actor.elements())
        yield GroupActionOnGroup(actor, carrier, act)


def trivial_action(actor: FiniteGroup, carrier: FiniteGroup) -> GroupActionOnGroup:
    row = tuple(carrier.elements())
    return GroupActionOnGroup(actor, carrier, tuple(row for _ in actor.elements()))


def find_isomorphism(g: FiniteGroup, h: FiniteGroup) -> Optional[GroupHom]:
    """
    An isomorphism G -> H found by backtracking on the generators of G, or None.
    """
    if g.order != h.order or g.is_abelian != h.is_abelian:
        return None
    h_orders = [element_order(h, b) for b in h.elements()]
    if sorted(h_orders) != sorted(element_order(g, a) for a in g.elements()):
        return None
    gens = g.generators
    candidates = [[b for b in h.elements() if h_orders[b] == element_order(g, s)] for s in gens]
    for images in itertools.product(*candidates):
        mapping = _extend(g, h, gens, images)
        if mapping is not None and len(set(mapping)) == len(mapping):
            return GroupHom(g, h, mapping)
    return None


def are_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    return find_isomorphism(g, h) is not None
