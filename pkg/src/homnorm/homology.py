#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Normalized chains and integral homology of truncated simplicial sets.

Boundaries are kept as sparse columns while the complex is built; homology
converts the two relevant boundaries to sympy DomainMatrix values and reads
ranks over QQ and invariant factors (Smith normal form) over ZZ.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from .errors import BoundarySquareNonzero, DegreeOutOfRange
from .simplicial import TruncatedSimplicialSet

logger = logging.getLogger(__name__)

Column = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class ChainComplex:
    """
    Free chain complex in degrees 0..k.

    Attributes:
        ranks: rank of each chain group
        boundaries: boundaries[m] lists, for each basis element of degree m, its
            boundary as (row, coefficient) pairs in degree m-1; boundaries[0] is all empty
        basis: simplex index of each basis element, per degree
    """

    ranks: Tuple[int, ...]
    boundaries: Tuple[Tuple[Column, ...], ...]
    basis: Tuple[Tuple[int, ...], ...]

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    def dense(self, m: int) -> List[List[int]]:
        """Boundary of degree m as a ranks[m-1] x ranks[m] integer matrix."""
        rows = [[0] * self.ranks[m] for _ in range(self.ranks[m - 1])]
        for col, entries in enumerate(self.boundaries[m]):
            for row, coeff in entries:
                rows[row][col] = coeff
        return rows


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group Z^free_rank + sum of Z/t."""

    free_rank: int
    torsion: Tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) or "0"


def normalized_chains(s: TruncatedSimplicialSet) -> ChainComplex:
    """
    Chains on non-degenerate simplices with boundary sum (-1)^i d_i.

    Faces landing on degenerate simplices contribute 0.

    Raises:
        BoundarySquareNonzero: the boundary does not square to zero (the input is not simplicial)

    Example:
        >>> normalized_chains(nerve(cyclic_group(2), 2).underlying).ranks
        (1, 1, 1)
    """
    k = s.truncation
    basis: List[Tuple[int, ...]] = []
    position: List[Dict[int, int]] = []
    for m in range(k + 1):
        degenerate = set()
        if m >= 1:
            for i in range(m):
                degenerate.update(s.degeneracy(m - 1, i))
        nondeg = tuple(x for x in range(s.level_sizes[m]) if x not in degenerate)
        basis.append(nondeg)
        position.append({x: p for p, x in enumerate(nondeg)})

    boundaries: List[Tuple[Column, ...]] = [tuple(() for _ in basis[0])]
    for m in range(1, k + 1):
        columns = []
        for x in basis[m]:
            acc: Dict[int, int] = {}
            for i in range(m + 1):
                y = s.face(m, i)[x]
                p = position[m - 1].get(y)
                if p is not None:
                    acc[p] = acc.get(p, 0) + (-1) ** i
            columns.append(tuple(sorted((r, c) for r, c in acc.items() if c)))
        boundaries.append(tuple(columns))

    for m in range(2, k + 1):
        for col, entries in enumerate(boundaries[m]):
            acc = {}
            for row, coeff in entries:
                for r, c in boundaries[m - 1][row]:
                    acc[r] = acc.get(r, 0) + coeff * c
            if any(acc.values()):
                raise BoundarySquareNonzero(
                    f"boundary squares to a nonzero chain on degree-{m} simplex {basis[m][col]}",
                    (m, basis[m][col]),
                )
    ranks = tuple(len(b) for b in basis)
    logger.debug("normalized chain ranks: %s", ranks)
    return ChainComplex(ranks, tuple(boundaries), tuple(basis))


def _matrix(rows: List[List[int]], nrows: int, ncols: int) -> DomainMatrix:
    return DomainMatrix([[ZZ(v) for v in row] for row in rows], (nrows, ncols), ZZ)


def homology(c: ChainComplex, m: int) -> HomologyGroup:
    """
    H_m = ker d_m / im d_{m+1} as free rank plus invariant factors.

    Raises:
        DegreeOutOfRange: m outside [0, top), where boundaries from above exist

    Example:
        >>> str(homology(normalized_chains(nerve(cyclic_group(2), 3).underlying), 1))
        'Z/2'
    """
    if not 0 <= m < c.top:
        raise DegreeOutOfRange(f"homology needs 0 <= m < {c.top}, got {m}", (m,))
    rank_out = 0
    if m >= 1 and c.ranks[m] and c.ranks[m - 1]:
        rank_out = _matrix(c.dense(m), c.ranks[m - 1], c.ranks[m]).convert_to(QQ).rank()
    cycles = c.ranks[m] - rank_out

    rank_in = 0
    torsion: Tuple[int, ...] = ()
    if c.ranks[m] and c.ranks[m + 1]:
        incoming = _matrix(c.dense(m + 1), c.ranks[m], c.ranks[m + 1])
        rank_in = incoming.convert_to(QQ).rank()
        factors = (abs(int(f)) for f in invariant_factors(incoming))
        torsion = tuple(sorted(f for f in factors if f > 1))
    return HomologyGroup(cycles - rank_in, torsion)
