#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Shared groups, maps and deliberately broken objects for the homnorm tests
"""

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src")))

from homnorm.catalog import get_group
from homnorm.crossed import CrossedModule, TruncatedSimplicialGroup
from homnorm.groups import (
    GroupActionOnGroup,
    enumerate_homomorphisms,
    validate_hom,
    validate_right_action,
)

TRIVIAL = get_group("trivial")
Z2 = get_group("Z2")
Z3 = get_group("Z3")
Z4 = get_group("Z4")
V4 = get_group("V4")
S3 = get_group("S3")


def first_injective(source, target):
    return next(h for h in enumerate_homomorphisms(source, target) if h.is_injective)


def a3_into_s3():
    """The normal inclusion Z3 -> S3."""
    return first_injective(Z3, S3)


def transposition_into_s3():
    """Z2 -> S3 onto a transposition; the image is not normal."""
    return first_injective(Z2, S3)


def z4_onto_z2():
    return validate_hom(Z4, Z2, [0, 1, 0, 1])


def inversion_crossed_module():
    """Z4 -> Z2 with Z2 inverting Z4: CM1 holds, CM2 fails."""
    action = GroupActionOnGroup(Z2, Z4, ((0, 1, 2, 3), (0, 3, 2, 1)))
    return CrossedModule(z4_onto_z2(), action)


def swap_action():
    """Z2 swapping two points."""
    return validate_right_action(Z2, 2, [[0, 1], [1, 0]])


class OppositeLevel:
    """A level group with its product reversed: a * b := b . a."""

    def __init__(self, inner):
        self.inner = inner
        self.name = f"{inner.name}^op"

    @property
    def order(self):
        return self.inner.order

    @property
    def identity(self):
        return self.inner.identity

    def mul(self, a, b):
        return self.inner.mul(b, a)

    def inv(self, a):
        return self.inner.inv(a)


def opposite(gamma):
    """The same simplicial set with every level group replaced by its opposite."""
    return TruncatedSimplicialGroup(
        gamma.underlying,
        tuple(OppositeLevel(level) for level in gamma.level_groups),
        gamma.crossed_module,
    )
