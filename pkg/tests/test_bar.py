#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Unit tests for bar constructions, nerves and Segal checks
"""

import os
import sys
import unittest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src")))

from homnorm.bar import (
    action_commutation_report,
    bar,
    bar_of_hom,
    bar_power_comparison,
    level_G_action,
    monoid_nerve,
    nerve,
    orbit_map,
    recover_group_from_nerve,
    segal_check,
    segal_map,
)
from homnorm.catalog import catalog
from homnorm.errors import DegreeOutOfRange, InputError, MismatchedGroups, NotHomogeneous, SegalFailed
from homnorm.groups import find_isomorphism, regular_right_action, trivial_right_action
from homnorm.simplicial import FinSetMap, cech_power, check_simplicial_map, is_levelwise_bijective, verify_simplicial

from fixtures import S3, Z2, Z3, a3_into_s3, swap_action, z4_onto_z2


class TestBar(unittest.TestCase):
    """Level sizes, indexing and simplicial identities"""

    def test_nerve_of_z2(self):
        b = nerve(Z2, 3)
        self.assertEqual(b.underlying.level_sizes, (1, 2, 4, 8))
        self.assertTrue(verify_simplicial(b.underlying).ok)

    def test_bar_of_regular_action(self):
        b = bar(regular_right_action(Z3), Z3, 2)
        self.assertEqual(b.underlying.level_sizes, (3, 9, 27))
        self.assertTrue(verify_simplicial(b.underlying).ok)

    def test_mixed_radix_index(self):
        s = bar(swap_action(), Z2, 2).underlying
        self.assertEqual(s.label(2, 1 * 4 + 1 * 2 + 0), (1, 1, 0))

    def test_faces(self):
        s = bar(swap_action(), Z2, 2).underlying
        index = s.label_index(2)
        sigma = index[(0, 1, 1)]
        self.assertEqual(s.label(1, s.face(2, 0)[sigma]), (1, 1))
        self.assertEqual(s.label(1, s.face(2, 1)[sigma]), (0, 0))
        self.assertEqual(s.label(1, s.face(2, 2)[sigma]), (0, 1))
        self.assertEqual(s.label(2, s.degeneracy(1, 0)[s.label_index(1)[(1, 1)]]), (1, 0, 1))

    def test_bar_of_hom(self):
        b = bar_of_hom(a3_into_s3(), 2)
        self.assertEqual(b.underlying.level_sizes, (6, 18, 54))
        self.assertTrue(verify_simplicial(b.underlying).ok)

    def test_mismatched_groups(self):
        with self.assertRaises(MismatchedGroups):
            bar(regular_right_action(Z3), Z2, 2)

    def test_truncation_too_low(self):
        with self.assertRaises(DegreeOutOfRange):
            nerve(Z2, 0)


class TestSegal(unittest.TestCase):
    """Reduced Segal conditions and group recovery"""

    def test_nerve_is_segal(self):
        for group in (Z2, Z3, S3):
            self.assertTrue(segal_check(nerve(group, 3).underlying).ok, group.name)

    def test_recover_group(self):
        recovered = recover_group_from_nerve(nerve(S3, 3).underlying)
        self.assertEqual(recovered.table, S3.table)
        self.assertEqual(recovered.identity, S3.identity)

    def test_every_catalog_group(self):
        for entry in catalog():
            with self.subTest(group=entry.name):
                s = nerve(entry.group, 4).underlying
                self.assertTrue(segal_check(s).ok)
                recovered = recover_group_from_nerve(s, entry.name)
                self.assertIsNotNone(find_isomorphism(recovered, entry.group))

    def test_segal_map_is_bijective_on_nerve(self):
        codes = segal_map(nerve(Z3, 3).underlying, 3)
        self.assertEqual(sorted(codes), list(range(27)))

    def test_not_reduced(self):
        result = segal_check(bar(regular_right_action(Z2), Z2, 3).underlying)
        self.assertFalse(result.basepoint_ok)
        self.assertFalse(result.ok)
        self.assertIn("basepoint", result.report.checks())

    def test_power_construction_is_not_reduced(self):
        result = segal_check(cech_power(FinSetMap(2, 1, (0, 0)), 2))
        self.assertFalse(result.ok)

    def test_monoid_is_not_group_like(self):
        s = monoid_nerve([[0, 1], [1, 1]], 0, 3)
        result = segal_check(s)
        self.assertTrue(result.basepoint_ok)
        self.assertEqual(result.segal_ok, {2: True, 3: True})
        self.assertFalse(result.pi0_group_ok)
        with self.assertRaises(SegalFailed):
            recover_group_from_nerve(s)

    def test_monoid_unit_checked(self):
        with self.assertRaises(InputError):
            monoid_nerve([[0, 1], [1, 1]], 1, 2)

    def test_truncation_limits(self):
        with self.assertRaises(DegreeOutOfRange):
            segal_check(nerve(Z2, 1).underlying)
        with self.assertRaises(SegalFailed):
            recover_group_from_nerve(nerve(Z2, 2).underlying)


class TestLevelActions(unittest.TestCase):
    """Left translation of G on Bar(G, N)"""

    def test_translation_table(self):
        b = bar_of_hom(a3_into_s3(), 2)
        act = level_G_action(b, 1)
        stride = 3
        for g in S3.elements():
            for sigma in range(b.underlying.level_sizes[1]):
                x, n = divmod(sigma, stride)
                self.assertEqual(act[g][sigma], S3.mul(g, x) * stride + n)

    def test_commutes_with_every_structure_map(self):
        b = bar_of_hom(z4_onto_z2(), 3)
        for m in range(b.truncation + 1):
            report = action_commutation_report(b, m)
            self.assertTrue(report.ok, m)
        self.assertTrue(action_commutation_report(b, 2).notes["d0"])

    def test_needs_a_homomorphism(self):
        with self.assertRaises(NotHomogeneous):
            level_G_action(nerve(Z2, 2), 1)


class TestPowerComparison(unittest.TestCase):
    """bar(X, G) against the power construction of X -> X/G"""

    def test_orbit_map(self):
        self.assertEqual(orbit_map(regular_right_action(Z2)), FinSetMap(2, 1, (0, 0)))
        self.assertEqual(orbit_map(trivial_right_action(Z2, 2)), FinSetMap(2, 2, (0, 1)))

    def test_free_action_gives_isomorphism(self):
        f = bar_power_comparison(regular_right_action(S3), S3, 2)
        self.assertTrue(check_simplicial_map(f).ok)
        self.assertTrue(is_levelwise_bijective(f))

    def test_non_free_action(self):
        f = bar_power_comparison(trivial_right_action(Z2, 2), Z2, 2)
        self.assertTrue(check_simplicial_map(f).ok)
        self.assertFalse(is_levelwise_bijective(f))


if __name__ == "__main__":
    unittest.main()
