#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Unit tests for crossed modules, the normality search and the simplicial group Gamma
"""

import itertools
import os
import sys
import unittest

from hypothesis import given, settings, strategies as st

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src")))

from homnorm.actions import canonical_action_agreement
from homnorm.bar import bar_of_hom
from homnorm.catalog import catalog, get_group
from homnorm.crossed import (
    CrossedModule,
    GammaLevelGroup,
    TruncatedSimplicialGroup,
    check_crossed_module,
    constant_simplicial_group,
    conjugation_cm,
    decide_normal,
    equivariant_iso_check,
    gamma_from_cm,
    kernel_centrality_violations,
    make_crossed_module,
    moore_homotopy,
    search_crossed_module,
    two_type_invariants,
    verify_simplicial_group,
)
from homnorm.errors import (
    DegreeOutOfRange,
    ImageNotNormal,
    InvalidCrossedModule,
    MismatchedGroups,
    NotInjective,
    SearchBudgetExceeded,
)
from homnorm.groups import are_isomorphic, enumerate_homomorphisms, image_normal, trivial_action
from homnorm.simplicial import constant_simplicial_set

from fixtures import (
    S3,
    TRIVIAL,
    Z2,
    Z3,
    Z4,
    a3_into_s3,
    inversion_crossed_module,
    opposite,
    transposition_into_s3,
    z4_onto_z2,
)

SMALL_GROUPS = ["trivial", "Z2", "Z3", "Z4", "V4", "S3"]


class TestCrossedModuleAxioms(unittest.TestCase):
    """CM1 and CM2 with their witnesses"""

    def test_conjugation_is_crossed(self):
        cm = conjugation_cm(a3_into_s3())
        self.assertTrue(check_crossed_module(cm.boundary, cm.action).ok)

    def test_inversion_breaks_cm2_only(self):
        cm = inversion_crossed_module()
        report = check_crossed_module(cm.boundary, cm.action)
        self.assertFalse(report.ok)
        self.assertEqual(set(report.checks()), {"CM2"})
        self.assertIn((1, 1), [v.witness for v in report.violations])

    def test_trivial_action_on_non_normal_image(self):
        f = transposition_into_s3()
        report = check_crossed_module(f, trivial_action(S3, Z2))
        self.assertIn("CM1", report.checks())

    def test_make_crossed_module_raises(self):
        cm = inversion_crossed_module()
        with self.assertRaises(InvalidCrossedModule) as ctx:
            make_crossed_module(cm.boundary, cm.action)
        self.assertIsNotNone(ctx.exception.witness)

    def test_mismatched_action(self):
        with self.assertRaises(MismatchedGroups):
            check_crossed_module(z4_onto_z2(), trivial_action(Z3, Z4))

    def test_conjugation_preconditions(self):
        with self.assertRaises(NotInjective):
            conjugation_cm(z4_onto_z2())
        with self.assertRaises(ImageNotNormal):
            conjugation_cm(transposition_into_s3())

    def test_kernel_is_central(self):
        self.assertTrue(kernel_centrality_violations(decide_normal(z4_onto_z2())).ok)
        broken = CrossedModule(next(enumerate_homomorphisms(S3, TRIVIAL)), trivial_action(TRIVIAL, S3))
        report = kernel_centrality_violations(broken)
        self.assertFalse(report.ok)
        self.assertEqual(set(report.checks()), {"central"})


class TestNormalitySearch(unittest.TestCase):
    """decide_normal and its search statistics"""

    def test_normal_inclusion(self):
        search = search_crossed_module(a3_into_s3())
        self.assertTrue(search.normal)
        self.assertEqual(search.candidates_examined, 2)
        self.assertEqual(search.aut_order, 2)
        self.assertEqual(search.certificate.action, conjugation_cm(a3_into_s3()).action)

    def test_non_normal_inclusion(self):
        search = search_crossed_module(transposition_into_s3())
        self.assertFalse(search.normal)
        self.assertEqual(search.candidates_examined, 1)
        self.assertEqual(search.to_dict()["aut_order"], 1)

    def test_quotient_map_is_normal(self):
        cm = decide_normal(z4_onto_z2())
        self.assertIsNotNone(cm)
        self.assertEqual(cm.action, trivial_action(Z2, Z4))

    def test_non_central_kernel(self):
        self.assertIsNone(decide_normal(next(enumerate_homomorphisms(S3, TRIVIAL))))

    def test_budget(self):
        with self.assertRaises(SearchBudgetExceeded) as ctx:
            search_crossed_module(a3_into_s3(), budget=0.1)
        self.assertEqual(ctx.exception.witness, (2, 2))

    def test_injective_maps_agree_with_image_normality(self):
        """Every injective map between catalog groups of order at most 8."""
        entries = catalog(max_order=8)
        checked = 0
        for source, target in itertools.product(entries, repeat=2):
            for f in enumerate_homomorphisms(source.group, target.group):
                if f.is_injective:
                    checked += 1
                    self.assertEqual(
                        decide_normal(f) is not None, image_normal(f), (source.name, target.name, f.map)
                    )
        self.assertGreater(checked, 0)

    def test_abelian_maps_are_normal(self):
        """Every map between abelian catalog groups of order at most 12."""
        entries = catalog(max_order=12, abelian_only=True)
        self.assertIn("Z12", [e.name for e in entries])
        for source, target in itertools.product(entries, repeat=2):
            for f in enumerate_homomorphisms(source.group, target.group):
                self.assertIsNotNone(decide_normal(f), (source.name, target.name, f.map))

    @settings(derandomize=True, max_examples=30, deadline=None)
    @given(st.sampled_from(SMALL_GROUPS), st.sampled_from(SMALL_GROUPS))
    def test_certificates_pass_both_axioms(self, source_name, target_name):
        for f in enumerate_homomorphisms(get_group(source_name), get_group(target_name)):
            cm = decide_normal(f)
            if cm is not None:
                self.assertTrue(check_crossed_module(cm.boundary, cm.action).ok, f.map)


class TestGamma(unittest.TestCase):
    """The simplicial group of a crossed module"""

    def test_level_orders(self):
        gamma = gamma_from_cm(decide_normal(a3_into_s3()), 3)
        self.assertEqual([g.order for g in gamma.level_groups], [6, 18, 54, 162])
        self.assertEqual(gamma.underlying.level_sizes, (6, 18, 54, 162))

    def test_level_zero_is_g(self):
        level = GammaLevelGroup(decide_normal(a3_into_s3()), 0)
        for a in S3.elements():
            for b in S3.elements():
                self.assertEqual(level.mul(a, b), S3.mul(a, b))

    def test_inverse(self):
        level = GammaLevelGroup(decide_normal(a3_into_s3()), 2)
        for x in range(level.order):
            self.assertEqual(level.mul(x, level.inv(x)), level.identity)

    def test_verified(self):
        for f in (a3_into_s3(), z4_onto_z2()):
            cm = decide_normal(f)
            b = bar_of_hom(f, 3)
            gamma = gamma_from_cm(cm, 3, bar_complex=b)
            report = verify_simplicial_group(gamma)
            self.assertTrue(report.ok, report.to_dict())
            self.assertEqual(report.notes["homomorphisms level 1"], "exhaustive")
            self.assertTrue(equivariant_iso_check(gamma, b).ok)

    def test_cm2_failure_breaks_level_two(self):
        """CM2 fails for the inversion action, so d_1 on level 2 is not a homomorphism.

        d_0 is already a homomorphism under CM1 alone.
        """
        gamma = gamma_from_cm(inversion_crossed_module(), 2, validate=False)
        report = verify_simplicial_group(gamma)
        self.assertFalse(report.ok)
        found = [(v.check, v.level, v.witness) for v in report.violations]
        self.assertIn(("d1", 2, (1, 4)), found)
        self.assertNotIn("d0", report.checks())

    def test_invalid_cm_rejected(self):
        with self.assertRaises(InvalidCrossedModule):
            gamma_from_cm(inversion_crossed_module(), 2)

    def test_opposite_product_is_caught(self):
        f = a3_into_s3()
        b = bar_of_hom(f, 3)
        gamma = opposite(gamma_from_cm(decide_normal(f), 3, bar_complex=b))
        self.assertTrue(verify_simplicial_group(gamma).ok)
        checks = equivariant_iso_check(gamma, b).checks()
        self.assertIn("b", checks)
        self.assertIn("c", checks)
        agreement = canonical_action_agreement(gamma.crossed_module, 3, gamma=gamma, bar_complex=b)
        self.assertEqual(set(agreement.checks()), {"agreement"})


class TestSimplicialGroupVerification(unittest.TestCase):
    """verify_simplicial_group on table groups"""

    def test_constant(self):
        self.assertTrue(verify_simplicial_group(constant_simplicial_group(S3, 3)).ok)

    def test_wrong_order(self):
        gamma = TruncatedSimplicialGroup(constant_simplicial_set(6, 2), (S3, Z2, S3))
        report = verify_simplicial_group(gamma)
        self.assertEqual(report.checks(), ["order"])
        self.assertEqual(report.violations[0].level, 1)

    def test_sampling(self):
        report = verify_simplicial_group(
            constant_simplicial_group(S3, 2), pair_limit=10, triple_limit=10, sample_size=50,
        )
        self.assertTrue(report.ok)
        self.assertEqual(report.notes["associativity level 0"], "sampled 50")
        self.assertEqual(report.notes["homomorphisms level 2"], "sampled 50")


class TestMooreHomotopy(unittest.TestCase):
    """Moore homotopy groups and the two-type invariants"""

    def test_constant(self):
        gamma = constant_simplicial_group(S3, 3)
        self.assertEqual(moore_homotopy(gamma, 0).order, 6)
        self.assertEqual(moore_homotopy(gamma, 1).order, 1)

    def test_degree_range(self):
        gamma = constant_simplicial_group(S3, 3)
        with self.assertRaises(DegreeOutOfRange):
            moore_homotopy(gamma, 2)

    def test_normal_inclusion(self):
        invariants = two_type_invariants(decide_normal(a3_into_s3()), 4)
        self.assertTrue(are_isomorphic(invariants.pi1, Z2))
        self.assertEqual(invariants.pi2.order, 1)
        self.assertEqual([g.order for g in invariants.moore], [2, 1, 1])

    def test_quotient_map(self):
        invariants = two_type_invariants(decide_normal(z4_onto_z2()), 4)
        self.assertEqual(invariants.pi1.order, 1)
        self.assertTrue(are_isomorphic(invariants.pi2, Z2))
        self.assertEqual([g.order for g in invariants.moore], [1, 2, 1])


if __name__ == "__main__":
    unittest.main()
