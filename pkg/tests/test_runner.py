#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Unit tests for the catalog runner
"""

import itertools
import os
import sys
import unittest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src")))

from homnorm.catalog import catalog
from homnorm.groups import enumerate_homomorphisms
from homnorm.runner import RunParameters, check_pair, run_catalog, summarize


class TestCheckPair(unittest.TestCase):
    """Every check on the homomorphisms between two groups"""

    def test_z2_into_s3(self):
        result = check_pair("Z2", "S3", RunParameters(levels=3))
        self.assertEqual(result.failures, [])
        self.assertEqual(result.counts["homs"], 4)
        self.assertEqual(result.counts["injective"], 3)
        self.assertEqual(result.counts["oracle_checked"], 3)
        self.assertEqual(result.counts["normal"], 1)
        self.assertEqual(result.counts["certificates"], 1)
        self.assertEqual(result.counts["abelian_checked"], 0)

    def test_z3_into_s3(self):
        result = check_pair("Z3", "S3", RunParameters(levels=3))
        self.assertEqual(result.failures, [])
        self.assertEqual(result.counts["normal"], 3)
        self.assertEqual(result.counts["gamma_verified"], 3)
        self.assertEqual(result.counts["equivariant_verified"], 3)
        self.assertEqual(result.counts["moore_verified"], 3)
        self.assertEqual(result.counts["agreement_verified"], 3)

    def test_budget_failure_is_recorded(self):
        result = check_pair("Z3", "S3", RunParameters(levels=3, budget=0.5))
        self.assertEqual({f["check"] for f in result.failures}, {"search"})

    def test_low_truncation_skips_moore(self):
        result = check_pair("Z2", "Z2", RunParameters(levels=2))
        self.assertEqual(result.failures, [])
        self.assertEqual(result.counts["gamma_verified"], 2)
        self.assertEqual(result.counts["moore_verified"], 0)


class TestRunCatalog(unittest.TestCase):
    """Aggregation over every ordered pair"""

    def setUp(self):
        self.params = RunParameters(max_order=2, levels=3)

    def test_order_two(self):
        report = run_catalog(self.params)
        self.assertTrue(report.ok)
        v = report.verdicts
        self.assertEqual(v["groups"], 2)
        self.assertEqual(v["pairs"], 4)
        self.assertEqual(v["homs"], 5)
        self.assertEqual(v["injective"], 3)
        self.assertEqual(v["normal"], 5)
        self.assertEqual(v["abelian_checked"], 5)
        self.assertEqual(v["certificates"], 5)
        self.assertEqual(v["agreement_verified"], 5)
        self.assertEqual(report.command, "catalog")
        self.assertEqual(len(report.inputs_digest), 64)

    def test_workers_do_not_change_verdicts(self):
        single = run_catalog(self.params, workers=1)
        pooled = run_catalog(self.params, workers=2)
        self.assertEqual(single.to_dict(include_timing=False), pooled.to_dict(include_timing=False))

    def test_digest_depends_on_parameters(self):
        other = run_catalog(RunParameters(max_order=2, levels=2))
        self.assertNotEqual(run_catalog(self.params).inputs_digest, other.inputs_digest)

    def test_summary(self):
        line = summarize(run_catalog(self.params))
        self.assertIn("5 homomorphisms", line)
        self.assertIn("0 failure(s)", line)


class TestRunCatalogToOrderEight(unittest.TestCase):
    """The full catalog of order at most 8 at truncation 2"""

    def test_every_pair(self):
        report = run_catalog(RunParameters(max_order=8, levels=2))
        self.assertTrue(report.ok, report.failures[:5])
        v = report.verdicts
        self.assertEqual(v["groups"], 12)
        self.assertEqual(v["pairs"], 144)
        self.assertEqual(v["oracle_checked"], v["injective"])
        self.assertEqual(v["gamma_verified"], v["certificates"])
        self.assertEqual(v["equivariant_verified"], v["certificates"])
        abelian = [e.group for e in catalog(max_order=8, abelian_only=True)]
        expected = sum(
            1 for n, g in itertools.product(abelian, repeat=2) for _ in enumerate_homomorphisms(n, g)
        )
        self.assertEqual(v["abelian_checked"], expected)


if __name__ == "__main__":
    unittest.main()
