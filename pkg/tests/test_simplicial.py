#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Unit tests for truncated simplicial sets and the power construction
"""

import os
import sys
import unittest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src")))

from homnorm.errors import IndexOutOfRange
from homnorm.simplicial import (
    FinSetMap,
    SimplicialMap,
    cech_power,
    check_simplicial_map,
    compose_face_path,
    compose_maps,
    constant_simplicial_set,
    identity_map,
    is_levelwise_bijective,
    make_simplicial_set,
    pi0,
    verify_simplicial,
    vertex_restriction,
)


def _constant_maps(size, k):
    s = constant_simplicial_set(size, k)
    return dict(s.faces), dict(s.degeneracies)


class TestMakeSimplicialSet(unittest.TestCase):
    """Shape checks of the raw constructor"""

    def test_constant(self):
        faces, degeneracies = _constant_maps(2, 2)
        s = make_simplicial_set([2, 2, 2], faces, degeneracies)
        self.assertEqual(s.truncation, 2)
        self.assertTrue(verify_simplicial(s).ok)

    def test_missing_face(self):
        faces, degeneracies = _constant_maps(2, 2)
        del faces[(2, 1)]
        with self.assertRaises(IndexOutOfRange) as ctx:
            make_simplicial_set([2, 2, 2], faces, degeneracies)
        self.assertEqual(ctx.exception.witness, (2, 1))

    def test_face_leaves_its_level(self):
        faces, degeneracies = _constant_maps(2, 1)
        faces[(1, 0)] = (0, 2)
        with self.assertRaises(IndexOutOfRange):
            make_simplicial_set([2, 2], faces, degeneracies)

    def test_empty(self):
        with self.assertRaises(IndexOutOfRange):
            make_simplicial_set([], {}, {})


class TestVerifySimplicial(unittest.TestCase):
    """Simplicial identities and their witnesses"""

    def test_broken_face_is_reported(self):
        faces, degeneracies = _constant_maps(2, 2)
        faces[(2, 0)] = (1, 0)
        report = verify_simplicial(make_simplicial_set([2, 2, 2], faces, degeneracies))
        self.assertFalse(report.ok)
        self.assertIn("d0d1=d0d0", report.checks())
        violation = report.violations[report.checks().index("d0d1=d0d0")]
        self.assertEqual(violation.level, 2)
        self.assertEqual(violation.witness, (0,))

    def test_broken_degeneracy_is_reported(self):
        faces, degeneracies = _constant_maps(2, 2)
        degeneracies[(1, 1)] = (1, 0)
        report = verify_simplicial(make_simplicial_set([2, 2, 2], faces, degeneracies))
        self.assertFalse(report.ok)
        self.assertIn("d1s1=id", report.checks())


class TestCechPower(unittest.TestCase):
    """The power construction of a finite-set map"""

    def test_level_sizes(self):
        s = cech_power(FinSetMap(3, 2, (0, 0, 1)), 3)
        self.assertEqual(s.level_sizes, (3, 5, 9, 17))
        self.assertTrue(verify_simplicial(s).ok)

    def test_labels_are_fiber_tuples(self):
        s = cech_power(FinSetMap(3, 2, (0, 0, 1)), 2)
        self.assertEqual(s.labels[1], ((0, 0), (0, 1), (1, 0), (1, 1), (2, 2)))
        index = s.label_index(1)
        self.assertEqual(s.face(1, 0)[index[(0, 1)]], 1)
        self.assertEqual(s.face(1, 1)[index[(0, 1)]], 0)

    def test_components_are_fibers(self):
        s = cech_power(FinSetMap(3, 2, (0, 0, 1)), 2)
        self.assertEqual(pi0(s), [[0, 1], [2]])

    def test_bad_map(self):
        with self.assertRaises(IndexOutOfRange):
            FinSetMap(2, 1, (0, 1))
        with self.assertRaises(IndexOutOfRange):
            cech_power(FinSetMap(1, 1, (0,)), 0)


class TestFacePaths(unittest.TestCase):
    """Composite faces and vertex restrictions"""

    def test_vertex_restriction(self):
        self.assertEqual(vertex_restriction(3, [1, 2]), [3, 0])
        self.assertEqual(vertex_restriction(2, [0]), [2, 1])

    def test_last_vertex(self):
        s = cech_power(FinSetMap(2, 1, (0, 0)), 2)
        index = s.label_index(2)
        path = compose_face_path(s, 2, [2, 1])
        self.assertEqual(path[index[(1, 0, 1)]], s.label_index(0)[(1,)])
        path = compose_face_path(s, 2, [0, 0])
        self.assertEqual(path[index[(1, 0, 0)]], s.label_index(0)[(0,)])

    def test_invalid_path(self):
        s = constant_simplicial_set(1, 2)
        with self.assertRaises(IndexOutOfRange):
            compose_face_path(s, 1, [1, 0])
        with self.assertRaises(IndexOutOfRange):
            compose_face_path(s, 2, [3])


class TestSimplicialMaps(unittest.TestCase):
    """Maps between truncated simplicial sets"""

    def test_identity(self):
        s = cech_power(FinSetMap(3, 2, (0, 0, 1)), 2)
        f = identity_map(s)
        self.assertTrue(check_simplicial_map(f).ok)
        self.assertTrue(is_levelwise_bijective(f))
        self.assertEqual(compose_maps(f, f), f)

    def test_collapse_to_a_point(self):
        s = cech_power(FinSetMap(3, 2, (0, 0, 1)), 2)
        point = constant_simplicial_set(1, 2)
        f = SimplicialMap(s, point, tuple((0,) * n for n in s.level_sizes))
        self.assertTrue(check_simplicial_map(f).ok)
        self.assertFalse(is_levelwise_bijective(f))

    def test_map_not_commuting(self):
        s = constant_simplicial_set(2, 1)
        f = SimplicialMap(s, s, ((0, 1), (1, 0)))
        report = check_simplicial_map(f)
        self.assertFalse(report.ok)
        self.assertIn("d0", report.checks())

    def test_truncation_mismatch(self):
        f = SimplicialMap(constant_simplicial_set(1, 1), constant_simplicial_set(1, 2), ((0,), (0,)))
        self.assertEqual(check_simplicial_map(f).checks(), ["truncation"])


if __name__ == "__main__":
    unittest.main()
