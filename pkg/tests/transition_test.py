"""
transition_test.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import unittest

import numpy as np

from impervia.errors import ClassIndexError, ShapeMismatchError
from impervia.raster.grid import Grid
from impervia.raster.lulc_legend import LulcLegend
from impervia.raster.synthetic_series import generate_series
from impervia.transition.likelihood_map import likelihood_map, likelihood_series
from impervia.transition.transition_tables import (
    build_tables,
    collapse,
    crosstab,
    format_probs,
    normalize,
    parse_probs,
)

C = 16


def _random_lc(rng, shape=(64, 64)):
    return Grid.categorical(rng.integers(0, C, shape).astype(np.uint8), class_count=C)


class TestCrosstab(unittest.TestCase):
    """
    Test cases for crosstab.
    """

    def test_constant(self):
        """
        Four pixels of class 3 on both dates.
        """

        lc = Grid.categorical(np.full((2, 2), 3, dtype=np.uint8))
        counts = crosstab(lc, lc, 4)
        self.assertEqual(counts[3, 3], 4)
        self.assertEqual(counts.sum(), 4)

    def test_two_pixels(self):
        counts = crosstab(Grid.categorical([[0, 1]]), Grid.categorical([[1, 1]]), 2)
        np.testing.assert_array_equal(counts, [[0, 1], [0, 1]])

    def test_oracle(self):
        """
        100 random 64x64 pairs match the per-pixel loop, including the probabilities.
        """

        rng = np.random.default_rng(0)
        legend = LulcLegend.nlcd16()
        weights = legend.weight_vector
        pervious = legend.pervious_flags
        for _ in range(100):
            a, b = _random_lc(rng), _random_lc(rng)
            expected = np.zeros((C, C), dtype=np.int64)
            for i, j in zip(a.values.ravel(), b.values.ravel()):
                expected[i, j] += 1
            tables = build_tables(a, b, legend)
            np.testing.assert_array_equal(tables.counts, expected)

            perv = np.array([sum(expected[i, j] for j in range(C) if pervious[j]) for i in range(C)], dtype=float)
            imp = np.array([sum(weights[j] * expected[i, j] for j in range(C)) for i in range(C)])
            total = perv + imp
            np.testing.assert_allclose(tables.probs[:, 1], imp / total, rtol=0, atol=1e-12)

            lmap = likelihood_map(a, tables.probs)
            oracle = np.array([tables.probs[c, 1] for c in a.values.ravel()]).reshape(a.shape)
            np.testing.assert_allclose(lmap.grid.values, oracle, rtol=0, atol=1e-12)

    def test_nodata_not_counted(self):
        a = Grid.categorical([[0, 1]], nodata_mask=[[True, False]])
        b = Grid.categorical([[1, 1]])
        self.assertEqual(crosstab(a, b, 2).sum(), 1)

    def test_chunked(self):
        """
        Chunked counts add up to the same table.
        """

        rng = np.random.default_rng(1)
        a, b = _random_lc(rng), _random_lc(rng)
        np.testing.assert_array_equal(crosstab(a, b, C), crosstab(a, b, C, chunk_size=97))

    def test_diagonal(self):
        lc = _random_lc(np.random.default_rng(2), (16, 16))
        counts = crosstab(lc, lc, C)
        np.testing.assert_array_equal(counts, np.diag(np.diag(counts)))

    def test_errors(self):
        with self.assertRaises(ShapeMismatchError):
            crosstab(Grid.categorical([[0, 1]]), Grid.categorical([[0], [1]]), 2)
        with self.assertRaises(ClassIndexError):
            crosstab(Grid.categorical([[0, 5]]), Grid.categorical([[0, 1]]), 2)


class TestCollapse(unittest.TestCase):
    """
    Test cases for collapse and normalize.
    """

    def setUp(self):
        self.legend = LulcLegend.nlcd16()

    def test_high_intensity(self):
        """
        10 transitions into High Intensity give [0, 10].
        """

        counts = np.zeros((C, C))
        counts[7, 5] = 10
        np.testing.assert_allclose(collapse(counts, self.legend)[7], [0.0, 10.0])

    def test_pervious(self):
        counts = np.zeros((C, C))
        counts[7, [0, 7, 11]] = [3, 4, 5]
        np.testing.assert_allclose(collapse(counts, self.legend)[7], [12.0, 0.0])

    def test_open_space(self):
        """
        4 into Open Space and 6 pervious give [6, 0.8].
        """

        counts = np.zeros((C, C))
        counts[11, 2] = 4
        counts[11, 11] = 6
        np.testing.assert_allclose(collapse(counts, self.legend)[11], [6.0, 0.8])

    def test_legend_mismatch(self):
        with self.assertRaises(ClassIndexError):
            collapse(np.zeros((8, 8)), self.legend)

    def test_normalize(self):
        """
        [6, 0.8], [0, 0], [5, 5].
        """

        probs, absent = normalize([[6.0, 0.8], [0.0, 0.0], [5.0, 5.0]])
        np.testing.assert_allclose(probs[0], [6.0 / 6.8, 0.8 / 6.8])
        np.testing.assert_array_equal(probs[1], [1.0, 0.0])
        np.testing.assert_allclose(probs[2], [0.5, 0.5])
        self.assertEqual(absent, frozenset({1}))

    def test_negative(self):
        with self.assertRaises(ValueError):
            normalize([[-1.0, 0.0]])

    def test_probs_text(self):
        """
        The audit table has one line per class.
        """

        probs, _ = normalize(np.abs(np.random.default_rng(3).normal(size=(C, 2))))
        text = format_probs(probs, self.legend)
        self.assertEqual(len(text.splitlines()), C)
        np.testing.assert_allclose(parse_probs(text), probs, rtol=1e-8)


class TestLikelihoodMap(unittest.TestCase):
    """
    Test cases for likelihood_map and likelihood_series.
    """

    def test_all_water(self):
        water = Grid.categorical(np.zeros((3, 3), dtype=np.uint8))
        tables = build_tables(water, water)
        lmap = likelihood_map(water, tables.probs)
        np.testing.assert_array_equal(lmap.grid.values, np.zeros((3, 3)))

    def test_lookup(self):
        probs = np.array([[1.0, 0.0], [0.5, 0.5]])
        lmap = likelihood_map(Grid.categorical([[1]]), probs)
        np.testing.assert_array_equal(lmap.grid.values, [[0.5]])

    def test_mixed_oracle(self):
        """
        A mixed 3x3 grid with nodata is a per-pixel lookup.
        """

        probs = np.array([[0.9, 0.1], [0.3, 0.7], [0.6, 0.4]])
        mask = np.zeros((3, 3), dtype=bool)
        mask[1, 1] = True
        lc = Grid.categorical([[0, 1, 2], [2, 1, 0], [1, 1, 2]], nodata_mask=mask)
        lmap = likelihood_map(lc, probs)
        for r in range(3):
            for c in range(3):
                if mask[r, c]:
                    self.assertTrue(lmap.grid.mask[r, c])
                else:
                    self.assertEqual(lmap.grid.values[r, c], probs[lc.values[r, c], 1])

    def test_out_of_range(self):
        with self.assertRaises(ClassIndexError):
            likelihood_map(Grid.categorical([[3]]), np.array([[1.0, 0.0], [0.5, 0.5]]))

    def test_permutation(self):
        """
        Permuting pixels permutes the map.
        """

        rng = np.random.default_rng(4)
        lc = _random_lc(rng, (8, 8))
        probs, _ = normalize(rng.uniform(0, 1, (C, 2)))
        perm = rng.permutation(64)
        shuffled = Grid.categorical(lc.values.ravel()[perm].reshape(8, 8))
        np.testing.assert_array_equal(
            likelihood_map(shuffled, probs).grid.values.ravel(),
            likelihood_map(lc, probs).grid.values.ravel()[perm],
        )

    def test_series_identical(self):
        """
        N=2 identical maps give 2 identical likelihood maps.
        """

        lc = _random_lc(np.random.default_rng(5), (8, 8))
        maps = likelihood_series([lc, lc])
        self.assertEqual(len(maps), 2)
        np.testing.assert_array_equal(maps[0].grid.values, maps[1].grid.values)

    def test_series_last_map(self):
        """
        The N-th map applies the last pair's table to lc_N.
        """

        series = generate_series((32, 32), years=(2001, 2004, 2006), seed=3)
        lcs = [series.land_cover[y] for y in series.years]
        maps = likelihood_series(lcs)
        self.assertEqual(len(maps), 3)
        expected = likelihood_map(lcs[2], build_tables(lcs[1], lcs[2]).probs)
        np.testing.assert_array_equal(maps[2].grid.values, expected.grid.values)
        self.assertEqual(maps[2].source, (1, 2))
        for lmap in maps:
            values = lmap.grid.values[lmap.grid.valid]
            self.assertTrue(np.all((values >= 0.0) & (values <= 1.0)))

    def test_series_new_class(self):
        """
        A class that only appears in lc_N falls back to the [1, 0] row.
        """

        lc1 = Grid.categorical([[7, 7], [7, 2]])
        lc2 = Grid.categorical([[7, 3], [7, 2]])
        lc3 = Grid.categorical([[14, 3], [7, 2]])
        maps = likelihood_series([lc1, lc2, lc3])
        self.assertIn(14, maps[2].tables.absent_classes)
        self.assertEqual(maps[2].grid.values[0, 0], 0.0)

    def test_series_too_short(self):
        with self.assertRaises(ValueError):
            likelihood_series([Grid.categorical([[0]])])


if __name__ == "__main__":
    unittest.main()
