"""
camarkov_test.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import unittest

import numpy as np

from impervia.camarkov.allocation import AllocationState, allocate
from impervia.camarkov.ca_forecast import ca_forecast
from impervia.camarkov.ca_param import CaParam
from impervia.camarkov.imperv_change import imperv_change_binary
from impervia.camarkov.markov_model import MarkovModel, area_counts, fit_markov, format_matrix
from impervia.camarkov.suitability import neighborhood_fractions, suitability
from impervia.errors import ClassIndexError, ShapeMismatchError
from impervia.raster.grid import Grid
from impervia.raster.lulc_legend import CA8_DEVELOPED

TAU = CaParam.floor


def _identity_model(lc, class_count):
    areas = area_counts(lc, class_count)
    return MarkovModel(np.eye(class_count), areas, areas.copy())


class TestFitMarkov(unittest.TestCase):
    """
    Test cases for fit_markov.
    """

    def test_same_map(self):
        """
        lc_a = lc_b gives the identity and keeps the areas.
        """

        rng = np.random.default_rng(0)
        lc = Grid.categorical(rng.integers(0, 8, (16, 16)).astype(np.uint8))
        model = fit_markov(lc, lc)
        np.testing.assert_array_equal(model.transition, np.eye(8))
        np.testing.assert_array_equal(model.target_areas, model.current_areas)

    def test_hand_crosstab(self):
        lc_a = Grid.categorical([[0, 0, 1, 1]])
        lc_b = Grid.categorical([[0, 1, 1, 1]])
        model = fit_markov(lc_a, lc_b, class_count=2)
        np.testing.assert_allclose(model.transition, [[0.5, 0.5], [0.0, 1.0]])
        np.testing.assert_allclose(model.current_areas, [1.0, 3.0])
        np.testing.assert_allclose(model.target_areas, [0.5, 3.5])

    def test_stochastic(self):
        """
        Rows sum to 1, targets sum to the cell count, and powers stay row-stochastic.
        """

        rng = np.random.default_rng(1)
        for _ in range(10):
            lc_a = Grid.categorical(rng.integers(0, 8, (20, 20)).astype(np.uint8))
            lc_b = Grid.categorical(rng.integers(0, 8, (20, 20)).astype(np.uint8))
            model = fit_markov(lc_a, lc_b)
            np.testing.assert_allclose(model.transition.sum(axis=1), 1.0, atol=1e-9)
            self.assertAlmostEqual(float(model.target_areas.sum()), 400.0, places=9)
            power = np.linalg.matrix_power(model.transition, 5)
            np.testing.assert_allclose(power.sum(axis=1), 1.0, atol=1e-9)
            self.assertAlmostEqual(float(model.project(3).sum()), 400.0, places=9)

    def test_unseen_class(self):
        """
        A class absent from lc_a gets an identity row.
        """

        model = fit_markov(Grid.categorical([[0, 0]]), Grid.categorical([[0, 1]]), class_count=3)
        np.testing.assert_array_equal(model.transition[1], [0.0, 1.0, 0.0])
        np.testing.assert_array_equal(model.transition[2], [0.0, 0.0, 1.0])

    def test_class_error(self):
        with self.assertRaises(ClassIndexError):
            fit_markov(Grid.categorical([[8]]), Grid.categorical([[0]]))

    def test_format_matrix(self):
        text = format_matrix(np.eye(2), ["Water", "Developed"])
        self.assertEqual(text.splitlines(), ["from\\to Water Developed", "Water 1 0", "Developed 0 1"])
        with self.assertRaises(ValueError):
            format_matrix(np.eye(2), ["Water"])


class TestSuitability(unittest.TestCase):
    """
    Test cases for suitability.
    """

    def test_uniform(self):
        """
        A single-class grid under the identity scores 1 for that class and the floor elsewhere.
        """

        lc = Grid.categorical(np.full((6, 6), 3, dtype=np.uint8))
        suit = suitability(lc, _identity_model(lc, 8))
        np.testing.assert_allclose(suit[3], 1.0)
        np.testing.assert_allclose(np.delete(suit, 3, axis=0), TAU)

    def test_checkerboard(self):
        """
        Window 3 on a checkerboard matches the hand-counted fractions, with truncated edges.
        """

        board = (np.indices((4, 4)).sum(axis=0) % 2).astype(np.uint8)
        lc = Grid.categorical(board)
        suit = suitability(lc, _identity_model(lc, 2), window=3)
        self.assertAlmostEqual(suit[0, 1, 1], 5.0 / 9.0)
        self.assertAlmostEqual(suit[1, 1, 1], TAU)
        self.assertAlmostEqual(suit[0, 0, 0], 2.0 / 4.0)
        self.assertAlmostEqual(suit[1, 0, 1], 3.0 / 6.0)

    def test_range(self):
        rng = np.random.default_rng(2)
        lc_a = Grid.categorical(rng.integers(0, 8, (24, 24)).astype(np.uint8))
        lc_b = Grid.categorical(rng.integers(0, 8, (24, 24)).astype(np.uint8))
        suit = suitability(lc_b, fit_markov(lc_a, lc_b))
        self.assertEqual(suit.shape, (8, 24, 24))
        self.assertTrue(np.all((suit >= 0.0) & (suit <= 1.0)))

    def test_nodata(self):
        """
        Nodata pixels score 0 and are left out of the neighbour counts.
        """

        mask = np.zeros((3, 3), dtype=bool)
        mask[0, 0] = True
        lc = Grid.categorical(np.zeros((3, 3), dtype=np.uint8), nodata_mask=mask)
        fractions = neighborhood_fractions(lc, 2, 3)
        self.assertAlmostEqual(fractions[0, 1, 1], 1.0)
        suit = suitability(lc, _identity_model(lc, 2), window=3)
        np.testing.assert_array_equal(suit[:, 0, 0], [0.0, 0.0])

    def test_even_window(self):
        lc = Grid.categorical(np.zeros((4, 4), dtype=np.uint8))
        with self.assertRaises(ValueError):
            suitability(lc, _identity_model(lc, 2), window=4)


class TestAllocate(unittest.TestCase):
    """
    Test cases for allocate and ca_forecast.
    """

    def test_identity_reproduces_map(self):
        """
        The identity transition converges in one iteration to the input map.
        """

        rng = np.random.default_rng(3)
        lc = Grid.categorical(rng.integers(0, 8, (32, 32)).astype(np.uint8))
        forecast = ca_forecast(lc, lc)
        self.assertTrue(forecast.result.converged)
        self.assertEqual(forecast.result.iterations, 1)
        np.testing.assert_array_equal(forecast.result.grid.values, lc.values)

    def test_random_two_class(self):
        """
        Ten random two-class instances reach their targets within the tolerance band.
        """

        for seed in range(10):
            rng = np.random.default_rng(100 + seed)
            suit = rng.uniform(0.2, 1.0, (2, 32, 32))
            template = Grid.categorical(np.zeros((32, 32), dtype=np.uint8))
            share = rng.uniform(0.3, 0.7)
            targets = np.array([round(share * 1024), 1024 - round(share * 1024)], dtype=float)
            result = allocate(AllocationState.initial(suit, template), targets)
            self.assertTrue(result.converged, msg=f"{seed = }")
            self.assertLessEqual(result.iterations, 500)
            band = np.maximum(1.0, 0.005 * targets)
            self.assertTrue(np.all(np.abs(result.deficits) <= band))
            areas = np.bincount(result.grid.values.reshape(-1), minlength=2)
            np.testing.assert_allclose(areas, targets - result.deficits)

    def test_zero_eta_is_argmax(self):
        """
        With eta = 0 the multipliers stay at 1 and the map is the argmax of suitability.
        """

        rng = np.random.default_rng(4)
        suit = rng.uniform(0.0, 1.0, (3, 10, 10))
        template = Grid.categorical(np.zeros((10, 10), dtype=np.uint8))
        result = allocate(AllocationState.initial(suit, template), [0.0, 0.0, 100.0], eta=0.0, max_iter=5)
        self.assertFalse(result.converged)
        np.testing.assert_array_equal(result.multipliers, 1.0)
        np.testing.assert_array_equal(result.grid.values, np.argmax(suit, axis=0))

    def test_nodata_untouched(self):
        """
        Every valid cell is allocated once and nodata stays nodata.
        """

        mask = np.zeros((8, 8), dtype=bool)
        mask[:2] = True
        template = Grid.categorical(np.zeros((8, 8), dtype=np.uint8), nodata_mask=mask)
        suit = np.random.default_rng(5).uniform(0.2, 1.0, (2, 8, 8))
        result = allocate(AllocationState.initial(suit, template), [24.0, 24.0])
        np.testing.assert_array_equal(result.grid.mask, mask)
        self.assertEqual(int(np.bincount(result.grid.values[~mask], minlength=2).sum()), 48)

    def test_errors(self):
        template = Grid.categorical(np.zeros((4, 4), dtype=np.uint8))
        suit = np.ones((2, 4, 4))
        with self.assertRaises(ValueError):
            allocate(AllocationState.initial(suit, template), [20.0, -4.0])
        with self.assertRaises(ValueError):
            allocate(AllocationState.initial(suit, template), [10.0, 10.0])
        with self.assertRaises(ShapeMismatchError):
            allocate(AllocationState.initial(suit, template), [16.0])
        with self.assertRaises(ShapeMismatchError):
            AllocationState.initial(np.ones((2, 3, 3)), template)


class TestImpervChange(unittest.TestCase):
    """
    Test cases for imperv_change_binary.
    """

    def test_no_developed(self):
        lc = Grid.categorical(np.full((3, 3), 2, dtype=np.uint8))
        self.assertEqual(int(imperv_change_binary(lc, lc).values.sum()), 0)

    def test_single_pixel(self):
        before = Grid.categorical(np.full((3, 3), 2, dtype=np.uint8))
        after_values = before.values.copy()
        after_values[1, 2] = CA8_DEVELOPED
        change = imperv_change_binary(before, Grid.categorical(after_values))
        self.assertEqual(int(change.values.sum()), 1)
        self.assertEqual(int(change.values[1, 2]), 1)

    def test_oracle(self):
        rng = np.random.default_rng(6)
        before = rng.integers(0, 8, (16, 16)).astype(np.uint8)
        after = rng.integers(0, 8, (16, 16)).astype(np.uint8)
        change = imperv_change_binary(Grid.categorical(before), Grid.categorical(after))
        for r in range(16):
            for c in range(16):
                expected = after[r, c] == CA8_DEVELOPED and before[r, c] != CA8_DEVELOPED
                self.assertEqual(bool(change.values[r, c]), expected)

    def test_shape_mismatch(self):
        with self.assertRaises(ShapeMismatchError):
            imperv_change_binary(Grid.categorical([[0, 1]]), Grid.categorical([[0], [1]]))


if __name__ == "__main__":
    unittest.main()
