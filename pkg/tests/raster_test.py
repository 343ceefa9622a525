"""
raster_test.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import os
import struct
import tempfile
import unittest

import numpy as np

from impervia.errors import (
    ClassIndexError,
    GridDimensionError,
    GridFormatError,
    GridIOError,
    GridKindError,
    GridSchemaError,
    ShapeMismatchError,
)
from impervia.raster.geotiff_converter import convert_geotiff
from impervia.raster.grid import Grid, GridKind
from impervia.raster.grid_ops import aggregate, change_map
from impervia.raster.igrd_io import load_grid, save_grid
from impervia.raster.lulc_legend import LulcLegend, to_ca_classes
from impervia.raster.synthetic_series import generate_series, make_toy_task
from impervia.raster.tile_set import tile, tile_id, write_tile_index


def _igrd_bytes(kind, width, height, body, magic=b"IGRD", version=1, pixel_size=30.0, nodata=-9999.0, reserved=0):
    header = struct.pack("<4sHBBIIff", magic, version, kind, reserved, width, height, pixel_size, nodata)
    return header + body


class TestIgrdIo(unittest.TestCase):
    """
    Test cases for load_grid / save_grid.
    """

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = self.tmp.name

    def tearDown(self):
        self.tmp.cleanup()

    def _write(self, name, data):
        path = os.path.join(self.dir, name)
        with open(path, "wb") as f:
            f.write(data)
        return path

    def test_load_continuous(self):
        """
        A 2x2 continuous file is read back as written.
        """

        body = np.array([0, 50, 100, 25], dtype="<f4").tobytes()
        grid = load_grid(self._write("a.igrd", _igrd_bytes(1, 2, 2, body)))
        self.assertEqual(grid.kind, GridKind.CONTINUOUS)
        self.assertEqual(grid.shape, (2, 2))
        self.assertEqual(grid.pixel_size, 30.0)
        np.testing.assert_array_equal(grid.values.ravel(), [0, 50, 100, 25])
        self.assertFalse(grid.mask.any())

    def test_byte_identical(self):
        """
        save_grid(load_grid(p)) writes the same bytes, nodata included.
        """

        body = np.array([0, -9999, 100, 12.5, 7, 3], dtype="<f4").tobytes()
        original = _igrd_bytes(1, 3, 2, body)
        src = self._write("src.igrd", original)
        grid = load_grid(src)
        self.assertTrue(grid.mask[0, 1])
        dst = os.path.join(self.dir, "dst.igrd")
        save_grid(grid, dst)
        with open(dst, "rb") as f:
            self.assertEqual(f.read(), original)

    def test_categorical_round_trip(self):
        """
        Categorical grids keep their class indices and nodata.
        """

        grid = Grid.categorical([[0, 3], [15, 2]], nodata_mask=[[False, False], [False, True]])
        path = os.path.join(self.dir, "lc.igrd")
        save_grid(grid, path)
        self.assertTrue(load_grid(path).equals(grid))

    def test_bad_magic(self):
        """
        Magic XXXX is a format error.
        """

        path = self._write("bad.igrd", _igrd_bytes(1, 1, 1, b"\0" * 4, magic=b"XXXX"))
        with self.assertRaises(GridFormatError):
            load_grid(path)

    def test_bad_version(self):
        path = self._write("v2.igrd", _igrd_bytes(1, 1, 1, b"\0" * 4, version=2))
        with self.assertRaises(GridFormatError):
            load_grid(path)

    def test_reserved_byte(self):
        """
        A nonzero reserved byte is a format error.
        """

        path = self._write("reserved.igrd", _igrd_bytes(1, 1, 1, b"\0" * 4, reserved=1))
        with self.assertRaises(GridFormatError):
            load_grid(path)

    def test_continuous_out_of_range(self):
        """
        Valid continuous pixels outside 0 ~ 100 are a format error, nodata pixels are not checked.
        """

        for bad in (100.5, -1.0, float("nan"), float("inf")):
            body = np.array([10.0, bad], dtype="<f4").tobytes()
            with self.assertRaises(GridFormatError, msg=bad):
                load_grid(self._write("range.igrd", _igrd_bytes(1, 2, 1, body)))
        body = np.array([10.0, -9999.0], dtype="<f4").tobytes()
        self.assertTrue(load_grid(self._write("nodata.igrd", _igrd_bytes(1, 2, 1, body))).mask[0, 1])

    def test_unknown_kind(self):
        """
        An unknown kind byte is a schema error.
        """

        path = self._write("kind.igrd", _igrd_bytes(7, 1, 1, b"\0" * 4))
        with self.assertRaises(GridSchemaError):
            load_grid(path)

    def test_truncated(self):
        """
        A short body is an I/O error.
        """

        path = self._write("short.igrd", _igrd_bytes(1, 2, 2, b"\0" * 8))
        with self.assertRaises(GridIOError):
            load_grid(path)
        with self.assertRaises(OSError):
            load_grid(self._write("header.igrd", b"IGRD\x01"))


class TestGrid(unittest.TestCase):
    """
    Test cases for the Grid invariants.
    """

    def test_continuous_range(self):
        with self.assertRaises(ValueError):
            Grid.continuous([[0.0, 101.0]])
        grid = Grid.continuous([[0.0, 500.0]], nodata_mask=[[False, True]])
        self.assertEqual(grid.valid.sum(), 1)

    def test_class_count(self):
        with self.assertRaises(ClassIndexError):
            Grid.categorical([[0, 16]], class_count=16)

    def test_not_2d(self):
        with self.assertRaises(ShapeMismatchError):
            Grid.continuous([1.0, 2.0])


class TestTile(unittest.TestCase):
    """
    Test cases for tile and TileSet.
    """

    def test_exact(self):
        """
        256x256 with side 128 gives 4 tiles.
        """

        tiles = tile(Grid.continuous(np.zeros((256, 256))), 128)
        self.assertEqual(len(tiles), 4)
        self.assertEqual(tiles.origins, ((0, 0), (0, 128), (128, 0), (128, 128)))
        self.assertEqual((tiles.margin_rows, tiles.margin_cols), (0, 0))

    def test_margin(self):
        """
        300x300 with side 128 gives 4 tiles and 44-pixel margins.
        """

        tiles = tile(Grid.continuous(np.zeros((300, 300))), 128)
        self.assertEqual(len(tiles), 4)
        self.assertEqual((tiles.margin_rows, tiles.margin_cols), (44, 44))
        self.assertEqual(tiles.status, "ok")

    def test_too_large(self):
        """
        100x100 with side 128 gives no tile and an empty status.
        """

        tiles = tile(Grid.continuous(np.zeros((100, 100))), 128)
        self.assertEqual(len(tiles), 0)
        self.assertEqual(tiles.status, "empty")

    def test_invalid_side(self):
        with self.assertRaises(ValueError):
            tile(Grid.continuous(np.zeros((4, 4))), 0)

    def test_nodata_fraction_and_stitch(self):
        """
        Tiles report their nodata fraction and stitch back into the parent.
        """

        rng = np.random.default_rng(1)
        mask = np.zeros((8, 8), dtype=bool)
        mask[:4, :2] = True
        grid = Grid.continuous(rng.uniform(0, 100, (8, 8)), nodata_mask=mask)
        tiles = tile(grid, 4)
        self.assertEqual(tiles.nodata_fractions, (0.5, 0.0, 0.0, 0.0))
        stitched = tiles.stitch([t for _, t in tiles.iter_tiles(grid)], grid)
        self.assertTrue(stitched.equals(grid))

    def test_tile_index(self):
        """
        The tile index CSV lists one row per tile.
        """

        tiles = tile(Grid.continuous(np.zeros((6, 4))), 2, parent_id="aoi")
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "tiles.csv")
            write_tile_index(tiles, path)
            with open(path, encoding="utf-8") as f:
                lines = f.read().splitlines()
        self.assertEqual(lines[0], "# parent=aoi shape=6x4 side=2 status=ok")
        self.assertEqual(lines[1], "tile_id,row,col,nodata_fraction")
        self.assertEqual(len(lines), 2 + 6)
        self.assertEqual(lines[-1], f"{tile_id(5)},4,2,0.000000")


class TestAggregate(unittest.TestCase):
    """
    Test cases for aggregate.
    """

    def test_identity(self):
        """
        cell=1 leaves the grid unchanged.
        """

        grid = Grid.continuous(np.random.default_rng(0).uniform(0, 100, (5, 7)))
        self.assertTrue(aggregate(grid, 1).equals(grid))

    def test_mean(self):
        """
        [0, 100, 50, 50] with cell 2 averages to 50 and the pixel size doubles.
        """

        out = aggregate(Grid.continuous([[0.0, 100.0], [50.0, 50.0]]), 2)
        np.testing.assert_array_equal(out.values, [[50.0]])
        self.assertEqual(out.pixel_size, 60.0)

    def test_block_oracle(self):
        """
        Random 8x8 with cell 4 equals the brute-force block means.
        """

        values = np.random.default_rng(3).uniform(0, 100, (8, 8))
        out = aggregate(Grid.continuous(values), 4)
        for r in range(2):
            for c in range(2):
                expected = np.mean(values[4 * r:4 * r + 4, 4 * c:4 * c + 4])
                self.assertAlmostEqual(out.values[r, c], expected, places=12)

    def test_mean_preserving(self):
        values = np.random.default_rng(4).uniform(0, 100, (32, 32))
        grid = Grid.continuous(values)
        for cell in (2, 4, 8, 16, 32):
            self.assertAlmostEqual(aggregate(grid, cell).values.mean() / values.mean(), 1.0, places=9)

    def test_nodata(self):
        """
        nodata pixels are ignored and all-nodata blocks stay nodata.
        """

        mask = np.array([[True, False, True, True], [True, False, True, True]])
        grid = Grid.continuous([[0.0, 40.0, 0.0, 0.0], [0.0, 20.0, 0.0, 0.0]], nodata_mask=mask)
        out = aggregate(grid, 2)
        self.assertAlmostEqual(out.values[0, 0], 30.0)
        self.assertTrue(out.mask[0, 1])

    def test_commutes_with_tiling(self):
        """
        Aggregating a tile equals the matching block of the aggregated parent.
        """

        grid = Grid.continuous(np.random.default_rng(5).uniform(0, 100, (16, 16)))
        tiles = tile(grid, 8)
        parent = aggregate(grid, 4)
        for index, sub in tiles.iter_tiles(grid):
            row, col = tiles.origins[index]
            np.testing.assert_allclose(aggregate(sub, 4).values, parent.values[row // 4:row // 4 + 2, col // 4:col // 4 + 2])

    def test_errors(self):
        with self.assertRaises(GridKindError):
            aggregate(Grid.categorical(np.zeros((4, 4), dtype=np.uint8)), 2)
        with self.assertRaises(GridDimensionError):
            aggregate(Grid.continuous(np.zeros((6, 6))), 4)


class TestChangeMap(unittest.TestCase):
    """
    Test cases for change_map.
    """

    def test_identical(self):
        grid = Grid.continuous(np.random.default_rng(6).uniform(0, 100, (4, 4)))
        np.testing.assert_array_equal(change_map(grid, grid).values, np.zeros((4, 4)))

    def test_difference(self):
        """
        before=10, after=35 gives 25.
        """

        out = change_map(Grid.continuous([[10.0]]), Grid.continuous([[35.0]]))
        np.testing.assert_array_equal(out.values, [[25.0]])

    def test_nodata_propagates(self):
        before = Grid.continuous([[10.0, 20.0]], nodata_mask=[[True, False]])
        after = Grid.continuous([[30.0, 20.0]])
        out = change_map(before, after)
        self.assertTrue(out.mask[0, 0])
        self.assertEqual(out.values[0, 1], 0.0)

    def test_shape_mismatch(self):
        with self.assertRaises(ShapeMismatchError):
            change_map(Grid.continuous(np.zeros((2, 2))), Grid.continuous(np.zeros((2, 3))))

    def test_synthetic_series_never_decreases(self):
        """
        The synthetic series has no imperviousness decreases.
        """

        series = generate_series((48, 48), seed=2)
        for before, after in zip(series.years, series.years[1:]):
            diff = change_map(series.imperviousness[before], series.imperviousness[after])
            self.assertGreaterEqual(diff.values.min(), 0.0)


class TestLegend(unittest.TestCase):
    """
    Test cases for LulcLegend and the CA class mapping.
    """

    def test_nlcd16(self):
        """
        Only the four developed classes carry a weight.
        """

        legend = LulcLegend.nlcd16()
        self.assertEqual(legend.class_count, 16)
        np.testing.assert_allclose(legend.weight_vector[2:6], [0.20, 0.49, 0.79, 1.00])
        self.assertEqual(int((~legend.pervious_flags).sum()), 4)

    def test_from_codes(self):
        """
        NLCD codes become class indices and unknown codes become nodata.
        """

        grid = LulcLegend.nlcd16().from_codes([[11, 24], [95, 99]])
        np.testing.assert_array_equal(grid.values[grid.valid], [0, 5, 15])
        self.assertTrue(grid.mask[1, 1])

    def test_to_ca_classes(self):
        grid = Grid.categorical([[0, 2, 5, 6], [8, 10, 13, 15]], class_count=16)
        np.testing.assert_array_equal(to_ca_classes(grid).values, [[0, 1, 1, 2], [3, 4, 6, 7]])

    def test_bad_weight(self):
        with self.assertRaises(ValueError):
            LulcLegend(("a", "b"), (None, 1.5))


class TestSynthetic(unittest.TestCase):
    """
    Test cases for the synthetic generators.
    """

    def test_deterministic(self):
        a = generate_series((32, 32), seed=9)
        b = generate_series((32, 32), seed=9)
        for year in a.years:
            self.assertTrue(a.imperviousness[year].equals(b.imperviousness[year]))
            self.assertTrue(a.land_cover[year].equals(b.land_cover[year]))

    def test_toy_task(self):
        """
        truth = clamp(past + 5 * likelihood).
        """

        for sample in make_toy_task(3, side=16, seed=1):
            np.testing.assert_allclose(sample.truth, np.clip(sample.past + 5.0 * sample.likelihood[-1], 0, 100))
            self.assertEqual(sample.history.shape, (3, 16, 16))


class TestGeotiff(unittest.TestCase):
    def test_not_implemented(self):
        with self.assertRaises(NotImplementedError):
            convert_geotiff("in.tif", "out.igrd")


if __name__ == "__main__":
    unittest.main()
