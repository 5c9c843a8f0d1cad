# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

import os.path
import tempfile
import unittest
from unittest import mock

import numpy as np
from numpy.testing import assert_array_equal

from rankdescent.dataset import (HEADER, Dataset, DatasetFormatError, load,
        read_binary, save)


class TestDataset(unittest.TestCase):

    """Unittest for the Dataset class."""

    def test_vectors(self):
        """Test a dataset of vectors."""
        dataset = Dataset(np.arange(12.0).reshape(4, 3))
        self.assertEqual(dataset.n, 4)
        self.assertEqual(dataset.dimension, 3)
        self.assertEqual(list(dataset.ids), [0, 1, 2, 3])
        assert_array_equal(dataset[2], [6.0, 7.0, 8.0])

    def test_generic_items(self):
        """Test a dataset of arbitrary items, duplicates included."""
        dataset = Dataset(["spam", "eggs", "spam"])
        self.assertEqual(dataset.n, 3)
        self.assertIsNone(dataset.array)
        with self.assertRaises(ValueError):
            dataset.dimension

    def test_too_small(self):
        """Test that a dataset needs two items."""
        with self.assertRaises(ValueError):
            Dataset(["alone"])
        with self.assertRaises(ValueError):
            Dataset(np.zeros(5))


class TestDatasetFiles(unittest.TestCase):

    """Unittest for the dataset file formats.

    Round trips use a temporary directory.  Access errors are
    simulated by mocking the 'open' function.

    """

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.points = np.random.default_rng(0).dirichlet(np.ones(4), 25)

    def tearDown(self):
        self.directory.cleanup()

    def path(self, name):
        return os.path.join(self.directory.name, name)

    def test_csv(self):
        """Test that CSV files keep every digit."""
        filename = self.path("points.csv")
        save(Dataset(self.points), filename)
        with open(filename, "r") as file:
            self.assertEqual(len(file.read().splitlines()), 25)

        assert_array_equal(load(filename).array, self.points)

    def test_binary(self):
        """Test the binary format and its header."""
        filename = self.path("points.bin")
        save(Dataset(self.points), filename)
        with open(filename, "rb") as file:
            content = file.read()

        header = np.frombuffer(content, dtype=HEADER, count=1)[0]
        self.assertEqual((int(header["d"]), int(header["n"])), (4, 25))
        self.assertEqual(len(content), 8 + 25 * 4 * 8)
        assert_array_equal(load(filename).array, self.points)

    def test_truncated_binary(self):
        """Test that a binary file shorter than announced is rejected."""
        filename = self.path("points.bin")
        save(Dataset(self.points), filename)
        with open(filename, "rb") as file:
            content = file.read()
        with open(filename, "wb") as file:
            file.write(content[:-8])

        with self.assertRaises(DatasetFormatError):
            load(filename)

    def test_unknown_extension(self):
        """Test that unknown extensions are rejected."""
        with self.assertRaises(DatasetFormatError):
            save(Dataset(self.points), self.path("points.txt"))
        with self.assertRaises(DatasetFormatError):
            load(self.path("points.txt"))

    @mock.patch("builtins.open", side_effect=IOError("access denied"))
    def test_unreadable(self, mock_open):
        """Test that access errors become format errors."""
        with self.assertRaises(DatasetFormatError):
            read_binary("points.bin")
