# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing the Dataset class and its file formats.

Two file formats are supported for datasets of real vectors:

CSV (extension '.csv'): one point per row, one column per
coordinate, numbers written with 17 significant digits so that
reading the file back loses no precision.

Binary (extension '.bin'): an 8-byte header made of two little-endian
unsigned 32-bit integers, the dimension 'd' then the count 'n',
followed by the n * d coordinates as little-endian float64, row
after row.

"""

import logging
import os.path

import numpy as np

logger = logging.getLogger(__name__)

HEADER = np.dtype([("d", "<u4"), ("n", "<u4")])


class DatasetFormatError(ValueError):

    """A dataset file couldn't be read."""


class Dataset(object):

    """An indexed collection of items.

    Item ids are the integers 0 to n - 1, in the order of 'items'.
    Items can be of any type: the ranking system is the only one
    to look at them.  When the items are real vectors of the same
    dimension, they are also available as a 2-dimensional numpy
    array, the 'array' attribute (None otherwise).  Duplicate items
    are allowed; they are told apart by their ids.

    """

    def __init__(self, items):
        if isinstance(items, np.ndarray):
            if items.ndim != 2:
                raise ValueError("a dataset array must have two " \
                        "dimensions, not {}".format(items.ndim))
            self.array = np.ascontiguousarray(items, dtype=np.float64)
            self.items = list(self.array)
        else:
            self.items = list(items)
            self.array = None

        if len(self.items) < 2:
            raise ValueError("a dataset needs at least two items, " \
                    "not {}".format(len(self.items)))

    def __repr__(self):
        return "<rankdescent.Dataset (n={})>".format(self.n)

    def __len__(self):
        return len(self.items)

    def __getitem__(self, index):
        return self.items[index]

    @property
    def n(self):
        return len(self.items)

    @property
    def ids(self):
        return range(len(self.items))

    @property
    def dimension(self):
        """Return the number of coordinates of vector items."""
        if self.array is None:
            raise ValueError("the items of this dataset aren't vectors")

        return self.array.shape[1]

    def require_array(self):
        """Return the array of vectors, raise ValueError if there's none."""
        if self.array is None:
            raise ValueError("this dataset doesn't hold vectors of the " \
                    "same dimension")

        return self.array


def read_csv(filename):
    """Read a dataset from a CSV file."""
    try:
        array = np.loadtxt(filename, delimiter=",", dtype=np.float64,
                ndmin=2)
    except (IOError, ValueError) as err:
        raise DatasetFormatError("cannot load the {} file: {}".format(
                repr(filename), err))

    return Dataset(array)


def write_csv(dataset, filename):
    """Write a dataset of vectors to a CSV file."""
    np.savetxt(filename, dataset.require_array(), delimiter=",",
            fmt="%.17g")


def read_binary(filename):
    """Read a dataset from a binary file."""
    try:
        with open(filename, "rb") as file:
            content = file.read()
    except IOError as err:
        raise DatasetFormatError("cannot load the {} file: {}".format(
                repr(filename), err))

    if len(content) < HEADER.itemsize:
        raise DatasetFormatError("the {} file is too short to hold a " \
                "header".format(repr(filename)))

    header = np.frombuffer(content, dtype=HEADER, count=1)[0]
    d, n = int(header["d"]), int(header["n"])
    body = content[HEADER.itemsize:]
    if len(body) != n * d * 8:
        raise DatasetFormatError("the {} file announces {} points of " \
                "dimension {}, but holds {} bytes of data".format(
                repr(filename), n, d, len(body)))

    array = np.frombuffer(body, dtype="<f8").reshape(n, d)
    return Dataset(array.astype(np.float64))


def write_binary(dataset, filename):
    """Write a dataset of vectors to a binary file."""
    array = dataset.require_array()
    n, d = array.shape
    header = np.array([(d, n)], dtype=HEADER)
    with open(filename, "wb") as file:
        file.write(header.tobytes())
        file.write(array.astype("<f8").tobytes())


def load(filename):
    """Load a dataset, the format being chosen by the file extension."""
    extension = os.path.splitext(filename)[1].lower()
    if extension == ".csv":
        dataset = read_csv(filename)
    elif extension == ".bin":
        dataset = read_binary(filename)
    else:
        raise DatasetFormatError("unknown dataset format: {}".format(
                repr(filename)))

    logger.info("Loaded %d points of dimension %d from %s", dataset.n,
            dataset.dimension, filename)
    return dataset


def save(dataset, filename):
    """Save a dataset, the format being chosen by the file extension."""
    extension = os.path.splitext(filename)[1].lower()
    if extension == ".csv":
        write_csv(dataset, filename)
    elif extension == ".bin":
        write_binary(dataset, filename)
    else:
        raise DatasetFormatError("unknown dataset format: {}".format(
                repr(filename)))

    logger.info("Saved %d points to %s", dataset.n, filename)
