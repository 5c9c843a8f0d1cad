# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing the ExperimentSpec and ExperimentReport classes.

An experiment generates simplex points, runs the K-NN descent on them
and measures the recall against the exact K-NN graph.  A report can
be written as CSV, JSON or YAML.  Field names are stable:

Round fields: round, duration, fcc, comparison_count,
changed_friend_sets.

Summary fields: n, d, k, seed, ranking, workers, rounds_used,
round_budget, max_rounds, terminated, first_round_duration,
last_round_duration, final_fcc, recall, recall_mode, total_duration.

A specification can be read from a YAML document describing a
dictionary, for instance:
    n: 20000
    d: 10
    k: 16
    ranking: kl
    recall: sample6

"""

import csv
from dataclasses import asdict, dataclass, field, fields, replace
import io
import json
import logging
import time

import yaml

from rankdescent.descent import (ConfigurationError, DescentConfig,
        resolve_workers, round_budget, run, substream)
from rankdescent.evaluation import exact_knn, recall, recall_sample
from rankdescent.providers import RANKINGS, simplex_dataset

logger = logging.getLogger(__name__)

ORACLE_LIMIT = 100000
RECALL_MODES = ("sample6", "full", "off")
FORMATS = ("csv", "json", "yaml")

# Random substreams of the experiment seed
DATA_STREAM = 2
RECALL_STREAM = 3

ROUND_FIELDS = ("round", "duration", "fcc", "comparison_count",
        "changed_friend_sets")
SUMMARY_FIELDS = ("n", "d", "k", "seed", "ranking", "workers",
        "rounds_used", "round_budget", "max_rounds", "terminated",
        "first_round_duration", "last_round_duration", "final_fcc",
        "recall", "recall_mode", "total_duration")


@dataclass(frozen=True)
class ExperimentSpec:

    """The parameters of an experiment.

    'd' is the number of coordinates of the simplex points.  'ranking'
    is "kl" or "euclidean", 'recall' one of "sample6", "full" or "off".
    'max_rounds' defaults to the round budget plus 4.

    """

    n: int
    d: int
    k: int
    seed: int = 0
    fcc_samples: int = 1000
    max_rounds: int = None
    workers: object = 1
    ranking: str = "kl"
    recall: str = "sample6"
    format: str = "json"
    concentration: float = 1.0
    force_oracle: bool = False
    memoize: bool = False
    recall_sample: int = 6

    def __post_init__(self):
        if self.k < 2:
            raise ConfigurationError("K must be at least 2, not " \
                    "{}".format(self.k))
        if self.n <= self.k:
            raise ConfigurationError("n={} must be greater than " \
                    "K={}".format(self.n, self.k))
        if self.d < 2:
            raise ConfigurationError("d must be at least 2, not " \
                    "{}".format(self.d))
        if self.ranking not in RANKINGS:
            raise ConfigurationError("unknown ranking {}, expected one " \
                    "of {}".format(repr(self.ranking), sorted(RANKINGS)))
        if self.recall not in RECALL_MODES:
            raise ConfigurationError("unknown recall mode {}, expected " \
                    "one of {}".format(repr(self.recall), RECALL_MODES))
        if self.format not in FORMATS:
            raise ConfigurationError("unknown format {}, expected one " \
                    "of {}".format(repr(self.format), FORMATS))
        if self.recall_sample < 1:
            raise ConfigurationError("the recall sample must hold at " \
                    "least one point")

        self.descent_config()

    @classmethod
    def from_dict(cls, dictionary):
        """Build a specification from a dictionary of options."""
        known = set(f.name for f in fields(cls))
        unknown = sorted(str(key) for key in dictionary
                if key not in known)
        if unknown:
            raise ConfigurationError("unknown experiment options: " \
                    "{}".format(", ".join(unknown)))

        try:
            return cls(**dictionary)
        except TypeError as err:
            raise ConfigurationError(str(err))

    @classmethod
    def read_YAML(cls, content, **overrides):
        """Read a specification from YAML content.

        The content must describe a dictionary.  Keyword arguments
        override the values of the document.

        """
        try:
            data = yaml.safe_load(content)
        except yaml.YAMLError as err:
            raise ConfigurationError("an error occurred while parsing " \
                    "the YAML content:\n{}".format(str(err)))

        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ConfigurationError("the YAML content doesn't describe " \
                    "a dictionary")

        data.update(overrides)
        return cls.from_dict(data)

    def descent_config(self):
        """Return the DescentConfig of this experiment."""
        return DescentConfig(k=self.k, fcc_samples=self.fcc_samples,
                max_rounds=self.max_rounds, seed=self.seed,
                workers=self.workers)


@dataclass
class ExperimentReport:

    """The outcome of an experiment.

    The 'friends' attribute holds the final friend map; it isn't
    part of the emitted report.

    """

    spec: ExperimentSpec
    rounds: list
    round_budget: int
    max_rounds: int
    terminated: bool
    recall: float = None
    total_duration: float = 0.0
    friends: dict = field(default=None, repr=False)

    @property
    def rounds_used(self):
        return len(self.rounds)

    @property
    def final_fcc(self):
        return self.rounds[-1].fcc if self.rounds else None

    def summary(self):
        """Return the summary as a dictionary."""
        spec = self.spec
        return {
            "n": spec.n,
            "d": spec.d,
            "k": spec.k,
            "seed": spec.seed,
            "ranking": spec.ranking,
            "workers": resolve_workers(spec.workers),
            "rounds_used": self.rounds_used,
            "round_budget": self.round_budget,
            "max_rounds": self.max_rounds,
            "terminated": self.terminated,
            "first_round_duration": self.rounds[0].duration,
            "last_round_duration": self.rounds[-1].duration,
            "final_fcc": self.final_fcc,
            "recall": self.recall,
            "recall_mode": spec.recall,
            "total_duration": self.total_duration,
        }

    def to_dict(self):
        return {
            "spec": asdict(self.spec),
            "rounds": [stats.to_dict() for stats in self.rounds],
            "summary": self.summary(),
        }


def generate_dataset(spec):
    """Return the simplex points of an experiment.

    The data depends on the seed and on the dimension, so that every
    dimension of a sweep gets fresh points.

    """
    rng = substream(spec.seed, DATA_STREAM, spec.d)
    return simplex_dataset(spec.d, spec.n, rng, spec.concentration)


def check_oracle(spec):
    """Raise ConfigurationError if the oracle would exceed its limit."""
    if spec.recall != "off" and spec.n > ORACLE_LIMIT and \
            not spec.force_oracle:
        raise ConfigurationError("the exact oracle is limited to {} " \
                "points ({} requested), force it to go beyond".format(
                ORACLE_LIMIT, spec.n))


def measure_recall(spec, dataset, ranking, friends):
    """Return the recall of 'friends' in the requested mode, or None."""
    if spec.recall == "off":
        logger.info("Recall not measured, the oracle is off")
        return None

    if spec.recall == "full":
        anchors = None
    else:
        anchors = recall_sample(dataset.n,
                substream(spec.seed, RECALL_STREAM), spec.recall_sample)

    exact = exact_knn(dataset, ranking, spec.k, anchors=anchors,
            workers=spec.workers)
    return recall(friends, exact, anchors)


def run_experiment(spec, dataset=None):
    """Run an experiment and return its report.

    If 'dataset' is None, points are generated from the spec.
    Timings cover the descent only, neither the data generation nor
    the oracle.

    """
    check_oracle(spec)
    if dataset is None:
        dataset = generate_dataset(spec)
    elif dataset.n != spec.n or dataset.dimension != spec.d:
        raise ConfigurationError("the dataset holds {} points of " \
                "dimension {}, the experiment expects {} of dimension " \
                "{}".format(dataset.n, dataset.dimension, spec.n, spec.d))

    logger.info("Experiment n=%d, d=%d, K=%d, ranking=%s, seed=%d",
            spec.n, spec.d, spec.k, spec.ranking, spec.seed)
    ranking = RANKINGS[spec.ranking](dataset, memoize=spec.memoize)
    config = spec.descent_config()
    start = time.perf_counter()
    result = run(dataset, ranking, config)
    total = time.perf_counter() - start
    value = measure_recall(spec, dataset, ranking, result.friends)
    if value is not None:
        logger.info("Recall %.4f (%s)", value, spec.recall)

    return ExperimentReport(spec, result.rounds,
            round_budget(spec.n, spec.k), config.rounds_for(spec.n),
            result.terminated, value, total, result.friends)


def dimension_sweep(base, dims):
    """Run the base experiment once per dimension in 'dims'.

    Points are generated afresh for every dimension while the descent
    seed stays the same.

    """
    return [run_experiment(replace(base, d=d)) for d in dims]


def sweep_rows(reports):
    """Return the combined table of a sweep, one dictionary per dimension."""
    return [{
        "d": report.spec.d,
        "rounds_used": report.rounds_used,
        "round_budget": report.round_budget,
        "final_fcc": report.final_fcc,
        "recall": report.recall,
    } for report in reports]


def _write_csv(header, rows):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=header, lineterminator="\n",
            extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _cell(value) for key, value in row.items()})

    return buffer.getvalue()


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)

    return value


def emit_report(report, format):
    """Return the report as text in the given format.

    CSV: a header row, one row per round (record "round") and a final
    summary row (record "summary").  JSON and YAML: a single object
    with the "spec", "rounds" and "summary" keys.

    """
    if format == "csv":
        header = ("record", ) + ROUND_FIELDS + tuple(f for f in
                SUMMARY_FIELDS if f not in ROUND_FIELDS)
        rows = [dict(stats.to_dict(), record="round")
                for stats in report.rounds]
        rows.append(dict(report.summary(), record="summary"))
        return _write_csv(header, rows)
    elif format == "json":
        return json.dumps(report.to_dict(), indent=4) + "\n"
    elif format == "yaml":
        return yaml.safe_dump(report.to_dict(), indent=4, width=79,
                default_flow_style=False, sort_keys=False)

    raise ValueError("unknown report format {}".format(repr(format)))


def emit_sweep(reports, format):
    """Return the combined table of a sweep as text."""
    rows = sweep_rows(reports)
    if format == "csv":
        return _write_csv(("d", "rounds_used", "round_budget", "final_fcc",
                "recall"), rows)
    elif format == "json":
        return json.dumps(rows, indent=4) + "\n"
    elif format == "yaml":
        return yaml.safe_dump(rows, indent=4, width=79,
                default_flow_style=False, sort_keys=False)

    raise ValueError("unknown report format {}".format(repr(format)))
