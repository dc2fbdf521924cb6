# coding: spec

import csv
import os
from fractions import Fraction

from rainbowpath import experiment
from rainbowpath.errors import GraphParseError, InputError, InvariantBreach
from rainbowpath.errors_pytest import assertRaises
from rainbowpath.generators import gen_fm_example
from rainbowpath.graph import EdgeColoredGraph, read_graph, write_graph
from rainbowpath.norms import BadSpecValue


def read_report(path):
    with open(path) as fle:
        lines = fle.read().splitlines()
    return lines[0], list(csv.DictReader(lines[1:]))


describe "ExperimentConfig":
    it "has defaults for everything but n_list":
        config = experiment.ExperimentConfig.FieldSpec().empty_normalise(n_list="10,20")
        assert config.n_list == [10, 20]
        assert config.family == "random_colored"
        assert config.samples == 1
        assert config.k_list == []
        assert config.max_len == 9
        assert config.engine == "exact"
        assert config.workers == 1
        assert config.delta_offset == 0

    it "complains about missing and bad values":
        with assertRaises(BadSpecValue):
            experiment.ExperimentConfig.FieldSpec().empty_normalise(samples=2)
        with assertRaises(BadSpecValue):
            experiment.ExperimentConfig.FieldSpec().empty_normalise(n_list=[10], samples=0)
        with assertRaises(BadSpecValue):
            experiment.ExperimentConfig.FieldSpec().empty_normalise(n_list=[10], engine="guess")

    it "derives the instance for each sample":
        config = experiment.ExperimentConfig.FieldSpec().empty_normalise(
            n_list=[10], seed=7, delta_offset="1/2"
        )
        spec = config.instance_spec(10, 3)
        assert spec.seed == experiment.sample_seed(7, 10, 3)
        assert spec.target == Fraction(11, 2)
        assert spec.palette_size == 20

describe "helpers":
    it "spreads seeds over n and sample":
        seeds = {experiment.sample_seed(0, n, s) for n in (10, 20) for s in range(3)}
        assert len(seeds) == 6
        assert experiment.sample_seed(1, 10, 0) != experiment.sample_seed(0, 10, 0)

    it "samples pairs repeatably":
        assert experiment.sample_pairs(3, 10, 0) == [(0, 1), (0, 2), (1, 2)]
        one = experiment.sample_pairs(20, 5, 4)
        assert one == experiment.sample_pairs(20, 5, 4)
        assert len(one) == 5
        assert one == sorted(one)

    it "formats csv values":
        assert experiment._csv_value(None) == ""
        assert experiment._csv_value(True) == "true"
        assert experiment._csv_value(0.5) == "0.500000"
        assert experiment._csv_value((3, 4)) == "3-4"
        assert experiment._csv_value({1: 5, 2: 3}) == "1:5;2:3"
        assert experiment._csv_value(["2:5/5", "3:1/5"]) == "2:5/5;3:1/5"
        assert experiment._csv_value(Fraction(11, 2)) == "11/2"

    it "reads key value pairs out of comments":
        text = "# family=fm_example n=7\n# threshold=3 mode=minimal\n7 0\n"
        assert experiment.comment_values(text) == {
            "family": "fm_example",
            "n": "7",
            "threshold": "3",
            "mode": "minimal",
        }

describe "diagnose":
    it "passes every check on the odd example":
        diagnosis = experiment.diagnose(gen_fm_example(7), 3)
        assert diagnosis.breaches == []
        names = [check.name for check in diagnosis.checks]
        assert names == [
            "threshold_kept",
            "star_forests",
            "edge_minimal",
            "arc_partition",
            "outdegree_split",
            "gstar_proper",
            "dprime_outdegree",
        ]

    it "adds the half degree checks when 2 delta is at least n", triangle:
        diagnosis = experiment.diagnose(triangle, 2)
        names = [check.name for check in diagnosis.checks]
        assert "outdegree_bound" in names
        assert "rainbow_connected" in names
        assert diagnosis.breaches == []
        assert diagnosis.connectivity.worst_len == 1

describe "run_experiment":
    it "writes a report, timings and instances", temp_dir:
        result = experiment.run_experiment(
            {
                "family": "fm_example",
                "n_list": [7, 5],
                "samples": 2,
                "k_list": [1],
                "output_dir": temp_dir,
            }
        )
        assert [(row.n, row.sample) for row in result.rows] == [(5, 0), (5, 1), (7, 0), (7, 1)]
        assert result.counterexamples == []

        header, rows = read_report(result.report_path)
        assert header == (
            "# rainbowpath experiment schema=1 family=fm_example seed=0 max_len=9 engine=exact"
        )
        assert list(rows[0]) == experiment.REPORT_COLUMNS
        assert [row["status"] for row in rows] == ["OK"] * 4
        assert [row["delta_c"] for row in rows] == ["2", "2", "3", "3"]
        assert rows[0]["proper_connected"] == "false"
        assert rows[0]["kconnect"].startswith("1:")

        for row in rows:
            graph = read_graph(os.path.join(temp_dir, row["instance"]))
            assert str(graph.min_color_degree()) == row["delta_c"]
            assert str(graph.m) == row["edges"]

        with open(result.timings_path) as fle:
            timings = list(csv.reader(fle))
        assert timings[0] == experiment.TIMING_COLUMNS
        assert len(timings) == 5

    it "is reproducible from the config", temp_dir:
        config = {"family": "random_colored", "n_list": [10], "samples": 2, "seed": 3}
        first = experiment.run_experiment(dict(config, output_dir=os.path.join(temp_dir, "one")))
        second = experiment.run_experiment(
            dict(config, output_dir=os.path.join(temp_dir, "two"), workers=2)
        )
        with open(first.report_path) as one, open(second.report_path) as two:
            assert one.read() == two.read()

    it "checks the two clique family against the half degree bound", temp_dir:
        result = experiment.run_experiment(
            {"family": "two_clique_matchings", "n_list": [8], "k": 2, "output_dir": temp_dir}
        )
        (row,) = result.rows
        assert row.status == "OK"
        assert row.fact_holds is True
        assert row.delta_c == 4

    it "records generation failures as rows", temp_dir:
        result = experiment.run_experiment(
            {
                "family": "random_colored",
                "n_list": [6],
                "palette": 2,
                "output_dir": temp_dir,
            }
        )
        (row,) = result.rows
        assert row.status == "GENERATION_FAILED"
        assert "Palette is too small" in row.error

    it "keeps sweeping past sizes a family can't be built at", temp_dir:
        result = experiment.run_experiment(
            {"family": "fm_example", "n_list": [5, 6, 7], "k_list": [], "output_dir": temp_dir}
        )
        assert [row.n for row in result.rows] == [5, 6, 7]
        assert [row.status for row in result.rows] == ["OK", "GENERATION_FAILED", "OK"]
        assert "odd number of vertices" in result.rows[1].error

        _, rows = read_report(result.report_path)
        assert [row["status"] for row in rows] == ["OK", "GENERATION_FAILED", "OK"]

describe "validate_instance":
    it "takes the threshold from the comments", temp_dir:
        location = os.path.join(temp_dir, "fm.txt")
        write_graph(gen_fm_example(5), location, comments=["family=fm_example n=5", "threshold=2"])
        report = experiment.validate_instance(location)
        assert report.ok
        assert report.threshold == 2
        assert report.delta_c == 2
        assert "OK threshold_kept delta_c=2" in report.lines()
        assert experiment.assert_valid(location).ok

    it "raises when a check doesn't hold", temp_dir:
        location = os.path.join(temp_dir, "cycle.txt")
        write_graph(EdgeColoredGraph(4, [(0, 1, 0), (1, 2, 1), (2, 3, 0), (0, 3, 1)]), location)
        report = experiment.validate_instance(location, max_len=1)
        assert report.breaches == ["rainbow_connected"]
        assert "BREACH rainbow_connected worst_pair=(0, 2)" in report.lines()
        with assertRaises(InvariantBreach, breaches=["rainbow_connected"]):
            experiment.assert_valid(location, max_len=1)

    it "names the line of a duplicate edge", temp_dir:
        location = os.path.join(temp_dir, "bad.txt")
        with open(location, "w") as fle:
            fle.write("3 2\n0 1 0\n1 0 1\n")
        with assertRaises(GraphParseError, "Duplicate edge", line=3):
            experiment.validate_instance(location)

    it "complains about missing files", temp_dir:
        with assertRaises(InputError, "Couldn't read graph file"):
            experiment.validate_instance(os.path.join(temp_dir, "nope.txt"))
