# coding: spec

import math

import pytest
from hypothesis import given

from rainbowpath.errors import GenerationError, InputError
from rainbowpath.errors_pytest import assertRaises
from rainbowpath.generators import gen_fm_example, gen_random_colored
from rainbowpath.graph import EdgeColoredGraph
from rainbowpath.paths import (
    check_path,
    find_proper_path,
    is_properly_connected,
    proper_connectivity_report,
)
from rainbowpath.paths.proper import NO_COLOR, proper_walk_distance
from rainbowpath.reduction import reduce_minimal
from tests.helpers import graphs_with_pair, is_proper, simple_paths


def shortest_proper(graph, u, v):
    lengths = [len(p) - 1 for p in simple_paths(graph, u, v) if is_proper(graph, p)]
    return min(lengths) if lengths else None


describe "proper_walk_distance":
    it "counts edges of the shortest properly colored walk", mono_path:
        assert proper_walk_distance(mono_path, 0, NO_COLOR, 2, {0}) == 3
        assert proper_walk_distance(mono_path, 0, NO_COLOR, 1, {0}) == 1

    it "can't arrive in the color it left with", mono_path:
        assert proper_walk_distance(mono_path, 1, 5, 2, {1}) is None

describe "find_proper_path":
    it "allows a color again once it isn't consecutive":
        graph = EdgeColoredGraph(4, [(0, 1, 0), (1, 2, 1), (2, 3, 0)])
        cert = find_proper_path(graph, 0, 3)
        assert cert.vertices == (0, 1, 2, 3)
        assert cert.colors == (0, 1, 0)
        assert cert.flavor == "proper"
        check_path(graph, cert)

    it "goes around consecutive repeats", mono_path:
        assert find_proper_path(mono_path, 0, 2).vertices == (0, 4, 3, 2)
        assert find_proper_path(mono_path, 0, 2, max_len=2) is None
        assert find_proper_path(mono_path, 0, 2, forbidden_vertices=[4]) is None

    @pytest.mark.parametrize("n", [5, 7, 9, 11])
    it "finds no path between the two outer vertices of the odd example", n:
        assert find_proper_path(gen_fm_example(n), n - 2, n - 1) is None

    it "complains about bad arguments", triangle:
        with assertRaises(InputError, "Paths join two distinct vertices"):
            find_proper_path(triangle, 2, 2)
        with assertRaises(InputError, "max_len must be a positive integer"):
            find_proper_path(triangle, 0, 2, max_len=-3)

    @given(graphs_with_pair(max_n=7, max_colors=3))
    it "agrees with trying every simple path", case:
        graph, u, v = case
        cert = find_proper_path(graph, u, v)
        expected = shortest_proper(graph, u, v)
        if expected is None:
            assert cert is None
        else:
            assert cert.length == expected
            check_path(graph, cert)

describe "proper connectivity":
    it "is connected when every pair has a path", triangle, mono_path:
        report = proper_connectivity_report(triangle)
        assert report.connected
        assert report.failing_pair is None
        assert report.checked == 3
        assert is_properly_connected(mono_path)

    it "names the first failing pair":
        graph = EdgeColoredGraph(4, [(0, 1, 0), (1, 2, 0), (2, 3, 1)])
        report = proper_connectivity_report(graph)
        assert not report.connected
        assert report.failing_pair == (0, 2)
        assert report.checked == 2

    @pytest.mark.parametrize("n", [5, 7, 9, 11])
    it "fails on the odd example at the outer pair", n:
        report = proper_connectivity_report(gen_fm_example(n))
        assert not report.connected
        assert report.failing_pair == (n - 2, n - 1)

    it "holds on reduced random instances with color degree at least half":
        checked = 0
        for seed in range(200):
            n = 3 + seed % 9
            threshold = math.ceil(n / 2)
            try:
                graph = gen_random_colored(n, threshold, 2 * n, seed)
            except GenerationError:
                continue
            reduced, _ = reduce_minimal(graph, threshold)
            assert reduced.min_color_degree() >= threshold
            report = proper_connectivity_report(reduced)
            assert report.connected, (n, seed, report.failing_pair)
            checked += 1
        assert checked >= 150
