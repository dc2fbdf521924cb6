# coding: spec

from hypothesis import given

from rainbowpath.errors import InputError, SearchBudgetExceeded
from rainbowpath.errors_pytest import assertRaises
from rainbowpath.graph import EdgeColoredGraph
from rainbowpath.paths import check_path, enumerate_rainbow_paths, find_rainbow_path_exact
from rainbowpath.paths.exact import shortest_rainbow_length
from tests.helpers import graphs_with_pair, shortest_rainbow

describe "find_rainbow_path_exact":
    it "uses the direct edge when there is one", triangle:
        cert = find_rainbow_path_exact(triangle, 0, 2)
        assert cert.vertices == (0, 2)
        assert cert.colors == (2,)
        assert cert.flavor == "rainbow"
        assert cert.format() == "0 -2-> 2"

    it "goes around a monochromatic stretch", mono_path:
        cert = find_rainbow_path_exact(mono_path, 0, 2)
        assert cert.vertices == (0, 4, 3, 2)
        assert cert.colors == (1, 2, 5)
        assert cert.length == 3
        assert cert.internal_vertices == (4, 3)

    it "respects max_len", mono_path:
        assert find_rainbow_path_exact(mono_path, 0, 2, max_len=2) is None
        assert find_rainbow_path_exact(mono_path, 0, 2, max_len=3) is not None

    it "respects forbidden colors and vertices", mono_path:
        assert find_rainbow_path_exact(mono_path, 0, 2, forbidden_colors=[1]) is None
        assert find_rainbow_path_exact(mono_path, 0, 2, forbidden_vertices=[4]) is None
        assert find_rainbow_path_exact(mono_path, 0, 3, forbidden_colors=[5]).vertices == (0, 4, 3)

    it "picks the lexicographically least shortest path":
        graph = EdgeColoredGraph(4, [(0, 2, 2), (2, 3, 3), (0, 1, 0), (1, 3, 1)])
        assert find_rainbow_path_exact(graph, 0, 3).vertices == (0, 1, 3)
        assert find_rainbow_path_exact(graph, 3, 0).vertices == (3, 1, 0)

    it "says None when the endpoints aren't connected":
        graph = EdgeColoredGraph(4, [(0, 1, 0), (2, 3, 0)])
        assert find_rainbow_path_exact(graph, 0, 3) is None

    it "complains about bad arguments", mono_path:
        with assertRaises(InputError, "Paths join two distinct vertices", vertex=1):
            find_rainbow_path_exact(mono_path, 1, 1)
        with assertRaises(InputError, "Endpoints can't be forbidden", u=0, v=2):
            find_rainbow_path_exact(mono_path, 0, 2, forbidden_vertices=[2])
        with assertRaises(InputError, "max_len must be a positive integer", got=0):
            find_rainbow_path_exact(mono_path, 0, 2, max_len=0)
        with assertRaises(InputError, "Vertex out of range", vertex=7):
            find_rainbow_path_exact(mono_path, 0, 7)

    it "gives up past the node cap", mono_path:
        with assertRaises(SearchBudgetExceeded, cap=1, target=2):
            find_rainbow_path_exact(mono_path, 0, 2, node_cap=1)
        assert find_rainbow_path_exact(mono_path, 0, 2, node_cap=1000).length == 3

    @given(graphs_with_pair(max_n=7, max_colors=4))
    it "agrees with trying every simple path", case:
        graph, u, v = case
        cert = find_rainbow_path_exact(graph, u, v, max_len=None)
        expected = shortest_rainbow(graph, u, v)
        if expected is None:
            assert cert is None
        else:
            assert cert.length == expected
            check_path(graph, cert)
            assert (cert.start, cert.end) == (u, v)

describe "enumerate_rainbow_paths":
    it "yields every rainbow path in order", triangle:
        found = [cert.vertices for cert in enumerate_rainbow_paths(triangle, 0, 2)]
        assert found == [(0, 1, 2), (0, 2)]

    it "skips paths that repeat a color", mono_path:
        found = [cert.vertices for cert in enumerate_rainbow_paths(mono_path, 0, 3)]
        assert found == [(0, 4, 3)]

    it "honours max_len", triangle:
        found = [cert.vertices for cert in enumerate_rainbow_paths(triangle, 0, 2, max_len=1)]
        assert found == [(0, 2)]

describe "shortest_rainbow_length":
    it "is the length of the found path or None", mono_path:
        assert shortest_rainbow_length(mono_path, 1, 3) == 3
        assert shortest_rainbow_length(mono_path, 1, 3, max_len=2) is None
