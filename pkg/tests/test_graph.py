# coding: spec

import io

from hypothesis import given

from rainbowpath.errors import GraphError, GraphParseError, InputError, MultiEdge, SelfLoop
from rainbowpath.errors_pytest import assertRaises
from rainbowpath.generators import gen_fm_example, gen_two_clique_matchings
from rainbowpath.graph import (
    ColorClassView,
    EdgeColoredGraph,
    color_class,
    color_degree,
    dumps_graph,
    is_star_forest,
    min_color_degree,
    parse_graph,
    read_graph,
    write_graph,
)
from tests.helpers import colored_graphs

describe "EdgeColoredGraph":
    it "normalises and sorts edges":
        graph = EdgeColoredGraph(4, [(3, 0, 9), (1, 0, 7), (0, 2, 7)])
        assert graph.edges == ((0, 1, 7), (0, 2, 7), (0, 3, 9))
        assert graph.colors == (7, 9)
        assert graph.m == 3
        assert list(graph.vertices) == [0, 1, 2, 3]

    it "knows colors of edges and neighbours":
        graph = EdgeColoredGraph(4, [(0, 1, 7), (0, 2, 7), (0, 3, 9)])
        assert graph.color(0, 1) == 7
        assert graph.color(1, 0) == 7
        assert graph.color(1, 2) is None
        assert graph.has_edge(3, 0)
        assert not graph.has_edge(2, 3)
        assert graph.neighbours(0) == ((1, 7), (2, 7), (3, 9))
        assert graph.color_neighbours(0) == {7: [1, 2], 9: [3]}
        assert graph.incident_colors(0) == frozenset([7, 9])
        assert graph.degree(0) == 3

    it "refuses self loops":
        with assertRaises(SelfLoop, vertex=2):
            EdgeColoredGraph(3, [(2, 2, 0)])

    it "refuses a second edge on the same pair":
        with assertRaises(MultiEdge, pair=(0, 1)):
            EdgeColoredGraph(3, [(0, 1, 0), (1, 0, 4)])

    it "refuses vertices out of range":
        with assertRaises(InputError, "Vertex out of range", vertex=5, n=3):
            EdgeColoredGraph(3, [(0, 5, 0)])

    it "refuses negative colors and non integers":
        with assertRaises(GraphError, "Color ids are non-negative"):
            EdgeColoredGraph(3, [(0, 1, -1)])
        with assertRaises(GraphError, "Vertices and colors are integers"):
            EdgeColoredGraph(3, [(0, 1, "red")])
        with assertRaises(InputError, "Vertex count"):
            EdgeColoredGraph(-1)

    it "compares by vertex count and edges":
        one = EdgeColoredGraph(3, [(0, 1, 0), (1, 2, 1)])
        two = EdgeColoredGraph(3, [(2, 1, 1), (1, 0, 0)])
        assert one == two
        assert hash(one) == hash(two)
        assert one != EdgeColoredGraph(4, [(0, 1, 0), (1, 2, 1)])

    it "can remove vertices and colors":
        graph = EdgeColoredGraph(4, [(0, 1, 0), (1, 2, 1), (2, 3, 0), (0, 3, 2)])
        smaller = graph.avoiding(vertices=[1], colors=[2])
        assert smaller.n == 4
        assert smaller.edges == ((2, 3, 0),)
        assert graph.without_edges([(1, 0, 0)]).edges == ((0, 3, 2), (1, 2, 1), (2, 3, 0))

    it "counts components with networkx":
        graph = EdgeColoredGraph(5, [(0, 1, 0), (2, 3, 0)])
        assert graph.component_count() == 3
        assert not graph.is_connected()
        assert EdgeColoredGraph(2, [(0, 1, 3)]).is_connected()

describe "color degree":
    it "counts distinct colors at a vertex":
        graph = EdgeColoredGraph(4, [(0, 1, 7), (0, 2, 7), (0, 3, 9)])
        assert color_degree(graph, 0) == 2
        assert color_degree(graph, 1) == 1

    it "complains about vertices out of range":
        graph = EdgeColoredGraph(2, [(0, 1, 0)])
        with assertRaises(InputError, "Vertex out of range", vertex=2):
            color_degree(graph, 2)

    it "is zero for isolated vertices":
        graph = EdgeColoredGraph(3, [(0, 1, 0)])
        assert min_color_degree(graph) == 0

    it "has no minimum on the empty graph":
        with assertRaises(InputError):
            min_color_degree(EdgeColoredGraph(0))

    it "matches the known families":
        for n in (5, 7, 9, 11):
            assert min_color_degree(gen_fm_example(n)) == (n - 1) // 2
        assert min_color_degree(gen_two_clique_matchings(12, 2)) == 6

    @given(colored_graphs())
    it "never exceeds the degree", graph:
        for v in graph.vertices:
            assert color_degree(graph, v) <= graph.degree(v)
            assert color_degree(graph, v) == len(graph.incident_colors(v))

describe "color classes":
    it "gives the edges and degrees of one color":
        graph = EdgeColoredGraph(4, [(0, 1, 7), (0, 2, 7), (0, 3, 9)])
        view = color_class(graph, 7)
        assert view == ColorClassView(7, ((0, 1), (0, 2)), {0: 2, 1: 1, 2: 1})
        assert view.neighbours(0) == [1, 2]
        assert sorted(graph.color_classes()) == [7, 9]

    it "complains about colors not in use":
        graph = EdgeColoredGraph(2, [(0, 1, 0)])
        with assertRaises(InputError, "Color is not in the palette", color=4):
            color_class(graph, 4)

    it "knows a star forest":
        star = EdgeColoredGraph(5, [(0, 1, 0), (0, 2, 0), (3, 4, 0)])
        assert is_star_forest(color_class(star, 0))

        triangle = EdgeColoredGraph(3, [(0, 1, 0), (1, 2, 0), (0, 2, 0)])
        assert not is_star_forest(color_class(triangle, 0))

        path = EdgeColoredGraph(4, [(0, 1, 0), (1, 2, 0), (2, 3, 0)])
        assert not is_star_forest(color_class(path, 0))

describe "text format":
    it "parses comments, the header and edges":
        graph = parse_graph("# hello\n\n3 2\n0 1 4\n# middle\n1 2 5\n")
        assert graph == EdgeColoredGraph(3, [(0, 1, 4), (1, 2, 5)])

    it "names the line of a duplicate edge":
        text = "3 2\n0 1 4\n1 0 5\n"
        with assertRaises(GraphParseError, "Duplicate edge", line=3, pair=(0, 1), first_seen=2):
            parse_graph(text)

    it "names the line of other problems":
        with assertRaises(GraphParseError, "Expected 3 numbers", line=2):
            parse_graph("3 1\n0 1\n")
        with assertRaises(GraphParseError, "Expected decimal integers", line=2):
            parse_graph("3 1\n0 1 red\n")
        with assertRaises(GraphParseError, "Expected non-negative integers", line=2):
            parse_graph("3 1\n0 1 -3\n")
        with assertRaises(GraphParseError, "Vertex out of range", line=3):
            parse_graph("3 2\n0 1 0\n0 3 0\n")
        with assertRaises(GraphParseError, "Self loops are not allowed", line=2):
            parse_graph("3 1\n1 1 0\n")

    it "complains about a missing header or wrong count":
        with assertRaises(GraphParseError, "Missing the 'n m' header line", line=0):
            parse_graph("# nothing here\n")
        with assertRaises(GraphParseError, "Edge count doesn't match header", expected=2, got=1):
            parse_graph("3 2\n0 1 0\n")

    it "writes comments first and edges sorted":
        graph = EdgeColoredGraph(3, [(2, 1, 5), (0, 1, 4)])
        assert dumps_graph(graph, comments=["made by hand"]) == "# made by hand\n3 2\n0 1 4\n1 2 5\n"

    it "reads back what it writes", temp_file:
        graph = gen_fm_example(7)
        write_graph(graph, temp_file, comments=["family=fm_example n=7"])
        assert read_graph(temp_file) == graph

        stream = io.StringIO()
        write_graph(graph, stream)
        stream.seek(0)
        assert read_graph(stream) == graph

    it "complains when the file doesn't exist", temp_dir:
        with assertRaises(InputError, "Couldn't read graph file"):
            read_graph(f"{temp_dir}/nope.txt")

    it "complains about files that aren't text", temp_file:
        with open(temp_file, "wb") as fle:
            fle.write(b"3 1\n0 1 \xff\n")
        with assertRaises(GraphParseError, "isn't utf-8 text", source=temp_file):
            read_graph(temp_file)
