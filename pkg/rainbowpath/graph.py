"""
The data model for edge-colored graphs.

An :class:`EdgeColoredGraph` is an immutable simple graph on the vertices
``0..n-1`` where every edge carries a non-negative integer color id. Colors are
opaque: they are only compared for equality and sorted for determinism.

.. code-block:: python

    from rainbowpath.graph import EdgeColoredGraph, color_degree

    graph = EdgeColoredGraph(4, [(0, 1, 7), (0, 2, 7), (0, 3, 9)])
    assert color_degree(graph, 0) == 2

Graphs are read and written in a small text format::

    # comment lines start with a hash
    4 3
    0 1 7
    0 2 7
    0 3 9

.. autoclass:: EdgeColoredGraph

.. autoclass:: ColorClassView

.. autofunction:: is_star_forest
"""
import io
import os
from types import MappingProxyType

import networkx as nx

from rainbowpath.errors import GraphError, GraphParseError, InputError, MultiEdge, SelfLoop
from rainbowpath.norms import dictobj


def _is_int(val):
    return isinstance(val, int) and not isinstance(val, bool)


class ColorClassView(dictobj):
    """
    The spanning subgraph of a single color.

    color
        The color id

    edges
        Sorted tuple of ``(u, v)`` pairs with ``u < v``

    degrees
        ``{vertex: degree}`` for every vertex touching this color
    """

    fields = ["color", "edges", "degrees"]

    @classmethod
    def from_edges(kls, color, edges):
        degrees = {}
        for u, v in edges:
            degrees[u] = degrees.get(u, 0) + 1
            degrees[v] = degrees.get(v, 0) + 1
        return kls(color, tuple(sorted(edges)), degrees)

    def neighbours(self, v):
        return sorted({b for a, b in self.edges if a == v} | {a for a, b in self.edges if b == v})


class EdgeColoredGraph:
    """
    A simple graph with colored edges.

    n
        Number of vertices, the vertices are ``0..n-1``

    edges
        Iterable of ``(u, v, color)``. Endpoints are unordered, self loops and
        a second edge between the same pair are refused.

    After construction ``graph.edges`` is the sorted tuple of ``(u, v, c)`` with
    ``u < v`` and ``graph.colors`` is the sorted tuple of colors in use.
    """

    def __init__(self, n, edges=()):
        if not _is_int(n) or n < 0:
            raise InputError("Vertex count must be a non-negative integer", got=n)

        adjacency = [dict() for _ in range(n)]
        normalised = []
        for edge in edges:
            try:
                u, v, c = edge
            except (TypeError, ValueError):
                raise GraphError("Edges are (u, v, color) triples", got=edge)

            for val in (u, v, c):
                if not _is_int(val):
                    raise GraphError("Vertices and colors are integers", edge=edge)
            for val in (u, v):
                if not 0 <= val < n:
                    raise InputError("Vertex out of range", vertex=val, n=n)
            if c < 0:
                raise GraphError("Color ids are non-negative", edge=edge)
            if u == v:
                raise SelfLoop(vertex=u)
            if v in adjacency[u]:
                raise MultiEdge(pair=(min(u, v), max(u, v)))

            adjacency[u][v] = c
            adjacency[v][u] = c
            normalised.append((min(u, v), max(u, v), c))

        self.n = n
        self.edges = tuple(sorted(normalised))
        self.colors = tuple(sorted({c for _, _, c in self.edges}))
        self.color_bit = MappingProxyType({c: 1 << i for i, c in enumerate(self.colors)})

        self._adjacency = tuple(MappingProxyType(a) for a in adjacency)
        self._neighbours = tuple(tuple(sorted(a.items())) for a in adjacency)

        masks = []
        for a in adjacency:
            mask = 0
            for c in a.values():
                mask |= self.color_bit[c]
            masks.append(mask)
        self._color_masks = tuple(masks)
        self._color_degrees = tuple(mask.bit_count() for mask in masks)
        self._color_classes = None

    def __repr__(self):
        return f"<EdgeColoredGraph n={self.n} m={self.m} colors={len(self.colors)}>"

    def __eq__(self, other):
        return (
            isinstance(other, EdgeColoredGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __reduce__(self):
        return (EdgeColoredGraph, (self.n, self.edges))

    def rainbow_error_format(self, key):
        return f"<graph n={self.n} m={self.m}>"

    @property
    def m(self):
        return len(self.edges)

    @property
    def vertices(self):
        return range(self.n)

    def check_vertex(self, v):
        if not _is_int(v) or not 0 <= v < self.n:
            raise InputError("Vertex out of range", vertex=v, n=self.n)
        return v

    def neighbours(self, v):
        """Sorted tuple of ``(w, color)`` for every edge at ``v``"""
        return self._neighbours[v]

    def adjacent(self, v):
        """Read only ``{w: color}`` for every edge at ``v``"""
        return self._adjacency[v]

    def color(self, u, v):
        """The color of the edge between u and v or None"""
        return self._adjacency[u].get(v)

    def has_edge(self, u, v):
        return v in self._adjacency[u]

    def degree(self, v):
        return len(self._adjacency[v])

    def color_mask(self, v):
        """Bitset of colors at v, using the bits in ``graph.color_bit``"""
        return self._color_masks[v]

    def incident_colors(self, v):
        return frozenset(self._adjacency[v].values())

    def color_degree(self, v):
        return self._color_degrees[self.check_vertex(v)]

    def min_color_degree(self):
        if self.n == 0:
            raise InputError("The empty graph has no minimum color degree")
        return min(self._color_degrees)

    def color_classes(self):
        """``{color: ColorClassView}`` for every color in use"""
        if self._color_classes is None:
            grouped = {c: [] for c in self.colors}
            for u, v, c in self.edges:
                grouped[c].append((u, v))
            self._color_classes = MappingProxyType(
                {c: ColorClassView.from_edges(c, edges) for c, edges in grouped.items()}
            )
        return self._color_classes

    def color_class(self, alpha):
        classes = self.color_classes()
        if alpha not in classes:
            raise InputError("Color is not in the palette", color=alpha)
        return classes[alpha]

    def color_neighbours(self, v):
        """``{color: sorted neighbours of v through that color}``"""
        result = {}
        for w, c in self._neighbours[v]:
            result.setdefault(c, []).append(w)
        return result

    def without_edges(self, removed):
        """A new graph without the given ``(u, v, c)`` edges"""
        gone = {(min(u, v), max(u, v)) for u, v, _ in removed}
        return EdgeColoredGraph(self.n, [e for e in self.edges if (e[0], e[1]) not in gone])

    def avoiding(self, vertices=(), colors=()):
        """
        A new graph on the same vertex ids with every edge touching
        ``vertices`` and every edge of ``colors`` removed
        """
        vertices = set(vertices)
        colors = set(colors)
        return EdgeColoredGraph(
            self.n,
            [
                (u, v, c)
                for u, v, c in self.edges
                if c not in colors and u not in vertices and v not in vertices
            ],
        )

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((u, v, {"color": c}) for u, v, c in self.edges)
        return graph

    def component_count(self):
        return nx.number_connected_components(self.to_networkx())

    def is_connected(self):
        return self.n > 0 and self.component_count() == 1


def color_degree(graph, v):
    """The number of distinct colors on edges at ``v``"""
    return graph.color_degree(v)


def min_color_degree(graph):
    """The minimum color degree over all vertices; 0 if any vertex is isolated"""
    return graph.min_color_degree()


def color_class(graph, alpha):
    return graph.color_class(alpha)


def is_star_forest(view):
    """
    Every component of the color class is a star.

    In a simple graph that is the same as every edge having an endpoint of
    degree one in the class, which rules out triangles and paths on four
    vertices (and so every cycle).
    """
    degrees = view.degrees
    return all(degrees[u] == 1 or degrees[v] == 1 for u, v in view.edges)


########################
###   TEXT FORMAT
########################


def _parse_ints(line, lineno, source, want):
    parts = line.split()
    if len(parts) != want:
        raise GraphParseError(
            f"Expected {want} numbers", line=lineno, source=source, got=line.strip()
        )
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise GraphParseError("Expected decimal integers", line=lineno, source=source, got=line.strip())
    if any(v < 0 for v in values):
        raise GraphParseError("Expected non-negative integers", line=lineno, source=source)
    return values


def parse_graph(text, source="<string>"):
    """Parse the text format, complaining with line numbers"""
    header = None
    edges = []
    seen = {}

    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue

        if header is None:
            header = _parse_ints(stripped, lineno, source, 2)
            continue

        u, v, c = _parse_ints(stripped, lineno, source, 3)
        n = header[0]
        if u >= n or v >= n:
            raise GraphParseError("Vertex out of range", line=lineno, source=source, n=n)
        if u == v:
            raise GraphParseError("Self loops are not allowed", line=lineno, source=source)
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise GraphParseError(
                "Duplicate edge", line=lineno, source=source, pair=pair, first_seen=seen[pair]
            )
        seen[pair] = lineno
        edges.append((u, v, c))

    if header is None:
        raise GraphParseError("Missing the 'n m' header line", line=0, source=source)

    n, m = header
    if len(edges) != m:
        raise GraphParseError(
            "Edge count doesn't match header", line=0, source=source, expected=m, got=len(edges)
        )

    return EdgeColoredGraph(n, edges)


def read_text(location):
    """The contents of a graph file, with unreadable files as RainbowErrors"""
    try:
        with open(location, encoding="utf-8") as fle:
            return fle.read()
    except UnicodeDecodeError as error:
        raise GraphParseError("Graph file isn't utf-8 text", source=str(location), error=str(error))
    except OSError as error:
        raise InputError("Couldn't read graph file", location=str(location), error=str(error))


def read_graph(location):
    """Read a graph from a path or an open file"""
    if isinstance(location, (str, os.PathLike)):
        return parse_graph(read_text(location), source=str(location))
    return parse_graph(location.read(), source=getattr(location, "name", "<stream>"))


def dumps_graph(graph, comments=()):
    """The text format, edges sorted lexicographically"""
    out = io.StringIO()
    for comment in comments:
        out.write(f"# {comment}\n")
    out.write(f"{graph.n} {graph.m}\n")
    for u, v, c in graph.edges:
        out.write(f"{u} {v} {c}\n")
    return out.getvalue()


def write_graph(graph, location, comments=()):
    """Write to a path or an open file"""
    text = dumps_graph(graph, comments=comments)
    if isinstance(location, (str, os.PathLike)):
        with open(location, "w", encoding="utf-8") as fle:
            fle.write(text)
    else:
        location.write(text)
