"""Brute force oracles and hypothesis strategies shared by the tests"""
from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from rainbowpath.graph import EdgeColoredGraph


def simple_paths(graph, u, v, max_len=None):
    cutoff = graph.n - 1 if max_len is None else max_len
    return nx.all_simple_paths(graph.to_networkx(), u, v, cutoff=cutoff)


def path_colors(graph, vertices):
    return [graph.color(a, b) for a, b in zip(vertices, vertices[1:])]


def is_rainbow(graph, vertices):
    colors = path_colors(graph, vertices)
    return len(colors) == len(set(colors))


def is_proper(graph, vertices):
    colors = path_colors(graph, vertices)
    return all(a != b for a, b in zip(colors, colors[1:]))


def shortest_rainbow(graph, u, v, max_len=None):
    """Length of the shortest rainbow u,v path by trying every simple path"""
    lengths = [len(p) - 1 for p in simple_paths(graph, u, v, max_len) if is_rainbow(graph, p)]
    return min(lengths) if lengths else None


def has_proper_path(graph, u, v):
    return any(is_proper(graph, p) for p in simple_paths(graph, u, v))


def components_without(graph, colors):
    remaining = nx.Graph()
    remaining.add_nodes_from(range(graph.n))
    remaining.add_edges_from((a, b) for a, b, c in graph.edges if c not in colors)
    return nx.number_connected_components(remaining)


def has_rainbow_spanning_tree(graph):
    """Try every set of n - 1 edges"""
    if graph.n <= 1:
        return True
    for chosen in combinations(graph.edges, graph.n - 1):
        colors = [c for _, _, c in chosen]
        if len(set(colors)) != len(colors):
            continue
        tree = nx.Graph()
        tree.add_nodes_from(range(graph.n))
        tree.add_edges_from((a, b) for a, b, _ in chosen)
        if nx.is_tree(tree):
            return True
    return False


@st.composite
def colored_graphs(draw, min_n=2, max_n=7, max_colors=4, min_edges=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(
        st.lists(
            st.sampled_from(pairs),
            unique=True,
            min_size=min(min_edges, len(pairs)),
            max_size=len(pairs),
        )
    )
    colors = draw(
        st.lists(
            st.integers(min_value=0, max_value=max_colors - 1),
            min_size=len(chosen),
            max_size=len(chosen),
        )
    )
    return EdgeColoredGraph(n, [(a, b, c) for (a, b), c in zip(chosen, colors)])


@st.composite
def graphs_with_pair(draw, **kwargs):
    graph = draw(colored_graphs(**kwargs))
    u = draw(st.integers(min_value=0, max_value=graph.n - 1))
    v = draw(st.integers(min_value=0, max_value=graph.n - 1).filter(lambda x: x != u))
    return graph, u, v
