"""
Rainbow spanning trees.

:func:`find_rainbow_spanning_tree` grows a largest set of edges that is both
a forest (graphic matroid) and uses every color at most once (partition
matroid) by shortest augmenting paths in the exchange graph. A rainbow
spanning tree exists exactly when that set reaches ``n - 1`` edges.

:func:`criterion_oracle` checks the color removal condition directly: for
every ``1 <= r <= n - 2`` and every ``r`` colors, removing those colors leaves
at most ``r + 1`` components. It enumerates color subsets and is only a cross
check for small palettes.
"""
import logging
from collections import deque
from itertools import combinations

import networkx as nx

from rainbowpath.errors import InputError, InvalidCertificate
from rainbowpath.logging import lc
from rainbowpath.norms import dictobj

log = logging.getLogger("rainbowpath.spanning")

ORACLE_PALETTE_LIMIT = 20


class TreeCertificate(dictobj):
    fields = ["edges"]

    @property
    def colors(self):
        return tuple(c for _, _, c in self.edges)

    def lines(self):
        return [f"{u} {v} {c}" for u, v, c in self.edges]

    def rainbow_error_format(self, key):
        return f"<tree edges={len(self.edges)}>"


def tree_problems(graph, cert):
    problems = []
    edges = list(cert.edges)
    if len(edges) != max(graph.n - 1, 0):
        problems.append(f"expected {graph.n - 1} edges, got {len(edges)}")
    for u, v, c in edges:
        if graph.color(u, v) != c:
            problems.append(f"{u}-{v} in color {c} is not an edge")
    colors = [c for _, _, c in edges]
    if len(set(colors)) != len(colors):
        problems.append("colors repeat")

    tree = nx.Graph()
    tree.add_nodes_from(range(graph.n))
    tree.add_edges_from((u, v) for u, v, _ in edges)
    if graph.n > 0 and not nx.is_tree(tree):
        problems.append("edges don't form a spanning tree")
    return problems


def check_tree(graph, cert):
    problems = tree_problems(graph, cert)
    if problems:
        raise InvalidCertificate(problems=problems, certificate=cert)
    return cert


class _Intersection:
    """Exchange graph bookkeeping for the current common independent set"""

    def __init__(self, graph):
        self.graph = graph
        self.edges = graph.edges
        self.chosen = []
        self.sizes = []

    def forest(self):
        forest = nx.Graph()
        forest.add_nodes_from(range(self.graph.n))
        forest.add_edges_from((self.edges[i][0], self.edges[i][1], {"index": i}) for i in self.chosen)
        return forest

    def augment(self):
        """Find one shortest augmenting path and apply it; False when there is none"""
        edges = self.edges
        chosen = set(self.chosen)
        outside = [i for i in range(len(edges)) if i not in chosen]
        forest = self.forest()
        used_colors = {edges[i][2]: i for i in chosen}

        components = {}
        for number, part in enumerate(nx.connected_components(forest)):
            for v in part:
                components[v] = number

        def free_in_forest(x):
            return components[edges[x][0]] != components[edges[x][1]]

        def cycle_of(x):
            path = nx.shortest_path(forest, edges[x][0], edges[x][1])
            return sorted(forest[a][b]["index"] for a, b in zip(path, path[1:]))

        sources = [x for x in outside if free_in_forest(x)]
        sinks = {x for x in outside if edges[x][2] not in used_colors}

        # y -> x when swapping keeps a forest, x -> y when swapping keeps colors distinct
        forward = {y: [] for y in chosen}
        for x in outside:
            if not free_in_forest(x):
                for y in cycle_of(x):
                    forward[y].append(x)

        backward = {}
        for x in outside:
            clash = used_colors.get(edges[x][2])
            backward[x] = [] if clash is None else [clash]

        parent = {x: None for x in sources}
        queue = deque(sources)
        end = None
        while queue:
            node = queue.popleft()
            if node not in chosen and node in sinks:
                end = node
                break
            following = backward[node] if node not in chosen else forward[node]
            for nxt in following:
                if nxt not in parent:
                    parent[nxt] = node
                    queue.append(nxt)

        if end is None:
            return False

        path = []
        while end is not None:
            path.append(end)
            end = parent[end]
        self.chosen = sorted(chosen.symmetric_difference(path))
        self.sizes.append(len(self.chosen))
        return True


def max_rainbow_forest(graph):
    """The common independent set and the size after every augmentation"""
    intersection = _Intersection(graph)
    while intersection.augment():
        pass
    return [graph.edges[i] for i in intersection.chosen], intersection.sizes


def find_rainbow_spanning_tree(graph):
    if graph.n < 1:
        raise InputError("Spanning trees need at least one vertex")

    edges, sizes = max_rainbow_forest(graph)
    log.debug(lc("Matroid intersection finished", n=graph.n, size=len(edges), rounds=len(sizes)))
    if len(edges) != graph.n - 1:
        return None
    return check_tree(graph, TreeCertificate(edges=tuple(edges)))


def _components_without(graph, colors):
    remaining = nx.Graph()
    remaining.add_nodes_from(range(graph.n))
    remaining.add_edges_from((u, v) for u, v, c in graph.edges if c not in colors)
    return nx.number_connected_components(remaining)


def criterion_witness(graph):
    """The first color set (by size then lexicographically) breaking the condition, or None"""
    if len(graph.colors) > ORACLE_PALETTE_LIMIT:
        raise InputError(
            "Too many colors for the criterion oracle",
            colors=len(graph.colors),
            limit=ORACLE_PALETTE_LIMIT,
        )
    if not graph.is_connected():
        raise InputError("The criterion is stated for connected graphs")

    for r in range(1, graph.n - 1):
        for removed in combinations(graph.colors, r):
            if _components_without(graph, set(removed)) > r + 1:
                return removed
    return None


def criterion_oracle(graph):
    return criterion_witness(graph) is None
