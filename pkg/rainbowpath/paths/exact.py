"""
Exact rainbow path search.

A depth first search over simple paths carrying the used colors as a bitset.
Neighbours are tried in increasing order and the length bound is raised one
step at a time, so the first path found is the lexicographically least among
the shortest ones. A branch is cut when the BFS distance to the target (in
the graph without forbidden vertices and colors) doesn't fit in the remaining
budget.
"""
import logging

from rainbowpath.errors import SearchBudgetExceeded
from rainbowpath.logging import lc

from .certificates import PathCertificate
from .common import (
    DEFAULT_MAX_LEN,
    UNREACHABLE,
    check_max_len,
    check_pair,
    color_mask,
    distances_to,
)

log = logging.getLogger("rainbowpath.paths.exact")


class _Search:
    def __init__(self, graph, target, forbidden_colors, blocked, node_cap):
        self.graph = graph
        self.target = target
        self.blocked = blocked
        self.forbidden_mask = color_mask(graph, forbidden_colors)
        self.dist = distances_to(graph, target, blocked, forbidden_colors)
        self.node_cap = node_cap
        self.expanded = 0

    def expand(self):
        self.expanded += 1
        if self.node_cap is not None and self.expanded > self.node_cap:
            raise SearchBudgetExceeded(cap=self.node_cap, target=self.target)

    def walk(self, path, on_path, used, budget):
        """Yield vertex tuples of rainbow paths from path[-1] to the target within budget"""
        self.expand()
        graph = self.graph
        bits = graph.color_bit
        for w, c in graph.neighbours(path[-1]):
            bit = bits[c]
            if bit & used or w in on_path or w in self.blocked:
                continue
            if self.dist[w] is UNREACHABLE or self.dist[w] + 1 > budget:
                continue

            path.append(w)
            if w == self.target:
                yield tuple(path)
            else:
                on_path.add(w)
                yield from self.walk(path, on_path, used | bit, budget - 1)
                on_path.discard(w)
            path.pop()

    def paths(self, source, budget):
        if self.dist[source] is UNREACHABLE or self.dist[source] > budget:
            return
        yield from self.walk([source], {source}, self.forbidden_mask, budget)


def find_rainbow_path_exact(
    graph,
    u,
    v,
    max_len=DEFAULT_MAX_LEN,
    forbidden_colors=(),
    forbidden_vertices=(),
    node_cap=None,
):
    """
    Return the lexicographically least shortest rainbow ``u``-``v`` path of
    length at most ``max_len`` as a :class:`PathCertificate`, or None when no
    such path exists.

    ``node_cap`` bounds the number of search nodes expanded over all lengths;
    going over raises :class:`~rainbowpath.errors.SearchBudgetExceeded`.
    """
    blocked = check_pair(graph, u, v, forbidden_vertices)
    max_len = check_max_len(graph, max_len)

    search = _Search(graph, v, forbidden_colors, blocked, node_cap)
    start = search.dist[u]
    if start is UNREACHABLE:
        return None

    for budget in range(start, max_len + 1):
        for found in search.paths(u, budget):
            return PathCertificate.from_vertices(graph, found)

    log.debug(lc("No rainbow path", u=u, v=v, max_len=max_len, expanded=search.expanded))
    return None


def enumerate_rainbow_paths(
    graph, u, v, max_len=None, forbidden_colors=(), forbidden_vertices=(), node_cap=None
):
    """
    Yield every rainbow ``u``-``v`` path of length at most ``max_len`` (every
    length when None) in lexicographic order of vertex sequence.
    """
    blocked = check_pair(graph, u, v, forbidden_vertices)
    max_len = check_max_len(graph, max_len)
    search = _Search(graph, v, forbidden_colors, blocked, node_cap)
    for found in search.paths(u, max_len):
        yield PathCertificate.from_vertices(graph, found)


def shortest_rainbow_length(graph, u, v, max_len=DEFAULT_MAX_LEN, node_cap=None):
    found = find_rainbow_path_exact(graph, u, v, max_len=max_len, node_cap=node_cap)
    return None if found is None else found.length
