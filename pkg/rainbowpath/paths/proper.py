"""
Properly colored paths: no two consecutive edges share a color.

The search is exact. Depth first over simple paths, neighbours in increasing
order, with the length bound raised one step at a time. Before a branch is
entered we run a BFS over ``(vertex, color of the edge used to arrive)``
states in the graph without the vertices already on the path. A properly
colored path is a properly colored walk, so when that BFS can't reach the
target within the remaining budget no extension can either.
"""
import logging
from collections import deque

from rainbowpath.logging import lc
from rainbowpath.norms import dictobj

from .certificates import PathCertificate
from .common import check_max_len, check_pair

log = logging.getLogger("rainbowpath.paths.proper")

NO_COLOR = -1


def proper_walk_distance(graph, start, arrived_with, target, avoid):
    """Fewest edges of a properly colored walk from start to target, or None"""
    seen = {(start, arrived_with)}
    queue = deque([(start, arrived_with, 0)])
    while queue:
        x, last, dist = queue.popleft()
        for y, c in graph.neighbours(x):
            if c == last or y in avoid:
                continue
            if y == target:
                return dist + 1
            if (y, c) not in seen:
                seen.add((y, c))
                queue.append((y, c, dist + 1))
    return None


class _ProperSearch:
    def __init__(self, graph, target, blocked):
        self.graph = graph
        self.target = target
        self.blocked = blocked

    def walk(self, path, on_path, last, budget):
        for w, c in self.graph.neighbours(path[-1]):
            if c == last or w in on_path or w in self.blocked:
                continue
            if w == self.target:
                path.append(w)
                yield tuple(path)
                path.pop()
                continue
            if budget < 2:
                continue

            on_path.add(w)
            needed = proper_walk_distance(
                self.graph, w, c, self.target, on_path | self.blocked
            )
            if needed is not None and needed <= budget - 1:
                path.append(w)
                yield from self.walk(path, on_path, c, budget - 1)
                path.pop()
            on_path.discard(w)


def find_proper_path(graph, u, v, max_len=None, forbidden_vertices=()):
    """
    Return the lexicographically least shortest properly colored ``u``-``v``
    path of length at most ``max_len`` (``n - 1`` when None), or None.
    """
    blocked = check_pair(graph, u, v, forbidden_vertices)
    max_len = check_max_len(graph, max_len)

    lower = proper_walk_distance(graph, u, NO_COLOR, v, blocked | {u})
    if lower is None or lower > max_len:
        return None

    search = _ProperSearch(graph, v, blocked)
    for budget in range(lower, max_len + 1):
        for found in search.walk([u], {u}, NO_COLOR, budget):
            return PathCertificate.from_vertices(graph, found, flavor="proper")
    return None


class ProperConnectivityReport(dictobj):
    """
    connected
        Every pair is joined by a properly colored path

    failing_pair
        The first pair in lexicographic order without one, or None

    checked
        How many pairs were searched
    """

    fields = ["connected", "failing_pair", "checked"]


def proper_connectivity_report(graph):
    checked = 0
    for a in range(graph.n):
        for b in range(a + 1, graph.n):
            checked += 1
            if find_proper_path(graph, a, b) is None:
                log.debug(lc("Pair not properly connected", u=a, v=b))
                return ProperConnectivityReport(
                    connected=False, failing_pair=(a, b), checked=checked
                )
    return ProperConnectivityReport(connected=True, failing_pair=None, checked=checked)


def is_properly_connected(graph):
    return proper_connectivity_report(graph).connected
