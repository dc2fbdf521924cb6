"""
Edge deletion that keeps a color degree threshold.

Both reductions scan edges in lexicographic ``(u, v, c)`` order against live
degree counters. Deleting an edge only ever lowers counters, so an edge that
was not deletable when scanned never becomes deletable later and one pass
reaches the same fixpoint as restarting the scan after every deletion.

.. autofunction:: reduce_structural

.. autofunction:: reduce_minimal
"""
import logging
from fractions import Fraction

from rainbowpath.errors import InputError, ThresholdViolated
from rainbowpath.graph import EdgeColoredGraph
from rainbowpath.logging import lc
from rainbowpath.norms import dictobj

log = logging.getLogger("rainbowpath.reduction")


class ReductionReport(dictobj):
    """
    removed_edges
        The deleted ``(u, v, c)`` edges in deletion order

    reasons
        Parallel to ``removed_edges``: ``triangle``, ``path`` or ``slack``

    mode
        ``structural`` or ``minimal``

    threshold
        The color degree threshold as a Fraction
    """

    fields = ["removed_edges", "reasons", "mode", "threshold"]

    def lines(self):
        return [f"REMOVED {u} {v} {c}" for u, v, c in self.removed_edges]

    def rainbow_error_format(self, key):
        return f"<reduction mode={self.mode} removed={len(self.removed_edges)}>"


class _Counters:
    """Live per color and color degree counts while edges disappear"""

    def __init__(self, graph):
        self.graph = graph
        self.class_degree = {}
        self.alive = {}
        for v in graph.vertices:
            for w, c in graph.neighbours(v):
                self.class_degree[(v, c)] = self.class_degree.get((v, c), 0) + 1
                self.alive.setdefault(v, {})[w] = c
        self.color_degree = [graph.color_degree(v) for v in graph.vertices]

    def delete(self, u, v, c):
        del self.alive[u][v]
        del self.alive[v][u]
        for z in (u, v):
            self.class_degree[(z, c)] -= 1
            if self.class_degree[(z, c)] == 0:
                self.color_degree[z] -= 1

    def both_repeat(self, u, v, c):
        return self.class_degree[(u, c)] >= 2 and self.class_degree[(v, c)] >= 2

    def shares_neighbour(self, u, v, c):
        at_u = {w for w, col in self.alive[u].items() if col == c and w != v}
        return any(col == c and w in at_u for w, col in self.alive[v].items())

    def has_slack(self, z, c, threshold):
        return self.class_degree[(z, c)] >= 2 or self.color_degree[z] - 1 >= threshold


def normalise_threshold(threshold):
    if isinstance(threshold, bool) or not isinstance(threshold, (int, Fraction)):
        raise InputError("Threshold must be an integer or a Fraction", got=threshold)
    return Fraction(threshold)


def check_threshold(graph, threshold):
    threshold = normalise_threshold(threshold)
    got = graph.min_color_degree()
    if got < threshold:
        raise ThresholdViolated(threshold=str(threshold), min_color_degree=got)
    return threshold


def _structural_pass(graph, counters, removed, reasons):
    for u, v, c in graph.edges:
        if counters.both_repeat(u, v, c):
            reasons.append("triangle" if counters.shares_neighbour(u, v, c) else "path")
            counters.delete(u, v, c)
            removed.append((u, v, c))


def _slack_pass(graph, counters, threshold, removed, reasons):
    for u, v, c in graph.edges:
        if v not in counters.alive[u]:
            continue
        if counters.has_slack(u, c, threshold) and counters.has_slack(v, c, threshold):
            counters.delete(u, v, c)
            removed.append((u, v, c))
            reasons.append("slack")


def _finish(graph, removed, reasons, mode, threshold):
    reduced = graph.without_edges(removed)
    report = ReductionReport(
        removed_edges=removed, reasons=reasons, mode=mode, threshold=threshold
    )
    log.debug(lc("Reduced graph", mode=mode, removed=len(removed), remaining=reduced.m))
    return reduced, report


def reduce_structural(graph, threshold):
    """
    Delete edges of color alpha whose endpoints both have another alpha edge.

    Such an edge is either on a monochromatic triangle or is the middle edge
    of a monochromatic path on four vertices. Removing it keeps every color
    degree, and at the fixpoint every color class is a star forest.

    Returns ``(reduced_graph, ReductionReport)``.
    """
    threshold = check_threshold(graph, threshold)
    counters = _Counters(graph)
    removed, reasons = [], []
    _structural_pass(graph, counters, removed, reasons)
    return _finish(graph, removed, reasons, "structural", threshold)


def reduce_minimal(graph, threshold):
    """
    Make the edge set minimal for ``min_color_degree >= threshold``.

    Runs the structural reduction and then deletes every edge whose removal
    keeps both endpoints at or above the threshold.
    """
    threshold = check_threshold(graph, threshold)
    counters = _Counters(graph)
    removed, reasons = [], []
    _structural_pass(graph, counters, removed, reasons)
    _slack_pass(graph, counters, threshold, removed, reasons)
    return _finish(graph, removed, reasons, "minimal", threshold)


def reduce(graph, threshold, mode="minimal"):
    if mode == "structural":
        return reduce_structural(graph, threshold)
    elif mode == "minimal":
        return reduce_minimal(graph, threshold)
    raise InputError("Unknown reduction mode", mode=mode, available=["structural", "minimal"])


def is_edge_minimal(graph, threshold):
    """True if deleting any single edge drops some color degree below threshold"""
    threshold = normalise_threshold(threshold)
    for u, v, c in graph.edges:
        smaller = EdgeColoredGraph(graph.n, [e for e in graph.edges if e != (u, v, c)])
        if smaller.min_color_degree() >= threshold:
            return False
    return True
