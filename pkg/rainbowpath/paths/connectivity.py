"""
All pairs rainbow connectivity and rainbow k-connectivity.

``is_rainbow_connected`` searches every unordered pair, optionally spreading
source vertices over a process pool. Results are merged in pair order so the
report doesn't depend on which worker finished first.

``rainbow_k_connect`` is the greedy procedure: find a rainbow path, remove its
internal vertices and every edge in its colors, repeat. It can miss answers
that exist; ``exhaustive_k_connect`` tries every first path and recurses, and
is only practical on small graphs.
"""
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from rainbowpath.errors import InputError, SearchBudgetExceeded
from rainbowpath.logging import lc
from rainbowpath.norms import dictobj

from .certificates import KConnectCertificate, check_kconnect
from .colorcoding import find_rainbow_path_cc
from .common import (
    DEFAULT_MAX_LEN,
    DEFAULT_TRIALS,
    ENGINES,
    UNREACHABLE,
    check_max_len,
    check_pair,
    distances_to,
)
from .exact import enumerate_rainbow_paths, find_rainbow_path_exact

log = logging.getLogger("rainbowpath.paths.connectivity")


class PairResult(dictobj):
    fields = ["pair", "length", "fallback"]


class RainbowConnectivityReport(dictobj):
    """
    connected
        Every pair has a rainbow path of length at most ``max_len``

    worst_pair / worst_len
        The first pair with the longest shortest path. When a pair has no
        path it is the worst pair and ``worst_len`` is None.

    histogram
        ``{length: number of pairs}`` over pairs that have a path

    missing
        Pairs without a path

    fallbacks
        Pairs where exact search went over ``node_cap`` and color coding was used
    """

    fields = ["connected", "worst_pair", "worst_len", "histogram", "missing", "fallbacks"]


def find_rainbow_path(
    graph,
    u,
    v,
    max_len=DEFAULT_MAX_LEN,
    engine="exact",
    trials=DEFAULT_TRIALS,
    seed=0,
    forbidden_colors=(),
    forbidden_vertices=(),
    node_cap=None,
):
    """Dispatch to the exact or color coding engine"""
    if engine == "exact":
        return find_rainbow_path_exact(
            graph,
            u,
            v,
            max_len=max_len,
            forbidden_colors=forbidden_colors,
            forbidden_vertices=forbidden_vertices,
            node_cap=node_cap,
        )
    elif engine == "cc":
        return find_rainbow_path_cc(
            graph,
            u,
            v,
            max_len=max_len,
            trials=trials,
            seed=seed,
            forbidden_colors=forbidden_colors,
            forbidden_vertices=forbidden_vertices,
        )
    raise InputError("Unknown engine", engine=engine, available=list(ENGINES))


def _pair_result(graph, u, v, max_len, engine, trials, seed, node_cap):
    fallback = False
    try:
        found = find_rainbow_path(
            graph, u, v, max_len=max_len, engine=engine, trials=trials, seed=seed, node_cap=node_cap
        )
    except SearchBudgetExceeded:
        fallback = True
        found = find_rainbow_path_cc(graph, u, v, max_len=max_len, trials=trials, seed=seed)
    return (u, v), None if found is None else found.length, fallback


def _pairs_from(args):
    graph, u, max_len, engine, trials, seed, node_cap = args
    return [
        _pair_result(graph, u, v, max_len, engine, trials, seed, node_cap)
        for v in range(u + 1, graph.n)
    ]


def pair_results(
    graph, max_len=DEFAULT_MAX_LEN, engine="exact", trials=DEFAULT_TRIALS, seed=0, node_cap=None, workers=1
):
    """PairResult for every unordered pair in lexicographic order"""
    if engine not in ENGINES:
        raise InputError("Unknown engine", engine=engine, available=list(ENGINES))
    max_len = check_max_len(graph, max_len)
    jobs = [(graph, u, max_len, engine, trials, seed, node_cap) for u in range(graph.n - 1)]

    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_pairs_from, jobs))
    else:
        chunks = [_pairs_from(job) for job in jobs]

    return [
        PairResult(pair=pair, length=length, fallback=fallback)
        for chunk in chunks
        for pair, length, fallback in chunk
    ]


def summarise_pairs(results):
    histogram = Counter()
    missing = []
    worst_pair = None
    worst_len = 0
    for result in results:
        if result.length is None:
            missing.append(result.pair)
            continue
        histogram[result.length] += 1
        if result.length > worst_len:
            worst_pair, worst_len = result.pair, result.length

    if missing:
        worst_pair, worst_len = missing[0], None

    return RainbowConnectivityReport(
        connected=not missing,
        worst_pair=worst_pair,
        worst_len=worst_len,
        histogram=dict(sorted(histogram.items())),
        missing=missing,
        fallbacks=sum(1 for result in results if result.fallback),
    )


def is_rainbow_connected(
    graph, max_len=DEFAULT_MAX_LEN, engine="exact", trials=DEFAULT_TRIALS, seed=0, node_cap=None, workers=1
):
    if graph.n < 2:
        raise InputError("Rainbow connectivity needs at least two vertices", n=graph.n)
    results = pair_results(
        graph, max_len=max_len, engine=engine, trials=trials, seed=seed, node_cap=node_cap, workers=workers
    )
    report = summarise_pairs(results)
    log.debug(
        lc(
            "Checked rainbow connectivity",
            n=graph.n,
            connected=report.connected,
            worst_len=report.worst_len,
            fallbacks=report.fallbacks,
        )
    )
    return report


def rainbow_k_connect(graph, u, v, k, max_len=DEFAULT_MAX_LEN, engine="exact", trials=DEFAULT_TRIALS, seed=0):
    """
    Find ``k`` paths greedily, removing each path's internal vertices and all
    edges of its colors before looking for the next one.
    """
    check_pair(graph, u, v)
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InputError("k must be a positive integer", got=k)

    removed_vertices = set()
    removed_colors = set()
    paths = []
    for index in range(k):
        found = find_rainbow_path(
            graph,
            u,
            v,
            max_len=max_len,
            engine=engine,
            trials=trials,
            seed=seed + index,
            forbidden_colors=removed_colors,
            forbidden_vertices=removed_vertices,
        )
        if found is None:
            log.debug(lc("k-connect procedure stopped", u=u, v=v, found=index, wanted=k))
            return None
        paths.append(found)
        removed_vertices.update(found.internal_vertices)
        removed_colors.update(found.colors)

    return check_kconnect(graph, KConnectCertificate(u=u, v=v, paths=tuple(paths)))


def exhaustive_k_connect(graph, u, v, k, max_len=None):
    """
    Decide exactly whether ``k`` internally disjoint paths with a rainbow union
    join ``u`` and ``v``, returning a certificate or None.

    Exponential; meant for graphs of a dozen or so vertices and small k.
    """
    check_pair(graph, u, v)
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InputError("k must be a positive integer", got=k)
    max_len = check_max_len(graph, max_len)

    def search(remaining, removed_vertices, removed_colors, minimum):
        if remaining == 0:
            return []
        dist = distances_to(graph, v, removed_vertices, removed_colors)
        if dist[u] is UNREACHABLE:
            return None

        for path in enumerate_rainbow_paths(
            graph,
            u,
            v,
            max_len=max_len,
            forbidden_colors=removed_colors,
            forbidden_vertices=removed_vertices,
        ):
            # path sets are only built in increasing order
            if path.vertices < minimum:
                continue
            rest = search(
                remaining - 1,
                removed_vertices | set(path.internal_vertices),
                removed_colors | set(path.colors),
                path.vertices,
            )
            if rest is not None:
                return [path] + rest
        return None

    found = search(k, frozenset(), frozenset(), ())
    if found is None:
        return None
    return check_kconnect(graph, KConnectCertificate(u=u, v=v, paths=tuple(found)))
