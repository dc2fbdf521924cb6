"""
Randomized rainbow path search by color coding.

Each trial maps every color to one of ``max_len`` labels at random and runs a
layered dynamic program over ``(label set, vertex)`` states: a state is
reached when some walk from the source uses edges whose labels are exactly
that set. Distinct labels imply distinct colors, so the first walk reaching
the target is rainbow. Erasing its loops leaves a rainbow path on a subset of
its edges, which is re-checked before it is returned.

The result is one sided: a returned path always holds, a missing one only
means no trial happened to separate the colors of an existing path.
"""
import logging
import math
import random

from rainbowpath.errors import InputError
from rainbowpath.logging import lc

from .certificates import PathCertificate, path_problems
from .common import DEFAULT_MAX_LEN, DEFAULT_TRIALS, check_max_len, check_pair

log = logging.getLogger("rainbowpath.paths.colorcoding")


def trials_for_confidence(max_len, failure=0.01):
    """Trials so that a fixed path of length max_len is missed with probability below failure"""
    return math.ceil(math.exp(max_len) * math.log(1 / failure))


def erase_loops(walk):
    kept = []
    position = {}
    for w in walk:
        if w in position:
            for dropped in kept[position[w] + 1 :]:
                del position[dropped]
            del kept[position[w] + 1 :]
        else:
            position[w] = len(kept)
            kept.append(w)
    return kept


def _one_trial(graph, u, v, max_len, labels, blocked, forbidden_colors):
    """Return the walk found for this labeling or None"""
    start = (0, u)
    parent = {start: None}
    layer = [start]

    for _ in range(max_len):
        following = []
        for mask, x in layer:
            if x == v:
                continue
            for w, c in graph.neighbours(x):
                if w in blocked or c in forbidden_colors:
                    continue
                bit = 1 << labels[c]
                if mask & bit:
                    continue
                state = (mask | bit, w)
                if state in parent:
                    continue
                parent[state] = (mask, x)
                following.append(state)
                if w == v:
                    walk = [w]
                    step = parent[state]
                    while step is not None:
                        walk.append(step[1])
                        step = parent[step]
                    return walk[::-1]
        layer = sorted(following)
        if not layer:
            break

    return None


def find_rainbow_path_cc(
    graph,
    u,
    v,
    max_len=DEFAULT_MAX_LEN,
    trials=DEFAULT_TRIALS,
    seed=0,
    forbidden_colors=(),
    forbidden_vertices=(),
):
    """
    Look for a rainbow ``u``-``v`` path of length at most ``max_len`` with
    ``trials`` random labelings drawn from ``random.Random(seed)``.
    """
    blocked = check_pair(graph, u, v, forbidden_vertices)
    max_len = check_max_len(graph, max_len)
    if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
        raise InputError("trials must be a positive integer", got=trials)

    forbidden_colors = set(forbidden_colors)
    rng = random.Random(seed)
    colors = graph.colors

    for trial in range(trials):
        labels = {c: rng.randrange(max_len) for c in colors}
        walk = _one_trial(graph, u, v, max_len, labels, blocked, forbidden_colors)
        if walk is None:
            continue

        cert = PathCertificate.from_vertices(graph, erase_loops(walk))
        if path_problems(graph, cert, forbidden_colors, blocked):
            log.debug(lc("Rejected color coding walk", u=u, v=v, trial=trial))
            continue
        return cert

    return None
