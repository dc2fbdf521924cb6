"""
Pieces shared by the path searches: argument checking, the distance lower
bound used for pruning and the :class:`SearchOptions` record.
"""
from collections import deque

from rainbowpath.errors import InputError
from rainbowpath.norms import dictobj, sb, va

DEFAULT_MAX_LEN = 9
DEFAULT_TRIALS = 100
ENGINES = ("exact", "cc")

UNREACHABLE = float("inf")


class SearchOptions(dictobj.Spec):
    max_len = dictobj.Field(
        sb.and_spec(sb.integer_spec(), va.greater_than(0)),
        default=DEFAULT_MAX_LEN,
        help="Longest path to look for",
    )
    engine = dictobj.Field(
        sb.string_choice_spec(ENGINES), default="exact", help="exact search or color coding"
    )
    trials = dictobj.Field(
        sb.and_spec(sb.integer_spec(), va.greater_than(0)),
        default=DEFAULT_TRIALS,
        help="Random labelings tried by color coding",
    )
    seed = dictobj.Field(sb.integer_spec, default=0, help="Seed for color coding")
    node_cap = dictobj.NullableField(
        sb.and_spec(sb.integer_spec(), va.greater_than(0)),
        help="Exact search gives up after expanding this many nodes",
    )


def check_pair(graph, u, v, forbidden_vertices=()):
    graph.check_vertex(u)
    graph.check_vertex(v)
    if u == v:
        raise InputError("Paths join two distinct vertices", vertex=u)
    blocked = set(forbidden_vertices)
    if u in blocked or v in blocked:
        raise InputError("Endpoints can't be forbidden", u=u, v=v)
    return blocked


def check_max_len(graph, max_len):
    if max_len is None:
        return max(graph.n - 1, 1)
    if isinstance(max_len, bool) or not isinstance(max_len, int) or max_len < 1:
        raise InputError("max_len must be a positive integer", got=max_len)
    return max_len


def distances_to(graph, target, blocked=(), forbidden_colors=()):
    """
    Unweighted BFS distances to ``target`` ignoring blocked vertices and
    forbidden colors. Vertices that can't reach it get ``UNREACHABLE``.
    """
    blocked = set(blocked)
    forbidden_colors = set(forbidden_colors)
    dist = [UNREACHABLE] * graph.n
    dist[target] = 0
    queue = deque([target])
    while queue:
        x = queue.popleft()
        for y, c in graph.neighbours(x):
            if dist[y] is UNREACHABLE and y not in blocked and c not in forbidden_colors:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def color_mask(graph, colors):
    mask = 0
    for c in colors:
        mask |= graph.color_bit.get(c, 0)
    return mask
