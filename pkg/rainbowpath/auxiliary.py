"""
Auxiliary digraphs built from the color classes of an edge-colored graph and
the diagnostics computed from them.

``build_DG``
    One arc ``v -> w`` per color ``alpha`` at ``v`` when ``d_alpha(v)**2 <= n``,
    pointing at the smallest alpha neighbour of ``v``.

``build_Dprime``
    As ``build_DG`` plus one arc for every remaining (color, vertex) pair,
    preferring a head inside a given vertex set ``U``. Out degree equals color
    degree.

``build_Gstar`` / ``build_Dstar``
    Split a digraph into its reciprocated pairs and its one way arcs.

``classify_extremal`` / ``dominant_analysis``
    The type 1 / type 2 extremality checks and the in-degree based vertex
    classification with dominant in-colors and rainbow links.

Every square root comparison is done on integers or Fractions by squaring so
that boundaries at perfect squares are exact.
"""
import logging
import math
import random
from collections import Counter
from fractions import Fraction

import networkx as nx
from networkx.algorithms.community import kernighan_lin_bisection

from rainbowpath.errors import InputError
from rainbowpath.logging import lc
from rainbowpath.norms import dictobj

log = logging.getLogger("rainbowpath.auxiliary")

KINDS = ("D_G", "D_star", "D_prime")

# Exhaustive bipartitions are used up to this many vertices
EXACT_PARTITION_LIMIT = 18
PARTITION_RESTARTS = 20
PARTITION_SEED = 2024


class AuxDigraph:
    """
    A digraph on ``0..n-1`` whose arcs remember the color of the edge they came
    from.

    n
        Vertex count

    arcs
        Iterable of ``(tail, head, color)``

    kind
        One of ``D_G``, ``D_star`` or ``D_prime``
    """

    def __init__(self, n, arcs, kind):
        if kind not in KINDS:
            raise InputError("Unknown digraph kind", kind=kind, available=list(KINDS))

        self.n = n
        self.kind = kind
        self.arcs = tuple(sorted(set(arcs)))

        self._out = [[] for _ in range(n)]
        self._in = [[] for _ in range(n)]
        pairs = set()
        for u, v, c in self.arcs:
            if u == v:
                raise InputError("Digraphs have no self arcs", vertex=u)
            if (u, v) in pairs:
                raise InputError("At most one arc per ordered pair", arc=(u, v))
            pairs.add((u, v))
            self._out[u].append((v, c))
            self._in[v].append((u, c))

        if kind in ("D_G", "D_prime"):
            for u in range(n):
                colors = [c for _, c in self._out[u]]
                if len(colors) != len(set(colors)):
                    raise InputError("Out arcs of a vertex must have distinct colors", vertex=u)
        else:
            for u, v in pairs:
                if (v, u) in pairs:
                    raise InputError("D_star is an oriented graph", pair=(min(u, v), max(u, v)))

        self._pairs = frozenset(pairs)

    def __repr__(self):
        return f"<AuxDigraph {self.kind} n={self.n} arcs={len(self.arcs)}>"

    def __eq__(self, other):
        return (
            isinstance(other, AuxDigraph)
            and (self.n, self.kind, self.arcs) == (other.n, other.kind, other.arcs)
        )

    def __hash__(self):
        return hash((self.n, self.kind, self.arcs))

    def rainbow_error_format(self, key):
        return repr(self)

    def has_arc(self, u, v):
        return (u, v) in self._pairs

    def out_arcs(self, v):
        return self._out[v]

    def in_arcs(self, v):
        return self._in[v]

    def out_degree(self, v):
        return len(self._out[v])

    def in_degree(self, v):
        return len(self._in[v])

    def in_neighbours(self, v):
        return [u for u, _ in self._in[v]]

    def min_out_degree(self):
        if self.n == 0:
            return 0
        return min(len(out) for out in self._out)

    def lines(self):
        return [f"{u} {v} {c}" for u, v, c in self.arcs]


class MutualGraph:
    """Undirected graph of the pairs present as arcs in both directions"""

    def __init__(self, n, edges):
        self.n = n
        self.edges = tuple(sorted(edges))
        self._adjacent = [dict() for _ in range(n)]
        for u, v, c in self.edges:
            self._adjacent[u][v] = c
            self._adjacent[v][u] = c

    def __repr__(self):
        return f"<MutualGraph n={self.n} edges={len(self.edges)}>"

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        return len(self._adjacent[v])

    def adjacent(self, v):
        return self._adjacent[v]

    def induced_edge_count(self, vertices):
        vertices = set(vertices)
        return sum(1 for u, v, _ in self.edges if u in vertices and v in vertices)

    def induced_colors(self, vertices):
        vertices = set(vertices)
        return {c for u, v, c in self.edges if u in vertices and v in vertices}

    def is_properly_colored(self):
        for v in range(self.n):
            colors = list(self._adjacent[v].values())
            if len(colors) != len(set(colors)):
                return False
        return True

    def lines(self):
        return [f"{u} {v} {c}" for u, v, c in self.edges]


########################
###   BUILDERS
########################


def _small_class(degree, n):
    return degree * degree <= n


def build_DG(graph):
    arcs = []
    for v in graph.vertices:
        for c, neighbours in graph.color_neighbours(v).items():
            if _small_class(len(neighbours), graph.n):
                arcs.append((v, neighbours[0], c))
    return AuxDigraph(graph.n, arcs, "D_G")


def build_Dprime(graph, U=()):
    U = set(U)
    for u in U:
        graph.check_vertex(u)

    arcs = []
    for v in graph.vertices:
        for c, neighbours in graph.color_neighbours(v).items():
            if _small_class(len(neighbours), graph.n):
                arcs.append((v, neighbours[0], c))
            else:
                preferred = [w for w in neighbours if w in U]
                arcs.append((v, (preferred or neighbours)[0], c))
    return AuxDigraph(graph.n, arcs, "D_prime")


def build_Gstar(digraph):
    if digraph.kind not in ("D_G", "D_prime"):
        raise InputError("G* is built from D_G or D_prime", kind=digraph.kind)
    edges = [(u, v, c) for u, v, c in digraph.arcs if u < v and digraph.has_arc(v, u)]
    return MutualGraph(digraph.n, edges)


def build_Dstar(digraph):
    if digraph.kind not in ("D_G", "D_prime"):
        raise InputError("D* is built from D_G or D_prime", kind=digraph.kind)
    arcs = [(u, v, c) for u, v, c in digraph.arcs if not digraph.has_arc(v, u)]
    return AuxDigraph(digraph.n, arcs, "D_star")


def arc_partition_holds(digraph, dstar=None, gstar=None):
    """Every arc is in exactly one of D* and the symmetrised G*"""
    dstar = dstar or build_Dstar(digraph)
    gstar = gstar or build_Gstar(digraph)
    from_dstar = Counter((u, v) for u, v, _ in dstar.arcs)
    from_gstar = Counter()
    for u, v, _ in gstar.edges:
        from_gstar[(u, v)] += 1
        from_gstar[(v, u)] += 1
    combined = from_dstar + from_gstar
    return all(count == 1 for count in combined.values()) and set(combined) == {
        (u, v) for u, v, _ in digraph.arcs
    }


class OutdegreeSplit(dictobj):
    fields = ["per_vertex", "min_dstar_out", "min_gstar_degree", "min_out", "holds"]


def outdegree_split(digraph):
    """
    For each vertex ``(d+_{D*}(v), d_{G*}(v), d+_D(v))``; the first two always
    add up to the third.
    """
    dstar = build_Dstar(digraph)
    gstar = build_Gstar(digraph)
    per_vertex = [
        (dstar.out_degree(v), gstar.degree(v), digraph.out_degree(v)) for v in range(digraph.n)
    ]
    return OutdegreeSplit(
        per_vertex=per_vertex,
        min_dstar_out=min((a for a, _, _ in per_vertex), default=0),
        min_gstar_degree=min((b for _, b, _ in per_vertex), default=0),
        min_out=min((c for _, _, c in per_vertex), default=0),
        holds=all(a + b == c for a, b, c in per_vertex),
    )


def exceeds_half_minus_root(value, n):
    """Exactly decide ``value > n/2 - sqrt(n)``"""
    gap = Fraction(n, 2) - value
    return gap < 0 or gap * gap < n


def outdegree_margin(digraph):
    """``min out degree - (n/2 - sqrt(n))`` as a float for reporting"""
    n = digraph.n
    return digraph.min_out_degree() - (n / 2 - math.sqrt(n))


########################
###   EXTREMALITY
########################


def normalise_beta(beta, name="beta"):
    if isinstance(beta, bool) or not isinstance(beta, (int, float, Fraction)):
        raise InputError(f"{name} must be a number", got=beta)
    beta = Fraction(beta)
    if not 0 < beta < 1:
        raise InputError(f"{name} must be strictly between 0 and 1", got=str(beta))
    return beta


class Type1Witness(dictobj):
    fields = ["V1", "V2", "cross_arcs"]


class Type2Count(dictobj):
    fields = ["gstar_edges", "bound"]


class ExtremalReport(dictobj):
    """
    beta
        The extremality parameter as a Fraction

    type1
        The best :class:`Type1Witness` found, or None when no balanced split
        was examined

    type1_exact
        True when every bipartition was examined

    type2
        :class:`Type2Count` comparing ``|E(G*)|`` with ``beta * n**2``
    """

    fields = ["n", "beta", "type1", "type1_exact", "type2", "is_type1", "is_type2"]

    @property
    def extremal(self):
        return self.is_type1 or self.is_type2

    def lines(self):
        lines = [
            f"n={self.n}",
            f"beta={self.beta}",
            f"type2_gstar_edges={self.type2.gstar_edges}",
            f"type2_bound={self.type2.bound}",
            f"type2={self.is_type2}",
        ]
        if self.type1 is None:
            lines.append("type1_witness=none")
        else:
            lines.extend(
                [
                    f"type1_V1={','.join(str(v) for v in self.type1.V1)}",
                    f"type1_V2={','.join(str(v) for v in self.type1.V2)}",
                    f"type1_cross_arcs={self.type1.cross_arcs}",
                ]
            )
        found = "true" if self.is_type1 else ("false" if self.type1_exact else "none found")
        lines.append(f"type1={found}")
        lines.append(f"type1_exact={self.type1_exact}")
        return lines


def _arc_weights(digraph):
    weights = Counter()
    for u, v, _ in digraph.arcs:
        weights[(min(u, v), max(u, v))] += 1
    return weights


def _cross(weights, side):
    return sum(w for (u, v), w in weights.items() if side[u] != side[v])


def _witness(n, side, cross):
    first = tuple(v for v in range(n) if side[v] == side[0])
    second = tuple(v for v in range(n) if side[v] != side[0])
    return Type1Witness(V1=first, V2=second, cross_arcs=cross)


def _better(candidate, best):
    if best is None:
        return True
    return (candidate.cross_arcs, candidate.V1) < (best.cross_arcs, best.V1)


def _exhaustive_split(n, weights, min_size):
    """Gray code walk over every bipartition with vertex 0 on side 0"""
    if n < 2:
        return None

    neighbours = [[] for _ in range(n)]
    for (u, v), w in weights.items():
        neighbours[u].append((v, w))
        neighbours[v].append((u, w))

    side = [0] * n
    size_one = 0
    cross = 0
    best = None
    best_cross = None

    for step in range(1 << (n - 1)):
        if step:
            flip = (step & -step).bit_length()
            same = sum(w for y, w in neighbours[flip] if side[y] == side[flip])
            other = sum(w for y, w in neighbours[flip] if side[y] != side[flip])
            cross += same - other
            side[flip] ^= 1
            size_one += 1 if side[flip] else -1

        if min(size_one, n - size_one) < min_size:
            continue
        if best_cross is not None and cross > best_cross:
            continue

        candidate = _witness(n, side, cross)
        if _better(candidate, best):
            best = candidate
            best_cross = cross

    return best


def _improve(n, weights, side, min_size):
    """Single vertex moves while they lower the cut and keep both sides big enough"""
    neighbours = [[] for _ in range(n)]
    for (u, v), w in weights.items():
        neighbours[u].append((v, w))
        neighbours[v].append((u, w))

    improved = True
    while improved:
        improved = False
        for x in range(n):
            sizes = [side.count(0), side.count(1)]
            if sizes[side[x]] - 1 < min_size:
                continue
            same = sum(w for y, w in neighbours[x] if side[y] == side[x])
            other = sum(w for y, w in neighbours[x] if side[y] != side[x])
            if same < other:
                side[x] ^= 1
                improved = True
    return side


def _local_search_split(n, weights, min_size):
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_weighted_edges_from((u, v, w) for (u, v), w in weights.items())

    rng = random.Random(PARTITION_SEED)
    best = None
    for _ in range(PARTITION_RESTARTS):
        first, _ = kernighan_lin_bisection(graph, weight="weight", seed=rng.randrange(2**32))
        side = [0 if v in first else 1 for v in range(n)]
        side = _improve(n, weights, side, min_size)
        if min(side.count(0), side.count(1)) < min_size:
            continue
        candidate = _witness(n, side, _cross(weights, side))
        if _better(candidate, best):
            best = candidate
    return best


def classify_extremal(graph, digraph, beta):
    """
    Decide type 2 exactly and search for a type 1 witness.

    The type 1 search is exhaustive up to 18 vertices and otherwise uses
    Kernighan-Lin bisections from 20 seeded restarts followed by single
    vertex moves, so above that size a missing witness is only "none found".
    """
    beta = normalise_beta(beta)
    n = graph.n
    bound = beta * n * n

    gstar = build_Gstar(digraph)
    type2 = Type2Count(gstar_edges=gstar.m, bound=bound)

    min_size = max(math.ceil((Fraction(1, 2) - beta) * n), 1)
    weights = _arc_weights(digraph)
    exact = n <= EXACT_PARTITION_LIMIT
    if exact:
        witness = _exhaustive_split(n, weights, min_size)
    else:
        witness = _local_search_split(n, weights, min_size) if n >= 2 else None

    report = ExtremalReport(
        n=n,
        beta=beta,
        type1=witness,
        type1_exact=exact,
        type2=type2,
        is_type1=witness is not None and witness.cross_arcs <= bound,
        is_type2=gstar.m <= bound,
    )
    log.debug(lc("Classified extremality", n=n, type1=report.is_type1, type2=report.is_type2))
    return report


########################
###   DOMINANT COLORS
########################


def root_threshold(n):
    """Smallest integer x with x >= 2 * sqrt(n)"""
    x = math.isqrt(4 * n)
    return x if x * x >= 4 * n else x + 1


def rainbow_link_split(color_counts, needed):
    """
    Split colors into two groups each covering at least ``needed`` arcs.

    ``color_counts`` is ``{color: number of in-arcs}``. Returns
    ``(group_one, group_two)`` as sorted tuples or None. Subset sums are
    tracked exactly so the answer doesn't depend on the multiplicity profile.
    """
    total = sum(color_counts.values())
    if total < 2 * needed:
        return None

    reachable = {0: ()}
    for color in sorted(color_counts):
        count = color_counts[color]
        for s, chosen in list(reachable.items()):
            if s + count not in reachable:
                reachable[s + count] = chosen + (color,)

    for s in sorted(reachable):
        if s >= needed and total - s >= needed:
            first = tuple(sorted(reachable[s]))
            second = tuple(sorted(set(color_counts) - set(first)))
            return first, second
    return None


def dominant_color(counts, needed_squared_budget):
    """The most common color if every other color together is within budget"""
    if not counts:
        return None
    color, most = min(counts.items(), key=lambda item: (-item[1], item[0]))
    rest = sum(counts.values()) - most
    if rest * rest <= needed_squared_budget:
        return color
    return None


class DominantColorTable(dictobj):
    """
    U
        Vertices with in-degree at least ``(1/2 - sqrt(beta)) n``

    W
        Everything else

    W_prime
        Vertices of W with at least ``gamma n`` in-neighbours in U

    dominant
        ``{u: c_u}`` for vertices in U whose in-arcs from U are all but at
        most ``2 sqrt(n)`` of one color

    rainbow_links
        ``{u: (colors_one, colors_two)}`` for vertices in U that are rainbow
        links, with the witness color split

    C1 / C2 / ratio
        The dominant colors, the remaining colors on ``G*[U]`` and
        ``|E(G*[U])| / |U|``
    """

    fields = [
        "U",
        "W",
        "W_prime",
        "dominant",
        "rainbow_links",
        "beta",
        "gamma",
        "C1",
        "C2",
        "ratio",
    ]

    def lines(self):
        def join(vals):
            return ",".join(str(v) for v in vals)

        lines = [
            f"beta={self.beta}",
            f"gamma={self.gamma}",
            f"U={join(self.U)}",
            f"W={join(self.W)}",
            f"W_prime={join(self.W_prime)}",
            f"C1={join(self.C1)}",
            f"C2={join(self.C2)}",
            f"ratio={self.ratio}",
        ]
        for u in self.U:
            dominant = self.dominant.get(u)
            link = self.rainbow_links.get(u)
            lines.append(
                f"vertex={u}\tdominant={'none' if dominant is None else dominant}"
                f"\trainbow_link={link is not None}"
            )
        return lines


def _in_degree_is_large(in_degree, n, beta):
    gap = Fraction(n, 2) - in_degree
    return gap <= 0 or gap * gap <= beta * n * n


def dominant_analysis(graph, digraph, beta, gamma=None):
    """
    Classify vertices by in-degree in ``digraph`` and find dominant in-colors.

    ``gamma`` defaults to ``sqrt(beta) / 16`` and that default is compared
    exactly.
    """
    beta = normalise_beta(beta)
    if gamma is not None:
        gamma = normalise_beta(gamma, name="gamma")

    n = graph.n
    U = tuple(v for v in range(n) if _in_degree_is_large(digraph.in_degree(v), n, beta))
    in_U = set(U)
    W = tuple(v for v in range(n) if v not in in_U)

    def enough_from_U(count):
        if gamma is None:
            return 256 * count * count >= beta * n * n
        return count >= gamma * n

    W_prime = tuple(
        w for w in W if enough_from_U(sum(1 for z in digraph.in_neighbours(w) if z in in_U))
    )

    needed = root_threshold(n)
    dominant = {}
    rainbow_links = {}
    for u in U:
        from_U = Counter(c for z, c in digraph.in_arcs(u) if z in in_U)
        color = dominant_color(from_U, 4 * n)
        if color is not None:
            dominant[u] = color

        split = rainbow_link_split(Counter(c for _, c in digraph.in_arcs(u)), needed)
        if split is not None:
            rainbow_links[u] = split

    gstar = build_Gstar(digraph) if digraph.kind != "D_star" else MutualGraph(n, [])
    C1 = tuple(sorted(set(dominant.values())))
    C2 = tuple(sorted(gstar.induced_colors(U) - set(C1)))
    ratio = Fraction(gstar.induced_edge_count(U), len(U)) if U else None

    return DominantColorTable(
        U=U,
        W=W,
        W_prime=W_prime,
        dominant=dominant,
        rainbow_links=rainbow_links,
        beta=beta,
        gamma=math.sqrt(beta) / 16 if gamma is None else gamma,
        C1=C1,
        C2=C2,
        ratio=ratio,
    )

