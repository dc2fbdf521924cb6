"""
Deterministic instance generators.

``fm_example``
    A regular tournament on ``n - 2`` vertices (circulant orientation) plus two
    vertices ``x = n - 2`` and ``y = n - 1`` pointing at every core vertex.
    Every arc ``a -> b`` becomes an edge colored ``b``, so each color class is
    a star centered at its head. Minimum color degree is ``(n - 1) / 2`` and
    ``x``, ``y`` have no properly colored path between them.

``two_clique_matchings``
    Two rainbow cliques on ``n / 2`` vertices joined by ``k - 1`` shifted
    perfect matchings, each matching in a fresh color. Minimum color degree is
    ``n / 2 + k - 2`` and the graph is not rainbow k-connected.

``matching_union``
    The first ``n - 2`` rounds of the circle method 1-factorization of
    ``K_n``, one color per round. No rainbow spanning tree.

``random_colored``
    A random graph and coloring repaired until the color degree target holds.

Fresh colors are handed out in ascending order: core head vertices first,
then matchings.
"""
import logging
import math
import random
from fractions import Fraction
from itertools import combinations

from rainbowpath.errors import GenerationError, InputError
from rainbowpath.graph import EdgeColoredGraph
from rainbowpath.logging import lc
from rainbowpath.norms import dictobj, sb, va

log = logging.getLogger("rainbowpath.generators")

FAMILIES = ("fm_example", "two_clique_matchings", "matching_union", "random_colored")


def _check_int(name, val, minimum):
    if isinstance(val, bool) or not isinstance(val, int) or val < minimum:
        raise InputError(f"{name} must be an integer of at least {minimum}", got=val)


def circulant_tournament(size):
    """Arcs ``(i, j)`` with ``(j - i) mod size`` in ``1..(size - 1) / 2``"""
    if size % 2 == 0:
        raise InputError("Regular tournaments need an odd number of vertices", size=size)
    half = (size - 1) // 2
    return [(i, (i + step) % size) for i in range(size) for step in range(1, half + 1)]


def gen_fm_example(n):
    _check_int("n", n, 5)
    if n % 2 == 0:
        raise InputError("The example needs an odd number of vertices", n=n)

    core = n - 2
    x, y = n - 2, n - 1
    arcs = circulant_tournament(core)
    arcs.extend((z, w) for z in (x, y) for w in range(core))
    return EdgeColoredGraph(n, [(a, b, b) for a, b in arcs])


def shifted_matchings(half, count):
    """``count`` disjoint perfect matchings ``i <-> half + (i + j) mod half``"""
    return [[(i, half + (i + j) % half) for i in range(half)] for j in range(count)]


def gen_two_clique_matchings(n, k):
    _check_int("n", n, 4)
    _check_int("k", k, 1)
    if n % 2:
        raise InputError("Two equal cliques need an even number of vertices", n=n)
    half = n // 2
    if k - 1 > half:
        raise InputError("Only n/2 disjoint perfect matchings fit between the cliques", n=n, k=k)

    edges = []
    color = 0
    for offset in (0, half):
        for a, b in combinations(range(offset, offset + half), 2):
            edges.append((a, b, color))
            color += 1

    for matching in shifted_matchings(half, k - 1):
        edges.extend((a, b, color) for a, b in matching)
        color += 1

    return EdgeColoredGraph(n, edges)


def round_robin_rounds(n):
    """The circle method: ``n - 1`` perfect matchings of ``K_n`` for even n"""
    rounds = []
    fixed = n - 1
    for r in range(n - 1):
        pairs = [(r, fixed)]
        for i in range(1, n // 2):
            a = (r + i) % (n - 1)
            b = (r - i) % (n - 1)
            pairs.append((min(a, b), max(a, b)))
        rounds.append(sorted(pairs))
    return rounds


def gen_matching_union(n):
    _check_int("n", n, 4)
    if n % 2:
        raise InputError("Perfect matchings need an even number of vertices", n=n)
    edges = []
    for color, pairs in enumerate(round_robin_rounds(n)[: n - 2]):
        edges.extend((a, b, color) for a, b in pairs)
    return EdgeColoredGraph(n, edges)


class _RandomColoring:
    def __init__(self, n, palette_size, rng):
        self.n = n
        self.palette = list(range(palette_size))
        self.rng = rng
        self.colors = {}
        self.at = [dict() for _ in range(n)]

    def color_degree(self, v):
        return len({c for c in self.at[v].values()})

    def count(self, v, c):
        return sum(1 for col in self.at[v].values() if col == c)

    def set(self, a, b, c):
        key = (min(a, b), max(a, b))
        self.colors[key] = c
        self.at[a][b] = c
        self.at[b][a] = c

    def missing_at(self, v):
        present = set(self.at[v].values())
        return [c for c in self.palette if c not in present]

    def pick_color(self, a, b):
        """A color missing at a, preferring one also missing at b"""
        missing_a = self.missing_at(a)
        present_b = set(self.at[b].values())
        both = [c for c in missing_a if c not in present_b]
        return self.rng.choice(both or missing_a)

    def repair(self, v):
        non_neighbours = [w for w in range(self.n) if w != v and w not in self.at[v]]
        repeated = [w for w, c in sorted(self.at[v].items()) if self.count(v, c) > 1]

        if repeated:
            # prefer recoloring an edge whose color also repeats at the far end
            safe = [w for w in repeated if self.count(w, self.at[v][w]) > 1]
            w = self.rng.choice(safe or repeated)
            self.set(v, w, self.pick_color(v, w))
        elif non_neighbours:
            w = self.rng.choice(non_neighbours)
            self.set(v, w, self.pick_color(v, w))
        else:
            return False
        return True


def gen_random_colored(n, target_delta, palette_size, seed):
    """
    Random graph, random coloring, then repair vertices below target until every
    color degree is at least ``target_delta`` or ``50 * n`` repairs were spent.
    """
    _check_int("n", n, 2)
    _check_int("palette_size", palette_size, 1)
    target = Fraction(target_delta)
    needed = math.ceil(target)
    if needed > n - 1:
        raise GenerationError("Color degree can't exceed n - 1", n=n, target=str(target))
    if needed > palette_size:
        raise GenerationError("Palette is too small for the target", palette=palette_size, target=str(target))

    rng = random.Random(seed)
    probability = min(1.0, (needed + 1) / max(n - 1, 1))
    coloring = _RandomColoring(n, palette_size, rng)
    for a, b in combinations(range(n), 2):
        if rng.random() < probability:
            coloring.set(a, b, rng.randrange(palette_size))

    for _ in range(50 * n):
        below = [v for v in range(n) if coloring.color_degree(v) < needed]
        if not below:
            break
        if not coloring.repair(below[0]):
            break
    else:
        below = [v for v in range(n) if coloring.color_degree(v) < needed]

    if below:
        log.debug(lc("Random generation gave up", n=n, target=str(target), seed=seed))
        raise GenerationError(
            "Couldn't reach the color degree target", n=n, target=str(target), seed=seed, below=len(below)
        )

    return EdgeColoredGraph(n, [(a, b, c) for (a, b), c in sorted(coloring.colors.items())])


class InstanceSpec(dictobj.Spec):
    family = dictobj.Field(sb.string_choice_spec(FAMILIES), wrapper=sb.required, help="Which generator")
    n = dictobj.Field(sb.and_spec(sb.integer_spec(), va.greater_than(1)), wrapper=sb.required)
    k = dictobj.Field(
        sb.and_spec(sb.integer_spec(), va.greater_than(0)),
        default=1,
        help="Number of matchings plus one for two_clique_matchings",
    )
    seed = dictobj.Field(sb.integer_spec, default=0, help="Seed for random_colored")
    palette = dictobj.NullableField(
        sb.and_spec(sb.integer_spec(), va.greater_than(0)),
        help="Palette size for random_colored, defaults to 2n",
    )
    target_delta = dictobj.NullableField(
        sb.fraction_spec, help="Color degree target for random_colored, defaults to n/2"
    )

    def describe(self):
        parts = [f"family={self.family}", f"n={self.n}"]
        if self.family == "two_clique_matchings":
            parts.append(f"k={self.k}")
        if self.family == "random_colored":
            parts.extend(
                [
                    f"seed={self.seed}",
                    f"palette={self.palette_size}",
                    f"target_delta={self.target}",
                ]
            )
        return " ".join(parts)

    @property
    def palette_size(self):
        return 2 * self.n if self.palette is None else self.palette

    @property
    def target(self):
        return Fraction(self.n, 2) if self.target_delta is None else Fraction(self.target_delta)


def generate(spec):
    """Build the graph an :class:`InstanceSpec` (or a dictionary of one) describes"""
    if not isinstance(spec, InstanceSpec):
        spec = InstanceSpec.FieldSpec().empty_normalise(**spec)

    if spec.family == "fm_example":
        return gen_fm_example(spec.n)
    elif spec.family == "two_clique_matchings":
        return gen_two_clique_matchings(spec.n, spec.k)
    elif spec.family == "matching_union":
        return gen_matching_union(spec.n)
    return gen_random_colored(spec.n, spec.target, spec.palette_size, spec.seed)
