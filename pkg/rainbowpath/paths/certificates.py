"""
Certificates returned by the searches and the routines that check them
against a host graph without trusting the search that produced them.

.. code-block:: python

    from rainbowpath.paths.certificates import PathCertificate, check_path

    cert = PathCertificate(vertices=(0, 3, 1), colors=(4, 9), flavor="rainbow")
    check_path(graph, cert)  # raises InvalidCertificate if it doesn't hold
    print(cert.format())  # 0 -4-> 3 -9-> 1
"""
from rainbowpath.errors import InvalidCertificate
from rainbowpath.norms import dictobj

FLAVORS = ("rainbow", "proper")


class PathCertificate(dictobj):
    fields = ["vertices", "colors", ("flavor", "rainbow")]

    @classmethod
    def from_vertices(kls, graph, vertices, flavor="rainbow"):
        vertices = tuple(vertices)
        colors = tuple(graph.color(a, b) for a, b in zip(vertices, vertices[1:]))
        return kls(vertices=vertices, colors=colors, flavor=flavor)

    @property
    def length(self):
        return len(self.colors)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    @property
    def internal_vertices(self):
        return self.vertices[1:-1]

    def format(self):
        parts = [str(self.vertices[0])]
        for c, v in zip(self.colors, self.vertices[1:]):
            parts.append(f"-{c}-> {v}")
        return " ".join(parts)

    def rainbow_error_format(self, key):
        return self.format()


class KConnectCertificate(dictobj):
    """``k`` paths between ``u`` and ``v``"""

    fields = ["u", "v", "paths"]

    @property
    def k(self):
        return len(self.paths)

    @property
    def colors(self):
        return tuple(c for path in self.paths for c in path.colors)

    def lines(self):
        return [path.format() for path in self.paths]

    def rainbow_error_format(self, key):
        return f"<{self.k} paths {self.u} to {self.v}>"


def path_problems(graph, cert, forbidden_colors=(), forbidden_vertices=()):
    """Return a list of reasons the certificate is wrong, empty when it holds"""
    problems = []
    vertices = tuple(cert.vertices)
    colors = tuple(cert.colors)

    if cert.flavor not in FLAVORS:
        return [f"unknown flavor {cert.flavor}"]
    if len(vertices) < 2:
        return ["a path needs two vertices"]
    if len(colors) != len(vertices) - 1:
        return ["expected one color per edge"]
    if any(not 0 <= v < graph.n for v in vertices):
        return ["vertex out of range"]
    if len(set(vertices)) != len(vertices):
        problems.append("vertices repeat")

    for (a, b), c in zip(zip(vertices, vertices[1:]), colors):
        actual = graph.color(a, b)
        if actual is None:
            problems.append(f"no edge {a}-{b}")
        elif actual != c:
            problems.append(f"edge {a}-{b} has color {actual} not {c}")

    if cert.flavor == "rainbow":
        if len(set(colors)) != len(colors):
            problems.append("colors repeat")
    elif any(x == y for x, y in zip(colors, colors[1:])):
        problems.append("consecutive colors repeat")

    forbidden_colors = set(forbidden_colors)
    if forbidden_colors.intersection(colors):
        problems.append("uses a forbidden color")
    if set(forbidden_vertices).intersection(vertices):
        problems.append("uses a forbidden vertex")
    return problems


def check_path(graph, cert, forbidden_colors=(), forbidden_vertices=()):
    problems = path_problems(graph, cert, forbidden_colors, forbidden_vertices)
    if problems:
        raise InvalidCertificate(problems=problems, certificate=cert)
    return cert


def kconnect_problems(graph, cert):
    problems = []
    for path in cert.paths:
        if (path.start, path.end) != (cert.u, cert.v):
            problems.append(f"path {path.format()} doesn't join {cert.u} and {cert.v}")
        if path.flavor != "rainbow":
            problems.append("k-connectivity paths are rainbow paths")
        problems.extend(path_problems(graph, path))

    seen = set()
    for path in cert.paths:
        internal = set(path.internal_vertices)
        if seen & internal:
            problems.append("paths share internal vertices")
        seen |= internal

    colors = cert.colors
    if len(set(colors)) != len(colors):
        problems.append("union of paths is not rainbow")
    return problems


def check_kconnect(graph, cert):
    problems = kconnect_problems(graph, cert)
    if problems:
        raise InvalidCertificate(problems=problems, certificate=cert)
    return cert
