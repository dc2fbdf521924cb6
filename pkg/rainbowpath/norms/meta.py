"""
``Meta`` keeps track of where we are in the value being normalised so errors
can say which part of a configuration was wrong.

.. autoclass:: Meta
"""


class Meta(object):
    """
    ``everything`` is the whole configuration being normalised and ``path`` is
    a list of ``(name, extra)`` parts leading to the current value.

    .. code-block:: python

        meta = Meta.empty().at("n_list").indexed_at(2)
        assert meta.path == "n_list[2]"
    """

    @classmethod
    def empty(kls):
        """Return a Meta with empty configuration and empty path"""
        return kls({}, [])

    def __init__(self, everything, path):
        self._path = path
        if isinstance(self._path, str):
            self._path = [(self._path, "")]

        self.everything = everything

    def indexed_at(self, index):
        """Return a new instance with ``("", "[index]")`` added to the path"""
        return self.new_path([("", f"[{index}]")])

    def at(self, val):
        """Return a new instance with ``(val, "")`` added to the path"""
        return self.new_path([(val, "")])

    def new_path(self, part):
        return self.__class__(self.everything, self._path + part)

    def __eq__(self, other):
        return self.everything == other.everything and self.path == other.path

    def __hash__(self):
        return hash(self.path)

    def __lt__(self, other):
        return self.path < other.path

    @property
    def path(self):
        """Return the path as a string"""
        complete = []
        for name, extra in self._path:
            if name and complete:
                complete.append(".")
            if name or extra:
                complete.append(f"{name}{extra}")
        return "".join(complete)

    def rainbow_error_format(self, key):
        return f"{{path={self.path}}}"

    def __repr__(self):
        return f"<Meta {self.path}>"
