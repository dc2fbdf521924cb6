"""
rainbowpath raises subclasses of a single exception class so that callers (and
the command line mainline) can tell our errors apart from programmer mistakes.

.. code-block:: python

    from rainbowpath.errors import RainbowError

    class NoSuchColor(RainbowError):
        desc = "Color is not in the palette"

    raise NoSuchColor("Can't build a colour class", color=7, palette=[1, 2])

RainbowError instances have the following properties:

* Instantiation takes a message and arbitrary keyword arguments. A keyword
  argument called ``_errors`` is treated as a list of sub errors and is
  available as ``error.errors``. Everything else is under ``error.kwargs``.

* ``str(error)`` combines ``desc``, the message, the keyword arguments as tab
  separated ``key=value`` and any sub errors.

* ``error.as_dict()`` gives the same information as a dictionary.

* Errors are hashable, comparable and sortable on
  ``(class name, message, kwargs, errors)``.

.. autoclass:: ProgrammerError

.. autoclass:: UserQuit
"""
from functools import total_ordering


@total_ordering
class RainbowError(Exception):
    """Base class for every error rainbowpath raises on purpose"""

    desc = ""

    def __init__(self, message="", **kwargs):
        self.kwargs = kwargs
        self.errors = kwargs.get("_errors", [])
        if "_errors" in kwargs:
            del kwargs["_errors"]
        self.message = message
        super().__init__(message)

    def __str__(self):
        message = self.oneline()
        if self.errors:
            es = []
            for error in self.errors:
                s = "\n\t".join(str(error).split("\n"))
                es.append(f"{s}\n-------")
            e = "\n\t".join(es)
            message = f"{message}\nerrors:\n=======\n\n\t{e}"
        return message

    def as_dict(self):
        res = {}
        full = self.full_message()
        if full:
            res["message"] = full
        res.update((k, self.formatted_val(k, v)) for k, v in self.kwargs.items())

        if self.errors:
            res["errors"] = [
                repr(e) if not hasattr(e, "as_dict") else e.as_dict() for e in self.errors
            ]
        return res

    def __repr__(self):
        s = ", ".join(f"{k}={v}" for k, v in self.kwargs.items())
        return f"{self.__class__.__name__}({self.message}, {s}, _errors={self.errors})"

    def __hash__(self):
        return hash(self.as_tuple(for_hash=True))

    def full_message(self):
        """Combine desc and message, either of which may be empty"""
        if self.desc and self.message:
            return f"{self.desc}. {self.message}"
        return self.desc or self.message

    def oneline(self):
        """Get back the error as a oneliner"""
        info = "\t".join(
            f"{k}={self.formatted_val(k, v)}" for k, v in sorted(self.kwargs.items())
        )
        full = self.full_message()
        if not full:
            return info
        if info:
            return f'"{full}"\t{info}'
        return f'"{full}"'

    def formatted_val(self, key, val):
        """Graphs and certificates know how to shorten themselves for error output"""
        if not hasattr(val, "rainbow_error_format"):
            return val
        try:
            return val.rainbow_error_format(key)
        except Exception as error:
            return f"<|Failed to format val for exception: val={val!r}, error={error}|>"

    def __eq__(self, error):
        if error.__class__ != self.__class__ or error.message != self.message:
            return False

        self_kwargs = self.as_tuple(formatted=True)[2]
        error_kwargs = error.as_tuple(formatted=True)[2]
        return error_kwargs == self_kwargs and sorted(self.errors) == sorted(error.errors)

    def __lt__(self, error):
        return self.as_tuple(formatted=True) < error.as_tuple(formatted=True)

    def as_tuple(self, for_hash=False, formatted=False):
        kwarg_items = sorted(self.kwargs.items())
        if formatted:
            kwarg_items = sorted((key, self.formatted_val(key, val)) for key, val in kwarg_items)
        if for_hash:
            kwarg_items = [(key, str(val)) for key, val in kwarg_items]
        return (self.__class__.__name__, self.message, tuple(kwarg_items), tuple(self.errors))


class ProgrammerError(Exception):
    """
    A non RainbowError exception for when the programmer should have prevented
    something happening
    """


class UserQuit(RainbowError):
    """Raise this if the user quit the application"""

    desc = "User Quit"


class InputError(RainbowError):
    desc = "Bad input"


class GraphError(RainbowError):
    desc = "Invalid edge-colored graph"


class SelfLoop(GraphError):
    desc = "Self loops are not allowed"


class MultiEdge(GraphError):
    desc = "At most one edge per vertex pair"


class GraphParseError(GraphError):
    desc = "Couldn't parse graph"


class ThresholdViolated(RainbowError):
    desc = "Minimum color degree is below the threshold"


class GenerationError(RainbowError):
    desc = "Couldn't generate instance"


class InvalidCertificate(RainbowError):
    desc = "Certificate doesn't hold against the graph"


class SearchBudgetExceeded(RainbowError):
    desc = "Search expanded too many nodes"


class InvariantBreach(RainbowError):
    desc = "Invariant doesn't hold"
