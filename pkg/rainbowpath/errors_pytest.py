"""
.. autofunction:: assertRaises
"""
import re
import traceback

from rainbowpath.errors import RainbowError


class NoRegex:
    """Default for when the message isn't checked"""


class assertRaises:
    """
    Assert that something raises a particular type of error.

    The error must be a subclass of ``expected_kls``, have a message matching
    ``expected_msg_regex`` and have at least the keyword arguments given.
    ``_errors`` is compared against the sub errors, ignoring order.

    .. code-block:: python

        from rainbowpath.errors import InputError
        from rainbowpath.errors_pytest import assertRaises

        def test_something():
            with assertRaises(InputError, "Vertex out of range", vertex=12):
                color_degree(graph, 12)
    """

    def __init__(self, expected_kls, expected_msg_regex=NoRegex, **values):
        self.expected_kls = expected_kls
        self.regex = None if expected_msg_regex is NoRegex else re.compile(expected_msg_regex)
        self.errors = values.pop("_errors", None)
        self.values = values

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        __tracebackhide__ = True

        if exc_type is None:
            raise AssertionError(
                f"Expected an exception to be raised\n{self.expectation()}"
            ) from None

        try:
            assertSameError(exc, self.expected_kls, self.regex, self.values, self.errors)
        except AssertionError as assertion:
            print(self.report(exc, tb))
            raise assertion from None

        return True

    def expectation(self):
        lines = [f"  class: {self.expected_kls}"]
        if self.regex is not None:
            lines.append(f"  msg: {self.regex.pattern}")
        lines.append(f"  values: {self.values}")
        for error in self.errors or []:
            lines.append(f"  sub error: {error}")
        return "\n".join(lines)

    def report(self, exc, tb):
        bar = "!" * 20
        return "\n".join(
            [
                bar,
                "Exception:",
                str(exc),
                "",
                "Traceback:",
                "".join(traceback.format_tb(tb)),
                "Expected:",
                self.expectation(),
                bar,
            ]
        )


def assertSameError(error, expected_kls, regex, values, errors):
    """Assert that error is expected"""
    assert isinstance(error, expected_kls), "Error is wrong subclass"

    if not isinstance(error, RainbowError):
        if regex is not None:
            assert regex.search(str(error)), "Incorrect message"
        return

    if regex is not None:
        assert regex.search(error.message), "Incorrect message"

    missing = set(values) - set(error.kwargs)
    assert not missing, f"Missing values: {sorted(missing)}"

    different = {key: error.kwargs[key] for key, want in values.items() if error.kwargs[key] != want}
    assert not different, f"Mismatched values: {different}"

    if errors:
        assert sorted(error.errors) == sorted(errors), "Errors list is different"
