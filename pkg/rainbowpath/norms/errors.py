"""
These errors are all importable from ``rainbowpath.norms``
"""
from rainbowpath.errors import RainbowError


class BadSpec(RainbowError):
    desc = "Something wrong with this specification"


class BadSpecValue(BadSpec):
    desc = "Bad value"
