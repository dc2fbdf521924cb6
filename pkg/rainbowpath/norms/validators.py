"""
Validators are specs that only look at specified values and either complain
or return the value untouched.

The following is available under ``rainbowpath.norms.va``.

.. code-block:: python

    from rainbowpath.norms import sb, va

    spec = sb.and_spec(sb.integer_spec(), va.greater_than(0))
"""
from . import spec_base as sb
from .errors import BadSpecValue


class Validator(sb.Spec):
    """
    Return :class:`NotSpecified` as is and pass everything else through
    ``self.validate``.
    """

    def validate(self, meta, val):
        raise NotImplementedError()

    def normalise_either(self, meta, val):
        if val is sb.NotSpecified:
            return val
        else:
            return self.validate(meta, val)


class greater_than(Validator):
    def setup(self, bound):
        self.bound = bound

    def validate(self, meta, val):
        if not val > self.bound:
            raise BadSpecValue("Value is too small", minimum_exclusive=self.bound, got=val, meta=meta)
        return val


class in_open_interval(Validator):
    """For parameters like beta and gamma that live strictly inside (low, high)"""

    def setup(self, low, high):
        self.low = low
        self.high = high

    def validate(self, meta, val):
        if not self.low < val < self.high:
            raise BadSpecValue(
                "Value must be strictly between bounds",
                low=self.low,
                high=self.high,
                got=val,
                meta=meta,
            )
        return val
