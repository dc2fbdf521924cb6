"""
A specification is an object with a ``normalise(meta, val)`` method that
validates and transforms ``val``. Records built from specs (see
:mod:`rainbowpath.norms.field_spec`) are how rainbowpath reads configuration
from the command line, json files and python callers alike.

The following items are all found under ``rainbowpath.norms.sb``. For example:

.. code-block:: python

    from rainbowpath.norms import sb, Meta

    spec = sb.listof(sb.integer_spec())
    assert spec.normalise(Meta.empty(), "10,20,30") == [10, 20, 30]

.. autoclass:: NotSpecified

.. autofunction:: apply_validators

.. autoclass:: Spec
"""
from fractions import Fraction

from .errors import BadSpec, BadSpecValue


class NotSpecified(object):
    """Tell the difference between None and not specified"""

    def __repr__(self):
        return "<NotSpecified>"

    def __str__(self):
        return "<NotSpecified>"


def apply_validators(meta, val, validators, chain_value=True):
    """
    Apply a number of validators to a value.

    All validators are tried and errors are collected. If any fails, an error
    is raised, otherwise the value is returned.
    """
    errors = []
    for validator in validators:
        try:
            normalised = validator.normalise(meta, val)
        except BadSpecValue as error:
            errors.append(error)
        else:
            if chain_value:
                val = normalised

    if errors:
        raise BadSpecValue("Failed to validate", meta=meta, _errors=errors)

    return val


class Spec(object):
    """
    Default shape for a spec (specification, not test!)

    Subclasses implement one of:

    normalise_either(meta, val)
        Gets both specified values and :class:`NotSpecified`. Returning
        :class:`NotSpecified` means keep looking.

    normalise_empty(meta) or default(meta)
        Called when the value is :class:`NotSpecified`

    normalise_filled(meta, val)
        Called for every other value

    Validation errors must be subclasses of
    :class:`~rainbowpath.norms.errors.BadSpec`.
    """

    def __init__(self, *pargs, **kwargs):
        self.pargs = pargs
        self.kwargs = kwargs
        if hasattr(self, "setup"):
            self.setup(*pargs, **kwargs)

    def normalise(self, meta, val):
        either = getattr(self, "normalise_either", None)
        if either is not None:
            result = either(meta, val)
            if result is not NotSpecified:
                return result

        if val is NotSpecified:
            for hook in ("normalise_empty", "default"):
                if hasattr(self, hook):
                    return getattr(self, hook)(meta)
            return val

        if hasattr(self, "normalise_filled"):
            return self.normalise_filled(meta, val)

        raise BadSpec(
            "Spec doesn't know how to deal with this value", spec=self, meta=meta, val=val
        )


class defaulted(Spec):
    """Return ``dflt`` for :class:`NotSpecified` otherwise proxy ``spec``"""

    def setup(self, spec, dflt):
        self.spec = spec
        self.default = lambda m: dflt

    def normalise_filled(self, meta, val):
        return self.spec.normalise(meta, val)


class required(Spec):
    """Complain about :class:`NotSpecified` otherwise proxy ``spec``"""

    def setup(self, spec):
        self.spec = spec

    def normalise_empty(self, meta):
        raise BadSpecValue("Expected a value but got none", meta=meta)

    def normalise_filled(self, meta, val):
        return self.spec.normalise(meta, val)


class none_spec(Spec):
    """Only ``None`` (or nothing) is acceptable"""

    def normalise_empty(self, meta):
        return None

    def normalise_filled(self, meta, val):
        if val is not None:
            raise BadSpecValue("Expected None", meta=meta, got=type(val))
        return None


class or_spec(Spec):
    """Try each spec in turn until one doesn't raise a BadSpec"""

    def setup(self, *specs):
        self.specs = specs

    def normalise_filled(self, meta, val):
        errors = []
        for spec in self.specs:
            try:
                return spec.normalise(meta, val)
            except BadSpec as error:
                errors.append(error)
        raise BadSpecValue("Value doesn't match any of the options", meta=meta, _errors=errors)


class string_spec(Spec):
    def default(self, meta):
        return ""

    def normalise_filled(self, meta, val):
        if not isinstance(val, str):
            raise BadSpecValue("Expected a string", meta=meta, got=type(val))
        return val


class string_choice_spec(string_spec):
    """A string that is one of ``choices``"""

    def setup(self, choices, reason="Expected one of the available choices"):
        self.choices = choices
        self.reason = reason

    def normalise_filled(self, meta, val):
        val = super().normalise_filled(meta, val)
        if val not in self.choices:
            raise BadSpecValue(self.reason, available=self.choices, got=val, meta=meta)
        return val


class integer_spec(Spec):
    """
    Integers, or strings of digits (with an optional leading minus)

    .. note:: This does not handle ``NotSpecified``; wrap it in ``defaulted``.
    """

    def normalise_filled(self, meta, val):
        if isinstance(val, bool):
            raise BadSpecValue("Expected an integer", meta=meta, got=bool)
        if isinstance(val, int):
            return val
        if isinstance(val, str) and val.strip().lstrip("-").isdigit():
            return int(val.strip())
        raise BadSpecValue("Expected an integer", meta=meta, got=type(val))


class fraction_spec(Spec):
    """
    Exact rationals for thresholds such as ``n/2``

    Accepts ``int``, ``Fraction`` and strings like ``"21/2"`` or ``"7"``.
    Floats are refused so a threshold never carries rounding error.
    """

    def normalise_filled(self, meta, val):
        if isinstance(val, bool):
            raise BadSpecValue("Expected a rational number", meta=meta, got=bool)
        if isinstance(val, (int, Fraction)):
            return Fraction(val)
        if isinstance(val, str):
            try:
                return Fraction(val.strip())
            except (ValueError, ZeroDivisionError) as error:
                raise BadSpecValue(
                    "Expected a rational number like p/q", meta=meta, got=val, error=str(error)
                )
        raise BadSpecValue("Expected a rational number", meta=meta, got=type(val))


class listof(Spec):
    """
    A list of values normalised by ``spec``

    ``NotSpecified`` becomes ``[]``, a comma separated string is split and any
    other single value becomes a list of that value.
    """

    def setup(self, spec):
        self.spec = spec

    def default(self, meta):
        return []

    def normalise_filled(self, meta, val):
        if isinstance(val, str):
            val = [part for part in val.replace(" ", ",").split(",") if part]
        elif isinstance(val, (tuple, set, frozenset)):
            val = sorted(val) if isinstance(val, (set, frozenset)) else list(val)
        elif not isinstance(val, list):
            val = [val]

        result = []
        errors = []
        for index, item in enumerate(val):
            try:
                result.append(self.spec.normalise(meta.indexed_at(index), item))
            except BadSpec as error:
                errors.append(error)

        if errors:
            raise BadSpecValue(meta=meta, _errors=errors)
        return result


class dictionary_spec(Spec):
    def default(self, meta):
        return {}

    def normalise_filled(self, meta, val):
        if not isinstance(val, dict):
            raise BadSpecValue("Expected a dictionary", meta=meta, got=type(val))
        return val


class set_options(Spec):
    """
    Normalise each key of a dictionary with its own spec.

    Errors from every key are collected and raised together. Extra keys in
    ``val`` are ignored.
    """

    def setup(self, **options):
        self.options = options

    def default(self, meta):
        return {}

    def normalise_filled(self, meta, val):
        val = dictionary_spec().normalise(meta, val)

        result = {}
        errors = []

        for key, spec in self.options.items():
            nxt = val.get(key, NotSpecified)
            try:
                result[key] = spec.normalise(meta.at(key), nxt)
            except BadSpec as error:
                errors.append(error)

        if errors:
            raise BadSpecValue(meta=meta, _errors=errors)

        return result


class create_spec(Spec):
    """
    Instantiate ``kls`` from a dictionary, after running ``validators`` over
    the whole dictionary and normalising each key with the matching spec.
    """

    def setup(self, kls, *validators, **expected):
        self.kls = kls
        self.expected = expected
        self.validators = validators
        self.expected_spec = set_options(**expected)

    def default(self, meta):
        return self.normalise_filled(meta, {})

    def normalise_filled(self, meta, val):
        if isinstance(val, self.kls):
            return val

        values = self.expected_spec.normalise(meta, val)
        apply_validators(meta, values, self.validators, chain_value=False)
        return self.kls(**values)


class and_spec(Spec):
    """Normalise through each spec in turn, feeding each result to the next"""

    def setup(self, *specs):
        self.specs = specs

    def normalise_filled(self, meta, val):
        for spec in self.specs:
            val = spec.normalise(meta, val)
        return val
