"""
.. autoclass:: dictobj
"""
from . import spec_base as sb
from .field_spec import Field, NullableField

_cached_fields = {}


class Fields:
    """Knows how to turn ``*args, **kwargs`` into values for each field"""

    @classmethod
    def make(kls, fieldskls, fields):
        if fieldskls not in _cached_fields:
            _cached_fields[fieldskls] = Fields(fieldskls, fields) if fields else None
        return _cached_fields[fieldskls]

    def __init__(self, kls, fields):
        self.kls = kls
        self.items = []
        self.keyword_only = isinstance(fields, dict)

        if isinstance(fields, dict):
            for name, options in fields.items():
                if isinstance(options, tuple):
                    options = options[-1]
                self.items.append((name, self.field_default(options)))
        elif isinstance(fields, (tuple, list)):
            for i, field in enumerate(fields):
                if isinstance(field, str):
                    self.items.append((field, sb.NotSpecified))
                elif isinstance(field, tuple) and len(field) == 2 and isinstance(field[0], str):
                    self.items.append(field)
                else:
                    raise TypeError(f"Field {i} of kls {kls} is not a valid field, got {field}")
        else:
            raise TypeError(
                f"Fields on kls {kls} should be a list, tuple or dictionary, got {type(fields)}"
            )

        names = [name for name, _ in self.items]
        duplicated = sorted(set(n for n in names if names.count(n) > 1))
        if duplicated:
            raise TypeError(f"Found duplicated fields in definition of {kls}: {duplicated}")

    def field_default(self, options):
        if isinstance(options, Field):
            if options.default is not sb.NotSpecified:
                return options.default
            if options.nullable:
                return None
        return sb.NotSpecified

    @property
    def names(self):
        return [name for name, _ in self.items]

    def resolve(self, args, kwargs):
        if args and self.keyword_only:
            raise TypeError("Expected only keyword arguments")

        if len(args) > len(self.items):
            raise TypeError(f"Expected up to {len(self.items)} positional arguments, got {len(args)}")

        result = dict(zip(self.names, args))

        for name, value in kwargs.items():
            if name not in self.names:
                raise TypeError(f"Received a keyword argument ({name}) that isn't on the class")
            if name in result:
                raise TypeError(
                    f"Cannot provide a field ({name}) as both positional and keyword arguments"
                )
            result[name] = value

        for name, dflt in self.items:
            if name not in result:
                if dflt is sb.NotSpecified:
                    raise TypeError(f"No default value set for {name} and no value provided")
                result[name] = dflt() if callable(dflt) else dflt

        return result


class dictobj(dict):
    """
    An object that behaves like both an object (dot notation access) and a
    dictionary (square bracket access), with an ``__init__`` generated from
    ``fields``.

    .. code-block:: python

        class Certificate(dictobj):
            fields = ["vertices", "colors", ("flavor", "rainbow")]

        cert = Certificate((0, 1), (7,))
        assert cert.flavor == "rainbow"
        assert cert["vertices"] == (0, 1)

    ``dictobj.Spec`` subclasses declare :class:`~rainbowpath.norms.field_spec.Field`
    attributes instead and gain a ``FieldSpec`` for normalising dictionaries
    into instances.
    """

    fields = None

    Field = Field
    NullableField = NullableField

    def __init__(self, *args, **kwargs):
        super().__init__()
        fields = Fields.make(self.__class__, self.fields)

        if fields is None:
            if args or kwargs:
                raise TypeError(f"{self.__class__.__name__} takes no arguments")
        else:
            for key, value in fields.resolve(args, kwargs).items():
                self[key] = value

    def __init_subclass__(kls, **kwargs):
        super().__init_subclass__(**kwargs)
        Fields.make(kls, kls.fields)

    def __bool__(self):
        """Truthy like a normal object even when there are no fields"""
        return True

    def __getattr__(self, key):
        try:
            return self[key]
        except KeyError:
            raise AttributeError(key)

    def __setattr__(self, key, val):
        self[key] = val

    def __delattr__(self, key):
        try:
            del self[key]
        except KeyError:
            raise AttributeError(key)

    def __hash__(self):
        return hash(tuple((k, _hashable(v)) for k, v in sorted(self.items())))

    def clone(self, **overrides):
        """Return a copy with some fields replaced"""
        values = dict(self)
        values.update(overrides)
        return self.__class__(**values)

    def as_dict(self):
        """Return as a plain dictionary, calling ``as_dict`` on values that have one"""
        result = {}
        for key, val in self.items():
            result[key] = _convert(val)
        return result


def _convert(val):
    if hasattr(val, "as_dict"):
        return val.as_dict()
    if isinstance(val, (list, tuple)):
        return [_convert(v) for v in val]
    if isinstance(val, (set, frozenset)):
        return sorted(_convert(v) for v in val)
    if isinstance(val, dict):
        return {k: _convert(v) for k, v in val.items()}
    return val


def _hashable(val):
    if isinstance(val, dict):
        return tuple(sorted((k, _hashable(v)) for k, v in val.items()))
    if isinstance(val, list):
        return tuple(_hashable(v) for v in val)
    if isinstance(val, set):
        return frozenset(val)
    return val


class Spec(dictobj, metaclass=Field.metaclass):
    """A dictobj whose fields are declared with ``dictobj.Field``"""


dictobj.Spec = Spec
