# coding: spec

from fractions import Fraction

import pytest

from rainbowpath.errors_pytest import assertRaises
from rainbowpath.norms import BadSpec, BadSpecValue, Meta, sb, va


@pytest.fixture()
def meta():
    return Meta.empty().at("options")


describe "NotSpecified":
    it "says what it is":
        assert repr(sb.NotSpecified) == "<NotSpecified>"
        assert str(sb.NotSpecified) == "<NotSpecified>"

describe "apply_validators":
    it "chains values through validators by default", meta:
        class doubled(va.Validator):
            def validate(slf, meta, val):
                return val * 2

        assert sb.apply_validators(meta, 3, [doubled(), doubled()]) == 12
        assert sb.apply_validators(meta, 3, [doubled(), doubled()], chain_value=False) == 3

    it "collects every failure", meta:
        with pytest.raises(BadSpecValue) as excinfo:
            sb.apply_validators(meta, 0, [va.greater_than(0), va.greater_than(1)])
        error = excinfo.value
        assert "Failed to validate" in error.message
        assert [e.kwargs["minimum_exclusive"] for e in error.errors] == [0, 1]

describe "Spec":
    it "returns NotSpecified when nothing handles it", meta:
        assert sb.Spec().normalise(meta, sb.NotSpecified) is sb.NotSpecified

    it "complains when nothing handles a value", meta:
        with assertRaises(BadSpec, "Spec doesn't know how to deal with this value", val=3):
            sb.Spec().normalise(meta, 3)

    it "gives setup the arguments":
        spec = sb.string_choice_spec(["exact", "cc"], reason="Pick an engine")
        assert spec.pargs == (["exact", "cc"],)
        assert spec.kwargs == {"reason": "Pick an engine"}
        assert spec.choices == ["exact", "cc"]

describe "defaulted and required":
    it "fills in a default", meta:
        spec = sb.defaulted(sb.integer_spec(), 9)
        assert spec.normalise(meta, sb.NotSpecified) == 9
        assert spec.normalise(meta, "4") == 4

    it "complains about missing required values", meta:
        spec = sb.required(sb.integer_spec())
        assert spec.normalise(meta, 4) == 4
        with assertRaises(BadSpecValue, "Expected a value but got none", meta=meta):
            spec.normalise(meta, sb.NotSpecified)

describe "none_spec and or_spec":
    it "only likes None", meta:
        assert sb.none_spec().normalise(meta, sb.NotSpecified) is None
        assert sb.none_spec().normalise(meta, None) is None
        with assertRaises(BadSpecValue, "Expected None", got=int):
            sb.none_spec().normalise(meta, 0)

    it "takes the first spec that works", meta:
        spec = sb.or_spec(sb.none_spec(), sb.integer_spec())
        assert spec.normalise(meta, None) is None
        assert spec.normalise(meta, "12") == 12

    it "keeps every failure", meta:
        spec = sb.or_spec(sb.none_spec(), sb.integer_spec())
        with pytest.raises(BadSpecValue) as excinfo:
            spec.normalise(meta, "twelve")
        assert "Value doesn't match any of the options" in excinfo.value.message
        assert len(excinfo.value.errors) == 2

describe "strings":
    it "defaults to empty and refuses other types", meta:
        assert sb.string_spec().normalise(meta, sb.NotSpecified) == ""
        assert sb.string_spec().normalise(meta, "fm_example") == "fm_example"
        with assertRaises(BadSpecValue, "Expected a string", got=int):
            sb.string_spec().normalise(meta, 1)

    it "checks choices", meta:
        spec = sb.string_choice_spec(["exact", "cc"])
        assert spec.normalise(meta, "cc") == "cc"
        with assertRaises(
            BadSpecValue,
            "Expected one of the available choices",
            available=["exact", "cc"],
            got="guess",
        ):
            spec.normalise(meta, "guess")

describe "integer_spec":
    it "takes integers and strings of digits", meta:
        spec = sb.integer_spec()
        assert spec.normalise(meta, 7) == 7
        assert spec.normalise(meta, "12") == 12
        assert spec.normalise(meta, " -3 ") == -3

    it "refuses everything else", meta:
        spec = sb.integer_spec()
        for val, got in ((True, bool), ("1.5", str), (1.0, float), (None, type(None))):
            with assertRaises(BadSpecValue, "Expected an integer", got=got):
                spec.normalise(meta, val)

describe "fraction_spec":
    it "takes exact rationals", meta:
        spec = sb.fraction_spec()
        assert spec.normalise(meta, 5) == Fraction(5)
        assert spec.normalise(meta, Fraction(21, 2)) == Fraction(21, 2)
        assert spec.normalise(meta, "21/2") == Fraction(21, 2)
        assert spec.normalise(meta, " 7 ") == Fraction(7)

    it "refuses floats and bad strings", meta:
        spec = sb.fraction_spec()
        with assertRaises(BadSpecValue, "Expected a rational number", got=float):
            spec.normalise(meta, 0.5)
        with assertRaises(BadSpecValue, "Expected a rational number", got=bool):
            spec.normalise(meta, True)
        with assertRaises(BadSpecValue, "Expected a rational number like p/q", got="1/0"):
            spec.normalise(meta, "1/0")
        with assertRaises(BadSpecValue, "like p/q", got="half"):
            spec.normalise(meta, "half")

describe "listof":
    it "makes lists out of what the cli and json give", meta:
        spec = sb.listof(sb.integer_spec())
        assert spec.normalise(meta, sb.NotSpecified) == []
        assert spec.normalise(meta, "10,20 30") == [10, 20, 30]
        assert spec.normalise(meta, [1, "2"]) == [1, 2]
        assert spec.normalise(meta, (4, 3)) == [4, 3]
        assert spec.normalise(meta, {4, 3}) == [3, 4]
        assert spec.normalise(meta, 5) == [5]

    it "reports each bad item at its index", meta:
        spec = sb.listof(sb.integer_spec())
        with pytest.raises(BadSpecValue) as excinfo:
            spec.normalise(meta, ["1", "x", "y"])
        assert [e.kwargs["meta"].path for e in excinfo.value.errors] == [
            "options[1]",
            "options[2]",
        ]

describe "dictionaries":
    it "only takes dictionaries", meta:
        assert sb.dictionary_spec().normalise(meta, sb.NotSpecified) == {}
        assert sb.dictionary_spec().normalise(meta, {"a": 1}) == {"a": 1}
        with assertRaises(BadSpecValue, "Expected a dictionary", got=list):
            sb.dictionary_spec().normalise(meta, [])

    it "normalises each option and drops extra keys", meta:
        spec = sb.set_options(
            samples=sb.defaulted(sb.integer_spec(), 1), family=sb.string_spec()
        )
        assert spec.normalise(meta, {"samples": "3", "family": "fm_example", "extra": 1}) == {
            "samples": 3,
            "family": "fm_example",
        }
        assert spec.normalise(meta, sb.NotSpecified) == {}
        assert spec.normalise(meta, {}) == {"samples": 1, "family": ""}

    it "collects errors from every option", meta:
        spec = sb.set_options(samples=sb.integer_spec(), family=sb.string_spec())
        with pytest.raises(BadSpecValue) as excinfo:
            spec.normalise(meta, {"samples": "many", "family": 3})
        paths = sorted(e.kwargs["meta"].path for e in excinfo.value.errors)
        assert paths == ["options.family", "options.samples"]

describe "create_spec":
    it "makes the class from normalised options", meta:

        class Sweep:
            def __init__(slf, n, samples):
                slf.n = n
                slf.samples = samples

        spec = sb.create_spec(Sweep, n=sb.required(sb.integer_spec()), samples=sb.defaulted(sb.integer_spec(), 1))
        sweep = spec.normalise(meta, {"n": "10"})
        assert (sweep.n, sweep.samples) == (10, 1)
        assert spec.normalise(meta, sweep) is sweep

        with assertRaises(BadSpecValue):
            spec.normalise(meta, sb.NotSpecified)

    it "runs validators over the whole dictionary", meta:
        seen = []

        class Record:
            def __init__(slf, low, high):
                slf.low = low
                slf.high = high

        class ordered(va.Validator):
            def validate(slf, meta, val):
                seen.append(dict(val))
                if val["low"] >= val["high"]:
                    raise BadSpecValue("low must be below high", meta=meta)
                return "ignored"

        spec = sb.create_spec(Record, ordered(), low=sb.integer_spec(), high=sb.integer_spec())
        record = spec.normalise(meta, {"low": "1", "high": "2"})
        assert (record.low, record.high) == (1, 2)
        assert seen == [{"low": 1, "high": 2}]

        with assertRaises(BadSpecValue, "Failed to validate"):
            spec.normalise(meta, {"low": 3, "high": 2})

describe "and_spec":
    it "feeds each result into the next", meta:
        spec = sb.and_spec(sb.integer_spec(), va.greater_than(0))
        assert spec.normalise(meta, "3") == 3
        with assertRaises(BadSpecValue, "Value is too small"):
            spec.normalise(meta, "0")
