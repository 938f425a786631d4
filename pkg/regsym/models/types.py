"""Annotated field types shared by the regsym report models.

Exact values stay exact in Python mode; in JSON mode rationals become ``"num/den"`` strings, floats become strings
with 17 significant digits and complex numbers become ``{"re": ..., "im": ...}`` objects.
"""

from fractions import Fraction
from typing import Annotated, Any

from pydantic import PlainSerializer, PlainValidator, WithJsonSchema
from sympy import Rational

from regsym.algebra.bivariate import BivariatePoly

FLOAT_FORMAT = ".17g"


def coerce_rational(value: Any) -> Rational:  # noqa: ANN401
    """Coerce ints, fractions and ``"num/den"`` strings to a sympy Rational."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int | Fraction | str):
        try:
            return Rational(value)
        except (TypeError, ValueError) as e:
            raise ValueError(f"not a rational: {value!r}") from e
    if isinstance(value, float):
        return Rational(repr(value))
    raise ValueError(f"not a rational: {value!r}")


def format_rational(value: Rational) -> str:
    """Render a rational as ``"num/den"``."""
    return f"{value.p}/{value.q}"


def coerce_float(value: Any) -> float:  # noqa: ANN401
    """Accept floats, ints and the string form written by `format_float`."""
    if isinstance(value, bool):
        raise ValueError("booleans are not floats")
    try:
        return float(value)
    except (TypeError, ValueError) as e:
        raise ValueError(f"not a float: {value!r}") from e


def format_float(value: float) -> str:
    """Render a float with 17 significant digits."""
    return format(value, FLOAT_FORMAT)


def coerce_complex(value: Any) -> complex:  # noqa: ANN401
    """Accept complex-like numbers (including mpmath values) and ``{"re", "im"}`` mappings."""
    if isinstance(value, dict):
        try:
            return complex(coerce_float(value["re"]), coerce_float(value["im"]))
        except KeyError as e:
            raise ValueError(f"complex mapping needs 're' and 'im': {value!r}") from e
    if isinstance(value, bool):
        raise ValueError("booleans are not complex numbers")
    try:
        return complex(value)
    except (TypeError, ValueError) as e:
        raise ValueError(f"not a complex number: {value!r}") from e


def format_complex(value: complex) -> dict[str, str]:
    """Render a complex number as an object of 17-digit strings."""
    return {"re": format_float(value.real), "im": format_float(value.imag)}


def coerce_symbol(value: Any) -> BivariatePoly:  # noqa: ANN401
    """Accept a `BivariatePoly` or a symbol string in the input grammar."""
    if isinstance(value, BivariatePoly):
        return value
    if isinstance(value, str):
        from regsym.parsers.symbol_parser import parse_symbol

        return parse_symbol(value)
    raise ValueError(f"not a symbol: {value!r}")


RationalValue = Annotated[
    Rational,
    PlainValidator(coerce_rational),
    PlainSerializer(format_rational, when_used="json"),
    WithJsonSchema({"type": "string", "pattern": r"^-?\d+/\d+$"}),
]

Real17 = Annotated[
    float,
    PlainValidator(coerce_float),
    PlainSerializer(format_float, when_used="json"),
    WithJsonSchema({"type": "string"}),
]

ComplexValue = Annotated[
    complex,
    PlainValidator(coerce_complex),
    PlainSerializer(format_complex, when_used="json"),
    WithJsonSchema(
        {"type": "object", "properties": {"re": {"type": "string"}, "im": {"type": "string"}}, "required": ["re", "im"]}
    ),
]

SymbolValue = Annotated[
    BivariatePoly,
    PlainValidator(coerce_symbol),
    PlainSerializer(str, when_used="json"),
    WithJsonSchema({"type": "string"}),
]
