from pydantic import BaseModel, ConfigDict, field_validator

from regsym.algebra.bivariate import BivariatePoly
from regsym.models.options import Quantization
from regsym.models.types import Real17
from regsym.models.verdict import Decision, DecisionPath


def default_str(string: str | None) -> str:
    """Coerce a missing string to a blank string."""
    return "" if string is None else string


def check_symbol_text(text: str) -> str:
    """Fixture symbols must parse."""
    from regsym.parsers.symbol_parser import parse_symbol

    parse_symbol(text)
    return text


class Fixture(BaseModel):
    """One entry of a fixture file.

    Attributes
    ----------
    name : str
        Unique label of the case.
    symbol : str
        Symbol text in the input grammar.
    quantization : Quantization
        How to read the symbol.
    expected : Decision
        The decision the engine must return.
    notes : str
        Free text.
    """

    model_config = ConfigDict(frozen=True)

    name: str
    symbol: str
    quantization: Quantization = Quantization.WEYL
    expected: Decision
    notes: str = ""

    _default_str = field_validator("notes", mode="before")(default_str)
    _check_symbol_text = field_validator("symbol", mode="after")(check_symbol_text)

    @property
    def poly(self) -> BivariatePoly:
        """The parsed symbol."""
        from regsym.parsers.symbol_parser import parse_symbol

        return parse_symbol(self.symbol)


class FixtureResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    symbol: str
    expected: Decision
    decision: Decision
    path: DecisionPath | None
    seconds: Real17
    diagnostics: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        """Whether the engine returned the expected decision."""
        return self.decision is self.expected
