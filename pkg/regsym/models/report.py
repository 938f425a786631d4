"""The analysis report written by the CLI.

Every report carries ``"schema": "regsym/1"``; the JSON form follows `regsym/schema/report.schema.json`.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from regsym.models.branches import BranchSet
from regsym.models.growth import OracleReport
from regsym.models.options import Direction, Quantization, Tolerances
from regsym.models.types import RationalValue, Real17, SymbolValue
from regsym.models.verdict import Classification, Verdict

SCHEMA_ID = "regsym/1"


class AnalysisReport(BaseModel):
    """Everything the pipeline found for one input.

    Attributes
    ----------
    schema_id : str
        Report format version, serialized as ``"schema"``.
    input : str
        The symbol text as given.
    quantization : Quantization
        How the input was read.
    directions : tuple[Direction, ...]
        Requested expansion directions.
    depth : Rational
        Expansion depth.
    weyl_symbol : BivariatePoly
        The input as a Weyl symbol.
    normalized : BivariatePoly | None
        The shear-normalized symbol, when the general path ran.
    shear : Rational
        The shear parameter lambda.
    classification : Classification | None
        Fast-path classification.
    branches : tuple[BranchSet, ...]
        Branch tables per direction.
    verdict : Verdict
        The decision with its separation and condition reports.
    tolerances : Tolerances
        Thresholds in effect.
    oracle : OracleReport | None
        Numerical corroboration, when requested.
    seconds : float
        Wall time of the analysis.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    schema_id: Literal["regsym/1"] = Field(SCHEMA_ID, alias="schema")
    input: str
    quantization: Quantization
    directions: tuple[Direction, ...]
    depth: RationalValue
    weyl_symbol: SymbolValue
    normalized: SymbolValue | None = None
    shear: RationalValue
    classification: Classification | None = None
    branches: tuple[BranchSet, ...] = ()
    verdict: Verdict
    tolerances: Tolerances
    oracle: OracleReport | None = None
    seconds: Real17

    @field_serializer("tolerances", when_used="json")
    def _tolerances_as_strings(self, tolerances: Tolerances) -> dict[str, str]:
        return tolerances.as_strings()

    def to_json(self, indent: int | None = 2) -> str:
        """Serialize with the schema field under its public name."""
        return self.model_dump_json(by_alias=True, indent=indent)
