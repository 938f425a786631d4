from regsym.models.branches import BranchSet, PuiseuxSeries, ResidualCertificate, SeriesTerm
from regsym.models.fixture import Fixture, FixtureResult
from regsym.models.growth import (
    GrowthClass,
    GrowthLabel,
    GrowthSample,
    OracleObservation,
    OracleReport,
    OracleStatus,
)
from regsym.models.options import Direction, EngineOptions, Quantization, Tolerances
from regsym.models.report import SCHEMA_ID, AnalysisReport
from regsym.models.verdict import (
    BranchCondition,
    Classification,
    ConditionReport,
    ConditionStatus,
    Decision,
    DecisionPath,
    PairStatus,
    SeparationPair,
    SeparationReport,
    SymbolClass,
    Verdict,
)

__all__ = [
    "SCHEMA_ID",
    "AnalysisReport",
    "BranchCondition",
    "BranchSet",
    "Classification",
    "ConditionReport",
    "ConditionStatus",
    "Decision",
    "DecisionPath",
    "Direction",
    "EngineOptions",
    "Fixture",
    "FixtureResult",
    "GrowthClass",
    "GrowthLabel",
    "GrowthSample",
    "OracleObservation",
    "OracleReport",
    "OracleStatus",
    "PairStatus",
    "PuiseuxSeries",
    "Quantization",
    "ResidualCertificate",
    "SeparationPair",
    "SeparationReport",
    "SeriesTerm",
    "SymbolClass",
    "Tolerances",
    "Verdict",
]
