"""Pydantic models for pseudodyn reports and input schemas.

Reports are frozen snapshots of a finished computation; exact numbers dump
to JSON as exact strings. The schema models validate scenario files and
patch atlases.
"""

from pseudodyn.models.acceptance import CriterionResult
from pseudodyn.models.base import ExactRational, ExactScalar, ExactValue, PseudodynModel
from pseudodyn.models.coarse import (
    Correspondence,
    CorrespondencePair,
    DistortionPair,
    DistortionStats,
    NetCheck,
)
from pseudodyn.models.equicont import (
    ABReport,
    ABViolation,
    DensityResult,
    MinimalityWitness,
    ModulusRow,
    ModulusTable,
    QuasiEffectiveReport,
    QuasiEffectiveViolation,
)
from pseudodyn.models.folner import (
    ACapSCheck,
    FolnerReport,
    FolnerRow,
    InvarianceDefect,
    MeasureSample,
    MeasureSeries,
)
from pseudodyn.models.germs import GermSample, StabilizerWitness
from pseudodyn.models.metrization import (
    ATLAS_SCHEMA,
    AdmissiblePair,
    AgreementEntry,
    AgreementReport,
    GluedMetric,
    GlueMode,
    LowerBoundReport,
    LowerBoundViolation,
    MetricAxiomReport,
    MetricPatch,
    MetricPatchAtlas,
    ModulusCheck,
    ModulusViolation,
)
from pseudodyn.models.recurrence import (
    BiLipschitzReport,
    BiLipschitzWitness,
    HittingEntry,
    RecurrenceProfile,
    Section6Params,
)
from pseudodyn.models.scenario import (
    SCENARIO_SCHEMA,
    GeneratorSpec,
    IntervalSpec,
    MapSpec,
    PieceSpec,
    ScenarioFile,
    Section6Spec,
)

__all__ = [
    # Base
    "PseudodynModel",
    "ExactScalar",
    "ExactRational",
    "ExactValue",
    # Germs and recurrence
    "GermSample",
    "StabilizerWitness",
    "HittingEntry",
    "RecurrenceProfile",
    "Section6Params",
    "BiLipschitzWitness",
    "BiLipschitzReport",
    # Følner
    "FolnerRow",
    "FolnerReport",
    "InvarianceDefect",
    "ACapSCheck",
    "MeasureSample",
    "MeasureSeries",
    # Coarse geometry
    "NetCheck",
    "CorrespondencePair",
    "Correspondence",
    "DistortionPair",
    "DistortionStats",
    # Equicontinuity
    "ModulusRow",
    "ModulusTable",
    "ABViolation",
    "ABReport",
    "DensityResult",
    "MinimalityWitness",
    "QuasiEffectiveViolation",
    "QuasiEffectiveReport",
    # Metrization
    "ATLAS_SCHEMA",
    "GlueMode",
    "MetricPatch",
    "MetricPatchAtlas",
    "AdmissiblePair",
    "GluedMetric",
    "LowerBoundViolation",
    "LowerBoundReport",
    "AgreementEntry",
    "AgreementReport",
    "MetricAxiomReport",
    "ModulusViolation",
    "ModulusCheck",
    # Scenario schema
    "SCENARIO_SCHEMA",
    "IntervalSpec",
    "PieceSpec",
    "MapSpec",
    "GeneratorSpec",
    "Section6Spec",
    "ScenarioFile",
    # Self-test
    "CriterionResult",
]
