"""Exact engine for localized free-field modules of gl2 over a quantum torus."""

from ._core import (
    AlgElement,
    EngineError,
    ExprParseError,
    ModuleSpace,
    MVector,
    ParamEnv,
    ProbeReport,
    Scalar,
    WeightValue,
    act,
    cyclicity_run,
    nilpotency_probe,
    parse_scalar,
    parse_vector,
    parse_word,
    run_suite,
    singular_vector,
    span_probe,
    weights,
)

__all__ = [
    "AlgElement",
    "EngineError",
    "ExprParseError",
    "ModuleSpace",
    "MVector",
    "ParamEnv",
    "ProbeReport",
    "Scalar",
    "WeightValue",
    "act",
    "cyclicity_run",
    "nilpotency_probe",
    "parse_scalar",
    "parse_vector",
    "parse_word",
    "run_suite",
    "singular_vector",
    "span_probe",
    "weights",
]
