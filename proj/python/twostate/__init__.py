"""Two-state interference model of the aggregate product."""

from ._twostate import (
    ActivityProfile,
    AggregateResult,
    CapacityOperator,
    ExchangeFrequency,
    FourierCoefficient,
    InvalidInput,
    NumericalFailure,
    OptimumReport,
    OptimumStatus,
    ProfileKind,
    TwoStateAmplitude,
    aggregate_product,
    amplitudes_at,
    decay_model_optimum,
    fourier_coefficient,
    instantaneous_capacity,
    interference_contribution,
    maximize_q_star,
    scaled_symmetric,
    step_model_optimum,
)

__all__ = [
    "ActivityProfile",
    "AggregateResult",
    "CapacityOperator",
    "ExchangeFrequency",
    "FourierCoefficient",
    "InvalidInput",
    "NumericalFailure",
    "OptimumReport",
    "OptimumStatus",
    "ProfileKind",
    "TwoStateAmplitude",
    "aggregate_product",
    "amplitudes_at",
    "decay_model_optimum",
    "fourier_coefficient",
    "instantaneous_capacity",
    "interference_contribution",
    "maximize_q_star",
    "scaled_symmetric",
    "step_model_optimum",
]
