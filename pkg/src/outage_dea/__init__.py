"""Power interruption cost estimation with DEA and inverse DEA."""

__version__ = "0.1.0"

from .cost import (
    EnergyDistribution,
    InterruptionCostEstimate,
    OutageRecord,
    average_power,
    energy_distribution,
    interruption_cost,
    monte_carlo_estimate,
    sample_energy,
)
from .dea import Dataset, EfficiencyResult, Producer, build_ccr_lp, efficiency, efficiency_all
from .inverse import OutputEstimate, PerturbedInputs, estimate_output, perturbed_inputs, value_curve
from .lp import LinearProgram, LpSolution, Relation, Status, solve
from .reference import reference_data

_ESTIMATORS = ("CCREfficiency", "InverseDEA", "InterruptionCostEstimator")


def __getattr__(name):
    # scikit-learn is only imported when an estimator is first requested
    if name in _ESTIMATORS:
        from . import estimators

        return getattr(estimators, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    "CCREfficiency",
    "Dataset",
    "EfficiencyResult",
    "EnergyDistribution",
    "InterruptionCostEstimate",
    "InterruptionCostEstimator",
    "InverseDEA",
    "LinearProgram",
    "LpSolution",
    "OutageRecord",
    "OutputEstimate",
    "PerturbedInputs",
    "Producer",
    "Relation",
    "Status",
    "average_power",
    "build_ccr_lp",
    "efficiency",
    "efficiency_all",
    "energy_distribution",
    "estimate_output",
    "interruption_cost",
    "monte_carlo_estimate",
    "perturbed_inputs",
    "reference_data",
    "sample_energy",
    "solve",
    "value_curve",
]
