"""Inverse DEA: largest sales value consistent with unchanged efficiency.

Electricity is raised to a new level, labor hours scale in proportion to
electricity and raw materials stay fixed. The producer's CCR score ``z0``
is held at its pre-perturbation value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._validation import check_index
from .dea import ELECTRICITY, LABOR, RAW_MATERIALS, Dataset, Producer, efficiency
from .lp import LinearProgram, Relation, Status, solve


class InverseDEAError(RuntimeError):
    def __init__(self, message, lp=None, solution=None):
        super().__init__(message)
        self.lp = lp
        self.solution = solution


@dataclass(frozen=True)
class PerturbedInputs:
    electricity_mwh: float
    labor_hours: float
    raw_materials: float

    def as_array(self) -> np.ndarray:
        out = np.empty(3)
        out[ELECTRICITY] = self.electricity_mwh
        out[RAW_MATERIALS] = self.raw_materials
        out[LABOR] = self.labor_hours
        return out


@dataclass(frozen=True)
class OutputEstimate:
    beta: float
    lam: np.ndarray


def perturbed_inputs(producer: Producer, e_new: float) -> PerturbedInputs:
    """Raise electricity to ``e_new`` and scale labor hours proportionally."""
    e_new = float(e_new)
    e_base = producer.electricity_mwh
    if not np.isfinite(e_new) or e_new < e_base:
        raise ValueError(f"{producer.id}: new electricity {e_new} is below base consumption {e_base}")
    if e_base <= 0:
        raise ValueError(f"{producer.id}: labor scaling needs positive base electricity")
    if e_new == e_base:
        labor = producer.labor_hours
    else:
        labor = producer.labor_hours * (e_new / e_base)
    return PerturbedInputs(e_new, labor, producer.raw_materials)


def _inverse_lp(X, y, k, alpha, z0) -> LinearProgram:
    n, m = X.shape
    rows = [(np.r_[0.0, X[:, j]], Relation.LE, alpha[j]) for j in range(m)]
    rows.append((np.r_[z0, -y], Relation.LE, 0.0))
    return LinearProgram(
        objective=np.r_[1.0, np.zeros(n)],
        constraints=rows,
        lower_bounds=np.r_[y[k], np.zeros(n)],
    )


def solve_inverse(X, y, k, alpha, z0) -> OutputEstimate:
    if z0 < 1:
        raise ValueError(f"z0 must be >= 1, got {z0}")
    if np.any(alpha < X[k]):
        raise ValueError("perturbed inputs must not fall below the base inputs")
    lp = _inverse_lp(X, y, k, alpha, z0)
    sol = solve(lp)
    if sol.status is Status.INFEASIBLE:
        raise InverseDEAError(
            "inverse DEA program infeasible; z0 does not match this dataset", lp=lp, solution=sol
        )
    if sol.status is Status.UNBOUNDED:
        raise InverseDEAError(
            "inverse DEA program unbounded; some producer consumes none of the binding inputs",
            lp=lp, solution=sol,
        )
    return OutputEstimate(sol.objective_value, sol.variables[1:].copy())


def estimate_output(dataset: Dataset, index: int, inputs: PerturbedInputs, z0: float) -> OutputEstimate:
    """Maximal sales value for producer ``index`` at ``inputs``, efficiency fixed at ``z0``."""
    k = check_index(index, len(dataset))
    X, y = dataset.to_arrays()
    return solve_inverse(X, y, k, inputs.as_array(), float(z0))


def value_curve(dataset: Dataset, index: int, e_values: Sequence[float], z0: float | None = None):
    """``[(e, beta), ...]`` for each electricity level in ``e_values``."""
    k = check_index(index, len(dataset))
    if z0 is None:
        z0 = efficiency(dataset, k).z
    producer = dataset[k]
    return [
        (float(e), estimate_output(dataset, k, perturbed_inputs(producer, e), z0).beta)
        for e in e_values
    ]
