"""Producer data model and output-oriented CCR efficiency."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ._validation import check_index, check_inputs_outputs
from .lp import LinearProgram, LpSolution, Relation, solve

# column order of the input matrix produced by Dataset.to_arrays()
ELECTRICITY, RAW_MATERIALS, LABOR = 0, 1, 2
INPUT_NAMES = ("electricity_mwh", "raw_materials", "labor_hours")


class DEAError(RuntimeError):
    """An LP that must be solvable was not; ``lp`` and ``solution`` are kept for diagnosis."""

    def __init__(self, message, lp=None, solution=None, producer_id=None):
        super().__init__(message)
        self.lp = lp
        self.solution = solution
        self.producer_id = producer_id


@dataclass(frozen=True)
class Producer:
    """One decision-making unit.

    Units: electricity in MWh, raw materials and sales in 1e10 Rial,
    labor in 1e6 hours.
    """

    id: str
    electricity_mwh: float
    raw_materials: float
    labor_hours: float
    sales_value: float

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise ValueError("producer id must be a non-empty string")
        vals = {}
        for name in (*INPUT_NAMES, "sales_value"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{self.id}: {name} must be finite")
            vals[name] = v
            object.__setattr__(self, name, v)
        if vals["sales_value"] <= 0:
            raise ValueError(f"{self.id}: sales_value must be > 0")
        inputs = [vals[n] for n in INPUT_NAMES]
        if min(inputs) < 0:
            raise ValueError(f"{self.id}: inputs must be >= 0")
        if max(inputs) <= 0:
            raise ValueError(f"{self.id}: at least one input must be > 0")

    @property
    def inputs(self) -> np.ndarray:
        return np.array([self.electricity_mwh, self.raw_materials, self.labor_hours])


class Dataset(Sequence[Producer]):
    """Ordered, id-unique collection of producers."""

    def __init__(self, producers: Iterable[Producer]):
        producers = tuple(producers)
        if not producers:
            raise ValueError("dataset needs at least one producer")
        seen = set()
        for p in producers:
            if not isinstance(p, Producer):
                raise TypeError(f"expected Producer, got {type(p).__name__}")
            if p.id in seen:
                raise ValueError(f"duplicate producer id {p.id!r}")
            seen.add(p.id)
        self._producers = producers
        self._index = {p.id: i for i, p in enumerate(producers)}

    def __getitem__(self, i):
        return self._producers[i]

    def __len__(self):
        return len(self._producers)

    def __eq__(self, other):
        return isinstance(other, Dataset) and self._producers == other._producers

    def __repr__(self):
        return f"Dataset({list(self._producers)!r})"

    @property
    def ids(self) -> list[str]:
        return [p.id for p in self._producers]

    def index_of(self, producer_id: str) -> int:
        try:
            return self._index[producer_id]
        except KeyError:
            raise KeyError(f"unknown producer id {producer_id!r}") from None

    def to_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Input matrix ``(n, 3)`` in :data:`INPUT_NAMES` order, and sales vector."""
        X = np.array([p.inputs for p in self._producers])
        y = np.array([p.sales_value for p in self._producers])
        return X, y

    @classmethod
    def from_arrays(cls, X, y, ids: Sequence[str] | None = None) -> "Dataset":
        X, y = check_inputs_outputs(X, y)
        if X.shape[1] != 3:
            raise ValueError(f"expected 3 input columns, got {X.shape[1]}")
        if ids is None:
            ids = [f"P{i + 1}" for i in range(len(y))]
        return cls(Producer(pid, *row, sales) for pid, row, sales in zip(ids, X, y))


@dataclass(frozen=True)
class EfficiencyResult:
    producer_id: str
    z: float
    efficiency_index: float
    lam: np.ndarray


def _ccr_lp(X: np.ndarray, y: np.ndarray, k: int) -> LinearProgram:
    n, m = X.shape
    rows = [(np.r_[0.0, X[:, j]], Relation.LE, X[k, j]) for j in range(m)]
    rows.append((np.r_[-y[k], y], Relation.GE, 0.0))
    return LinearProgram(
        objective=np.r_[1.0, np.zeros(n)],
        constraints=rows,
        lower_bounds=np.r_[1.0, np.zeros(n)],
    )


def build_ccr_lp(dataset: Dataset, index: int) -> LinearProgram:
    """Output-oriented CCR program for producer ``index``.

    Variables are ``(z, lambda_1..lambda_n)``. One ``<=`` row per input,
    one ``>=`` row ``sum(lambda * sales) - z * sales_0 >= 0``, ``z >= 1``
    as a lower bound.
    """
    k = check_index(index, len(dataset))
    X, y = dataset.to_arrays()
    return _ccr_lp(X, y, k)


def solve_ccr(X, y, k, producer_id) -> tuple[LpSolution, LinearProgram]:
    lp = _ccr_lp(X, y, k)
    sol = solve(lp)
    if not sol.is_optimal:
        # z = 1 with the unit's own lambda is always feasible
        raise DEAError(
            f"CCR program for {producer_id} reported {sol.status.value}",
            lp=lp, solution=sol, producer_id=producer_id,
        )
    return sol, lp


def efficiency(dataset: Dataset, index: int) -> EfficiencyResult:
    k = check_index(index, len(dataset))
    X, y = dataset.to_arrays()
    pid = dataset[k].id
    sol, _ = solve_ccr(X, y, k, pid)
    z = sol.objective_value
    return EfficiencyResult(pid, z, 1.0 / z, sol.variables[1:].copy())


def efficiency_all(dataset: Dataset) -> list[EfficiencyResult]:
    return [efficiency(dataset, k) for k in range(len(dataset))]
