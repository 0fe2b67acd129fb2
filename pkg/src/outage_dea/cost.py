"""Uninterrupted-energy distributions and Monte Carlo interruption cost."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._validation import check_index
from .dea import Dataset, efficiency
from .inverse import estimate_output, perturbed_inputs
from .rng import sample_stream

# spread of uninterrupted energy relative to the total energy lost to outages
STD_FRACTION_OF_LOST_ENERGY = 0.25
# 1e10 Rial per MWh -> Rial per kWh
RIAL_PER_KWH = 1e7
GUARD_REL = 1e-9


class SkipSample(ArithmeticError):
    """Energy increase too small for a meaningful cost ratio."""


@dataclass(frozen=True)
class OutageRecord:
    producer_id: str
    duration_h: float
    demand_mw: float | None = None

    def __post_init__(self):
        if not (math.isfinite(self.duration_h) and self.duration_h > 0):
            raise ValueError(f"{self.producer_id}: duration_h must be > 0")
        if self.demand_mw is not None and not (math.isfinite(self.demand_mw) and self.demand_mw > 0):
            raise ValueError(f"{self.producer_id}: demand_mw must be > 0 when given")


@dataclass(frozen=True)
class EnergyDistribution:
    producer_id: str
    mean_mwh: float
    std_mwh: float
    base_mwh: float

    def __post_init__(self):
        for name in ("mean_mwh", "std_mwh", "base_mwh"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{self.producer_id}: {name} must be finite")
        if self.std_mwh < 0:
            raise ValueError(f"{self.producer_id}: std_mwh must be >= 0")
        if self.mean_mwh < self.base_mwh:
            raise ValueError(
                f"{self.producer_id}: mean {self.mean_mwh} below base consumption {self.base_mwh}"
            )


@dataclass(frozen=True)
class InterruptionCostEstimate:
    producer_id: str
    samples: list[tuple[float, float, float]]
    mean_ic: float | None
    std_ic: float | None
    seed: int
    n_requested: int
    n_used: int
    z0: float = 1.0
    mean_point_ic: float | None = None
    skipped: list[int] = field(default_factory=list)


def average_power(e_total_mwh: float, work_hours: float) -> float:
    if not work_hours > 0:
        raise ValueError(f"work_hours must be > 0, got {work_hours}")
    return e_total_mwh / work_hours


def energy_distribution(
    producer_id: str,
    e_total_mwh: float,
    outages: Sequence[OutageRecord],
    default_demand_mw: float,
) -> EnergyDistribution:
    """Mean and spread of the energy the producer would have used without outages.

    Each outage adds ``duration * demand`` to the mean; ``default_demand_mw``
    stands in for records with no demand reading.
    """
    if not default_demand_mw > 0:
        raise ValueError("default_demand_mw must be > 0")
    lost = 0.0
    for rec in outages:
        if rec.producer_id != producer_id:
            raise ValueError(f"outage for {rec.producer_id!r} passed with producer {producer_id!r}")
        demand = rec.demand_mw if rec.demand_mw is not None else default_demand_mw
        lost += rec.duration_h * demand
    return EnergyDistribution(
        producer_id,
        mean_mwh=e_total_mwh + lost,
        std_mwh=STD_FRACTION_OF_LOST_ENERGY * lost,
        base_mwh=e_total_mwh,
    )


def sample_energy(dist: EnergyDistribution, rng) -> float:
    """Normal draw truncated below at the base consumption by resampling."""
    if dist.std_mwh == 0:
        return dist.mean_mwh
    while True:
        e = dist.mean_mwh + dist.std_mwh * rng.normal()
        if e >= dist.base_mwh:
            return e


def _guard(e_base_mwh: float) -> float:
    return GUARD_REL * max(e_base_mwh, 1.0)


def interruption_cost(beta: float, sv_base: float, e0_mwh: float, e_base_mwh: float) -> float:
    """Sales gained per kWh of extra electricity, in Rial/kWh.

    Raises :class:`SkipSample` when the electricity increase is below the
    guard ``1e-9 * max(e_base, 1)``.
    """
    de = e0_mwh - e_base_mwh
    if de < _guard(e_base_mwh):
        raise SkipSample(f"energy increase {de} MWh below guard")
    return (beta - sv_base) / de * RIAL_PER_KWH


def monte_carlo_estimate(
    dataset: Dataset,
    index: int,
    dist: EnergyDistribution,
    n: int,
    seed: int,
) -> InterruptionCostEstimate:
    k = check_index(index, len(dataset))
    if n < 1:
        raise ValueError("n must be >= 1")
    producer = dataset[k]
    if dist.base_mwh != producer.electricity_mwh:
        raise ValueError(
            f"{producer.id}: distribution base {dist.base_mwh} differs from "
            f"electricity consumption {producer.electricity_mwh}"
        )
    z0 = efficiency(dataset, k).z

    def evaluate(e0):
        beta = estimate_output(dataset, k, perturbed_inputs(producer, e0), z0).beta
        # beta >= sv_base holds to solver precision; clip round-off
        beta = max(beta, producer.sales_value)
        return beta, interruption_cost(beta, producer.sales_value, e0, producer.electricity_mwh)

    samples, skipped = [], []
    for i in range(n):
        e0 = sample_energy(dist, sample_stream(seed, i))
        try:
            beta, ic = evaluate(e0)
        except SkipSample:
            skipped.append(i)
            continue
        except Exception as exc:
            raise RuntimeError(f"{producer.id}: sample {i} failed: {exc}") from exc
        samples.append((e0, beta, ic))

    ics = np.array([s[2] for s in samples])
    mean_ic = float(ics.mean()) if ics.size else None
    std_ic = float(ics.std(ddof=1)) if ics.size > 1 else (0.0 if ics.size else None)
    try:
        mean_point_ic = evaluate(dist.mean_mwh)[1]
    except SkipSample:
        mean_point_ic = None
    return InterruptionCostEstimate(
        producer_id=producer.id,
        samples=samples,
        mean_ic=mean_ic,
        std_ic=std_ic,
        seed=seed,
        n_requested=n,
        n_used=len(samples),
        z0=z0,
        mean_point_ic=mean_point_ic,
        skipped=skipped,
    )
