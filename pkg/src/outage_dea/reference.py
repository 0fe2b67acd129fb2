"""Published data for eight vehicle manufacturers.

Inputs/outputs and efficiency indices are transcribed as printed; the
uninterrupted-energy distributions and expected interruption costs likewise.
"""

from __future__ import annotations

from dataclasses import dataclass

PRODUCERS_CSV = """\
id,electricity_mwh,raw_materials_e10_rial,labor_hours_e6,sales_e10_rial
P1,3174,6.55,3.76,14.4
P2,14904,52.8,17.27,83.11
P3,6308,23.0,3.03,41.21
P4,32364,294,24.37,471.01
P5,10866,65.8,22.59,96.58
P6,161913,602,104.64,968.72
P7,3954,28.7,1.91,45.06
P8,14346,6.81,3.94,22.45
"""

DISTRIBUTIONS_CSV = """\
producer_id,mean_mwh,std_mwh
P1,3186,3
P2,14932,7.5
P3,6352,11
P4,32450,10.5
P5,11086,55
P6,162403,97.5
P7,3971,4.2
P8,14455,27.2
"""

EXPECTED_EFFICIENCIES = {
    "P1": 1.0,
    "P2": 0.83914,
    "P3": 1.0,
    "P4": 1.0,
    "P5": 0.86901,
    "P6": 0.89154,
    "P7": 1.0,
    "P8": 1.0,
}

# Rial per kWh
EXPECTED_COSTS = {
    "P1": 6704.818,
    "P2": 13378.31,
    "P3": 9603.08,
    "P4": 13576.77,
    "P5": 13854.55,
    "P6": 11702.0,
    "P7": 16446.59,
    "P8": 15645.68,
}


@dataclass(frozen=True)
class ReferenceData:
    dataset: "Dataset"
    distributions: list
    expected_costs: dict
    expected_efficiencies: dict


def reference_data() -> ReferenceData:
    from .ingest import parse_distributions, parse_producers

    dataset = parse_producers(PRODUCERS_CSV)
    return ReferenceData(
        dataset=dataset,
        distributions=parse_distributions(DISTRIBUTIONS_CSV, dataset),
        expected_costs=dict(EXPECTED_COSTS),
        expected_efficiencies=dict(EXPECTED_EFFICIENCIES),
    )
