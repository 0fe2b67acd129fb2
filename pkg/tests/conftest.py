import pytest

from outage_dea.reference import reference_data

# Computed once with scipy.optimize.linprog (HiGHS, feasibility and
# optimality tolerances 1e-10) on the embedded data, then frozen here.
# Independent of the package's own simplex.
CCR_Z_ORACLE = {
    "P1": 1.0,
    "P2": 1.1920141871402454,
    "P3": 1.0,
    "P4": 1.0,
    "P5": 1.1512285388287515,
    "P6": 1.1213503075483644,
    "P7": 1.0,
    "P8": 1.0,
}
# largest sales value with electricity at the published distribution mean,
# labor scaled with electricity, raw materials fixed, z0 from CCR_Z_ORACLE
BETA_AT_MEAN_ORACLE = {
    "P1": 14.408124270227955,
    "P2": 83.1474078724934,
    "P3": 41.25236374480357,
    "P4": 471.12624263115197,
    "P5": 96.88433194093362,
    "P6": 969.2905258280327,
    "P7": 45.087854763360866,
    "P8": 22.45,
}


@pytest.fixture(scope="session")
def ref():
    return reference_data()


@pytest.fixture(scope="session")
def dataset(ref):
    return ref.dataset
