"""scikit-learn compatible wrappers around the DEA pipeline.

All three follow the usual ``fit`` / ``predict`` conventions, take plain
arrays, and support ``get_params`` / ``clone``. Input matrices use the
column order electricity, raw materials, labor (see ``Dataset.to_arrays``).
"""

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from ._validation import check_inputs_outputs
from .cost import EnergyDistribution, monte_carlo_estimate
from .dea import Dataset, solve_ccr
from .inverse import solve_inverse


class CCREfficiency(BaseEstimator):
    """Output-oriented, constant-returns-to-scale DEA scores.

    ``fit(X, y)`` scores every row of ``X`` against the frontier spanned by
    all rows. ``X`` holds inputs (any number of columns), ``y`` the single
    output.

    Attributes
    ----------
    z_ : ndarray of shape (n_units,)
        Maximal proportional output expansion, always >= 1.
    efficiency_ : ndarray of shape (n_units,)
        ``1 / z_``.
    lambdas_ : ndarray of shape (n_units, n_units)
        Row ``k`` is the virtual-producer weight vector found for unit ``k``.
        Alternative optima exist in general; only ``z_`` is unique.
    """

    def fit(self, X, y):
        X, y = check_inputs_outputs(X, y)
        n = len(y)
        z = np.empty(n)
        lambdas = np.empty((n, n))
        for k in range(n):
            sol, _ = solve_ccr(X, y, k, f"unit {k}")
            z[k] = sol.objective_value
            lambdas[k] = sol.variables[1:]
        self.X_ = X
        self.y_ = y
        self.z_ = z
        self.efficiency_ = 1.0 / z
        self.lambdas_ = lambdas
        self.n_features_in_ = X.shape[1]
        return self

    def score_units(self, X, y):
        """Efficiency of arbitrary units measured against the fitted frontier.

        Each unit is appended to the reference set while it is scored, so
        the returned indices lie in (0, 1].
        """
        check_is_fitted(self, "z_")
        X, y = check_inputs_outputs(X, y)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        out = np.empty(len(y))
        for k in range(len(y)):
            Xa = np.vstack([self.X_, X[k]])
            ya = np.r_[self.y_, y[k]]
            sol, _ = solve_ccr(Xa, ya, len(ya) - 1, f"unit {k}")
            out[k] = 1.0 / sol.objective_value
        return out


class InverseDEA(BaseEstimator):
    """Output estimation under increased inputs at constant CCR efficiency.

    ``fit(X, y)`` records the reference set and each unit's CCR score.
    ``predict(X_new)`` takes one row per fitted unit holding that unit's
    increased inputs and returns the estimated outputs.
    """

    def fit(self, X, y):
        X, y = check_inputs_outputs(X, y)
        ccr = CCREfficiency().fit(X, y)
        self.X_ = X
        self.y_ = y
        self.z_ = ccr.z_
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X):
        check_is_fitted(self, "z_")
        X = check_array(X, dtype=np.float64)
        if X.shape != self.X_.shape:
            raise ValueError(f"X must have shape {self.X_.shape}, one row per fitted unit")
        return np.array([
            solve_inverse(self.X_, self.y_, k, X[k], self.z_[k]).beta for k in range(len(self.y_))
        ])


class InterruptionCostEstimator(BaseEstimator):
    """Monte Carlo interruption cost per producer.

    ``fit(X, y)`` stores the producers (columns electricity, raw materials,
    labor; ``y`` sales). ``predict(D)`` takes one ``(mean_mwh, std_mwh)``
    row per fitted producer and returns the mean cost in Rial/kWh
    (NaN when every sample was skipped).
    """

    def __init__(self, n_samples=1000, seed=42):
        self.n_samples = n_samples
        self.seed = seed

    def fit(self, X, y, ids=None):
        self.dataset_ = Dataset.from_arrays(X, y, ids)
        self.n_features_in_ = 3
        return self

    def predict(self, D):
        check_is_fitted(self, "dataset_")
        D = check_array(D, dtype=np.float64)
        if D.shape != (len(self.dataset_), 2):
            raise ValueError(f"D must have shape ({len(self.dataset_)}, 2)")
        self.estimates_ = []
        for k, (mean, std) in enumerate(D):
            p = self.dataset_[k]
            dist = EnergyDistribution(p.id, mean, std, p.electricity_mwh)
            self.estimates_.append(monte_carlo_estimate(self.dataset_, k, dist, self.n_samples, self.seed))
        return np.array([np.nan if e.mean_ic is None else e.mean_ic for e in self.estimates_])
