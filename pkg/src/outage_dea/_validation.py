import numpy as np


def check_inputs_outputs(X, y):
    """Validate a DEA input matrix ``(n_units, n_inputs)`` and output vector.

    Inputs must be non-negative with at least one positive entry per unit;
    outputs must be strictly positive.
    """
    from sklearn.utils.validation import check_array, check_consistent_length

    X = check_array(X, dtype=np.float64, ensure_min_samples=1)
    y = check_array(y, dtype=np.float64, ensure_2d=False)
    if y.ndim != 1:
        raise ValueError(f"y must be 1-d, got shape {y.shape}")
    check_consistent_length(X, y)
    if np.any(X < 0):
        raise ValueError("inputs must be non-negative")
    if np.any(X.max(axis=1) <= 0):
        bad = int(np.flatnonzero(X.max(axis=1) <= 0)[0])
        raise ValueError(f"unit {bad} has no positive input")
    if np.any(y <= 0):
        raise ValueError("outputs must be strictly positive")
    return X, y


def check_index(index, n):
    if isinstance(index, (bool, np.bool_)) or not isinstance(index, (int, np.integer)):
        raise TypeError(f"producer index must be an integer, got {type(index).__name__}")
    if not 0 <= index < n:
        raise IndexError(f"producer index {index} out of range for {n} producers")
    return int(index)
