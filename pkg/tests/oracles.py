"""Independent reference computations used by the tests.

Nothing here calls the package's simplex code.
"""

import itertools

import numpy as np

from outage_dea.lp import LinearProgram, Relation

VERTEX_TOL = 1e-9


def _feasible(A, b, rel, x, tol=VERTEX_TOL):
    if np.any(x < -tol * max(1.0, np.abs(x).max())):
        return False
    lhs = A @ x
    scale = np.maximum(1.0, np.abs(A) @ np.abs(x) + np.abs(b))
    for r, v, rhs, s in zip(rel, lhs, b, scale):
        if r is Relation.LE and v > rhs + tol * s:
            return False
        if r is Relation.GE and v < rhs - tol * s:
            return False
        if r is Relation.EQ and abs(v - rhs) > tol * s:
            return False
    return True


def _vertices(A, b, rel):
    """All basic feasible points of {x >= 0, A x (rel) b} by brute force."""
    m, n = A.shape
    planes = np.vstack([A, np.eye(n)])
    rhs = np.r_[b, np.zeros(n)]
    out = []
    for rows in itertools.combinations(range(m + n), n):
        M = planes[list(rows)]
        if abs(np.linalg.det(M)) < 1e-12 * max(1.0, np.abs(M).max()) ** n:
            continue
        x = np.linalg.solve(M, rhs[list(rows)])
        if _feasible(A, b, rel, x):
            out.append(x)
    return out


def enumerate_lp(lp: LinearProgram):
    """Classify and solve ``lp`` (all lower bounds zero) by enumeration.

    Returns ``("infeasible", None)``, ``("unbounded", None)`` or
    ``("optimal", value)``. Unboundedness is decided by maximizing the
    objective over the normalized recession cone
    ``{d >= 0, sum(d) = 1, A d (rel) 0}``, also by enumeration.
    """
    assert np.all(lp.lower_bounds == 0)
    A, b, rel = lp.matrix()
    c = lp.objective
    verts = _vertices(A, b, rel)
    if not verts:
        return "infeasible", None
    n = c.size
    A_r = np.vstack([A, np.ones((1, n))])
    b_r = np.r_[np.zeros(len(b)), 1.0]
    rel_r = list(rel) + [Relation.EQ]
    rays = _vertices(A_r, b_r, rel_r)
    if rays and max(c @ d for d in rays) > 1e-9 * max(1.0, np.abs(c).max()):
        return "unbounded", None
    return "optimal", max(float(c @ v) for v in verts)


def random_lp(rng, bounded=True, integer=False, max_vars=6, max_rows=6):
    """Small random LP over x >= 0 with at most ``max_rows`` constraints.

    With ``bounded=True`` the first row is ``w @ x <= U`` with ``w > 0``,
    which caps the feasible region.
    """
    n = int(rng.integers(1, max_vars + 1))
    m = int(rng.integers(1, max_rows + 1))

    def draw(size):
        if integer:
            return rng.integers(-4, 7, size=size).astype(float)
        return np.round(rng.normal(size=size) * 3, 3)

    rows = []
    if bounded:
        rows.append((rng.uniform(0.5, 3.0, size=n).round(3), Relation.LE, round(float(rng.uniform(5, 20)), 3)))
    while len(rows) < m:
        rel = (Relation.LE, Relation.LE, Relation.GE, Relation.EQ)[rng.integers(4)]
        rows.append((draw(n), rel, float(draw(()))))
    return LinearProgram(draw(n), rows)
