"""Dense two-phase simplex for small linear programs.

Problems are stated as ``maximize c @ x`` subject to a list of
``(coefficients, relation, rhs)`` rows and per-variable lower bounds
(finite, or ``-inf`` for a free variable). Every DEA model in this package
has at most a dozen rows and columns, so a full tableau is used throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

PIVOT_TOL = 1e-10
FEAS_TOL = 1e-8
OPT_TOL = 1e-8


class LPInputError(ValueError):
    """The program is malformed (shape mismatch, NaN, infinite data)."""


class LPIterationError(RuntimeError):
    """The pivot loop exceeded its iteration budget."""


class Relation(str, enum.Enum):
    LE = "<="
    GE = ">="
    EQ = "="


class Status(str, enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    coefficients: np.ndarray
    relation: Relation
    rhs: float


@dataclass(frozen=True)
class LinearProgram:
    """``maximize objective @ x`` over the rows in ``constraints``.

    ``lower_bounds`` defaults to zero for every variable. Upper bounds are
    expressed as ordinary ``<=`` rows.
    """

    objective: np.ndarray
    constraints: tuple[Constraint, ...]
    lower_bounds: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        c = np.asarray(self.objective, dtype=float)
        if c.ndim != 1 or c.size == 0:
            raise LPInputError("objective must be a non-empty 1-d vector")
        if not np.all(np.isfinite(c)):
            raise LPInputError("objective contains non-finite entries")
        n = c.size

        rows = []
        for k, con in enumerate(self.constraints):
            if isinstance(con, Constraint):
                coeffs, rel, rhs = con.coefficients, con.relation, con.rhs
            else:
                try:
                    coeffs, rel, rhs = con
                except (TypeError, ValueError):
                    raise LPInputError(f"constraint {k} is not a (coefficients, relation, rhs) triple") from None
            a = np.asarray(coeffs, dtype=float)
            if a.shape != (n,):
                raise LPInputError(f"constraint {k} has {a.size} coefficients, expected {n}")
            try:
                rel = Relation(rel)
            except ValueError:
                raise LPInputError(f"constraint {k} has unknown relation {rel!r}") from None
            try:
                rhs = float(rhs)
            except (TypeError, ValueError):
                raise LPInputError(f"constraint {k} has a non-numeric right-hand side") from None
            if not (np.all(np.isfinite(a)) and np.isfinite(rhs)):
                raise LPInputError(f"constraint {k} contains non-finite entries")
            a.flags.writeable = False
            rows.append(Constraint(a, rel, rhs))

        if self.lower_bounds is None:
            lb = np.zeros(n)
        else:
            lb = np.asarray(self.lower_bounds, dtype=float)
            if lb.shape != (n,):
                raise LPInputError(f"lower_bounds has {lb.size} entries, expected {n}")
            if np.any(np.isnan(lb)) or np.any(lb == np.inf):
                raise LPInputError("lower bounds must be finite or -inf")
        c.flags.writeable = False
        lb.flags.writeable = False
        object.__setattr__(self, "objective", c)
        object.__setattr__(self, "constraints", tuple(rows))
        object.__setattr__(self, "lower_bounds", lb)

    @property
    def n_variables(self) -> int:
        return self.objective.size

    def matrix(self) -> tuple[np.ndarray, np.ndarray, list[Relation]]:
        """Return ``(A, b, relations)`` with one row per constraint."""
        n = self.n_variables
        if not self.constraints:
            return np.zeros((0, n)), np.zeros(0), []
        A = np.vstack([con.coefficients for con in self.constraints])
        b = np.array([con.rhs for con in self.constraints])
        return A, b, [con.relation for con in self.constraints]


@dataclass(frozen=True)
class LpSolution:
    """Solver result.

    ``duals`` holds one multiplier per constraint row of the original
    program (>= 0 for ``<=`` rows, <= 0 for ``>=`` rows, free for ``=``),
    so that ``objective - A.T @ duals`` is the vector of reduced costs.
    """

    status: Status
    objective_value: float | None = None
    variables: np.ndarray | None = None
    duals: np.ndarray | None = None
    iterations: int = 0

    @property
    def is_optimal(self) -> bool:
        return self.status is Status.OPTIMAL


class _Tableau:
    def __init__(self, T: np.ndarray, basis: list[int]):
        self.T = T
        self.basis = basis
        self.iterations = 0

    @property
    def m(self) -> int:
        return self.T.shape[0]

    def pivot(self, r: int, j: int):
        T = self.T
        T[r] /= T[r, j]
        col = T[:, j].copy()
        col[r] = 0.0
        T -= np.outer(col, T[r])
        T[:, j] = 0.0
        T[r, j] = 1.0
        self.basis[r] = j
        self.iterations += 1

    def run(self, cost: np.ndarray, allowed: np.ndarray) -> Status:
        """Maximize ``cost @ x`` from the current basic feasible solution.

        Dantzig pricing until the objective stalls for ``2 * (rows + cols)``
        consecutive pivots, then Bland's rule for the rest of the phase.
        """
        ncols = self.T.shape[1] - 1
        stall_limit = 2 * (self.m + ncols)
        max_iter = 50 * (self.m + ncols) + 1000
        cost_scale = max(1.0, float(np.max(np.abs(cost))) if cost.size else 1.0)
        bland = False
        stall = 0
        best = -np.inf
        for _ in range(max_iter):
            T = self.T
            cb = cost[self.basis]
            value = float(cb @ T[:, -1])
            if value > best + OPT_TOL * max(1.0, abs(best) if np.isfinite(best) else 1.0):
                best = value
                stall = 0
            else:
                stall += 1
                if stall >= stall_limit:
                    bland = True

            reduced = cost - cb @ T[:, :-1]
            reduced[~allowed] = 0.0
            reduced[self.basis] = 0.0
            candidates = np.flatnonzero(reduced > OPT_TOL * cost_scale)
            if candidates.size == 0:
                return Status.OPTIMAL
            if bland:
                j = int(candidates[0])
            else:
                j = int(candidates[np.argmax(reduced[candidates])])

            col = T[:, j]
            rows = np.flatnonzero(col > PIVOT_TOL)
            if rows.size == 0:
                return Status.UNBOUNDED
            ratios = T[rows, -1] / col[rows]
            rmin = ratios.min()
            ties = rows[ratios <= rmin + PIVOT_TOL * max(1.0, abs(rmin))]
            # smallest leaving index keeps Bland's rule cycle-free
            r = int(min(ties, key=lambda i: self.basis[i]))
            self.pivot(r, j)
            np.maximum(self.T[:, -1], 0.0, out=self.T[:, -1])
        raise LPIterationError(f"simplex did not terminate within {max_iter} pivots")


def _standard_form(lp: LinearProgram):
    """Shift finite lower bounds to zero and split free variables.

    Returns ``(A, b, c, relations, T, offset)`` where the original variables
    are ``x = offset + T @ x_std`` with ``x_std >= 0``.
    """
    A, b, relations = lp.matrix()
    lb = lp.lower_bounds
    n = lp.n_variables
    free = np.isneginf(lb)
    n_std = n + int(free.sum())
    T = np.zeros((n, n_std))
    T[np.arange(n), np.arange(n)] = 1.0
    for k, j in enumerate(np.flatnonzero(free)):
        T[j, n + k] = -1.0
    offset = np.where(free, 0.0, lb)
    return A @ T, b - A @ offset, lp.objective @ T, relations, T, offset


def solve(lp: LinearProgram) -> LpSolution:
    """Solve ``lp`` with the two-phase simplex method.

    The result is a basic (vertex) solution when the program is optimal.
    Malformed programs are rejected when the :class:`LinearProgram` is
    constructed, so every call here returns a classified status.
    """
    if not isinstance(lp, LinearProgram):
        raise LPInputError("solve() expects a LinearProgram")
    A, b, c, relations, T_map, offset = _standard_form(lp)
    m_all, n_std = A.shape

    # row scaling; sign flip so every rhs is non-negative
    scale = np.abs(A).max(axis=1) if m_all else np.zeros(0)
    keep = []
    for i in range(m_all):
        if scale[i] > 0:
            keep.append(i)
            continue
        rhs = b[i]
        rel = relations[i]
        ok = (
            (rel is Relation.LE and rhs >= -FEAS_TOL)
            or (rel is Relation.GE and rhs <= FEAS_TOL)
            or (rel is Relation.EQ and abs(rhs) <= FEAS_TOL)
        )
        if not ok:
            return LpSolution(Status.INFEASIBLE)
    keep = np.array(keep, dtype=int)
    A_s = A[keep] / scale[keep, None]
    b_s = b[keep] / scale[keep]
    rel_s = [relations[i] for i in keep]
    sign = np.where(b_s < 0, -1.0, 1.0)
    A_s *= sign[:, None]
    b_s *= sign
    flip = {Relation.LE: Relation.GE, Relation.GE: Relation.LE, Relation.EQ: Relation.EQ}
    rel_s = [flip[r] if s < 0 else r for r, s in zip(rel_s, sign)]
    m = len(keep)

    n_slack = sum(r is not Relation.EQ for r in rel_s)
    n_art = sum(r is not Relation.LE for r in rel_s)
    ncols = n_std + n_slack + n_art
    tab = np.zeros((m, ncols + 1))
    tab[:, :n_std] = A_s
    tab[:, -1] = b_s
    basis = []
    s_col, a_col = n_std, n_std + n_slack
    for i, rel in enumerate(rel_s):
        if rel is Relation.LE:
            tab[i, s_col] = 1.0
            basis.append(s_col)
            s_col += 1
        else:
            if rel is Relation.GE:
                tab[i, s_col] = -1.0
                s_col += 1
            tab[i, a_col] = 1.0
            basis.append(a_col)
            a_col += 1
    original = tab[:, :-1].copy()
    art = np.zeros(ncols, dtype=bool)
    art[n_std + n_slack:] = True

    tableau = _Tableau(tab, basis)
    if n_art:
        phase1 = np.where(art, -1.0, 0.0)
        tableau.run(phase1, np.ones(ncols, dtype=bool))
        infeas = float(tableau.T[[i for i, j in enumerate(tableau.basis) if art[j]], -1].sum())
        if infeas > FEAS_TOL * max(1.0, float(np.max(b_s, initial=0.0))):
            return LpSolution(Status.INFEASIBLE, iterations=tableau.iterations)
        # drive zero-level artificials out of the basis; drop redundant rows
        redundant = []
        for r in range(tableau.m):
            if not art[tableau.basis[r]]:
                continue
            row = np.abs(tableau.T[r, :-1])
            row[art] = 0.0
            j = int(np.argmax(row))
            if row[j] > PIVOT_TOL:
                tableau.pivot(r, j)
            else:
                redundant.append(r)
        if redundant:
            live = [r for r in range(tableau.m) if r not in redundant]
            tableau.T = tableau.T[live]
            tableau.basis = [tableau.basis[r] for r in live]
        live_rows = [r for r in range(m) if r not in redundant]
    else:
        live_rows = list(range(m))

    cost = np.zeros(ncols)
    cost[:n_std] = c
    status = tableau.run(cost, ~art)
    if status is Status.UNBOUNDED:
        return LpSolution(Status.UNBOUNDED, iterations=tableau.iterations)

    x_std = np.zeros(ncols)
    x_std[tableau.basis] = tableau.T[:, -1]
    x = offset + T_map @ x_std[:n_std]

    # row multipliers from the final basis: B.T @ y = c_B
    y_s = np.zeros(m)
    if tableau.m:
        B = original[np.ix_(live_rows, tableau.basis)]
        y_s[live_rows] = np.linalg.lstsq(B.T, cost[tableau.basis], rcond=None)[0]
    duals = np.zeros(m_all)
    duals[keep] = y_s * sign / scale[keep]

    return LpSolution(
        Status.OPTIMAL,
        objective_value=float(lp.objective @ x),
        variables=x,
        duals=duals,
        iterations=tableau.iterations,
    )


def constraint_violation(lp: LinearProgram, x: Sequence[float]) -> float:
    """Largest violation of any row (scaled by its max coefficient) or bound."""
    x = np.asarray(x, dtype=float)
    worst = float(np.max(lp.lower_bounds - x, initial=0.0))
    for con in lp.constraints:
        s = float(np.max(np.abs(con.coefficients), initial=0.0)) or 1.0
        lhs = float(con.coefficients @ x)
        if con.relation is Relation.LE:
            v = lhs - con.rhs
        elif con.relation is Relation.GE:
            v = con.rhs - lhs
        else:
            v = abs(lhs - con.rhs)
        worst = max(worst, v / s)
    return worst
