"""Exact rational simplex with Bland's anti-cycling rule.

Solves  min/max  c.x  subject to  A x >= b  with free variables, via the
standard form  A(x+ - x-) - s = b,  x+, x-, s >= 0  and a two-phase full
tableau.  Every outcome carries a certificate that is verified by direct
substitution before it is returned:

  optimal    -> witness point attaining the value
  infeasible -> Farkas vector y >= 0 with y.A = 0 and y.b > 0
  unbounded  -> ray r with A r >= 0 improving the objective

Determinism over speed: Bland's rule, fixed tie-breaks, no scaling
heuristics.  Intended for dimensions <= 10 and a few hundred constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .errors import DimensionMismatch

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPOutcome:
    status: str
    value: Optional[Fraction] = None
    witness: Optional[Tuple[Fraction, ...]] = None
    certificate: Optional[Tuple[Fraction, ...]] = None
    # standard-form basis (column indices), for parametric continuation
    basis: Optional[Tuple[int, ...]] = None


def _pivot(tableau, rcost, basis, row, col):
    pivot = tableau[row][col]
    tableau[row] = [v / pivot for v in tableau[row]]
    prow = tableau[row]
    for r in range(len(tableau)):
        if r != row and tableau[r][col] != 0:
            f = tableau[r][col]
            tableau[r] = [a - f * b for a, b in zip(tableau[r], prow)]
    if rcost[col] != 0:
        f = rcost[col]
        for j in range(len(rcost)):
            rcost[j] -= f * prow[j]
    basis[row] = col


def _run_simplex(tableau, rcost, basis, ncols):
    """Bland pivoting until optimal or unbounded.  Returns entering column
    on unboundedness, else None."""
    while True:
        enter = None
        for j in range(ncols):
            if rcost[j] < 0:
                enter = j
                break
        if enter is None:
            return None
        leave = None
        best = None
        for i, row in enumerate(tableau):
            coef = row[enter]
            if coef > 0:
                ratio = row[-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return enter
        _pivot(tableau, rcost, basis, leave, enter)


def solve_raw(constraints: Sequence[Tuple[Sequence[Fraction], Fraction]],
              objective: Sequence[Fraction],
              sense: str = "min") -> LPOutcome:
    """Solve min/max objective.x over {x : a.x >= b for (a, b) in constraints}."""
    nvars = len(objective)
    for a, _ in constraints:
        if len(a) != nvars:
            raise DimensionMismatch(
                f"constraint has {len(a)} coefficients, expected {nvars}")
    obj = [Fraction(c) for c in objective]
    if sense == "max":
        obj = [-c for c in obj]
    elif sense != "min":
        raise ValueError(f"sense must be 'min' or 'max', got {sense!r}")

    rows = [( [Fraction(v) for v in a], Fraction(b) ) for a, b in constraints]
    m = len(rows)
    n = nvars
    nstruct = 2 * n + m

    if m == 0:
        # unconstrained: optimal only for zero objective
        if all(c == 0 for c in obj):
            return LPOutcome(OPTIMAL, Fraction(0), tuple(Fraction(0) for _ in range(n)),
                             basis=())
        ray = tuple(Fraction(0) if c == 0 else (Fraction(-1) if c > 0 else Fraction(1))
                    for c in obj)
        if sense == "max":
            pass  # ray improves the internal min, equivalently the max
        return LPOutcome(UNBOUNDED, certificate=ray)

    # phase 1 tableau: rows scaled to nonnegative rhs, one artificial per row
    sigma = [1 if b >= 0 else -1 for _, b in rows]
    tableau = []
    for i, (a, b) in enumerate(rows):
        s = sigma[i]
        row = [s * v for v in a] + [-s * v for v in a]
        row += [Fraction(0)] * m
        row[2 * n + i] = Fraction(-s)
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tableau.append(row + art + [s * b])
    basis = [nstruct + i for i in range(m)]
    ncols = nstruct + m
    rcost = [Fraction(0)] * (ncols + 1)
    for j in range(ncols):
        rcost[j] = (Fraction(1) if j >= nstruct else Fraction(0)) - sum(
            tableau[i][j] for i in range(m))
    rcost[-1] = -sum(tableau[i][-1] for i in range(m))

    _run_simplex(tableau, rcost, basis, ncols)
    phase1_obj = -rcost[-1]
    if phase1_obj > 0:
        # Farkas from phase-1 duals: y_i = 1 - reduced cost of artificial i
        farkas = []
        for i in range(m):
            y = Fraction(1) - rcost[nstruct + i]
            farkas.append(sigma[i] * y)
        _check_farkas(rows, farkas)
        return LPOutcome(INFEASIBLE, certificate=tuple(farkas))

    # drive artificials out of the basis (rows are always independent here
    # because of the slack block, so a pivot column always exists)
    for i in range(m):
        if basis[i] >= nstruct:
            for j in range(nstruct):
                if tableau[i][j] != 0:
                    _pivot(tableau, rcost, basis, i, j)
                    break
            else:
                raise AssertionError("zero row in full-rank standard form")

    # phase 2: real costs on structural columns, artificials forbidden
    cost2 = obj + [-c for c in obj] + [Fraction(0)] * m
    rcost = [Fraction(0)] * (ncols + 1)
    for j in range(nstruct):
        rcost[j] = cost2[j] - sum(cost2[basis[i]] * tableau[i][j] for i in range(m))
    for j in range(nstruct, ncols):
        rcost[j] = Fraction(1)  # block artificials from re-entering
    entering = _run_simplex(tableau, rcost, basis, nstruct)

    if entering is not None:
        direction = [Fraction(0)] * nstruct
        direction[entering] = Fraction(1)
        for i in range(m):
            if basis[i] < nstruct:
                direction[basis[i]] = -tableau[i][entering]
        ray = [direction[k] - direction[n + k] for k in range(n)]
        _check_ray(rows, obj, ray)
        if sense == "max":
            pass
        return LPOutcome(UNBOUNDED, certificate=tuple(ray))

    xstd = [Fraction(0)] * nstruct
    for i in range(m):
        if basis[i] < nstruct:
            xstd[basis[i]] = tableau[i][-1]
    point = [xstd[k] - xstd[n + k] for k in range(n)]
    value = sum((c * v for c, v in zip(obj, point)), Fraction(0))
    _check_point(rows, point)
    if sense == "max":
        value = -value
    return LPOutcome(OPTIMAL, value, tuple(point), basis=tuple(sorted(basis)))


def _check_point(rows, point):
    for a, b in rows:
        if sum((ai * xi for ai, xi in zip(a, point)), Fraction(0)) < b:
            raise AssertionError("simplex witness violates a constraint")


def _check_ray(rows, obj, ray):
    for a, _ in rows:
        if sum((ai * ri for ai, ri in zip(a, ray)), Fraction(0)) < 0:
            raise AssertionError("unbounded ray leaves the feasible cone")
    if sum((c * r for c, r in zip(obj, ray)), Fraction(0)) >= 0:
        raise AssertionError("unbounded ray does not improve the objective")


def _check_farkas(rows, farkas):
    if any(y < 0 for y in farkas):
        raise AssertionError("Farkas vector has a negative entry")
    n = len(rows[0][0])
    for k in range(n):
        if sum((y * a[k] for y, (a, _) in zip(farkas, rows)), Fraction(0)) != 0:
            raise AssertionError("Farkas combination does not vanish")
    if sum((y * b for y, (_, b) in zip(farkas, rows)), Fraction(0)) <= 0:
        raise AssertionError("Farkas combination is not positive")


def standard_basis_columns(constraints, nvars, basis):
    """Columns of the unscaled standard matrix [A | -A | -I] selected by
    `basis`, as an m x m matrix (list of rows)."""
    m = len(constraints)
    cols = []
    for k in basis:
        if k < nvars:
            col = [Fraction(a[k]) for a, _ in constraints]
        elif k < 2 * nvars:
            col = [-Fraction(a[k - nvars]) for a, _ in constraints]
        else:
            col = [Fraction(0)] * m
            col[k - 2 * nvars] = Fraction(-1)
        cols.append(col)
    # transpose to rows
    return [[cols[j][i] for j in range(m)] for i in range(m)]


def standard_costs(objective, nvars, basis):
    """Phase-2 costs of the basis columns for the internal min problem."""
    obj = [Fraction(c) for c in objective]
    out = []
    for k in basis:
        if k < nvars:
            out.append(obj[k])
        elif k < 2 * nvars:
            out.append(-obj[k - nvars])
        else:
            out.append(Fraction(0))
    return out
