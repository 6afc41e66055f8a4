"""Exact dense linear algebra over Scalar entries.

Everything here is plain Gaussian elimination or tableau simplex with
Bland's rule, run on exact field elements.  Matrix sizes in this package
stay tiny (lattice ranks up to ~20, usually 2 to 4), so no attention is
paid to asymptotics.
"""

from __future__ import annotations

from .errors import UnboundedRay
from .scalars import ONE, ZERO, Scalar


class SingularMatrix(ValueError):
    pass


def _as_matrix(rows):
    return [[Scalar.of(x) for x in row] for row in rows]


def solve_square(matrix, rhs):
    """Solve ``A x = b`` for square nonsingular A of Scalars.

    The right-hand side entries only need +, -, scalar multiplication and
    division by a Scalar, so affine jets work as well as plain Scalars.
    """
    a = _as_matrix(matrix)
    b = list(rhs)
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("solve_square expects a square system")
    for col in range(n):
        pivot = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if pivot is None:
            raise SingularMatrix("singular matrix")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
        for r in range(col + 1, n):
            if a[r][col].is_zero():
                continue
            f = a[r][col] / a[col][col]
            for c in range(col, n):
                a[r][c] = a[r][c] - f * a[col][c]
            b[r] = b[r] - f * b[col]
    x = [None] * n
    for i in range(n - 1, -1, -1):
        acc = b[i]
        for j in range(i + 1, n):
            acc = acc - a[i][j] * x[j]
        x[i] = acc / a[i][i]
    return x


def determinant(matrix) -> Scalar:
    a = _as_matrix(matrix)
    n = len(a)
    det = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det = det * a[col][col]
        for r in range(col + 1, n):
            if a[r][col].is_zero():
                continue
            f = a[r][col] / a[col][col]
            for c in range(col, n):
                a[r][c] = a[r][c] - f * a[col][c]
    return det


def rank(matrix) -> int:
    a = _as_matrix(matrix)
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rk, row = 0, 0
    for col in range(cols):
        pivot = next((r for r in range(row, rows) if not a[r][col].is_zero()), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        for r in range(row + 1, rows):
            if a[r][col].is_zero():
                continue
            f = a[r][col] / a[row][col]
            for c in range(col, cols):
                a[r][c] = a[r][c] - f * a[row][c]
        rk += 1
        row += 1
        if row == rows:
            break
    return rk


def signature(matrix) -> tuple[int, int, int]:
    """Inertia (positive, negative, zero) of a symmetric Scalar matrix.

    Uses symmetric congruence reduction; when the remaining diagonal is all
    zero but some off-diagonal entry survives, a row/column addition brings
    a nonzero entry back onto the diagonal (characteristic zero).
    """
    a = _as_matrix(matrix)
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("signature expects a symmetric matrix")
    pos = neg = zero = 0
    idx = list(range(n))

    def add_row_col(src, dst):
        for c in range(n):
            a[dst][c] = a[dst][c] + a[src][c]
        for r in range(n):
            a[r][dst] = a[r][dst] + a[r][src]

    remaining = list(idx)
    while remaining:
        k = next((i for i in remaining if not a[i][i].is_zero()), None)
        if k is None:
            found = None
            for i in remaining:
                for j in remaining:
                    if i != j and not a[i][j].is_zero():
                        found = (i, j)
                        break
                if found:
                    break
            if found is None:
                zero += len(remaining)
                break
            i, j = found
            add_row_col(j, i)  # makes a[i][i] = 2*a[i][j] != 0
            k = i
        piv = a[k][k]
        if piv.sign() > 0:
            pos += 1
        else:
            neg += 1
        remaining.remove(k)
        for r in remaining:
            if a[r][k].is_zero():
                continue
            f = a[r][k] / piv
            for c in range(n):
                a[r][c] = a[r][c] - f * a[k][c]
            for c in range(n):
                a[c][r] = a[c][r] - f * a[c][k]
    return pos, neg, zero


def is_negative_definite(matrix) -> bool:
    """Sylvester test: (-1)^k * (leading k x k minor) > 0 for every k."""
    a = _as_matrix(matrix)
    n = len(a)
    for k in range(1, n + 1):
        minor = determinant([row[:k] for row in a[:k]])
        if ((-1) ** k * minor).sign() <= 0:
            return False
    return True


# -- simplex ------------------------------------------------------------------

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"


class LPResult:
    __slots__ = ("status", "objective", "solution")

    def __init__(self, status, objective=None, solution=None):
        self.status = status
        self.objective = objective
        self.solution = solution


def lp_maximize(columns, rhs, objective) -> LPResult:
    """Maximize ``objective . x`` subject to ``A x = rhs``, ``x >= 0``.

    ``columns`` is the list of columns of A (each a list of Scalars).  Exact
    two-phase tableau simplex with Bland's rule; never cycles.
    """
    m = len(rhs)
    n = len(columns)
    if any(len(col) != m for col in columns):
        raise ValueError("inconsistent column heights")
    if len(objective) != n:
        raise ValueError("objective length mismatch")
    # tableau rows: [a_0 .. a_{n+m-1} | b], columns n..n+m-1 are artificials
    tab = []
    for i in range(m):
        row = [Scalar.of(columns[j][i]) for j in range(n)]
        row += [ONE if k == i else ZERO for k in range(m)]
        row.append(Scalar.of(rhs[i]))
        if row[-1].sign() < 0:
            row = [-x for x in row]
        tab.append(row)
    basis = list(range(n, n + m))
    width = n + m

    def pivot(row_i, col_j):
        piv = tab[row_i][col_j]
        tab[row_i] = [x / piv for x in tab[row_i]]
        for r in range(m):
            if r != row_i and not tab[r][col_j].is_zero():
                f = tab[r][col_j]
                tab[r] = [x - f * y for x, y in zip(tab[r], tab[row_i])]
        basis[row_i] = col_j

    def run_phase(costs, allowed) -> bool:
        # minimize costs . x over allowed columns; returns False on unbounded
        while True:
            # reduced cost of column j: c_j - c_B . B^{-1} A_j
            entering = None
            for j in allowed:
                if j in basis:
                    continue
                red = costs[j]
                for i in range(m):
                    cb = costs[basis[i]]
                    if not cb.is_zero() and not tab[i][j].is_zero():
                        red = red - cb * tab[i][j]
                if red.sign() < 0:
                    entering = j
                    break  # Bland: smallest index
            if entering is None:
                return True
            leaving = None
            best = None
            for i in range(m):
                aij = tab[i][entering]
                if aij.sign() > 0:
                    ratio = tab[i][width] / aij
                    if best is None or ratio < best or (
                            ratio == best and basis[i] < basis[leaving]):
                        best, leaving = ratio, i
            if leaving is None:
                return False
            pivot(leaving, entering)

    # phase 1: drive artificials to zero
    phase1_costs = [ZERO] * n + [ONE] * m
    run_phase(phase1_costs, list(range(width)))
    art_value = sum((tab[i][width] for i in range(m) if basis[i] >= n), ZERO)
    if art_value.sign() != 0:
        return LPResult(INFEASIBLE)
    # pivot surviving artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if not tab[i][j].is_zero()), None)
            if col is not None:
                pivot(i, col)
    keep = [i for i in range(m) if basis[i] < n]
    if len(keep) != m:
        # rows still carried by an artificial are redundant (zero rhs here)
        tab[:] = [tab[i] for i in keep]
        basis[:] = [basis[i] for i in keep]
        m = len(tab)

    # phase 2
    phase2_costs = [-Scalar.of(c) for c in objective] + [ZERO] * (width - n)
    ok = run_phase(phase2_costs, list(range(n)))
    if not ok:
        return LPResult(UNBOUNDED)
    x = [ZERO] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = tab[i][width]
    value = sum((Scalar.of(objective[j]) * x[j] for j in range(n)), ZERO)
    return LPResult(OPTIMAL, value, x)


def cone_contains(generators, target) -> bool:
    """Exact membership of ``target`` in the cone spanned by ``generators``."""
    if all(Scalar.of(t).is_zero() for t in target):
        return True
    if not generators:
        return False
    res = lp_maximize(generators, target, [ZERO] * len(generators))
    return res.status == OPTIMAL


def ray_exit(generators, origin, direction) -> Scalar:
    """Largest t >= 0 with ``origin - t*direction`` inside the cone.

    Raises :class:`UnboundedRay` when the ray never leaves the cone, which
    signals degenerate (non-salient) cone data.
    """
    cols = list(generators) + [list(direction)]
    objective = [ZERO] * len(generators) + [ONE]
    res = lp_maximize(cols, origin, objective)
    if res.status == UNBOUNDED:
        raise UnboundedRay("ray stays in the cone for all parameter values")
    if res.status == INFEASIBLE:
        raise ValueError("ray origin lies outside the cone")
    return res.objective
