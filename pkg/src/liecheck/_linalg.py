"""Exact linear algebra over Z and Q on small dense matrices.

Matrices are lists of rows. Rational entries are ``Fraction``; integer
routines keep Python ints throughout.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Row = list
Matrix = list


def as_fractions(m: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in m]


def transpose(m: Sequence[Sequence]) -> Matrix:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def rref(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    a = as_fractions(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [list(row) + e for row, e in zip(as_fractions(m), identity(n))]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def solve_left(rows: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Coefficients c with sum_i c_i rows[i] == target, or None.

    When the rows are dependent an arbitrary solution is returned.
    """
    k = len(rows)
    if k == 0:
        return [] if all(t == 0 for t in target) else None
    # columns of the system are the given rows
    aug = [[Fraction(rows[i][j]) for i in range(k)] + [Fraction(target[j])]
           for j in range(len(target))]
    red, piv = rref(aug)
    if k in piv:
        return None
    sol = [Fraction(0)] * k
    for r, c in enumerate(piv):
        sol[c] = red[r][k]
    return sol


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of the rational right kernel {v : m v = 0}."""
    if ncols is None:
        ncols = len(m[0])
    if not m:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, piv = rref(m)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(piv):
            v[c] = -red[r][f]
        basis.append(v)
    return basis


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b if a and b else max(a, b)


def denominator_lcm(values) -> int:
    out = 1
    for v in values:
        out = lcm(out, Fraction(v).denominator)
    return out


def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U*m*V == D diagonal, U and V unimodular.

    The diagonal entries are nonnegative and each divides the next.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    t = 0
    while t < min(rows, cols):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        swap_rows(t, pi)
        swap_cols(t, pj)
        done = False
        while not done:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                # enforce divisibility of the remaining block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % a[t][t]), None)
                if bad is not None:
                    add_row(bad[0], t, 1)
                    done = False
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, a, v


def integer_row_basis(gens: Sequence[Sequence[int]], n: int) -> Matrix:
    """A Z-basis of the lattice spanned by integer row vectors ``gens``."""
    if not gens:
        return []
    u, d, v = smith_normal_form(gens)
    vinv = integer_inverse(v)
    basis = []
    for i in range(min(len(d), n)):
        if d[i][i]:
            basis.append([d[i][i] * x for x in vinv[i]])
    return basis


def integer_inverse(m: Sequence[Sequence[int]]) -> Matrix:
    inv = inverse(m)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def integer_kernel(m: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Z-basis (rows) of {v in Z^ncols : m v = 0}."""
    if not m:
        return identity(ncols)
    u, d, v = smith_normal_form(m)
    r = sum(1 for i in range(min(len(d), ncols)) if d[i][i])
    vt = transpose(v)
    return [list(vt[j]) for j in range(r, ncols)]
