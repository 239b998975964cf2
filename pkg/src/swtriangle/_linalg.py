"""Small exact linear algebra over Z and Q.

Matrices are lists of rows.  Everything here is written for the sizes the
harness uses (a few dozen rows at most) and favors clarity over speed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

Matrix = list[list[int]]


def zeros(r: int, c: int) -> list[list]:
    return [[0] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def shape(a: Sequence[Sequence], cols: int | None = None) -> tuple[int, int]:
    r = len(a)
    return r, (len(a[0]) if r else (cols or 0))


def matmul(a, b, inner: int | None = None) -> list[list]:
    """a (r x k) times b (k x c); ``inner`` resolves k when a has no rows."""
    r = len(a)
    k = len(a[0]) if r else (inner if inner is not None else len(b))
    c = len(b[0]) if b else 0
    out = zeros(r, c)
    for i in range(r):
        row = a[i]
        for t in range(k):
            x = row[t]
            if x:
                bt = b[t]
                o = out[i]
                for j in range(c):
                    if bt[j]:
                        o[j] += x * bt[j]
    return out


def matvec(a, x) -> list:
    return [sum(r[j] * x[j] for j in range(len(x))) for r in a]


def transpose(a, cols: int | None = None) -> list[list]:
    r, c = shape(a, cols)
    return [[a[i][j] for i in range(r)] for j in range(c)]


def is_zero(a) -> bool:
    return all(x == 0 for row in a for x in row)


def hstack(*blocks) -> list[list]:
    rows = max(len(b) for b in blocks)
    return [sum((list(b[i]) for b in blocks), []) for i in range(rows)]


def block(a, b, c, d) -> list[list]:
    """[[a, b], [c, d]]."""
    return [list(x) + list(y) for x, y in zip(a, b)] + [list(x) + list(y) for x, y in zip(c, d)]


def _echelon(a) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank_q(a) -> int:
    if not a or not a[0]:
        return 0
    return len(_echelon(a)[1])


def nullspace_q(a, cols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : a x = 0} over Q."""
    _, c = shape(a, cols)
    if not a:
        return [[Fraction(int(i == j)) for j in range(c)] for i in range(c)]
    m, piv = _echelon(a)
    free = [j for j in range(c) if j not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * c
        x[f] = Fraction(1)
        for r, pc in enumerate(piv):
            x[pc] = -m[r][f]
        basis.append(x)
    return basis


def solve_q(a, b, cols: int | None = None) -> list[Fraction] | None:
    """Some x with a x = b over Q, or None."""
    _, c = shape(a, cols)
    if not a:
        return [Fraction(0)] * c if all(x == 0 for x in b) else None
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    m, piv = _echelon(aug)
    if c in piv:
        return None
    x = [Fraction(0)] * c
    for r, pc in enumerate(piv):
        x[pc] = m[r][c]
    return x


def in_span_q(vectors: list[list], v: list) -> bool:
    if not vectors:
        return all(x == 0 for x in v)
    return solve_q(transpose(vectors), v) is not None


def smith_normal_form(a, cols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U a V = D diagonal, U and V unimodular.

    The diagonal entries are non-negative and each divides the next.
    """
    rows, c = shape(a, cols)
    d = [list(map(int, row)) for row in a]
    u = identity(rows)
    v = identity(c)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):  # row dst += f * row src
        d[dst] = [x + f * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for row in d:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    t = 0
    while t < min(rows, c):
        nz = [(abs(d[i][j]), i, j) for i in range(t, rows) for j in range(t, c) if d[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        done = False
        while not done:
            done = True
            for i in range(t + 1, rows):
                if d[i][t]:
                    add_row(t, i, -(d[i][t] // d[t][t]))
                    if d[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, c):
                if d[t][j]:
                    add_col(t, j, -(d[t][j] // d[t][t]))
                    if d[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                # divisibility: fold a bad entry into row t and retry
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, c) if d[i][j] % d[t][t]), None)
                if bad is not None:
                    add_row(bad[0], t, 1)
                    done = False
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, d, v


def invariant_factors(a, cols: int | None = None) -> list[int]:
    _, d, _ = smith_normal_form(a, cols)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]


def in_image_z(a, b, cols: int | None = None) -> list[int] | None:
    """Integer x with a x = b, or None if b is not in the integer image."""
    rows, c = shape(a, cols)
    if rows == 0:
        return [0] * c
    u, d, v = smith_normal_form(a, c)
    ub = matvec(u, b)
    y = [0] * c
    for i in range(rows):
        di = d[i][i] if i < c else 0
        if di == 0:
            if ub[i]:
                return None
        elif ub[i] % di:
            return None
        else:
            y[i] = ub[i] // di
    return matvec(v, y)


def inverse_unimodular(a: Matrix) -> Matrix:
    n = len(a)
    inv = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        x = in_image_z(a, e, n)
        if x is None:
            raise ValueError("matrix is not unimodular")
        inv.append(x)
    return transpose(inv, n)


def random_unimodular(rng: random.Random, n: int, steps: int = 6, bound: int = 2) -> Matrix:
    """Product of elementary integer row operations."""
    m = identity(n)
    if n < 2:
        return m
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        f = rng.randint(-bound, bound)
        m[i] = [x + f * y for x, y in zip(m[i], m[j])]
    return m
