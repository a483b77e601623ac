"""Smith normal form over Z and kernels/cokernels of integer matrices.

Matrices are plain lists of rows of Python ints, so arithmetic never
overflows.  An integer matrix ``M`` with ``rows x cols`` entries acts on
``K^cols -> K^rows`` for any abelian group ``K`` by multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .abelian import (
    AbelianGroup,
    countable_sum,
    direct_sum,
    n_torsion,
    normalize,
    tensor,
    cyclic,
)
from .errors import SymbolicRankError

IntMatrix = list[list[int]]

__all__ = [
    "IntMatrix",
    "SNFResult",
    "as_matrix",
    "identity",
    "zeros",
    "matmul",
    "determinant",
    "smith_normal_form",
    "matrix_ker_coker",
    "ker_coker_with_symbolic",
    "rank",
]


def as_matrix(rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
    """Copy ``rows`` into a rectangular list-of-lists matrix.

    ``cols`` is needed only to describe a matrix with zero rows.
    """
    m = [[int(x) for x in row] for row in rows]
    widths = {len(r) for r in m}
    if len(widths) > 1:
        raise ValueError("matrix is not rectangular")
    if cols is not None and m and widths != {cols}:
        raise ValueError("column count mismatch")
    return m


def shape(m: IntMatrix, cols: int | None = None) -> tuple[int, int]:
    if not m:
        return 0, (cols or 0)
    return len(m), len(m[0])


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> IntMatrix:
    return [[0] * c for _ in range(r)]


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SNFResult:
    """Diagonal ``d`` (length ``min(rows, cols)``) with ``u @ M @ v == diag(d)``."""

    d: tuple[int, ...]
    u: IntMatrix | None = None
    v: IntMatrix | None = None

    @property
    def rank(self) -> int:
        return sum(1 for x in self.d if x)


def smith_normal_form(m: IntMatrix, transforms: bool = False, cols: int | None = None) -> SNFResult:
    """Smith normal form with optional unimodular transforms.

    Returns ``d`` with ``d[0] | d[1] | ...`` (zeros last).  When
    ``transforms`` is set, ``u`` and ``v`` are unimodular and
    ``u @ m @ v`` is the ``rows x cols`` matrix with ``d`` on the diagonal.
    """
    rows, ncols = shape(m, cols)
    a = [row[:] for row in m]
    u = identity(rows) if transforms else None
    v = identity(ncols) if transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if v is not None:
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        if u is not None:
            u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):  # col_dst += f * col_src
        for row in a:
            row[dst] += f * row[src]
        if v is not None:
            for row in v:
                row[dst] += f * row[src]

    def neg_row(i):
        a[i] = [-x for x in a[i]]
        if u is not None:
            u[i] = [-x for x in u[i]]

    for t in range(min(rows, ncols)):
        while True:
            nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, ncols) if a[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // a[t][t]
                if q:
                    add_row(i, t, -q)
                if a[i][t]:
                    done = False
            for j in range(t + 1, ncols):
                q = a[t][j] // a[t][t]
                if q:
                    add_col(j, t, -q)
                if a[t][j]:
                    done = False
            if not done:
                continue
            # divisibility: pull in an entry the pivot does not divide
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, ncols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            neg_row(t)

    d = tuple(a[i][i] for i in range(min(rows, ncols)))
    return SNFResult(d, u, v)


def rank(m: IntMatrix, cols: int | None = None) -> int:
    return smith_normal_form(m, cols=cols).rank


def matrix_ker_coker(m: IntMatrix, k: AbelianGroup, cols: int | None = None
                     ) -> tuple[AbelianGroup, AbelianGroup]:
    """Kernel and cokernel of ``m`` acting on ``K^cols -> K^rows``.

    Both are read off the Smith form: ``d: K -> K`` has kernel the
    d-torsion of K and cokernel ``K (x) Z/d`` (all of K when ``d == 0``).
    """
    if k.has_symbolic:
        raise SymbolicRankError("symbolic rank in exact matrix computation")
    rows, ncols = shape(m, cols)
    d = smith_normal_form(m, cols=ncols).d
    ker, coker = [], []
    for x in d:
        if x == 0:
            ker.append(k)
            coker.append(k)
        elif x > 1:
            ker.append(n_torsion(k, x))
            coker.append(tensor(k, cyclic(x)))
    ker.append(countable_sum(k, ncols - len(d)))
    coker.append(countable_sum(k, rows - len(d)))
    return direct_sum(*ker), direct_sum(*coker)


def ker_coker_with_symbolic(m: IntMatrix, k: AbelianGroup, cols: int | None = None
                            ) -> tuple[AbelianGroup, AbelianGroup]:
    """Like :func:`matrix_ker_coker` but lets symbolic free ranks through.

    A symbolic summand Z^r only survives invariant factors 0 and 1; any other
    factor would produce torsion of unknown rank and is rejected.
    """
    exact = AbelianGroup(k.factors)
    ker, coker = matrix_ker_coker(m, exact, cols)
    if not k.symbolic:
        return ker, coker
    rows, ncols = shape(m, cols)
    d = smith_normal_form(m, cols=ncols).d
    if any(x > 1 for x in d):
        raise SymbolicRankError("symbolic rank in exact matrix computation")
    zeros_ = sum(1 for x in d if x == 0)
    sym = normalize([], k.symbolic)
    ker = direct_sum(ker, countable_sum(sym, zeros_ + ncols - len(d)))
    coker = direct_sum(coker, countable_sum(sym, zeros_ + rows - len(d)))
    return ker, coker
