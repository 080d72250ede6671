"""Dense exact linear algebra over Q(xi_m).

Matrices are lists of rows of CycNumber. Every routine is exact; nothing is
ever rounded.
"""
from __future__ import annotations

from typing import Sequence

from .cyclotomic import CycNumber

Matrix = list[list[CycNumber]]


class SingularSystemError(ArithmeticError):
    pass


def zeros(m: int, rows: int, cols: int) -> Matrix:
    z = CycNumber.zero(m)
    return [[z] * cols for _ in range(rows)]


def identity(m: int, size: int) -> Matrix:
    out = zeros(m, size, size)
    one = CycNumber.one(m)
    for i in range(size):
        out[i][i] = one
    return out


def matmul(a: Matrix, b: Matrix, m: int) -> Matrix:
    if not a or not b:
        return [[] for _ in a] if a else []
    inner, cols = len(b), len(b[0])
    zero = CycNumber.zero(m)
    out = []
    for row in a:
        acc = [zero] * cols
        for k in range(inner):
            rk = row[k]
            if rk:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] = acc[j] + rk * bk[j]
        out.append(acc)
    return out


def matvec(a: Matrix, v: Sequence[CycNumber], m: int) -> list[CycNumber]:
    zero = CycNumber.zero(m)
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def trace(a: Matrix, m: int) -> CycNumber:
    total = CycNumber.zero(m)
    for i, row in enumerate(a):
        total = total + row[i]
    return total


def is_zero_matrix(a: Matrix) -> bool:
    return not any(x for row in a for x in row)


def rref(rows: Matrix, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = work[r][c].inverse()
        work[r] = [x * inv if x else x for x in work[r]]
        prow = work[r]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y if y else x for x, y in zip(work[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1]) if a else 0


def nullspace(a: Matrix, ncols: int, m: int) -> list[list[CycNumber]]:
    """Basis (as a list of vectors) of {x : a x = 0}."""
    if not a:
        return identity(m, ncols)
    red, pivots = rref(a, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    zero, one = CycNumber.zero(m), CycNumber.one(m)
    basis = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for row, pc in zip(red, pivots):
            if row[f]:
                vec[pc] = -row[f]
        basis.append(vec)
    return basis


def solve(a: Matrix, b: Sequence[CycNumber], m: int) -> list[CycNumber]:
    """Unique solution x of a x = b; raises if inconsistent or underdetermined."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        raise SingularSystemError("inconsistent linear system")
    if len(pivots) < ncols:
        raise SingularSystemError(
            f"underdetermined system: rank {len(pivots)} < {ncols} unknowns")
    x = [CycNumber.zero(m)] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


class RowReducer:
    """Reduce vectors modulo a fixed subspace given by spanning rows.

    ``reduce(v)`` returns v minus the unique combination of the echelon rows
    that clears every pivot coordinate."""

    def __init__(self, rows: Matrix, ncols: int):
        self.rows, self.pivots = rref(rows, ncols) if rows else ([], [])
        self.ncols = ncols
        self.pivot_set = set(self.pivots)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Sequence[CycNumber]) -> list[CycNumber]:
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                v = [x - c * y if y else x for x, y in zip(v, row)]
        return v

    def contains(self, v: Sequence[CycNumber]) -> bool:
        return not any(self.reduce(v))


class SparseEchelon:
    """Incrementally built semi-echelon basis of sparse rows.

    Rows are dicts column -> CycNumber. Each stored row has a distinct
    leading column and no entries to its left, so reduction proceeds left
    to right without back-substitution."""

    def __init__(self):
        self.rows: dict[int, dict[int, CycNumber]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict[int, CycNumber]) -> dict[int, CycNumber]:
        row = {c: v for c, v in row.items() if v}
        done: dict[int, CycNumber] = {}
        while row:
            c = min(row)
            f = row[c]
            piv = self.rows.get(c)
            if piv is None:
                done[c] = row.pop(c)
                continue
            for k, v in piv.items():
                nv = row.get(k)
                nv = -f * v if nv is None else nv - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return done

    def add(self, row: dict[int, CycNumber]) -> bool:
        """Insert a row; returns True when it was independent."""
        red = self.reduce(row)
        if not red:
            return False
        c = min(red)
        inv = red[c].inverse()
        self.rows[c] = {k: v * inv for k, v in red.items()}
        return True
