"""Smith normal form over the integers, tracking column transforms.

Only the column transform matters for cyclic decompositions: if
``U * A * V = D`` then the row space of ``A`` is carried onto the row space
of ``D`` by ``x -> x * V``, so ``Z^n / rowspace(A)`` is the direct sum of
``Z / d_j``.
"""
from dataclasses import dataclass
from typing import List, Sequence


Matrix = List[List[int]]


@dataclass(frozen=True)
class SmithForm:
    """Diagonal of the Smith form together with the column transform."""

    diagonal: tuple
    transform: tuple
    inverse: tuple


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class _Reducer:
    def __init__(self, rows: Sequence[Sequence[int]], ncols: int):
        self.a: Matrix = [list(r) for r in rows]
        self.m = len(self.a)
        self.n = ncols
        self.v = _identity(ncols)
        self.vinv = _identity(ncols)

    # column operations are mirrored on V and (inversely) on V^-1
    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        for row in self.v:
            row[i], row[j] = row[j], row[i]
        self.vinv[i], self.vinv[j] = self.vinv[j], self.vinv[i]

    def add_col(self, i: int, j: int, c: int) -> None:
        """col_i += c * col_j"""
        if c == 0:
            return
        for row in self.a:
            row[i] += c * row[j]
        for row in self.v:
            row[i] += c * row[j]
        self.vinv[j] = [x - c * y for x, y in zip(self.vinv[j], self.vinv[i])]

    def swap_rows(self, i: int, j: int) -> None:
        self.a[i], self.a[j] = self.a[j], self.a[i]

    def add_row(self, i: int, j: int, c: int) -> None:
        """row_i += c * row_j"""
        if c == 0:
            return
        self.a[i] = [x + c * y for x, y in zip(self.a[i], self.a[j])]

    def negate_row(self, i: int) -> None:
        self.a[i] = [-x for x in self.a[i]]

    def _pivot(self, t: int):
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                x = self.a[i][j]
                if x != 0 and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        return best

    def reduce(self) -> SmithForm:
        for t in range(min(self.m, self.n)):
            while True:
                best = self._pivot(t)
                if best is None:
                    return self._result()
                _, i, j = best
                self.swap_rows(t, i)
                self.swap_cols(t, j)
                p = self.a[t][t]
                clean = True
                for i in range(t + 1, self.m):
                    self.add_row(i, t, -(self.a[i][t] // p))
                    clean = clean and self.a[i][t] == 0
                for j in range(t + 1, self.n):
                    self.add_col(j, t, -(self.a[t][j] // p))
                    clean = clean and self.a[t][j] == 0
                if not clean:
                    continue
                offender = next(
                    (i for i in range(t + 1, self.m)
                     for j in range(t + 1, self.n) if self.a[i][j] % p != 0),
                    None,
                )
                if offender is None:
                    break
                self.add_row(t, offender, 1)
            if self.a[t][t] < 0:
                self.negate_row(t)
        return self._result()

    def _result(self) -> SmithForm:
        diagonal = tuple(
            abs(self.a[t][t]) if t < self.m else 0 for t in range(self.n)
        )
        return SmithForm(
            diagonal=diagonal,
            transform=tuple(tuple(r) for r in self.v),
            inverse=tuple(tuple(r) for r in self.vinv),
        )


def smith_normal_form(rows: Sequence[Sequence[int]], ncols: int) -> SmithForm:
    """
    Compute the Smith normal form of an integer matrix.

    Args:
        rows: Matrix rows (relations), each of length ``ncols``
        ncols: Number of columns

    Returns:
        SmithForm with the diagonal (one entry per column, zero past the
        rank), the unimodular column transform V and its inverse
    """
    return _Reducer(rows, ncols).reduce()
