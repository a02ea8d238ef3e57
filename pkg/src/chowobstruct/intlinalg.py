"""Exact integer linear algebra: Smith and Hermite normal forms, lattice membership.

Everything here runs on plain Python integers, so intermediate entries may grow
without bound and no precision is ever lost.  That matters: the torsion orders
produced downstream (e.g. d^2/gcd for large degrees) overflow machine words
quickly, and the normal-form invariants are asserted exactly, never up to
rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1 = 1, 0
    y0, y1 = 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


class IntegerMatrix:
    """Immutable dense integer matrix stored as a tuple of row tuples."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]], cols: int | None = None):
        rows = []
        for row in entries:
            rows.append(tuple(self._as_int(e) for e in row))
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("ragged rows in matrix literal")
        if widths:
            ncols = widths.pop()
            if cols is not None and cols != ncols:
                raise ValueError(f"expected {cols} columns, got {ncols}")
        else:
            ncols = 0 if cols is None else cols
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", tuple(rows))

    @staticmethod
    def _as_int(e) -> int:
        if isinstance(e, bool) or not isinstance(e, (int, str)):
            raise ValueError(f"matrix entry {e!r} is not an integer")
        return int(e)

    def __setattr__(self, name, value):
        raise AttributeError("IntegerMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(([int(i == j) for j in range(n)] for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(([0] * cols for _ in range(rows)), cols=cols)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def transpose(self) -> "IntegerMatrix":
        if self.rows == 0:
            return IntegerMatrix(([] for _ in range(self.cols)), cols=0)
        return IntegerMatrix(zip(*self.entries), cols=self.rows)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = other.cols
        out = []
        for arow in self.entries:
            out.append([sum(arow[k] * other.entries[k][j] for k in range(self.cols)) for j in range(cols)])
        return IntegerMatrix(out, cols=cols)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination; exact for any size."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntegerMatrix)
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.to_lists()!r})"


@dataclass(frozen=True)
class SnfDecomposition:
    """Smith normal form data: u @ a @ v == s with unimodular u, v.

    s is diagonal (rectangular), its nonzero diagonal prefix is nonnegative and
    each entry divides the next; zeros trail.
    """

    u: IntegerMatrix
    s: IntegerMatrix
    v: IntegerMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return self.s.diagonal()


def smith_normal_form(a: IntegerMatrix) -> SnfDecomposition:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Pivots are chosen with minimal absolute value to keep intermediate entries
    small; after each pivot is isolated, a divisibility sweep folds any
    non-multiple of the pivot back into the working row so the final diagonal
    forms a divisor chain.  Works for any rectangular matrix, including empty
    ones.
    """
    m, n = a.rows, a.cols
    s = [list(row) for row in a.entries]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def add_row(mat, dst, src, c):
        rd, rs = mat[dst], mat[src]
        for k in range(len(rd)):
            rd[k] += c * rs[k]

    def add_col(mat, dst, src, c):
        for row in mat:
            row[dst] += c * row[src]

    def swap_cols(mat, i, j):
        for row in mat:
            row[i], row[j] = row[j], row[i]

    t = 0
    limit = min(m, n)
    while t < limit:
        best = 0
        pi = pj = -1
        for i in range(t, m):
            for j in range(t, n):
                e = abs(s[i][j])
                if e and (best == 0 or e < best):
                    best, pi, pj = e, i, j
        if pi < 0:
            break
        if pi != t:
            s[t], s[pi] = s[pi], s[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            swap_cols(s, t, pj)
            swap_cols(v, t, pj)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]

        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if s[i][t]:
                    q = s[i][t] // s[t][t]
                    if q:
                        add_row(s, i, t, -q)
                        add_row(u, i, t, -q)
                    if s[i][t]:
                        # remainder is a strictly smaller positive pivot
                        s[t], s[i] = s[i], s[t]
                        u[t], u[i] = u[i], u[t]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n):
                if s[t][j]:
                    q = s[t][j] // s[t][t]
                    if q:
                        add_col(s, j, t, -q)
                        add_col(v, j, t, -q)
                    if s[t][j]:
                        swap_cols(s, t, j)
                        swap_cols(v, t, j)
                        dirty = True
                        break

        p = s[t][t]
        carrier = -1
        for i in range(t + 1, m):
            if any(x % p for x in s[i][t + 1:]):
                carrier = i
                break
        if carrier >= 0:
            # pull the offending row into the pivot row and re-reduce at the same t
            add_row(s, t, carrier, 1)
            add_row(u, t, carrier, 1)
            continue
        t += 1

    return SnfDecomposition(
        u=IntegerMatrix(u, cols=m),
        s=IntegerMatrix(s, cols=n),
        v=IntegerMatrix(v, cols=n),
    )


def hermite_normal_form(a: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix]:
    """Row-style Hermite normal form: return (h, u) with u @ a == h, det(u) = +-1.

    h is in row-echelon form with positive pivots and every entry above a pivot
    reduced into [0, pivot).  The rows of h span the same lattice as the rows
    of a, which makes h the canonical basis used for membership tests and coset
    reduction.
    """
    m, n = a.rows, a.cols
    h = [list(row) for row in a.entries]
    u = [[int(i == j) for j in range(m)] for i in range(m)]

    r = 0
    for j in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if h[i][j]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
        for i in range(r + 1, m):
            if h[i][j] == 0:
                continue
            aa, bb = h[r][j], h[i][j]
            g, x, y = xgcd(aa, bb)
            p, q = aa // g, bb // g
            # unimodular 2x2 transform [[x, y], [-q, p]] on rows r, i (det = 1)
            h[r], h[i] = (
                [x * hr + y * hi for hr, hi in zip(h[r], h[i])],
                [-q * hr + p * hi for hr, hi in zip(h[r], h[i])],
            )
            u[r], u[i] = (
                [x * ur + y * ui for ur, ui in zip(u[r], u[i])],
                [-q * ur + p * ui for ur, ui in zip(u[r], u[i])],
            )
        if h[r][j] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][j] // h[r][j]
            if q:
                h[i] = [hi - q * hr for hi, hr in zip(h[i], h[r])]
                u[i] = [ui - q * ur for ui, ur in zip(u[i], u[r])]
        r += 1

    return IntegerMatrix(h, cols=n), IntegerMatrix(u, cols=m)


def hermite_reduce(h: IntegerMatrix, vector: Sequence[int]) -> tuple[int, ...]:
    """Reduce a vector modulo the row lattice of a Hermite-form matrix.

    Returns the unique coset representative with each pivot coordinate in
    [0, pivot).  The representative is the zero vector exactly when the input
    lies in the lattice.
    """
    if len(vector) != h.cols:
        raise ValueError(f"vector length {len(vector)} != matrix columns {h.cols}")
    w = [int(x) for x in vector]
    for row in h.entries:
        pj = next((k for k, x in enumerate(row) if x), None)
        if pj is None:
            break
        q = w[pj] // row[pj]
        if q:
            for k in range(pj, len(w)):
                w[k] -= q * row[k]
    return tuple(w)


def lattice_contains(basis: IntegerMatrix, vector: Sequence[int]) -> bool:
    """Decide exactly whether a vector lies in the integer row-span of basis."""
    h, _ = hermite_normal_form(basis)
    return not any(hermite_reduce(h, vector))
