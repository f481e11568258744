"""Exact integer/rational linear algebra kernel.

Everything works over Python's arbitrary-precision integers, with
``fractions.Fraction`` for rational data; no floating point is used anywhere
in this package. Rows are the semantic unit throughout: a lattice is the row
span of its generator matrix, and the Hermite normal form is the row-style
upper-triangular one (pivots positive, entries above each pivot reduced into
``[0, pivot)``, zero rows at the bottom). That makes the HNF a canonical
form, so equality of row spans is equality of matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

__all__ = [
    "IntMatrix",
    "RatMatrix",
    "xgcd",
    "hnf",
    "hnf_basis",
    "snf",
    "left_kernel",
    "solve_integer",
]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: ``(g, x, y)`` with ``g = a*x + b*y`` and ``g >= 0``."""
    r0, r1 = a, b
    x0, x1 = 1, 0
    y0, y1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
    return r0, x0, y0


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row-major tuple of tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise ValueError("ragged rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if other.cols != self.cols:
            raise ValueError("column count mismatch")
        return IntMatrix(self.entries + other.entries)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(k * x for x in row) for row in self.entries))

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        cols = other.transpose().entries
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def content(self) -> int:
        """gcd of all entries (0 for the zero matrix)."""
        g = 0
        for row in self.entries:
            for x in row:
                g = gcd(g, x)
        return g

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if pivot is None:
                    return 0
                a[k], a[pivot] = a[pivot], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def _hnf_core(
    rows: list[list[int]], with_transform: bool
) -> tuple[list[list[int]], Optional[list[list[int]]]]:
    n_rows = len(rows)
    n_cols = len(rows[0])
    u = [[int(i == j) for j in range(n_rows)] for i in range(n_rows)] if with_transform else None
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
            if u is not None:
                u[r], u[pivot] = u[pivot], u[r]
        for i in range(r + 1, n_rows):
            if rows[i][c] == 0:
                continue
            a, b = rows[r][c], rows[i][c]
            if b % a == 0:
                q = b // a
                rows[i] = [q2 - q * p for p, q2 in zip(rows[r], rows[i])]
                if u is not None:
                    u[i] = [q2 - q * p for p, q2 in zip(u[r], u[i])]
                continue
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            top, low = rows[r], rows[i]
            rows[r] = [x * p + y * q for p, q in zip(top, low)]
            rows[i] = [ag * q - bg * p for p, q in zip(top, low)]
            if u is not None:
                top, low = u[r], u[i]
                u[r] = [x * p + y * q for p, q in zip(top, low)]
                u[i] = [ag * q - bg * p for p, q in zip(top, low)]
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
            if u is not None:
                u[r] = [-x for x in u[r]]
        piv = rows[r][c]
        for i in range(r):
            q = rows[i][c] // piv
            if q:
                rows[i] = [p - q * w for p, w in zip(rows[i], rows[r])]
                if u is not None:
                    u[i] = [p - q * w for p, w in zip(u[i], u[r])]
        r += 1
        if r == n_rows:
            break
    return rows, u


def hnf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form with its transform.

    Returns ``(h, u)`` with ``h = u @ m`` and ``|det u| = 1``. ``h`` is upper
    triangular on its rank profile with positive pivots, entries above each
    pivot reduced into ``[0, pivot)``, and zero rows (if any) at the bottom.
    """
    rows, u = _hnf_core([list(r) for r in m.entries], with_transform=True)
    assert u is not None
    return IntMatrix.from_rows(rows), IntMatrix.from_rows(u)


def hnf_basis(m: IntMatrix) -> IntMatrix:
    """The HNF alone (same matrix as ``hnf(m)[0]``, skipping the transform)."""
    rows, _ = _hnf_core([list(r) for r in m.entries], with_transform=False)
    return IntMatrix.from_rows(rows)


def left_kernel(m: IntMatrix) -> Optional[IntMatrix]:
    """Basis of ``{z : z @ m = 0}`` as matrix rows, or None if trivial.

    The kernel lattice is saturated: the returned rows are the bottom rows of
    a unimodular transform, so every integer kernel vector is an integer
    combination of them.
    """
    h, u = hnf(m)
    nonzero = sum(1 for row in h.entries if any(row))
    if nonzero == h.rows:
        return None
    return IntMatrix(u.entries[nonzero:])


def snf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: ``(s, u, v)`` with ``s = u @ m @ v`` diagonal.

    Diagonal entries are nonnegative and satisfy ``d1 | d2 | ...`` with zero
    entries (rank-deficient input) at the end; ``u`` and ``v`` are unimodular.
    """
    a = [list(row) for row in m.entries]
    n_rows, n_cols = m.shape
    u = [[int(i == j) for j in range(n_rows)] for i in range(n_rows)]
    v = [[int(i == j) for j in range(n_cols)] for i in range(n_cols)]
    k = min(n_rows, n_cols)

    def row_op(i1: int, i2: int, x: int, y: int, ag: int, bg: int) -> None:
        top, low = a[i1], a[i2]
        a[i1] = [x * p + y * q for p, q in zip(top, low)]
        a[i2] = [ag * q - bg * p for p, q in zip(top, low)]
        top, low = u[i1], u[i2]
        u[i1] = [x * p + y * q for p, q in zip(top, low)]
        u[i2] = [ag * q - bg * p for p, q in zip(top, low)]

    def col_op(j1: int, j2: int, x: int, y: int, ag: int, bg: int) -> None:
        for row in a:
            p, q = row[j1], row[j2]
            row[j1] = x * p + y * q
            row[j2] = ag * q - bg * p
        for row in v:
            p, q = row[j1], row[j2]
            row[j1] = x * p + y * q
            row[j2] = ag * q - bg * p

    def diagonalize(start: int) -> None:
        for t in range(start, k):
            # smallest nonzero entry in the trailing block makes a good pivot
            pivot = None
            best = None
            for i in range(t, n_rows):
                for j in range(t, n_cols):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best):
                        best = abs(x)
                        pivot = (i, j)
            if pivot is None:
                return
            pi, pj = pivot
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
                u[t], u[pi] = u[pi], u[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
                for row in v:
                    row[t], row[pj] = row[pj], row[t]
            while True:
                for i in range(t + 1, n_rows):
                    if a[i][t]:
                        piv, x = a[t][t], a[i][t]
                        if x % piv == 0:
                            # plain subtraction keeps the pivot row fixed
                            q = x // piv
                            a[i] = [w - q * p for p, w in zip(a[t], a[i])]
                            u[i] = [w - q * p for p, w in zip(u[t], u[i])]
                        else:
                            g, xx, yy = xgcd(piv, x)
                            row_op(t, i, xx, yy, piv // g, x // g)
                dirty = False
                for j in range(t + 1, n_cols):
                    if a[t][j]:
                        piv, x = a[t][t], a[t][j]
                        if x % piv == 0:
                            q = x // piv
                            for row in a:
                                row[j] -= q * row[t]
                            for row in v:
                                row[j] -= q * row[t]
                        else:
                            g, xx, yy = xgcd(piv, x)
                            col_op(t, j, xx, yy, piv // g, x // g)
                            dirty = True
                if not dirty and all(a[i][t] == 0 for i in range(t + 1, n_rows)):
                    break

    diagonalize(0)
    for t in range(k):
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    # enforce the divisibility chain; zero entries sink to the end
    changed = True
    while changed:
        changed = False
        for t in range(k - 1):
            p, q = a[t][t], a[t + 1][t + 1]
            if p == 0 and q != 0:
                a[t], a[t + 1] = a[t + 1], a[t]
                u[t], u[t + 1] = u[t + 1], u[t]
                for row in a:
                    row[t], row[t + 1] = row[t + 1], row[t]
                for row in v:
                    row[t], row[t + 1] = row[t + 1], row[t]
                changed = True
            elif p != 0 and q % p != 0:
                # couple the pair via a column add, then rediagonalize
                for row in a:
                    row[t] += row[t + 1]
                for row in v:
                    row[t] += row[t + 1]
                diagonalize(t)
                for i in range(t, k):
                    if a[i][i] < 0:
                        a[i] = [-x for x in a[i]]
                        u[i] = [-x for x in u[i]]
                changed = True
    return IntMatrix.from_rows(a), IntMatrix.from_rows(u), IntMatrix.from_rows(v)


def solve_integer(a: IntMatrix, b: Sequence[int]) -> Optional[tuple[int, ...]]:
    """One integer solution of ``a @ x = b``, or None if there is none.

    The solution is canonical: free variables vanish in the HNF coordinates
    (back-substitution along the transposed HNF), so equal inputs always give
    the same output. Absence of a solution is a value, not an error.
    """
    if len(b) != a.rows:
        raise ValueError("right-hand side length mismatch")
    h, u = hnf(a.transpose())  # h = u @ a^T, so a @ u^T = h^T
    n = a.cols
    pivot_cols: list[int] = []  # pivot column of h row i, for i = 0..rank-1
    for i in range(h.rows):
        j = next((jj for jj, x in enumerate(h.entries[i]) if x), None)
        if j is None:
            break
        pivot_cols.append(j)
    y = [0] * n
    for i, p in enumerate(pivot_cols):
        residue = b[p] - sum(h.entries[j][p] * y[j] for j in range(i))
        piv = h.entries[i][p]
        if residue % piv != 0:
            return None
        y[i] = residue // piv
    # verify every equation (rows of b outside the pivot profile included)
    rank = len(pivot_cols)
    for p in range(a.rows):
        if sum(h.entries[i][p] * y[i] for i in range(rank)) != b[p]:
            return None
    x = [sum(u.entries[i][kk] * y[i] for i in range(rank)) for kk in range(n)]
    return tuple(x)


def _det2(e, r0: int, r1: int, c0: int, c1: int) -> int:
    return e[r0][c0] * e[r1][c1] - e[r0][c1] * e[r1][c0]


def _det3(e, rs, cs) -> int:
    r0, r1, r2 = rs
    c0, c1, c2 = cs
    return (
        e[r0][c0] * (e[r1][c1] * e[r2][c2] - e[r1][c2] * e[r2][c1])
        - e[r0][c1] * (e[r1][c0] * e[r2][c2] - e[r1][c2] * e[r2][c0])
        + e[r0][c2] * (e[r1][c0] * e[r2][c1] - e[r1][c1] * e[r2][c0])
    )


def _adjugate(m: IntMatrix) -> IntMatrix:
    """Adjugate (transposed cofactor matrix) for sizes up to 4."""
    e = m.entries
    n = m.rows
    if n == 1:
        return IntMatrix(((1,),))
    if n == 2:
        return IntMatrix(((e[1][1], -e[0][1]), (-e[1][0], e[0][0])))
    idx = range(n)
    rows = []
    for j in idx:  # adj[j][i] = (-1)^(i+j) * minor(i, j)
        cs = [c for c in idx if c != j]
        row = []
        for i in idx:
            rs = [r for r in idx if r != i]
            minor = _det2(e, rs[0], rs[1], cs[0], cs[1]) if n == 3 else _det3(e, rs, cs)
            row.append(minor if (i + j) % 2 == 0 else -minor)
        rows.append(row)
    return IntMatrix.from_rows(rows)


class RatMatrix:
    """Rational matrix as an integer matrix over one positive denominator.

    Canonical form: ``den >= 1`` and ``gcd(den, content(num)) == 1``, so two
    RatMatrix values are equal as matrices iff their fields are equal.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: IntMatrix, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(num.content(), den)
        if g > 1:
            num = IntMatrix(tuple(tuple(x // g for x in row) for row in num.entries))
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def from_fractions(cls, rows: Iterable[Sequence[Fraction | int]]) -> "RatMatrix":
        grid = [[Fraction(x) for x in row] for row in rows]
        den = 1
        for row in grid:
            for x in row:
                den = lcm(den, x.denominator)
        num = IntMatrix.from_rows(
            [[x.numerator * (den // x.denominator) for x in row] for row in grid]
        )
        return cls(num, den)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(IntMatrix.identity(n))

    @property
    def rows(self) -> int:
        return self.num.rows

    @property
    def cols(self) -> int:
        return self.num.cols

    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(self.num.entries[i][j], self.den)

    def to_fractions(self) -> tuple[tuple[Fraction, ...], ...]:
        d = self.den
        return tuple(tuple(Fraction(x, d) for x in row) for row in self.num.entries)

    def is_integral(self) -> bool:
        return self.den == 1

    def to_int(self) -> IntMatrix:
        if self.den != 1:
            raise ValueError("matrix is not integral")
        return self.num

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.num.transpose(), self.den)

    def scale(self, k: Fraction | int) -> "RatMatrix":
        k = Fraction(k)
        return RatMatrix(self.num.scale(k.numerator), self.den * k.denominator)

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(-self.num, self.den)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if isinstance(other, IntMatrix):
            other = RatMatrix(other)
        return RatMatrix(self.num @ other.num, self.den * other.den)

    def __rmatmul__(self, other: IntMatrix) -> "RatMatrix":
        return RatMatrix(other @ self.num, self.den)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RatMatrix) and self.den == other.den and self.num == other.num
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatMatrix({self.num.entries!r}, {self.den})"

    def det(self) -> Fraction:
        return Fraction(self.num.det(), self.den**self.num.rows)

    def inverse(self) -> "RatMatrix":
        """Exact inverse: integer adjugate up to 4x4, Fraction Gauss-Jordan
        beyond."""
        if not self.num.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        if n <= 4:
            d = self.num.det()
            if d == 0:
                raise ZeroDivisionError("singular matrix")
            return RatMatrix(_adjugate(self.num).scale(self.den), d)
        a = [list(row) for row in self.to_fractions()]
        inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for c in range(n):
            pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
            if pivot is None:
                raise ZeroDivisionError("singular matrix")
            if pivot != c:
                a[c], a[pivot] = a[pivot], a[c]
                inv[c], inv[pivot] = inv[pivot], inv[c]
            scale = a[c][c]
            a[c] = [x / scale for x in a[c]]
            inv[c] = [x / scale for x in inv[c]]
            for i in range(n):
                if i != c and a[i][c] != 0:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
                    inv[i] = [x - f * y for x, y in zip(inv[i], inv[c])]
        return RatMatrix.from_fractions(inv)
