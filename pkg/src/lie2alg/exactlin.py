"""Exact rational scalars, dense matrices and Kronecker products.

Everything is over Q: entries are Python ints or `fractions.Fraction`,
never floats.  Matrices act on column vectors, so ``a @ b`` is the usual
matrix product and a diagram-order composite "f then g" multiplies as
``g.matrix @ f.matrix``.  Kronecker products use lexicographic pair
indexing with the left factor major, shared by every tensor construction
in the package.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


class DimensionMismatch(ValueError):
    """Shapes of the operands do not line up."""


def rational(x) -> int | Fraction:
    """Parse an exact rational from an int, Fraction or 'p/q' / 'n' string."""
    if isinstance(x, bool):
        raise ValueError(f"not a rational: {x!r}")
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, str):
        s = x.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            return Fraction(int(num), int(den))
        return int(s)
    raise ValueError(f"not a rational: {x!r}")


def rat_str(x) -> str:
    """Format an exact rational as 'p/q', or 'n' when the denominator is 1."""
    q = Fraction(x)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# vectors are plain lists of exact numbers

def vzeros(n: int) -> list:
    return [0] * n


def vunit(n: int, i: int) -> list:
    v = [0] * n
    v[i] = 1
    return v


def vadd(a: list, b: list) -> list:
    return [x + y for x, y in zip(a, b, strict=True)]


def vsub(a: list, b: list) -> list:
    return [x - y for x, y in zip(a, b, strict=True)]


def vneg(a: list) -> list:
    return [-x for x in a]


def vscale(c, a: list) -> list:
    return [c * x for x in a]


def vis_zero(a: list) -> bool:
    return all(not x for x in a)


class RMatrix:
    """Dense matrix over Q with row-major storage."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: list):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise DimensionMismatch(f"expected {rows}x{cols} grid")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "RMatrix":
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    @classmethod
    def from_rows(cls, rows: list, cols: int | None = None) -> "RMatrix":
        if cols is None:
            if not rows:
                raise DimensionMismatch("empty row list needs an explicit column count")
            cols = len(rows[0])
        return cls(len(rows), cols, [list(r) for r in rows])

    @classmethod
    def from_cols(cls, cols: list, rows: int | None = None) -> "RMatrix":
        if rows is None:
            if not cols:
                raise DimensionMismatch("empty column list needs an explicit row count")
            rows = len(cols[0])
        data = [[c[i] for c in cols] for i in range(rows)]
        return cls(rows, len(cols), data)

    def col(self, j: int) -> list:
        return [row[j] for row in self.data]

    def row(self, i: int) -> list:
        return list(self.data[i])

    def transpose(self) -> "RMatrix":
        return RMatrix(self.cols, self.rows,
                       [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self.data == other.data)

    __hash__ = None

    def __add__(self, other: "RMatrix") -> "RMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition shape mismatch")
        return RMatrix(self.rows, self.cols,
                       [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other: "RMatrix") -> "RMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix subtraction shape mismatch")
        return RMatrix(self.rows, self.cols,
                       [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def __neg__(self) -> "RMatrix":
        return RMatrix(self.rows, self.cols, [[-a for a in r] for r in self.data])

    def scale(self, c) -> "RMatrix":
        return RMatrix(self.rows, self.cols, [[c * a for a in r] for r in self.data])

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        # skip zero entries; composites of braid-style matrices stay sparse
        nz = [[(j, b) for j, b in enumerate(row) if b] for row in other.data]
        out = [[0] * other.cols for _ in range(self.rows)]
        for i, arow in enumerate(self.data):
            out_i = out[i]
            for k, a in enumerate(arow):
                if a:
                    for j, b in nz[k]:
                        out_i[j] += a * b
        return RMatrix(self.rows, other.cols, out)

    def matvec(self, v: list) -> list:
        if len(v) != self.cols:
            raise DimensionMismatch(f"matvec length {len(v)} vs {self.cols} columns")
        out = [0] * self.rows
        data = self.data
        for k, x in enumerate(v):
            if x:
                for i in range(self.rows):
                    e = data[i][k]
                    if e:
                        out[i] += e * x
        return out

    def hstack(self, other: "RMatrix") -> "RMatrix":
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row mismatch")
        return RMatrix(self.rows, self.cols + other.cols,
                       [r1 + r2 for r1, r2 in zip(self.data, other.data)])

    def vstack(self, other: "RMatrix") -> "RMatrix":
        if self.cols != other.cols:
            raise DimensionMismatch("vstack column mismatch")
        return RMatrix(self.rows + other.rows, self.cols,
                       [list(r) for r in self.data] + [list(r) for r in other.data])

    def __repr__(self) -> str:
        return f"RMatrix({self.rows}x{self.cols})"


def kron(a: RMatrix, b: RMatrix) -> RMatrix:
    """Kronecker product; (a o b)[(i,k),(j,l)] = a[i,j] b[k,l], left factor major."""
    out = RMatrix.zeros(a.rows * b.rows, a.cols * b.cols)
    odata = out.data
    for i, arow in enumerate(a.data):
        for j, av in enumerate(arow):
            if av:
                base_j = j * b.cols
                for k, brow in enumerate(b.data):
                    orow = odata[i * b.rows + k]
                    for l, bv in enumerate(brow):
                        if bv:
                            orow[base_j + l] = av * bv
    return out


def block_diag(a: RMatrix, b: RMatrix) -> RMatrix:
    out = RMatrix.zeros(a.rows + b.rows, a.cols + b.cols)
    for i in range(a.rows):
        out.data[i][: a.cols] = list(a.data[i])
    for i in range(b.rows):
        out.data[a.rows + i][a.cols:] = list(b.data[i])
    return out


def _rref(data: list, rows: int, cols: int):
    """Reduced row echelon form of a copy; returns (grid, pivot column list)."""
    m = [list(r) for r in data]
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        if pv != 1:
            inv = Fraction(1) / _q(pv)
            m[r] = [inv * x for x in m[r]]
        row_r = m[r]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
    return m, pivots


def pivot_columns(m: RMatrix) -> list:
    """Pivot column indices of the reduced row echelon form of m."""
    return _rref(m.data, m.rows, m.cols)[1]


def rank_kernel(m: RMatrix):
    """Rank and kernel basis of m.

    The kernel basis is read off the reduced row echelon form: one vector
    per free column, unit in that coordinate, ordered by free column.
    This is the deterministic echelon convention every downstream
    construction (skeletalization, classification) relies on.
    """
    rr, pivots = _rref(m.data, m.rows, m.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [0] * m.cols
        v[f] = 1
        for r, p in enumerate(pivots):
            if rr[r][f]:
                v[p] = -rr[r][f]
        basis.append(v)
    return len(pivots), basis


def solve_linear(m: RMatrix, b: list):
    """Particular solution of m x = b with zeros in the free coordinates.

    Returns None when b is not in the column space.
    """
    if len(b) != m.rows:
        raise DimensionMismatch(f"rhs length {len(b)} vs {m.rows} rows")
    aug = [list(row) + [bv] for row, bv in zip(m.data, b)]
    rr, pivots = _rref(aug, m.rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [0] * m.cols
    for r, p in enumerate(pivots):
        x[p] = rr[r][m.cols]
    return x


def invert(m: RMatrix) -> RMatrix:
    """Inverse of a square invertible matrix; raises if singular."""
    if m.rows != m.cols:
        raise DimensionMismatch("only square matrices invert")
    aug = [list(row) + list(idr) for row, idr in zip(m.data, RMatrix.identity(m.rows).data)]
    rr, pivots = _rref(aug, m.rows, 2 * m.cols)
    if pivots[: m.cols] != list(range(m.cols)):
        raise ValueError("matrix is singular")
    return RMatrix(m.rows, m.cols, [row[m.cols:] for row in rr])


def mat_to_json(m: RMatrix) -> list:
    return [[rat_str(x) for x in row] for row in m.data]


def mat_from_json(obj, rows: int | None = None, cols: int | None = None) -> RMatrix:
    if not isinstance(obj, list) or any(not isinstance(r, list) for r in obj):
        raise ValueError("matrix must be a list of rows")
    data = [[rational(x) for x in row] for row in obj]
    r = len(data) if rows is None else rows
    c = (len(data[0]) if data else 0) if cols is None else cols
    if not data and rows:
        raise ValueError(f"matrix has 0 rows, expected {rows}")
    return RMatrix(r, c, data if data else [])
