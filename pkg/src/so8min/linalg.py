"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`; matrices are small, dense and
immutable.  Nothing in this module ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Scalar = Fraction
Vec = tuple  # tuple of Fraction


class LinalgError(ValueError):
    pass


class NoSolution(LinalgError):
    """Raised by :func:`solve` when ``a @ x = b`` is inconsistent."""


class NonSquare(LinalgError):
    pass


class DimMismatch(LinalgError):
    pass


def to_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, str or Fraction")
    return Fraction(x)


def format_scalar(x: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = to_scalar(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(s) -> Fraction:
    if isinstance(s, str):
        return Fraction(s)
    return to_scalar(s)


class Mat:
    """Immutable dense matrix of Fractions (row-major)."""

    __slots__ = ("rows", "cols", "_e", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        e = tuple(to_scalar(x) for x in entries)
        if len(e) != rows * cols:
            raise DimMismatch(f"expected {rows * cols} entries, got {len(e)}")
        self.rows = rows
        self.cols = cols
        self._e = e
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Mat":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimMismatch("ragged rows")
        return cls(len(rows), ncols, (x for r in rows for x in r))

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence]) -> "Mat":
        return cls.from_rows(cols).T

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, (Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, values: Sequence) -> "Mat":
        n = len(values)
        vals = [to_scalar(v) for v in values]
        return cls(n, n, (vals[i] if i == j else Fraction(0) for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, values: Sequence) -> "Mat":
        return cls(len(values), 1, values)

    @classmethod
    def row_vector(cls, values: Sequence) -> "Mat":
        return cls(1, len(values), values)

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int) -> "Mat":
        """Elementary matrix E_ij (0-indexed)."""
        e = [Fraction(0)] * (rows * cols)
        e[i * cols + j] = Fraction(1)
        return cls(rows, cols, e)

    # -- access ---------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        return self._e

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._e[i * self.cols + j]

    def row(self, i: int) -> Vec:
        return self._e[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vec:
        return self._e[j::self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Mat":
        return Mat(len(rows), len(cols), (self[i, j] for i in rows for j in cols))

    # -- arithmetic -----------------------------------------------------
    def _check_same(self, other: "Mat"):
        if self.shape != other.shape:
            raise DimMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat(self.rows, self.cols, (a + b for a, b in zip(self._e, other._e)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat(self.rows, self.cols, (a - b for a, b in zip(self._e, other._e)))

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, (-a for a in self._e))

    def __mul__(self, s) -> "Mat":
        s = to_scalar(s)
        return Mat(self.rows, self.cols, (s * a for a in self._e))

    __rmul__ = __mul__

    def __truediv__(self, s) -> "Mat":
        s = to_scalar(s)
        return Mat(self.rows, self.cols, (a / s for a in self._e))

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise DimMismatch(f"cannot multiply {self.shape} by {other.shape}")
        n, k, p = self.rows, self.cols, other.cols
        a, b = self._e, other._e
        out = []
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for j in range(p):
                s = Fraction(0)
                for t in range(k):
                    x = arow[t]
                    if x:
                        y = b[t * p + j]
                        if y:
                            s += x * y
                out.append(s)
        return Mat(n, p, out)

    def apply(self, v: Sequence) -> Vec:
        """Matrix times a plain vector."""
        if len(v) != self.cols:
            raise DimMismatch(f"vector of length {len(v)} for {self.shape}")
        v = [to_scalar(x) for x in v]
        return tuple(sum((x * y for x, y in zip(self.row(i), v) if x and y), Fraction(0))
                     for i in range(self.rows))

    @property
    def T(self) -> "Mat":
        return Mat(self.cols, self.rows, (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise NonSquare("trace of non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self._e)

    def is_scalar(self) -> bool:
        """True for c * Id (square matrices only)."""
        if self.rows != self.cols:
            return False
        if self.rows == 0:
            return True
        c = self[0, 0]
        return all(self[i, j] == (c if i == j else 0)
                   for i in range(self.rows) for j in range(self.cols))

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise DimMismatch("hstack row mismatch")
        return Mat.from_rows([self.row(i) + other.row(i) for i in range(self.rows)]) if self.rows else \
            Mat(0, self.cols + other.cols, ())

    def vstack(self, other: "Mat") -> "Mat":
        if self.cols != other.cols:
            raise DimMismatch("vstack column mismatch")
        return Mat(self.rows + other.rows, self.cols, self._e + other._e)

    def __pow__(self, k: int) -> "Mat":
        if self.rows != self.cols:
            raise NonSquare("power of non-square matrix")
        if k < 0:
            return inverse(self) ** (-k)
        out = Mat.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    # -- comparison -----------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._e))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_scalar(x) for x in self.row(i)) for i in range(self.rows))
        return f"Mat({self.rows}x{self.cols}: [{body}])"


def commutator(a: Mat, b: Mat) -> Mat:
    return a @ b - b @ a


# ----------------------------------------------------------------------
# Elimination kernels
# ----------------------------------------------------------------------

def _rref_rows(rows: list[list[Fraction]], ncols: int):
    """In-place reduced row echelon form; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            inv = 1 / piv
            rows[r] = [x * inv if x else x for x in rows[r]]
        prow = rows[r]
        nz = [j for j in range(c, len(prow)) if prow[j]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j in nz:
                        ri[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Mat) -> tuple[Mat, list[int]]:
    rows = m.tolist()
    pivots = _rref_rows(rows, m.cols)
    return (Mat.from_rows(rows) if rows else m), pivots


def _rank_sparse(rows: list[dict[int, Fraction]]) -> int:
    # Forward elimination on dict rows; cheap for the sparse quadratic-form stacks.
    basis: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            lead = min(row)
            if lead not in basis:
                inv = 1 / row[lead]
                basis[lead] = {k: v * inv for k, v in row.items()}
                break
            b = basis[lead]
            f = row[lead]
            for k, v in b.items():
                nv = row.get(k, Fraction(0)) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(basis)


def rank(m: Mat) -> int:
    """Exact row rank over the rationals."""
    rows = [{j: x for j, x in enumerate(m.row(i)) if x} for i in range(m.rows)]
    return _rank_sparse(rows)


def rank_of_vectors(vectors: Iterable[dict]) -> int:
    """Rank of sparse vectors given as ``{coordinate: value}`` dicts."""
    return _rank_sparse([dict(v) for v in vectors])


def kernel_basis(m: Mat) -> list[Vec]:
    """Basis of the right null space, one vector per free column."""
    rows = m.tolist()
    pivots = _rref_rows(rows, m.cols)
    free = [j for j in range(m.cols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def solve(a: Mat, b: Mat) -> Mat:
    """Some exact ``x`` with ``a @ x == b``; free variables are set to zero.

    Raises :class:`NoSolution` when the system is inconsistent.
    """
    if a.rows != b.rows:
        raise DimMismatch(f"a has {a.rows} rows, b has {b.rows}")
    aug = [list(a.row(i)) + list(b.row(i)) for i in range(a.rows)]
    pivots = _rref_rows(aug, a.cols)
    for r in range(len(pivots), a.rows):
        if any(aug[r][a.cols:]):
            raise NoSolution("inconsistent linear system")
    x = [[Fraction(0)] * b.cols for _ in range(a.cols)]
    for r, pc in enumerate(pivots):
        x[pc] = aug[r][a.cols:]
    return Mat.from_rows(x) if a.cols else Mat(0, b.cols, ())


def det(m: Mat) -> Fraction:
    if m.rows != m.cols:
        raise NonSquare(f"determinant of {m.shape} matrix")
    n = m.rows
    rows = m.tolist()
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        piv = rows[c][c]
        d *= piv
        for i in range(c + 1, n):
            f = rows[i][c] / piv
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return d


def inverse(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise NonSquare(f"inverse of {m.shape} matrix")
    if rank(m) < m.rows:
        raise LinalgError("matrix is singular")
    return solve(m, Mat.identity(m.rows))


def cross(u: Sequence, v: Sequence) -> Vec:
    """u x v in C^3, i.e. the image of u ^ v under Lambda^2 C^3 = (C^3)*."""
    u = [to_scalar(x) for x in u]
    v = [to_scalar(x) for x in v]
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimMismatch("dot of unequal lengths")
    return sum((to_scalar(a) * to_scalar(b) for a, b in zip(u, v)), Fraction(0))


def det3(u: Sequence, v: Sequence, w: Sequence) -> Fraction:
    return dot(cross(u, v), w)


class FourVector:
    """Element of Lambda^4 C^d stored on strictly increasing 1-indexed 4-tuples."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs: dict | None = None):
        self.dim = dim
        clean = {}
        for idx, v in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != 4 or list(idx) != sorted(set(idx)) or idx[0] < 1 or idx[-1] > dim:
                raise LinalgError(f"bad 4-index {idx}")
            v = to_scalar(v)
            if v:
                clean[idx] = v
        self.coeffs = clean

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, idx) -> Fraction:
        return self.coeffs.get(tuple(idx), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FourVector):
            return NotImplemented
        return self.dim == other.dim and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        terms = " + ".join(f"{format_scalar(v)}*e{''.join(map(str, k))}" for k, v in sorted(self.coeffs.items()))
        return f"FourVector({self.dim}: {terms or '0'})"

    @staticmethod
    def index_tuples(dim: int):
        return combinations(range(1, dim + 1), 4)
