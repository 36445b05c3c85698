"""The split orthogonal space C^{2m} and its bivector model of so_{2m}.

Vectors are 1-indexed in the mathematical sense (e_1 .. e_{2m}) but stored as
plain 0-indexed tuples.  The symmetric form pairs e_i with e_{2m+1-i}.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from .linalg import (
    DimMismatch,
    FourVector,
    LinalgError,
    Mat,
    commutator,
    format_scalar,
    parse_scalar,
    rank_of_vectors,
    to_scalar,
)

# Multiplier applied to the operator u -> (v1,u) v2 - (v2,u) v1 attached to
# v1 ^ v2.  With +1 the Chevalley table basis satisfies [X, Y] = -H; with -1 it is a
# genuine Chevalley basis.  Everything downstream goes through biv_to_matrix.
OPERATOR_SIGN = -1


class NotDecomposable(LinalgError):
    pass


class BadIndex(LinalgError):
    pass


class UnknownRootIndex(LinalgError):
    pass


def _vec(v: Sequence) -> tuple:
    return tuple(to_scalar(x) for x in v)


def basis_vector(dim: int, i: int) -> tuple:
    """e_i in C^dim, 1-indexed."""
    if not 1 <= i <= dim:
        raise BadIndex(f"e_{i} outside C^{dim}")
    return tuple(Fraction(int(k == i - 1)) for k in range(dim))


def pairing(v: Sequence, w: Sequence) -> Fraction:
    """(v, w) = sum_i v_i w_{2m+1-i}."""
    if len(v) != len(w):
        raise DimMismatch(f"pairing of vectors of length {len(v)} and {len(w)}")
    if len(v) % 2:
        raise DimMismatch("pairing needs an even dimension")
    n = len(v)
    return sum((to_scalar(v[i]) * to_scalar(w[n - 1 - i]) for i in range(n)), Fraction(0))


def pairing_matrix(dim: int) -> Mat:
    """Gram matrix J of the pairing: the anti-diagonal identity."""
    return Mat(dim, dim, (int(i + j == dim - 1) for i in range(dim) for j in range(dim)))


class Bivector:
    """Sum of lambda_ij e_i ^ e_j over i < j (1-indexed) in Lambda^2 C^{2m}."""

    __slots__ = ("m", "coeffs", "_hash")

    def __init__(self, m: int, coeffs: dict | None = None):
        if m < 1:
            raise ValueError("half-dimension must be positive")
        self.m = m
        dim = 2 * m
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), v in (coeffs or {}).items():
            v = to_scalar(v)
            if i == j:
                if v:
                    raise BadIndex(f"e_{i} ^ e_{i} is not a valid basis element")
                continue
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise BadIndex(f"index ({i},{j}) out of range for m={m}")
            if i > j:
                i, j, v = j, i, -v
            nv = clean.get((i, j), Fraction(0)) + v
            if nv:
                clean[(i, j)] = nv
            else:
                clean.pop((i, j), None)
        self.coeffs = clean
        self._hash = None

    @property
    def dim(self) -> int:
        return 2 * self.m

    @classmethod
    def zero(cls, m: int) -> "Bivector":
        return cls(m)

    @classmethod
    def basis(cls, m: int, i: int, j: int) -> "Bivector":
        return cls(m, {(i, j): 1})

    @classmethod
    def wedge(cls, v: Sequence, w: Sequence) -> "Bivector":
        """v ^ w for vectors in C^{2m}."""
        if len(v) != len(w) or len(v) % 2:
            raise DimMismatch("wedge needs two vectors of the same even length")
        v, w = _vec(v), _vec(w)
        n = len(v)
        return cls(n // 2, {(i + 1, j + 1): v[i] * w[j] - v[j] * w[i]
                            for i, j in combinations(range(n), 2)})

    @classmethod
    def from_antisymmetric(cls, lam: Mat) -> "Bivector":
        if lam.rows != lam.cols or lam.rows % 2:
            raise DimMismatch("need an even square matrix")
        if lam.T != -lam:
            raise LinalgError("matrix is not antisymmetric")
        n = lam.rows
        return cls(n // 2, {(i + 1, j + 1): lam[i, j] for i, j in combinations(range(n), 2)})

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if i == j:
            return Fraction(0)
        if i < j:
            return self.coeffs.get((i, j), Fraction(0))
        return -self.coeffs.get((j, i), Fraction(0))

    def antisymmetric(self) -> Mat:
        """The matrix Lambda with Lambda[i][j] = lambda_ij, Lambda antisymmetric."""
        n = self.dim
        return Mat(n, n, (self[i + 1, j + 1] for i in range(n) for j in range(n)))

    def contract(self, i: int) -> tuple:
        """iota_{e_i^*} applied to the bivector, using iota(e_i ^ e_j) = e_j."""
        return tuple(self[i, k + 1] for k in range(self.dim))

    def coordinate_vector(self) -> tuple:
        """Coefficients in the order of :func:`pair_index`."""
        return tuple(self.coeffs.get(p, Fraction(0)) for p in pair_index(self.m))

    @classmethod
    def from_coordinates(cls, m: int, coords: Sequence) -> "Bivector":
        pairs = pair_index(m)
        if len(coords) != len(pairs):
            raise DimMismatch(f"need {len(pairs)} coordinates")
        return cls(m, dict(zip(pairs, coords)))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "Bivector"):
        if not isinstance(other, Bivector) or other.m != self.m:
            raise DimMismatch("bivectors live in different spaces")

    def __add__(self, other: "Bivector") -> "Bivector":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return Bivector(self.m, out)

    def __neg__(self) -> "Bivector":
        return Bivector(self.m, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "Bivector") -> "Bivector":
        return self + (-other)

    def __mul__(self, s) -> "Bivector":
        s = to_scalar(s)
        return Bivector(self.m, {k: s * v for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Bivector):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.m, tuple(sorted(self.coeffs.items()))))
        return self._hash

    def __repr__(self) -> str:
        terms = " + ".join(f"{format_scalar(v)}*e{i}^e{j}" for (i, j), v in sorted(self.coeffs.items()))
        return f"Bivector(m={self.m}: {terms or '0'})"

    def to_json(self) -> dict:
        return {"m": self.m,
                "terms": [[i, j, format_scalar(v)] for (i, j), v in sorted(self.coeffs.items())]}

    @classmethod
    def from_json(cls, obj: dict) -> "Bivector":
        return cls(int(obj["m"]), {(int(i), int(j)): parse_scalar(v) for i, j, v in obj["terms"]})


def pair_index(m: int) -> list[tuple[int, int]]:
    """Ordered list of pairs (i, j), i < j, indexing Lambda^2 C^{2m}."""
    return list(combinations(range(1, 2 * m + 1), 2))


# ----------------------------------------------------------------------
# so_{2m} structure
# ----------------------------------------------------------------------

def biv_to_matrix(a: Bivector) -> Mat:
    """Matrix of the operator attached to ``a``; it is skew for :func:`pairing`."""
    lam = a.antisymmetric()
    return (lam @ pairing_matrix(a.dim)) * (-OPERATOR_SIGN)


def matrix_to_biv(x: Mat) -> Bivector:
    """Inverse of :func:`biv_to_matrix` on pairing-skew matrices."""
    if x.rows != x.cols or x.rows % 2:
        raise DimMismatch("need an even square matrix")
    lam = (x @ pairing_matrix(x.rows)) * (-OPERATOR_SIGN)
    return Bivector.from_antisymmetric(lam)


def is_pairing_skew(x: Mat) -> bool:
    j = pairing_matrix(x.rows)
    return (x.T @ j + j @ x).is_zero()


def bracket_via_matrices(a: Bivector, b: Bivector) -> Bivector:
    a._check(b)
    return matrix_to_biv(commutator(biv_to_matrix(a), biv_to_matrix(b)))


def bracket(a: Bivector, b: Bivector) -> Bivector:
    """[a, b] computed on basis terms: a acts on b = x ^ y as a derivation.

    The operator of e_i ^ e_j sends e_k to -OPERATOR_SIGN ((e_j, e_k) e_i - (e_i, e_k) e_j).
    """
    a._check(b)
    n1 = a.dim + 1
    t = -OPERATOR_SIGN
    out: dict[tuple[int, int], Fraction] = {}

    def add(p, q, v):
        if p != q:
            key, v = ((p, q), v) if p < q else ((q, p), -v)
            out[key] = out.get(key, 0) + v

    for (i, j), x in a.coeffs.items():
        for (k, l), y in b.coeffs.items():
            c = t * x * y
            # phi(e_k) ^ e_l
            if j + k == n1:
                add(i, l, c)
            if i + k == n1:
                add(j, l, -c)
            # e_k ^ phi(e_l)
            if j + l == n1:
                add(k, i, c)
            if i + l == n1:
                add(k, j, -c)
    return Bivector(a.m, out)


def act_on_vector(a: Bivector, v: Sequence) -> tuple:
    return biv_to_matrix(a).apply(v)


def group_act(g: Mat, a: Bivector) -> Bivector:
    """g . a with g acting diagonally: g.(v1 ^ v2) = g v1 ^ g v2."""
    lam = a.antisymmetric()
    return Bivector.from_antisymmetric(g @ lam @ g.T)


def wedge_square(a: Bivector) -> FourVector:
    """a ^ a in Lambda^4 C^{2m}."""
    out = {}
    for i, j, k, l in combinations(range(1, a.dim + 1), 4):
        v = 2 * (a[i, j] * a[k, l] - a[i, k] * a[j, l] + a[i, l] * a[j, k])
        if v:
            out[(i, j, k, l)] = v
    return FourVector(a.dim, out)


def is_decomposable(a: Bivector) -> bool:
    return wedge_square(a).is_zero()


def is_isotropic(a: Bivector) -> bool:
    rows = [a.contract(i) for i in range(1, a.dim + 1)]
    return all(pairing(rows[i], rows[j]) == 0
               for i in range(a.dim) for j in range(i, a.dim))


def in_min_closure(a: Bivector) -> bool:
    """Membership in the closure of the minimal nilpotent orbit."""
    return is_decomposable(a) and is_isotropic(a)


def factorize(a: Bivector) -> tuple[tuple, tuple]:
    """Vectors (v1, v2) with v1 ^ v2 == a.

    Raises :class:`NotDecomposable` when no such pair exists; the zero
    bivector factors as (0, 0).
    """
    if a.is_zero():
        z = (Fraction(0),) * a.dim
        return z, z
    (i, j), lij = min(a.coeffs.items())
    lam = a.antisymmetric()
    v1 = tuple(x / lij for x in lam.col(i - 1))
    v2 = lam.col(j - 1)
    if Bivector.wedge(v1, v2) != a:
        raise NotDecomposable(f"{a!r} is not decomposable")
    return v1, v2


def nilpotent_exp(x: Mat, t=1) -> Mat:
    """exp(t x) for nilpotent ``x`` as an exact finite sum."""
    t = to_scalar(t)
    n = x.rows
    out = Mat.identity(n)
    term = Mat.identity(n)
    for k in range(1, n + 1):
        term = (term @ x) * (t / k)
        if term.is_zero():
            return out
        out = out + term
    if not term.is_zero():
        raise LinalgError("matrix is not nilpotent")
    return out


def sample_min_orbit(word: Iterable[tuple[int, int, object]], m: int = 4) -> Bivector:
    """Apply prod exp(t ad(root vector)) to e_1 ^ e_2.

    ``word`` entries are ``(root_index, sign, t)``: ``root_index`` indexes the
    positive roots of the Chevalley table, ``sign`` picks X_alpha (+1) or
    Y_-alpha (-1).  Factors are applied left to right, the last one acting
    first.
    """
    from .chevalley import POSITIVE_ROOTS, root_vector

    if m != 4:
        raise ValueError("the root table is only available for so_8")
    v1 = basis_vector(8, 1)
    v2 = basis_vector(8, 2)
    for idx, sign, t in reversed(list(word)):
        if not 0 <= idx < len(POSITIVE_ROOTS):
            raise UnknownRootIndex(f"no positive root with index {idx}")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        root = POSITIVE_ROOTS[idx]
        g = nilpotent_exp(biv_to_matrix(root_vector(root if sign > 0 else tuple(-r for r in root))), t)
        v1, v2 = g.apply(v1), g.apply(v2)
    return Bivector.wedge(v1, v2)


# ----------------------------------------------------------------------
# Quadratic forms on Lambda^2 and the maps Phi, Psi
# ----------------------------------------------------------------------

class QuadForm:
    """Quadratic form on Lambda^2 C^{2m}, stored by monomial coefficients.

    ``coeffs`` maps ``(p, q)`` with ``p <= q`` (pairs of basis indices as in
    :func:`pair_index`) to the coefficient of ``x_p x_q``.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: dict | None = None):
        self.m = m
        clean = {}
        for (p, q), v in (coeffs or {}).items():
            if p > q:
                p, q = q, p
            v = clean.get((p, q), Fraction(0)) + to_scalar(v)
            if v:
                clean[(p, q)] = v
            else:
                clean.pop((p, q), None)
        self.coeffs = clean

    @property
    def dim(self) -> int:
        return comb(2 * self.m, 2)

    @property
    def gram(self) -> Mat:
        pairs = pair_index(self.m)
        pos = {p: k for k, p in enumerate(pairs)}
        n = len(pairs)
        g = [[Fraction(0)] * n for _ in range(n)]
        for (p, q), v in self.coeffs.items():
            a, b = pos[p], pos[q]
            if a == b:
                g[a][a] += v
            else:
                g[a][b] += v / 2
                g[b][a] += v / 2
        return Mat.from_rows(g)

    def __call__(self, a: Bivector) -> Fraction:
        if a.m != self.m:
            raise DimMismatch("bivector and form live on different spaces")
        return sum((v * a[p] * a[q] for (p, q), v in self.coeffs.items()), Fraction(0))

    def monomial_vector(self) -> dict:
        """Sparse coordinates in the basis of monomials x_p x_q (p <= q)."""
        pairs = pair_index(self.m)
        pos = {p: k for k, p in enumerate(pairs)}
        n = len(pairs)
        out = {}
        for (p, q), v in self.coeffs.items():
            a, b = sorted((pos[p], pos[q]))
            out[a * n + b] = v
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuadForm):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"QuadForm(m={self.m}, {len(self.coeffs)} terms)"


def _lam_term(i: int, j: int):
    """lambda_ij as (sign, pair) or None when i == j."""
    if i == j:
        return None
    return (1, (i, j)) if i < j else (-1, (j, i))


def phi_kostant(idx: Sequence[int], m: int = 4) -> QuadForm:
    """alpha -> coefficient of e_i ^ e_j ^ e_k ^ e_l in alpha ^ alpha."""
    idx = tuple(idx)
    if len(idx) != 4 or list(idx) != sorted(set(idx)) or idx[0] < 1 or idx[-1] > 2 * m:
        raise BadIndex(f"not an increasing 4-tuple in 1..{2 * m}: {idx}")
    i, j, k, l = idx
    return QuadForm(m, {((i, j), (k, l)): 2, ((i, k), (j, l)): -2, ((i, l), (j, k)): 2})


def psi_kostant(r: int, s: int, m: int = 4) -> QuadForm:
    """alpha -> (iota_{e_r^*} alpha, iota_{e_s^*} alpha)."""
    n = 2 * m
    if not 1 <= r <= s <= n:
        raise BadIndex(f"need 1 <= r <= s <= {n}, got ({r}, {s})")
    coeffs: dict = {}
    for k in range(1, n + 1):
        a = _lam_term(r, k)
        b = _lam_term(s, n + 1 - k)
        if a is None or b is None:
            continue
        key = tuple(sorted((a[1], b[1])))
        coeffs[key] = coeffs.get(key, Fraction(0)) + a[0] * b[0]
    return QuadForm(m, coeffs)


def highest_weight_square(m: int = 4) -> QuadForm:
    """alpha -> (coefficient of e_1 ^ e_2)^2, the image of (e_1^* ^ e_2^*)^2."""
    return QuadForm(m, {((1, 2), (1, 2)): 1})


def sym2_adjoint_highest_dim(m: int) -> Fraction:
    """Evaluate m/3 (4m^3 - 7m - 3)."""
    return Fraction(m, 3) * (4 * m ** 3 - 7 * m - 3)


def kostant_rank_report(m: int = 4) -> dict:
    if m != 4:
        raise ValueError("the rank report is defined for so_8")
    phis = [phi_kostant(t, m) for t in combinations(range(1, 2 * m + 1), 4)]
    psis = [psi_kostant(r, s, m) for r, s in combinations_with_replacement(range(1, 2 * m + 1), 2)]
    vectors = [f.monomial_vector() for f in phis + psis]
    rank_joint = rank_of_vectors(vectors)
    rank_hwv = rank_of_vectors(vectors + [highest_weight_square(m).monomial_vector()])
    n = comb(2 * m, 2)
    dims = (int(sym2_adjoint_highest_dim(m)), len(phis), len(psis), comb(n + 1, 2))
    return {"rank_joint": rank_joint, "rank_with_hwv": rank_hwv, "dims": dims,
            "dims_identity": dims[0] + dims[1] + dims[2] == dims[3]}


# ----------------------------------------------------------------------
# KKS pairing and tangent vectors
# ----------------------------------------------------------------------

def trace_form(x: Bivector, y: Bivector) -> Fraction:
    return (biv_to_matrix(x) @ biv_to_matrix(y)).trace()


def kks_lambda(x: Bivector, y: Bivector) -> Fraction:
    """The Liouville form at x evaluated on the tangent vector generated by y."""
    x._check(y)
    return trace_form(x, y)


def tangent_at(point: Bivector, direction: Bivector,
               factors: tuple[Sequence, Sequence] | None = None) -> Bivector:
    """phi_w(v1) ^ v2 + v1 ^ phi_w(v2) at point = v1 ^ v2."""
    point._check(direction)
    if factors is None:
        v1, v2 = factorize(point)
    else:
        v1, v2 = _vec(factors[0]), _vec(factors[1])
        if Bivector.wedge(v1, v2) != point:
            raise NotDecomposable("supplied factors do not multiply to the point")
    w = biv_to_matrix(direction)
    return Bivector.wedge(w.apply(v1), v2) + Bivector.wedge(v1, w.apply(v2))
