"""The map Xi from quiver data to SL_n x_U b and the C^* action.

A point of SL_n x_U b is a class [g, X] with g in SL_n and X upper triangular
and traceless, where (g, X) ~ (g u^{-1}, u X u^{-1}) for u upper unitriangular.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import LinalgError, Mat, NonSquare, det, format_scalar, inverse, parse_scalar, rank, to_scalar
from .quiver import NotInNError, QuiverPoint, in_N, NOT_IN_N, is_surjective_part


class NotSurjective(LinalgError):
    pass


class NotTriangular(LinalgError):
    pass


class ZeroParameter(LinalgError):
    pass


class BadIndex(LinalgError):
    pass


def is_upper_triangular(x: Mat) -> bool:
    return all(x[i, j] == 0 for i in range(x.rows) for j in range(min(i, x.cols)))


def is_unitriangular(x: Mat) -> bool:
    return is_upper_triangular(x) and all(x[i, i] == 1 for i in range(x.rows))


@dataclass(frozen=True)
class BPoint:
    g: Mat
    X: Mat

    def __post_init__(self):
        if self.g.rows != self.g.cols or self.g.shape != self.X.shape:
            raise NonSquare("g and X must be square of the same size")
        if det(self.g) != 1:
            raise LinalgError("g must have determinant 1")
        if not is_upper_triangular(self.X) or self.X.trace() != 0:
            raise NotTriangular("X must be upper triangular and traceless")

    @property
    def n(self) -> int:
        return self.g.rows

    def to_json(self) -> dict:
        f = format_scalar
        return {"g": [[f(x) for x in r] for r in self.g.tolist()],
                "X": [[f(x) for x in r] for r in self.X.tolist()]}

    @classmethod
    def from_json(cls, obj: dict) -> "BPoint":
        p = parse_scalar
        return cls(Mat.from_rows([[p(x) for x in r] for r in obj["g"]]),
                   Mat.from_rows([[p(x) for x in r] for r in obj["X"]]))


def bpoint_eq(a: BPoint, b: BPoint) -> bool:
    """Equality of classes: u = b.g^{-1} a.g is unitriangular and b.X = u a.X u^{-1}."""
    if a.n != b.n:
        return False
    u = inverse(b.g) @ a.g
    return is_unitriangular(u) and b.X == u @ a.X @ inverse(u)


def gamma_proj(x: Mat) -> Mat:
    if x.rows != x.cols:
        raise NonSquare("need a square matrix")
    return x - Mat.identity(x.rows) * (x.trace() / x.rows)


def beta0(k: int) -> Mat:
    """(0 | Id_k) : C^{k+1} -> C^k."""
    return Mat.zeros(k, 1).hstack(Mat.identity(k))


def _complete_to_sl(rows: Mat) -> Mat:
    """Prepend a standard basis row (first one that works), scaled to det 1."""
    m = rows.cols
    for j in range(m):
        e = Mat.unit(1, m, 0, j)
        full = e.vstack(rows)
        d = det(full)
        if d:
            return (e * (1 / d)).vstack(rows)
    raise NotSurjective("rows are not independent")


def normalize_betas(p: QuiverPoint) -> list[Mat]:
    """(g_1, .., g_n) in SL_1 x .. x SL_n with g_k beta_k g_{k+1}^{-1} = beta0_k."""
    if not is_surjective_part(p):
        raise NotSurjective("some beta_k is not surjective")
    gs = [Mat.identity(1)]
    for k in range(1, p.n):
        # g_k beta_k = beta0_k g_{k+1}: the last k rows of g_{k+1} are g_k beta_k
        gs.append(_complete_to_sl(gs[-1] @ p.beta(k)))
    return gs


def xi(p: QuiverPoint) -> BPoint:
    if in_N(p) is NOT_IN_N:
        raise NotInNError("point is not in N")
    gs = normalize_betas(p)
    gn = gs[-1]
    n = p.n
    x = gamma_proj(gn @ p.alpha(n - 1) @ p.beta(n - 1) @ inverse(gn))
    if not is_upper_triangular(x):
        raise NotTriangular("normalized matrix is not upper triangular")
    return BPoint(inverse(gn), x)


def lift_from_bpoint(g: Mat, X: Mat) -> QuiverPoint:
    """A point of N_surj with xi(point) equal to [g, X]."""
    bp = BPoint(g, X)
    n = bp.n
    iota = Mat.zeros(1, n - 1).vstack(Mat.identity(n - 1))
    alphas = {n - 1: g @ (X - Mat.identity(n) * X[0, 0]) @ iota}
    betas = {n - 1: beta0(n - 1) @ inverse(g)}
    for k in range(n - 2, 0, -1):
        betas[k] = beta0(k)
        running = betas[k + 1] @ alphas[k + 1]
        lam = running[0, 0]
        r = running - Mat.identity(k + 1) * lam
        if any(r[i, 0] for i in range(k + 1)):
            raise LinalgError("first column does not vanish")
        alphas[k] = r.submatrix(range(k + 1), range(1, k + 1))
    return QuiverPoint(n, tuple(alphas[k] for k in range(1, n)), tuple(betas[k] for k in range(1, n)))


def principal_triple(k: int) -> tuple[Mat, Mat, Mat]:
    if k < 2:
        raise BadIndex("need k >= 2")
    e = Mat(k, k, (1 if j == i + 1 else 0 for i in range(k) for j in range(k)))
    h = Mat.diag([k - 1 - 2 * i for i in range(k)])
    f = Mat(k, k, ((j + 1) * (k - j - 1) if i == j + 1 else 0 for i in range(k) for j in range(k)))
    return e, h, f


def gamma_z(z, n: int) -> Mat:
    """z^{h_n} = diag(z^{n-1}, z^{n-3}, .., z^{-(n-1)})."""
    z = to_scalar(z)
    if z == 0:
        raise ZeroParameter("z must be nonzero")
    return Mat.diag([z ** (n - 1 - 2 * i) for i in range(n)])


def cstar_act(z, p: QuiverPoint) -> QuiverPoint:
    z = to_scalar(z)
    if z == 0:
        raise ZeroParameter("z must be nonzero")
    return p * z


def cstar_on_bpoint(z, b: BPoint) -> BPoint:
    """z.[g, X] = [g gamma(z), z^2 Ad_{gamma(1/z)} X]."""
    z = to_scalar(z)
    gz = gamma_z(z, b.n)
    gi = gamma_z(1 / z, b.n)
    return BPoint(b.g @ gz, gi @ b.X @ inverse(gi) * (z * z))


def sample_bpoint(rng, n: int, bound: int = 2) -> BPoint:
    from .sampling import rand_int, rand_sl
    g = rand_sl(rng, n, bound)
    vals = [[Fraction(rand_int(rng, -bound, bound)) if j >= i else Fraction(0) for j in range(n)] for i in range(n)]
    vals[n - 1][n - 1] = -sum(vals[i][i] for i in range(n - 1))
    return BPoint(g, Mat.from_rows(vals))
