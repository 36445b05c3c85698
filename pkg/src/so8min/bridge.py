"""The linear map F from T*V (n = 3) to Hom(C^2, C^8) and the SL_2 side.

F(alpha, beta) sends e_1, e_2 to vectors of C^8 = C^3 + C + C^* + (C^3)^*:
the (C^3 + C) part is the matrix alpha_2 (+) -beta_1 and the (C^* + (C^3)^*)
part is built from the rows of beta_2 (+) alpha_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import LinalgError, Mat, det, format_scalar, inverse, parse_scalar
from .orthogonal import OPERATOR_SIGN, Bivector, biv_to_matrix, pairing
from .quiver import QuiverPoint
from .trialgebra import eta, eta_inv


class WrongRank(LinalgError):
    pass


class NotUnimodular(LinalgError):
    pass


@dataclass(frozen=True)
class IsoMap:
    """An element of Hom(C^2, C^8); columns are f(e_1), f(e_2)."""

    matrix: Mat

    def __post_init__(self):
        m = self.matrix if isinstance(self.matrix, Mat) else Mat.from_rows(self.matrix)
        if m.shape != (8, 2):
            raise LinalgError("an IsoMap is an 8x2 matrix")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_columns(cls, v1: Sequence, v2: Sequence) -> "IsoMap":
        return cls(Mat.from_cols([v1, v2]))

    @property
    def columns(self) -> tuple[tuple, tuple]:
        return self.matrix.col(0), self.matrix.col(1)

    def __add__(self, other: "IsoMap") -> "IsoMap":
        return IsoMap(self.matrix + other.matrix)

    def __sub__(self, other: "IsoMap") -> "IsoMap":
        return IsoMap(self.matrix - other.matrix)

    def __mul__(self, s) -> "IsoMap":
        return IsoMap(self.matrix * s)

    __rmul__ = __mul__

    def to_json(self) -> list:
        return [[format_scalar(x) for x in r] for r in self.matrix.tolist()]

    @classmethod
    def from_json(cls, rows) -> "IsoMap":
        return cls(Mat.from_rows([[parse_scalar(x) for x in r] for r in rows]))


def F(p: QuiverPoint) -> IsoMap:
    if p.n != 3:
        raise WrongRank("F is defined for n = 3")
    a1, b1, a2, b2 = p.alpha(1), p.beta(1), p.alpha(2), p.beta(2)
    col1 = eta(a2.col(0), -b1[0, 0], -a1[1, 0], tuple(-x for x in b2.row(1)))
    col2 = eta(a2.col(1), -b1[0, 1], a1[0, 0], b2.row(0))
    return IsoMap.from_columns(col1, col2)


def F_inv(f: IsoMap) -> QuiverPoint:
    (z1, a1_, b1_, w1), (z2, a2_, b2_, w2) = (eta_inv(c) for c in f.columns)
    alpha1 = Mat.column([b2_, -b1_])
    beta1 = Mat.row_vector([-a1_, -a2_])
    alpha2 = Mat.from_cols([z1, z2])
    beta2 = Mat.from_rows([w2, [-x for x in w1]])
    return QuiverPoint(3, (alpha1, alpha2), (beta1, beta2))


def F_matrix() -> Mat:
    """Matrix of F in the coordinate bases of T*V and Hom(C^2, C^8)."""
    dim = QuiverPoint.dimension(3)
    cols = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        cols.append(F(QuiverPoint.from_coordinates(3, e)).matrix.entries)
    return Mat.from_cols(cols)


def omega1(f: IsoMap, g: IsoMap) -> Fraction:
    f1, f2 = f.columns
    g1, g2 = g.columns
    return pairing(f1, g2) - pairing(f2, g1)


def mu_sl2(f: IsoMap) -> Mat:
    v1, v2 = f.columns
    p12 = pairing(v1, v2)
    return Mat.from_rows([[p12, pairing(v1, v1)], [pairing(v2, v2), -p12]])


def in_N1(f: IsoMap) -> bool:
    return mu_sl2(f).is_zero()


def to_bivector(f: IsoMap) -> Bivector:
    return Bivector.wedge(*f.columns)


def _check_unimodular(g: Mat):
    if g.shape != (2, 2) or det(g) != 1:
        raise NotUnimodular("need g in SL_2")


def sl2_act(g: Mat, f: IsoMap) -> IsoMap:
    """f o g^{-1}."""
    _check_unimodular(g)
    return IsoMap(f.matrix @ inverse(g))


def sl2_act_quiver(g: Mat, p: QuiverPoint) -> QuiverPoint:
    """g acting on the C^2 vertex."""
    _check_unimodular(g)
    gi = inverse(g)
    return QuiverPoint(3, (g @ p.alpha(1), p.alpha(2) @ gi), (p.beta(1) @ gi, g @ p.beta(2)))


def lambda_prime(f: IsoMap, x: IsoMap) -> Fraction:
    """(v_1, x_2) - (v_2, x_1) at f = (v_1, v_2)."""
    v1, v2 = f.columns
    x1, x2 = x.columns
    return pairing(v1, x2) - pairing(v2, x1)


def kks_tangent_lift(f: IsoMap, w: Bivector) -> IsoMap:
    """x_i = sum over w of (w_1, v_i) w_2 - (w_2, v_i) w_1.

    The displayed operator differs from :func:`biv_to_matrix` by OPERATOR_SIGN.
    """
    m = biv_to_matrix(w) * OPERATOR_SIGN
    return IsoMap(m @ f.matrix)


def kks_closed_form(f: IsoMap, w1: Sequence, w2: Sequence) -> Fraction:
    v1, v2 = f.columns
    return 2 * (pairing(w1, v2) * pairing(v1, w2) - pairing(w2, v2) * pairing(v1, w1))
