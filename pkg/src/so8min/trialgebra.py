"""sl_3 window coordinates on so_8 and the triality action.

so_8 = sl_3 + h + V_1 + V_2 + V_3 + V_1^* + V_2^* + V_3^*, where h is the
traceless diagonal and each V_i (V_i^*) is a copy of C^3 ((C^3)^*).  An
element is stored as a :class:`WindowElement` (M, c, u, u*).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .chevalley import H, X, Y
from .linalg import (
    LinalgError,
    Mat,
    cross,
    det3,
    dot,
    format_scalar,
    inverse,
    parse_scalar,
    to_scalar,
)
from .orthogonal import Bivector

ZERO = Fraction(0)


class ConstraintViolated(LinalgError):
    pass


def _v3(v) -> tuple:
    v = tuple(to_scalar(x) for x in v)
    if len(v) != 3:
        raise ConstraintViolated("expected a vector of length 3")
    return v


@dataclass(frozen=True)
class WindowElement:
    """(M, c, u, u*) with tr M = 0 and c_1 + c_2 + c_3 = 0."""

    M: Mat
    c: tuple
    u: tuple
    ustar: tuple

    def __post_init__(self):
        m = self.M if isinstance(self.M, Mat) else Mat.from_rows(self.M)
        if m.shape != (3, 3):
            raise ConstraintViolated("M must be 3x3")
        if m.trace() != 0:
            raise ConstraintViolated("M must be traceless")
        c = _v3(self.c)
        if sum(c) != 0:
            raise ConstraintViolated("c must sum to zero")
        u = tuple(_v3(x) for x in self.u)
        us = tuple(_v3(x) for x in self.ustar)
        if len(u) != 3 or len(us) != 3:
            raise ConstraintViolated("need three vectors and three covectors")
        object.__setattr__(self, "M", m)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "ustar", us)

    @classmethod
    def zero(cls) -> "WindowElement":
        z = (ZERO,) * 3
        return cls(Mat.zeros(3, 3), z, (z, z, z), (z, z, z))

    @classmethod
    def make(cls, M=None, c=None, u=None, ustar=None) -> "WindowElement":
        z = (0, 0, 0)
        return cls(Mat.zeros(3, 3) if M is None else M, c or z,
                   u or (z, z, z), ustar or (z, z, z))

    def coordinates(self) -> tuple:
        """Flat 30-vector: M row-major, c, u_1..u_3, u*_1..u*_3."""
        out = list(self.M.entries) + list(self.c)
        for x in self.u + self.ustar:
            out.extend(x)
        return tuple(out)

    @classmethod
    def from_coordinates(cls, xs: Sequence) -> "WindowElement":
        xs = list(xs)
        return cls(Mat(3, 3, xs[:9]), xs[9:12],
                   (xs[12:15], xs[15:18], xs[18:21]),
                   (xs[21:24], xs[24:27], xs[27:30]))

    def __add__(self, other: "WindowElement") -> "WindowElement":
        return WindowElement.from_coordinates(a + b for a, b in zip(self.coordinates(), other.coordinates()))

    def __neg__(self) -> "WindowElement":
        return self * -1

    def __sub__(self, other: "WindowElement") -> "WindowElement":
        return self + (-other)

    def __mul__(self, s) -> "WindowElement":
        s = to_scalar(s)
        return WindowElement.from_coordinates(s * a for a in self.coordinates())

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coordinates())

    def to_json(self) -> dict:
        f = format_scalar
        return {"M": [[f(x) for x in r] for r in self.M.tolist()],
                "c": [f(x) for x in self.c],
                "u": [[f(x) for x in v] for v in self.u],
                "ustar": [[f(x) for x in v] for v in self.ustar]}

    @classmethod
    def from_json(cls, obj: dict) -> "WindowElement":
        p = parse_scalar
        return cls(Mat.from_rows([[p(x) for x in r] for r in obj["M"]]),
                   [p(x) for x in obj["c"]],
                   [[p(x) for x in v] for v in obj["u"]],
                   [[p(x) for x in v] for v in obj["ustar"]])


# ----------------------------------------------------------------------
# The isometry eta : C^3 + C + C^* + (C^3)^* -> C^8 and the map phi
# ----------------------------------------------------------------------

def eta(z: Sequence, a, b, w: Sequence) -> tuple:
    """z1 e2 + z2 e3 - z3 e8 + a e4 + b e5 - w3 e1 + w2 e6 + w1 e7."""
    z, w = _v3(z), _v3(w)
    a, b = to_scalar(a), to_scalar(b)
    return (-w[2], z[0], z[1], a, b, w[1], w[0], -z[2])


def eta_inv(v: Sequence) -> tuple:
    """(z, a, b, w) with eta(z, a, b, w) == v."""
    v = tuple(to_scalar(x) for x in v)
    return (v[1], v[2], -v[7]), v[3], v[4], (v[6], v[5], -v[0])


def natural_pairing(x, y) -> Fraction:
    """<x, y> on C^3 + C + C^* + (C^3)^*, each given as (z, a, b, w)."""
    zx, ax, bx, wx = x
    zy, ay, by, wy = y
    return dot(wx, zy) + dot(wy, zx) + to_scalar(ax) * to_scalar(by) + to_scalar(ay) * to_scalar(bx)


_E3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
_O3 = (0, 0, 0)

# Ordered bases of V_i in the listed order; for V_i^* the listed order runs
# from the highest weight down, i.e. (e_3^*, e_2^*, e_1^*), so we reverse it to
# get the dual basis (e_1^*, e_2^*, e_3^*).
V_BASES = (
    (-X(1, 1, 0, 0), X(1, 0, 0, 0), Y(0, 1, 1, 1)),
    (X(0, 1, 1, 0), X(0, 0, 1, 0), Y(1, 1, 0, 1)),
    (X(0, 1, 0, 1), X(0, 0, 0, 1), Y(1, 1, 1, 0)),
)
VSTAR_BASES = tuple(tuple(reversed(l)) for l in (
    (X(0, 1, 1, 1), Y(1, 0, 0, 0), -Y(1, 1, 0, 0)),
    (X(1, 1, 0, 1), Y(0, 0, 1, 0), Y(0, 1, 1, 0)),
    (X(1, 1, 1, 0), Y(0, 0, 0, 1), Y(0, 1, 0, 1)),
))

# c -> c1 H_a1 + c2 H_a3 + c3 H_a4
H_FOR_C = (H(1), H(3), H(4))


def _sl3_part(M: Mat) -> Bivector:
    out = Bivector(4)
    for i in range(3):
        for j in range(3):
            if M[i, j]:
                out = out + Bivector.wedge(eta(_E3[i], 0, 0, _O3), eta(_O3, 0, 0, _E3[j])) * M[i, j]
    return out


def phi2(c: Sequence) -> Bivector:
    c = _v3(c)
    if sum(c) != 0:
        raise ConstraintViolated("c must sum to zero")
    return H_FOR_C[0] * c[0] + H_FOR_C[1] * c[1] + H_FOR_C[2] * c[2]


def phi_window(A: WindowElement) -> Bivector:
    out = _sl3_part(A.M) + phi2(A.c)
    for i in range(3):
        for k in range(3):
            if A.u[i][k]:
                out = out + V_BASES[i][k] * A.u[i][k]
            if A.ustar[i][k]:
                out = out + VSTAR_BASES[i][k] * A.ustar[i][k]
    return out


@lru_cache(maxsize=None)
def window_basis() -> tuple:
    """28 window elements whose images form a basis of so_8."""
    out = []
    for i in range(3):
        for j in range(3):
            if i != j:
                out.append(WindowElement.make(M=Mat.unit(3, 3, i, j)))
    out.append(WindowElement.make(M=Mat.diag([1, -1, 0])))
    out.append(WindowElement.make(M=Mat.diag([0, 1, -1])))
    out.append(WindowElement.make(c=(1, -1, 0)))
    out.append(WindowElement.make(c=(0, 1, -1)))
    for s in range(3):
        for k in range(3):
            u = [_O3] * 3
            u[s] = _E3[k]
            out.append(WindowElement.make(u=u))
    for s in range(3):
        for k in range(3):
            u = [_O3] * 3
            u[s] = _E3[k]
            out.append(WindowElement.make(ustar=u))
    return tuple(out)


@lru_cache(maxsize=None)
def _inverse_matrix() -> Mat:
    cols = [phi_window(b).coordinate_vector() for b in window_basis()]
    return inverse(Mat.from_cols(cols))


def phi_window_inv(b: Bivector) -> WindowElement:
    if b.m != 4:
        raise ConstraintViolated("window coordinates exist only on so_8")
    xs = _inverse_matrix().apply(b.coordinate_vector())
    out = [ZERO] * 30
    for x, e in zip(xs, window_basis()):
        if x:
            for k, y in enumerate(e.coordinates()):
                if y:
                    out[k] += x * y
    return WindowElement.from_coordinates(out)


# ----------------------------------------------------------------------
# Bracket and vector action in window coordinates
# ----------------------------------------------------------------------

def _mv(M: Mat, v) -> tuple:
    return M.apply(v)


def _vm(v, M: Mat) -> tuple:
    return M.T.apply(v)


_ZERO33 = Mat.zeros(3, 3)


def _outer(u, v) -> Mat:
    if not any(u) or not any(v):
        return _ZERO33
    return Mat(3, 3, (a * b for a in u for b in v))


def _lin(*terms) -> tuple:
    """Sum of scalar * vector terms."""
    out = [ZERO] * 3
    for s, v in terms:
        if s:
            for k in range(3):
                if v[k]:
                    out[k] += s * v[k]
    return tuple(out)


_P = Mat.from_rows([[Fraction(-2, 3), Fraction(1, 3), Fraction(1, 3)],
                    [Fraction(1, 3), Fraction(-2, 3), Fraction(1, 3)],
                    [Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3)]])


def window_bracket(A: WindowElement, B: WindowElement) -> WindowElement:
    MA, MB = A.M, B.M
    d = [dot(A.ustar[i], B.u[i]) - dot(B.ustar[i], A.u[i]) for i in range(3)]
    MC = MA @ MB - MB @ MA + Mat.identity(3) * (sum(d, ZERO) / 3)
    for s in range(3):
        for x, y, sign in ((A.u[s], B.ustar[s], 1), (B.u[s], A.ustar[s], -1)):
            if any(x) and any(y):
                MC = MC + _outer(x, y) * sign
    cC = _P.apply(d)
    uC, usC = [], []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        uC.append(_lin((1, _mv(MA, B.u[i])), (-1, _mv(MB, A.u[i])),
                       (1, cross(A.ustar[j], B.ustar[k])), (-1, cross(B.ustar[j], A.ustar[k])),
                       (2 * A.c[i], B.u[i]), (-2 * B.c[i], A.u[i])))
        usC.append(_lin((-1, _vm(B.ustar[i], MA)), (1, _vm(A.ustar[i], MB)),
                        (-1, cross(A.u[j], B.u[k])), (1, cross(B.u[j], A.u[k])),
                        (-2 * A.c[i], B.ustar[i]), (2 * B.c[i], A.ustar[i])))
    return WindowElement(MC, cC, uC, usC)


def window_act_vector(A: WindowElement, x) -> tuple:
    """Action of A on (v, a, b, v*) in C^3 + C + C^* + (C^3)^*."""
    v, a, b, vs = x
    v, vs = _v3(v), _v3(vs)
    a, b = to_scalar(a), to_scalar(b)
    c, u, us = A.c, A.u, A.ustar
    t = c[2] - c[1]
    v_out = _lin((1, _mv(A.M, v)), (-c[0], v), (a, u[1]), (b, u[2]), (1, cross(vs, us[0])))
    a_out = dot(us[1], v) + t * a - dot(vs, u[2])
    b_out = dot(us[2], v) - t * b - dot(vs, u[1])
    vs_out = _lin((-1, _vm(vs, A.M)), (c[0], vs), (-a, us[2]), (-b, us[1]), (1, cross(u[0], v)))
    return v_out, a_out, b_out, vs_out


# ----------------------------------------------------------------------
# Triality
# ----------------------------------------------------------------------

class Perm3(tuple):
    """A permutation of {1, 2, 3} stored as (sigma(1), sigma(2), sigma(3))."""

    def __new__(cls, images=(1, 2, 3)):
        images = tuple(int(i) for i in images)
        if sorted(images) != [1, 2, 3]:
            raise ValueError(f"not a permutation of 1..3: {images}")
        return super().__new__(cls, images)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Perm3") -> "Perm3":
        """Composition: (self * other)(i) = self(other(i))."""
        return Perm3(self(other(i)) for i in (1, 2, 3))

    def inverse(self) -> "Perm3":
        out = [0, 0, 0]
        for i in (1, 2, 3):
            out[self(i) - 1] = i
        return Perm3(out)

    @classmethod
    def transposition(cls, i: int, j: int) -> "Perm3":
        im = [1, 2, 3]
        im[i - 1], im[j - 1] = j, i
        return cls(im)

    @classmethod
    def all(cls) -> list["Perm3"]:
        return [cls(p) for p in permutations((1, 2, 3))]

    def __repr__(self) -> str:
        return f"Perm3{tuple(self)}"


IDENTITY = Perm3((1, 2, 3))
S1 = Perm3.transposition(2, 3)
S2 = Perm3.transposition(1, 3)


def triality(sigma: Perm3, A: WindowElement) -> WindowElement:
    """Slot i of the result holds slot sigma^{-1}(i) of A; M is fixed."""
    sigma = Perm3(sigma)
    inv = sigma.inverse()
    idx = [inv(i) - 1 for i in (1, 2, 3)]
    return WindowElement(A.M, [A.c[k] for k in idx], [A.u[k] for k in idx],
                         [A.ustar[k] for k in idx])


def triality_bivector(sigma: Perm3, b: Bivector) -> Bivector:
    return phi_window(triality(sigma, phi_window_inv(b)))


# ----------------------------------------------------------------------
# Invariant forms
# ----------------------------------------------------------------------

def window_killing(A: WindowElement, B: WindowElement) -> Fraction:
    """Half the trace form, written in window coordinates."""
    out = (A.M @ B.M).trace()
    for i in range(3):
        out += dot(A.ustar[i], B.u[i]) + dot(B.ustar[i], A.u[i])
        out += 2 * A.c[i] * B.c[i]
    return out


def cartan_three_form(A: WindowElement, B: WindowElement, C: WindowElement) -> Fraction:
    out = (A.M @ (B.M @ C.M - C.M @ B.M)).trace()
    for s in permutations(range(3)):
        out += det3(A.ustar[s[0]], B.ustar[s[1]], C.ustar[s[2]])
        out -= det3(A.u[s[0]], B.u[s[1]], C.u[s[2]])
    for P, Q, R in ((A, B, C), (B, C, A), (C, A, B)):
        for i in range(3):
            out += 2 * P.c[i] * (dot(R.ustar[i], Q.u[i]) - dot(Q.ustar[i], R.u[i]))
            out += dot(R.ustar[i], P.M.apply(Q.u[i])) - dot(Q.ustar[i], P.M.apply(R.u[i]))
    return out


# ----------------------------------------------------------------------
# Equations of the minimal orbit closure
# ----------------------------------------------------------------------

_CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def wedge_sym(A: Mat, v) -> Mat:
    """(A ^ v)(w1, w2) = Aw1 ^ v ^ w2 + Aw2 ^ v ^ w1, as a symmetric matrix."""
    cols = [A.col(k) for k in range(3)]
    return Mat(3, 3, (det3(cols[r], v, _E3[s]) + det3(cols[s], v, _E3[r])
                      for r in range(3) for s in range(3)))


def sym_product(x, y) -> Mat:
    """x . y (w1, w2) = x(w1) y(w2) + x(w2) y(w1)."""
    return Mat(3, 3, (x[r] * y[s] + x[s] * y[r] for r in range(3) for s in range(3)))


def membership_failures(A: WindowElement) -> list[str]:
    """Names of the closure equations that fail at A (empty means member)."""
    M, c, u, us = A.M, A.c, A.u, A.ustar
    bad = []
    for i in range(3):
        for j in range(3):
            if i != j and dot(us[i], u[j]) != 0:
                bad.append(f"u*{i + 1}(u{j + 1}) = 0")
    I3 = Mat.identity(3)
    for i, j, k in _CYCLIC:
        a, b, n = i + 1, j + 1, k + 1
        if dot(us[i], u[i]) != -(c[i] - c[j]) * (c[i] - c[k]):
            bad.append(f"u*{a}(u{a}) = -(c{a}-c{b})(c{a}-c{n})")
        if cross(u[i], u[j]) != tuple((c[i] - c[j]) * x for x in us[k]):
            bad.append(f"u{a}^u{b} = (c{a}-c{b}) u*{n}")
        if cross(us[i], us[j]) != tuple((c[i] - c[j]) * x for x in u[k]):
            bad.append(f"u*{a}^u*{b} = (c{a}-c{b}) u{n}")
        Mk = M - I3 * c[k]
        if not (wedge_sym(Mk, u[k]) + sym_product(us[i], us[j])).is_zero():
            bad.append(f"(M-c{n})^u{n} + u*{a}.u*{b} = 0")
        if not (wedge_sym(Mk.T, us[k]) + sym_product(u[i], u[j])).is_zero():
            bad.append(f"(M-c{n})^u*{n} + u{a}.u{b} = 0")
        quad = Mk @ Mk + _outer(u[i], us[i]) + _outer(u[j], us[j]) - _outer(u[k], us[k]) \
            + I3 * dot(us[k], u[k])
        if not quad.is_zero():
            bad.append(f"(M-c{n})^2 + ... = 0 at {n}")
    return bad


def min_membership_window(A: WindowElement) -> bool:
    return not membership_failures(A)


def root_label_of(b: Bivector):
    """(sign, root) when ``b`` is +- a single Chevalley root vector, else None."""
    from .chevalley import ALL_ROOTS, root_vector

    for r in ALL_ROOTS:
        v = root_vector(r)
        if b == v:
            return 1, r
        if b == -v:
            return -1, r
    return None


def dynkin_image(sigma: Perm3, root) -> tuple:
    """Root coordinates after permuting (a1, a3, a4) as slots (1, 2, 3)."""
    slots = (root[0], root[2], root[3])
    inv = Perm3(sigma).inverse()
    new = [slots[inv(i) - 1] for i in (1, 2, 3)]
    return (new[0], root[1], new[1], new[2])
