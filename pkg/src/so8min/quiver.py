"""The type A double quiver C <-> C^2 <-> ... <-> C^n and its moment map.

alpha_k : C^k -> C^{k+1} and beta_k : C^{k+1} -> C^k for k = 1 .. n-1, with
alpha_0 = beta_0 = 0.  The group H = SL_2 x ... x SL_{n-1} acts on the inner
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .linalg import (
    DimMismatch,
    LinalgError,
    Mat,
    det,
    format_scalar,
    inverse,
    kernel_basis,
    parse_scalar,
    rank,
    solve,
)
from .sampling import make_rng, rand_int, rand_matrix


class NotInNError(LinalgError):
    pass


class NotInN:
    """Returned by :func:`in_N` when the point is off the zero fibre."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __bool__(self):
        return False

    def __repr__(self):
        return "NotInN"


NOT_IN_N = NotInN()


@dataclass(frozen=True)
class QuiverPoint:
    n: int
    alphas: tuple
    betas: tuple

    def __post_init__(self):
        if self.n < 2:
            raise DimMismatch("need n >= 2")
        alphas = tuple(a if isinstance(a, Mat) else Mat.from_rows(a) for a in self.alphas)
        betas = tuple(b if isinstance(b, Mat) else Mat.from_rows(b) for b in self.betas)
        if len(alphas) != self.n - 1 or len(betas) != self.n - 1:
            raise DimMismatch(f"need {self.n - 1} alphas and betas")
        for k in range(1, self.n):
            if alphas[k - 1].shape != (k + 1, k):
                raise DimMismatch(f"alpha_{k} must be {k + 1}x{k}")
            if betas[k - 1].shape != (k, k + 1):
                raise DimMismatch(f"beta_{k} must be {k}x{k + 1}")
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "betas", betas)

    def alpha(self, k: int) -> Mat:
        """alpha_k, with alpha_0 the empty map."""
        if k == 0:
            return Mat.zeros(1, 0)
        return self.alphas[k - 1]

    def beta(self, k: int) -> Mat:
        if k == 0:
            return Mat.zeros(0, 1)
        return self.betas[k - 1]

    @classmethod
    def zero(cls, n: int) -> "QuiverPoint":
        return cls(n, tuple(Mat.zeros(k + 1, k) for k in range(1, n)),
                   tuple(Mat.zeros(k, k + 1) for k in range(1, n)))

    def replace(self, alphas=None, betas=None) -> "QuiverPoint":
        """Copy with some arrows replaced; ``alphas``/``betas`` map k to a matrix."""
        a = list(self.alphas)
        b = list(self.betas)
        for k, m in (alphas or {}).items():
            a[k - 1] = m
        for k, m in (betas or {}).items():
            b[k - 1] = m
        return QuiverPoint(self.n, tuple(a), tuple(b))

    def _zip(self, other: "QuiverPoint", op) -> "QuiverPoint":
        if other.n != self.n:
            raise DimMismatch("quiver points of different rank")
        return QuiverPoint(self.n, tuple(op(x, y) for x, y in zip(self.alphas, other.alphas)),
                           tuple(op(x, y) for x, y in zip(self.betas, other.betas)))

    def __add__(self, other):
        return self._zip(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._zip(other, lambda x, y: x - y)

    def __mul__(self, s):
        return QuiverPoint(self.n, tuple(a * s for a in self.alphas), tuple(b * s for b in self.betas))

    __rmul__ = __mul__

    def coordinates(self) -> tuple:
        out = []
        for a, b in zip(self.alphas, self.betas):
            out.extend(a.entries)
            out.extend(b.entries)
        return tuple(out)

    @classmethod
    def from_coordinates(cls, n: int, xs: Sequence) -> "QuiverPoint":
        xs = list(xs)
        alphas, betas, pos = [], [], 0
        for k in range(1, n):
            size = k * (k + 1)
            alphas.append(Mat(k + 1, k, xs[pos:pos + size]))
            pos += size
            betas.append(Mat(k, k + 1, xs[pos:pos + size]))
            pos += size
        if pos != len(xs):
            raise DimMismatch("wrong number of coordinates")
        return cls(n, tuple(alphas), tuple(betas))

    @staticmethod
    def dimension(n: int) -> int:
        return sum(2 * k * (k + 1) for k in range(1, n))

    def to_json(self) -> dict:
        f = format_scalar
        return {"n": self.n,
                "alpha": [[[f(x) for x in r] for r in a.tolist()] for a in self.alphas],
                "beta": [[[f(x) for x in r] for r in b.tolist()] for b in self.betas]}

    @classmethod
    def from_json(cls, obj: dict) -> "QuiverPoint":
        def mat(rows, r, c):
            if not rows:
                return Mat.zeros(r, c)
            return Mat.from_rows([[parse_scalar(x) for x in row] for row in rows])
        n = int(obj["n"])
        return cls(n, tuple(mat(a, k + 1, k) for k, a in enumerate(obj["alpha"], 1)),
                   tuple(mat(b, k, k + 1) for k, b in enumerate(obj["beta"], 1)))


@dataclass(frozen=True)
class HElement:
    """(g_2, ..., g_{n-1}) with g_k in SL_k."""

    gs: tuple

    def __post_init__(self):
        gs = tuple(g if isinstance(g, Mat) else Mat.from_rows(g) for g in self.gs)
        for k, g in enumerate(gs, 2):
            if g.shape != (k, k):
                raise DimMismatch(f"g_{k} must be {k}x{k}")
            if det(g) != 1:
                raise LinalgError(f"g_{k} is not unimodular")
        object.__setattr__(self, "gs", gs)

    @property
    def n(self) -> int:
        return len(self.gs) + 2

    def g(self, k: int) -> Mat:
        """g_k, with g_1 and g_n the identity."""
        if k == 1 or k == self.n:
            return Mat.identity(k)
        return self.gs[k - 2]

    @classmethod
    def identity(cls, n: int) -> "HElement":
        return cls(tuple(Mat.identity(k) for k in range(2, n)))

    def __mul__(self, other: "HElement") -> "HElement":
        return HElement(tuple(a @ b for a, b in zip(self.gs, other.gs)))

    def inverse(self) -> "HElement":
        return HElement(tuple(inverse(g) for g in self.gs))


def moment_map(p: QuiverPoint) -> list[Mat]:
    """Traceless parts of alpha_{k-1} beta_{k-1} - beta_k alpha_k, k = 2 .. n-1."""
    out = []
    for k in range(2, p.n):
        d = p.alpha(k - 1) @ p.beta(k - 1) - p.beta(k) @ p.alpha(k)
        out.append(d - Mat.identity(k) * (d.trace() / k))
    return out


def defect(p: QuiverPoint, k: int) -> Mat:
    """beta_k alpha_k - alpha_{k-1} beta_{k-1} on C^k."""
    if k == 1:
        return p.beta(1) @ p.alpha(1)
    return p.beta(k) @ p.alpha(k) - p.alpha(k - 1) @ p.beta(k - 1)


def in_N(p: QuiverPoint):
    """The scalars lambda_1 .. lambda_{n-1}, or NOT_IN_N."""
    lams = []
    for k in range(1, p.n):
        d = defect(p, k)
        if not d.is_scalar():
            return NOT_IN_N
        lams.append(d[0, 0])
    return lams


def require_N(p: QuiverPoint) -> list:
    lams = in_N(p)
    if lams is NOT_IN_N:
        raise NotInNError("point is not in N")
    return lams


def is_surjective_part(p: QuiverPoint) -> bool:
    return all(rank(p.beta(k)) == k for k in range(1, p.n))


def symplectic_form(p: QuiverPoint, q: QuiverPoint) -> Fraction:
    if p.n != q.n:
        raise DimMismatch("quiver points of different rank")
    out = Fraction(0)
    for k in range(1, p.n):
        out += (q.beta(k) @ p.alpha(k)).trace() - (p.beta(k) @ q.alpha(k)).trace()
    return out


def h_act(h: HElement, p: QuiverPoint) -> QuiverPoint:
    if h.n != p.n:
        raise DimMismatch("group element and point have different rank")
    alphas, betas = [], []
    for k in range(1, p.n):
        gk, gk1 = h.g(k), h.g(k + 1)
        alphas.append(gk1 @ p.alpha(k) @ inverse(gk))
        betas.append(gk @ p.beta(k) @ inverse(gk1))
    return QuiverPoint(p.n, tuple(alphas), tuple(betas))


def sample_N(n: int, seed=0, rng=None, bound: int = 2, surjective: bool = True) -> QuiverPoint:
    """Exact random point of N with injective alphas.

    beta_k is solved from beta_k alpha_k = alpha_{k-1} beta_{k-1} + lambda_k Id,
    going up from k = 1; a random kernel combination keeps it generic.
    """
    if n < 2:
        raise DimMismatch("need n >= 2")
    rng = rng if rng is not None else make_rng(seed)
    while True:
        alphas, betas = [], []
        prev = None
        ok = True
        for k in range(1, n):
            a = rand_matrix(rng, k + 1, k, bound)
            if rank(a) < k:
                ok = False
                break
            lam = Fraction(rand_int(rng, -bound, bound))
            rhs = Mat.identity(k) * lam
            if prev is not None:
                rhs = rhs + prev[0] @ prev[1]
            bt = solve(a.T, rhs.T)
            for v in kernel_basis(a.T):
                col = Mat.column(v)
                bt = bt + col @ Mat.row_vector([rand_int(rng, -bound, bound) for _ in range(k)])
            b = bt.T
            alphas.append(a)
            betas.append(b)
            prev = (a, b)
        if not ok:
            continue
        p = QuiverPoint(n, tuple(alphas), tuple(betas))
        if surjective and not is_surjective_part(p):
            continue
        return p


def sample_H(n: int, rng, bound: int = 2) -> HElement:
    from .sampling import rand_sl
    return HElement(tuple(rand_sl(rng, k, bound) for k in range(2, n)))


def flag_sequences(n: int):
    """All (m_1, .., m_{n-1}) with 0 <= m_1 <= .. <= m_{n-1} <= n and m_k <= k."""
    if n < 1:
        return
    for seq in combinations_with_replacement(range(n), n - 1):
        if all(m <= k for k, m in enumerate(seq, 1)):
            yield seq


def flag_value(seq: Sequence[int], n: int) -> int:
    ms = (0,) + tuple(seq) + (n,)
    return sum(ms[k] * (ms[k + 1] - ms[k]) for k in range(1, n))


def flag_inequality_check(n: int) -> bool:
    """Brute-force the flag inequality; equality only at m_k = k."""
    if n > 12:
        raise ValueError("enumeration bound is n <= 12")
    if n < 1:
        return True
    bound = sum(range(1, n))
    top = tuple(range(1, n))
    for seq in flag_sequences(n):
        v = flag_value(seq, n)
        if v > bound or (v == bound) != (seq == top):
            return False
    return True


def flag_maximizers(n: int) -> list[tuple]:
    best = max(flag_value(s, n) for s in flag_sequences(n))
    return [s for s in flag_sequences(n) if flag_value(s, n) == best]
