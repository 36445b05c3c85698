"""Reflection functors on quiver data and their comparison with triality.

For B in N and a vertex k, out_k(B) = alpha_k (+) beta_{k-1} maps C^k into
C^{k+1} (+) C^{k-1} and in_k(B) = beta_k (+) (-alpha_{k-1}) maps back.  A pair
(B, B') lies in Z_k when B' agrees with B away from k, the sequence
0 -> C^k -> C^{k+1} (+) C^{k-1} -> C^k -> 0 built from out_k(B') and in_k(B)
is exact with a volume normalization, and out_k(B') in_k(B') equals
out_k(B) in_k(B) - lambda_k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .affinize import bpoint_eq, xi
from .bridge import F, F_inv, sl2_act, to_bivector
from .linalg import LinalgError, Mat, NoSolution, det, kernel_basis, rank, solve
from .orthogonal import Bivector
from .quiver import NOT_IN_N, NotInNError, QuiverPoint, in_N, require_N
from .trialgebra import S1, S2, Perm3, WindowElement, min_membership_window, phi_window, triality


class BadIndex(LinalgError):
    pass


class NotSurjective(LinalgError):
    pass


class DegenerateC(LinalgError):
    pass


class NotInOrbit(LinalgError):
    pass


GENERATOR_VERTEX = {S1: 1, S2: 2}


def _check_k(p: QuiverPoint, k: int):
    if not 1 <= k <= p.n - 1:
        raise BadIndex(f"vertex {k} outside 1..{p.n - 1}")


def out_in(p: QuiverPoint, k: int) -> tuple[Mat, Mat]:
    _check_k(p, k)
    if k == 1:
        return p.alpha(1), p.beta(1)
    return p.alpha(k).vstack(p.beta(k - 1)), p.beta(k).hstack(-p.alpha(k - 1))


def _from_out_in(p: QuiverPoint, k: int, out: Mat, inn: Mat) -> QuiverPoint:
    """Replace the arrows touching vertex k by the blocks of ``out`` / ``in``."""
    rows = list(range(k + 1))
    alpha_k = out.submatrix(rows, range(k))
    beta_k = inn.submatrix(range(k), rows)
    alphas, betas = {k: alpha_k}, {k: beta_k}
    if k > 1:
        lower = list(range(k + 1, 2 * k))
        betas[k - 1] = out.submatrix(lower, range(k))
        alphas[k - 1] = -inn.submatrix(range(k), lower)
    return p.replace(alphas=alphas, betas=betas)


def volume_form_sign(j: int) -> int:
    """vol_j = volume_form_sign(j) e_1 ^ .. ^ e_j; the signs repeat -, +, +, - from j = 0."""
    return -1 if ((j + 1) // 2) % 2 == 0 else 1


def volume_sign(k: int) -> int:
    """vol_{k-1} ^ vol_{k+1} as a multiple of e_1 ^ .. ^ e_{2k} on C^{k+1} (+) C^{k-1}."""
    shuffle = -1 if ((k - 1) * (k + 1)) % 2 else 1
    return volume_form_sign(k - 1) * volume_form_sign(k + 1) * shuffle


def _preimage(inn: Mat) -> Mat:
    """Some P with in . P = Id (columns are preimages of e_1 .. e_k)."""
    return solve(inn, Mat.identity(inn.rows))


@dataclass
class ZkReport:
    k: int
    agree_elsewhere: bool = False
    exact: bool = False
    volume: bool = False
    product: bool = False
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.agree_elsewhere and self.exact and self.volume and self.product


def zk_report(B: QuiverPoint, Bp: QuiverPoint, k: int, preimage: Mat | None = None) -> ZkReport:
    if B.n != Bp.n:
        raise LinalgError("points of different rank")
    _check_k(B, k)
    lam = require_N(B)[k - 1]
    require_N(Bp)
    rep = ZkReport(k)
    rep.agree_elsewhere = all(B.alpha(j) == Bp.alpha(j) and B.beta(j) == Bp.beta(j)
                              for j in range(1, B.n) if j not in (k - 1, k))
    out_b, in_b = out_in(B, k)
    out_p, in_p = out_in(Bp, k)
    rep.exact = (rank(out_p) == k and rank(in_b) == k and (in_b @ out_p).is_zero())
    if rep.exact:
        P = _preimage(in_b) if preimage is None else preimage
        if not (in_b @ P) == Mat.identity(k):
            raise LinalgError("supplied preimage does not map onto the standard basis")
        rep.volume = det(out_p.hstack(P)) == volume_sign(k)
    else:
        rep.notes.append("sequence is not exact")
    rep.product = out_p @ in_p == out_b @ in_b - Mat.identity(2 * k) * lam
    return rep


def zk_check(B: QuiverPoint, Bp: QuiverPoint, k: int, preimage: Mat | None = None) -> bool:
    return zk_report(B, Bp, k, preimage).ok


def sk_partner(B: QuiverPoint, k: int, kernel=None) -> QuiverPoint:
    """A point B' with (B, B') in Z_k.

    ``kernel`` optionally supplies a basis of ker in_k(B) as a 2k x k matrix;
    by default the echelon kernel basis is used.
    """
    lam = require_N(B)[k - 1]
    out_b, in_b = out_in(B, k)
    if rank(in_b) != k:
        raise NotSurjective(f"in_{k} is not surjective")
    K = Mat.from_cols(kernel_basis(in_b)) if kernel is None else kernel
    if K.shape != (2 * k, k) or not (in_b @ K).is_zero() or rank(K) != k:
        raise LinalgError("not a kernel basis of in_k")
    scale = det(K.hstack(_preimage(in_b))) / volume_sign(k)
    # rescale the first column so that the volume condition holds
    K = K @ Mat.diag([1 / scale] + [1] * (k - 1))
    target = out_b @ in_b - Mat.identity(2 * k) * lam
    try:
        new_in = solve(K, target)
    except NoSolution as exc:  # pragma: no cover - would contradict the identity in . (out in - lam) = 0
        raise LinalgError("condition (3) is not solvable") from exc
    return _from_out_in(B, k, K, new_in)


# ----------------------------------------------------------------------
# Regular points of the minimal orbit
# ----------------------------------------------------------------------

def lift_regular(A: WindowElement) -> QuiverPoint:
    """A point of N over A when c_1, c_2, c_3 are distinct.

    alpha_1 = (0, d), beta_1 = (0, -1), alpha_2 = (u_3 | u_2 / d),
    beta_2 = (-u*_3 / d ; u*_2) with d = c_3 - c_2.
    """
    c, u, us = A.c, A.u, A.ustar
    if len(set(c)) < 3:
        raise DegenerateC("c_1, c_2, c_3 must be distinct")
    if not min_membership_window(A):
        raise NotInOrbit("element is not in the minimal orbit closure")
    d = c[2] - c[1]
    alpha1 = Mat.column([0, d])
    beta1 = Mat.row_vector([0, -1])
    alpha2 = Mat.from_cols([u[2], [x / d for x in u[1]]])
    beta2 = Mat.from_rows([[-x / d for x in us[2]], us[1]])
    return QuiverPoint(3, (alpha1, alpha2), (beta1, beta2))


def _sl2_between(B: QuiverPoint, C: QuiverPoint) -> Mat | None:
    """g in SL_2 with g . C agreeing with B on alpha_2, if one exists."""
    # alpha_2(g.C) = alpha_2(C) g^{-1}; solve alpha_2(B) g = alpha_2(C)
    try:
        g = solve(B.alpha(2), C.alpha(2))
    except NoSolution:
        return None
    if det(g) != 1:
        return None
    return g


def triality_partner(A: WindowElement, gen: Perm3) -> QuiverPoint:
    """Lift of triality(gen, A), moved by SL_2 to satisfy the agreement condition."""
    from .bridge import sl2_act_quiver

    B = lift_regular(A)
    C = lift_regular(triality(gen, A))
    k = GENERATOR_VERTEX[Perm3(gen)]
    if k == 1:
        g = _sl2_between(B, C)
        if g is None:
            raise LinalgError("lifts are not related by SL_2")
        C = sl2_act_quiver(g, C)
    return C


def gg_equals_triality(A: WindowElement, gen: Perm3) -> bool:
    gen = Perm3(gen)
    if gen not in GENERATOR_VERTEX:
        raise BadIndex("generator must be s1 = (23) or s2 = (13)")
    k = GENERATOR_VERTEX[gen]
    B = lift_regular(A)
    Bp = triality_partner(A, gen)
    if phi_window(triality(gen, A)) != to_bivector(F(Bp)):
        return False
    if not zk_check(B, Bp, k):
        return False
    return bpoint_eq(xi(sk_partner(B, k)), xi(Bp))
