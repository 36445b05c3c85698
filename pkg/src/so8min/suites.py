"""Verification suites behind ``so8min verify``.

Every suite takes a seed and a trial count and returns a :class:`Report`.
With the default of 25 trials the case counts are: 50 SL_2 pairs and 100
membership transfers in ``bridge``, 50 KKS pairs and 100 sl_2 checks in
``kks``, 100 + 100 points in ``membership``, 25 regular samples per generator
and 10 braid samples in ``weyl``, 50 round trips and 50 points per z in
``affinize``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import affinize, bridge, chevalley, orthogonal, quiver, trialgebra, weylact
from .linalg import Mat, commutator, rank
from .sampling import make_rng, rand_int, rand_nonzero, rand_sl, rand_vector, rand_word

MAX_COUNTEREXAMPLES = 10


@dataclass
class Report:
    suite: str
    cases: int = 0
    passed: int = 0
    failed: int = 0
    counterexamples: list = field(default_factory=list)
    elapsed_ms: int = 0

    def record(self, ok: bool, witness=None) -> bool:
        self.cases += 1
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(witness if witness is not None else f"case {self.cases}")
        return ok

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "passed": self.passed,
                "failed": self.failed, "counterexamples": self.counterexamples,
                "elapsed_ms": self.elapsed_ms}


# ----------------------------------------------------------------------
# Samplers shared by the suites
# ----------------------------------------------------------------------

def sample_orbit(rng, length: int = 8) -> orthogonal.Bivector:
    """A nonzero point of the minimal orbit, scaled by a random nonzero integer."""
    b = orthogonal.sample_min_orbit(rand_word(rng, length))
    return b * rand_nonzero(rng, -2, 2)


def sample_regular_window(rng) -> trialgebra.WindowElement:
    """A window element of the minimal orbit with pairwise distinct c_i."""
    while True:
        A = trialgebra.phi_window_inv(sample_orbit(rng, 10))
        if len(set(A.c)) == 3:
            return A


def sample_negative(rng) -> orthogonal.Bivector:
    """A bivector outside the minimal orbit closure.

    Cycles through sums of two orbit points, orbit points shifted by a Cartan
    element, single Cartan elements, and dense random bivectors.
    """
    while True:
        kind = rand_int(rng, 0, 3)
        if kind == 0:
            b = sample_orbit(rng) + sample_orbit(rng)
        elif kind == 1:
            b = sample_orbit(rng) + chevalley.H(rand_int(rng, 1, 4)) * rand_nonzero(rng)
        elif kind == 2:
            b = chevalley.H(rand_int(rng, 1, 4)) * rand_nonzero(rng)
        else:
            b = orthogonal.Bivector.from_coordinates(4, rand_vector(rng, 28))
        if not orthogonal.in_min_closure(b):
            return b


def _orbit_isomap(rng) -> bridge.IsoMap:
    v1, v2 = orthogonal.factorize(sample_orbit(rng))
    return bridge.IsoMap.from_columns(v1, v2)


def _random_quiver(rng, n: int = 3) -> quiver.QuiverPoint:
    return quiver.QuiverPoint.from_coordinates(n, rand_vector(rng, quiver.QuiverPoint.dimension(n)))


# ----------------------------------------------------------------------
# Suites
# ----------------------------------------------------------------------

def suite_chevalley(seed: int = 0, trials: int = 25) -> Report:
    rep = Report("chevalley")
    res = chevalley.chevalley_relations_report()
    failures = list(res["failures"])
    for i in range(res["cases"]):
        rep.record(i >= len(failures), failures[i] if i < len(failures) else None)
    return rep


def suite_triality(seed: int = 0, trials: int = 25) -> Report:
    rep = Report("triality")
    basis = trialgebra.window_basis()
    for gen in (trialgebra.S1, trialgebra.S2):
        for A in basis:
            tA = trialgebra.triality(gen, A)
            for B in basis:
                lhs = trialgebra.triality(gen, trialgebra.window_bracket(A, B))
                rhs = trialgebra.window_bracket(tA, trialgebra.triality(gen, B))
                rep.record(lhs == rhs, {"generator": list(gen), "A": A.to_json(), "B": B.to_json()})
    perms = trialgebra.Perm3.all()
    for s in perms:
        for t in perms:
            ok = all(trialgebra.triality(s * t, A) == trialgebra.triality(s, trialgebra.triality(t, A))
                     for A in basis)
            rep.record(ok, {"sigma": list(s), "tau": list(t)})
    for gen in (trialgebra.S1, trialgebra.S2):
        for r in chevalley.ALL_ROOTS:
            image = trialgebra.root_label_of(trialgebra.triality_bivector(gen, chevalley.root_vector(r)))
            rep.record(image is not None and image[1] == trialgebra.dynkin_image(gen, r),
                       {"generator": list(gen), "root": list(r)})
    return rep


def suite_kostant(seed: int = 0, trials: int = 25) -> Report:
    rep = Report("kostant")
    res = orthogonal.kostant_rank_report()
    rep.record(res["rank_joint"] == 106, {"rank_joint": res["rank_joint"]})
    rep.record(res["rank_with_hwv"] == 107, {"rank_with_hwv": res["rank_with_hwv"]})
    rep.record(res["dims"] == (300, 70, 36, 406) and res["dims_identity"], {"dims": list(res["dims"])})
    return rep


def suite_membership(seed: int = 0, trials: int = 25) -> Report:
    rep = Report("membership")
    rng = make_rng(seed)
    points = [sample_orbit(rng) for _ in range(4 * trials)] + [sample_negative(rng) for _ in range(4 * trials)]
    for b in points:
        A = trialgebra.phi_window_inv(b)
        rep.record(trialgebra.min_membership_window(A) == orthogonal.in_min_closure(b), b.to_json())
    return rep


def suite_bridge(seed: int = 0, trials: int = 25) -> Report:
    rep = Report("bridge")
    rng = make_rng(seed)
    dim = quiver.QuiverPoint.dimension(3)
    fm = bridge.F_matrix()
    rep.record(fm.shape == (dim, dim) and rank(fm) == dim, {"rank": rank(fm), "dim": dim})
    units = [quiver.QuiverPoint.from_coordinates(3, [int(i == j) for j in range(dim)]) for i in range(dim)]
    images = [bridge.F(p) for p in units]
    for i, j in combinations(range(dim), 2):
        rep.record(bridge.omega1(images[i], images[j]) == quiver.symplectic_form(units[i], units[j]),
                   {"pair": [i, j]})
    for _ in range(2 * trials):
        g = rand_sl(rng, 2)
        p = _random_quiver(rng)
        ok = bridge.F(bridge.sl2_act_quiver(g, p)) == bridge.sl2_act(g, bridge.F(p))
        rep.record(ok, {"g": [[str(x) for x in r] for r in g.tolist()], "point": p.to_json()})
    for t in range(4 * trials):
        if t % 2 == 0:
            p = quiver.sample_N(3, rng=rng)
            f = bridge.F(p)
        else:
            f = _orbit_isomap(rng)
            p = bridge.F_inv(f)
        ok = bridge.F_inv(f) == p and bool(quiver.in_N(p)) and bridge.in_N1(f)
        rep.record(ok, {"point": p.to_json()})
    for _ in range(10):
        while True:
            p = _random_quiver(rng)
            if quiver.in_N(p) is quiver.NOT_IN_N:
                break
        rep.record(not bridge.in_N1(bridge.F(p)), {"point": p.to_json()})
    return rep


def suite_kks(seed: int = 0, trials: int = 25) -> Report:
    rep = Report("kks")
    rng = make_rng(seed)
    for _ in range(2 * trials):
        f = _orbit_isomap(rng)
        point = bridge.to_bivector(f)
        w1, w2 = rand_vector(rng, 8), rand_vector(rng, 8)
        w = orthogonal.Bivector.wedge(w1, w2)
        target = orthogonal.kks_lambda(point, w)
        ok = (bridge.lambda_prime(f, bridge.kks_tangent_lift(f, w)) == target
              and bridge.kks_closed_form(f, w1, w2) == target)
        rep.record(ok, {"point": f.to_json(), "w1": [str(x) for x in w1], "w2": [str(x) for x in w2]})
    E = chevalley.X(0, 1, 0, 0)
    H = chevalley.H(2)
    mE, mH = orthogonal.biv_to_matrix(E), orthogonal.biv_to_matrix(H)
    for _ in range(4 * trials):
        y = orthogonal.Bivector.from_coordinates(4, rand_vector(rng, 28))
        rhs = (mE @ commutator(orthogonal.biv_to_matrix(y), mH)).trace() / 2
        rep.record(orthogonal.kks_lambda(E, y) == rhs, y.to_json())
    return rep


def suite_weyl(seed: int = 0, trials: int = 25) -> Report:
    rep = Report("weyl")
    rng = make_rng(seed)
    for gen in (trialgebra.S1, trialgebra.S2):
        for _ in range(trials):
            A = sample_regular_window(rng)
            rep.record(weylact.gg_equals_triality(A, gen), {"generator": list(gen), "A": A.to_json()})
    s = weylact.sk_partner
    xi = affinize.xi
    for _ in range(max(1, (2 * trials) // 5)):
        A = sample_regular_window(rng)
        B = weylact.lift_regular(A)
        ok = affinize.bpoint_eq(xi(s(s(s(B, 1), 2), 1)), xi(s(s(s(B, 2), 1), 2)))
        ok = ok and all(affinize.bpoint_eq(xi(s(s(B, k), k)), xi(B)) for k in (1, 2))
        rep.record(ok, {"A": A.to_json()})
    return rep


def suite_affinize(seed: int = 0, trials: int = 25) -> Report:
    rep = Report("affinize")
    rng = make_rng(seed)
    for t in range(2 * trials):
        bp = affinize.sample_bpoint(rng, 2 + t % 3)
        p = affinize.lift_from_bpoint(bp.g, bp.X)
        ok = bool(quiver.in_N(p)) and quiver.is_surjective_part(p) and affinize.bpoint_eq(affinize.xi(p), bp)
        rep.record(ok, bp.to_json())
    for t in range(2 * trials):
        n = 3 + t % 2
        bp = affinize.sample_bpoint(rng, n)
        p = quiver.h_act(quiver.sample_H(n, rng), affinize.lift_from_bpoint(bp.g, bp.X))
        base = affinize.xi(p)
        for z in (2, 3, 5):
            ok = affinize.bpoint_eq(affinize.xi(affinize.cstar_act(z, p)), affinize.cstar_on_bpoint(z, base))
            rep.record(ok, {"z": z, "point": p.to_json()})
    for _ in range(trials):
        p = quiver.sample_N(3, rng=rng)
        z = Fraction(rand_nonzero(rng), rand_int(rng, 1, 3))
        ok = bridge.to_bivector(bridge.F(affinize.cstar_act(z, p))) == bridge.to_bivector(bridge.F(p)) * (z * z)
        rep.record(ok, {"z": str(z), "point": p.to_json()})
    return rep


def suite_flags(seed: int = 0, trials: int = 25) -> Report:
    rep = Report("flags")
    for n in range(2, 9):
        ok = quiver.flag_inequality_check(n) and quiver.flag_maximizers(n) == [tuple(range(1, n))]
        rep.record(ok, {"n": n})
    return rep


SUITES = {
    "chevalley": suite_chevalley,
    "triality": suite_triality,
    "kostant": suite_kostant,
    "membership": suite_membership,
    "bridge": suite_bridge,
    "kks": suite_kks,
    "weyl": suite_weyl,
    "affinize": suite_affinize,
    "flags": suite_flags,
}


def run_suite(name: str, seed: int = 0, trials: int = 25, timing: bool = False) -> Report:
    start = time.perf_counter()
    rep = SUITES[name](seed, trials)
    if timing:
        rep.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return rep


def aggregate(reports: list[Report]) -> dict:
    total = Report("all")
    for r in reports:
        total.cases += r.cases
        total.passed += r.passed
        total.failed += r.failed
        total.elapsed_ms += r.elapsed_ms
        for c in r.counterexamples:
            if len(total.counterexamples) < MAX_COUNTEREXAMPLES:
                total.counterexamples.append({"suite": r.suite, "input": c})
    out = total.to_json()
    out["suites"] = [r.to_json() for r in reports]
    return out
