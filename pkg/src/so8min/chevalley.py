"""A Chevalley basis of so_8 = Lambda^2 C^8 and the D_4 root data."""

from __future__ import annotations

from .orthogonal import Bivector, bracket

# Roots are written in simple-root coordinates (a1, a2, a3, a4).
POSITIVE_ROOTS: tuple[tuple[int, int, int, int], ...] = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (1, 1, 0, 0),
    (0, 1, 1, 0),
    (0, 1, 0, 1),
    (0, 1, 1, 1),
    (1, 1, 0, 1),
    (1, 1, 1, 0),
    (1, 1, 1, 1),
    (1, 2, 1, 1),
)

SIMPLE_ROOTS = POSITIVE_ROOTS[:4]

# (i, j) with X_alpha = e_i ^ e_j, then (k, l) with Y_-alpha = e_k ^ e_l.
_ROOT_PAIRS = {
    (1, 0, 0, 0): ((1, 7), (2, 8)),
    (0, 1, 0, 0): ((2, 6), (3, 7)),
    (0, 0, 1, 0): ((3, 5), (4, 6)),
    (0, 0, 0, 1): ((3, 4), (5, 6)),
    (1, 1, 0, 0): ((1, 6), (3, 8)),
    (0, 1, 1, 0): ((2, 5), (4, 7)),
    (0, 1, 0, 1): ((2, 4), (5, 7)),
    (0, 1, 1, 1): ((2, 3), (6, 7)),
    (1, 1, 0, 1): ((1, 4), (5, 8)),
    (1, 1, 1, 0): ((1, 5), (4, 8)),
    (1, 1, 1, 1): ((1, 3), (6, 8)),
    (1, 2, 1, 1): ((1, 2), (7, 8)),
}

CARTAN: tuple[Bivector, ...] = (
    Bivector(4, {(1, 8): 1, (2, 7): -1}),
    Bivector(4, {(2, 7): 1, (3, 6): -1}),
    Bivector(4, {(3, 6): 1, (4, 5): -1}),
    Bivector(4, {(3, 6): 1, (4, 5): 1}),
)

# D_4 Cartan matrix, node 2 central.
CARTAN_MATRIX = (
    (2, -1, 0, 0),
    (-1, 2, -1, -1),
    (0, -1, 2, 0),
    (0, -1, 0, 2),
)

ALL_ROOTS = POSITIVE_ROOTS + tuple(tuple(-x for x in r) for r in POSITIVE_ROOTS)


def root_vector(root) -> Bivector:
    """X_alpha for a positive root, Y_alpha for a negative one."""
    root = tuple(root)
    if root in _ROOT_PAIRS:
        return Bivector.basis(4, *_ROOT_PAIRS[root][0])
    neg = tuple(-x for x in root)
    if neg in _ROOT_PAIRS:
        return Bivector.basis(4, *_ROOT_PAIRS[neg][1])
    raise KeyError(f"{root} is not a root of D4")


def X(*root) -> Bivector:
    return root_vector(root)


def Y(*root) -> Bivector:
    """Y_{-alpha}, indexed by the positive root alpha."""
    return root_vector(tuple(-x for x in root))


def H(i: int) -> Bivector:
    """H_{alpha_i}, 1-indexed."""
    return CARTAN[i - 1]


def root_label(root) -> str:
    root = tuple(root)
    sign = "-" if root[0] < 0 or (root[0] == 0 and any(x < 0 for x in root)) else ""
    parts = []
    for i, c in enumerate(root, 1):
        c = abs(c)
        if c:
            parts.append(f"{'' if c == 1 else c}a{i}")
    return sign + "+".join(parts)


def basis() -> list[tuple[str, Bivector]]:
    """The 28 table elements: 12 X, 12 Y, 4 H, in table order."""
    out = [(f"X[{root_label(r)}]", root_vector(r)) for r in POSITIVE_ROOTS]
    out += [(f"Y[{root_label(tuple(-x for x in r))}]", Y(*r)) for r in POSITIVE_ROOTS]
    out += [(f"H[a{i}]", H(i)) for i in range(1, 5)]
    return out


def cartan_integer(i: int, j: int) -> int:
    """<alpha_j, alpha_i^vee>, so that [H_i, X_{alpha_j}] = a_ji X_{alpha_j}."""
    return CARTAN_MATRIX[j - 1][i - 1]


def root_weight(root, i: int) -> int:
    """<root, alpha_i^vee> via the Cartan matrix."""
    return sum(c * cartan_integer(i, k) for k, c in enumerate(root, 1))


def _expand_in_table(b: Bivector):
    """Coefficients of ``b`` in the table basis (the table spans so_8)."""
    from .linalg import Mat, NoSolution, solve
    from .orthogonal import pair_index

    elems = [v for _, v in basis()]
    pairs = pair_index(4)
    a = Mat.from_cols([[e.coeffs.get(p, 0) for p in pairs] for e in elems])
    rhs = Mat.column([b.coeffs.get(p, 0) for p in pairs])
    try:
        return solve(a, rhs).col(0)
    except NoSolution:
        return None


def chevalley_relations_report() -> dict:
    """Check the defining relations of the table under the adopted sign."""
    failures: list[str] = []
    cases = 0

    for i in range(1, 5):
        cases += 1
        a = SIMPLE_ROOTS[i - 1]
        if bracket(X(*a), Y(*a)) != H(i):
            failures.append(f"[X_a{i}, Y_-a{i}] != H_a{i}")

    for i in range(1, 5):
        for j in range(1, 5):
            cases += 1
            xj = X(*SIMPLE_ROOTS[j - 1])
            if bracket(H(i), xj) != xj * cartan_integer(i, j):
                failures.append(f"[H_a{i}, X_a{j}] != {cartan_integer(i, j)} X_a{j}")

    # Closure: every bracket of two table elements is an integral combination
    # of table elements; root-vector brackets are 0 or +-(root vector of the sum).
    for r in ALL_ROOTS:
        for s in ALL_ROOTS:
            cases += 1
            b = bracket(root_vector(r), root_vector(s))
            tot = tuple(x + y for x, y in zip(r, s))
            if all(x == 0 for x in tot):
                coeffs = _expand_in_table(b)
                if coeffs is None or any(c.denominator != 1 for c in coeffs) or any(coeffs[:24]):
                    failures.append(f"[{root_label(r)}, {root_label(s)}] not in the integral Cartan span")
            elif tot in ALL_ROOTS:
                t = root_vector(tot)
                if b not in (t, -t):
                    failures.append(f"[{root_label(r)}, {root_label(s)}] != +-E[{root_label(tot)}]")
            elif not b.is_zero():
                failures.append(f"[{root_label(r)}, {root_label(s)}] should vanish")
    for hi in CARTAN:
        for r in ALL_ROOTS:
            cases += 1
            b = bracket(hi, root_vector(r))
            i = CARTAN.index(hi) + 1
            if b != root_vector(r) * root_weight(r, i):
                failures.append(f"[H_a{i}, E[{root_label(r)}]] has the wrong weight")
        for hj in CARTAN:
            cases += 1
            if not bracket(hi, hj).is_zero():
                failures.append("Cartan elements do not commute")
    return {"cases": cases, "failed": len(failures), "failures": failures}


__all__ = [
    "POSITIVE_ROOTS", "SIMPLE_ROOTS", "ALL_ROOTS", "CARTAN", "CARTAN_MATRIX",
    "root_vector", "X", "Y", "H", "basis", "cartan_integer", "root_weight",
    "root_label", "chevalley_relations_report",
]
