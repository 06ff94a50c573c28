"""The association scheme attached to a BGW over Z_n, and its eigenmatrices.

Vertices are two copies of Z_n x {1..v}.  With P the n x n cyclic shift
(P[r, r+1] = 1) and W = sum_e e B_e, the classes are

* A_{0,i} = diag(P^{-i} ⊗ I_v, P^{-i} ⊗ I_v),
* A_1 = diag(J_n ⊗ (J_v - I_v), same),
* A_{2,i} with off-diagonal blocks sum_j P^j ⊗ B_{i+j} and sum_j P^j ⊗ B_{-i-j}^t,
* A_3, the remaining off-diagonal cells (absent when k = v).

The exponent -i on A_{0,i} is what makes A_{2,i} A_{2,j} = k A_{0,i+j} +
(λ/n) A_1 and the closed-form idempotents below hold; see the decisions log.

Axioms and intersection numbers are checked in exact integer arithmetic.
Eigenvalues involve sqrt(k) and n-th roots of unity, so that layer is float.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import AxiomViolation, EigenMismatch, NotABGW, NotCanonical, VerificationFailed
from .matrix import ZERO, GroupMatrix, decompose
from .verify import verify_bgw

TOL = 1e-9


@dataclass(frozen=True, eq=False)
class AssociationScheme:
    classes: tuple
    labels: tuple
    n: int
    v: int
    k: int
    lam: int

    @property
    def size(self) -> int:
        return 2 * self.n * self.v

    @property
    def has_A3(self) -> bool:
        return self.k < self.v

    def index(self, label) -> int:
        return self.labels.index(label)

    def __getitem__(self, label):
        return self.classes[self.index(label)]


def _shift(n: int) -> np.ndarray:
    return np.roll(np.eye(n, dtype=np.int64), 1, axis=1)


def _diag(X):
    Z = np.zeros_like(X)
    return np.block([[X, Z], [Z, X]])


def _offdiag(top, bottom):
    Z = np.zeros_like(top)
    return np.block([[Z, top], [bottom, Z]])


def scheme_from_bgw(W: GroupMatrix) -> AssociationScheme:
    rep = verify_bgw(W)
    if not rep.ok:
        raise NotABGW(f"input is not a BGW: {rep.violation}")
    n, v, k, lam = W.n, rep.params["v"], rep.params["k"], rep.params["lambda"]
    B = decompose(W).blocks
    P = _shift(n)
    Pw = [np.linalg.matrix_power(P, j) for j in range(n)]
    Iv, Jv, Jn = np.eye(v, dtype=np.int64), np.ones((v, v), dtype=np.int64), np.ones((n, n), dtype=np.int64)

    classes, labels = [], []
    for i in range(n):
        classes.append(_diag(np.kron(Pw[(-i) % n], Iv)))
        labels.append(("A0", i))
    classes.append(_diag(np.kron(Jn, Jv - Iv)))
    labels.append(("A1",))
    for i in range(n):
        top = sum(np.kron(Pw[j], B[(i + j) % n]) for j in range(n))
        bottom = sum(np.kron(Pw[j], B[(-i - j) % n].T) for j in range(n))
        classes.append(_offdiag(top, bottom))
        labels.append(("A2", i))
    if k < v:
        S = sum(B)
        classes.append(_offdiag(np.kron(Jn, Jv - S), np.kron(Jn, Jv - S.T)))
        labels.append(("A3",))
    for A in classes:
        A.setflags(write=False)
    return AssociationScheme(tuple(classes), tuple(labels), n, v, k, lam)


# -- exact axioms -----------------------------------------------------------


@dataclass
class SchemeReport:
    ok: bool
    size: int
    n_classes: int
    intersection_numbers: np.ndarray  # p[i, j, l]: coefficient of A_l in A_i A_j
    symmetric: bool
    symmetric_iff_n2: bool
    identities: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "size": self.size,
            "n_classes": self.n_classes,
            "intersection_numbers": self.intersection_numbers.tolist(),
            "symmetric": self.symmetric,
            "symmetric_iff_n2": self.symmetric_iff_n2,
            "identities": self.identities,
        }


def _cell(mask):
    return [int(x) for x in np.argwhere(mask)[0]]


def verify_scheme(S: AssociationScheme) -> SchemeReport:
    """Check axioms 1-5 exactly and return all intersection numbers.

    Axioms: A_0 = I; the classes are 0/1 and partition J; each transpose is
    a class; each product lies in the span; products commute.  Raises
    AxiomViolation on the first failure.
    """
    A = [np.asarray(X, dtype=np.int64) for X in S.classes]
    N, d = A[0].shape[0], len(A)
    if not np.array_equal(A[0], np.eye(N, dtype=np.int64)):
        raise AxiomViolation(1, _cell(A[0] != np.eye(N, dtype=np.int64)))
    for X in A:
        if not np.isin(X, (0, 1)).all():
            raise AxiomViolation(2, _cell(~np.isin(X, (0, 1))))
    total = sum(A)
    if (total != 1).any():
        raise AxiomViolation(2, _cell(total != 1))

    # each cell belongs to exactly one class; label[x, y] is that class
    label = sum(l * X for l, X in enumerate(A))
    for l, X in enumerate(A):
        t = int(label.T[np.unravel_index(np.argmax(X), X.shape)])
        if not np.array_equal(X.T, A[t]):
            raise AxiomViolation(3, {"class": l, "cell": _cell(X.T != A[t])})

    reps = [np.unravel_index(np.argmax(X), X.shape) for X in A]
    p = np.zeros((d, d, d), dtype=np.int64)
    products = {}
    for i in range(d):
        for j in range(d):
            # float matmul on small integers is exact and uses BLAS
            M = np.rint(A[i].astype(np.float64) @ A[j].astype(np.float64)).astype(np.int64)
            products[i, j] = M
            coef = np.array([M[r] for r in reps])
            p[i, j] = coef
            # on each class's support M must be constant
            rebuilt = coef[label]
            if not np.array_equal(M, rebuilt):
                raise AxiomViolation(4, {"product": [i, j], "cell": _cell(M != rebuilt)})
    for i in range(d):
        for j in range(i + 1, d):
            if not np.array_equal(products[i, j], products[j, i]):
                raise AxiomViolation(5, {"product": [i, j], "cell": _cell(products[i, j] != products[j, i])})

    symmetric = all(np.array_equal(X, X.T) for X in A)
    identities = _identities(S, p)
    return SchemeReport(
        ok=True,
        size=N,
        n_classes=d,
        intersection_numbers=p,
        symmetric=symmetric,
        symmetric_iff_n2=symmetric == (S.n == 2),
        identities=identities,
    )


def _identities(S: AssociationScheme, p: np.ndarray) -> dict:
    """The closed-form products A_1^2, A_{2,i} A_{2,j} and A_3^2."""
    n, v, k, lam = S.n, S.v, S.k, S.lam
    d = len(S.classes)
    a0 = [S.index(("A0", i)) for i in range(n)]
    a1 = S.index(("A1",))

    def expect(pairs):
        e = np.zeros(d, dtype=np.int64)
        for idx, c in pairs:
            e[idx] += c
        return e

    out = {}
    want = expect([(x, n * (v - 1)) for x in a0] + [(a1, n * (v - 2))])
    out["A1^2"] = {
        "coefficients": [n * (v - 1), n * (v - 2)],
        "holds": bool(np.array_equal(p[a1, a1], want)),
    }
    ok = True
    for i in range(n):
        for j in range(n):
            w = expect([(a0[(i + j) % n], k), (a1, lam // n)])
            ok &= bool(np.array_equal(p[S.index(("A2", i)), S.index(("A2", j))], w))
    out["A2i A2j"] = {"coefficients": [k, lam // n], "holds": ok}
    if S.has_A3:
        a3 = S.index(("A3",))
        w = expect([(x, n * (v - k)) for x in a0] + [(a1, n * (v - 2 * k + lam))])
        out["A3^2"] = {
            "coefficients": [n * (v - k), n * (v - 2 * k + lam)],
            "holds": bool(np.array_equal(p[a3, a3], w)),
        }
    return out


# -- eigenmatrices ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Eigenmatrices:
    P: np.ndarray  # rows idempotents, columns classes
    Q: np.ndarray  # rows classes, columns idempotents
    idempotents: tuple
    idempotent_labels: tuple
    class_labels: tuple
    multiplicities: tuple
    max_residual: float = 0.0

    def to_dict(self) -> dict:
        def pairs(M):
            return [[[float(z.real), float(z.imag)] for z in row] for row in M]

        return {
            "P": pairs(self.P),
            "Q": pairs(self.Q),
            "idempotent_labels": [list(map(str, l)) for l in self.idempotent_labels],
            "class_labels": [list(map(str, l)) for l in self.class_labels],
            "multiplicities": list(self.multiplicities),
            "max_residual": self.max_residual,
        }


def _closed_forms(S: AssociationScheme):
    """P, Q and the idempotent labels from the closed-form tables."""
    n, v, k = S.n, S.v, S.k
    w = np.exp(2j * np.pi / n)
    full = S.has_A3
    if full:
        r1 = np.sqrt(k * (v - k) / (v - 1))
        s = np.sqrt((v - 1) * (v - k) / k)
        t = np.sqrt((v - 1) * k / (v - k))
    sk = np.sqrt(k)

    # each row: value per class family, as a function of family index i
    rows = [
        (("E0",), lambda f, i: {"A0": 1, "A1": n * (v - 1), "A2": k, "A3": n * (v - k)}[f]),
        (("E1",), lambda f, i: {"A0": 1, "A1": n * (v - 1), "A2": -k, "A3": -n * (v - k)}[f]),
    ]
    if full:
        rows += [
            (("E21",), lambda f, i: {"A0": 1, "A1": -n, "A2": r1, "A3": -n * r1}[f]),
            (("E22",), lambda f, i: {"A0": 1, "A1": -n, "A2": -r1, "A3": n * r1}[f]),
        ]
    else:
        rows.append((("E2",), lambda f, i: {"A0": 1, "A1": -n, "A2": 0}[f]))
    for sgn, name in ((1, "E3"), (-1, "E4")):
        for j in range(1, n):
            rows.append(
                (
                    (name, j),
                    lambda f, i, j=j, sgn=sgn: {
                        "A0": w ** (-i * j),
                        "A1": 0,
                        "A2": sgn * sk * w ** (-i * j),
                        "A3": 0,
                    }[f],
                )
            )
    labels = tuple(l for l, _ in rows)
    P = np.array(
        [[fn(c[0], c[1] if len(c) > 1 else 0) for c in S.labels] for _, fn in rows], dtype=complex
    )

    def qcol(label):
        head = label[0]
        j = label[1] if len(label) > 1 else 0
        table = {
            "E0": {"A0": 1, "A1": 1, "A2": 1, "A3": 1},
            "E1": {"A0": 1, "A1": 1, "A2": -1, "A3": -1},
        }
        if full:
            table["E21"] = {"A0": v - 1, "A1": -1, "A2": s, "A3": -t}
            table["E22"] = {"A0": v - 1, "A1": -1, "A2": -s, "A3": t}
        else:
            table["E2"] = {"A0": 2 * (v - 1), "A1": -2, "A2": 0}
        if head in table:
            return [table[head][c[0]] for c in S.labels]
        sgn = 1 if head == "E3" else -1
        out = []
        for c in S.labels:
            i = c[1] if len(c) > 1 else 0
            out.append(
                {"A0": v * w ** (i * j), "A1": 0, "A2": sgn * v / sk * w ** (i * j), "A3": 0}[c[0]]
            )
        return out

    Q = np.array([qcol(l) for l in labels], dtype=complex).T
    return P, Q, labels


def eigenmatrices(S: AssociationScheme, tol: float = TOL) -> Eigenmatrices:
    """Closed-form P, Q and primitive idempotents, checked numerically.

    E_l = (1/|X|) sum_c Q[c, l] A_c.  Checks A_c E_l = P[l, c] E_l,
    E E' = δ E, sum E = I and P Q = |X| I, each within ``tol`` entrywise.
    """
    P, Q, labels = _closed_forms(S)
    N = S.size
    A = [X.astype(np.float64) for X in S.classes]
    E = []
    for l in range(len(labels)):
        E.append(sum(Q[c, l] * A[c] for c in range(len(A))) / N)

    worst = 0.0

    def check(M, row, col):
        nonlocal worst
        delta = float(np.abs(M).max()) if M.size else 0.0
        worst = max(worst, delta)
        if delta > tol:
            raise EigenMismatch(row, col, delta)

    check(P @ Q - N * np.eye(len(labels)), "PQ", "I")
    for l, El in enumerate(E):
        for c, Ac in enumerate(A):
            check(Ac @ El - P[l, c] * El, labels[l], S.labels[c])
    for a in range(len(E)):
        for b in range(a, len(E)):
            M = E[a] @ E[b]
            check(M - E[a] if a == b else M, labels[a], labels[b])
    check(sum(E) - np.eye(N), "sum", "I")

    # valencies: row sums equal the E0 row of P exactly
    for c, X in enumerate(S.classes):
        rs = X.sum(axis=1)
        if not (rs == rs[0]).all() or abs(rs[0] - P[0, c]) > tol:
            raise EigenMismatch("E0", S.labels[c], float(abs(rs[0] - P[0, c])))
    mult = []
    for l, El in enumerate(E):
        tr = np.trace(El)
        m = round(tr.real)
        if abs(tr - m) > tol or m < 0:
            raise EigenMismatch(labels[l], "trace", float(abs(tr - m)))
        mult.append(int(m))
    if sum(mult) != N:
        raise EigenMismatch("multiplicities", "sum", float(abs(sum(mult) - N)))

    return Eigenmatrices(P, Q, tuple(E), labels, S.labels, tuple(mult), worst)


# -- converse ---------------------------------------------------------------


def extract_bgw(S: AssociationScheme) -> GroupMatrix:
    """Read a BGW back off a scheme in construction order.

    B_j is the (0, j) block of the top-right quadrant of A_{2,0}.  The A_0
    and A_1 classes must already have their canonical form, and the scheme
    rebuilt from the extracted BGW must equal the input.
    """
    n, v = S.n, S.v
    P = _shift(n)
    Iv = np.eye(v, dtype=np.int64)
    try:
        A0 = [S[("A0", i)] for i in range(n)]
        A1 = S[("A1",)]
        A20 = S[("A2", 0)]
    except ValueError as exc:
        raise NotCanonical(f"missing class: {exc}") from None
    for i, X in enumerate(A0):
        if not np.array_equal(X, _diag(np.kron(np.linalg.matrix_power(P, (-i) % n), Iv))):
            raise NotCanonical(f"A_(0,{i}) is not in block-circulant form")
    Jv, Jn = np.ones((v, v), dtype=np.int64), np.ones((n, n), dtype=np.int64)
    if not np.array_equal(A1, _diag(np.kron(Jn, Jv - Iv))):
        raise NotCanonical("A_1 is not in block form")
    nv = n * v
    data = np.full((v, v), ZERO, dtype=np.int64)
    for j in range(n):
        Bj = A20[:v, nv + j * v : nv + (j + 1) * v]
        if ((data != ZERO) & (Bj == 1)).any():
            raise NotCanonical("blocks B_j overlap")
        data[Bj == 1] = j
    W = GroupMatrix(data, n)
    rep = verify_bgw(W)
    if not rep.ok:
        raise VerificationFailed(f"extracted matrix is not a BGW: {rep.violation}", rep)
    rebuilt = scheme_from_bgw(W)
    if rebuilt.labels != S.labels or not all(
        np.array_equal(a, b) for a, b in zip(rebuilt.classes, S.classes)
    ):
        raise NotCanonical("scheme is not the one built from its extracted BGW")
    return W
