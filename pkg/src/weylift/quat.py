"""Rational quaternions, quaternionic matrices, the 2x2 complex ("hat")
embedding, the covering SU(2) -> SO(3) with its rational lifting, and the
quaternionic Weyl-group witnesses (the non-split Z/4 generated by j).
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from weylift.closure import DEFAULT_CAP, ClosureResult, bfs_closure
from weylift.exactmat import ExactMatrix, exact_rank
from weylift.report import SuiteReport
from weylift.scalars import imag_unit

__all__ = [
    "Quaternion",
    "QuatMatrix",
    "QuaternionError",
    "quat_arith",
    "hat_embedding",
    "su2_to_so3",
    "so3_lift",
    "quat_conj_complex_check",
    "quat_weyl_closure",
    "monomial_normalizer_check",
    "random_quaternion",
    "verify_quat_suite",
    "ONE",
    "I",
    "J",
    "K",
]


class QuaternionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Quaternion:
    """q0 + q1 i + q2 j + q3 k with rational coefficients."""

    q0: Fraction = Fraction(0)
    q1: Fraction = Fraction(0)
    q2: Fraction = Fraction(0)
    q3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("q0", "q1", "q2", "q3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def coerce(cls, x) -> "Quaternion":
        if isinstance(x, Quaternion):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot make a quaternion from {type(x).__name__}")

    def coeffs(self) -> tuple[Fraction, ...]:
        return (self.q0, self.q1, self.q2, self.q3)

    def __add__(self, other):
        o = Quaternion.coerce(other)
        return Quaternion(*(a + b for a, b in zip(self.coeffs(), o.coeffs())))

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __sub__(self, other):
        return self + (-Quaternion.coerce(other))

    def __rsub__(self, other):
        return Quaternion.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(*(c * other for c in self.coeffs()))
        o = Quaternion.coerce(other)
        a0, a1, a2, a3 = self.coeffs()
        b0, b1, b2, b3 = o.coeffs()
        return Quaternion(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def __rmul__(self, other):
        return Quaternion.coerce(other) * self

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(*(c / other for c in self.coeffs()))
        return self * Quaternion.coerce(other).inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def conj(self) -> "Quaternion":
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def norm(self) -> Fraction:
        """Nm(q) = q qbar = q0^2 + q1^2 + q2^2 + q3^2."""
        return sum((c * c for c in self.coeffs()), Fraction(0))

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if n == 0:
            raise QuaternionError("zero quaternion has no inverse")
        return self.conj() / n

    def is_zero(self) -> bool:
        return not any(self.coeffs())

    def is_complex(self) -> bool:
        """Lies in C = R + R i."""
        return self.q2 == 0 and self.q3 == 0

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs()]

    def __repr__(self):
        parts = []
        for c, u in zip(self.coeffs(), ("", "i", "j", "k")):
            if c:
                parts.append(f"{c}{u}" if not u or abs(c) != 1 else ("-" if c < 0 else "") + u)
        return "Quaternion(" + (" + ".join(parts) or "0") + ")"


ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)


def quat_arith(op: str, a: Quaternion, b: Quaternion | None = None):
    if op == "mul":
        if b is None:
            raise ValueError("mul needs two operands")
        return a * b
    if op == "conj":
        return a.conj()
    if op == "norm":
        return a.norm()
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown quaternion operation {op!r}")


def hat_embedding(q: Quaternion) -> ExactMatrix:
    """q0 + q1 i + q2 j + q3 k -> [[q0 + q1 i, q2 + q3 i], [-q2 + q3 i, q0 - q1 i]]."""
    i = imag_unit()
    q0, q1, q2, q3 = q.coeffs()
    return ExactMatrix.from_rows([[i * q1 + q0, i * q3 + q2], [i * q3 - q2, -(i * q1) + q0]])


def su2_to_so3(q: Quaternion) -> ExactMatrix:
    """Matrix of x -> q x q^{-1} on span(i, j, k); column c is the image of the c-th unit."""
    if q.norm() != 1:
        raise QuaternionError(f"su2_to_so3 needs a unit quaternion, Nm = {q.norm()}")
    qi = q.inverse()
    cols = [(q * u * qi).coeffs()[1:] for u in (I, J, K)]
    return ExactMatrix.from_rows([[cols[c][r] for c in range(3)] for r in range(3)])


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    a, b = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if a * a == x.numerator and b * b == x.denominator:
        return Fraction(a, b)
    return None


def so3_lift(R: ExactMatrix) -> Quaternion:
    """A unit quaternion q with su2_to_so3(q) = R, normalized so its first nonzero
    coefficient is positive (the other lift is -q)."""
    if R.n != 3 or not all(x.is_rational() for r in R.rows() for x in r):
        raise QuaternionError("so3_lift needs a 3x3 rational matrix")
    if R.transpose() * R != ExactMatrix.identity(3) or R.det() != 1:
        raise QuaternionError("matrix is not a rotation")
    r = [[x.to_fraction() for x in row] for row in R.rows()]
    tr = r[0][0] + r[1][1] + r[2][2]
    sq = [
        (1 + tr) / 4,
        (1 + r[0][0] - r[1][1] - r[2][2]) / 4,
        (1 - r[0][0] + r[1][1] - r[2][2]) / 4,
        (1 - r[0][0] - r[1][1] + r[2][2]) / 4,
    ]
    k = max(range(4), key=lambda t: sq[t])
    pivot = _rational_sqrt(sq[k])
    if pivot is None or pivot == 0:
        raise QuaternionError("rotation has no rational unit-quaternion lift")
    # products 4 q_a q_b read off R
    prod = {
        (0, 1): r[2][1] - r[1][2],
        (0, 2): r[0][2] - r[2][0],
        (0, 3): r[1][0] - r[0][1],
        (1, 2): r[0][1] + r[1][0],
        (1, 3): r[0][2] + r[2][0],
        (2, 3): r[1][2] + r[2][1],
    }
    c = [Fraction(0)] * 4
    c[k] = pivot
    for t in range(4):
        if t != k:
            c[t] = prod[tuple(sorted((k, t)))] / (4 * pivot)
    q = Quaternion(*c)
    if next(x for x in q.coeffs() if x) < 0:
        q = -q
    if q.norm() != 1 or su2_to_so3(q) != R:
        raise QuaternionError("rotation has no rational unit-quaternion lift")
    return q


def random_quaternion(rng: random.Random, bound: int = 20, den: int = 7) -> Quaternion:
    return Quaternion(*(Fraction(rng.randint(-bound, bound), rng.randint(1, den)) for _ in range(4)))


# ---------------------------------------------------------------------------
# matrices


class QuatMatrix:
    """m x m matrix with Quaternion entries (0-based indexing)."""

    __slots__ = ("m", "entries", "_key")

    def __init__(self, entries: Sequence[Sequence]):
        m = len(entries)
        if any(len(r) != m for r in entries):
            raise QuaternionError("quaternionic matrix must be square")
        self.m = m
        self.entries = tuple(tuple(Quaternion.coerce(x) for x in r) for r in entries)
        self._key = None

    @classmethod
    def identity(cls, m: int) -> "QuatMatrix":
        return cls([[ONE if i == j else 0 for j in range(m)] for i in range(m)])

    @classmethod
    def diag(cls, values: Sequence) -> "QuatMatrix":
        m = len(values)
        return cls([[values[i] if i == j else 0 for j in range(m)] for i in range(m)])

    @classmethod
    def permutation(cls, images: Sequence[int]) -> "QuatMatrix":
        """Sends basis vector e_j to e_{images[j]}."""
        m = len(images)
        rows = [[0] * m for _ in range(m)]
        for j, i in enumerate(images):
            rows[i][j] = ONE
        return cls(rows)

    def __getitem__(self, ij) -> Quaternion:
        i, j = ij
        return self.entries[i][j]

    def __mul__(self, other: "QuatMatrix") -> "QuatMatrix":
        if not isinstance(other, QuatMatrix):
            return NotImplemented
        if other.m != self.m:
            raise QuaternionError("dimension mismatch")
        m = self.m
        out = []
        for i in range(m):
            row = []
            for j in range(m):
                acc = Quaternion()
                for k in range(m):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return QuatMatrix(out)

    def __neg__(self):
        return QuatMatrix([[-x for x in r] for r in self.entries])

    def __eq__(self, other):
        return isinstance(other, QuatMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def key(self):
        if self._key is None:
            self._key = tuple(c for r in self.entries for x in r for c in x.coeffs())
        return self._key

    def to_json(self) -> dict:
        return {"m": self.m, "rows": [[x.to_json() for x in r] for r in self.entries]}

    def __repr__(self):
        return "QuatMatrix(" + repr([list(r) for r in self.entries]) + ")"

    def diagonal(self) -> list[Quaternion]:
        return [self.entries[i][i] for i in range(self.m)]

    def is_diagonal(self) -> bool:
        return all(self.entries[i][j].is_zero() for i in range(self.m) for j in range(self.m) if i != j)

    def is_monomial(self) -> bool:
        nz = [[not x.is_zero() for x in r] for r in self.entries]
        return all(sum(r) == 1 for r in nz) and all(sum(c) == 1 for c in zip(*nz))

    def hat(self) -> ExactMatrix:
        """2m x 2m complex matrix of blocks hat(entry)."""
        m = self.m
        rows = [[0] * (2 * m) for _ in range(2 * m)]
        for i in range(m):
            for j in range(m):
                h = hat_embedding(self.entries[i][j])
                for a in range(2):
                    for b in range(2):
                        rows[2 * i + a][2 * j + b] = h[a, b]
        return ExactMatrix.from_rows(rows)

    def is_invertible(self) -> bool:
        return not self.hat().det().is_zero()

    def inverse(self) -> "QuatMatrix":
        """Gauss-Jordan by left row operations over the division ring."""
        m = self.m
        a = [list(r) + [ONE if i == j else Quaternion() for j in range(m)] for i, r in enumerate(self.entries)]
        for c in range(m):
            piv = next((r for r in range(c, m) if not a[r][c].is_zero()), None)
            if piv is None:
                raise QuaternionError("matrix is singular")
            a[c], a[piv] = a[piv], a[c]
            inv = a[c][c].inverse()
            a[c] = [inv * x for x in a[c]]
            for r in range(m):
                if r != c and not a[r][c].is_zero():
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return QuatMatrix([r[m:] for r in a])


def quat_conj_complex_check() -> SuiteReport:
    rep = SuiteReport("quat-conj", None, None)
    corpus = [ONE, I, Quaternion(Fraction(3, 5), Fraction(4, 5)), Quaternion(2, -7), Quaternion(Fraction(-1, 3), 5)]
    Ji = J.inverse()
    bad = [z for z in corpus if J * z * Ji != z.conj()]
    rep.check("j z j^{-1} = conj(z) for complex z", not bad, f"{len(corpus)} values")
    rep.check("j i j^{-1} = -i", J * I * Ji == -I)
    Ii = I.inverse()
    rep.check("i z i^{-1} = z for complex z", all(I * z * Ii == z for z in corpus))
    # centralizer of C: kernel of q -> q i - i q is span(1, i)
    rows = [(b * I - I * b).coeffs() for b in (ONE, I, J, K)]
    rep.check("centralizer of C in H is C", 4 - exact_rank(list(zip(*rows))) == 2 and all(
        (b * I - I * b).is_zero() for b in (ONE, I)
    ))
    rep.check("j^2 = -1", J * J == -ONE)
    return rep.finish()


def _weyl_C_projection(g: QuatMatrix) -> tuple:
    """Signed permutation of W(C_m) under a monomial matrix with entries in {+-1, +-j}.

    Entry +-1 keeps the sign, +-j (rotation by pi about the j axis) flips it.
    """
    out = []
    for i, row in enumerate(g.entries):
        j = next(c for c, x in enumerate(row) if not x.is_zero())
        x = row[j]
        if x in (ONE, -ONE):
            out.append((j, 1))
        elif x in (J, -J):
            out.append((j, -1))
        else:
            raise QuaternionError(f"unexpected monomial entry {x!r}")
    return tuple(out)


def quat_weyl_closure(m: int, cap: int = DEFAULT_CAP) -> tuple[ClosureResult, SuiteReport]:
    """Closure of adjacent transpositions and diag(1, .., j, .., 1) in GL_m(H)."""
    if not 1 <= m <= 3:
        raise ValueError("quaternionic closures are limited to m <= 3")
    gens = []
    for t in range(m - 1):
        images = list(range(m))
        images[t], images[t + 1] = t + 1, t
        gens.append(QuatMatrix.permutation(images))
    for t in range(m):
        gens.append(QuatMatrix.diag([J if k == t else ONE for k in range(m)]))
    res = bfs_closure(gens, QuatMatrix.identity(m), QuatMatrix.key, cap=cap)
    rep = SuiteReport("quat-weyl", "C", m)
    expect = 4**m * math.factorial(m)
    rep.check("|closure| = 4^m m!", res.order == expect, f"order {res.order}")
    rep.check("-Id lies in the closure", any(g == -QuatMatrix.identity(m) for g in res.elements))
    image = {_weyl_C_projection(g) for g in res.elements}
    w = 2**m * math.factorial(m)
    rep.check("projection onto W(C_m) is surjective", len(image) == w, f"image {len(image)}, |W(C_m)| = {w}")
    kernel = [g for g in res.elements if _weyl_C_projection(g) == tuple((i, 1) for i in range(m))]
    rep.check("kernel of the projection is {+-1}^m", len(kernel) == 2**m, f"{len(kernel)} elements")
    if m == 1:
        elems = {g.entries[0][0] for g in res.elements}
        rep.check("closure of {j} is {+-1, +-j}, cyclic of order 4", elems == {ONE, -ONE, J, -J} and J**4 == ONE and J**2 != ONE)
    if m >= 2:
        swap = gens[0]
        rep.check(
            "swap diag(1, j) swap = diag(j, 1)",
            swap * QuatMatrix.diag([ONE, J] + [ONE] * (m - 2)) * swap == QuatMatrix.diag([J, ONE] + [ONE] * (m - 2)),
        )
    return res, rep.finish()


NON_MONOMIAL_CORPUS = (
    ((1, 1), (0, 1)),
    ((1, J), (0, 1)),
    ((1, 1), (1, -1)),
    ((1, I), (J, 1)),
)


def monomial_normalizer_check(m: int = 2, trials: int = 200, seed: int = 0) -> SuiteReport:
    if not 1 <= m <= 3:
        raise ValueError("m must be in 1..3")
    rng = random.Random(seed)
    rep = SuiteReport("quat-normalizer", None, m)
    monomials = []
    for perm in itertools.permutations(range(m)):
        for _ in range(3):
            P = QuatMatrix.permutation(perm)
            D = QuatMatrix.diag([_nonzero_quaternion(rng) for _ in range(m)])
            monomials.append(D * P)
    bad = 0
    for _ in range(trials):
        M = rng.choice(monomials)
        D = QuatMatrix.diag([random_quaternion(rng) for _ in range(m)])
        if not (M * D * M.inverse()).is_diagonal():
            bad += 1
    rep.check("monomial M: M D M^{-1} is diagonal", bad == 0, f"{trials} random diagonals, {bad} failures")
    if m >= 2:
        probes = [QuatMatrix.diag([I] + [ONE] * (m - 1)), QuatMatrix.diag([J] + [ONE] * (m - 1)), QuatMatrix.diag([2] + [ONE] * (m - 1))]
        missing = []
        for rows in NON_MONOMIAL_CORPUS:
            M = _pad(rows, m)
            if not any(not (M * D * M.inverse()).is_diagonal() for D in probes):
                missing.append(repr(M))
        rep.check("non-monomial M: some diagonal D has M D M^{-1} non-diagonal", not missing, "; ".join(missing))
    return rep.finish()


def _nonzero_quaternion(rng: random.Random) -> Quaternion:
    while True:
        q = random_quaternion(rng, 5, 3)
        if not q.is_zero():
            return q


def _pad(rows, m: int) -> QuatMatrix:
    full = [[0] * m for _ in range(m)]
    for i in range(m):
        full[i][i] = ONE
    for i in range(2):
        for j in range(2):
            full[i][j] = rows[i][j]
    return QuatMatrix(full)


def verify_quat_suite(m: int = 2, random_trials: int = 500, seed: int = 0) -> SuiteReport:
    """Covering-map facts, the j-witness, hat-embedding checks and the W(C_m) closure."""
    rep = SuiteReport("quat", "C", m)
    rep.check("j^2 = -1", J * J == -ONE)
    rep.check("i j = k", I * J == K)
    Rj = su2_to_so3(J)
    rep.check("su2_to_so3(j) = diag(-1, 1, -1)", Rj == ExactMatrix.diag([-1, 1, -1]))
    rep.check("so3_lift(diag(-1, 1, -1)) = +-j", so3_lift(Rj) in (J, -J))
    rep.check("so3_lift(diag(-1, -1, 1)) = +-k", so3_lift(ExactMatrix.diag([-1, -1, 1])) in (K, -K))
    rng = random.Random(seed)
    units = [ONE, I, J, K, Quaternion(1, 2, 2, 4) / 5, Quaternion(0, 3, 4, 0) / 5, Quaternion(2, 1, 2, 4) / 5]
    rep.check(
        "su2_to_so3(-q) = su2_to_so3(q) and so3_lift inverts it up to sign",
        all(su2_to_so3(-q) == su2_to_so3(q) and so3_lift(su2_to_so3(q)) in (q, -q) for q in units),
        f"{len(units)} unit quaternions",
    )
    rep.check(
        "su2_to_so3 is multiplicative",
        all(su2_to_so3(p * q) == su2_to_so3(p) * su2_to_so3(q) for p in units for q in units),
    )
    pairs = [(random_quaternion(rng), random_quaternion(rng)) for _ in range(random_trials)]
    rep.check("Nm is multiplicative", all((a * b).norm() == a.norm() * b.norm() for a, b in pairs))
    rep.check("hat is multiplicative", all(hat_embedding(a * b) == hat_embedding(a) * hat_embedding(b) for a, b in pairs[:100]))
    rep.check("det hat(q) = Nm(q)", all(hat_embedding(a).det() == a.norm() for a, _ in pairs))
    rep.extend(quat_conj_complex_check())
    _, closure_rep = quat_weyl_closure(m)
    rep.extend(closure_rep)
    rep.extend(monomial_normalizer_check(m, trials=100, seed=seed))
    return rep.finish()
