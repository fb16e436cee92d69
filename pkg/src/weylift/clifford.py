"""Exact Clifford algebra of a Euclidean space with orthonormal basis
eps_1..eps_n (eps_i^2 = +1), the twisted-conjugation action on V, and the
Pin/Spin lifts of the B and D Weyl groups.

Basis monomials are stored as bitmasks (bit k-1 for eps_k) with
coefficients in Q(zeta_8), which contains 1/sqrt(2).
"""

from __future__ import annotations

import math

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from weylift.closure import DEFAULT_CAP, ClosureResult, bfs_closure
from weylift.exactmat import ExactMatrix
from weylift.report import SuiteReport
from weylift.rootdata import build_root_datum
from weylift.scalars import CycScalar, sqrt2

__all__ = [
    "CliffordElement",
    "CliffordError",
    "clifford_product",
    "structure_maps",
    "pin_action_matrix",
    "pin_generators",
    "verify_pin_gl_relations",
    "pin_weyl_lift",
    "spin_lift_B",
    "clifford_closure",
    "MAX_DIM",
]

COND = 8
MAX_DIM = 11


class CliffordError(ValueError):
    """Element outside the Clifford group, or incompatible dimensions."""


def _blade_sign(a: int, b: int) -> int:
    """Sign of e_A e_B after sorting into ascending order (e_i^2 = 1)."""
    swaps = 0
    a >>= 1
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


# Q(zeta_8) has degree 4 and zeta_8^4 = -1, so coefficient products are negacyclic.
_D = 4


def _negacyclic(x, y) -> list[int]:
    out = [0] * _D
    for p, u in enumerate(x):
        if u:
            for q, v in enumerate(y):
                if v:
                    k = p + q
                    if k < _D:
                        out[k] += u * v
                    else:
                        out[k - _D] -= u * v
    return out


def _scalar(x) -> CycScalar:
    return CycScalar.coerce(x).lift(COND)


class CliffordElement:
    """Sparse element sum_A c_A e_A of C(V), dim V = n."""

    __slots__ = ("n", "terms", "_key")

    def __init__(self, n: int, terms: Mapping[int, object] | None = None):
        if not 1 <= n <= MAX_DIM:
            raise CliffordError(f"dimension {n} outside 1..{MAX_DIM}")
        self.n = n
        clean = {}
        for mask, c in (terms or {}).items():
            if mask >> n:
                raise CliffordError(f"monomial {mask:b} uses an index above {n}")
            c = _scalar(c)
            if not c.is_zero():
                clean[mask] = c
        self.terms = clean
        self._key = None

    # constructors
    @classmethod
    def scalar(cls, n: int, c=1) -> "CliffordElement":
        return cls(n, {0: c})

    @classmethod
    def basis(cls, n: int, k: int) -> "CliffordElement":
        """eps_k, 1-based."""
        if not 1 <= k <= n:
            raise CliffordError(f"basis index {k} out of range 1..{n}")
        return cls(n, {1 << (k - 1): 1})

    @classmethod
    def monomial(cls, n: int, indices: Iterable[int], c=1) -> "CliffordElement":
        """c * eps_{i1} eps_{i2} ... in the given order."""
        out = cls.scalar(n, c)
        for k in indices:
            out = out * cls.basis(n, k)
        return out

    @classmethod
    def vector(cls, coords: Iterable) -> "CliffordElement":
        coords = list(coords)
        return cls(len(coords), {1 << k: c for k, c in enumerate(coords)})

    # algebra
    def _same(self, other: "CliffordElement") -> None:
        if not isinstance(other, CliffordElement) or other.n != self.n:
            raise CliffordError("Clifford elements of different dimensions")

    def __add__(self, other):
        if not isinstance(other, CliffordElement):
            other = CliffordElement.scalar(self.n, other)
        self._same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return CliffordElement(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CliffordElement):
            c = _scalar(other)
            return CliffordElement(self.n, {m: x * c for m, x in self.terms.items()})
        self._same(other)
        da, ta = self._int_terms()
        db, tb = other._int_terms()
        acc: dict[int, list[int]] = {}
        for a, xa in ta.items():
            for b, xb in tb.items():
                prod = _negacyclic(xa, xb)
                m = a ^ b
                if _blade_sign(a, b) < 0:
                    prod = [-v for v in prod]
                cur = acc.get(m)
                if cur is None:
                    acc[m] = prod
                else:
                    for k in range(_D):
                        cur[k] += prod[k]
        den = da * db
        out = {}
        for m, nums in acc.items():
            if any(nums):
                out[m] = CycScalar(COND, nums, den)
        return CliffordElement._from_clean(self.n, out)

    def _int_terms(self) -> tuple[int, dict[int, tuple[int, ...]]]:
        """Coefficients rescaled to integer numerators over one shared denominator."""
        den = 1
        for c in self.terms.values():
            den = den * c.den // math.gcd(den, c.den)
        return den, {m: tuple(x * (den // c.den) for x in c.nums) for m, c in self.terms.items()}

    @classmethod
    def _from_clean(cls, n: int, terms: dict) -> "CliffordElement":
        out = cls.__new__(cls)
        out.n = n
        out.terms = terms
        out._key = None
        return out

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CliffordElement.scalar(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, CliffordElement):
            return self.n == other.n and self.terms == other.terms
        try:
            return self == CliffordElement.scalar(self.n, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def key(self):
        if self._key is None:
            self._key = tuple(sorted((m, c.nums, c.den) for m, c in self.terms.items()))
        return self._key

    def to_json(self) -> dict:
        """Blade coefficients keyed by 1-based index strings such as "1,3"; "" is the scalar part."""
        return {
            "n": self.n,
            "terms": {",".join(str(k + 1) for k in range(self.n) if m >> k & 1): c.to_json() for m, c in sorted(self.terms.items())},
        }

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda x: (bin(x).count("1"), x)):
            c = self.terms[m]
            c_s = str(c.to_fraction()) if c.is_rational() else "(" + repr(c)[len("CycScalar("):-1] + ")"
            idx = [str(k + 1) for k in range(self.n) if m >> k & 1]
            parts.append(c_s + ("*e" + "e".join(idx) if idx else ""))
        return " + ".join(parts)

    # structure
    def is_scalar(self) -> bool:
        return all(m == 0 for m in self.terms)

    def scalar_part(self) -> CycScalar:
        return self.terms.get(0, _scalar(0))

    def grades(self) -> set[int]:
        return {bin(m).count("1") for m in self.terms}

    def is_even(self) -> bool:
        return all(g % 2 == 0 for g in self.grades())

    def vector_part(self) -> list[CycScalar]:
        return [self.terms.get(1 << k, _scalar(0)) for k in range(self.n)]

    def alpha(self) -> "CliffordElement":
        return CliffordElement(self.n, {m: (-c if bin(m).count("1") & 1 else c) for m, c in self.terms.items()})

    def transpose(self) -> "CliffordElement":
        def sgn(m):
            k = bin(m).count("1")
            return -1 if (k * (k - 1) // 2) & 1 else 1

        return CliffordElement(self.n, {m: c * sgn(m) for m, c in self.terms.items()})

    def bar(self) -> "CliffordElement":
        return self.transpose().alpha()

    def norm(self) -> CycScalar:
        """Nm(x) = x * bar(x); raises CliffordError when that is not a scalar."""
        p = self * self.bar()
        if not p.is_scalar():
            raise CliffordError("x * bar(x) is not scalar: element is outside the Clifford group")
        return p.scalar_part()

    def inverse(self) -> "CliffordElement":
        c = self.norm()
        if c.is_zero():
            raise CliffordError("element has zero norm")
        return self.bar() * c.inverse()


def clifford_product(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    if x.n != y.n:
        raise CliffordError(f"dimension mismatch {x.n} vs {y.n}")
    return x * y


def structure_maps(x: CliffordElement) -> dict:
    """alpha, transpose, bar and the norm (or the error message when undefined)."""
    out = {"alpha": x.alpha(), "transpose": x.transpose(), "bar": x.bar()}
    try:
        out["norm"] = x.norm()
    except CliffordError as exc:
        out["norm"] = exc
    return out


def pin_action_matrix(x: CliffordElement) -> ExactMatrix:
    """Matrix of v -> x v alpha(x)^{-1} on V in the eps basis (column k = image of eps_k)."""
    n = x.n
    ainv = x.alpha().inverse()
    cols = []
    for k in range(1, n + 1):
        img = x * CliffordElement.basis(n, k) * ainv
        if any(bin(m).count("1") != 1 for m in img.terms):
            raise CliffordError("twisted conjugation does not preserve V")
        cols.append(img.vector_part())
    M = ExactMatrix.from_rows([[cols[j][i] for j in range(n)] for i in range(n)])
    if M.transpose() * M != ExactMatrix.identity(n):
        raise CliffordError("action matrix is not orthogonal")
    return M


@lru_cache(maxsize=None)
def pin_generators(n: int) -> dict[str, list[CliffordElement]]:
    """T_k = eps_k (k = 1..n) and S_i = (eps_i - eps_{i+1})/sqrt(2) (i = 1..n-1)."""
    if n < 2:
        raise ValueError("need n >= 2")
    inv_r2 = sqrt2() / 2
    T = [CliffordElement.basis(n, k) for k in range(1, n + 1)]
    S = [(T[i] - T[i + 1]) * inv_r2 for i in range(n - 1)]
    return {"T": T, "S": S}


def _family(rep: SuiteReport, name: str, cases) -> bool:
    bad, count = [], 0
    for label, lhs, rhs in cases:
        count += 1
        if lhs != rhs:
            bad.append(label)
    return rep.check(name, not bad, f"{count} cases" if not bad else "fails at " + ", ".join(bad))


def _alt(x, y, m):
    out = x
    for k in range(1, m):
        out = out * (y if k % 2 else x)
    return out


def verify_pin_gl_relations(n: int) -> SuiteReport:
    g = pin_generators(n)
    T, S = g["T"], g["S"]
    one = CliffordElement.scalar(n)
    rep = SuiteReport("pin-gl", "A", n - 1)
    _family(rep, "T_k^2 = 1", ((f"k={k + 1}", t * t, one) for k, t in enumerate(T)))
    _family(rep, "S_i^2 = 1", ((f"i={i + 1}", s * s, one) for i, s in enumerate(S)))
    _family(
        rep,
        "T_i T_j = -T_j T_i for i != j",
        ((f"{i + 1},{j + 1}", T[i] * T[j], -(T[j] * T[i])) for i in range(n) for j in range(i + 1, n)),
    )
    m = n - 1
    _family(
        rep,
        "S_i S_j = -S_j S_i for |i-j|>1",
        ((f"{i + 1},{j + 1}", S[i] * S[j], -(S[j] * S[i])) for i in range(m) for j in range(i + 2, m)),
    )
    _family(
        rep,
        "S_i S_j S_i = S_j S_i S_j for |i-j|=1",
        ((f"{i + 1},{i + 2}", _alt(S[i], S[i + 1], 3), _alt(S[i + 1], S[i], 3)) for i in range(m - 1)),
    )
    _family(rep, "T_i S_i = -S_i T_{i+1}", ((f"i={i + 1}", T[i] * S[i], -(S[i] * T[i + 1])) for i in range(m)))
    inv_r2 = sqrt2() / 2
    if m >= 2:
        e1, e2, e3 = T[0], T[1], T[2]
        rep.check(
            "S_1 S_2 expansion",
            S[0] * S[1] == (e1 * e2 - e1 * e3 + e2 * e3 - 1) * Fraction(1, 2),
        )
    _family(
        rep,
        "action of T_k and S_i on V is T_k and S_i",
        [(f"T{k + 1}", pin_action_matrix(T[k]), _gl_T(n, k + 1)) for k in range(n)]
        + [(f"S{i + 1}", pin_action_matrix(S[i]), _gl_S(n, i + 1)) for i in range(m)],
    )
    _family(
        rep,
        "Nm(T_k) = Nm(S_i) = -1",
        [(f"T{k + 1}", t.norm(), _scalar(-1)) for k, t in enumerate(T)]
        + [(f"S{i + 1}", s.norm(), _scalar(-1)) for i, s in enumerate(S)],
    )
    del inv_r2
    return rep.finish()


def _gl_T(n, k):
    from weylift.lifts import gl_generators

    return gl_generators(n).t(k)


def _gl_S(n, i):
    from weylift.lifts import gl_generators

    return gl_generators(n).s(i)


def _weyl_lift_elements(type_label: str, rank: int) -> list[CliffordElement]:
    ell = rank
    if type_label == "B":
        n = 2 * ell + 1
    elif type_label == "D":
        n = 2 * ell
        if ell < 2:
            raise ValueError("type D needs rank >= 2")
    else:
        raise ValueError("Pin lifts are defined for types B and D")
    if n > MAX_DIM:
        raise ValueError(f"ambient dimension {n} exceeds the Clifford cap {MAX_DIM}")
    g = pin_generators(n)
    T = lambda k: g["T"][k - 1]  # noqa: E731
    S = lambda i: g["S"][i - 1]  # noqa: E731
    if type_label == "B":
        out = [S(ell) * S(ell + 1) * S(ell)]
        out += [S(ell + 1 - k) * T(ell + k) * S(ell + k) * T(ell + k) for k in range(2, ell + 1)]
    else:
        out = [S(ell) * S(ell - 1) * T(ell + 1) * S(ell + 1) * T(ell + 1) * S(ell)]
        out += [S(ell + 1 - k) * T(ell - 1 + k) * S(ell - 1 + k) * T(ell - 1 + k) for k in range(2, ell + 1)]
    return out


def clifford_closure(gens: list[CliffordElement], cap: int = DEFAULT_CAP, track_words: bool = False) -> ClosureResult:
    n = gens[0].n
    return bfs_closure(gens, CliffordElement.scalar(n), CliffordElement.key, cap=cap, track_words=track_words)


def _coxeter(A, i, j) -> int:
    return {0: 2, 1: 3, 2: 4, 3: 6}[A[i][j] * A[j][i]]


def _observed_signs(gens: list[CliffordElement], A) -> tuple[dict, bool]:
    """For each pair i<j, the sign s with (x y x ...) = s (y x y ...), m_ij factors each side."""
    out, ok = {}, True
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            m = _coxeter(A, i, j)
            lhs, rhs = _alt(gens[i], gens[j], m), _alt(gens[j], gens[i], m)
            if lhs == rhs:
                out[(i + 1, j + 1)] = 1
            elif lhs == -rhs:
                out[(i + 1, j + 1)] = -1
            else:
                out[(i + 1, j + 1)] = 0
                ok = False
    return out, ok


def _sign_detail(signs: dict) -> str:
    return ", ".join(f"({i},{j}): {'+' if s > 0 else '-' if s < 0 else '?'}" for (i, j), s in sorted(signs.items()))


def _common_pin_checks(rep: SuiteReport, t: str, ell: int, gens: list[CliffordElement], closure_max_rank: int) -> None:
    from weylift.lifts import classical_generators, weyl_order

    n = gens[0].n
    one = CliffordElement.scalar(n)
    A = build_root_datum(t, ell).cartan
    signs, ok = _observed_signs(gens, A)
    rep.check("anti-braid sign: every braid relation holds up to a central sign", ok, _sign_detail(signs))
    lift = classical_generators(t, ell)
    _family(
        rep,
        f"pin action of the lift = S^{t}_i",
        ((f"i={i + 1}", pin_action_matrix(x), lift.Sg[i]) for i, x in enumerate(gens)),
    )
    _family(
        rep,
        "Nm in {+1, -1}",
        ((f"i={i + 1}", one if x.norm() in (_scalar(1), _scalar(-1)) else -one, one) for i, x in enumerate(gens)),
    )
    if ell == 1:
        res = clifford_closure(gens)
        rep.check(
            "|closure| at rank 1",
            res.order == weyl_order(t, ell),
            f"order {res.order}: (S^B_1)^2 = 1 and -1 is not reached",
        )
    elif ell <= closure_max_rank:
        res = clifford_closure(gens)
        expect = 2 * weyl_order(t, ell)
        rep.check(f"|closure| = 2 |W({t}_l)|", res.order == expect, f"order {res.order}, expected {expect}")
        memo: dict = {}

        def act(x):
            k = x.key()
            if k not in memo:
                memo[k] = pin_action_matrix(x)
            return memo[k]

        kernel = [x for x in res.elements if act(x).is_identity()]
        rep.check(
            "kernel of the action on the closure is {+1, -1}",
            len(kernel) == 2 and set(map(CliffordElement.key, kernel)) == {one.key(), (-one).key()},
            f"{len(kernel)} kernel elements",
        )
        # homomorphism on products of closure elements with generators
        bad = 0
        for x in res.elements[:64]:
            for g in gens:
                if act(x * g) != act(x) * act(g):
                    bad += 1
        rep.check("pin action is multiplicative", bad == 0, f"{bad} failures")


def pin_weyl_lift(type_label: str, rank: int, closure_max_rank: int = 3) -> tuple[list[CliffordElement], SuiteReport]:
    """Pin lifts of the B or D simple reflections with their printed relation suite."""
    t, ell = type_label, rank
    gens = _weyl_lift_elements(t, ell)
    n = gens[0].n
    one = CliffordElement.scalar(n)
    A = build_root_datum(t, ell).cartan
    rep = SuiteReport("pin", t, ell)
    pairs = [(i, j) for i in range(ell) for j in range(i + 1, ell)]
    S = gens
    if t == "B":
        rep.check("(S^B_1)^2 = 1", S[0] * S[0] == one)
        _family(rep, "(S^B_k)^2 = -1 for k > 1", ((f"k={k + 1}", S[k] * S[k], -one) for k in range(1, ell)))
        _family(
            rep,
            "S^B_i S^B_j = S^B_j S^B_i for a_ij = 0",
            ((f"{i + 1},{j + 1}", S[i] * S[j], S[j] * S[i]) for i, j in pairs if A[i][j] == 0),
        )
        _family(
            rep,
            "S^B_i S^B_j S^B_i = S^B_j S^B_i S^B_j for a_ij a_ji = 1",
            ((f"{i + 1},{j + 1}", _alt(S[i], S[j], 3), _alt(S[j], S[i], 3)) for i, j in pairs if A[i][j] * A[j][i] == 1),
        )
        _family(
            rep,
            "S^B_i S^B_j S^B_i S^B_j = S^B_j S^B_i S^B_j S^B_i for a_ij a_ji = 2",
            ((f"{i + 1},{j + 1}", _alt(S[i], S[j], 4), _alt(S[j], S[i], 4)) for i, j in pairs if A[i][j] * A[j][i] == 2),
        )
        e = pin_generators(n)["T"]
        u = (e[ell - 1] - e[ell + 1]) * (sqrt2() / 2)
        if S[0] == u:
            detail = "S^B_1 = (eps_l - eps_{l+2})/sqrt(2)"
        elif S[0] == -u:
            detail = "erratum: S^B_1 = -(eps_l - eps_{l+2})/sqrt(2); the printed form omits the sign"
        else:
            detail = f"S^B_1 = {S[0]!r}"
        rep.check("S^B_1 = +-(eps_l - eps_{l+2})/sqrt(2)", S[0] in (u, -u), detail)
    else:
        _family(rep, "(S^D_i)^2 = -1", ((f"i={i + 1}", S[i] * S[i], -one) for i in range(ell)))
        rep.check("S^D_1 S^D_2 = -S^D_2 S^D_1", S[0] * S[1] == -(S[1] * S[0]))
        if ell >= 3:
            rep.check("S^D_1 S^D_3 S^D_1 = -S^D_3 S^D_1 S^D_3", _alt(S[0], S[2], 3) == -_alt(S[2], S[0], 3))
        _family(
            rep,
            "S^D_i S^D_j = S^D_j S^D_i for a_ij = 0, (i,j) != (1,2)",
            ((f"{i + 1},{j + 1}", S[i] * S[j], S[j] * S[i]) for i, j in pairs if A[i][j] == 0 and (i, j) != (0, 1)),
        )
        _family(
            rep,
            "S^D_i S^D_j S^D_i = S^D_j S^D_i S^D_j for a_ij a_ji = 1, (i,j) != (1,3)",
            (
                (f"{i + 1},{j + 1}", _alt(S[i], S[j], 3), _alt(S[j], S[i], 3))
                for i, j in pairs
                if A[i][j] * A[j][i] == 1 and (i, j) != (0, 2)
            ),
        )
        e = pin_generators(n)["T"]
        E = lambda k: e[k - 1]  # noqa: E731
        expect = (
            E(ell - 1) * E(ell) + E(ell - 1) * E(ell + 2) + E(ell) * E(ell + 1) - E(ell + 1) * E(ell + 2)
        ) * Fraction(1, 2)
        rep.check("S^D_1 expansion in eps monomials", S[0] == expect)
    _common_pin_checks(rep, t, ell, gens, closure_max_rank)
    return gens, rep.finish()


def spin_lift_B(rank: int, closure_max_rank: int = 3) -> tuple[list[CliffordElement], SuiteReport]:
    """Stilde_1 = z S^B_1 with z = eps_1 ... eps_{2l+1}; Stilde_k = S^B_k."""
    ell = rank
    pin = _weyl_lift_elements("B", ell)
    n = pin[0].n
    one = CliffordElement.scalar(n)
    z = CliffordElement.monomial(n, range(1, n + 1))
    gens = [z * pin[0]] + pin[1:]
    A = build_root_datum("B", ell).cartan
    rep = SuiteReport("spin", "B", ell)
    rep.check("z^2 = (-1)^l", z * z == one * (-1) ** ell)
    _family(rep, "z commutes with S^B_i", ((f"i={i + 1}", z * x, x * z) for i, x in enumerate(pin)))
    _family(rep, "Stilde^B_i has even grade", ((f"i={i + 1}", one if x.is_even() else -one, one) for i, x in enumerate(gens)))
    rep.check("(Stilde^B_1)^2 = (-1)^l", gens[0] * gens[0] == one * (-1) ** ell)
    _family(rep, "(Stilde^B_k)^2 = -1 for k > 1", ((f"k={k + 1}", gens[k] * gens[k], -one) for k in range(1, ell)))
    pairs = [(i, j) for i in range(ell) for j in range(i + 1, ell)]
    S = gens
    _family(
        rep,
        "Stilde^B_i Stilde^B_j = Stilde^B_j Stilde^B_i for a_ij = 0",
        ((f"{i + 1},{j + 1}", S[i] * S[j], S[j] * S[i]) for i, j in pairs if A[i][j] == 0),
    )
    _family(
        rep,
        "Stilde^B_i Stilde^B_j Stilde^B_i = Stilde^B_j Stilde^B_i Stilde^B_j for a_ij = -1",
        ((f"{i + 1},{j + 1}", _alt(S[i], S[j], 3), _alt(S[j], S[i], 3)) for i, j in pairs if A[i][j] * A[j][i] == 1),
    )
    if ell >= 2:
        rep.check(
            "Stilde^B_1 Stilde^B_2 Stilde^B_1 Stilde^B_2 = Stilde^B_2 Stilde^B_1 Stilde^B_2 Stilde^B_1",
            _alt(S[0], S[1], 4) == _alt(S[1], S[0], 4),
        )
    from weylift.lifts import so_odd_lift, weyl_order

    so = so_odd_lift(ell, closure_max_rank=0).generators
    _family(rep, "spin action of Stilde^B_i = sigma_i", ((f"i={i + 1}", pin_action_matrix(x), so[i]) for i, x in enumerate(gens)))
    signs, ok = _observed_signs(gens, A)
    rep.check("anti-braid sign: every braid relation holds up to a central sign", ok, _sign_detail(signs))
    if ell <= closure_max_rank:
        res = clifford_closure(gens)
        expect = 2 * weyl_order("B", ell)
        rep.check("|closure| = 2 |W(B_l)|", res.order == expect, f"order {res.order}, expected {expect}")
        rep.check("closure lies in the even subalgebra", all(x.is_even() for x in res.elements))
    return gens, rep.finish()
