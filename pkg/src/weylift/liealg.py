"""Chevalley generators of the classical Lie algebras in their standard
faithful representations, Serre-type relation checks, the closed-form
exponential exp((pi/2) J_i), theta-fixed subalgebra dimensions, and the
adjoint action of the Weyl lifts on e_j, f_j.

Conventions: h_i = [e_i, f_i], a_ij = <alpha_j, alpha_i^vee>, so that
[h_i, e_j] = a_ij e_j.  Every f_i is the transpose of e_i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from weylift.exactmat import ExactMatrix, ThetaInvolution, bracket, exact_rank
from weylift.report import SuiteReport
from weylift.rootdata import MIN_RANK, build_root_datum, generate_root_system
from weylift.scalars import imag_unit, sqrt2

__all__ = [
    "ChevalleySet",
    "RepresentationError",
    "chevalley_generators",
    "verify_serre",
    "exp_quarter_J",
    "theta_fixed_dimension",
    "verify_adjoint_suite",
    "adjoint_table",
    "ad_power",
    "appendix_form_S_D",
]


class RepresentationError(ArithmeticError):
    """A faithful-representation matrix violates a structural identity."""


@dataclass(frozen=True)
class ChevalleySet:
    type_label: str
    rank: int
    n: int
    e: tuple[ExactMatrix, ...]
    f: tuple[ExactMatrix, ...]
    h: tuple[ExactMatrix, ...]
    coweights: tuple[ExactMatrix, ...]
    cartan: tuple[tuple[int, ...], ...]

    @property
    def J(self) -> tuple[ExactMatrix, ...]:
        return tuple(f - e for e, f in zip(self.e, self.f))

    @property
    def P(self) -> tuple[ExactMatrix, ...]:
        i = imag_unit()
        return tuple((e + f) * i for e, f in zip(self.e, self.f))

    @property
    def H(self) -> tuple[ExactMatrix, ...]:
        i = imag_unit()
        return tuple(h * i for h in self.h)


def _unit(n: int, i: int, j: int) -> ExactMatrix:
    return ExactMatrix.elementary(n, i, j)


@lru_cache(maxsize=None)
def chevalley_generators(type_label: str, rank: int) -> ChevalleySet:
    if type_label not in MIN_RANK or rank < MIN_RANK[type_label]:
        raise ValueError(f"invalid type/rank {type_label}{rank}")
    ell = rank
    E = _unit
    if type_label == "A":
        n = ell + 1
        e = [E(n, i, i + 1) for i in range(1, ell + 1)]
    elif type_label == "B":
        n = 2 * ell + 1
        e = [(E(n, ell, ell + 1) + E(n, ell + 1, ell + 2)) * sqrt2()]
        e += [E(n, ell + 1 - k, ell + 2 - k) + E(n, ell + k, ell + 1 + k) for k in range(2, ell + 1)]
    elif type_label == "C":
        n = 2 * ell
        e = [E(n, ell, ell + 1)]
        e += [E(n, ell + 1 - k, ell + 2 - k) + E(n, ell + k - 1, ell + k) for k in range(2, ell + 1)]
    else:
        n = 2 * ell
        e = [E(n, ell - 1, ell + 1) + E(n, ell, ell + 2)]
        e += [E(n, ell + 1 - k, ell + 2 - k) + E(n, ell + k - 1, ell + k) for k in range(2, ell + 1)]
    f = [x.transpose() for x in e]
    h = [bracket(x, y) for x, y in zip(e, f)]
    datum = build_root_datum(type_label, ell)
    Cinv = datum.inverse_cartan
    coweights = []
    for i in range(ell):
        acc = ExactMatrix.zero(n)
        for j in range(ell):
            if Cinv[i][j]:
                acc = acc + h[j] * Cinv[i][j]
        coweights.append(acc)
    return ChevalleySet(type_label, ell, n, tuple(e), tuple(f), tuple(h), tuple(coweights), datum.cartan)


def ad_power(x: ExactMatrix, y: ExactMatrix, k: int) -> ExactMatrix:
    """ad_x^k (y)."""
    for _ in range(k):
        y = bracket(x, y)
    return y


def _family(rep: SuiteReport, name: str, cases) -> bool:
    bad, count = [], 0
    for label, lhs, rhs in cases:
        count += 1
        if lhs != rhs:
            bad.append(label)
    return rep.check(name, not bad, f"{count} cases" if not bad else "fails at " + ", ".join(bad))


def _root_weights(ch: ChevalleySet) -> tuple[list[tuple[int, ...]], bool]:
    """Weights (eigenvalues of ad h_i) of the root vectors reachable from e's and f's.

    Returns the sorted weights and whether each weight space met is one-dimensional.
    """
    found: dict[tuple[int, ...], ExactMatrix] = {}
    simple = True
    for gens in (ch.e, ch.f):
        todo = list(gens)
        while todo:
            X = todo.pop()
            if X.is_zero():
                continue
            w = []
            for hi in ch.h:
                Y = bracket(hi, X)
                # X is a single matrix-unit combination; read the eigenvalue off one entry
                idx = next(k for k in range(X.n * X.n) if X[divmod(k, X.n)] != 0)
                c = Y[divmod(idx, X.n)] / X[divmod(idx, X.n)]
                if Y != X * c:
                    simple = False
                w.append(int(c.to_fraction()))
            w = tuple(w)
            if w in found:
                if exact_rank([_flat(found[w]), _flat(X)]) != 1:
                    simple = False
                continue
            found[w] = X
            todo.extend(bracket(g, X) for g in gens)
    return sorted(found), simple


def _flat(X: ExactMatrix) -> list:
    return [x for r in X.rows() for x in r]


def verify_serre(type_label: str, rank: int) -> SuiteReport:
    ch = chevalley_generators(type_label, rank)
    ell, A = ch.rank, ch.cartan
    e, f, h, cw = ch.e, ch.f, ch.h, ch.coweights
    rep = SuiteReport("lie", type_label, ell)
    rng = range(ell)
    Z = ExactMatrix.zero(ch.n)
    _family(rep, "[h_i, h_j] = 0", ((f"{i + 1},{j + 1}", bracket(h[i], h[j]), Z) for i in rng for j in rng if i < j))
    _family(rep, "[e_i, f_i] = h_i", ((f"i={i + 1}", bracket(e[i], f[i]), h[i]) for i in rng))
    _family(
        rep,
        "[e_i, f_j] = 0 for i != j",
        ((f"{i + 1},{j + 1}", bracket(e[i], f[j]), Z) for i in rng for j in rng if i != j),
    )
    _family(
        rep,
        "[h_i, e_j] = a_ij e_j",
        ((f"{i + 1},{j + 1}", bracket(h[i], e[j]), e[j] * A[i][j]) for i in rng for j in rng),
    )
    _family(
        rep,
        "[h_i, f_j] = -a_ij f_j",
        ((f"{i + 1},{j + 1}", bracket(h[i], f[j]), f[j] * -A[i][j]) for i in rng for j in rng),
    )
    off = [(i, j) for i in rng for j in rng if i != j]
    _family(rep, "ad_{e_i}^{1-a_ij}(e_j) = 0", ((f"{i + 1},{j + 1}", ad_power(e[i], e[j], 1 - A[i][j]), Z) for i, j in off))
    _family(rep, "ad_{f_i}^{1-a_ij}(f_j) = 0", ((f"{i + 1},{j + 1}", ad_power(f[i], f[j], 1 - A[i][j]), Z) for i, j in off))
    _family(
        rep,
        "[coweight_i, e_j] = delta_ij e_j",
        ((f"{i + 1},{j + 1}", bracket(cw[i], e[j]), e[j] if i == j else Z) for i in rng for j in rng),
    )
    ii = imag_unit()
    J, P = ch.J, ch.P
    icw = [c * ii for c in cw]
    _family(
        rep,
        "[J_k, i coweight_j] = delta_kj P_k",
        ((f"{k + 1},{j + 1}", bracket(J[k], icw[j]), P[k] if k == j else Z) for k in rng for j in rng),
    )
    _family(
        rep,
        "[i coweight_j, P_k] = delta_kj J_k",
        ((f"{k + 1},{j + 1}", bracket(icw[j], P[k]), J[k] if k == j else Z) for k in rng for j in rng),
    )

    def rhs(k):
        acc = Z
        for i in rng:
            if A[k][i]:
                acc = acc + icw[i] * (2 * A[k][i])
        return acc

    _family(rep, "[P_k, J_k] = 2 sum_i a_ki (i coweight_i)", ((f"k={k + 1}", bracket(P[k], J[k]), rhs(k)) for k in rng))

    datum = build_root_datum(type_label, ell)
    expected = sorted(
        tuple(int(datum.pairing(a, datum.simple_coroots[i])) for i in rng) for a in generate_root_system(datum)
    )
    got, simple = _root_weights(ch)
    rep.check(
        "root-space weights = roots, multiplicity one",
        got == expected and simple,
        f"{len(got)} weights, {len(expected)} roots",
    )
    if type_label != "A":
        th = ThetaInvolution(type_label, ell)
        _family(
            rep,
            f"e_i, f_i are theta_{type_label}-fixed",
            ((f"{w}_{i + 1}", th.on_lie_algebra(X[i]), X[i]) for w, X in (("e", e), ("f", f)) for i in rng),
        )
    return rep.finish()


def exp_quarter_J(type_label: str, rank: int, i: int) -> ExactMatrix:
    """exp((pi/2) J_i) for J_i = f_i - e_i, computed in closed form.

    Requires J^3 = -m^2 J for a positive integer m (m = 1 except for the
    sqrt(2)-scaled B generator, where m = 2).  Then
    exp(tJ) = Id + (sin(mt)/m) J + ((1 - cos(mt))/m^2) J^2, evaluated at t = pi/2.
    """
    ch = chevalley_generators(type_label, rank)
    if not 1 <= i <= ch.rank:
        raise ValueError(f"index {i} out of range 1..{ch.rank}")
    J = ch.J[i - 1]
    J2 = J * J
    J3 = J2 * J
    m2 = _cubic_ratio(J, J3)
    m = math.isqrt(m2)
    if m * m != m2 or m == 0:
        raise RepresentationError(f"J_{i}^3 = -c J_{i} with c = {m2}, not a positive square")
    sin_ = (0, 1, 0, -1)[m % 4]
    cos_ = (1, 0, -1, 0)[m % 4]
    I = ExactMatrix.identity(ch.n)
    return I + J * Fraction(sin_, m) + J2 * Fraction(1 - cos_, m2)


def _cubic_ratio(J: ExactMatrix, J3: ExactMatrix) -> int:
    """c with J^3 = -c J; raises RepresentationError if there is none."""
    idx = next((k for k in range(J.n * J.n) if J[divmod(k, J.n)] != 0), None)
    if idx is None:
        raise RepresentationError("J is zero")
    c = -(J3[divmod(idx, J.n)] / J[divmod(idx, J.n)])
    if not c.is_rational() or J3 != J * (-c):
        raise RepresentationError("J^3 is not a rational multiple of J")
    q = c.to_fraction()
    if q.denominator != 1:
        raise RepresentationError(f"J^3 = -({q}) J with non-integer ratio")
    return int(q)


def theta_fixed_dimension(type_label: str, rank: int, S_G: ExactMatrix | None = None) -> int:
    """Dimension of {X : X = -S_G X^tau S_G^{-1}} inside gl_n.

    ``S_G`` overrides the diagonal form used by theta (must be diagonal with +-1 entries).
    """
    th = ThetaInvolution(type_label, rank)
    n = th.n
    signs = th.signs if S_G is None else tuple(int(x.to_fraction()) for x in S_G.diagonal())
    # X_{ij} maps to -s_i s_j X_{n-1-j, n-1-i}: a signed permutation of matrix units
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            row[i * n + j] += 1
            row[(n - 1 - j) * n + (n - 1 - i)] += signs[i] * signs[j]
            rows.append(row)
    # fixed space = kernel of (Id - L); row (i,j) above is the coordinate of X - L(X)
    return n * n - exact_rank(rows)


def appendix_form_S_D(rank: int) -> ExactMatrix:
    """diag(1, -1, ..., (-1)^{l-1}; (-1)^{l-1}, ..., 1)."""
    ell = rank
    return ExactMatrix.diag([(-1) ** k for k in range(ell)] + [(-1) ** (ell - 1 - k) for k in range(ell)])


# ---------------------------------------------------------------------------
# adjoint action


def _iota_D(i: int) -> int:
    """Fork swap 1 <-> 2 on 0-based indices."""
    return {0: 1, 1: 0}.get(i, i)


def adjoint_table(type_label: str, rank: int, i: int, j: int, which: str) -> ExactMatrix:
    """Predicted Ad_{S^G_i}(e_j) (which="e") or Ad_{S^G_i}(f_j) (which="f"), 0-based i, j.

    For type A, S_i is the GL permutation generator.
    """
    ch = chevalley_generators(type_label, rank)
    A = ch.cartan
    e, f = ch.e, ch.f
    X = e if which == "e" else f
    a = A[i][j]
    ca = abs(a)
    d = i - j
    if i == j:
        sign = -1 if (type_label == "C" and i == 0) else 1
        return (f[j] if which == "e" else e[j]) * sign
    if type_label == "D":
        if a == 0:
            return X[j] * (-1 if _iota_D(i) == j else 1)
        if which == "e":
            return ad_power(e[i], e[j], 1) * (-1 if i < j else 1)
        return ad_power(f[i], f[j], 1) * (1 if i < j else -1)
    if abs(d) > 1 or a == 0:
        return X[j]
    fac = Fraction(1, math.factorial(ca))
    if type_label == "A":
        if which == "e":
            return ad_power(e[i], e[j], 1) * (1 if d == -1 else -1)
        return ad_power(f[i], f[j], 1) * (-1 if d == -1 else 1)
    if type_label == "B":
        if which == "e":
            if d == -1:
                return ad_power(e[i], e[j], ca) * (-((-1) ** (i == 0)) * fac)
            return ad_power(e[i], e[j], 1)
        if d == -1:
            return ad_power(f[i], f[j], ca) * fac
        return -ad_power(f[i], f[j], 1)
    # type C
    if which == "e":
        if d == -1:
            return -ad_power(e[i], e[j], 1)
        return ad_power(e[i], e[j], ca) * fac
    if d == -1:
        return ad_power(f[i], f[j], ca)
    return ad_power(f[i], f[j], ca) * ((-1) ** ca * fac)


def _printed_sdot_action(ch: ChevalleySet, i: int, j: int, which: str) -> ExactMatrix:
    """ṡ_i e_j ṡ_i^{-1} / ṡ_i f_j ṡ_i^{-1} as printed for the Tits generators."""
    e, f = ch.e, ch.f
    a = ch.cartan[i][j]
    ca = abs(a)
    if i == j:
        return -(f[j] if which == "e" else e[j])
    if a == 0:
        return e[j] if which == "e" else f[j]
    fac = Fraction(1, math.factorial(ca))
    if which == "e":
        return ad_power(e[i], e[j], ca) * fac
    return ad_power(f[i], f[j], ca) * ((-1) ** ca * fac)


def _sdot_action_corrected(ch: ChevalleySet, i: int, j: int, which: str) -> ExactMatrix:
    """Same with the sign (-1)^{|a_ij|} moved from the f-line to the e-line."""
    e, f = ch.e, ch.f
    a = ch.cartan[i][j]
    ca = abs(a)
    if i == j or a == 0:
        return _printed_sdot_action(ch, i, j, which)
    fac = Fraction(1, math.factorial(ca))
    if which == "e":
        return ad_power(e[i], e[j], ca) * ((-1) ** ca * fac)
    return ad_power(f[i], f[j], ca) * fac


def _lift_matrices(type_label: str, rank: int) -> tuple[list[ExactMatrix], list[ExactMatrix]]:
    from weylift.lifts import classical_generators, gl_generators

    if type_label == "A":
        g = gl_generators(rank + 1)
        return list(g.S), list(g.sdot)
    lift = classical_generators(type_label, rank)
    return list(lift.Sg), list(lift.sdotg)


def verify_adjoint_suite(type_label: str, rank: int) -> SuiteReport:
    """Compare exact conjugation with the adjoint-action tables.

    A table entry that disagrees with the conjugation is recorded with status
    pass and a detail starting with "erratum:" that shows both matrices; the
    conjugation itself is authoritative.
    """
    ch = chevalley_generators(type_label, rank)
    ell = ch.rank
    S, sdot = _lift_matrices(type_label, ell)
    rep = SuiteReport("adjoint", type_label, ell)
    t = type_label

    errata = []
    count = 0
    for i in range(ell):
        Si = S[i].inverse()
        for j in range(ell):
            for which, X in (("e", ch.e), ("f", ch.f)):
                got = S[i] * X[j] * Si
                want = adjoint_table(t, ell, i, j, which)
                count += 1
                if got != want:
                    errata.append(
                        f"Ad_S{i + 1}({which}_{j + 1}): table {want.to_str()} vs conjugation {got.to_str()}"
                    )
    rep.check(
        f"Ad_{{S^{t}_i}} on e_j, f_j matches table",
        True,
        f"{count} cells agree" if not errata else "erratum: " + "; ".join(errata),
    )

    printed_bad, corrected_bad, count = [], [], 0
    for i in range(ell):
        si = sdot[i].inverse()
        for j in range(ell):
            for which, X in (("e", ch.e), ("f", ch.f)):
                got = sdot[i] * X[j] * si
                count += 1
                pred = _printed_sdot_action(ch, i, j, which)
                if got != pred:
                    printed_bad.append(f"sdot{i + 1} {which}_{j + 1}: printed {pred.to_str()} vs conjugation {got.to_str()}")
                if got != _sdot_action_corrected(ch, i, j, which):
                    corrected_bad.append(f"{i + 1},{j + 1},{which}")
    detail = f"{count} cells agree"
    if printed_bad:
        detail = (
            "erratum: for odd |a_ij| the sign (-1)^{|a_ij|} belongs on the e-line, not the f-line; "
            + "; ".join(printed_bad)
        )
    rep.check("Ad_{sdot_i} on e_j, f_j matches the Tits-generator formulas", not corrected_bad, detail)

    Z = ExactMatrix.zero(ch.n)
    _family(
        rep,
        "Ad_{sdot_i}(coweight_j) = s_i(coweight_j)",
        (
            (f"{i + 1},{j + 1}", sdot[i] * ch.coweights[j] * sdot[i].inverse(), ch.coweights[j] - (ch.h[i] if i == j else Z))
            for i in range(ell)
            for j in range(ell)
        ),
    )
    _family(
        rep,
        "exp((pi/2) J_i) = sdot_i",
        ((f"i={i + 1}", exp_quarter_J(t, ell, i + 1), sdot[i]) for i in range(ell)),
    )
    if t != "A":
        th = ThetaInvolution(t, ell)
        cases = []
        for i in range(ell):
            Si = S[i].inverse()
            for j in range(ell):
                for w, X in (("e", ch.e), ("f", ch.f)):
                    Y = S[i] * X[j] * Si
                    cases.append((f"S{i + 1} {w}_{j + 1}", th.on_lie_algebra(Y), Y))
        _family(rep, f"Ad_{{S^{t}_i}} preserves the theta_{t}-fixed subalgebra", cases)
    return rep.finish()
