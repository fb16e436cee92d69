"""Root data of the classical types, Weyl group enumeration as signed
permutations, and the expression of B/C/D simple reflections as words in
type-A reflections.

Type A uses the (l+1)-dimensional GL coordinates.  Types B, C, D use the
folded coordinates eps^G_1..eps^G_l, treated as an orthonormal basis of Q^l.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from weylift.closure import bfs_closure

__all__ = [
    "RootDatum",
    "SignedPerm",
    "build_root_datum",
    "generate_root_system",
    "reflect",
    "fundamental_group",
    "weyl_enumerate",
    "embed_in_type_A",
    "folded_basis",
    "apply_type_A_word",
    "MIN_RANK",
]

Vec = tuple[Fraction, ...]
MIN_RANK = {"A": 1, "B": 1, "C": 1, "D": 2}
WEYL_CAP = 1_000_000


def _check(type_label: str, rank: int) -> None:
    if type_label not in MIN_RANK:
        raise ValueError(f"unknown type {type_label!r}; expected one of A, B, C, D")
    if not isinstance(rank, int) or rank < MIN_RANK[type_label]:
        raise ValueError(f"type {type_label} needs rank >= {MIN_RANK[type_label]}, got {rank}")


def _vec(m: int, entries: dict[int, Fraction]) -> Vec:
    """Vector in Q^m from a {1-based index: value} map."""
    out = [Fraction(0)] * m
    for k, v in entries.items():
        out[k - 1] += Fraction(v)
    return tuple(out)


def _dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _tail(m: int, k: int, scale=1) -> Vec:
    """scale * (eps_k + ... + eps_m)."""
    return _vec(m, {j: scale for j in range(k, m + 1)})


@dataclass(frozen=True)
class RootDatum:
    type_label: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[Vec, ...]
    simple_coroots: tuple[Vec, ...]
    fundamental_weights: tuple[Vec, ...]
    fundamental_coweights: tuple[Vec, ...]
    cartan: tuple[tuple[int, ...], ...]
    inverse_cartan: tuple[tuple[Fraction, ...], ...]

    def pairing(self, weight: Sequence, coweight: Sequence) -> Fraction:
        return _dot(weight, coweight)

    def to_json(self) -> dict:
        def vs(vectors):
            return [[_fs(x) for x in v] for v in vectors]

        return {
            "type": self.type_label,
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "simple_roots": vs(self.simple_roots),
            "simple_coroots": vs(self.simple_coroots),
            "fundamental_weights": vs(self.fundamental_weights),
            "fundamental_coweights": vs(self.fundamental_coweights),
            "cartan": [list(r) for r in self.cartan],
            "inverse_cartan": vs(self.inverse_cartan),
        }


def _fs(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _inverse(A: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(A)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                fac = aug[r][c]
                aug[r] = [x - fac * y for x, y in zip(aug[r], aug[c])]
    return tuple(tuple(r[n:]) for r in aug)


def build_root_datum(type_label: str, rank: int) -> RootDatum:
    _check(type_label, rank)
    ell = rank
    if type_label == "A":
        m = ell + 1
        roots = [_vec(m, {k: 1, k + 1: -1}) for k in range(1, ell + 1)]
        coroots = list(roots)
        weights = [_vec(m, {j: 1 for j in range(1, k + 1)}) for k in range(1, ell + 1)]
        coweights = list(weights)
    else:
        m = ell
        chain = [_vec(m, {k: 1, k - 1: -1}) for k in range(2, ell + 1)]
        if type_label == "B":
            roots = [_vec(m, {1: 1})] + chain
            coroots = [_vec(m, {1: 2})] + chain
            weights = [_tail(m, 1, Fraction(1, 2))] + [_tail(m, k) for k in range(2, ell + 1)]
            coweights = [_tail(m, 1)] + [_tail(m, k) for k in range(2, ell + 1)]
        elif type_label == "C":
            roots = [_vec(m, {1: 2})] + chain
            coroots = [_vec(m, {1: 1})] + chain
            weights = [_tail(m, 1)] + [_tail(m, k) for k in range(2, ell + 1)]
            coweights = [_tail(m, 1, Fraction(1, 2))] + [_tail(m, k) for k in range(2, ell + 1)]
        else:
            roots = [_vec(m, {1: 1, 2: 1})] + chain
            coroots = list(roots)
            half = Fraction(1, 2)
            w2 = _vec(m, {j: half for j in range(2, ell + 1)} | {1: -half})
            weights = [_tail(m, 1, half), w2] + [_tail(m, k) for k in range(3, ell + 1)]
            coweights = list(weights)
    cartan = tuple(tuple(int(_dot(roots[j], coroots[i])) for j in range(ell)) for i in range(ell))
    return RootDatum(
        type_label=type_label,
        rank=ell,
        ambient_dim=m,
        simple_roots=tuple(roots),
        simple_coroots=tuple(coroots),
        fundamental_weights=tuple(weights),
        fundamental_coweights=tuple(coweights),
        cartan=cartan,
        inverse_cartan=_inverse(cartan),
    )


def reflect(datum: RootDatum, i: int, lam: Sequence) -> Vec:
    """s_i(lam) = lam - <lam, alpha_i^vee> alpha_i, with i 1-based."""
    if not 1 <= i <= datum.rank:
        raise ValueError(f"simple index {i} out of range 1..{datum.rank}")
    if len(lam) != datum.ambient_dim:
        raise ValueError(f"vector of length {len(lam)} in ambient dimension {datum.ambient_dim}")
    alpha = datum.simple_roots[i - 1]
    c = _dot(lam, datum.simple_coroots[i - 1])
    return tuple(Fraction(x) - c * a for x, a in zip(lam, alpha))


def generate_root_system(datum: RootDatum) -> list[Vec]:
    """All roots, as the orbit of the simple roots under simple reflections (sorted)."""
    seen = set(datum.simple_roots)
    todo = list(datum.simple_roots)
    while todo:
        v = todo.pop()
        for i in range(1, datum.rank + 1):
            w = reflect(datum, i, v)
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return sorted(seen)


def fundamental_group(type_label: str, rank: int) -> list[int]:
    """Invariant factors (> 1) of the Cartan matrix: Lambda_W / Lambda_R."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import invariant_factors

    datum = build_root_datum(type_label, rank)
    factors = invariant_factors(Matrix(datum.cartan), domain=ZZ)
    return [abs(int(f)) for f in factors if abs(int(f)) != 1]


@dataclass(frozen=True, order=True)
class SignedPerm:
    """Signed permutation: basis vector e_i goes to signs[i] * e_{perm[i]} (0-based).

    ``a * b`` is composition of maps, b applied first.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @classmethod
    def identity(cls, m: int) -> "SignedPerm":
        return cls(tuple(range(m)), (1,) * m)

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(len(self.perm)))
        return SignedPerm(perm, signs)

    def apply(self, v: Sequence) -> tuple:
        out = [0] * len(v)
        for i, x in enumerate(v):
            out[self.perm[i]] = self.signs[i] * x
        return tuple(out)

    def negative_count(self) -> int:
        return sum(1 for s in self.signs if s < 0)


def _reflection_as_signed_perm(datum: RootDatum, i: int) -> SignedPerm:
    m = datum.ambient_dim
    perm, signs = [], []
    for k in range(m):
        e = tuple(Fraction(int(j == k)) for j in range(m))
        img = reflect(datum, i, e)
        nz = [j for j, x in enumerate(img) if x != 0]
        if len(nz) != 1 or abs(img[nz[0]]) != 1:
            raise AssertionError("simple reflection is not a signed permutation")
        perm.append(nz[0])
        signs.append(int(img[nz[0]]))
    return SignedPerm(tuple(perm), tuple(signs))


def simple_reflections(type_label: str, rank: int) -> list[SignedPerm]:
    datum = build_root_datum(type_label, rank)
    return [_reflection_as_signed_perm(datum, i) for i in range(1, rank + 1)]


def weyl_enumerate(type_label: str, rank: int, cap: int = WEYL_CAP) -> list[SignedPerm]:
    """Every Weyl group element as a signed permutation of the ambient basis, sorted."""
    gens = simple_reflections(type_label, rank)
    m = len(gens[0].perm)
    res = bfs_closure(gens, SignedPerm.identity(m), key=lambda w: w, cap=cap)
    return res.elements


def embed_in_type_A(type_label: str, rank: int, k: int, outer: bool = False) -> list[int]:
    """Word in type-A simple reflections (1-based indices) realizing s^G_k.

    The ambient type-A group is A_{2l} for B and A_{2l-1} for C and D.
    With ``outer=True`` (type D only) returns the outer generator s^A_l.
    """
    if type_label == "A":
        raise ValueError("type A needs no embedding")
    _check(type_label, rank)
    ell = rank
    if outer:
        if type_label != "D":
            raise ValueError("the outer generator is only defined for type D")
        return [ell]
    if not 1 <= k <= ell:
        raise ValueError(f"simple index {k} out of range 1..{ell}")
    if type_label == "B":
        return [ell, ell + 1, ell] if k == 1 else [ell + 1 - k, ell + k]
    if type_label == "C":
        return [ell] if k == 1 else [ell + 1 - k, ell - 1 + k]
    return [ell, ell - 1, ell + 1, ell] if k == 1 else [ell + 1 - k, ell - 1 + k]


def folded_basis(type_label: str, rank: int) -> list[tuple[int, ...]]:
    """eps^G_k as integer vectors in the ambient type-A coordinates."""
    ell = rank
    if type_label == "B":
        n = 2 * ell + 1
        pairs = [(ell + 1 - k, ell + 1 + k) for k in range(1, ell + 1)]
    elif type_label in ("C", "D"):
        n = 2 * ell
        pairs = [(ell + 1 - k, ell + k) for k in range(1, ell + 1)]
    else:
        raise ValueError("folded basis exists for types B, C, D")
    out = []
    for a, b in pairs:
        v = [0] * n
        v[a - 1] = 1
        v[b - 1] = -1
        out.append(tuple(v))
    return out


def apply_type_A_word(word: Sequence[int], v: Sequence) -> tuple:
    """Apply s_{w1} s_{w2} ... s_{wr} (rightmost first) to a coordinate vector."""
    v = list(v)
    for i in reversed(word):
        v[i - 1], v[i] = v[i], v[i - 1]
    return tuple(v)
