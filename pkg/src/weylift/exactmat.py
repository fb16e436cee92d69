"""Exact square matrices over Q(zeta_N), antidiagonal transpose, the
involutions theta_B/theta_C/theta_D and monomial decomposition.

A matrix shares one conductor and one denominator across all entries;
the numerators are a flat integer tuple so that products can be handed
to the compiled kernel unchanged.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from weylift import _backend, _kernels_py
from weylift.closure import DEFAULT_CAP, ClosureResult, bfs_closure
from weylift.scalars import CycScalar, _normalize, field

__all__ = [
    "ExactMatrix",
    "SingularMatrixError",
    "NotMonomialError",
    "ThetaInvolution",
    "antidiag_transpose",
    "theta",
    "group_closure",
    "monomial_decompose",
    "monomial_compose",
    "exact_rank",
]


class SingularMatrixError(ValueError):
    pass


class NotMonomialError(ValueError):
    pass


@lru_cache(maxsize=None)
def _red_table(N: int) -> tuple[int, ...]:
    f = field(N)
    out: list[int] = []
    for k in range(f.d, 2 * f.d - 1):
        out.extend(f.powers[k % N])
    return tuple(out)


def _int_matmul(n: int, N: int, a: tuple, b: tuple, ma: int, mb: int) -> tuple:
    f = field(N)
    d = f.d
    bound = n * d * ma * mb * (1 + (d - 1) * f.max_red)
    if bound < _backend.INT64_SAFE:
        return _backend.matmul(n, d, a, b, _red_table(N))
    return _kernels_py.matmul(n, d, a, b, _red_table(N))


class ExactMatrix:
    """Immutable n x n matrix over Q(zeta_N).  Indices are 0-based."""

    __slots__ = ("n", "N", "d", "nums", "den", "_maxabs", "_hash")

    def __init__(self, n: int, N: int, nums: Iterable[int], den: int = 1, *, _normalized: bool = False):
        d = field(N).d
        nums = tuple(nums)
        if len(nums) != n * n * d:
            raise ValueError("numerator vector has the wrong length")
        if not _normalized:
            nums, den = _normalize(nums, den)
        self.n = n
        self.N = N
        self.d = d
        self.nums = nums
        self.den = den
        self._maxabs = None
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], N: int | None = None) -> "ExactMatrix":
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        # zeros are skipped so sparse (monomial, permutation) inputs stay cheap
        entries = {}
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                if isinstance(x, int) and x == 0:
                    continue
                x = CycScalar.coerce(x)
                if not x.is_zero():
                    entries[i * n + j] = x
        N = N or 1
        for x in entries.values():
            N = math.lcm(N, x.N)
        entries = {k: x.lift(N) for k, x in entries.items()}
        den = 1
        for x in entries.values():
            den = den * x.den // math.gcd(den, x.den)
        d = field(N).d
        nums = [0] * (n * n * d)
        for k, x in entries.items():
            s = den // x.den
            nums[k * d:(k + 1) * d] = [c * s for c in x.nums]
        return cls(n, N, nums, den)

    @classmethod
    def identity(cls, n: int, N: int = 1) -> "ExactMatrix":
        d = field(N).d
        nums = [0] * (n * n * d)
        for i in range(n):
            nums[(i * n + i) * d] = 1
        return cls(n, N, nums, 1, _normalized=True)

    @classmethod
    def zero(cls, n: int, N: int = 1) -> "ExactMatrix":
        return cls(n, N, [0] * (n * n * field(N).d), 1, _normalized=True)

    @classmethod
    def diag(cls, values: Sequence) -> "ExactMatrix":
        n = len(values)
        rows = [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return cls.from_rows(rows)

    @classmethod
    def elementary(cls, n: int, i: int, j: int, N: int = 1) -> "ExactMatrix":
        """Matrix unit e_{ij} with 1-based indices."""
        d = field(N).d
        nums = [0] * (n * n * d)
        nums[((i - 1) * n + (j - 1)) * d] = 1
        return cls(n, N, nums, 1, _normalized=True)

    @classmethod
    def permutation(cls, images: Sequence[int], N: int = 1) -> "ExactMatrix":
        """Permutation matrix sending basis vector e_j to e_{images[j]} (0-based)."""
        n = len(images)
        d = field(N).d
        nums = [0] * (n * n * d)
        for j, i in enumerate(images):
            nums[(i * n + j) * d] = 1
        return cls(n, N, nums, 1, _normalized=True)

    @classmethod
    def scalar(cls, n: int, c) -> "ExactMatrix":
        c = CycScalar.coerce(c)
        return cls.identity(n, c.N) * c

    # -- access -----------------------------------------------------------
    def __getitem__(self, ij) -> CycScalar:
        i, j = ij
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(ij)
        base = (i * self.n + j) * self.d
        return CycScalar(self.N, self.nums[base:base + self.d], self.den)

    def rows(self) -> list[list[CycScalar]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def _entry_nonzero(self, i: int, j: int) -> bool:
        base = (i * self.n + j) * self.d
        return any(self.nums[base:base + self.d])

    @property
    def maxabs(self) -> int:
        if self._maxabs is None:
            self._maxabs = max((abs(x) for x in self.nums), default=0)
        return self._maxabs

    def key(self):
        return (self.n, self.N, self.den, self.nums)

    def lift(self, N: int) -> "ExactMatrix":
        if N == self.N:
            return self
        if N % self.N:
            raise ValueError(f"conductor {self.N} does not divide {N}")
        f = field(N)
        images = f.lift_map(self.N)
        out = [0] * (self.n * self.n * f.d)
        for e in range(self.n * self.n):
            src = self.nums[e * self.d:(e + 1) * self.d]
            for c, img in zip(src, images):
                if c:
                    for j in range(f.d):
                        out[e * f.d + j] += c * img[j]
        return ExactMatrix(self.n, N, out, self.den, _normalized=True)

    def _common(self, other: "ExactMatrix"):
        if self.n != other.n:
            raise ValueError(f"dimension mismatch {self.n} vs {other.n}")
        if self.N == other.N:
            return self, other
        N = math.lcm(self.N, other.N)
        return self.lift(N), other.lift(N)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        a, b = self._common(other)
        nums = [x * b.den + y * a.den for x, y in zip(a.nums, b.nums)]
        return ExactMatrix(a.n, a.N, nums, a.den * b.den)

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        a, b = self._common(other)
        nums = [x * b.den - y * a.den for x, y in zip(a.nums, b.nums)]
        return ExactMatrix(a.n, a.N, nums, a.den * b.den)

    def __neg__(self):
        return ExactMatrix(self.n, self.N, [-x for x in self.nums], self.den, _normalized=True)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            a, b = self._common(other)
            prod = _int_matmul(a.n, a.N, a.nums, b.nums, a.maxabs, b.maxabs)
            den = a.den * b.den
            if den == 1:
                return ExactMatrix(a.n, a.N, prod, 1, _normalized=True)
            return ExactMatrix(a.n, a.N, prod, den)
        try:
            c = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._scale(c)

    __matmul__ = __mul__

    def __rmul__(self, other):
        try:
            c = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._scale(c)

    def _scale(self, c: CycScalar) -> "ExactMatrix":
        N = math.lcm(self.N, c.N)
        m = self.lift(N)
        c = c.lift(N)
        f = field(N)
        d = f.d
        out = [0] * len(m.nums)
        for e in range(m.n * m.n):
            src = m.nums[e * d:(e + 1) * d]
            if not any(src):
                continue
            if d == 1:
                out[e] = src[0] * c.nums[0]
                continue
            acc = [0] * (2 * d - 1)
            for p, x in enumerate(src):
                if x:
                    for q, y in enumerate(c.nums):
                        if y:
                            acc[p + q] += x * y
            out[e * d:(e + 1) * d] = f.reduce_long(acc)
        return ExactMatrix(m.n, N, out, m.den * c.den)

    def __truediv__(self, other):
        return self._scale(CycScalar.coerce(other).inverse())

    def __pow__(self, k: int) -> "ExactMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = ExactMatrix.identity(self.n, self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.n != other.n:
            return False
        a, b = self._common(other)
        return a.den == b.den and a.nums == b.nums

    def __hash__(self):
        # entrywise hashes are conductor independent, matching __eq__
        if self._hash is None:
            self._hash = hash((self.n, tuple(hash(x) for r in self.rows() for x in r)))
        return self._hash

    def __repr__(self):
        return f"ExactMatrix({self.to_str()})"

    # -- structure --------------------------------------------------------
    def _permute_entries(self, src_of) -> "ExactMatrix":
        n, d = self.n, self.d
        out = [0] * len(self.nums)
        for i in range(n):
            for j in range(n):
                si, sj = src_of(i, j)
                b = (si * n + sj) * d
                out[(i * n + j) * d:(i * n + j + 1) * d] = self.nums[b:b + d]
        return ExactMatrix(n, self.N, out, self.den, _normalized=True)

    def transpose(self) -> "ExactMatrix":
        return self._permute_entries(lambda i, j: (j, i))

    def antidiag_transpose(self) -> "ExactMatrix":
        n = self.n
        return self._permute_entries(lambda i, j: (n - 1 - j, n - 1 - i))

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_identity(self) -> bool:
        return self == ExactMatrix.identity(self.n, self.N)

    def is_diagonal(self) -> bool:
        return all(not self._entry_nonzero(i, j) for i in range(self.n) for j in range(self.n) if i != j)

    def is_scalar(self) -> bool:
        return self.is_diagonal() and all(self[i, i] == self[0, 0] for i in range(self.n))

    def is_monomial(self) -> bool:
        try:
            monomial_decompose(self)
        except NotMonomialError:
            return False
        return True

    def diagonal(self) -> list[CycScalar]:
        return [self[i, i] for i in range(self.n)]

    def trace(self) -> CycScalar:
        total = CycScalar.rational(0, self.N)
        for i in range(self.n):
            total = total + self[i, i]
        return total

    def inverse(self) -> "ExactMatrix":
        try:
            perm, diag = monomial_decompose(self)
        except NotMonomialError:
            return self._inverse_gauss()
        # (D P)^-1 = P^-1 D^-1
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for i, j in enumerate(perm):
            rows[j][i] = diag[i].inverse()
        return ExactMatrix.from_rows(rows, self.N)

    def _inverse_gauss(self) -> "ExactMatrix":
        n = self.n
        zero = CycScalar.rational(0, self.N)
        one = CycScalar.rational(1, self.N)
        aug = [r + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows())]
        for c in range(n):
            piv = next((r for r in range(c, n) if not aug[r][c].is_zero()), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = aug[c][c].inverse()
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and not aug[r][c].is_zero():
                    fac = aug[r][c]
                    aug[r] = [x - fac * y for x, y in zip(aug[r], aug[c])]
        return ExactMatrix.from_rows([r[n:] for r in aug], self.N)

    def det(self) -> CycScalar:
        try:
            perm, diag = monomial_decompose(self)
        except NotMonomialError:
            pass
        else:
            sign = _perm_sign(perm)
            out = CycScalar.rational(sign, self.N)
            for x in diag:
                out = out * x
            return out
        n = self.n
        m = self.rows()
        det = CycScalar.rational(1, self.N)
        for c in range(n):
            piv = next((r for r in range(c, n) if not m[r][c].is_zero()), None)
            if piv is None:
                return CycScalar.rational(0, self.N)
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            det = det * m[c][c]
            inv = m[c][c].inverse()
            for r in range(c + 1, n):
                if not m[r][c].is_zero():
                    fac = m[r][c] * inv
                    m[r] = [x - fac * y for x, y in zip(m[r], m[c])]
        return det

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {"n": self.n, "conductor": self.N, "rows": [[x.to_json() for x in r] for r in self.rows()]}

    def to_str(self) -> str:
        def fmt(x: CycScalar) -> str:
            if x.is_rational():
                return str(x.to_fraction())
            return repr(x)[len("CycScalar("):-1]

        return "[" + "; ".join(", ".join(fmt(x) for x in r) for r in self.rows()) + "]"


def bracket(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a * b - b * a


def _perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def antidiag_transpose(g: ExactMatrix) -> ExactMatrix:
    """(g^tau)_{ij} = g_{n+1-j, n+1-i}: reflection in the opposite diagonal."""
    return g.antidiag_transpose()


def monomial_decompose(g: ExactMatrix) -> tuple[tuple[int, ...], tuple[CycScalar, ...]]:
    """Split a monomial matrix as g = D * P.

    Returns (cols, diag) where row i of g has its single nonzero entry
    diag[i] in column cols[i]; P is the 0/1 matrix with ones at (i, cols[i]).
    """
    n = g.n
    cols = []
    for i in range(n):
        nz = [j for j in range(n) if g._entry_nonzero(i, j)]
        if len(nz) != 1:
            raise NotMonomialError(f"row {i} has {len(nz)} nonzero entries")
        cols.append(nz[0])
    if len(set(cols)) != n:
        raise NotMonomialError("two rows share a nonzero column")
    return tuple(cols), tuple(g[i, cols[i]] for i in range(n))


def monomial_compose(cols: Sequence[int], diag: Sequence) -> ExactMatrix:
    n = len(cols)
    rows = [[0] * n for _ in range(n)]
    for i, j in enumerate(cols):
        rows[i][j] = diag[i]
    return ExactMatrix.from_rows(rows)


_THETA_TYPES = ("B", "C", "D")


class ThetaInvolution:
    """theta_G(g) = S_G (g^tau)^{-1} S_G^{-1} on GL_n, for G of type B, C or D."""

    def __init__(self, type_label: str, rank: int):
        if type_label not in _THETA_TYPES:
            raise ValueError(f"theta is defined for types B, C, D, not {type_label!r}")
        if rank < 1:
            raise ValueError("rank must be positive")
        self.type_label = type_label
        self.rank = rank
        ell = rank
        if type_label == "B":
            self.n = 2 * ell + 1
            signs = [(-1) ** k for k in range(self.n)]
        else:
            self.n = 2 * ell
            signs = [(-1) ** k for k in range(self.n)]
            if type_label == "D":
                signs = [s if k < ell else -s for k, s in enumerate(signs)]
        self.signs = tuple(signs)
        self.S = ExactMatrix.diag(signs)
        self.S_inv = self.S  # entries are +-1

    def __call__(self, g: ExactMatrix) -> ExactMatrix:
        return theta(self, g)

    def on_lie_algebra(self, X: ExactMatrix) -> ExactMatrix:
        """Differential of theta: X -> -S X^tau S^{-1}."""
        return -(self.S * X.antidiag_transpose() * self.S_inv)

    def is_fixed(self, g: ExactMatrix) -> bool:
        return self(g) == g


def theta(inv: ThetaInvolution, g: ExactMatrix) -> ExactMatrix:
    if g.n != inv.n:
        raise ValueError(f"theta_{inv.type_label} acts on {inv.n}x{inv.n} matrices, got {g.n}")
    return inv.S * g.antidiag_transpose().inverse() * inv.S_inv


def group_closure(
    gens: Sequence[ExactMatrix], cap: int = DEFAULT_CAP, track_words: bool = False
) -> ClosureResult:
    """All products of the generators, sorted by canonical encoding."""
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    N = 1
    for g in gens:
        if g.n != n:
            raise ValueError("generators must share a dimension")
        N = math.lcm(N, g.N)
    gens = [g.lift(N) for g in gens]
    return bfs_closure(gens, ExactMatrix.identity(n, N), ExactMatrix.key, cap=cap, track_words=track_words)


def exact_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rectangular matrix with rational or cyclotomic entries."""
    m = [[CycScalar.coerce(x) for x in r] for r in rows]
    if not m:
        return 0
    if all(x.N == 1 for r in m for x in r):
        return _rank_rational([[x.to_fraction() for x in r] for r in m])
    rank = 0
    ncols = len(m[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if not m[r][c].is_zero()), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][c].inverse()
        for r in range(len(m)):
            if r != rank and not m[r][c].is_zero():
                fac = m[r][c] * inv
                m[r] = [x - fac * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def _rank_rational(m: list[list[Fraction]]) -> int:
    rank = 0
    ncols = len(m[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][c]
        for r in range(rank + 1, len(m)):
            if m[r][c] != 0:
                fac = m[r][c] / pv
                m[r] = [x - fac * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank
