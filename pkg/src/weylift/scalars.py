"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as integer numerators over a single positive
denominator, in the power basis 1, z, ..., z^(d-1) with d = phi(N).
Everything is kept reduced modulo the N-th cyclotomic polynomial so that
equality at a fixed conductor is plain tuple equality.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "CycScalar",
    "FieldError",
    "cyclotomic_polynomial",
    "scalar_arith",
    "to_complex",
    "zeta",
    "imag_unit",
    "sqrt2",
    "context_conductor",
]


class FieldError(ZeroDivisionError):
    """Raised on division by zero in the cyclotomic field."""


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # both low-degree-first, den monic
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for j, dc in enumerate(den):
                num[k + j] -= c * dc
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_N, lowest degree first.

    Computed as (x^N - 1) divided by Phi_d for every proper divisor d of N.
    """
    if N < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _totient(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


class _Field:
    """Per-conductor tables shared by all elements of Q(zeta_N)."""

    __slots__ = ("N", "d", "powers", "trace_weights", "max_red")

    def __init__(self, N: int):
        phi = cyclotomic_polynomial(N)
        d = len(phi) - 1
        self.N = N
        self.d = d
        # powers[k] = coefficients of z^k reduced, for 0 <= k < N
        powers = []
        cur = [1] + [0] * (d - 1)
        for _ in range(N):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(d):
                    cur[j] -= top * phi[j]
        self.powers = tuple(powers)
        self.max_red = max(max(abs(c) for c in p) for p in powers)
        # Tr(z^k)/phi(N) only depends on the subfield; used for hashing
        weights = []
        for k in range(d):
            m = N // math.gcd(N, k)
            weights.append(Fraction(_mobius(m), _totient(m)))
        self.trace_weights = tuple(weights)

    def reduce_long(self, acc: list[int]) -> list[int]:
        d = self.d
        out = acc[:d] + [0] * (d - len(acc[:d]))
        for k in range(d, len(acc)):
            c = acc[k]
            if c:
                row = self.powers[k % self.N]
                for j in range(d):
                    out[j] += c * row[j]
        return out

    def lift_map(self, M: int) -> tuple[tuple[int, ...], ...]:
        """Images of z_M^k (k < phi(M)) expressed in Q(zeta_N), N a multiple of M."""
        step = self.N // M
        dm = _totient(M)
        return tuple(self.powers[(k * step) % self.N] for k in range(dm))


@lru_cache(maxsize=None)
def field(N: int) -> _Field:
    return _Field(N)


def _normalize(nums, den: int):
    if den < 0:
        nums = [-x for x in nums]
        den = -den
    g = den
    for x in nums:
        if g == 1:
            break
        if x:
            g = math.gcd(g, x)
    if g != 1:
        nums = [x // g for x in nums]
        den //= g
    if not any(nums):
        den = 1
    return tuple(nums), den


class CycScalar:
    """Element of Q(zeta_N) with exact rational coefficients."""

    __slots__ = ("N", "nums", "den", "_hash")

    def __init__(self, N: int, nums, den: int = 1, *, _normalized: bool = False):
        f = field(N)
        nums = tuple(int(x) for x in nums)
        if len(nums) != f.d:
            raise ValueError(f"expected {f.d} coefficients for conductor {N}, got {len(nums)}")
        if den == 0:
            raise FieldError("zero denominator")
        if not _normalized:
            nums, den = _normalize(nums, den)
        self.N = N
        self.nums = nums
        self.den = den
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def rational(cls, q, N: int = 1) -> "CycScalar":
        q = Fraction(q)
        d = field(N).d
        return cls(N, (q.numerator,) + (0,) * (d - 1), q.denominator)

    @classmethod
    def from_coeffs(cls, N: int, coeffs) -> "CycScalar":
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return cls(N, [int(c * den) for c in fr], den)

    @classmethod
    def coerce(cls, x, N: int = 1) -> "CycScalar":
        if isinstance(x, CycScalar):
            return x
        if isinstance(x, (int, Rational)):
            return cls.rational(x, N)
        raise TypeError(f"cannot coerce {type(x).__name__} to CycScalar")

    # -- structure --------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    def lift(self, N: int) -> "CycScalar":
        if N == self.N:
            return self
        if N % self.N:
            raise ValueError(f"conductor {self.N} does not divide {N}")
        f = field(N)
        images = f.lift_map(self.N)
        out = [0] * f.d
        for c, img in zip(self.nums, images):
            if c:
                for j in range(f.d):
                    out[j] += c * img[j]
        return CycScalar(N, out, self.den, _normalized=True)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.nums[0], self.den)

    def conj(self) -> "CycScalar":
        f = field(self.N)
        out = [0] * f.d
        for k, c in enumerate(self.nums):
            if c:
                row = f.powers[(-k) % self.N]
                for j in range(f.d):
                    out[j] += c * row[j]
        return CycScalar(self.N, out, self.den, _normalized=True)

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise FieldError("division by zero in cyclotomic field")
        f = field(self.N)
        d = f.d
        if self.is_rational():
            return CycScalar.rational(Fraction(self.den, self.nums[0]), self.N)
        # roots of unity and other elements of rational absolute value
        c = self.conj()
        p = self * c
        if p.is_rational():
            return c * CycScalar.rational(1 / p.to_fraction(), self.N)
        # columns of the multiplication-by-self operator, then solve M x = e_0
        cols = []
        for k in range(d):
            acc = [0] * (d + k)
            for j, c in enumerate(self.nums):
                acc[j + k] = c
            cols.append(f.reduce_long(acc))
        rows = [[Fraction(cols[k][r]) for k in range(d)] + [Fraction(int(r == 0))] for r in range(d)]
        for c in range(d):
            piv = next(r for r in range(c, d) if rows[r][c] != 0)
            rows[c], rows[piv] = rows[piv], rows[c]
            pv = rows[c][c]
            rows[c] = [x / pv for x in rows[c]]
            for r in range(d):
                if r != c and rows[r][c] != 0:
                    fac = rows[r][c]
                    rows[r] = [x - fac * y for x, y in zip(rows[r], rows[c])]
        sol = [rows[r][d] * self.den for r in range(d)]
        return CycScalar.from_coeffs(self.N, sol)

    # -- arithmetic -------------------------------------------------------
    def _pair(self, other):
        if not isinstance(other, CycScalar):
            if isinstance(other, (int, Rational)):
                other = CycScalar.rational(other, self.N)
            else:
                return None, None
        if other.N == self.N:
            return self, other
        N = math.lcm(self.N, other.N)
        return self.lift(N), other.lift(N)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        nums = [x * b.den + y * a.den for x, y in zip(a.nums, b.nums)]
        return CycScalar(a.N, nums, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.N, [-x for x in self.nums], self.den, _normalized=True)

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        nums = [x * b.den - y * a.den for x, y in zip(a.nums, b.nums)]
        return CycScalar(a.N, nums, a.den * b.den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        f = field(a.N)
        if f.d == 1:
            return CycScalar(a.N, (a.nums[0] * b.nums[0],), a.den * b.den)
        acc = [0] * (2 * f.d - 1)
        for i, x in enumerate(a.nums):
            if x:
                for j, y in enumerate(b.nums):
                    if y:
                        acc[i + j] += x * y
        return CycScalar(a.N, f.reduce_long(acc), a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycScalar.rational(1, self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.nums == b.nums and a.den == b.den

    def __hash__(self):
        # normalized trace is independent of the conductor used to represent the value
        if self._hash is None:
            w = field(self.N).trace_weights
            tr = sum((c * wk for c, wk in zip(self.nums, w) if c), Fraction(0)) / self.den
            self._hash = hash(tr)
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_rational():
            return f"CycScalar({self.to_fraction()})"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*z{self.N}^{k}" if k else f"{c}")
        return "CycScalar(" + " + ".join(terms) + ")"

    def to_json(self) -> dict:
        return {"conductor": self.N, "coeffs": [_frac_str(c) for c in self.coeffs]}

    def to_complex(self) -> complex:
        w = cmath.exp(2j * math.pi / self.N)
        return sum(float(c) * w**k for k, c in enumerate(self.coeffs)) if self.nums else 0j


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def zeta(N: int, k: int = 1) -> CycScalar:
    """The root of unity exp(2 pi i k / N) as an element of Q(zeta_N)."""
    f = field(N)
    return CycScalar(N, f.powers[k % N], 1, _normalized=True)


def imag_unit(N: int = 4) -> CycScalar:
    if N % 4:
        raise ValueError("conductor must be divisible by 4 to contain i")
    return zeta(N, N // 4)


def sqrt2(N: int = 8) -> CycScalar:
    if N % 8:
        raise ValueError("conductor must be divisible by 8 to contain sqrt(2)")
    return zeta(N, N // 8) + zeta(N, -(N // 8))


def context_conductor(rank: int) -> int:
    """Smallest conductor holding i, sqrt(2) and exp(pi i/(rank+1)) together."""
    return math.lcm(8, 2 * (rank + 1))


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def scalar_arith(op: str, a: CycScalar, b: CycScalar | None = None) -> CycScalar:
    """Dispatch one field operation by name; conj takes a single operand."""
    if op == "conj":
        return a.conj()
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if b is None:
        raise ValueError(f"operation {op!r} needs two operands")
    return fn(a, b)


def to_complex(a: CycScalar, precision: int = 15) -> tuple[float, float]:
    """Numeric value under z_N -> exp(2 pi i/N), rounded to `precision` digits."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    z = a.to_complex()
    return (round(z.real, precision) + 0.0, round(z.imag, precision) + 0.0)
