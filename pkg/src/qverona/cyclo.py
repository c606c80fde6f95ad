"""Exact arithmetic in the cyclotomic field Q(q), q a primitive m-th root of unity.

Elements are stored as coefficient vectors in the power basis
1, q, ..., q^(phi(m)-1), always reduced modulo the m-th cyclotomic
polynomial, so equality of vectors is equality of field elements.
Coefficients are Python ints when integral and ``Fraction`` otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


def _norm(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    """Divide polynomials given as low-to-high coefficient lists."""
    num = list(num)
    if len(num) < len(den):
        return [0], num
    lead = den[-1]
    quot = [0] * (len(num) - len(den) + 1)
    for shift in range(len(quot) - 1, -1, -1):
        c = num[shift + len(den) - 1]
        if c == 0:
            continue
        c = _norm(Fraction(c) / lead)
        quot[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
    rem = num[: len(den) - 1] or [0]
    return quot, [_norm(x) for x in rem]


def _poly_mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients (low to high) of the m-th cyclotomic polynomial.

    Computed by dividing x^m - 1 by every Phi_d with d a proper divisor of m.
    """
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert all(r == 0 for r in rem)
    return tuple(int(c) for c in _trim(num))


class _Field:
    """Per-order reduction data: q^k mod Phi_m for 0 <= k < m."""

    def __init__(self, m: int):
        self.m = m
        self.phi_poly = cyclotomic_polynomial(m)
        self.degree = len(self.phi_poly) - 1
        self.pow_table: list[tuple[int, ...]] = []
        for k in range(m):
            mono = [0] * k + [1]
            _, rem = _poly_divmod(mono, list(self.phi_poly))
            rem = rem + [0] * (self.degree - len(rem))
            self.pow_table.append(tuple(int(c) for c in rem[: self.degree]))

    def reduce_exponent_vector(self, vec: Sequence[Rational]) -> tuple:
        """Reduce sum_k vec[k] q^k (k taken mod m) to the power basis."""
        out = [0] * self.degree
        for k, c in enumerate(vec):
            if c == 0:
                continue
            row = self.pow_table[k % self.m]
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
        return tuple(_norm(c) for c in out)


@lru_cache(maxsize=None)
def field(m: int) -> _Field:
    return _Field(m)


class CycScalar:
    """An element of Q(q) with q a primitive m-th root of unity."""

    __slots__ = ("m", "coeffs", "_hash")

    def __init__(self, m: int, coeffs: Iterable[Rational]):
        F = field(m)
        coeffs = tuple(_norm(c) for c in coeffs)
        if len(coeffs) != F.degree:
            raise ValueError(f"expected {F.degree} coefficients for m={m}, got {len(coeffs)}")
        self.m = m
        self.coeffs = coeffs
        self._hash = None

    # constructors

    @classmethod
    def from_rational(cls, m: int, c: Rational) -> "CycScalar":
        F = field(m)
        return cls(m, (c,) + (0,) * (F.degree - 1))

    @classmethod
    def zero(cls, m: int) -> "CycScalar":
        return cls.from_rational(m, 0)

    @classmethod
    def one(cls, m: int) -> "CycScalar":
        return cls.from_rational(m, 1)

    @classmethod
    def from_exponent_vector(cls, m: int, vec: Sequence[Rational]) -> "CycScalar":
        """Build sum_k vec[k] q^k for an arbitrary-length vector."""
        return cls(m, field(m).reduce_exponent_vector(vec))

    # arithmetic

    def _coerce(self, other) -> "CycScalar":
        if isinstance(other, CycScalar):
            if other.m != self.m:
                raise ValueError(f"mismatched cyclotomic orders {self.m} and {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.from_rational(self.m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar(self.m, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.m, (-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar(self.m, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycScalar(self.m, (a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar.from_exponent_vector(self.m, _poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def times_q_pow(self, e: int) -> "CycScalar":
        """Multiply by q^e; cheaper than a general product."""
        e %= self.m
        if e == 0:
            return self
        vec = [0] * e + list(self.coeffs)
        return CycScalar.from_exponent_vector(self.m, vec)

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        # extended Euclid in Q[x]: s*a + t*Phi = 1
        phi = [Fraction(c) for c in field(self.m).phi_poly]
        r0, r1 = phi, _trim([Fraction(c) for c in self.coeffs])
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] != 0:
            quot, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, _trim([Fraction(c) for c in rem])
            prod = _poly_mul(quot, s1)
            size = max(len(s0), len(prod))
            s_new = [
                (s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0)
                for i in range(size)
            ]
            s0, s1 = s1, _trim(s_new)
        # r0 is a nonzero constant gcd
        const = r0[0]
        inv = [c / const for c in s0]
        return CycScalar.from_exponent_vector(self.m, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int) -> "CycScalar":
        if e < 0:
            return self.inverse() ** (-e)
        acc = CycScalar.one(self.m)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # predicates

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, CycScalar):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if not any(self.coeffs[1:]):
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.m, self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mon = "q" if i == 1 else f"q^{i}"
                terms.append(mon if c == 1 else f"-{mon}" if c == -1 else f"({c})*{mon}")
        return " + ".join(terms) if terms else "0"

    # serialization

    def to_json(self) -> list[str]:
        return [f"{Fraction(c).numerator}/{Fraction(c).denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, m: int, data: Sequence[str]) -> "CycScalar":
        return cls(m, (Fraction(s) for s in data))


def cyc_add(a: CycScalar, b: CycScalar) -> CycScalar:
    return a + b


def cyc_mul(a: CycScalar, b: CycScalar) -> CycScalar:
    return a * b


def cyc_inv(a: CycScalar) -> CycScalar:
    return a.inverse()


@lru_cache(maxsize=4096)
def q_pow(e: int, m: int) -> CycScalar:
    """q^e for the primitive m-th root of unity q; e may be negative."""
    return CycScalar(m, field(m).pow_table[e % m])
