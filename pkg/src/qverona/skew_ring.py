"""Normal-ordered arithmetic in k_q[x_1, ..., x_n] and its Laurent localization.

A monomial is an exponent tuple ``s`` standing for x_1^{s_1} ... x_n^{s_n}.
Products are put back in normal order with the closed formula

    x^s x^t = q^{sum_{i<j} s_j t_i} x^{s+t},

which follows from x_j x_i = q x_i x_j for i < j.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, Mapping, Sequence

from .cyclo import CycScalar, field, q_pow

Exps = tuple[int, ...]


@dataclass(frozen=True)
class RingParams:
    """Parameters (n, m, v) of k_q[x_1..x_n]^(v), q of order m.

    ``m = 1`` is allowed and gives the commutative polynomial ring; the
    library uses it as the ambient ring for derivations that only exist
    after identifying a Veronese ring with a commutative one.
    """

    n: int
    m: int
    v: int = 1

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need n >= 2 variables, got n={self.n}")
        if self.m < 1:
            raise ValueError(f"order of q must be positive, got m={self.m}")
        if self.v < 1:
            raise ValueError(f"Veronese index must be positive, got v={self.v}")

    @property
    def g(self) -> int:
        return gcd(self.v, self.m)

    @property
    def odd(self) -> bool:
        return self.n % 2 == 1

    @property
    def stride(self) -> int:
        """Step of the alternating generator of the center lattice."""
        return self.g if self.odd else self.m // self.g

    @property
    def w(self) -> int:
        if self.odd:
            return self.m ** (self.n - 1)
        return self.m**self.n // self.g**2

    def q(self, e: int = 1) -> CycScalar:
        return q_pow(e, self.m)

    def with_v(self, v: int) -> "RingParams":
        return RingParams(self.n, self.m, v)


def twist(a: Sequence[int], b: Sequence[int]) -> int:
    """Exponent e with x^a x^b = q^e x^{a+b}: sum over i < j of a_j b_i."""
    e = 0
    acc = 0  # running sum of b_i for i < j
    for aj, bj in zip(a, b):
        e += aj * acc
        acc += bj
    return e


def commutator_exponent(a: Sequence[int], b: Sequence[int]) -> int:
    """Exponent c with x^a x^b = q^c x^b x^a."""
    return twist(a, b) - twist(b, a)


def add_exps(a: Sequence[int], b: Sequence[int]) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def mono_mul(a: Sequence[int], b: Sequence[int], P: RingParams) -> tuple[CycScalar, Exps]:
    return q_pow(twist(a, b), P.m), add_exps(a, b)


def unit_vector(i: int, n: int, k: int = 1) -> Exps:
    return tuple(k if j == i else 0 for j in range(n))


class SkewElement:
    """A finite sum of CycScalar-weighted normal-ordered monomials."""

    __slots__ = ("P", "terms", "_hash")

    def __init__(self, P: RingParams, terms: Mapping[Exps, CycScalar] | None = None):
        self.P = P
        clean = {}
        for s, c in (terms or {}).items():
            if len(s) != P.n:
                raise ValueError(f"exponent vector {s} has wrong length for n={P.n}")
            if not isinstance(c, CycScalar):
                c = CycScalar.from_rational(P.m, c)
            if c:
                clean[tuple(s)] = c
        self.terms: dict[Exps, CycScalar] = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def monomial(cls, s: Sequence[int], P: RingParams, coeff=1) -> "SkewElement":
        return cls(P, {tuple(s): coeff})

    @classmethod
    def scalar(cls, c, P: RingParams) -> "SkewElement":
        return cls(P, {(0,) * P.n: c})

    @classmethod
    def gen(cls, i: int, P: RingParams) -> "SkewElement":
        """The generator x_{i+1} (0-based index)."""
        return cls.monomial(unit_vector(i, P.n), P)

    @classmethod
    def _from_raw(cls, P: RingParams, raw: dict[Exps, list]) -> "SkewElement":
        # raw maps monomial -> length-m vector of coefficients of q^k
        F = field(P.m)
        out = {}
        for s, vec in raw.items():
            c = CycScalar(P.m, F.reduce_exponent_vector(vec))
            if c:
                out[s] = c
        el = cls.__new__(cls)
        el.P = P
        el.terms = dict(sorted(out.items()))
        el._hash = None
        return el

    # arithmetic

    def _check(self, other: "SkewElement"):
        if self.P.n != other.P.n or self.P.m != other.P.m:
            raise ValueError("elements live in different rings")

    def __add__(self, other):
        if not isinstance(other, SkewElement):
            other = SkewElement.scalar(other, self.P)
        self._check(other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out[s] + c if s in out else c
        return SkewElement(self.P, out)

    __radd__ = __add__

    def __neg__(self):
        return SkewElement(self.P, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SkewElement):
            other = SkewElement.scalar(other, self.P)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SkewElement":
        return SkewElement(self.P, {s: a * c for s, a in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SkewElement):
            return self.scale(other)
        self._check(other)
        m = self.P.m
        raw: dict[Exps, list] = {}
        for s, a in self.terms.items():
            for t, b in other.terms.items():
                e = twist(s, t)
                key = add_exps(s, t)
                vec = raw.get(key)
                if vec is None:
                    vec = raw[key] = [0] * m
                for i, ai in enumerate(a.coeffs):
                    if not ai:
                        continue
                    for j, bj in enumerate(b.coeffs):
                        if bj:
                            vec[(i + j + e) % m] += ai * bj
        return SkewElement._from_raw(self.P, raw)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "SkewElement":
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        acc = SkewElement.scalar(1, self.P)
        for _ in range(k):
            acc = acc * self
        return acc

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def support(self) -> list[Exps]:
        return list(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading(self) -> tuple[Exps, CycScalar]:
        s = next(iter(self.terms))
        return s, self.terms[s]

    def degrees(self) -> set[int]:
        return {sum(s) for s in self.terms}

    def homogeneous_part(self, d: int) -> "SkewElement":
        return SkewElement(self.P, {s: c for s, c in self.terms.items() if sum(s) == d})

    def is_polynomial(self) -> bool:
        return all(x >= 0 for s in self.terms for x in s)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewElement):
            if isinstance(other, (int, CycScalar)):
                other = SkewElement.scalar(other, self.P)
            else:
                return NotImplemented
        return self.P.n == other.P.n and self.P.m == other.P.m and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self.terms.items()))
        return self._hash

    def __iter__(self) -> Iterator[tuple[Exps, CycScalar]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for s, c in self.terms.items():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(s) if e
            )
            if not mono:
                parts.append(f"({c})")
            elif c.is_one():
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [{"exps": list(s), "coeff": c.to_json()} for s, c in self.terms.items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping], P: RingParams) -> "SkewElement":
        return cls(P, {tuple(d["exps"]): CycScalar.from_json(P.m, d["coeff"]) for d in data})


def elem_mul(a: SkewElement, b: SkewElement, P: RingParams | None = None) -> SkewElement:
    return a * b


def word_product(factors: Sequence[SkewElement]) -> SkewElement:
    """Left-to-right product of a nonempty sequence of elements."""
    acc = factors[0]
    for f in factors[1:]:
        acc = acc * f
    return acc


def total_degree(s: Sequence[int]) -> int:
    return sum(s)


def in_veronese(a: SkewElement | Sequence[int], P: RingParams) -> bool:
    """True iff every monomial has total degree divisible by v."""
    if isinstance(a, SkewElement):
        return all(sum(s) % P.v == 0 for s in a.terms)
    return sum(a) % P.v == 0


def compositions(total: int, n: int) -> Iterator[Exps]:
    """All s in N^n with sum(s) == total, in lexicographic order."""
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, n - 1):
            yield (first,) + rest


def degree_v_monomials(N: int, P: RingParams) -> list[Exps]:
    """Monomials of total degree N*v, lexicographically ordered."""
    return list(compositions(N * P.v, P.n))


def veronese_monomials_up_to(D: int, P: RingParams, start: int = 0) -> list[Exps]:
    """Monomials in H_v^+ with start <= degree <= D, ordered by degree then lex."""
    out = []
    for d in range(start, D + 1):
        if d % P.v == 0:
            out.extend(compositions(d, P.n))
    return out


def letters(s: Sequence[int]) -> list[int]:
    """The normal-ordered word of x^s as a list of 0-based variable indices."""
    return [i for i, e in enumerate(s) for _ in range(e)]


def split_into_generators(s: Sequence[int], P: RingParams) -> list[Exps]:
    """Cut x^s (s in H_v^+) into consecutive degree-v pieces.

    Consecutive pieces of a normal-ordered word are themselves normal ordered,
    so x^s equals the product of the pieces with coefficient exactly 1.
    """
    if any(x < 0 for x in s) or sum(s) % P.v:
        raise ValueError(f"{tuple(s)} is not a monomial of the Veronese ring")
    word = letters(s)
    pieces = []
    for start in range(0, len(word), P.v):
        piece = [0] * P.n
        for i in word[start : start + P.v]:
            piece[i] += 1
        pieces.append(tuple(piece))
    return pieces


def pairs_upper(n: int) -> Iterator[tuple[int, int]]:
    return combinations(range(n), 2)
