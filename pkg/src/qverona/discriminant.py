"""Regular trace, Gram discriminants and p-power discriminants over the center."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .basis import (
    QuasiBasis,
    coset_minima_enumerated,
    coset_minima_normal_form,
    coset_table,
    enumerate_basis,
    star,
)
from .center import in_M
from .cyclo import CycScalar
from .skew_ring import Exps, RingParams, SkewElement, in_veronese, twist

MAX_DENSE_RANK = 10


def _require_veronese(a: SkewElement, P: RingParams):
    if not in_veronese(a, P):
        raise ValueError("trace is only defined on the Veronese ring")


def trace(a: SkewElement, Q: QuasiBasis) -> SkewElement:
    """Regular trace: central monomials scale by w, the rest vanish."""
    P = Q.P
    _require_veronese(a, P)
    return SkewElement(P, {s: c * Q.w for s, c in a.terms.items() if in_M(s, P)})


@lru_cache(maxsize=64)
def _table(Q: QuasiBasis) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in coset_table(Q))


def _entry(s: Sequence[int], i: int, j: int, Q: QuasiBasis) -> tuple[int, SkewElement]:
    """(k, c) with x^s x^{b_j} = c x^{b_k}; i is the coset index of s."""
    k = _table(Q)[i][j]
    bj, bk = Q.reps[j], Q.reps[k]
    u = tuple(a + b - c for a, b, c in zip(s, bj, bk))
    # x^s x^{b_j} = q^{e1} x^{s + b_j} and x^u x^{b_k} = q^{e2} x^{s + b_j}
    return k, SkewElement.monomial(u, Q.P, Q.P.q(twist(s, bj) - twist(u, bk)))


def left_multiplication_matrix(s: Sequence[int], Q: QuasiBasis) -> dict[tuple[int, int], SkewElement]:
    """Matrix of left multiplication by x^s in the basis x^{b_1}..x^{b_w}.

    Entry (k, j) is the central Laurent element c with x^s x^{b_j} = c x^{b_k}.
    """
    i = Q.position(s)
    out = {}
    for j in range(Q.w):
        k, c = _entry(s, i, j, Q)
        out[(k, j)] = c
    return out


def trace_oracle(a: SkewElement, Q: QuasiBasis) -> SkewElement:
    """Trace as the sum of diagonal entries of the regular representation."""
    P = Q.P
    _require_veronese(a, P)
    table = _table(Q)
    acc = SkewElement(P)
    for s, c in a.terms.items():
        i = Q.position(s)
        for j in range(Q.w):
            if table[i][j] == j:
                acc = acc + _entry(s, i, j, Q)[1].scale(c)
    return acc


# determinants over the (commutative) center


def _is_generalized_permutation(M: list[list[SkewElement]]) -> bool:
    return all(sum(1 for x in row if x) <= 1 for row in M)


def _perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def determinant(M: list[list[SkewElement]], P: RingParams) -> SkewElement:
    """Exact determinant of a square matrix of central elements."""
    r = len(M)
    if r == 0:
        raise ValueError("empty matrix")
    if _is_generalized_permutation(M):
        perm = []
        for row in M:
            cols = [j for j, x in enumerate(row) if x]
            if not cols:
                return SkewElement(P)
            perm.append(cols[0])
        if len(set(perm)) != r:
            return SkewElement(P)
        acc = SkewElement.scalar(_perm_sign(perm), P)
        for i, j in enumerate(perm):
            acc = acc * M[i][j]
        return acc
    if r > MAX_DENSE_RANK:
        raise ValueError(f"dense determinant limited to rank {MAX_DENSE_RANK}")
    memo: dict[tuple[int, int], SkewElement] = {}

    def minor(row: int, cols: int) -> SkewElement:
        # determinant of rows row.. and the columns in bitmask cols
        if row == r:
            return SkewElement.scalar(1, P)
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = SkewElement(P)
        sign = 1
        for j in range(r):
            if not cols >> j & 1:
                continue
            if M[row][j]:
                term = M[row][j] * minor(row + 1, cols & ~(1 << j))
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[key] = acc
        return acc

    return minor(0, (1 << r) - 1)


def gram_matrix(Z: Sequence[SkewElement], Zp: Sequence[SkewElement], Q: QuasiBasis) -> list[list[SkewElement]]:
    return [[trace(z * zp, Q) for zp in Zp] for z in Z]


def gram_discriminant(Z: Sequence[SkewElement], Zp: Sequence[SkewElement], Q: QuasiBasis) -> SkewElement:
    """d_r(Z, Z') = det(tr(z_i z'_j))."""
    if len(Z) != len(Zp):
        raise ValueError("Z and Z' must have the same size")
    if not Z:
        raise ValueError("discriminant of an empty family")
    return determinant(gram_matrix(Z, Zp, Q), Q.P)


def basis_elements(Q: QuasiBasis) -> list[SkewElement]:
    return [SkewElement.monomial(b, Q.P) for b in Q.reps]


def basis_discriminant(Q: QuasiBasis) -> SkewElement:
    """w^w * prod_i x^{b_i} x^{b_i*}, the Gram determinant up to a unit."""
    P = Q.P
    acc = SkewElement.scalar(Q.w**Q.w, P)
    for i, b in enumerate(Q.reps):
        acc = acc * (SkewElement.monomial(b, P) * SkewElement.monomial(Q.reps[star(i, Q)], P))
    return acc


def unit_ratio(a: SkewElement, b: SkewElement) -> CycScalar | None:
    """c with a = c * b for a nonzero scalar c, or None."""
    if a.is_zero() or b.is_zero() or set(a.terms) != set(b.terms):
        return None
    s0, cb = b.leading()
    c = a.terms[s0] / cb
    if all(a.terms[s] == c * b.terms[s] for s in b.terms):
        return c
    return None


def equal_up_to_unit(a: SkewElement, b: SkewElement) -> bool:
    return unit_ratio(a, b) is not None


# gcd computations


@dataclass(frozen=True)
class GcdResult:
    """Monomial gcd ``x^exps`` and whether it lies in the Veronese ring."""

    exps: Exps
    in_veronese_flag: bool
    witness: SkewElement | None
    unit: CycScalar | None = None


def monomial_gcd(S: Sequence[Sequence[int]], P: RingParams) -> GcdResult:
    if not S:
        raise ValueError("gcd of an empty set")
    f = tuple(min(col) for col in zip(*S))
    flag = sum(f) % P.v == 0
    return GcdResult(f, flag, SkewElement.monomial(f, P) if flag else None)


def _single_term(a: SkewElement) -> tuple[Exps, CycScalar]:
    if not a.is_monomial():
        raise AssertionError(f"expected a single central monomial, got {a}")
    return a.leading()


def coset_minima(Q: QuasiBasis, method: str = "enumerate") -> list[Exps]:
    if method == "enumerate":
        return coset_minima_enumerated(Q)
    if method == "normal_form":
        return coset_minima_normal_form(Q)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=128)
def _basis_gram(Q: QuasiBasis) -> tuple[Exps, CycScalar]:
    return _single_term(gram_discriminant(basis_elements(Q), basis_elements(Q), Q))


def p_power_discriminant(p: int, Q: QuasiBasis, method: str = "enumerate") -> GcdResult:
    """Monomial gcd of all p-fold products of Gram discriminants d_w(Z, Z')
    where Z, Z' run over monomial families congruent to the quasi-basis.

    Such a family has Z_i = x^{s_i} with s_i in N^n ∩ (M + b_i), and its Gram
    discriminant is d_w(b, b) * prod_i x^{s_i - b_i} x^{s'_i - b_i} up to a
    scalar, so the gcd is d_w(b, b) times x^{2 sum_i (min_i - b_i)}, all to
    the p-th power.  ``min_i`` is the componentwise minimum over the coset.
    """
    if p < 1:
        raise ValueError("p must be positive")
    P = Q.P
    gram_exps, gram_unit = _basis_gram(Q)
    mins = coset_minima(Q, method)
    per_coset = [monomial_gcd([mn], P).exps for mn in mins]
    shift = [0] * P.n
    for mn, b in zip(per_coset, Q.reps):
        for k in range(P.n):
            shift[k] += mn[k] - b[k]
    exps = tuple(p * (ge + 2 * sh) for ge, sh in zip(gram_exps, shift))
    res = monomial_gcd([exps], P)
    return GcdResult(res.exps, res.in_veronese_flag, res.witness, gram_unit**p)


def theorem_exponent(P: RingParams, p: int) -> int:
    """Closed-form exponent N with d^[p] = (x_1...x_n)^N."""
    if P.odd:
        return P.w * p * (P.g - 1)
    return P.w * p * (P.m // P.g - 1)


def theorem_applies(P: RingParams, p: int) -> bool:
    return theorem_exponent(P, p) % P.v == 0


def stability_check(p: int, imax: int, Q: QuasiBasis) -> bool:
    base = p_power_discriminant(p, Q)
    if not base.in_veronese_flag:
        raise ValueError("stability needs the p-power discriminant to exist in the Veronese ring")
    for i in range(1, imax + 1):
        d = p_power_discriminant(i * p, Q)
        if d.exps != tuple(i * x for x in base.exps):
            return False
    return True


def discriminant_report(P: RingParams, p: int, check_theorem: bool = True, stability: int = 0) -> dict:
    Q = enumerate_basis(P)
    res = p_power_discriminant(p, Q)
    report = {
        "n": P.n,
        "m": P.m,
        "v": P.v,
        "p": p,
        "g": P.g,
        "w": P.w,
        "exponent": list(res.exps),
        "unit": res.unit.to_json(),
        "flag": res.in_veronese_flag,
    }
    if check_theorem:
        N = theorem_exponent(P, p)
        report["theorem_exponent"] = [N] * P.n
        report["hypothesis"] = theorem_applies(P, p)
        report["theorem_match"] = list(res.exps) == [N] * P.n
    if stability:
        report["stability"] = stability_check(p, stability, Q) if res.in_veronese_flag else None
    return report
