from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from qverona.basis import enumerate_basis
from qverona.center import central_mask
from qverona.discriminant import (
    basis_discriminant,
    basis_elements,
    determinant,
    equal_up_to_unit,
    gram_discriminant,
    left_multiplication_matrix,
    monomial_gcd,
    p_power_discriminant,
    stability_check,
    theorem_applies,
    theorem_exponent,
    trace,
    trace_oracle,
    unit_ratio,
)
from qverona.skew_ring import RingParams, SkewElement, veronese_monomials_up_to

SMALL = [(2, 2, 1), (2, 2, 2), (2, 3, 3), (2, 4, 2), (3, 2, 1), (3, 2, 2), (3, 3, 3), (3, 4, 2), (4, 2, 2)]


def fraction_det(rows: list[list[Fraction]]) -> Fraction:
    a = [list(map(Fraction, r)) for r in rows]
    n, det = len(a), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def min_by_commutation(b, P, radius):
    # componentwise minimum of N^n ∩ (M + b), grouping by the commutation oracle
    pts = np.array(
        [p for p in product(range(radius), repeat=P.n) if sum(p) % P.v == 0], dtype=np.int64
    )
    same = central_mask(pts - np.array(b)[None, :], P)
    return tuple(int(x) for x in pts[same].min(axis=0))


def test_trace_examples():
    P = RingParams(2, 2, 1)
    Q = enumerate_basis(P)
    one = SkewElement.scalar(1, P)
    assert trace(one, Q) == SkewElement.scalar(4, P) == trace_oracle(one, Q)
    assert trace(SkewElement.monomial((1, 1), P), Q).is_zero()
    assert trace_oracle(SkewElement.monomial((1, 1), P), Q).is_zero()
    assert trace(SkewElement.monomial((2, 0), P), Q) == SkewElement.monomial((2, 0), P, 4)


@pytest.mark.parametrize("n,m,v", SMALL)
def test_trace_matches_regular_representation(n, m, v):
    P = RingParams(n, m, v)
    Q = enumerate_basis(P)
    for s in veronese_monomials_up_to(3 * v, P):
        a = SkewElement.monomial(s, P, P.q(1) + 2)
        assert trace(a, Q) == trace_oracle(a, Q)


@pytest.mark.parametrize("n,m,v", [(3, 2, 2), (2, 3, 3)])
def test_regular_representation_is_multiplicative(n, m, v):
    # L(s) L(t) = L(s + t) up to the scalar of x^s x^t
    P = RingParams(n, m, v)
    Q = enumerate_basis(P)
    mons = veronese_monomials_up_to(v, P, start=v)
    for s in mons:
        for t in mons[:3]:
            Ls, Lt = left_multiplication_matrix(s, Q), left_multiplication_matrix(t, Q)
            prod = SkewElement.monomial(s, P) * SkewElement.monomial(t, P)
            u, c = prod.leading()
            Lu = left_multiplication_matrix(u, Q)
            for (k, j), e in Lt.items():
                (kk,) = [a for (a, b) in Ls if b == k]
                assert Ls[(kk, k)] * e == Lu[(kk, j)].scale(c)


def test_determinant_matches_fraction_elimination(rng):
    P = RingParams(3, 3)
    for r in range(1, 6):
        rows = [[rng.randint(-5, 5) for _ in range(r)] for _ in range(r)]
        M = [[SkewElement.scalar(x, P) for x in row] for row in rows]
        assert determinant(M, P) == SkewElement.scalar(fraction_det(rows), P)


def test_determinant_permutation_path():
    P = RingParams(2, 2)
    x = SkewElement.monomial((2, 0), P)
    y = SkewElement.monomial((0, 2), P)
    zero = SkewElement(P)
    assert determinant([[zero, x], [y, zero]], P) == -(x * y)
    assert determinant([[x, zero], [x, zero]], P).is_zero()


def test_gram_examples():
    P = RingParams(2, 2, 1)
    B = basis_elements(enumerate_basis(P))
    d = gram_discriminant(B, B, enumerate_basis(P))
    assert d == SkewElement.monomial((4, 4), P, -256)
    assert gram_discriminant([B[1], B[1]], [B[1], B[1]], enumerate_basis(P)).is_zero()
    P3 = RingParams(3, 2, 2)
    Q3 = enumerate_basis(P3)
    B3 = basis_elements(Q3)
    assert equal_up_to_unit(gram_discriminant(B3, B3, Q3), SkewElement.monomial((4, 4, 4), P3))


def test_basis_discriminant_examples():
    assert equal_up_to_unit(
        basis_discriminant(enumerate_basis(RingParams(2, 2, 1))), SkewElement.monomial((4, 4), RingParams(2, 2, 1))
    )
    P = RingParams(3, 2, 2)
    assert equal_up_to_unit(basis_discriminant(enumerate_basis(P)), SkewElement.monomial((4, 4, 4), P))
    # with the box representatives at g = 1 the product of the b_i is x2^2 x3^2
    P1 = RingParams(3, 2, 1)
    assert equal_up_to_unit(basis_discriminant(enumerate_basis(P1)), SkewElement.monomial((0, 4, 4), P1))


@pytest.mark.parametrize("n,m,v", SMALL)
def test_gram_equals_closed_form(n, m, v):
    Q = enumerate_basis(RingParams(n, m, v))
    B = basis_elements(Q)
    assert equal_up_to_unit(gram_discriminant(B, B, Q), basis_discriminant(Q))


@pytest.mark.parametrize("n,m,v", [(2, 2, 1), (3, 2, 2), (2, 3, 3), (3, 3, 1)])
def test_scaling_law(n, m, v, rng):
    P = RingParams(n, m, v)
    Q = enumerate_basis(P)
    B = basis_elements(Q)
    R = [[rng.randint(-3, 3) for _ in B] for _ in B]
    Z = []
    for row in R:
        z = SkewElement(P)
        for c, b in zip(row, B):
            z = z + b.scale(c)
        Z.append(z)
    lhs = gram_discriminant(Z, B, Q)
    rhs = gram_discriminant(B, B, Q).scale(fraction_det(R))
    assert lhs == rhs


def test_unit_ratio():
    P = RingParams(2, 3)
    a = SkewElement(P, {(1, 0): 2, (0, 3): P.q()})
    assert unit_ratio(a.scale(P.q(2)), a) == P.q(2)
    assert unit_ratio(a, SkewElement.monomial((1, 0), P)) is None
    assert not equal_up_to_unit(SkewElement(P), a)


def test_monomial_gcd_examples():
    P = RingParams(2, 2, 2)
    res = monomial_gcd([(2, 4), (4, 2)], P)
    assert res.exps == (2, 2) and res.in_veronese_flag
    assert res.witness == SkewElement.monomial((2, 2), P)
    res = monomial_gcd([(1, 0), (0, 1)], RingParams(2, 2, 1))
    assert res.exps == (0, 0) and res.witness == SkewElement.scalar(1, RingParams(2, 2, 1))
    assert not monomial_gcd([(1, 2)], P).in_veronese_flag


@pytest.mark.parametrize(
    "n,m,v,expected",
    [(3, 2, 2, 4), (2, 2, 1, 4), (3, 3, 3, 18), (3, 2, 1, 0)],
)
def test_p_power_discriminant_values(n, m, v, expected):
    P = RingParams(n, m, v)
    res = p_power_discriminant(1, enumerate_basis(P))
    assert res.exps == (expected,) * n
    assert res.in_veronese_flag
    assert theorem_exponent(P, 1) == expected


@pytest.mark.parametrize("n,m,v", SMALL + [(4, 3, 2), (5, 2, 2)])
def test_p_power_discriminant_against_commutation_minima(n, m, v):
    P = RingParams(n, m, v)
    Q = enumerate_basis(P)
    mins = [min_by_commutation(b, P, radius=v * m // P.g) for b in Q.reps]
    for p in (1, 2):
        expected = tuple(2 * p * sum(col) for col in zip(*mins))
        assert p_power_discriminant(p, Q).exps == expected
        assert p_power_discriminant(p, Q, method="normal_form").exps == expected


@pytest.mark.parametrize("n,m,v", SMALL)
def test_monotone_in_p(n, m, v):
    Q = enumerate_basis(RingParams(n, m, v))
    exps = [p_power_discriminant(p, Q).exps for p in (1, 2, 3)]
    for a, b in zip(exps, exps[1:]):
        assert all(x <= y for x, y in zip(a, b))


@pytest.mark.parametrize("n,m,v,imax", [(3, 2, 2, 3), (2, 2, 1, 3), (2, 3, 1, 2)])
def test_stability_examples(n, m, v, imax):
    assert stability_check(1, imax, enumerate_basis(RingParams(n, m, v)))


def test_theorem_hypothesis():
    assert theorem_applies(RingParams(3, 3, 3), 1)
    assert not theorem_applies(RingParams(3, 4, 6), 1)  # w p (g - 1) = 16, v = 6
    assert theorem_applies(RingParams(2, 4, 3), 1)  # w (m/g - 1) = 48


def test_rejects_bad_input():
    P = RingParams(2, 2, 2)
    Q = enumerate_basis(P)
    with pytest.raises(ValueError):
        trace(SkewElement.gen(0, P), Q)
    with pytest.raises(ValueError):
        p_power_discriminant(0, Q)
    with pytest.raises(ValueError):
        monomial_gcd([], P)
