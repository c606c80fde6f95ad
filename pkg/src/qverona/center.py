"""Center of the Veronese ring: the lattice M, a commutation oracle, y_k elements."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .skew_ring import (
    Exps,
    RingParams,
    SkewElement,
    commutator_exponent,
    compositions,
    in_veronese,
    unit_vector,
    veronese_monomials_up_to,
)


def alternating_vector(n: int) -> Exps:
    return tuple(1 if i % 2 == 0 else -1 for i in range(n))


@dataclass(frozen=True)
class CenterLattice:
    """M = (m Z^n + stride * Z * alt) intersected with H_v.

    ``stride`` is g for odd n and m/g for even n.  Membership is decided by
    congruences; no basis of the intersection is stored.
    """

    P: RingParams

    @property
    def generators(self) -> list[Exps]:
        n, m = self.P.n, self.P.m
        alt = alternating_vector(n)
        return [unit_vector(i, n, m) for i in range(n)] + [
            tuple(self.P.stride * a for a in alt)
        ]

    def __contains__(self, s: Sequence[int]) -> bool:
        return in_M(s, self)


def in_M(s: Sequence[int], L: CenterLattice | RingParams) -> bool:
    P = L.P if isinstance(L, CenterLattice) else L
    if len(s) != P.n:
        raise ValueError(f"vector {tuple(s)} has wrong length for n={P.n}")
    if sum(s) % P.v:
        return False
    m = P.m
    # s_1 = b mod m for the multiplier b of alt; b must be a multiple of stride
    b = s[0] % m
    if b % P.stride:
        return False
    return all((x - (b if i % 2 == 0 else -b)) % m == 0 for i, x in enumerate(s))


def in_M_array(S: np.ndarray, P: RingParams) -> np.ndarray:
    """Vectorized ``in_M`` over the rows of an integer array."""
    S = np.asarray(S, dtype=np.int64)
    m = P.m
    b = S[:, 0] % m
    alt = np.array(alternating_vector(P.n), dtype=np.int64)
    cong = ((S - b[:, None] * alt[None, :]) % m == 0).all(axis=1)
    return cong & (b % P.stride == 0) & (S.sum(axis=1) % P.v == 0)


def _commutation_matrix(n: int) -> np.ndarray:
    # K[i, j] with s^T K t = commutator_exponent(s, t)
    K = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if j > i:
                K[j, i] = 1
                K[i, j] = -1
    return K


def _witnesses(P: RingParams) -> list[Exps]:
    # x_i x_{i+1}^{mv-1}, degree mv, lies in the Veronese ring
    n, mv = P.n, P.m * P.v
    return [
        tuple(1 if j == i else mv - 1 if j == i + 1 else 0 for j in range(n))
        for i in range(n - 1)
    ]


def _monomial_is_central(s: Sequence[int], P: RingParams, gens: list[Exps]) -> bool:
    m = P.m
    for t in _witnesses(P):
        if commutator_exponent(s, t) % m:
            return False
    return all(commutator_exponent(s, t) % m == 0 for t in gens)


def is_central(a: SkewElement, P: RingParams | None = None) -> bool:
    """Brute-force centrality in the Veronese ring.

    Checks commutation with every monomial of degree v, which generate the
    Veronese ring as an algebra.  Independent of the lattice description.
    """
    P = P or a.P
    if not in_veronese(a, P):
        raise ValueError("is_central expects an element of the Veronese ring")
    gens = list(compositions(P.v, P.n))
    if a.is_monomial() or a.is_zero():
        return all(_monomial_is_central(s, P, gens) for s in a.terms)
    for t in gens:
        x = SkewElement.monomial(t, a.P)
        if a * x != x * a:
            return False
    return True


def central_mask(S: np.ndarray, P: RingParams) -> np.ndarray:
    """Vectorized commutation oracle: row s is central iff x^s commutes
    with every degree-v monomial."""
    S = np.asarray(S, dtype=np.int64)
    T = np.array(list(compositions(P.v, P.n)), dtype=np.int64)
    K = _commutation_matrix(P.n)
    C = (S @ K @ T.T) % P.m
    return (C == 0).all(axis=1)


def y_element(k: int, P: RingParams) -> SkewElement:
    """y_k = q^{-floor(n/2) k(k+1)/2} x^{(k, m-k, k, m-k, ...)}."""
    n, m = P.n, P.m
    if not 0 <= k <= m:
        raise ValueError(f"y_k needs 0 <= k <= m, got k={k}")
    s = tuple(k if i % 2 == 0 else m - k for i in range(n))
    e = -(n // 2) * k * (k + 1) // 2
    return SkewElement.monomial(s, P, P.q(e))


def central_monomials_up_to(D: int, P: RingParams) -> list[Exps]:
    if D < 0:
        raise ValueError("degree bound must be nonnegative")
    L = CenterLattice(P)
    return sorted(s for s in veronese_monomials_up_to(D, P) if in_M(s, L))
