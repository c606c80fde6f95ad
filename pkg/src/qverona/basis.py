"""Coset normal forms of M in H_v and the quasi-basis of the Veronese ring."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

import numpy as np

from .center import alternating_vector
from .skew_ring import Exps, RingParams


def _shift_constant(P: RingParams) -> int:
    """c with c*m = g (mod v), so g*alt - c*m*e_nu has sum divisible by v."""
    g, m, v = P.g, P.m, P.v
    return pow(m // g, -1, v // g) if v // g > 1 else 0


def _first_step_vector(P: RingParams, mu: int, nu: int) -> list[int]:
    # element of M whose mu-th coordinate equals stride
    n, m = P.n, P.m
    alt = alternating_vector(n)
    u = [P.stride * a for a in alt]
    if P.odd:
        u[nu] -= _shift_constant(P) * m
    sign = alt[mu]
    return [sign * x for x in u]


def box_bounds(P: RingParams, mu: int = 0, nu: int | None = None) -> list[int]:
    """Exclusive upper bounds of the fundamental box for the (mu, nu) labeling."""
    nu = P.n - 1 if nu is None else nu
    bounds = [P.m] * P.n
    bounds[mu] = P.stride
    bounds[nu] = P.v * P.m // P.g
    return bounds


def normal_form(s: Sequence[int], P: RingParams, mu: int = 0, nu: int | None = None) -> Exps:
    """Unique representative of s + M inside the fundamental box.

    Coordinate ``mu`` lands in [0, stride), ``nu`` in [0, vm/g) and the others
    in [0, m).  The default labeling is (first, last).
    """
    n, m = P.n, P.m
    nu = n - 1 if nu is None else nu
    if mu == nu:
        raise ValueError("mu and nu must differ")
    if len(s) != n:
        raise ValueError(f"vector {tuple(s)} has wrong length for n={n}")
    if sum(s) % P.v:
        raise ValueError(f"{tuple(s)} is not in H_v for v={P.v}")
    p = list(s)
    u = _first_step_vector(P, mu, nu)
    k = p[mu] // P.stride
    if k:
        p = [a - k * b for a, b in zip(p, u)]
    for i in range(n):
        if i == mu or i == nu:
            continue
        k = p[i] // m
        if k:
            p[i] -= k * m
            p[nu] += k * m
    p[nu] %= P.v * m // P.g
    return tuple(p)


def normal_forms_array(S: np.ndarray, P: RingParams, mu: int = 0, nu: int | None = None) -> np.ndarray:
    """Row-wise ``normal_form`` for an integer array of vectors in H_v."""
    n, m = P.n, P.m
    nu = n - 1 if nu is None else nu
    p = np.array(S, dtype=np.int64, copy=True)
    u = np.array(_first_step_vector(P, mu, nu), dtype=np.int64)
    k = p[:, mu] // P.stride
    p -= k[:, None] * u[None, :]
    for i in range(n):
        if i == mu or i == nu:
            continue
        k = p[:, i] // m
        p[:, i] -= k * m
        p[:, nu] += k * m
    p[:, nu] %= P.v * m // P.g
    return p


@dataclass(frozen=True)
class QuasiBasis:
    """Canonical coset representatives b_1..b_w of H_v / M."""

    P: RingParams
    reps: tuple[Exps, ...]
    index: dict = field(compare=False, repr=False)

    @property
    def w(self) -> int:
        return len(self.reps)

    def position(self, s: Sequence[int]) -> int:
        """Index of the representative congruent to s modulo M."""
        return self.index[normal_form(s, self.P)]

    def __len__(self) -> int:
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)


def enumerate_box(P: RingParams, mu: int = 0, nu: int | None = None) -> list[Exps]:
    """Vectors of the (mu, nu) fundamental box lying in H_v, in lex order."""
    bounds = box_bounds(P, mu, nu)
    return [p for p in product(*(range(b) for b in bounds)) if sum(p) % P.v == 0]


def enumerate_basis(P: RingParams) -> QuasiBasis:
    reps = tuple(enumerate_box(P))
    if len(reps) != P.w:
        raise AssertionError(f"found {len(reps)} coset representatives, expected w={P.w}")
    return QuasiBasis(P, reps, {r: i for i, r in enumerate(reps)})


def star(i: int, Q: QuasiBasis) -> int:
    """The index j with b_i + b_j in M (0-based)."""
    return Q.position(tuple(-x for x in Q.reps[i]))


def coset_table(Q: QuasiBasis) -> list[list[int]]:
    """table[i][j] = index of the coset of b_i + b_j."""
    reps = np.array(Q.reps, dtype=np.int64)
    w = Q.w
    sums = (reps[:, None, :] + reps[None, :, :]).reshape(w * w, Q.P.n)
    nf = normal_forms_array(sums, Q.P)
    flat = [Q.index[tuple(int(x) for x in row)] for row in nf]
    return [flat[i * w : (i + 1) * w] for i in range(w)]


def coset_keys(S: np.ndarray, P: RingParams) -> np.ndarray:
    """Integer coset invariant for rows of S (assumed in H_v).

    For s in H_v the class of s modulo m Z^n + stride * alt * Z determines
    s + M.  The key is the least base-m code among the shifts of s by
    multiples of stride * alt, reduced mod m.  Does not use ``normal_form``.
    """
    S = np.asarray(S, dtype=np.int64)
    m, n = P.m, P.n
    alt = np.array(alternating_vector(n), dtype=np.int64)
    weights = m ** np.arange(n - 1, -1, -1, dtype=np.int64)
    best = None
    for j in range(m // P.stride):
        r = (S - j * P.stride * alt[None, :]) % m
        code = r @ weights
        best = code if best is None else np.minimum(best, code)
    return best


def coset_minima_enumerated(Q: QuasiBasis) -> list[Exps]:
    """Componentwise minimum of N^n ∩ (M + b_i) for every coset, by search.

    The box [0, vm/g)^n contains, for every coset and every coordinate, a
    nonnegative element attaining that coordinate's minimum.
    """
    P = Q.P
    side = P.v * P.m // P.g
    grids = np.indices((side,) * P.n, dtype=np.int64).reshape(P.n, -1).T
    grids = grids[grids.sum(axis=1) % P.v == 0]
    keys = coset_keys(grids, P)
    rep_keys = coset_keys(np.array(Q.reps, dtype=np.int64), P)
    order = np.argsort(keys, kind="stable")
    keys_sorted = keys[order]
    pts = grids[order]
    uniq, starts = np.unique(keys_sorted, return_index=True)
    mins = np.minimum.reduceat(pts, starts, axis=0)
    by_key = {int(k): tuple(int(x) for x in row) for k, row in zip(uniq, mins)}
    if len(by_key) != Q.w:
        raise AssertionError(f"search box met {len(by_key)} cosets, expected {Q.w}")
    return [by_key[int(k)] for k in rep_keys]


def coset_minima_normal_form(Q: QuasiBasis) -> list[Exps]:
    """Same minima read off relabeled normal forms.

    With the coordinate k in the role of the first index, the normal form
    has its k-th entry in [0, stride), which is the least nonnegative value
    of that coordinate on the coset.
    """
    P = Q.P
    n = P.n
    out = []
    for b in Q.reps:
        row = []
        for k in range(n):
            nu = n - 1 if k != n - 1 else 0
            row.append(normal_form(b, P, mu=k, nu=nu)[k])
        out.append(tuple(row))
    return out
