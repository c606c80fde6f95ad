"""Automorphisms of k_q[x]^(v): constructive families, checks, free-word search."""

from __future__ import annotations

from itertools import permutations
from math import comb, gcd
from typing import Mapping, Sequence

from .basis import QuasiBasis
from .cyclo import CycScalar
from .discriminant import equal_up_to_unit, p_power_discriminant
from .skew_ring import (
    Exps,
    RingParams,
    SkewElement,
    add_exps,
    commutator_exponent,
    compositions,
    in_veronese,
    split_into_generators,
    twist,
    unit_vector,
    veronese_monomials_up_to,
)


class InapplicableAutomorphism(ValueError):
    """The automorphism family does not exist for these ring parameters."""


def _scalar(c, m: int) -> CycScalar:
    return c if isinstance(c, CycScalar) else CycScalar.from_rational(m, c)


def ordered_power_product(factors: Sequence[tuple[int, int]], n: int) -> tuple[int, Exps]:
    """Normal-order x_{i1}^{e1} x_{i2}^{e2} ...; returns (q-exponent, exps)."""
    e, acc = 0, (0,) * n
    for i, k in factors:
        piece = unit_vector(i, n, k)
        e += twist(acc, piece)
        acc = add_exps(acc, piece)
    return e, acc


def permuted_monomial(s: Sequence[int], perm: Sequence[int]) -> tuple[int, Exps]:
    """x^s_pi = x_{pi(1)}^{s_1} ... x_{pi(n)}^{s_n} in normal order."""
    return ordered_power_product(list(zip(perm, s)), len(s))


def permute_vector(s: Sequence[int], perm: Sequence[int]) -> Exps:
    out = [0] * len(s)
    for i, x in enumerate(s):
        out[perm[i]] = x
    return tuple(out)


class AutoSpec:
    """Base class: an automorphism of the Veronese ring given on monomials."""

    kind = "abstract"

    def __init__(self, P: RingParams):
        self.P = P
        self._cache: dict[Exps, SkewElement] = {}

    def applicable(self) -> bool:
        return True

    def check_applicable(self):
        if not self.applicable():
            raise InapplicableAutomorphism(f"{self.kind} is not defined for {self.P}")

    def _image(self, s: Exps) -> SkewElement:
        raise NotImplementedError

    def monomial_image(self, s: Sequence[int]) -> SkewElement:
        s = tuple(s)
        img = self._cache.get(s)
        if img is None:
            img = self._cache[s] = self._image(s)
        return img

    def generator_images(self) -> dict[Exps, SkewElement]:
        return {s: self.monomial_image(s) for s in compositions(self.P.v, self.P.n)}

    def lower(self) -> "GeneratorImages":
        return GeneratorImages(self.P, self.generator_images())

    def inverse(self) -> "AutoSpec":
        return _invert_monomial_map(self)

    def __call__(self, a: SkewElement) -> SkewElement:
        return apply_auto(self, a)

    def describe(self) -> dict:
        return {"kind": self.kind}


class Scaling(AutoSpec):
    """x^s of degree Nv maps to c^N k_2^{s_2} ... k_n^{s_n} x^s."""

    kind = "scaling"

    def __init__(self, P: RingParams, c=1, ks: Sequence | None = None):
        super().__init__(P)
        ks = list(ks) if ks is not None else [1] * (P.n - 1)
        if len(ks) != P.n - 1:
            raise ValueError(f"need {P.n - 1} scalars k_2..k_n")
        self.c = _scalar(c, P.m)
        self.ks = [_scalar(k, P.m) for k in ks]
        if not self.c or not all(self.ks):
            raise ValueError("scaling parameters must be nonzero")

    def _image(self, s):
        coeff = self.c ** (sum(s) // self.P.v)
        for k, e in zip(self.ks, s[1:]):
            coeff = coeff * k**e
        return SkewElement.monomial(s, self.P, coeff)

    def inverse(self):
        return Scaling(self.P, self.c.inverse(), [k.inverse() for k in self.ks])

    def describe(self):
        return {"kind": self.kind, "c": self.c.to_json(), "k": [k.to_json() for k in self.ks]}


class Permutation(AutoSpec):
    """x^s maps to x^s_pi; an automorphism when q = +-1."""

    kind = "permutation"

    def __init__(self, P: RingParams, perm: Sequence[int]):
        super().__init__(P)
        if sorted(perm) != list(range(P.n)):
            raise ValueError(f"{perm} is not a permutation of 0..{P.n - 1}")
        self.perm = tuple(perm)

    def applicable(self):
        return self.P.m <= 2

    def _image(self, s):
        e, t = permuted_monomial(s, self.perm)
        return SkewElement.monomial(t, self.P, self.P.q(e))

    def inverse(self):
        inv = [0] * self.P.n
        for i, j in enumerate(self.perm):
            inv[j] = i
        return Permutation(self.P, inv)

    def describe(self):
        return {"kind": self.kind, "perm": list(self.perm)}


class TwistedShift(AutoSpec):
    """The shift-by-``shift`` power of x^s -> q^{s_n^2} x^s_pi, pi(i) = i + 1 mod n.

    Multiplicative on the Veronese ring exactly when q^v = +-1.
    """

    kind = "twisted_shift"

    def __init__(self, P: RingParams, shift: int = 1):
        super().__init__(P)
        self.shift = shift % P.n
        self.perm = tuple((i + 1) % P.n for i in range(P.n))

    def applicable(self):
        return (2 * self.P.v) % self.P.m == 0

    def _step(self, el: SkewElement) -> SkewElement:
        out = SkewElement(self.P)
        for s, c in el.terms.items():
            e, t = permuted_monomial(s, self.perm)
            out = out + SkewElement.monomial(t, self.P, c.times_q_pow(e + s[-1] ** 2))
        return out

    def _image(self, s):
        el = SkewElement.monomial(s, self.P)
        for _ in range(self.shift):
            el = self._step(el)
        return el

    def describe(self):
        return {"kind": self.kind, "shift": self.shift}


class GeneratorImages(AutoSpec):
    """An endomorphism given by images of the degree-v monomials.

    A monomial x^s in the Veronese ring is the product of its consecutive
    degree-v pieces, so its image is the product of the pieces' images.
    """

    kind = "generator_images"

    def __init__(self, P: RingParams, images: Mapping[Sequence[int], SkewElement] | None = None):
        super().__init__(P)
        self._images = {tuple(s): img for s, img in (images or {}).items()}

    def generator_images(self):
        return {s: self.generator_image(s) for s in compositions(self.P.v, self.P.n)}

    def generator_image(self, t: Exps) -> SkewElement:
        return self._images[t]

    def _image(self, s):
        if sum(s) == 0:
            return SkewElement.scalar(1, self.P)
        pieces = split_into_generators(s, self.P)
        head = self.generator_image(pieces[0])
        if len(pieces) == 1:
            return head
        rest = tuple(a - b for a, b in zip(s, pieces[0]))
        return head * self.monomial_image(rest)

    def inverse(self):
        return _invert_monomial_map(self)


def _invert_monomial_map(g: AutoSpec) -> GeneratorImages:
    """Inverse of an automorphism sending each generator to c * monomial."""
    images = {}
    for s, img in g.generator_images().items():
        if not img.is_monomial():
            raise ValueError(f"{g.kind}: inverse only available for monomial maps")
        t, c = img.leading()
        images[t] = SkewElement.monomial(s, g.P, c.inverse())
    if len(images) != len(list(compositions(g.P.v, g.P.n))):
        raise ValueError(f"{g.kind} does not permute the degree-v monomials")
    return GeneratorImages(g.P, images)


def compose(g: AutoSpec, h: AutoSpec) -> GeneratorImages:
    """g after h, lowered to generator images."""
    if g.P != h.P:
        raise ValueError("automorphisms of different rings")
    return GeneratorImages(g.P, {s: apply_auto(g, img, check=False) for s, img in h.generator_images().items()})


def identity(P: RingParams) -> Scaling:
    return Scaling(P)


def apply_auto(g: AutoSpec, a: SkewElement, check: bool = True) -> SkewElement:
    if check:
        g.check_applicable()
        if not in_veronese(a, g.P):
            raise ValueError("automorphisms act on the Veronese ring only")
    out = SkewElement(g.P)
    for s, c in a.terms.items():
        out = out + g.monomial_image(s).scale(c)
    return out


# ---------------------------------------------------------------------------
# derivations


class Derivation:
    """A derivation of k_q[x] determined by the images of the x_i.

    ``P`` is the ambient ring; ``P.m == 1`` means the commutative polynomial ring.
    """

    def __init__(self, P: RingParams, images: Mapping[int, SkewElement], name: str = "d"):
        self.P = P
        self.name = name
        self.images = {i: images.get(i, SkewElement(P)) for i in range(P.n)}

    def of_monomial(self, s: Sequence[int]) -> SkewElement:
        """Leibniz expansion along the normal-ordered word of x^s."""
        P = self.P
        word = [i for i, e in enumerate(s) for _ in range(e)]
        out = SkewElement(P)
        for pos, i in enumerate(word):
            d = self.images[i]
            if not d:
                continue
            prefix = [0] * P.n
            for j in word[:pos]:
                prefix[j] += 1
            suffix = [0] * P.n
            for j in word[pos + 1 :]:
                suffix[j] += 1
            out = out + SkewElement.monomial(prefix, P) * d * SkewElement.monomial(suffix, P)
        return out

    def __call__(self, a: SkewElement) -> SkewElement:
        out = SkewElement(self.P)
        for s, c in a.terms.items():
            out = out + self.of_monomial(s).scale(c)
        return out

    def satisfies_relations(self) -> bool:
        """d(x_j x_i - q x_i x_j) == 0 for all i < j."""
        P = self.P
        x = [SkewElement.gen(i, P) for i in range(P.n)]
        q = P.q()
        for i in range(P.n):
            for j in range(i + 1, P.n):
                di, dj = self.images[i], self.images[j]
                lhs = dj * x[i] + x[j] * di
                rhs = (di * x[j] + x[i] * dj).scale(q)
                if lhs != rhs:
                    return False
        return True

    def squares_to_zero(self) -> bool:
        return all(not self(img) for img in self.images.values())

    @property
    def degree(self) -> int | None:
        """Common degree shift deg d(x_i) - 1, or None if not homogeneous."""
        degs = set()
        for img in self.images.values():
            degs |= {d - 1 for d in img.degrees()}
        return degs.pop() if len(degs) == 1 else None

    def scaled(self, c) -> "Derivation":
        return Derivation(self.P, {i: img.scale(c) for i, img in self.images.items()}, self.name)

    def is_zero(self) -> bool:
        return not any(self.images.values())


def solve_degree_equation(m: int, v: int, s: int) -> tuple[int, int]:
    """Smallest positive (alpha, beta) with (alpha + s) m - beta v = 1, scanning beta."""
    if gcd(m, v) != 1:
        raise ValueError(f"needs gcd(m, v) = 1, got m={m}, v={v}")
    beta = 1
    while True:
        num = 1 + beta * v
        if num % m == 0 and num // m - s >= 1:
            return num // m - s, beta
        beta += 1


def odd_free_derivations(P: RingParams) -> tuple[Derivation, Derivation]:
    """The pair (d_1, d_3) for odd n and gcd(m, v) = 1.

    d_1(x_1) = x_2^{alpha m} (x_2 x_3^{m-1} x_4 x_5^{m-1} ... x_{n-1} x_n^{m-1}),
    d_3(x_3) = x_2^{alpha m} (x_1^{m-1} x_2 x_4 x_5^{m-1} ... x_{n-1} x_n^{m-1}),
    all other generators killed.
    """
    n, m = P.n, P.m
    if not P.odd or n < 3:
        raise ValueError("odd-n construction needs n odd, n >= 3")
    s = (n - 1) // 2
    alpha, _ = solve_degree_equation(m, P.v, s)
    tail = [(k, 1 if k % 2 == 1 else m - 1) for k in range(3, n)]  # x_4 x_5^{m-1} ...
    lead = SkewElement.monomial(unit_vector(1, n, alpha * m), P)

    def word(factors):
        e, t = ordered_power_product(factors, n)
        return SkewElement.monomial(t, P, P.q(e))

    img1 = lead * word([(1, 1), (2, m - 1)] + tail)
    img3 = lead * word([(0, m - 1), (1, 1)] + tail)
    return Derivation(P, {0: img1}, "d1"), Derivation(P, {2: img3}, "d3")


def rank_two_free_derivations(P: RingParams) -> tuple[Derivation, Derivation]:
    """d_1: x_1 -> x_2^{v+1} and d_2: x_2 -> x_1^{v+1} on k[x_1, x_2] (commutative)."""
    if P.n != 2 or P.v % P.m:
        raise ValueError("rank-two construction needs n = 2 and m | v")
    C = RingParams(2, 1, P.v)
    d1 = Derivation(C, {0: SkewElement.monomial((0, P.v + 1), C)}, "d1")
    d2 = Derivation(C, {1: SkewElement.monomial((P.v + 1, 0), C)}, "d2")
    return d1, d2


def _commutative_twist(s: Sequence[int]) -> int:
    # x^s -> q^{C(s_2, 2)} X^s identifies k_q[x1,x2]^(v) with k[X1,X2]^(v) when m | v
    return comb(s[1], 2)


class ExpDerivation(GeneratorImages):
    """exp(scale * d), restricted to the Veronese ring and lowered to generator images.

    ``d`` has d^2(x_i) = 0, so exp(d)(x_i) = x_i + d(x_i).  A derivation on the
    commutative ring (m = 1) is transported to n = 2, m | v through the
    identification x^s <-> q^{C(s_2, 2)} X^s.
    """

    kind = "exp_derivation"

    def __init__(self, P: RingParams, d: Derivation, scale=1):
        super().__init__(P)
        if d.P.n != P.n or d.P.m not in (P.m, 1):
            raise ValueError("derivation lives in an incompatible ring")
        if d.P.m != P.m and (P.n != 2 or P.v % P.m):
            raise ValueError("commutative transport needs n = 2 and m | v")
        self.d = d
        self.scale = scale
        self._lin = {
            i: SkewElement.gen(i, d.P) + d.images[i].scale(scale) for i in range(P.n)
        }

    def _ambient_image(self, s: Sequence[int]) -> SkewElement:
        # substitute x_i -> x_i + scale * d(x_i) in the normal-ordered word
        acc = SkewElement.scalar(1, self.d.P)
        for i, e in enumerate(s):
            for _ in range(e):
                acc = acc * self._lin[i]
        return acc

    def generator_image(self, t):
        img = self._images.get(t)
        if img is None:
            amb = self._ambient_image(t)
            if self.d.P.m == self.P.m:
                img = SkewElement(self.P, amb.terms)
            else:
                base = _commutative_twist(t)
                terms = {}
                for u, c in amb.terms.items():
                    assert not any(c.coeffs[1:])
                    terms[u] = self.P.q(base - _commutative_twist(u)) * c.coeffs[0]
                img = SkewElement(self.P, terms)
            self._images[t] = img
        return img

    def inverse(self):
        return ExpDerivation(self.P, self.d, -self.scale)

    def describe(self):
        return {"kind": self.kind, "derivation": self.d.name, "scale": str(self.scale)}


def exp_derivation(d: Derivation, P: RingParams, scale=1) -> ExpDerivation:
    if not d.satisfies_relations():
        raise ValueError(f"{d.name} does not respect the defining relations")
    if not d.squares_to_zero():
        raise ValueError(f"{d.name} does not satisfy d^2(x_i) = 0")
    shift = d.degree
    if not d.is_zero() and (shift is None or shift % P.v):
        raise ValueError(f"{d.name} is not homogeneous of degree divisible by v")
    return ExpDerivation(P, d, scale)


def free_generators(P: RingParams) -> tuple[ExpDerivation, ExpDerivation]:
    """The free-subgroup generator pair for the given parameters."""
    if P.odd and gcd(P.m, P.v) == 1:
        d1, d3 = odd_free_derivations(P)
        return exp_derivation(d1, P), exp_derivation(d3, P)
    if P.n == 2 and P.v % P.m == 0:
        d1, d2 = rank_two_free_derivations(P)
        return exp_derivation(d1, P), exp_derivation(d2, P)
    raise InapplicableAutomorphism(
        f"no free-subgroup construction for n={P.n}, m={P.m}, v={P.v}: "
        "need n odd with gcd(m, v) = 1, or n = 2 with m | v"
    )


# ---------------------------------------------------------------------------
# verification


def _lowest_part(el: SkewElement) -> SkewElement:
    return el.homogeneous_part(min(el.degrees())) if el else el


def _full_rank(rows: list[dict[Exps, CycScalar]], cols: list[Exps], m: int) -> bool:
    """Gaussian elimination over Q(q)."""
    mat = [[r.get(c, CycScalar.zero(m)) for c in cols] for r in rows]
    rank, ncols = 0, len(cols)
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = mat[rank][col].inverse()
        for i in range(rank + 1, len(mat)):
            if mat[i][col]:
                f = mat[i][col] * inv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank == len(rows) == ncols


def filtered_invertible(g: AutoSpec, D: int) -> bool:
    """The lowest-degree parts of the images give a bijection on each degree Nv <= D."""
    P = g.P
    for d in range(P.v, D + 1, P.v):
        monos = list(compositions(d, P.n))
        leads = []
        for s in monos:
            img = g.monomial_image(s)
            if not img or min(img.degrees()) != d:
                return False
            leads.append(_lowest_part(img))
        if all(x.is_monomial() for x in leads):
            if len({x.leading()[0] for x in leads}) != len(monos):
                return False
        elif not _full_rank([x.terms for x in leads], monos, P.m):
            return False
    return True


def find_homomorphism_violation(g: AutoSpec, D: int) -> tuple[Exps, Exps] | None:
    P = g.P
    monos = veronese_monomials_up_to(D, P, start=P.v)
    for a in monos:
        ga = g.monomial_image(a)
        for b in monos:
            e = twist(a, b)
            lhs = g.monomial_image(add_exps(a, b))
            if e % P.m:
                lhs = lhs.scale(P.q(e))
            if lhs != ga * g.monomial_image(b):
                return a, b
    return None


def verify_homomorphism(g: AutoSpec, D: int) -> bool:
    """Multiplicativity on all pairs of Veronese monomials of degree in [v, D],
    plus invertibility of the associated graded map up to degree D.

    The Veronese ring is generated in degree v with relations in degree 2v,
    so D >= 2v already decides well-definedness; larger D is a cross-check.
    """
    if D < 2 * g.P.v:
        raise ValueError("degree bound must be at least 2v")
    return find_homomorphism_violation(g, D) is None and filtered_invertible(g, D)


def check_discriminant_invariance(g: AutoSpec, Q: QuasiBasis, p: int) -> bool:
    res = p_power_discriminant(p, Q)
    if not res.in_veronese_flag:
        raise ValueError("the p-power discriminant does not exist in the Veronese ring")
    return equal_up_to_unit(apply_auto(g, res.witness), res.witness)


# ---------------------------------------------------------------------------
# words in two generators

LETTERS = ("a", "A", "b", "B")  # a = g1, A = g1^-1, b = g2, B = g2^-1
_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}


def reduced_words(max_len: int) -> list[str]:
    """Nonempty freely reduced words of length <= max_len, by length then lex."""
    out, layer = [], [""]
    for _ in range(max_len):
        layer = [w + x for w in layer for x in LETTERS if not w or _INVERSE[w[-1]] != x]
        out.extend(layer)
    return out


def word_label(word: str) -> str:
    names = {"a": "g1", "A": "g1^-1", "b": "g2", "B": "g2^-1"}
    return " ".join(names[x] for x in word)


def evaluate_word(word: str, autos: Mapping[str, AutoSpec], a: SkewElement) -> SkewElement:
    """Apply the composite l_1 o l_2 o ... o l_k (rightmost letter first)."""
    for letter in reversed(word):
        a = apply_auto(autos[letter], a, check=False)
    return a


def _truncate(a: SkewElement, T: int) -> SkewElement:
    return SkewElement(a.P, {s: c for s, c in a.terms.items() if sum(s) <= T})


def _degree_nondecreasing(g: AutoSpec) -> bool:
    return all(min(img.degrees(), default=g.P.v) >= g.P.v for img in g.generator_images().values())


def free_word_check(g1: AutoSpec, g2: AutoSpec, L: int, D: int | None = None) -> list[str]:
    """Reduced words of length <= L acting as the identity on Veronese
    monomials of degree v..D (default: the degree-v generators, which
    already decide it).  An empty list means no short relation.

    When every letter sends degree d into degrees >= d, words are first
    screened modulo terms of high degree, which is exact for rejection.
    """
    P = g1.P
    D = P.v if D is None else D
    autos = {"a": g1, "A": g1.inverse(), "b": g2, "B": g2.inverse()}
    tests = [SkewElement.monomial(s, P) for s in veronese_monomials_up_to(D, P, start=P.v)]

    def evaluator(T: int | None):
        memo: dict[tuple[str, int], SkewElement] = {}

        def value(word: str, k: int) -> SkewElement:
            # word(x_k) = first letter applied to (rest of word)(x_k), shared across words
            if not word:
                return tests[k]
            key = (word, k)
            if key not in memo:
                out = apply_auto(autos[word[0]], value(word[1:], k), check=False)
                memo[key] = out if T is None else _truncate(out, T)
            return memo[key]

        return lambda w: all(value(w, k) == x for k, x in enumerate(tests))

    words = reduced_words(L)
    if all(_degree_nondecreasing(g) for g in autos.values()):
        top = max(max(img.degrees(), default=0) for g in autos.values() for img in g.generator_images().values())
        screen = evaluator(D + top)
        words = [w for w in words if screen(w)]
    exact = evaluator(None)
    return [w for w in words if exact(w)]


def commutator(word_a: str = "a", word_b: str = "b") -> str:
    inv = lambda w: "".join(_INVERSE[x] for x in reversed(w))
    return word_a + word_b + inv(word_a) + inv(word_b)


# ---------------------------------------------------------------------------
# permutation rigidity


def commutation_compatible(perm: Sequence[int], P: RingParams) -> bool:
    """Whether s -> pi(s) preserves the q-commutation factors of all pairs of
    degree-v monomials.  Necessary for any automorphism with pi_g = pi,
    whatever its scalars."""
    gens = list(compositions(P.v, P.n))
    images = {s: permute_vector(s, perm) for s in gens}
    for i, s in enumerate(gens):
        for t in gens[i + 1 :]:
            if (commutator_exponent(s, t) - commutator_exponent(images[s], images[t])) % P.m:
                return False
    return True


def r_factor_compatible(perm: Sequence[int], P: RingParams) -> bool:
    """Only the relations (x_i^{v-1} x_j) x_i^v = r_ij x_i^v (x_i^{v-1} x_j)."""
    n, v = P.n, P.v
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            s = add_exps(unit_vector(i, n, v - 1), unit_vector(j, n))
            t = unit_vector(i, n, v)
            ps, pt = permute_vector(s, perm), permute_vector(t, perm)
            if (commutator_exponent(s, t) - commutator_exponent(ps, pt)) % P.m:
                return False
    return True


def compatible_permutations(P: RingParams) -> list[tuple[int, ...]]:
    return [p for p in permutations(range(P.n)) if commutation_compatible(p, P)]


def is_cyclic_shift(perm: Sequence[int]) -> bool:
    n = len(perm)
    k = perm[0] % n
    return all(perm[i] == (i + k) % n for i in range(n))


def permutation_of(g: AutoSpec) -> tuple[int, ...] | None:
    """pi_g read off from g(x_i^v) = c x_j^v, or None if some image is not of that shape."""
    P = g.P
    perm = []
    for i in range(P.n):
        img = g.monomial_image(unit_vector(i, P.n, P.v))
        if not img.is_monomial():
            return None
        t, _ = img.leading()
        js = [j for j, e in enumerate(t) if e]
        if len(js) != 1 or t[js[0]] != P.v:
            return None
        perm.append(js[0])
    return tuple(perm)


def fixes_product_power(g: AutoSpec, a: int = 1) -> bool:
    """g((x_1^v ... x_n^v)^a) is a scalar multiple of itself."""
    P = g.P
    target = SkewElement.monomial((P.v * a,) * P.n, P)
    return equal_up_to_unit(apply_auto(g, target, check=False), target)


def sample_scalings(P: RingParams) -> list[Scaling]:
    """A few deterministic scaling automorphisms with mixed scalars."""
    q = P.q()
    half = CycScalar.from_rational(P.m, 1) / 2
    out = [Scaling(P)]
    out.append(Scaling(P, 2, [3 + i for i in range(P.n - 1)]))
    out.append(Scaling(P, q + 2, [q ** (i + 1) if P.m > 1 else half for i in range(P.n - 1)]))
    return out


def all_permutations(P: RingParams) -> list[Permutation]:
    return [Permutation(P, p) for p in permutations(range(P.n))]


def all_twisted_shifts(P: RingParams) -> list[TwistedShift]:
    return [TwistedShift(P, k) for k in range(1, P.n)]
