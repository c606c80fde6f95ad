import pytest
from hypothesis import given
from hypothesis import strategies as st

from qverona.cyclo import CycScalar
from qverona.skew_ring import (
    RingParams,
    SkewElement,
    compositions,
    degree_v_monomials,
    in_veronese,
    letters,
    mono_mul,
    split_into_generators,
    twist,
    veronese_monomials_up_to,
    word_product,
)

from .strategies import elements, monomials


def rewrite_word(word: list[int], m: int) -> tuple[int, list[int]]:
    """Bubble-sort a word of generator indices, counting q from x_j x_i -> q x_i x_j."""
    word = list(word)
    e = 0
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            if word[k] > word[k + 1]:
                word[k], word[k + 1] = word[k + 1], word[k]
                e += 1
                changed = True
    return e % m, word


def test_mono_mul_examples():
    P2, P3 = RingParams(2, 5), RingParams(3, 5)
    assert mono_mul((1, 0), (0, 1), P2) == (CycScalar.one(5), (1, 1))
    assert mono_mul((0, 1), (1, 0), P2) == (P2.q(), (1, 1))
    assert mono_mul((1, 1, 0), (1, 1, 0), P3) == (P3.q(), (2, 2, 0))


@pytest.mark.parametrize("n,m", [(2, 3), (3, 4), (4, 5)])
@given(data=st.data())
def test_closed_twist_matches_word_rewriting(n, m, data):
    s, t = data.draw(monomials(n)), data.draw(monomials(n))
    e, word = rewrite_word(letters(s) + letters(t), m)
    assert twist(s, t) % m == e
    assert word == letters(tuple(a + b for a, b in zip(s, t)))


def test_element_multiplication_examples():
    P = RingParams(2, 2)
    x1, x2 = SkewElement.gen(0, P), SkewElement.gen(1, P)
    assert (x1 + x2) * 1 == x1 + x2
    assert (x1 + x2) * (x1 + x2) == x1 * x1 + x2 * x2
    P3 = RingParams(2, 3)
    y1, y2 = SkewElement.gen(0, P3), SkewElement.gen(1, P3)
    assert y2 * y1 == (y1 * y2).scale(P3.q())


@pytest.mark.parametrize("n,m", [(2, 2), (3, 3), (4, 4), (5, 6)])
def test_q_commutation_of_generators(n, m):
    P = RingParams(n, m)
    x = [SkewElement.gen(i, P) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            assert x[j] * x[i] == (x[i] * x[j]).scale(P.q())


@pytest.mark.parametrize("P", [RingParams(2, 3), RingParams(3, 2), RingParams(3, 4), RingParams(4, 5)])
@given(data=st.data())
def test_associativity(P, data):
    a, b, c = (data.draw(elements(P)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("P", [RingParams(3, 3, 2), RingParams(2, 4, 3)])
@given(data=st.data())
def test_veronese_closed_under_products(P, data):
    a, b = data.draw(elements(P)), data.draw(elements(P))
    a = SkewElement(P, {s: c for s, c in a.terms.items() if sum(s) % P.v == 0})
    b = SkewElement(P, {s: c for s, c in b.terms.items() if sum(s) % P.v == 0})
    assert in_veronese(a * b, P)


@pytest.mark.parametrize("P", [RingParams(3, 5), RingParams(4, 3)])
@given(data=st.data())
def test_monomial_products_are_nonzero_monomials(P, data):
    s, t = data.draw(monomials(P.n)), data.draw(monomials(P.n))
    prod = SkewElement.monomial(s, P) * SkewElement.monomial(t, P)
    assert prod.is_monomial()
    assert prod.leading()[0] == tuple(a + b for a, b in zip(s, t))


def test_veronese_membership_examples():
    assert in_veronese((1, 1), RingParams(2, 2, 2))
    assert not in_veronese((1, 0), RingParams(2, 2, 2))
    assert in_veronese((1, 1, 1), RingParams(3, 2, 3))


def test_degree_v_monomials_examples():
    assert degree_v_monomials(1, RingParams(2, 2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert degree_v_monomials(1, RingParams(2, 2, 1)) == [(0, 1), (1, 0)]
    assert len(degree_v_monomials(1, RingParams(3, 2, 2))) == 6


def test_veronese_monomials_up_to_ordering():
    out = veronese_monomials_up_to(4, RingParams(2, 3, 2))
    assert out == [(0, 0), (0, 2), (1, 1), (2, 0), (0, 4), (1, 3), (2, 2), (3, 1), (4, 0)]
    assert veronese_monomials_up_to(3, RingParams(2, 3, 2), start=2) == out[1:4]


@given(st.tuples(*[st.integers(0, 4)] * 3), st.integers(1, 3))
def test_split_into_generators_multiplies_back(s, v):
    P = RingParams(3, 5, v)
    if sum(s) % v:
        with pytest.raises(ValueError):
            split_into_generators(s, P)
        return
    pieces = split_into_generators(s, P)
    assert all(sum(p) == v for p in pieces)
    if pieces:
        assert word_product([SkewElement.monomial(p, P) for p in pieces]) == SkewElement.monomial(s, P)


def test_json_round_trip():
    P = RingParams(3, 3)
    a = SkewElement(P, {(1, 0, 2): P.q(), (0, 0, 0): 5})
    assert SkewElement.from_json(a.to_json(), P) == a


def test_parameter_validation():
    for bad in [(1, 2, 1), (2, 0, 1), (2, 2, 0)]:
        with pytest.raises(ValueError):
            RingParams(*bad)


def test_compositions_count():
    assert sum(1 for _ in compositions(6, 4)) == 84
