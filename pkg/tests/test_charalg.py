from collections import Counter
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from irrlat.charalg import (
    INFINITY,
    Character,
    char,
    decompose,
    decompose_a1,
    decompose_a2,
    irr_char_a1,
    irr_dim,
    tensor,
    tilting_char_a1,
    twist,
    weyl_char,
    weyl_char_a1,
    weyl_dim,
)
from irrlat.charalg.a1 import char_of_factors, digits
from irrlat.errors import NotACharacter, OutOfSupportedRange, RankMismatch, TwistInCharZero, UnsupportedType

PRIMES = [2, 3, 5, 7, 11, 13]


def A(d):
    return Character.a1(d)


def lucas_char(n, p):
    # weights n-2k with C(n,k) nonzero mod p; independent of the digit product
    return A({n - 2 * k: 1 for k in range(n + 1) if comb(n, k) % p})


def test_weyl_examples():
    assert weyl_char_a1(0) == A({0: 1})
    assert weyl_char_a1(2) == A({2: 1, 0: 1, -2: 1})
    assert weyl_char_a1(5) == A({d: 1 for d in (5, 3, 1, -1, -3, -5)})


def test_irr_examples():
    assert irr_char_a1(3, 2) == A({3: 1, 1: 1, -1: 1, -3: 1})
    assert irr_char_a1(4, 3) == A({4: 1, 2: 1, -2: 1, -4: 1})
    assert irr_char_a1(6, 7) == weyl_char_a1(6)
    assert irr_char_a1(9, INFINITY) == weyl_char_a1(9)


@pytest.mark.parametrize("p", PRIMES)
def test_irr_matches_lucas_oracle(p):
    for n in range(61):
        assert irr_char_a1(n, p) == lucas_char(n, p), n


def test_tilting():
    assert tilting_char_a1(3, 3) == A({3: 1, 1: 2, -1: 2, -3: 1})
    assert tilting_char_a1(2, 2) == A({2: 1, 0: 2, -2: 1})
    assert tilting_char_a1(1, 5) == weyl_char_a1(1)
    with pytest.raises(OutOfSupportedRange):
        tilting_char_a1(5, 3)


def test_twist():
    assert twist(A({1: 1, -1: 1}), 1, 2) == A({2: 1, -2: 1})
    assert twist(weyl_char_a1(2), 1, 3) == A({6: 1, 0: 1, -6: 1})
    c = weyl_char_a1(4)
    assert twist(c, 0, INFINITY) == c
    with pytest.raises(TwistInCharZero):
        twist(c, 1, INFINITY)


def test_tensor():
    assert tensor(weyl_char_a1(1), weyl_char_a1(1)) == A({2: 1, 0: 2, -2: 1})
    assert tensor(weyl_char_a1(2), weyl_char_a1(2)) == A({4: 1, 2: 2, 0: 3, -2: 2, -4: 1})
    assert tensor(weyl_char_a1(3), Character.trivial()) == weyl_char_a1(3)
    with pytest.raises(RankMismatch):
        tensor(weyl_char_a1(1), weyl_char("A2", (1, 0)))


def test_decompose_examples():
    sq = lambda n, p: tensor(irr_char_a1(n, p), irr_char_a1(n, p))
    assert decompose_a1(sq(2, 5), 5) == Counter({4: 1, 2: 1, 0: 1})
    assert decompose_a1(sq(2, 3), 3) == Counter({4: 1, 2: 1, 0: 2})
    assert decompose_a1(tensor(irr_char_a1(1, 7), irr_char_a1(5, 7)), 7) == Counter({6: 1, 4: 1})
    assert decompose_a1(weyl_char_a1(4), 3) == Counter({4: 1, 0: 1})


def test_decompose_rejects_garbage():
    with pytest.raises(NotACharacter):
        decompose_a1(A({1: 1}), 5)
    with pytest.raises(NotACharacter):
        decompose_a1(A({2: 1, -2: 1}), 5)  # L(2) needs weight 0


def test_digits():
    assert digits(10, 3) == [1, 0, 1]
    assert digits(0, 5) == []


def test_a2_weyl():
    assert weyl_char("A2", (1, 0)).dim() == 3
    assert all(m == 1 for m in weyl_char("A2", (1, 0)).terms.values())
    adj = weyl_char("A2", (1, 1))
    assert adj.dim() == 8 and adj[(0, 0)] == 2
    assert weyl_char("A1", 3) == weyl_char_a1(3)
    assert weyl_dim("A2", (2, 1)) == 15
    with pytest.raises(UnsupportedType):
        weyl_char("Z9", (1,))


def test_a2_decompose():
    lr = tensor(weyl_char("A2", (1, 0)), weyl_char("A2", (0, 1)))
    assert decompose_a2(lr, INFINITY) == Counter({(1, 1): 1, (0, 0): 1})
    assert decompose_a2(weyl_char("A2", (1, 1)), 3) == Counter({(1, 1): 1, (0, 0): 1})
    assert decompose_a2(weyl_char("A2", (1, 1)), 2) == Counter({(1, 1): 1})
    assert irr_dim("A2", (1, 1), 3) == 7


def test_characteristic():
    assert char("inf") is INFINITY or char("inf") == INFINITY
    assert char(5) == char("5")
    with pytest.raises(Exception):
        char(4)


# properties

prime = st.sampled_from(PRIMES)
small = st.integers(0, 60)


@given(small, prime)
def test_steinberg_identity(n, p):
    prod = Character.trivial()
    for i, d in enumerate(digits(n, p)):
        prod = tensor(prod, twist(weyl_char_a1(d), i, p))
    assert irr_char_a1(n, p) == prod
    dim = 1
    for d in digits(n, p):
        dim *= d + 1
    assert irr_char_a1(n, p).dim() == dim


@given(st.lists(st.integers(0, 40), min_size=1, max_size=5), prime)
def test_decompose_round_trip(ws, p):
    want = Counter(ws)
    assert decompose_a1(char_of_factors(want, p), p) == want


@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 2), prime)
def test_twist_multiplicative(a, b, r, p):
    x, y = weyl_char_a1(a), irr_char_a1(b, p)
    assert twist(tensor(x, y), r, p) == tensor(twist(x, r, p), twist(y, r, p))


@given(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10))
def test_tensor_commutative_associative(a, b, c):
    x, y, z = weyl_char_a1(a), weyl_char_a1(b), weyl_char_a1(c)
    assert tensor(x, y) == tensor(y, x)
    assert tensor(tensor(x, y), z) == tensor(x, tensor(y, z))


@given(st.integers(0, 60), st.sampled_from(PRIMES + ["inf"]))
def test_weyl_decomposition_dimension(n, p):
    got = decompose_a1(weyl_char_a1(n), p)
    assert sum(m * irr_char_a1(w, p).dim() for w, m in got.items()) == n + 1


@given(prime, st.data())
def test_tilting_shape(p, data):
    n = data.draw(st.integers(p, 2 * p - 2)) if p > 2 else 2
    got = decompose_a1(tilting_char_a1(n, p), p)
    assert got[n] == 1
    if 2 * p - 2 - n < p:
        assert got[2 * p - 2 - n] >= 2


@given(st.integers(0, 4), st.integers(0, 4), st.sampled_from([2, 3, 5, 7, "inf"]))
def test_a2_decompose_round_trip(a, b, p):
    c = weyl_char("A2", (a, b))
    got = decompose("A2", c, p)
    total = Character.zero(2)
    from irrlat.charalg import irr_char

    for w, m in got.items():
        total = total + irr_char("A2", w, p).scale(m)
    assert total == c
    assert got[(a, b)] == 1
