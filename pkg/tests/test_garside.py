import random

import pytest
from hypothesis import given, settings, strategies as st

from deligne.errors import BallTooLarge, NegativeLetter, TypeMismatch, UnknownGenerator
from deligne.garside import artin_group


@pytest.fixture(scope="module")
def A2():
    return artin_group("A2")


@pytest.fixture(scope="module")
def A3():
    return artin_group("A3")


@pytest.fixture(scope="module")
def D4():
    return artin_group("D4")


def naive_fold(A, word):
    g = A.identity()
    for s, e in word:
        g = A.multiply(g, A.generator(s, e))
    return g


def assert_normal_form(A, g):
    for x in g.factors:
        assert x != A.e and x != A.delta
    for x, y in zip(g.factors, g.factors[1:]):
        assert A.is_left_weighted(x, y)
        assert A.left_desc(y) <= A.right_desc(x)


def test_braid_relation(A2):
    assert A2.from_word([1, 2, 1]) == A2.from_word([2, 1, 2])
    assert A2.from_word([1, 2]) != A2.from_word([2, 1])


def test_identity_and_cancellation(D4):
    assert D4.from_word([]).is_identity
    assert D4.from_word([(1, 1), (1, -1)]).is_identity
    assert D4.from_word(["d1", "d1^-1", "d3", "d3^-1"]).is_identity


def test_unknown_generator(D4):
    with pytest.raises(UnknownGenerator):
        D4.from_word([7])


def test_type_mismatch(A2, D4):
    with pytest.raises(TypeMismatch):
        A2.multiply(A2.identity(), D4.identity())


def test_delta_D4(D4):
    c = D4.from_word([1, 3, 2, 4] * 3)
    assert c == D4.delta_power(1)
    assert D4.central_power() == c
    for s in D4.S:
        assert D4.commute(c, D4.generator(s))


def test_central_power_A2(A2):
    z = A2.central_power()
    assert z == A2.delta_power(2)
    assert not A2.commute(A2.delta_power(1), A2.generator(1))
    for s in A2.S:
        assert A2.commute(z, A2.generator(s))


def test_garside_element(A2, D4):
    assert A2.garside_element() == A2.from_word([1, 2, 1])
    assert D4.garside_element({1, 2}) == D4.from_word([1, 2])
    assert D4.garside_element(set()).is_identity


@pytest.mark.parametrize("name", ["A3", "D4", "D5"])
def test_random_equal_words(name):
    A = artin_group(name)
    rng = random.Random(11)
    for _ in range(400):
        w = A.random_word(rng.randint(0, 14), rng)
        v = A.relator_insertions(w, rng, moves=3)
        g = A.from_word(w)
        assert A.from_word(v) == g
        assert naive_fold(A, w) == g
        assert_normal_form(A, g)
        assert A.multiply(g, A.inverse(g)).is_identity
        assert A.coxeter_image(g) == A.W.from_word(s for s, _ in w)
        assert A.from_word(A.to_letters(g)) == g


def test_associativity_and_inverse(D4):
    rng = random.Random(5)
    for _ in range(200):
        a, b, c = (D4.from_word(D4.random_word(rng.randint(0, 8), rng)) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert ~(a * b) == ~b * ~a


def test_tau_compatibility(D4):
    W = D4.W
    for x in W.elements():
        # Delta x Delta^-1 = tau(x)
        assert D4.delta_power(1) * D4.simple(x) * D4.delta_power(-1) == D4.simple(D4.tau(x))


def test_positive_support(D4):
    assert D4.positive_support([1, 3, 1]) == {1, 3}
    assert D4.positive_support([]) == frozenset()
    with pytest.raises(NegativeLetter):
        D4.positive_support([(1, -1)])


def test_gcd_lcm_A2(A2):
    aba, ab = A2.from_word([1, 2, 1]), A2.from_word([1, 2])
    a, b = A2.generator(1), A2.generator(2)
    assert A2.left_gcd(aba, ab) == ab
    assert A2.left_lcm(a, b) == aba
    assert A2.left_gcd(a, b).is_identity


def test_lattice_properties(A3):
    rng = random.Random(2)
    for _ in range(150):
        p = A3.from_word(A3.random_word(rng.randint(0, 7), rng, positive=True))
        q = A3.from_word(A3.random_word(rng.randint(0, 7), rng, positive=True))
        d = A3.left_gcd(p, q)
        m = A3.left_lcm(p, q)
        assert A3.left_divides(d, p) and A3.left_divides(d, q)
        assert A3.left_divides(p, m) and A3.left_divides(q, m)
        # maximality: no generator extends the gcd
        for s in A3.S:
            ds = d * A3.generator(s)
            assert not (A3.left_divides(ds, p) and A3.left_divides(ds, q))
        # minimality: removing any final letter loses a common multiple
        for s in A3.S:
            ms = m * A3.generator(s, -1)
            if ms.inf >= 0:
                assert not (A3.left_divides(p, ms) and A3.left_divides(q, ms))
        assert A3.left_gcd(p, q) == A3.left_gcd(q, p)


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_fraction_matches_gcd_oracle(name):
    A = artin_group(name)
    rng = random.Random(9)
    for _ in range(400):
        g = A.from_word(A.random_word(rng.randint(0, 12), rng))
        p, q = A.left_fraction(g)
        assert (p, q) == A.left_fraction_by_gcd(g)
        assert p.inf >= 0 and q.inf >= 0
        assert A.multiply(A.inverse(p), q) == g
        assert A.left_gcd(p, q).is_identity


@pytest.mark.parametrize("name", ["A2", "A3"])
def test_membership_oracle(name):
    A = artin_group(name)
    rng = random.Random(4)
    S = list(A.S)
    for _ in range(300):
        X = frozenset(rng.sample(S, rng.randint(1, len(S) - 1)))
        u = A.random_word(rng.randint(0, 6), rng, gens=sorted(X))
        v = A.random_word(rng.randint(0, 6), rng, gens=sorted(X))
        assert A.parabolic_membership(A.from_word(u + v), X)
        t = rng.choice([s for s in S if s not in X])
        g = A.from_word(u + [(t, rng.choice((1, -1)))] + v)
        assert not A.parabolic_membership(g, X)


def test_membership_examples(A3):
    g = A3.from_word([(1, 1), (3, 1), (1, -1)])
    assert A3.parabolic_membership(g, {1, 3})
    assert not A3.parabolic_membership(g, {1})
    assert A3.parabolic_membership(A3.identity(), set())
    assert A3.parabolic_membership(A3.delta_power(-2), A3.S)


def test_coset_representative(D4):
    rng = random.Random(8)
    for _ in range(150):
        X = frozenset(rng.sample(list(D4.S), rng.randint(1, 3)))
        g = D4.from_word(D4.random_word(rng.randint(0, 10), rng))
        a = D4.from_word(D4.random_word(rng.randint(0, 6), rng, gens=sorted(X)))
        r = D4.coset_representative(g, X)
        assert D4.parabolic_membership(D4.left_divide(g, r), X)
        assert D4.coset_representative(g * a, X) == r


def test_product_membership_witness(D4):
    X, Y = frozenset(D4.S) - {1}, frozenset(D4.S) - {3}
    assert D4.product_membership_witness(D4.generator(1), X, Y) is not None
    rng = random.Random(3)
    for _ in range(100):
        a = D4.from_word(D4.random_word(rng.randint(0, 6), rng, gens=sorted(X)))
        b = D4.from_word(D4.random_word(rng.randint(0, 6), rng, gens=sorted(Y)))
        w = D4.product_membership_witness(a * b, X, Y)
        assert w is not None
        assert D4.parabolic_membership(w, X)
        assert D4.parabolic_membership(D4.left_divide(w, a * b), Y)


def test_product_membership_negative():
    A = artin_group("A3")
    # s2 is not in A_{s1} A_{s3}
    assert A.product_membership_witness(A.generator(2), {1}, {3}, radius=2) is None


def test_ball_small(A2, D4):
    A1 = artin_group("A1")
    assert len(list(A1.enumerate_ball(1))) == 3
    assert [g for g in D4.enumerate_ball(0)] == [D4.identity()]
    assert D4.ball_size(1) == 573
    assert len(D4.ball(1)) == 573


def test_ball_properties(A3):
    ball = A3.ball(2)
    assert len(set(ball)) == len(ball) == A3.ball_size(2)
    for g in ball:
        assert abs(g.inf) <= 2 and len(g.factors) <= 2
    assert list(A3.enumerate_ball(2)) == ball


def test_ball_too_large(D4):
    with pytest.raises(BallTooLarge):
        list(D4.enumerate_ball(3, cap=1000))


def test_parabolic_ball(D4):
    T = {2, 3, 4}
    for g in D4.ball(1, T):
        assert D4.parabolic_membership(g, T)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 4), st.sampled_from([1, -1])), max_size=16))
def test_hypothesis_inverse_D4(word):
    A = artin_group("D4")
    g = A.from_word(word)
    assert (g * ~g).is_identity
    assert A.from_word([(s, -e) for s, e in reversed(word)]) == ~g


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 3), st.sampled_from([1, -1])), max_size=12),
       st.lists(st.tuples(st.integers(1, 3), st.sampled_from([1, -1])), max_size=12))
def test_hypothesis_multiplication_A3(u, v):
    A = artin_group("A3")
    assert A.from_word(u) * A.from_word(v) == A.from_word(u + v)


def test_json_round_trip(D4):
    rng = random.Random(1)
    for _ in range(50):
        g = D4.from_word(D4.random_word(10, rng))
        assert D4.from_json(g.to_json()) == g
