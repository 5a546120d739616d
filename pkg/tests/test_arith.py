from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordanum.arith import (
    CycElt,
    RatPoly,
    cyc_add,
    cyc_inverse,
    cyc_mul,
    cyc_neg,
    cyclotomic_polynomial,
    divisors,
    euler_phi,
    galois_apply,
    is_prime,
    kronecker_symbol,
    squarefree_part,
    sqrt_element,
)
from jordanum.errors import NotCoprime, ZeroInput, ZeroInverse

z = CycElt.zeta


def q(x) -> CycElt:
    return CycElt.rational(x)


# -- cyclotomic polynomials ---------------------------------------------------


@pytest.mark.parametrize(
    "M, coeffs",
    [(1, [-1, 1]), (6, [1, -1, 1]), (8, [1, 0, 0, 0, 1])],
)
def test_cyclotomic_polynomial_examples(M, coeffs):
    assert cyclotomic_polynomial(M) == RatPoly(coeffs)


@pytest.mark.parametrize("M", range(1, 61))
def test_phi_vanishes_at_zeta(M):
    Phi = cyclotomic_polynomial(M)
    assert Phi.degree == euler_phi(M)
    assert all(c.denominator == 1 for c in Phi.coeffs)
    total = q(0)
    for k, c in enumerate(Phi.coeffs):
        total = total + z(M, k) * c
    assert total.is_zero()


@pytest.mark.parametrize("n", range(1, 31))
def test_product_of_cyclotomic_polynomials(n):
    prod = RatPoly([1])
    for d in divisors(n):
        prod = prod * cyclotomic_polynomial(d)
    assert prod == RatPoly([-1] + [0] * (n - 1) + [1])


# -- multiplication, inversion, Galois action ----------------------------------


def test_mul_examples():
    w = z(3)
    assert cyc_mul(w, w) == CycElt(3, [-1, -1])
    assert cyc_mul(z(4), z(4)) == q(-1)
    s = w - w * w
    assert s * s == q(-3)


def test_inverse_examples():
    assert cyc_inverse(z(4)) == -z(4)
    assert cyc_inverse(1 + z(3)) == -z(3)
    assert cyc_inverse(q(2)) == q(Fraction(1, 2))
    with pytest.raises(ZeroInverse):
        cyc_inverse(q(0))


def test_companions():
    a, b = z(5), z(3)
    assert cyc_add(a, b) == a + b
    assert cyc_neg(a) + a == q(0)


def test_galois_examples():
    assert galois_apply(2, z(5)) == z(5, 2)
    sym = z(5) + z(5, -1)
    assert galois_apply(-1, sym) == sym
    s = z(3) - z(3, 2)
    assert galois_apply(2, s) == -s
    assert galois_apply(7, q(Fraction(3, 4))) == q(Fraction(3, 4))
    with pytest.raises(NotCoprime):
        galois_apply(2, z(4))


def test_sqrt_element_squares():
    for r in (2, -1, -3, 5, -7, Fraction(5, 9), -12):
        s = sqrt_element(r)
        assert s * s == q(r)


def test_cross_level_equality_and_hash():
    assert z(3) == z(6, 2)
    assert hash(z(3)) == hash(z(6, 2))
    assert z(4) * z(3) == z(12, 7)


levels = st.sampled_from([1, 3, 4, 5, 7, 8, 9, 12, 15, 20, 24, 60])
small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cyc(draw):
    M = draw(levels)
    return CycElt(M, draw(st.lists(small, min_size=euler_phi(M), max_size=euler_phi(M))))


@settings(max_examples=60, deadline=None)
@given(cyc(), cyc(), cyc())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a * q(1) == a


@settings(max_examples=60, deadline=None)
@given(cyc())
def test_inverse_property(a):
    if a.is_zero():
        return
    assert (a * a.inverse()).is_one()


@settings(max_examples=40, deadline=None)
@given(cyc(), st.sampled_from([2, 3, 5]))
def test_lift_then_descend_round_trip(a, k):
    lifted = a.lift(a.level * k)
    assert lifted == a
    back = lifted.descend()
    assert back == a
    assert a.level % back.level == 0
    assert back.lift(a.level).coeffs == a.coeffs


@settings(max_examples=40, deadline=None)
@given(cyc(), st.integers(1, 200), st.integers(1, 200))
def test_galois_composition(a, h1, h2):
    M = a.level
    from math import gcd

    if gcd(h1, M) != 1 or gcd(h2, M) != 1:
        return
    assert galois_apply(h1, galois_apply(h2, a)) == galois_apply((h1 * h2) % M, a)


# -- characters and squarefree parts --------------------------------------------


def test_kronecker_examples():
    assert all(kronecker_symbol(1, n) == 1 for n in range(1, 40))
    assert kronecker_symbol(2, 7) == 1
    assert kronecker_symbol(-3, 5) == -1


@pytest.mark.parametrize("p", [p for p in range(3, 500) if is_prime(p)])
def test_kronecker_matches_residues(p):
    residues = {(x * x) % p for x in range(1, p)}
    for a in range(-p, 2 * p):
        expected = 0 if a % p == 0 else (1 if a % p in residues else -1)
        assert kronecker_symbol(a, p) == expected


def test_kronecker_multiplicative():
    for a in range(-12, 13):
        for b in range(-12, 13):
            for n in (3, 8, 15, 20, 21):
                assert kronecker_symbol(a * b, n) == kronecker_symbol(a, n) * kronecker_symbol(b, n)


@pytest.mark.parametrize(
    "r, s, qq",
    [(8, 2, 2), (-12, -3, 2), (Fraction(5, 9), 5, Fraction(1, 3))],
)
def test_squarefree_part_examples(r, s, qq):
    assert squarefree_part(r) == (s, Fraction(qq))


@settings(max_examples=100, deadline=None)
@given(st.fractions(max_denominator=500).filter(lambda x: x != 0))
def test_squarefree_part_identity(r):
    s, qq = squarefree_part(r)
    assert r == s * qq * qq
    assert (s > 0) == (r > 0)
    assert all(s % (p * p) for p in range(2, 60))


def test_squarefree_part_zero():
    with pytest.raises(ZeroInput):
        squarefree_part(0)
