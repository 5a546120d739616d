import itertools
from fractions import Fraction

import pytest

from conftest import random_descriptors
from jordanum.arith import CycElt, galois_apply, is_prime, sqrt_element
from jordanum.constructions import subfields, sum_two_squares_witness
from jordanum.errors import NotOddPrime, ZeroRadicand
from jordanum.fields import (
    CC,
    QQ,
    RR,
    compositum,
    cyclotomic_field,
    element_in_field,
    function_field,
    is_subfield,
    quadratic_field,
)
from jordanum.oracle import (
    PropertyVector,
    decomposition_data,
    exists_2zeta2_root_of_unity,
    has_real_cyclotomic,
    has_real_cyclotomic_element,
    has_sqrt,
    has_sqrt_element,
    has_zeta,
    has_zeta_element,
    minus_one_sum_two_squares,
    pgl3_cyclic_witness,
    pgl3_has_cyclic_of_order,
    property_vector,
    property_vector_element,
)

Q_I = cyclotomic_field(4)
Q_OMEGA = cyclotomic_field(3)
Q_SQRT5 = quadratic_field(5)
Q_SQRT_M7 = quadratic_field(-7)


def test_has_sqrt_examples():
    assert has_sqrt(cyclotomic_field(5), 5)
    assert has_sqrt(cyclotomic_field(7), -7)
    assert not has_sqrt(quadratic_field(-5), 2)
    assert has_sqrt(RR, 2) and not has_sqrt(RR, -2)
    assert has_sqrt(CC, -3)
    assert has_sqrt(QQ, Fraction(9, 4))
    with pytest.raises(ZeroRadicand):
        has_sqrt(QQ, 0)


def test_has_zeta_examples():
    assert has_zeta(quadratic_field(-3), 3)
    assert not has_zeta(Q_SQRT5, 3)
    assert has_zeta(CC, 97)
    assert has_zeta(RR, 2) and not has_zeta(RR, 4)


def test_sum_two_squares_examples():
    assert minus_one_sum_two_squares(Q_I)
    w = CycElt.zeta(3)
    assert (w * w) ** 2 + w * w == CycElt.rational(-1)
    assert minus_one_sum_two_squares(Q_OMEGA)
    assert not minus_one_sum_two_squares(Q_SQRT_M7)
    assert not minus_one_sum_two_squares(quadratic_field(-15))
    assert minus_one_sum_two_squares(quadratic_field(-5))
    assert minus_one_sum_two_squares(CC) and not minus_one_sum_two_squares(RR)
    assert not minus_one_sum_two_squares(QQ)
    assert minus_one_sum_two_squares(function_field(Q_I))


def test_decomposition_data_invariants():
    for K in random_descriptors(40, seed=21):
        D = decomposition_data(K)
        assert D.prime == 2
        assert len(D.group) % D.local_degree == 0


def _small_signed(height):
    vals = {Fraction(n, d) for d in range(1, height + 1) for n in range(-height, height + 1)}
    return sorted(vals)


def test_sqrt_minus7_has_no_small_witness():
    # a = x + y s, b = u + v s with s^2 = -7; need x^2 - 7y^2 + u^2 - 7v^2 = -1 and xy + uv = 0
    vals = _small_signed(4)
    squares = {v: v * v for v in vals}
    pairs = [(x, y, squares[x] - 7 * squares[y], x * y) for x in vals for y in vals]
    by_rational: dict = {}
    for x, y, r, c in pairs:
        by_rational.setdefault((r, c), []).append((x, y))
    for x, y, r, c in pairs:
        assert (-1 - r, -c) not in by_rational


def test_two_zeta_examples():
    assert exists_2zeta2_root_of_unity(quadratic_field(2))
    assert exists_2zeta2_root_of_unity(Q_I)
    zeta = (1 + CycElt.zeta(4)) * Fraction(1, 2)
    assert (2 * zeta * zeta) == CycElt.zeta(4)
    assert not exists_2zeta2_root_of_unity(Q_OMEGA)
    assert exists_2zeta2_root_of_unity(RR) and exists_2zeta2_root_of_unity(CC)


def test_real_cyclotomic_examples():
    assert has_real_cyclotomic(QQ, 3)
    assert not has_real_cyclotomic(QQ, 5)
    assert has_real_cyclotomic(Q_SQRT5, 5)
    assert has_real_cyclotomic(QQ, 4) and has_real_cyclotomic(QQ, 6)
    with pytest.raises(ValueError):
        has_real_cyclotomic(QQ, 2)


def test_property_vector_examples():
    assert property_vector(QQ) == PropertyVector(False, False, False, False, False, False, False)
    p = property_vector(compositum(Q_I, Q_SQRT5))
    assert p.sum_two_squares and p.has_sqrt5 and p.has_2zeta2_rou
    assert not p.has_omega and not p.has_sqrt_minus7
    r = property_vector(RR)
    assert r.as_dict() == {
        "sum_two_squares": False, "has_sqrt5": True, "has_omega": False,
        "has_sqrt_minus7": False, "has_2zeta2_rou": True, "has_sqrt2": True,
        "has_sqrt_minus2": False,
    }
    assert property_vector(function_field(Q_SQRT5)) == property_vector(Q_SQRT5)


def test_unrealizable_vector_detected():
    p = PropertyVector(False, False, True, False, False, False, False)
    assert not p.is_realizable()
    assert p.violations() == ["has_omega => sum_two_squares"]


# -- dual paths ------------------------------------------------------------------

RANDOM_FIELDS = random_descriptors(200, max_m=120)


def test_dual_path_property_vectors():
    for K in RANDOM_FIELDS:
        fast = property_vector(K)
        assert fast == property_vector_element(K), K
        assert fast.is_realizable(), K


def test_dual_path_single_predicates():
    for K in RANDOM_FIELDS[:80]:
        for r in (2, -1, 3, -3, 5, -7, 6):
            assert has_sqrt(K, r) == has_sqrt_element(K, r)
        for n in (3, 4, 5, 8, 12):
            assert has_zeta(K, n) == has_zeta_element(K, n)
        for r in (3, 5, 7, 8, 12):
            assert has_real_cyclotomic(K, r) == has_real_cyclotomic_element(K, r)


def test_predicates_monotone():
    fields = RANDOM_FIELDS[:40]
    for L, K in itertools.product(fields, repeat=2):
        if not is_subfield(L, K):
            continue
        pL, pK = property_vector(L), property_vector(K)
        for name, flag in pL.as_dict().items():
            assert not flag or getattr(pK, name), (L, K, name)
        for r in (5, 7, 8):
            assert not has_real_cyclotomic(L, r) or has_real_cyclotomic(K, r)


# -- explicit witnesses ------------------------------------------------------------


def _fields_up_to(max_m):
    found = set()
    for m in range(1, max_m + 1):
        found.update(subfields(cyclotomic_field(m)))
    return sorted(found, key=lambda K: (K.m, K.H))


def test_sum_two_squares_witnesses_up_to_conductor_40():
    positives = 0
    for K in _fields_up_to(40):
        if not minus_one_sum_two_squares(K):
            continue
        positives += 1
        a, b = sum_two_squares_witness(K)
        assert a * a + b * b == CycElt.rational(-1), K
        assert element_in_field(a, K) and element_in_field(b, K), K
    assert positives > 30


def test_sum_two_squares_witness_examples():
    assert sum_two_squares_witness(Q_I) == (CycElt.zeta(4), CycElt.rational(0))
    w = CycElt.zeta(3)
    assert sum_two_squares_witness(Q_OMEGA) == (w * w, w)
    a, b = sum_two_squares_witness(quadratic_field(-5))
    assert (a, b) == (sqrt_element(-5) * Fraction(1, 2), CycElt.rational(Fraction(1, 2)))


# -- cyclic subgroups of prime order -------------------------------------------------------


def test_order_three_over_q():
    found, wit = pgl3_has_cyclic_of_order(QQ, 3)
    assert found
    assert wit[0].is_zero() and wit[1].is_zero()


def test_order_five_needs_sqrt5():
    assert not pgl3_has_cyclic_of_order(QQ, 5)[0]
    assert pgl3_has_cyclic_of_order(Q_SQRT5, 5)[0]


def test_order_seven_over_sqrt_minus7():
    w = pgl3_cyclic_witness(Q_SQRT_M7, 7)
    assert (w.i, w.j) == (2, 4)
    assert w.lam == (sqrt_element(-7) - 1) * Fraction(1, 2)


def test_not_odd_prime():
    for n in (1, 2, 9, 15):
        with pytest.raises(NotOddPrime):
            pgl3_has_cyclic_of_order(QQ, n)


def test_cyclic_witness_invariants():
    primes = [p for p in range(3, 20) if is_prime(p)]
    for K in RANDOM_FIELDS[:50] + [QQ, Q_I, Q_SQRT5, Q_SQRT_M7, cyclotomic_field(7)]:
        for n in primes:
            w = pgl3_cyclic_witness(K, n)
            if has_zeta(K, n):
                assert w is not None
            if w is not None:
                assert galois_apply(-1, w.lam) == w.eta
                assert element_in_field(w.lam, K) and element_in_field(w.eta, K)
