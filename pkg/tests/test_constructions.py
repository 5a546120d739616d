import json
import random
from fractions import Fraction

import pytest

from jordanum.arith import CycElt, euler_phi, sqrt_element
from jordanum.constructions import (
    R_abc,
    _S,
    _T,
    all_static_recipes,
    binary_icosahedral,
    binary_octahedral,
    binary_tetrahedral,
    dicyclic,
    gl2_s4_lift,
    hessian_sl3,
    imprimitive_recipes,
    lift_to_unimodular,
    pgl2_platonic,
    pgl3_a6,
    platonic_matrices,
    cyclic_witness_matrix,
    recipe_from_json,
    sl2_central_extensions,
    witness_for_field,
)
from jordanum.errors import BadParameters, NotCoprime, NotProjectivelyCyclic
from jordanum.fields import QQ, compositum, cyclotomic_field, element_in_field, quadratic_field
from jordanum.groups import (
    ExactMatrix,
    ProjMatrix,
    close,
    element_order,
    satisfies_relations,
    fingerprint,
    jordan_bruteforce,
    project_to_pgl,
)
from jordanum.laws import AmbientGroup
from jordanum.oracle import pgl3_cyclic_witness

I = CycElt.zeta(4)
OMEGA = CycElt.zeta(3)
ZERO = CycElt.rational(0)


def q(x):
    return CycElt.rational(Fraction(x))


def ident(n):
    return ExactMatrix.identity_matrix(n)


SQUARE_PAIRS = [
    (I, ZERO),
    (OMEGA * OMEGA, OMEGA),
    (sqrt_element(-5) * Fraction(1, 2), q(Fraction(1, 2))),
]


@pytest.mark.parametrize("a, b", SQUARE_PAIRS)
def test_platonic_identities(a, b):
    A, B, C = platonic_matrices(a, b)
    assert A.det().is_one() and B.det().is_one() and C.det() == q(2)
    assert A * A == -ident(2)
    x, y, z = C * B, B * C, C * C * B * B * C
    assert y * C.inverse() == B
    assert ProjMatrix(z * y * x) == ProjMatrix(C)
    assert ProjMatrix(C * C) == ProjMatrix(A)


def test_platonic_examples():
    A, B, C = pgl2_platonic(I, ZERO)
    assert A == ProjMatrix(ExactMatrix.diag(-I, I))
    assert C == ProjMatrix(ExactMatrix.diag(1 - I, 1 + I))
    assert close([A, B]).order == 12
    assert close([B, C]).order == 24
    with pytest.raises(BadParameters):
        pgl2_platonic(q(1), q(1))


def test_gl2_s4_lift_over_q_i():
    zeta = (1 + I) * Fraction(1, 2)
    B, g = gl2_s4_lift(I, ZERO, zeta)
    assert g == ExactMatrix.diag(1, I)
    G = close([B, g])
    assert project_to_pgl(G).order == 24
    assert jordan_bruteforce(G) == 24
    assert element_in_field(g.det(), cyclotomic_field(4))
    with pytest.raises(BadParameters):
        gl2_s4_lift(I, ZERO, q(1))


def test_lift_to_unimodular_examples():
    A = ExactMatrix.diag(1, OMEGA)
    assert lift_to_unimodular(A, 3, 2) == ExactMatrix.diag(OMEGA, OMEGA * OMEGA)
    assert lift_to_unimodular(ident(2), 5, 2) == ident(2)
    assert lift_to_unimodular(ident(3), 7) == ident(3)
    w = pgl3_cyclic_witness(quadratic_field(-7), 7)
    M = cyclic_witness_matrix(w.lam, w.eta)
    B = lift_to_unimodular(M, 7, 3)
    assert B.det().is_one()
    assert element_order(B) == 7
    assert ProjMatrix(B) == ProjMatrix(M)


def test_lift_to_unimodular_errors():
    with pytest.raises(NotCoprime):
        lift_to_unimodular(ident(2), 4, 2)
    with pytest.raises(NotProjectivelyCyclic):
        lift_to_unimodular(ExactMatrix([[1, 1], [0, 1]]), 3, 2)
    with pytest.raises(BadParameters):
        lift_to_unimodular(ident(2), 3, 3)


def test_lift_to_unimodular_random():
    rng = random.Random(4)
    for _ in range(20):
        r = rng.choice([3, 5, 7])
        n = rng.choice([d for d in (2, 3) if r % d])
        scale = q(rng.choice([2, -3, Fraction(1, 5)])) * CycElt.zeta(r, rng.randrange(r))
        exps = [rng.randrange(r) for _ in range(n)]
        A = ExactMatrix.diag(*(CycElt.zeta(r, e) * scale for e in exps))
        B = lift_to_unimodular(A, r, n)
        assert (B ** r) == ident(n)
        assert B.det().is_one()
        assert ProjMatrix(B) == ProjMatrix(A)


def _random_cyc(rng):
    M = rng.choice([1, 3, 4, 5, 7, 8, 12])
    return CycElt(M, [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(euler_phi(M))])


def test_cyclic_matrix_charpoly_identity():
    rng = random.Random(51)
    for _ in range(20):
        lam, eta = _random_cyc(rng), _random_cyc(rng)
        got = cyclic_witness_matrix(lam, eta).charpoly()
        assert got == [q(-1), eta, -lam, q(1)]


@pytest.mark.parametrize(
    "K, n",
    [(QQ, 3), (quadratic_field(5), 5), (quadratic_field(-7), 7)],
)
def test_cyclic_matrix_orders(K, n):
    w = pgl3_cyclic_witness(K, n)
    M = cyclic_witness_matrix(w.lam, w.eta)
    assert element_order(M) == n
    assert all(element_in_field(x, K) for x in M.entries())


def test_cyclic_matrix_lambda_eta_zero():
    M = cyclic_witness_matrix(0, 0)
    assert M ** 3 == ident(3) and M != ident(3)


@pytest.mark.parametrize("key", sorted(all_static_recipes()))
def test_static_recipe(key):
    recipe = all_static_recipes()[key]
    assert recipe.entries_in_field()
    rec = recipe.verify()
    assert rec.closure_order == recipe.expected_order
    assert rec.matched, (key, rec)


def test_static_recipes_simple_ones():
    rec = all_static_recipes()
    for key, order in (("a5", 60), ("a6", 360), ("klein", 168), ("klein_descended", 168)):
        fp = fingerprint(rec[key].close())
        assert (fp.order, fp.is_simple) == (order, True)
    assert not fingerprint(rec["hessian_G"].close()).is_simple


def test_a6_generator_orders():
    a, b = (ProjMatrix(m) for m in pgl3_a6().matrices())
    assert (element_order(a), element_order(b), element_order(a * b)) == (2, 4, 5)
    assert satisfies_relations([a, b], ["a^2", "b^4", "(ab)^5"])


def test_a6_needs_both_radicals():
    K = compositum(quadratic_field(5), cyclotomic_field(3))
    assert pgl3_a6().entries_in_field(K)
    assert not pgl3_a6().entries_in_field(quadratic_field(5))


def test_hessian_in_sl3():
    r = hessian_sl3()
    G = r.close()
    assert G.order == r.expected_order
    assert all(m.det().is_one() for m in r.matrices())
    assert project_to_pgl(G).order == 216


@pytest.mark.parametrize("n", range(3, 9))
def test_dicyclic(n):
    G = close(dicyclic(n))
    assert G.order == 4 * n
    assert len(G.center) == 2
    assert jordan_bruteforce(G) == 2
    assert all(m.det().is_one() for m in dicyclic(n))


def test_binary_icosahedral():
    G = close(binary_icosahedral())
    assert G.order == 120 and len(G.center) == 2
    assert jordan_bruteforce(G) == 60
    fp = fingerprint(project_to_pgl(G))
    assert (fp.order, fp.is_simple) == (60, True)
    K = compositum(cyclotomic_field(4), quadratic_field(5))
    assert all(element_in_field(x, K) for m in binary_icosahedral() for x in m.entries())


def test_binary_tetrahedral_and_octahedral():
    assert close(binary_tetrahedral(I, ZERO)).order == 24
    octa = close(binary_octahedral(I, ZERO, sqrt_element(2)))
    assert octa.order == 48 and jordan_bruteforce(octa) == 24
    with pytest.raises(BadParameters):
        binary_octahedral(I, ZERO, sqrt_element(3))


def test_sl2_central_extensions():
    rec = sl2_central_extensions(4)
    assert rec["dicyclic"].verify().matched
    assert rec["binary_icosahedral"].verify().closure_order == 120
    with pytest.raises(BadParameters):
        sl2_central_extensions(2)


def test_imprimitive_bounds():
    det_one = imprimitive_recipes(-1, 1, 1)
    assert R_abc(q(-1), q(1), q(1)).det().is_one()
    C = det_one["C"].close()
    assert C.order == 27 and jordan_bruteforce(C) == 3
    assert jordan_bruteforce(det_one["D"].close()) <= 6
    # finite modulo scalars needs a, b, c equal up to roots of unity
    proj = imprimitive_recipes(2, -2, 2)
    assert jordan_bruteforce(proj["C"].close()) <= 3
    assert jordan_bruteforce(proj["D"].close()) <= 6
    wider = imprimitive_recipes(-1, 1, 1, ExactMatrix.diag(-1, -1, 1))
    assert jordan_bruteforce(wider["D"].close()) <= 6
    with pytest.raises(BadParameters):
        imprimitive_recipes(0, 1, 1)


def test_witness_for_field_examples():
    r = witness_for_field(QQ, AmbientGroup.PGL3)
    assert r.name == "S4" and r.expected_jordan == 6
    r = witness_for_field(quadratic_field(-7), AmbientGroup.PGL3)
    assert r.expected_order == 168 and r.expected_jordan == 168
    r = witness_for_field(cyclotomic_field(4), AmbientGroup.GL2)
    assert r.expected_jordan == 24
    B, g = r.matrices()
    assert g == ExactMatrix.diag(1, I)
    assert r.verify().matched


def test_json_round_trip():
    for key, recipe in all_static_recipes().items():
        data = json.loads(json.dumps(recipe.to_json()))
        assert recipe_from_json(data) == recipe.matrices(), key
        assert recipe_from_json(json.dumps(data)) == recipe.matrices(), key


def test_s_and_t_generate_heisenberg():
    assert close([_S(), _T()]).order == 27


def test_sqrt_minus_two_does_not_lift_c_into_sl2():
    zeta = sqrt_element(-2).inverse()
    _, _, C = platonic_matrices(I, ZERO)
    assert (C * zeta).det() == q(-1)


@pytest.mark.xfail(strict=True, reason="SL2 value 24 needs sqrt(2); over Q(sqrt(-2)) the largest is 12")
def test_sl2_value_over_sqrt_minus_two_has_witness():
    from jordanum.cli import _verify_one

    r = _verify_one(quadratic_field(-2), AmbientGroup.SL2, 4096)
    assert r["matched"], r
