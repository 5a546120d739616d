"""Explicit finite matrix groups that attain the Jordan constants.

Every recipe records the field its entries live in, the expected closure
order and the expected Jordan constant, so a test or the CLI can close it
and compare against a brute-force computation.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Sequence

import numpy as np

from .arith import CycElt, galois_apply, lcm, reduce_unit, sqrt_element, units
from .errors import (
    BadParameters,
    NoWitness,
    NoWitnessFound,
    NotCoprime,
    NotProjectivelyCyclic,
    PredicateFalse,
)
from .fields import (
    QQ,
    Abelian,
    Complexes,
    canonicalize,
    preimage,
    FieldDescriptor,
    Reals,
    compositum,
    constant_field,
    cyclotomic_field,
    element_in_field,
    field_basis,
    is_subfield,
    quadratic_field,
)
from .groups import (
    ExactMatrix,
    FiniteGroup,
    ProjMatrix,
    block_embed,
    close,
    jordan_bruteforce,
)
from .laws import AmbientGroup, jordan
from .oracle import (
    has_sqrt,
    has_zeta,
    minus_one_sum_two_squares,
    property_vector,
    two_zeta_order,
)

Matrix = ExactMatrix


def _z(n: int, k: int = 1) -> CycElt:
    return CycElt.zeta(n, k)


def _q(x) -> CycElt:
    return CycElt.rational(Fraction(x))


OMEGA = _z(3)
SQRT5 = sqrt_element(5)
TAU = (1 + SQRT5) * Fraction(1, 2)
SIGMA = (1 - SQRT5) * Fraction(1, 2)


# ---------------------------------------------------------------------------
# recipes


@dataclass(frozen=True)
class VerificationRecord:
    closure_order: int
    bruteforce_jordan: int
    expected_jordan: int
    matched: bool

    def as_dict(self) -> dict:
        return {
            "closure_order": self.closure_order,
            "bruteforce_jordan": self.bruteforce_jordan,
            "matched": self.matched,
        }


@dataclass
class WitnessRecipe:
    """Generators of a finite group together with what they should produce.

    ``expected_order`` may be ``None`` for lifts whose scalar part depends
    on the chosen parameters; ``projective_order`` then pins the image.
    """

    name: str
    ambient: AmbientGroup | None
    field_required: FieldDescriptor
    generators: list
    expected_order: int | None
    expected_jordan: int | None
    projective_order: int | None = None
    jordan_bound: int | None = None
    notes: str = ""
    _group: FiniteGroup | None = field(default=None, repr=False, compare=False)

    @property
    def level(self) -> int:
        return lcm(*(g.level for g in self.generators))

    def matrices(self) -> list[ExactMatrix]:
        return [g.matrix if isinstance(g, ProjMatrix) else g for g in self.generators]

    def entries_in_field(self, K: FieldDescriptor | None = None) -> bool:
        K = self.field_required if K is None else K
        return all(element_in_field(x, K) for m in self.matrices() for x in m.entries())

    def close(self, cap: int | None = None) -> FiniteGroup:
        if self._group is None:
            self._group = close(self.generators, cap)
        return self._group

    def verify(self, cap: int | None = None, expected: int | None = None) -> VerificationRecord:
        G = self.close(cap)
        J = jordan_bruteforce(G)
        target = self.expected_jordan if expected is None else expected
        return VerificationRecord(G.order, J, target, J == target)

    def to_json(self) -> dict:
        M = self.level
        gens = []
        for m in self.matrices():
            m = m.at_level(M)
            gens.append([
                [[[c.numerator, c.denominator] for c in x.coeffs] for x in row]
                for row in m.rows()
            ])
        return {
            "name": self.name,
            "field": str(self.field_required),
            "projective": isinstance(self.generators[0], ProjMatrix),
            "level": M,
            "generators": gens,
            "expected_order": self.expected_order,
            "expected_jordan": self.expected_jordan,
        }


def recipe_from_json(data: dict | str) -> list[ExactMatrix]:
    """Rebuild the generator matrices of a serialized recipe."""
    if isinstance(data, str):
        data = json.loads(data)
    M = data["level"]
    out = []
    for g in data["generators"]:
        rows = [[CycElt(M, [Fraction(n, d) for n, d in x]) for x in row] for row in g]
        out.append(ExactMatrix(rows))
    return out


def _proj_all(mats) -> list[ProjMatrix]:
    return [ProjMatrix(m) for m in mats]


# ---------------------------------------------------------------------------
# sums of squares


def _is_rational_square(x: Fraction):
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def subfields(K: Abelian) -> list[Abelian]:
    """Every subfield of ``K`` (including ``Q`` and ``K``), by increasing degree."""
    m = K.m
    top = frozenset(units(m))
    found = {frozenset(K.H)}
    work = list(found)
    while work:
        nxt = []
        for S in work:
            for g in top - S:
                T = _close_units(S | {g}, m)
                if T not in found:
                    found.add(T)
                    nxt.append(T)
        work = nxt
    out = {canonicalize(Abelian(m, tuple(sorted(S)))) for S in found}
    return sorted(out, key=lambda L: (L.degree, L.m, L.H))


def _close_units(S, m: int) -> frozenset:
    S = set(S)
    frontier = list(S)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(S):
                c = reduce_unit(a * b, m)
                if c not in S:
                    S.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(S)


def _represent(n: Fraction, w: Fraction, limit: int = 10 ** 6):
    """Rationals ``x, y`` with ``x^2 + w y^2 = n``, or ``None``."""
    if n <= 0:
        return None
    # x = X / D, y = Y / D with X^2 + w Y^2 = n D^2
    D = n.denominator * w.denominator
    target = n * D * D
    if target.denominator != 1 or target > limit:
        return None
    N = int(target)
    wi = w.numerator * w.denominator  # w Y^2 = (w_num/w_den) Y^2; scale Y by w_den
    for X in range(isqrt(N) + 1):
        rest = N - X * X
        if rest % wi == 0:
            Y = isqrt(rest // wi)
            if Y * Y * wi == rest:
                return Fraction(X, D), Fraction(Y * w.denominator, D)
    return None


def _small_rationals(height: int):
    """Nonnegative rationals of height at most ``height``, by height then numerator."""
    seen = set()
    for h in range(height + 1):
        layer = sorted({Fraction(n, d) for d in range(1, h + 1 if h else 2) for n in range(h + 1)}
                       - seen, key=lambda q: (q.numerator, q.denominator))
        seen.update(layer)
        yield from layer


def _quadratic_box(d: int, w: Fraction, height: int = 8):
    """``a = u sqrt(d)``, ``b = t`` with ``u, t`` rational of height at most ``height``."""
    for t in _small_rationals(height):
        u = _is_rational_square((-1 - w * t * t) / d)
        if u is not None:
            return sqrt_element(d) * u, _q(t)
    return None


def _quadratic_norm_form(d: int, w: Fraction, height: int = 12):
    """Solve ``a^2 + w b^2 = -1`` in ``Q(sqrt(d))``.

    Writing ``a = u sqrt(d) + v`` and ``b = s sqrt(d) + t``, the irrational
    part vanishes exactly when ``(v, t) = k (-w s, u)``, and then the
    equation reads ``(u^2 + w s^2)(d + w k^2) = -1``.
    """
    root = sqrt_element(d)
    for k in _small_rationals(height):
        n = -(d + w * k * k)
        rep = _represent(n, w)
        if rep is None:
            continue
        x, y = rep
        u, s_ = x / n, y / n
        v, t = -k * w * s_, k * u
        return root * u + v, root * s_ + t
    return None


def _norm_collision(L: Abelian, w: Fraction, bound: int):
    """Search ``L(sqrt(-w))`` for ``x, y`` with ``N(x) = -N(y)``.

    Then ``z = x / y`` has relative norm ``-1``, and its two coordinates
    over ``L`` solve ``a^2 + w b^2 = -1``.  Candidates are sparse
    combinations of a period basis, fewest terms first.
    """
    root = sqrt_element(-w)
    F = compositum(L, quadratic_field(-w))
    M = F.m
    sigma = next(h for h in preimage(L.H, L.m, M) if not element_in_field_fixed(h, root, M))
    basis = field_basis(F)
    norms: dict = {}
    tried = 0
    for weight in range(1, len(basis) + 1):
        for support in itertools.combinations(range(len(basis)), weight):
            for signs in itertools.product((1, -1), repeat=weight - 1):
                x = basis[support[0]]
                for sgn, j in zip(signs, support[1:]):
                    x = x + basis[j] if sgn > 0 else x - basis[j]
                n = (x * galois_apply(sigma, x)).lift(M)
                y = norms.get((-n).key())
                if y is not None:
                    z = x * y.inverse()
                    zs = galois_apply(sigma, z)
                    return (z + zs) * Fraction(1, 2), (z - zs) * (root * 2).inverse()
                norms.setdefault(n.key(), x)
                tried += 1
                if tried >= bound:
                    return None
    return None


def _numeric_embeddings(x: CycElt, exps: Sequence[int]) -> np.ndarray:
    """Complex values of ``x`` under ``zeta -> zeta^h`` for each ``h``."""
    k = np.arange(len(x.nums))
    z = np.exp(2j * np.pi * np.outer(exps, k) / x.level)
    return z @ np.array(x.nums, dtype=float) / x.den


def _real_descent(K: Abelian, w: Fraction, bound: int, max_degree: int = 10):
    """Solve ``a^2 + w b^2 = -1`` in an imaginary abelian ``K`` through its real subfield.

    ``K = R(s)`` with ``s`` purely imaginary and ``R = K`` intersected with the
    reals.  If ``u^2 + w v^2 = -s^2 c^2`` with ``u, v, c`` in ``R`` then
    ``a = u / (c s)``, ``b = v / (c s)``.  Pairs ``u, v`` run over sparse
    sign combinations of a basis of ``R``; the quotient is tested for being
    a square numerically (all sign choices of the real square roots) and
    the candidate root is confirmed exactly.
    """
    m = K.m
    R = canonicalize(Abelian(m, tuple(sorted(_close_units(set(K.H) | {reduce_unit(-1, m)}, m)))))
    n = R.degree
    if n > max_degree:
        return None
    s = next(d for d in (b - b.conjugate() for b in field_basis(K)) if not d.is_zero())
    delta = -(s * s)
    basis = field_basis(R)
    M = R.m
    reps, covered = [], set()
    for h in units(M):
        if h in covered:
            continue
        reps.append(h)
        covered.update(reduce_unit(h * g, M) for g in R.H)
    emb = np.array([_numeric_embeddings(b.lift(M), reps).real for b in basis])
    try:
        inv = np.linalg.inv(emb)
    except np.linalg.LinAlgError:  # pragma: no cover
        return None
    d_emb = _numeric_embeddings(delta.lift(lcm(M, delta.level)), reps).real
    patterns = np.array([(1,) + p for p in itertools.product((1, -1), repeat=n - 1)], dtype=float)
    coords = [v for wt in range(1, n + 1) for support in itertools.combinations(range(n), wt)
              for v in _signed_vectors(support, n)]
    vecs = np.array(coords, dtype=float)
    vals = (vecs @ emb) ** 2
    scale = 2 * M
    tried = 0
    for i in range(len(vecs)):
        q = (vals[i][None, :] + float(w) * vals) / d_emb
        root = np.sqrt(q)
        cand = (patterns[None, :, :] * root[:, None, :]) @ inv * scale
        close_ = np.all(np.abs(cand - np.rint(cand)) < 1e-6, axis=2)
        for j, k in zip(*np.nonzero(close_)):
            c = sum((b * Fraction(int(round(t)), scale) for b, t in zip(basis, cand[j, k])), _q(0))
            u = _from_coords(basis, vecs[i])
            v = _from_coords(basis, vecs[j])
            if not c.is_zero() and (u * u + v * v * w) == delta * c * c:
                cs = (c * s).inverse()
                return u * cs, v * cs
        tried += len(vecs)
        if tried >= bound * 50:
            return None
    return None


def _signed_vectors(support, n: int):
    for signs in itertools.product((1, -1), repeat=len(support) - 1):
        v = [0] * n
        v[support[0]] = 1
        for sgn, j in zip(signs, support[1:]):
            v[j] = sgn
        yield v


def _from_coords(basis, coords) -> CycElt:
    out = _q(0)
    for b, t in zip(basis, coords):
        if t:
            out = out + b * int(t)
    return out


def element_in_field_fixed(h: int, a: CycElt, M: int) -> bool:
    x = a.lift(M)
    return galois_apply(h, x) == x


def norm_form_witness(K: FieldDescriptor, weight: int = 1, bound: int = 20000):
    """Find ``a, b`` in ``K`` with ``a^2 + weight * b^2 = -1``.

    Subfields are tried from the smallest degree up: quadratic ones by an
    exact conic parametrization, larger ones by a norm-collision search in
    the quadratic extension by ``sqrt(-weight)``.  Raises
    ``NoWitnessFound`` when every search runs out of candidates.
    """
    K = constant_field(K)
    if not isinstance(K, Abelian):
        raise NoWitnessFound(f"no search over {K}")
    w = Fraction(weight)
    if w <= 0:
        raise BadParameters("weight must be positive")
    root = sqrt_element(-w)
    if element_in_field(root, K):
        return _q(0), root.inverse()
    for L in subfields(K):
        if L.is_real():
            continue
        if w == 1 and not minus_one_sum_two_squares(L):
            continue
        if L.degree == 2:
            d = _quadratic_radicand(L)
            res = _quadratic_box(d, w) or _quadratic_norm_form(d, w)
        else:
            res = _real_descent(L, w, bound) or _norm_collision(L, w, bound)
        if res is not None:
            return res
    raise NoWitnessFound(f"no solution of a^2 + {w} b^2 = -1 found in {K} within the search bound")


def _quadratic_radicand(L: Abelian) -> int:
    """Squarefree ``d`` with ``L = Q(sqrt(d))``; the conductor is ``|d|`` or ``4|d|``."""
    base = L.m if L.m % 2 else L.m // 4
    for d in (-base, base):
        if quadratic_field(d) == L:
            return d
    raise AssertionError(f"{L} is not quadratic")  # pragma: no cover


def sum_two_squares_witness(K: FieldDescriptor, bound: int = 20000):
    """``(a, b)`` in ``K`` with ``a^2 + b^2 = -1``."""
    if not minus_one_sum_two_squares(K):
        raise PredicateFalse(f"-1 is not a sum of two squares in {K}")
    C = constant_field(K)
    if isinstance(C, (Complexes,)) or has_zeta(C, 4):
        return _z(4), _q(0)
    if has_zeta(C, 3):
        return OMEGA ** 2, OMEGA
    return norm_form_witness(C, 1, bound)


def two_zeta_element(K: FieldDescriptor) -> CycElt:
    """Some ``z`` in ``K`` with ``2 z^2`` a root of unity."""
    s = two_zeta_order(K)
    if s is None:
        raise PredicateFalse(f"no element z of {K} has 2 z^2 a root of unity")
    return _z(s) * sqrt_element(2) * Fraction(1, 2)


def _is_root_of_unity(x: CycElt) -> bool:
    n = 2 * lcm(2, x.level)
    return (x ** n).is_one()


# ---------------------------------------------------------------------------
# PGL2 / GL2 / SL2


def platonic_matrices(a, b) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    a, b = _as_cyc(a), _as_cyc(b)
    if not (a * a + b * b + 1).is_zero():
        raise BadParameters("need a^2 + b^2 = -1")
    h = Fraction(1, 2)
    A = Matrix([[-a, b], [b, a]])
    B = Matrix([[(-1 + a + b) * h, (-1 + a - b) * h], [(1 + a - b) * h, (-1 - a - b) * h]])
    C = Matrix([[1 - a, b], [b, a + 1]])
    return A, B, C


def pgl2_platonic(a, b) -> tuple[ProjMatrix, ProjMatrix, ProjMatrix]:
    """``A, B`` generate A4 and ``B, C`` generate S4 in PGL2."""
    return tuple(ProjMatrix(m) for m in platonic_matrices(a, b))


def gl2_s4_lift(a, b, zeta) -> tuple[ExactMatrix, ExactMatrix]:
    """``(B, zeta C)``: a finite subgroup of GL2 projecting onto S4."""
    _, B, C = platonic_matrices(a, b)
    zeta = _as_cyc(zeta)
    if zeta.is_zero() or not _is_root_of_unity(zeta * zeta * 2):
        raise BadParameters("2 zeta^2 must be a root of unity")
    return B, C * zeta


def quaternion_unit(w, x, y, z, a, b) -> ExactMatrix:
    """``w + x I + y J + z IJ`` for the splitting given by ``a^2 + b^2 = -1``.

    ``I = [[0,1],[-1,0]]`` and ``J = [[a,b],[b,-a]]`` anticommute and square
    to ``-1``; the determinant of the image is the reduced norm.
    """
    w, x, y, z, a, b = map(_as_cyc, (w, x, y, z, a, b))
    # IJ = [[b, -a], [-a, -b]]
    return Matrix([
        [w + y * a + z * b, x + y * b - z * a],
        [-x + y * b - z * a, w - y * a - z * b],
    ])


def binary_tetrahedral(a, b) -> list[ExactMatrix]:
    h = Fraction(1, 2)
    return [quaternion_unit(0, 1, 0, 0, a, b), quaternion_unit(h, h, h, h, a, b)]


def binary_octahedral(a, b, root2) -> list[ExactMatrix]:
    r = _as_cyc(root2)
    if not (r * r - 2).is_zero():
        raise BadParameters("root2 must square to 2")
    g = binary_tetrahedral(a, b)
    inv = r.inverse()
    return g + [quaternion_unit(inv, inv, 0, 0, a, b)]


def binary_icosahedral(a=None, b=None) -> list[ExactMatrix]:
    """Unit icosians ``(1+i+j+k)/2`` and ``(tau + tau^-1 i + j)/2``."""
    if a is None:
        a, b = _z(4), _q(0)
    h = Fraction(1, 2)
    return [
        quaternion_unit(h, h, h, h, a, b),
        quaternion_unit(TAU * h, (TAU - 1) * h, h, 0, a, b),
    ]


def dicyclic(n: int) -> list[ExactMatrix]:
    """Dicyclic group of order ``4n``, from ``diag(z, z^-1)`` with ``z = z_{2n}``."""
    if n < 2:
        raise BadParameters("n must be >= 2")
    z = _z(2 * n)
    return [Matrix([[z, 0], [0, z.inverse()]]), Matrix([[0, 1], [-1, 0]])]


def dicyclic3_from_norm(p, r) -> list[ExactMatrix]:
    """Dicyclic group of order 12 in SL2 given ``p^2 + 3 r^2 = -1``."""
    p, r = _as_cyc(p), _as_cyc(r)
    if not (p * p + r * r * 3 + 1).is_zero():
        raise BadParameters("need p^2 + 3 r^2 = -1")
    h = Fraction(1, 2)
    order6 = Matrix([[h, Fraction(-3, 2)], [h, h]])
    quarter = Matrix([[p, r * 3], [r, -p]])
    return [order6, quarter]


def dihedral_d3() -> list[ExactMatrix]:
    return [Matrix([[0, -1], [1, -1]]), Matrix([[0, 1], [1, 0]])]


def sl2_central_extensions(n: int = 3) -> dict[str, WitnessRecipe]:
    if n < 3:
        raise BadParameters("n must be >= 3")
    return {
        "dicyclic": WitnessRecipe(
            f"dicyclic({n})", AmbientGroup.SL2, cyclotomic_field(2 * n),
            dicyclic(n), 4 * n, 2, projective_order=2 * n),
        "binary_icosahedral": WitnessRecipe(
            "binary icosahedral", AmbientGroup.SL2, cyclotomic_field(20),
            binary_icosahedral(), 120, 60, projective_order=60),
    }


# ---------------------------------------------------------------------------
# unimodular lifting and cyclic witnesses


def lift_to_unimodular(A: ExactMatrix, r: int, n: int | None = None) -> ExactMatrix:
    """Rescale ``A`` (with ``A^r`` scalar) to ``B`` with ``B^r = I``, ``det B = 1``."""
    n = A.dim if n is None else n
    if n != A.dim:
        raise BadParameters("n must equal the matrix dimension")
    if gcd(r, n) != 1:
        raise NotCoprime(f"gcd({r}, {n}) != 1")
    Ar = A ** r
    if not Ar.is_scalar():
        raise NotProjectivelyCyclic(f"A^{r} is not scalar")
    scalar = Ar.entry(0, 0)
    det = A.det()
    # u n + v r = 1
    u, v = _bezout(n, r)
    c = _cpow(det, u) * _cpow(scalar, v)
    return A * c.inverse()


def _cpow(x: CycElt, k: int) -> CycElt:
    return x ** k


def _bezout(n: int, r: int) -> tuple[int, int]:
    old_r, rr = n, r
    old_s, s = 1, 0
    old_t, t = 0, 1
    while rr:
        q = old_r // rr
        old_r, rr = rr, old_r - q * rr
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def cyclic_witness_matrix(lam, eta) -> ExactMatrix:
    """Companion-type matrix with characteristic polynomial ``x^3 - lam x^2 + eta x - 1``."""
    lam, eta = _as_cyc(lam), _as_cyc(eta)
    return Matrix([[lam + 1, 1, -lam - eta - 2], [1, 0, 0], [1, 0, -1]])


# ---------------------------------------------------------------------------
# PGL3


def _S() -> ExactMatrix:
    return ExactMatrix.diag(1, OMEGA, OMEGA ** 2)


def _T() -> ExactMatrix:
    return Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def _V() -> ExactMatrix:
    c = (2 * OMEGA + 1).inverse()  # 1 / sqrt(-3)
    w, w2 = OMEGA, OMEGA ** 2
    return Matrix([[c, c, c], [c, c * w, c * w2], [c, c * w2, c * w]])


def hessian_tower() -> dict[str, WitnessRecipe]:
    """Types E, F, G as projective groups over ``Q(omega)``."""
    S, T, V = _S(), _T(), _V()
    U = ExactMatrix.diag(1, 1, OMEGA)  # projectively equal to diag(e, e, e omega)
    UVU = U * V * U.inverse()
    K = cyclotomic_field(3)
    return {
        "E": WitnessRecipe("type E", AmbientGroup.PGL3, K, _proj_all([S, T, V]), 36, 4),
        "F": WitnessRecipe("type F", AmbientGroup.PGL3, K, _proj_all([S, T, V, UVU]), 72, 8),
        "G": WitnessRecipe("Hessian group", AmbientGroup.PGL3, K, _proj_all([S, T, V, U]), 216, 24),
    }


def hessian_sl3() -> WitnessRecipe:
    """Type G inside SL3 itself, which needs ``e^3 = omega^2`` (level 9)."""
    eps = _z(9, 2)
    U = ExactMatrix.diag(eps, eps, eps * OMEGA)
    return WitnessRecipe("type G in SL3", None, cyclotomic_field(9),
                         [_S(), _T(), _V(), U], 648, None, projective_order=216)


def a5_generators() -> tuple[ExactMatrix, ExactMatrix]:
    s, t = SIGMA, TAU
    x = Matrix([[-s, -t, -1], [-t, -1, -s], [1, s, t]])
    y = Matrix([[1, s, t], [s, t, 1], [t, 1, s]])
    return x, y


def pgl3_a5() -> WitnessRecipe:
    x, y = a5_generators()
    return WitnessRecipe("A5", AmbientGroup.PGL3, quadratic_field(5), _proj_all([x, y]), 60, 60)


def a6_generators() -> tuple[ExactMatrix, ExactMatrix]:
    x, y = a5_generators()
    z = Matrix([[1, 0, 0], [0, 0, OMEGA], [0, OMEGA ** 2, 0]])
    return y, y * (z * x) ** 4


def pgl3_a6() -> WitnessRecipe:
    a, b = a6_generators()
    K = compositum(quadratic_field(5), cyclotomic_field(3))
    return WitnessRecipe("A6", AmbientGroup.PGL3, K, _proj_all([a, b]), 360, 360)


def klein_generators() -> list[ExactMatrix]:
    """PSL2(F7) in SL3 over ``Q(z_7)``: a diagonal order-7 element, the
    coordinate 3-cycle and a symmetric involution built from ``z^k - z^-k``."""
    z = _z(7)
    D = ExactMatrix.diag(z, z ** 2, z ** 4)
    c = -sqrt_element(-7).inverse()
    d = [z ** k - z ** (7 - k) for k in (1, 4, 2)]
    R = Matrix([[c * d[0], c * d[1], c * d[2]],
                [c * d[1], c * d[2], c * d[0]],
                [c * d[2], c * d[0], c * d[1]]])
    if not R.det().is_one():
        R = -R
    return [D, _T(), R]


def pgl3_klein() -> WitnessRecipe:
    return WitnessRecipe("PSL2(F7)", AmbientGroup.PGL3, cyclotomic_field(7),
                         _proj_all(klein_generators()), 168, 168)


@lru_cache(maxsize=1)
def klein_generators_descended() -> tuple[ExactMatrix, ...]:
    """The PSL2(F7) representation conjugated to have entries in ``Q(sqrt(-7))``.

    The fixed line of the involution spans, under the group, a basis in
    which every matrix coefficient is Galois-invariant over ``Q(sqrt(-7))``:
    the character is defined there and the fixed line is one-dimensional.
    """
    D, T, R = klein_generators()
    I = ExactMatrix.identity_matrix(3, R.level)
    rows = (I + R).rows()
    col = next(j for j in range(3) if any(not rows[i][j].is_zero() for i in range(3)))
    u = [rows[i][col] for i in range(3)]
    vectors = [u]
    for g in (D, D * D, T, T * T, R * D):
        if len(vectors) == 3:
            break
        v = _mat_vec(g, u)
        if not _det3(vectors + [v] + [[_q(0)] * 3] * (2 - len(vectors))).is_zero() or len(vectors) < 2:
            trial = vectors + [v]
            if len(trial) < 3 or not _det3(trial).is_zero():
                vectors = trial
    P = Matrix([[vectors[j][i] for j in range(3)] for i in range(3)])
    Pinv = P.inverse()
    return tuple(Pinv * g * P for g in (D, T, R))


def _mat_vec(A: ExactMatrix, v: Sequence[CycElt]) -> list[CycElt]:
    R = A.rows()
    return [sum((R[i][j] * v[j] for j in range(3)), _q(0)) for i in range(3)]


def _det3(vectors) -> CycElt:
    return Matrix([[vectors[j][i] for j in range(3)] for i in range(3)]).det()


def pgl3_klein_descended() -> WitnessRecipe:
    return WitnessRecipe("PSL2(F7)", AmbientGroup.PGL3, quadratic_field(-7),
                         _proj_all(klein_generators_descended()), 168, 168)


def pgl3_s4_permutation_rep() -> WitnessRecipe:
    """S4 acting on ``span(e1-e2, e2-e3, e3-e4)``: images of (12) and (1234)."""
    t = Matrix([[-1, 1, 0], [0, 1, 0], [0, 0, 1]])
    c = Matrix([[0, 0, -1], [1, 0, -1], [0, 1, -1]])
    return WitnessRecipe("S4", AmbientGroup.PGL3, QQ, _proj_all([t, c]), 24, 6)


def R_abc(a, b, c) -> ExactMatrix:
    return Matrix([[a, 0, 0], [0, 0, b], [0, c, 0]])


def imprimitive_recipes(a, b, c, diagonal: ExactMatrix | None = None) -> dict[str, WitnessRecipe]:
    """Types C and D from a diagonal sample (default ``S``), ``T`` and ``R_{a,b,c}``.

    With ``abc = -1`` the matrices are kept in SL3; with any other nonzero
    product they are taken projectively.
    """
    a, b, c = map(_as_cyc, (a, b, c))
    prod = a * b * c
    if prod.is_zero():
        raise BadParameters("abc must be nonzero")
    diag = _S() if diagonal is None else diagonal
    gens_c = [diag, _T()]
    gens_d = gens_c + [R_abc(a, b, c)]
    K = _field_of([x for m in gens_d for x in m.entries()])
    if (prod + 1).is_zero():
        mk = list
        amb = None
    else:
        mk = _proj_all
        amb = AmbientGroup.PGL3
    return {
        "C": WitnessRecipe("type C", amb, K, mk(gens_c), None, None, jordan_bound=3),
        "D": WitnessRecipe("type D", amb, K, mk(gens_d), None, None, jordan_bound=6),
    }


def _field_of(values: Sequence[CycElt]) -> Abelian:
    return cyclotomic_field(lcm(*(v.descend().level for v in values)))


# ---------------------------------------------------------------------------
# selection


def _as_cyc(x) -> CycElt:
    return x if isinstance(x, CycElt) else CycElt.rational(Fraction(x))


def working_field(K: FieldDescriptor) -> Abelian:
    """An abelian field standing in for ``K`` when building witnesses.

    RR and CC are replaced by subfields with the same predicate values
    that matter: ``Q(sqrt(2), sqrt(5))`` is real with both radicals, and
    ``Q(z_120)`` contains every radical and root of unity the recipes use.
    """
    C = constant_field(K)
    if isinstance(C, Reals):
        return compositum(quadratic_field(2), quadratic_field(5))
    if isinstance(C, Complexes):
        return cyclotomic_field(120)
    return C


def _embed(mats) -> list[ProjMatrix]:
    return [ProjMatrix(block_embed(m)) for m in mats]


def witness_for_field(K: FieldDescriptor, ambient: AmbientGroup) -> WitnessRecipe:
    """A recipe whose brute-force Jordan constant should equal the table value."""
    p = property_vector(K)
    ans = jordan(p, ambient)
    W = working_field(K)
    recipe = _select(W, ambient, ans.value, ans.branch)
    if not is_subfield(recipe.field_required, constant_field(K)):
        raise NoWitness(f"{recipe.name} needs {recipe.field_required}, not inside {K}")
    recipe.expected_jordan = ans.value
    return recipe


def _select(W: Abelian, ambient: AmbientGroup, value: int, branch: str) -> WitnessRecipe:
    A = AmbientGroup
    if ambient is A.PGL3:
        if value == 360:
            return pgl3_a6()
        if value == 168:
            return pgl3_klein_descended()
        if value == 60:
            return pgl3_a5()
        if branch.endswith("(a)"):
            return hessian_tower()["G"]
        if value == 24:
            a, b = sum_two_squares_witness(W)
            z = two_zeta_element(W)
            gens = gl2_s4_lift(a, b, z)
            return WitnessRecipe("GL2 lift of S4", A.PGL3, W,
                                 _embed(gens), None, 24, projective_order=24)
        if value == 12:
            a, b = sum_two_squares_witness(W)
            A_, B_, _ = platonic_matrices(a, b)
            return WitnessRecipe("GL2 lift of A4", A.PGL3, W,
                                 _embed([A_, B_]), 24, 12)
        return pgl3_s4_permutation_rep()
    if ambient is A.PGL2:
        if value == 2:
            return WitnessRecipe("D3", A.PGL2, QQ, _proj_all(dihedral_d3()), 6, 2)
        a, b = sum_two_squares_witness(W)
        if value == 60:
            return WitnessRecipe("A5", A.PGL2, W,
                                 _proj_all(binary_icosahedral(a, b)), 60, 60)
        _, B, C = platonic_matrices(a, b)
        return WitnessRecipe("S4", A.PGL2, W, _proj_all([B, C]), 24, 6)
    if ambient in (A.GL2, A.SL2):
        if value == 2:
            if ambient is A.GL2:
                return WitnessRecipe("D3", A.GL2, QQ, dihedral_d3(), 6, 2)
            return _sl2_dicyclic(W)
        a, b = sum_two_squares_witness(W)
        if value == 60:
            return WitnessRecipe("binary icosahedral", ambient, W,
                                 binary_icosahedral(a, b), 120, 60, projective_order=60)
        if value == 12:
            A_, B_, _ = platonic_matrices(a, b)
            return WitnessRecipe("binary tetrahedral", ambient, W,
                                 [A_, B_], 24, 12, projective_order=12)
        if ambient is A.GL2:
            z = two_zeta_element(W)
            gens = gl2_s4_lift(a, b, z)
            return WitnessRecipe("GL2 lift of S4", A.GL2, W,
                                 list(gens), None, 24, projective_order=24)
        if not has_sqrt(W, 2):
            raise NoWitness(
                f"SL2 value 24 over {W}: C/sqrt(2) needs sqrt(2), and 1/sqrt(-2) gives determinant -1")
        r2 = sqrt_element(2)
        return WitnessRecipe("binary octahedral", A.SL2, W,
                             binary_octahedral(a, b, r2), 48, 24, projective_order=24)
    raise NoWitness(f"no recipe for {ambient} value {value}")  # pragma: no cover


def _sl2_dicyclic(W: Abelian) -> WitnessRecipe:
    if W.is_real():
        raise NoWitness(
            f"SL2 over the real field {W}: every finite subgroup is cyclic, so no group with J = 2")
    try:
        p, r = norm_form_witness(W, 3)
    except NoWitnessFound as exc:
        raise NoWitness(f"no dicyclic subgroup of SL2 found over {W}: {exc}") from exc
    return WitnessRecipe("dicyclic(3)", AmbientGroup.SL2, W,
                         dicyclic3_from_norm(p, r), 12, 2, projective_order=6)


def all_static_recipes() -> dict[str, WitnessRecipe]:
    """Field-independent recipes, keyed by a short name."""
    out = {f"hessian_{k}": v for k, v in hessian_tower().items()}
    out["a5"] = pgl3_a5()
    out["a6"] = pgl3_a6()
    out["klein"] = pgl3_klein()
    out["klein_descended"] = pgl3_klein_descended()
    out["s4_rep"] = pgl3_s4_permutation_rep()
    return out
