"""Decision procedures for the field predicates driving the Jordan tables.

Each predicate has a fast path working purely in ``(Z/m)^x`` and an
element-level path (suffix ``_element``) that builds explicit cyclotomic
numbers and tests them against the Galois action.  The two are kept
independent so tests can cross-check them.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import (
    CycElt,
    divisors,
    galois_apply,
    int_rank,
    is_prime,
    lcm,
    reduce_unit,
    sqrt_element,
    subgroup_generators,
    units,
)
from .errors import NotOddPrime, ZeroRadicand
from .fields import (
    Abelian,
    Complexes,
    FieldDescriptor,
    Reals,
    constant_field,
    cyclotomic_field,
    element_in_field,
    field_basis,
    is_subfield,
    preimage,
    quadratic_field,
)


@dataclass(frozen=True)
class PropertyVector:
    sum_two_squares: bool
    has_sqrt5: bool
    has_omega: bool
    has_sqrt_minus7: bool
    has_2zeta2_rou: bool
    has_sqrt2: bool
    has_sqrt_minus2: bool

    def violations(self) -> list[str]:
        """Implications every genuine field satisfies that this vector breaks."""
        out = []
        if self.has_omega and not self.sum_two_squares:
            out.append("has_omega => sum_two_squares")
        if self.has_sqrt_minus2 and not self.sum_two_squares:
            out.append("has_sqrt_minus2 => sum_two_squares")
        if (self.has_sqrt2 or self.has_sqrt_minus2) and not self.has_2zeta2_rou:
            out.append("(has_sqrt2 or has_sqrt_minus2) => has_2zeta2_rou")
        return out

    def is_realizable(self) -> bool:
        return not self.violations()

    def as_dict(self) -> dict[str, bool]:
        return asdict(self)


@dataclass(frozen=True)
class DecompositionData:
    prime: int
    group: tuple[int, ...]
    local_degree: int


# ---------------------------------------------------------------------------
# simple membership predicates


def has_sqrt(K: FieldDescriptor, r) -> bool:
    r = Fraction(r)
    if r == 0:
        raise ZeroRadicand("zero radicand")
    K = constant_field(K)
    if isinstance(K, Complexes):
        return True
    if isinstance(K, Reals):
        return r > 0
    return is_subfield(quadratic_field(r), K)


def has_sqrt_element(K: FieldDescriptor, r) -> bool:
    r = Fraction(r)
    if r == 0:
        raise ZeroRadicand("zero radicand")
    return element_in_field(sqrt_element(r), K)


def has_zeta(K: FieldDescriptor, n: int) -> bool:
    K = constant_field(K)
    if isinstance(K, Complexes):
        return True
    if isinstance(K, Reals):
        return n <= 2
    return is_subfield(cyclotomic_field(n), K)


def has_zeta_element(K: FieldDescriptor, n: int) -> bool:
    return element_in_field(CycElt.zeta(n), K)


def real_cyclotomic_field(r: int) -> Abelian:
    """``Q(z_r + z_r^-1)`` as a descriptor."""
    from .fields import abelian

    return abelian(r, [reduce_unit(1, r), reduce_unit(-1, r)])


def has_real_cyclotomic(K: FieldDescriptor, r: int) -> bool:
    if r < 3:
        raise ValueError("r must be >= 3")
    K = constant_field(K)
    if isinstance(K, (Complexes, Reals)):
        return True
    return is_subfield(real_cyclotomic_field(r), K)


def has_real_cyclotomic_element(K: FieldDescriptor, r: int) -> bool:
    return element_in_field(CycElt.zeta(r) + CycElt.zeta(r, -1), K)


# ---------------------------------------------------------------------------
# -1 as a sum of two squares


def decomposition_data(K: Abelian) -> DecompositionData:
    """Decomposition group of 2 in ``(Z/m)^x`` and the local degree of ``K`` at 2."""
    m = K.m
    a = 0
    m0 = m
    while m0 % 2 == 0:
        m0 //= 2
        a += 1
    powers = {reduce_unit(1, m0)}
    x = reduce_unit(2, m0)
    while x not in powers:
        powers.add(x)
        x = reduce_unit(x * 2, m0)
    D = tuple(h for h in units(m) if reduce_unit(h, m0) in powers)
    Hs = set(K.H)
    inter = sum(1 for h in D if h in Hs)
    return DecompositionData(2, D, len(D) // inter)


def minus_one_sum_two_squares(K: FieldDescriptor) -> bool:
    """Whether ``-1 = a^2 + b^2`` is solvable in ``K``.

    Holds iff ``K`` is totally imaginary and every completion above 2 has
    even degree over ``Q_2``.
    """
    K = constant_field(K)
    if isinstance(K, Complexes):
        return True
    if isinstance(K, Reals):
        return False
    if K.is_real():
        return False
    return decomposition_data(K).local_degree % 2 == 0


def minus_one_sum_two_squares_element(K: FieldDescriptor) -> bool:
    """Linear-algebra route to the same criterion.

    Computes ``[K:Q]`` and the dimension of the subfield of ``K`` fixed by the
    decomposition group at 2 as ranks of explicit element spans, and detects
    a real ``K`` by conjugating a basis.
    """
    K = constant_field(K)
    if isinstance(K, Complexes):
        return True
    if isinstance(K, Reals):
        return False
    basis = field_basis(K)
    if all(galois_apply(-1, b) == b for b in basis):
        return False
    gens = subgroup_generators(decomposition_data(K).group, K.m)
    n = len(basis)
    # c in ker(sigma_h - 1) for every generator h, coordinates in the basis;
    # columns may be rescaled freely, so integer numerators suffice
    rows = []
    for h in gens:
        images = [(galois_apply(h, b) - b).lift(K.m).nums for b in basis]
        rows.extend(zip(*images))
    fixed_dim = n - int_rank(rows)
    return (n // fixed_dim) % 2 == 0


# ---------------------------------------------------------------------------
# 2 z^2 a root of unity


def _eps8(h: int) -> int:
    return 1 if h % 8 in (1, 7) else -1


def exists_2zeta2_root_of_unity(K: FieldDescriptor) -> bool:
    return two_zeta_order(K) is not None


def two_zeta_order(K: FieldDescriptor):
    """Least ``s`` with ``z_s / sqrt(2)`` in ``K``, or ``None``.

    For CC and RR returns 1 (``1/sqrt(2)`` is present).
    """
    K = constant_field(K)
    if isinstance(K, (Complexes, Reals)):
        return 1
    L = lcm(K.m, 8)
    pre = preimage(K.H, K.m, L)
    for s in divisors(L):
        ok = True
        for h in pre:
            e = (h - 1) % s
            if _eps8(h) == 1:
                if e != 0:
                    ok = False
                    break
            elif 2 * e != s:
                ok = False
                break
        if ok:
            return s
    return None


def exists_2zeta2_root_of_unity_element(K: FieldDescriptor) -> bool:
    K = constant_field(K)
    if isinstance(K, (Complexes, Reals)):
        return True
    L = lcm(K.m, 8)
    half_root2 = sqrt_element(2) * Fraction(1, 2)
    return any(element_in_field(CycElt.zeta(s) * half_root2, K) for s in divisors(L))


# ---------------------------------------------------------------------------
# aggregate


def property_vector(K: FieldDescriptor) -> PropertyVector:
    return _property_vector(constant_field(K))


@lru_cache(maxsize=4096)
def _property_vector(K) -> PropertyVector:
    return PropertyVector(
        sum_two_squares=minus_one_sum_two_squares(K),
        has_sqrt5=has_sqrt(K, 5),
        has_omega=has_zeta(K, 3),
        has_sqrt_minus7=has_sqrt(K, -7),
        has_2zeta2_rou=exists_2zeta2_root_of_unity(K),
        has_sqrt2=has_sqrt(K, 2),
        has_sqrt_minus2=has_sqrt(K, -2),
    )


def property_vector_element(K: FieldDescriptor) -> PropertyVector:
    """``property_vector`` recomputed along the element-level paths."""
    K = constant_field(K)
    if isinstance(K, (Reals, Complexes)):
        return property_vector(K)
    return PropertyVector(
        sum_two_squares=minus_one_sum_two_squares_element(K),
        has_sqrt5=has_sqrt_element(K, 5),
        has_omega=has_zeta_element(K, 3),
        has_sqrt_minus7=has_sqrt_element(K, -7),
        has_2zeta2_rou=exists_2zeta2_root_of_unity_element(K),
        has_sqrt2=has_sqrt_element(K, 2),
        has_sqrt_minus2=has_sqrt_element(K, -2),
    )


# ---------------------------------------------------------------------------
# cyclic subgroups of prime order in PGL3


@dataclass(frozen=True)
class CyclicWitness:
    t: int
    i: int
    j: int
    lam: CycElt
    eta: CycElt


def pgl3_cyclic_witness(K: FieldDescriptor, n: int):
    """First ``(t, i, j)`` with both periods of ``z_n^t`` in ``K``, or ``None``.

    ``alpha = z_n^t``; ``1 < i < j <= n`` and ``1 + i + j = 0 mod n``;
    the witness values are ``lam = alpha + alpha^i + alpha^j`` and
    ``eta = alpha^-1 + alpha^-i + alpha^-j``.
    """
    if n % 2 == 0 or not is_prime(n):
        raise NotOddPrime(f"{n} is not an odd prime")
    for t in range(1, n):
        for i in range(2, n + 1):
            for j in range(i + 1, n + 1):
                if (1 + i + j) % n:
                    continue
                lam = _period(n, t, (1, i, j))
                if not element_in_field(lam, K):
                    continue
                eta = _period(n, -t, (1, i, j))
                if element_in_field(eta, K):
                    return CyclicWitness(t, i, j, lam, eta)
    return None


def _period(n: int, t: int, exps) -> CycElt:
    terms: dict[int, int] = {}
    for e in exps:
        k = (t * e) % n
        terms[k] = terms.get(k, 0) + 1
    return CycElt.from_exponents(n, terms)


def pgl3_has_cyclic_of_order(K: FieldDescriptor, n: int):
    """``(found, (lam, eta) or None)``."""
    w = pgl3_cyclic_witness(K, n)
    if w is None:
        return False, None
    return True, (w.lam, w.eta)
