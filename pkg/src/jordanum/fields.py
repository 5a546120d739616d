"""Field descriptors for characteristic-0 fields.

An abelian number field is the fixed field of a subgroup ``H`` of
``(Z/m)^x = Gal(Q(z_m)/Q)``.  The reals, the complexes and rational
function fields over any of these are handled by explicit rules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

from .arith import (
    CycElt,
    divisors,
    galois_apply,
    kronecker_symbol,
    lcm,
    reduce_unit,
    squarefree_part,
    subgroup_generators,
    units,
)
from .errors import MalformedSubgroup, NotRepresentable, ZeroRadicand


@dataclass(frozen=True)
class Abelian:
    m: int
    H: tuple[int, ...]

    def __str__(self):
        if self.m == 1:
            return "QQ"
        return f"Abelian(m={self.m}; H={','.join(map(str, self.H))})"

    @property
    def degree(self) -> int:
        return len(units(self.m)) // len(self.H)

    def is_real(self) -> bool:
        return reduce_unit(-1, self.m) in self.H


@dataclass(frozen=True)
class Reals:
    def __str__(self):
        return "RR"


@dataclass(frozen=True)
class Complexes:
    def __str__(self):
        return "CC"


@dataclass(frozen=True)
class FunctionField:
    base: "ConstantField"
    vars: int = 1

    def __str__(self):
        return f"FunctionField(base={self.base}; vars={self.vars})"


ConstantField = Union[Abelian, Reals, Complexes]
FieldDescriptor = Union[Abelian, Reals, Complexes, FunctionField]

QQ = Abelian(1, (1,))
RR = Reals()
CC = Complexes()


def abelian(m: int, H) -> Abelian:
    """Build and canonicalize an abelian descriptor."""
    return canonicalize(Abelian(m, tuple(sorted(set(H)))))


def function_field(base: FieldDescriptor, vars: int = 1) -> FunctionField:
    if vars < 1:
        raise ValueError("vars must be >= 1")
    if isinstance(base, FunctionField):
        return FunctionField(base.base, base.vars + vars)
    return FunctionField(base, vars)


def constant_field(K: FieldDescriptor) -> ConstantField:
    return K.base if isinstance(K, FunctionField) else K


# ---------------------------------------------------------------------------
# subgroup bookkeeping in (Z/M)^x


def preimage(H, m: int, M: int) -> list[int]:
    """Units mod ``M`` whose reduction mod ``m`` lies in ``H``."""
    Hs = set(H)
    return [h for h in units(M) if reduce_unit(h, m) in Hs]


def _check_subgroup(m: int, H) -> None:
    Hs = set(H)
    if reduce_unit(1, m) not in Hs:
        raise MalformedSubgroup(f"1 not in H for m={m}")
    for h in Hs:
        if gcd(h, m) != 1 or not (0 < h < max(m, 2)):
            raise MalformedSubgroup(f"{h} is not a reduced unit mod {m}")
    for a in Hs:
        for b in Hs:
            if reduce_unit(a * b, m) not in Hs:
                raise MalformedSubgroup(f"H not closed: {a}*{b} mod {m}")


def canonicalize(K: FieldDescriptor) -> FieldDescriptor:
    """Reduce an abelian descriptor to its exact conductor."""
    if isinstance(K, FunctionField):
        return function_field(canonicalize(K.base), K.vars)
    if not isinstance(K, Abelian):
        return K
    m = K.m
    H = set(K.H)
    _check_subgroup(m, H)
    for d in divisors(m):
        kernel = (h for h in units(m) if h % d == 1 % d)
        if all(h in H for h in kernel):
            return Abelian(d, tuple(sorted({reduce_unit(h, d) for h in H})))
    raise AssertionError("unreachable: m itself always qualifies")


# ---------------------------------------------------------------------------
# constructors


def quadratic_field(r) -> Abelian:
    """``Q(sqrt(r))`` as an abelian descriptor."""
    if Fraction(r) == 0:
        raise ZeroRadicand("sqrt(0) adjoins nothing meaningful")
    s, _ = squarefree_part(r)
    if s == 1:
        return QQ
    D = s if s % 4 == 1 else 4 * s
    m = abs(D)
    return abelian(m, [h for h in units(m) if kronecker_symbol(D, h) == 1])


def cyclotomic_field(n: int) -> Abelian:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 4 == 2:
        n //= 2
    return Abelian(n, (1,))


def adjoin_sqrt(base: FieldDescriptor, r) -> FieldDescriptor:
    r = Fraction(r)
    if r == 0:
        raise ZeroRadicand("zero radicand")
    if isinstance(base, FunctionField):
        return function_field(adjoin_sqrt(base.base, r), base.vars)
    if isinstance(base, Complexes):
        return base
    if isinstance(base, Reals):
        if r < 0:
            raise NotRepresentable("RR(sqrt(r)) with r < 0 is not a real field")
        return base
    return compositum(base, quadratic_field(r))


def adjoin_zeta(base: FieldDescriptor, n: int) -> FieldDescriptor:
    if n < 1:
        raise ValueError("n must be >= 1")
    if isinstance(base, FunctionField):
        return function_field(adjoin_zeta(base.base, n), base.vars)
    if isinstance(base, Complexes):
        return base
    if isinstance(base, Reals):
        if n >= 3:
            raise NotRepresentable("RR does not contain z_n for n >= 3")
        return base
    return compositum(base, cyclotomic_field(n))


def compositum(K1: FieldDescriptor, K2: FieldDescriptor) -> FieldDescriptor:
    if isinstance(K1, FunctionField) or isinstance(K2, FunctionField):
        v1 = K1.vars if isinstance(K1, FunctionField) else 0
        v2 = K2.vars if isinstance(K2, FunctionField) else 0
        # indeterminates are shared: QQ(t) o QQ(sqrt(5), t) = QQ(sqrt(5))(t)
        return function_field(compositum(constant_field(K1), constant_field(K2)), max(v1, v2))
    if isinstance(K1, Complexes) or isinstance(K2, Complexes):
        return CC
    if isinstance(K1, Reals) or isinstance(K2, Reals):
        other = K2 if isinstance(K1, Reals) else K1
        if isinstance(other, Reals) or other.is_real():
            return RR
        raise NotRepresentable(f"compositum of RR with non-real {other}")
    M = lcm(K1.m, K2.m)
    H1 = set(preimage(K1.H, K1.m, M))
    H = [h for h in preimage(K2.H, K2.m, M) if h in H1]
    return canonicalize(Abelian(M, tuple(H)))


# ---------------------------------------------------------------------------
# relations


def is_subfield(L: FieldDescriptor, K: FieldDescriptor) -> bool:
    """Whether ``L`` is contained in ``K``."""
    if isinstance(K, FunctionField):
        if isinstance(L, FunctionField):
            return L.vars <= K.vars and is_subfield(L.base, K.base)
        return is_subfield(L, K.base)
    if isinstance(L, FunctionField):
        return False
    if isinstance(K, Complexes):
        return True
    if isinstance(L, Complexes):
        return False
    if isinstance(K, Reals):
        return isinstance(L, Reals) or L.is_real()
    if isinstance(L, Reals):
        return False
    M = lcm(L.m, K.m)
    HL = set(preimage(L.H, L.m, M))
    return all(h in HL for h in preimage(K.H, K.m, M))


def element_in_field(a: CycElt, K: FieldDescriptor) -> bool:
    """Whether the cyclotomic value ``a`` lies in ``K``.

    Galois-fixing test: ``a`` is in the fixed field of ``H`` iff every
    automorphism in the preimage of ``H`` (equivalently, a generating set
    of that preimage) leaves it unchanged.
    """
    K = constant_field(K)
    if isinstance(K, Complexes):
        return True
    if isinstance(K, Reals):
        return galois_apply(-1, a) == a
    # By CRT the automorphisms of Q(z_n) fixing K meet Q(z_n) in the units
    # x mod n with x mod gcd(n, m) in H mod gcd(n, m); no lift needed.
    n = a.level
    g = gcd(n, K.m)
    Hg = {h % g for h in K.H}
    fixers = [x for x in units(n) if x % g in Hg]
    return all(galois_apply(h, a) == a for h in subgroup_generators(fixers, n))


def roots_of_unity_order(K: FieldDescriptor):
    """Largest ``w`` with ``z_w`` in ``K``; ``math.inf`` for CC."""
    K = constant_field(K)
    if isinstance(K, Complexes):
        return math.inf
    if isinstance(K, Reals):
        return 2
    for d in reversed(divisors(lcm(2, K.m))):
        if is_subfield(cyclotomic_field(d), K):
            return d
    return 2  # pragma: no cover - d = 2 always qualifies


def field_basis(K: Abelian) -> list[CycElt]:
    """A Q-basis of ``K`` at level ``K.m``, made of Gauss periods."""
    m = K.m
    if m == 1:
        return [CycElt.rational(1)]
    basis: list[CycElt] = []
    echelon: list[tuple[int, list[int]]] = []  # (pivot, integer row)
    seen = set()
    for k in range(m):
        period = CycElt.from_exponents(m, _period_terms(k, K.H, m))
        if period.is_zero() or period.key() in seen:
            continue
        seen.add(period.key())
        v = list(period.nums)
        for piv, row in echelon:
            if v[piv]:
                a, b = row[piv], v[piv]
                v = [a * x - b * y for x, y in zip(v, row)]
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            continue
        g = math.gcd(*v)
        echelon.append((lead, [x // g for x in v]))
        basis.append(period)
        if len(basis) == K.degree:
            break
    return basis


def _period_terms(k: int, H, m: int) -> dict[int, int]:
    terms: dict[int, int] = {}
    for h in H:
        e = (k * h) % m
        terms[e] = terms.get(e, 0) + 1
    return terms


# ---------------------------------------------------------------------------
# text form


def format_field(K: FieldDescriptor) -> str:
    return str(K)
