"""Exact arithmetic: integers, rational polynomials and cyclotomic fields.

Rationals are plain :class:`fractions.Fraction` values.  A cyclotomic
element lives at an explicit level ``M`` and is stored as integer
numerators over one shared denominator, in the power basis
``1, z, ..., z^(phi(M)-1)`` of ``Q(z)`` with ``z = exp(2 pi i / M)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import NotCoprime, ZeroInput, ZeroInverse

Rational = Fraction


# ---------------------------------------------------------------------------
# elementary number theory


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``|n|`` as ``((p, e), ...)`` by trial division."""
    n = abs(n)
    if n == 0:
        raise ZeroInput("cannot factor 0")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def units(m: int) -> list[int]:
    """Residues of ``(Z/m)^x`` as integers in ``[1, m)``; ``[1]`` for ``m = 1``."""
    if m == 1:
        return [1]
    return [h for h in range(1, m) if gcd(h, m) == 1]


def reduce_unit(h: int, m: int) -> int:
    """``h mod m`` with the convention that the only unit mod 1 is 1."""
    return 1 if m == 1 else h % m


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol ``(a/n)`` for arbitrary integers."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # factor out 2 from n
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 == 1 and a % 8 in (3, 5):
            result = -result
    # n is now odd and positive: Jacobi symbol
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def squarefree_part(r) -> tuple[int, Fraction]:
    """Write ``r = s * q**2`` with ``s`` a squarefree integer (sign kept)."""
    r = Fraction(r)
    if r == 0:
        raise ZeroInput("squarefree part of 0")
    # r = p/q = (p*q) / q^2
    n = r.numerator * r.denominator
    s, k = (1 if n > 0 else -1), 1
    for p, e in factorize(n):
        if e % 2:
            s *= p
        k *= p ** (e // 2)
    return s, Fraction(k, r.denominator)


# ---------------------------------------------------------------------------
# rational polynomials


class RatPoly:
    """Polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def x(cls) -> "RatPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, RatPoly):
            other = RatPoly([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RatPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = RatPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.lead()
        d = other.degree
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - d] = c
                for j, y in enumerate(other.coeffs):
                    rem[k - d + j] -= c * y
        return RatPoly(quot), RatPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self):
        if not self.coeffs:
            return "RatPoly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*x^{k}")
        return "RatPoly(" + " + ".join(terms) + ")"


def _as_poly(value) -> RatPoly:
    return value if isinstance(value, RatPoly) else RatPoly([value])


def poly_xgcd(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly, RatPoly]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = RatPoly([1]), RatPoly()
    t0, t1 = RatPoly(), RatPoly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lead = r0.lead()
    return r0 * (1 / lead), s0 * (1 / lead), t0 * (1 / lead)


@lru_cache(maxsize=None)
def _cyclotomic_int(M: int) -> tuple[int, ...]:
    if M < 1:
        raise ValueError("cyclotomic polynomial needs M >= 1")
    if M == 1:
        return (-1, 1)
    # Phi_{np}(x) = Phi_n(x^p) / Phi_n(x) for p not dividing n, then
    # Phi_{r k}(x) = Phi_r(x^k) when every prime of k divides r.
    primes = [p for p, _ in factorize(M)]
    poly = [-1, 1]
    r = 1
    for p in primes:
        stretched = [0] * ((len(poly) - 1) * p + 1)
        for i, c in enumerate(poly):
            stretched[i * p] = c
        poly = _int_exact_div(stretched, poly)
        r *= p
    k = M // r
    if k > 1:
        stretched = [0] * ((len(poly) - 1) * k + 1)
        for i, c in enumerate(poly):
            stretched[i * k] = c
        poly = stretched
    return tuple(poly)


def _int_exact_div(num: list[int], den: list[int]) -> list[int]:
    # den is monic
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j, y in enumerate(den):
                num[k - dd + j] -= c * y
    assert not any(num[:dd]), "inexact cyclotomic division"
    return quot


def cyclotomic_polynomial(M: int) -> RatPoly:
    """The ``M``-th cyclotomic polynomial."""
    return RatPoly(_cyclotomic_int(M))


@lru_cache(maxsize=None)
def _power_table(M: int) -> tuple[tuple[int, ...], ...]:
    """``z^k`` reduced mod Phi_M for ``0 <= k < M`` as integer vectors."""
    phi = _cyclotomic_int(M)
    d = len(phi) - 1
    rows = []
    v = [1] + [0] * (d - 1)
    for _ in range(M):
        rows.append(tuple(v))
        # multiply by z
        top = v[-1]
        v = [0] + v[:-1]
        if top:
            for i in range(d):
                v[i] -= top * phi[i]
    return tuple(rows)


# ---------------------------------------------------------------------------
# cyclotomic field elements


def _normalize(nums, den):
    g = gcd(den, *nums)
    if den < 0:
        g = -g
    if g != 1:
        nums = tuple(x // g for x in nums)
        den //= g
    else:
        nums = tuple(nums)
    return nums, den


def _reduce_vector(conv: Sequence[int], M: int, d: int) -> list[int]:
    out = list(conv[:d]) + [0] * max(0, d - len(conv))
    if len(conv) > d:
        table = _power_table(M)
        for k in range(d, len(conv)):
            c = conv[k]
            if c:
                row = table[k % M]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
    return out


class CycElt:
    """An element of ``Q(z_M)``, immutable.

    Equality across levels is by value; arithmetic lifts both operands to
    the lcm of their levels.
    """

    __slots__ = ("level", "nums", "den", "_hash")

    def __init__(self, level: int, coeffs: Iterable = ()):
        if level < 1:
            raise ValueError("level must be >= 1")
        d = euler_phi(level)
        c = [Fraction(x) for x in coeffs]
        if len(c) > d:
            # accept longer vectors as polynomials in z and reduce
            den = lcm(*(x.denominator for x in c))
            ints = [int(x * den) for x in c]
            nums = _reduce_vector(ints, level, d)
        else:
            c += [Fraction(0)] * (d - len(c))
            den = lcm(*(x.denominator for x in c))
            nums = [int(x * den) for x in c]
        self._set(level, *_normalize(nums, den))

    def _set(self, level, nums, den):
        self.level = level
        self.nums = nums
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, level: int, nums, den: int) -> "CycElt":
        obj = object.__new__(cls)
        obj._set(level, *_normalize(nums, den))
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, value, level: int = 1) -> "CycElt":
        value = Fraction(value)
        d = euler_phi(level)
        return cls._raw(level, (value.numerator,) + (0,) * (d - 1), value.denominator)

    @classmethod
    def zeta(cls, M: int, k: int = 1) -> "CycElt":
        """``z_M^k``."""
        return cls._raw(M, _power_table(M)[k % M], 1)

    @classmethod
    def from_exponents(cls, M: int, terms: dict[int, object]) -> "CycElt":
        """Sum of ``c * z_M^k`` over ``terms = {k: c}``."""
        d = euler_phi(M)
        fr = {k % M: Fraction(c) for k, c in terms.items()}
        den = lcm(*(c.denominator for c in fr.values())) if fr else 1
        acc = [0] * d
        table = _power_table(M)
        for k, c in fr.items():
            n = int(c * den)
            if n:
                row = table[k]
                for i in range(d):
                    acc[i] += n * row[i]
        return cls._raw(M, acc, den)

    # -- views -------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    def key(self) -> tuple:
        return (self.level, self.nums, self.den)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_one(self) -> bool:
        return self.den == 1 and self.nums[0] == 1 and not any(self.nums[1:])

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def as_poly(self) -> RatPoly:
        return RatPoly(self.coeffs)

    # -- level changes -----------------------------------------------------

    def lift(self, M: int) -> "CycElt":
        """The same value expressed at level ``M`` (a multiple of the level)."""
        if M == self.level:
            return self
        if M % self.level:
            raise ValueError(f"cannot lift level {self.level} to {M}")
        step = M // self.level
        d = euler_phi(M)
        table = _power_table(M)
        acc = [0] * d
        for j, c in enumerate(self.nums):
            if c:
                row = table[(j * step) % M]
                for i in range(d):
                    if row[i]:
                        acc[i] += c * row[i]
        return CycElt._raw(M, acc, self.den)

    def descend(self) -> "CycElt":
        """The same value at the smallest level containing it."""
        if self.is_rational():
            return CycElt._raw(1, (self.nums[0],), self.den)
        for d in divisors(self.level)[:-1]:
            if self._lives_at(d):
                return self._express_at(d)
        return self

    def _lives_at(self, d: int) -> bool:
        for h in _kernel_generators(self.level, d):
            if self.galois(h) != self:
                return False
        return True

    def _express_at(self, d: int) -> "CycElt":
        basis = [CycElt.zeta(d, j).lift(self.level) for j in range(euler_phi(d))]
        cols = [[Fraction(x) for x in b.nums] for b in basis]
        rhs = list(self.coeffs)
        sol = solve_linear(cols, rhs)
        if sol is None:
            raise ArithmeticError("descent failed: element not in subfield")
        return CycElt(d, sol)

    # -- field operations --------------------------------------------------

    def _coerce(self, other) -> "CycElt":
        if isinstance(other, CycElt):
            return other
        if isinstance(other, (int, Fraction)):
            return CycElt.rational(other, self.level)
        return NotImplemented

    def _common(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return None, None
        if other.level == self.level:
            return self, other
        M = lcm(self.level, other.level)
        return self.lift(M), other.lift(M)

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        if a.den == b.den:
            return CycElt._raw(a.level, [x + y for x, y in zip(a.nums, b.nums)], a.den)
        return CycElt._raw(
            a.level, [x * b.den + y * a.den for x, y in zip(a.nums, b.nums)], a.den * b.den
        )

    __radd__ = __add__

    def __neg__(self):
        return CycElt._raw(self.level, [-x for x in self.nums], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CycElt._raw(
                self.level, [x * other.numerator for x in self.nums], self.den * other.denominator
            )
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        M = a.level
        d = len(a.nums)
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a.nums):
            if x:
                for j, y in enumerate(b.nums):
                    if y:
                        conv[i + j] += x * y
        return CycElt._raw(M, _reduce_vector(conv, M, d), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycElt":
        if self.is_zero():
            raise ZeroInverse("inverse of zero")
        return _inverse_cached(self.level, self.nums, self.den)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroInverse("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycElt.rational(1, self.level)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, h: int) -> "CycElt":
        return galois_apply(h, self)

    def conjugate(self) -> "CycElt":
        """Complex conjugate under the standard embedding."""
        return galois_apply(-1, self)

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.nums[0], self.den) == other
        if not isinstance(other, CycElt):
            return NotImplemented
        if other.level == self.level:
            return self.den == other.den and self.nums == other.nums
        a, b = self._common(other)
        return a.den == b.den and a.nums == b.nums

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.nums[0], self.den))
            else:
                self._hash = hash(self.descend().key())
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CycElt({self.level}, {self})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            z = f"z{self.level}" + (f"^{k}" if k > 1 else "")
            if c == 1:
                terms.append(z)
            elif c == -1:
                terms.append("-" + z)
            else:
                terms.append(f"{c}*{z}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


@lru_cache(maxsize=200_000)
def _inverse_cached(level: int, nums: tuple, den: int) -> CycElt:
    poly = RatPoly(Fraction(x, den) for x in nums)
    g, s, _ = poly_xgcd(poly, cyclotomic_polynomial(level))
    if g.degree != 0:
        raise ZeroInverse("element not invertible")  # pragma: no cover
    return CycElt(level, s.coeffs)


def _kernel_generators(M: int, d: int) -> list[int]:
    """Generators of ``ker((Z/M)^x -> (Z/d)^x)``."""
    kernel = [h for h in units(M) if h % d == 1 % d]
    return subgroup_generators(kernel, M)


def subgroup_generators(elements: Iterable[int], M: int) -> list[int]:
    """A small generating set for the subgroup of ``(Z/M)^x`` spanned by ``elements``."""
    gens: list[int] = []
    span = {reduce_unit(1, M)}
    for h in elements:
        h = reduce_unit(h, M)
        if h in span:
            continue
        gens.append(h)
        frontier = list(span)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = reduce_unit(x * g, M)
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
    return gens


def galois_apply(h: int, a: CycElt) -> CycElt:
    """The automorphism ``z_M -> z_M^h`` applied to ``a``."""
    M = a.level
    if gcd(h, M) != 1:
        raise NotCoprime(f"gcd({h}, {M}) != 1")
    h %= M
    if h == 1 % M or a.is_rational():
        return a
    d = len(a.nums)
    table = _power_table(M)
    acc = [0] * d
    for j, c in enumerate(a.nums):
        if c:
            row = table[(h * j) % M]
            for i in range(d):
                if row[i]:
                    acc[i] += c * row[i]
    return CycElt._raw(M, acc, a.den)


def cyc_mul(a: CycElt, b: CycElt) -> CycElt:
    return a * b


def cyc_add(a: CycElt, b: CycElt) -> CycElt:
    return a + b


def cyc_neg(a: CycElt) -> CycElt:
    return -a


def cyc_inverse(a: CycElt) -> CycElt:
    return a.inverse()


def common_level(elements: Iterable[CycElt]) -> int:
    return lcm(*(e.level for e in elements))


# ---------------------------------------------------------------------------
# distinguished elements


def sqrt_element(r) -> CycElt:
    """A cyclotomic square root of the nonzero rational ``r``.

    Built from quadratic Gauss sums: ``sqrt(p*)`` for odd primes ``p``,
    ``sqrt(-1) = z_4`` and ``sqrt(2) = z_8 + z_8^-1``.
    """
    s, q = squarefree_part(r)
    root = CycElt.rational(1)
    sign = 1
    for p, _ in factorize(s) if abs(s) > 1 else ():
        if p == 2:
            root = root * CycElt.from_exponents(8, {1: 1, 7: 1})
            continue
        root = root * gauss_sum(p)
        if p % 4 == 3:
            sign = -sign  # p* = -p
    if sign != (1 if s > 0 else -1):
        root = root * CycElt.zeta(4)
    return root * q


@lru_cache(maxsize=None)
def gauss_sum(p: int) -> CycElt:
    """``sum_t (t/p) z_p^t``; squares to ``(-1)^((p-1)/2) p``."""
    return CycElt.from_exponents(p, {t: kronecker_symbol(t, p) for t in range(1, p)})


# ---------------------------------------------------------------------------
# linear algebra over Q


def row_reduce(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    A = [list(r) for r in rows]
    pivots = []
    if not A:
        return A, pivots
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(rows: list[list[Fraction]]) -> int:
    return len(row_reduce(rows)[1])


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    echelon: list[tuple[int, list[int]]] = []
    for r in rows:
        v = list(r)
        for piv, row in echelon:
            if v[piv]:
                a, b = row[piv], v[piv]
                v = [a * x - b * y for x, y in zip(v, row)]
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is not None:
            g = gcd(*v)
            echelon.append((lead, [x // g for x in v]))
    return len(echelon)


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : rows @ x = 0}``."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    R, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve_linear(columns: list[list[Fraction]], rhs: list[Fraction]):
    """Solve ``sum_j x_j columns[j] = rhs``; ``None`` when inconsistent."""
    n = len(columns)
    m = len(rhs)
    aug = [[columns[j][i] for j in range(n)] + [rhs[i]] for i in range(m)]
    R, pivots = row_reduce(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return x
