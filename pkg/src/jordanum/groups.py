"""Finite groups given by generators: closure, structure, Jordan constants.

Elements are any objects with ``__mul__``, ``identity()`` and a hashable
``key()``.  After closure every computation runs on the integer Cayley
table, so matrix arithmetic is paid once per (generator, element) pair.
"""

from __future__ import annotations

import os
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .arith import CycElt, _power_table, _normalize, euler_phi, lcm
from .errors import BadWord, CapExceeded, ZeroInverse

DEFAULT_CAP = 4096


def default_cap() -> int:
    return int(os.environ.get("JORDANUM_CAP", DEFAULT_CAP))


# ---------------------------------------------------------------------------
# element types


class Permutation:
    """Bijection of ``{0..n-1}``; ``(p * q)(x) = p(q(x))``."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img)

    def identity(self) -> "Permutation":
        return Permutation(range(len(self.images)))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[x] for x in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def key(self):
        return self.images

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    __str__ = __repr__


class ExactMatrix:
    """Square matrix over a cyclotomic field, stored at one common level.

    Entries are integer coefficient vectors over a single shared
    denominator, which keeps products free of per-entry normalization.
    """

    __slots__ = ("dim", "level", "den", "nums", "_key")

    def __init__(self, rows: Sequence[Sequence]):
        entries = [_as_cyc(x) for row in rows for x in row]
        dim = len(rows)
        if any(len(r) != dim for r in rows):
            raise ValueError("matrix must be square")
        M = lcm(*(e.level for e in entries))
        lifted = [e.lift(M) for e in entries]
        den = lcm(*(e.den for e in lifted))
        nums = []
        for e in lifted:
            f = den // e.den
            nums.extend(x * f for x in e.nums)
        self._set(dim, M, nums, den)

    def _set(self, dim, level, flat, den):
        flat, den = _normalize(flat, den)
        d = euler_phi(level)
        self.dim = dim
        self.level = level
        self.den = den
        self.nums = tuple(flat[i * d:(i + 1) * d] for i in range(dim * dim))
        self._key = None

    @classmethod
    def _raw(cls, dim, level, flat, den) -> "ExactMatrix":
        obj = object.__new__(cls)
        obj._set(dim, level, flat, den)
        return obj

    @classmethod
    def identity_matrix(cls, dim: int, level: int = 1) -> "ExactMatrix":
        return cls([[CycElt.rational(int(i == j), level) for j in range(dim)] for i in range(dim)])

    @classmethod
    def scalar(cls, dim: int, c) -> "ExactMatrix":
        c = _as_cyc(c)
        zero = CycElt.rational(0, c.level)
        return cls([[c if i == j else zero for j in range(dim)] for i in range(dim)])

    @classmethod
    def diag(cls, *values) -> "ExactMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def identity(self) -> "ExactMatrix":
        return ExactMatrix.identity_matrix(self.dim, self.level)

    # -- entry access ------------------------------------------------------

    def entry(self, i: int, j: int) -> CycElt:
        return CycElt._raw(self.level, self.nums[i * self.dim + j], self.den)

    def rows(self) -> list[list[CycElt]]:
        return [[self.entry(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def entries(self) -> list[CycElt]:
        return [self.entry(i, j) for i in range(self.dim) for j in range(self.dim)]

    def at_level(self, M: int) -> "ExactMatrix":
        if M == self.level:
            return self
        return ExactMatrix([[x.lift(M) for x in row] for row in self.rows()])

    def key(self):
        if self._key is None:
            self._key = (self.dim, self.level, self.den, self.nums)
        return self._key

    # -- arithmetic --------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycElt)):
            c = _as_cyc(other)
            return ExactMatrix([[x * c for x in row] for row in self.rows()])
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        a, b = self, other
        if a.level != b.level:
            M = lcm(a.level, b.level)
            a, b = a.at_level(M), b.at_level(M)
        M = a.level
        d = euler_phi(M)
        n = a.dim
        table = _power_table(M)
        flat: list[int] = []
        for i in range(n):
            for j in range(n):
                conv = [0] * (2 * d - 1)
                for k in range(n):
                    x = a.nums[i * n + k]
                    y = b.nums[k * n + j]
                    for p, xp in enumerate(x):
                        if xp:
                            for q, yq in enumerate(y):
                                if yq:
                                    conv[p + q] += xp * yq
                out = conv[:d]
                for k in range(d, 2 * d - 1):
                    c = conv[k]
                    if c:
                        row = table[k % M]
                        for t in range(d):
                            if row[t]:
                                out[t] += c * row[t]
                flat.extend(out)
        return ExactMatrix._raw(n, M, flat, a.den * b.den)

    __rmul__ = __mul__

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows(), other.rows())])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows(), other.rows())])

    def __neg__(self):
        return self * -1

    def __pow__(self, k: int) -> "ExactMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = self.identity()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def det(self) -> CycElt:
        R = self.rows()
        if self.dim == 1:
            return R[0][0]
        if self.dim == 2:
            return R[0][0] * R[1][1] - R[0][1] * R[1][0]
        if self.dim == 3:
            return (
                R[0][0] * (R[1][1] * R[2][2] - R[1][2] * R[2][1])
                - R[0][1] * (R[1][0] * R[2][2] - R[1][2] * R[2][0])
                + R[0][2] * (R[1][0] * R[2][1] - R[1][1] * R[2][0])
            )
        raise NotImplementedError("det only for dim <= 3")

    def adjugate(self) -> "ExactMatrix":
        R = self.rows()
        n = self.dim
        if n == 2:
            return ExactMatrix([[R[1][1], -R[0][1]], [-R[1][0], R[0][0]]])
        if n == 3:
            def minor(i, j):
                rr = [r for k, r in enumerate(R) if k != i]
                m = [[x for l, x in enumerate(r) if l != j] for r in rr]
                return m[0][0] * m[1][1] - m[0][1] * m[1][0]

            return ExactMatrix([[minor(j, i) * (-1) ** (i + j) for j in range(3)] for i in range(3)])
        raise NotImplementedError("adjugate only for dim 2, 3")

    def inverse(self) -> "ExactMatrix":
        d = self.det()
        if d.is_zero():
            raise ZeroInverse("singular matrix")
        return self.adjugate() * d.inverse()

    def trace(self) -> CycElt:
        return sum((self.entry(i, i) for i in range(self.dim)), CycElt.rational(0, self.level))

    def is_scalar(self) -> bool:
        n = self.dim
        diag0 = self.nums[0]
        for i in range(n):
            for j in range(n):
                v = self.nums[i * n + j]
                if i == j:
                    if v != diag0:
                        return False
                elif any(v):
                    return False
        return True

    def charpoly(self) -> list[CycElt]:
        """Coefficients of ``det(x I - A)``, lowest degree first."""
        R = self.rows()
        if self.dim == 2:
            return [self.det(), -self.trace(), CycElt.rational(1, self.level)]
        if self.dim == 3:
            c1 = (
                R[0][0] * R[1][1] - R[0][1] * R[1][0]
                + R[0][0] * R[2][2] - R[0][2] * R[2][0]
                + R[1][1] * R[2][2] - R[1][2] * R[2][1]
            )
            return [-self.det(), c1, -self.trace(), CycElt.rational(1, self.level)]
        raise NotImplementedError

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix) or other.dim != self.dim:
            return NotImplemented
        if other.level != self.level:
            M = lcm(self.level, other.level)
            return self.at_level(M).key() == other.at_level(M).key()
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "ExactMatrix(" + str(self) + ")"

    def __str__(self):
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.rows()) + "]"


class ProjMatrix:
    """Element of PGL_n: a matrix scaled so its first nonzero entry is 1."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: ExactMatrix):
        self.matrix = _projective_normal_form(matrix)

    @classmethod
    def _canonical(cls, matrix: ExactMatrix) -> "ProjMatrix":
        obj = object.__new__(cls)
        obj.matrix = matrix
        return obj

    @property
    def dim(self) -> int:
        return self.matrix.dim

    @property
    def level(self) -> int:
        return self.matrix.level

    def identity(self) -> "ProjMatrix":
        return ProjMatrix._canonical(self.matrix.identity())

    def __mul__(self, other: "ProjMatrix") -> "ProjMatrix":
        return ProjMatrix(self.matrix * other.matrix)

    def inverse(self) -> "ProjMatrix":
        return ProjMatrix(self.matrix.adjugate())

    def __pow__(self, k: int) -> "ProjMatrix":
        return ProjMatrix(self.matrix.adjugate() ** (-k) if k < 0 else self.matrix ** k)

    def key(self):
        return self.matrix.key()

    def __eq__(self, other):
        return isinstance(other, ProjMatrix) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"ProjMatrix({self.matrix})"

    def __str__(self):
        return str(self.matrix)


def _projective_normal_form(A: ExactMatrix) -> ExactMatrix:
    for i in range(A.dim * A.dim):
        v = A.nums[i]
        if any(v):
            if A.den == 1 and v[0] == 1 and not any(v[1:]):
                return A
            c = CycElt._raw(A.level, v, A.den).inverse()
            return _scale(A, c)
    raise ZeroInverse("zero matrix has no projective class")


def _scale(A: ExactMatrix, c: CycElt) -> ExactMatrix:
    if c.level != A.level:
        M = lcm(A.level, c.level)
        A, c = A.at_level(M), c.lift(M)
    M = A.level
    d = euler_phi(M)
    table = _power_table(M)
    flat = []
    for v in A.nums:
        conv = [0] * (2 * d - 1)
        for p, x in enumerate(v):
            if x:
                for q, y in enumerate(c.nums):
                    if y:
                        conv[p + q] += x * y
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            if conv[k]:
                row = table[k % M]
                for t in range(d):
                    if row[t]:
                        out[t] += conv[k] * row[t]
        flat.extend(out)
    return ExactMatrix._raw(A.dim, M, flat, A.den * c.den)


def _as_cyc(x) -> CycElt:
    if isinstance(x, CycElt):
        return x
    return CycElt.rational(Fraction(x))


def proj(matrix) -> ProjMatrix:
    if isinstance(matrix, ProjMatrix):
        return matrix
    if not isinstance(matrix, ExactMatrix):
        matrix = ExactMatrix(matrix)
    return ProjMatrix(matrix)


def block_embed(g: ExactMatrix, corner=1) -> ExactMatrix:
    """``diag(g, corner)`` one dimension up."""
    n = g.dim
    rows = [r + [CycElt.rational(0, g.level)] for r in g.rows()]
    rows.append([CycElt.rational(0, g.level)] * n + [_as_cyc(corner)])
    return ExactMatrix(rows)


# ---------------------------------------------------------------------------
# finite groups


Subgroup = frozenset


class FiniteGroup:
    """A closed finite group with its Cayley table.

    ``elements[0]`` is the identity; ``table[a, b]`` is the index of
    ``elements[a] * elements[b]``.
    """

    def __init__(self, elements: list, table: np.ndarray, generators: list[int]):
        self.elements = elements
        self.table = table
        self.generators = generators
        self.index = {e.key(): i for i, e in enumerate(elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def index_of(self, element) -> int:
        return self.index[element.key()]

    # -- basic derived data ------------------------------------------------

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.empty(self.order, dtype=np.int64)
        rows, cols = np.nonzero(self.table == 0)
        inv[rows] = cols
        return inv

    @cached_property
    def element_orders(self) -> list[int]:
        out = []
        for g in range(self.order):
            k, x = 1, g
            while x != 0:
                x = self.table[x, g]
                k += 1
            out.append(k)
        return out

    def conjugate(self, g: int, x: int) -> int:
        """``x g x^-1``."""
        return int(self.table[self.table[x, g], self.inverses[x]])

    @cached_property
    def conjugacy_classes(self) -> list[frozenset]:
        T, inv = self.table, self.inverses
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        xs = np.arange(self.order)
        for g in range(self.order):
            if seen[g]:
                continue
            cls = np.unique(T[T[xs, g], inv])
            seen[cls] = True
            classes.append(frozenset(int(c) for c in cls))
        return classes

    @cached_property
    def center(self) -> Subgroup:
        T = self.table
        return frozenset(int(x) for x in range(self.order) if np.array_equal(T[x], T[:, x]))

    def generate(self, gens: Iterable[int]) -> Subgroup:
        gens = [g for g in set(gens) if g != 0]
        found = {0}
        frontier = [0]
        T = self.table
        while frontier:
            nxt = []
            for s in frontier:
                row = T[s]
                for g in gens:
                    y = int(row[g])
                    if y not in found:
                        found.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(found)

    def is_abelian_subset(self, S: Iterable[int]) -> bool:
        idx = np.fromiter(S, dtype=np.int64)
        sub = self.table[np.ix_(idx, idx)]
        return bool(np.array_equal(sub, sub.T))

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        T = self.table
        return all(T[a, b] == T[b, a] for a in gens for b in gens)

    @cached_property
    def derived_subgroup(self) -> Subgroup:
        T, inv = self.table, self.inverses
        comms = set()
        for a in range(self.order):
            for b in self.generators:
                # [a, b] = a b a^-1 b^-1; generators suffice for the normal closure
                comms.add(int(T[T[T[a, b], inv[a]], inv[b]]))
        return self.normal_closure(comms)

    def normal_closure(self, seed: Iterable[int]) -> Subgroup:
        seed = set(seed)
        gens = set()
        for cls in self.conjugacy_classes:
            if seed & cls:
                gens |= cls
        return self.generate(gens)

    def is_normal(self, S: Subgroup) -> bool:
        """Explicit check: ``x s x^-1`` lies in ``S`` for all ``x``, ``s``."""
        for x in range(self.order):
            for s in S:
                if self.conjugate(s, x) not in S:
                    return False
        return True

    def _product_set(self, A: Subgroup, B: Subgroup) -> Subgroup:
        a = np.fromiter(A, dtype=np.int64)
        b = np.fromiter(B, dtype=np.int64)
        return frozenset(int(x) for x in np.unique(self.table[np.ix_(a, b)]))

    @cached_property
    def normal_subgroups(self) -> list[Subgroup]:
        """All normal subgroups, as joins of normal closures of single elements."""
        base = {self.normal_closure([next(iter(c))]) for c in self.conjugacy_classes}
        found = set(base) | {frozenset([0])}
        work = list(found)
        while work:
            nxt = []
            for A in work:
                for B in base:
                    if B <= A:
                        continue
                    J = self._product_set(A, B)  # AB is the join when A, B are normal
                    if J not in found:
                        found.add(J)
                        nxt.append(J)
            work = nxt
        return sorted(found, key=lambda S: (len(S), sorted(S)))

    @cached_property
    def abelian_normal_subgroups(self) -> list[Subgroup]:
        return [N for N in self.normal_subgroups if self.is_abelian_subset(N)]

    @cached_property
    def is_simple(self) -> bool:
        return self.order > 1 and len(self.normal_subgroups) == 2

    def structure(self) -> "GroupStructure":
        return GroupStructure(
            order=self.order,
            orders=tuple(sorted(Counter(self.element_orders).items())),
            center=self.center,
            derived=self.derived_subgroup,
            is_abelian=self.is_abelian,
            is_simple=self.is_simple,
        )

    def fingerprint(self) -> "Fingerprint":
        return Fingerprint(
            order=self.order,
            orders=tuple(sorted(Counter(self.element_orders).items())),
            center_order=len(self.center),
            derived_order=len(self.derived_subgroup),
            is_abelian=self.is_abelian,
            is_simple=self.is_simple,
        )

    def dump(self) -> str:
        """One line per element: its order, a tab, its canonical form."""
        return "\n".join(
            f"{o}\t{e}" for o, e in zip(self.element_orders, self.elements)
        ) + "\n"

    def all_subgroups(self, limit: int = 48) -> set:
        """Every subgroup, by joining cyclic subgroups to a fixpoint.

        Exhaustive and slow; meant as a cross-check oracle for small groups.
        """
        if self.order > limit:
            raise ValueError(f"exhaustive enumeration limited to order {limit}")
        cyclic = {self.generate([g]) for g in range(self.order)}
        found = set(cyclic)
        work = list(found)
        while work:
            nxt = []
            for A in work:
                for C in cyclic:
                    if C <= A:
                        continue
                    J = self.generate(list(A) + list(C))
                    if J not in found:
                        found.add(J)
                        nxt.append(J)
            work = nxt
        return found


@dataclass(frozen=True)
class GroupStructure:
    order: int
    orders: tuple
    center: frozenset
    derived: frozenset
    is_abelian: bool
    is_simple: bool


@dataclass(frozen=True)
class Fingerprint:
    """Necessary-condition identifier; equal fingerprints do not prove isomorphism."""

    order: int
    orders: tuple
    center_order: int
    derived_order: int
    is_abelian: bool
    is_simple: bool


def close(generators: Sequence, cap: int | None = None) -> FiniteGroup:
    """Breadth-first closure of ``generators``; elements in discovery order."""
    if not generators:
        raise ValueError("need at least one generator")
    cap = default_cap() if cap is None else cap
    generators = _to_common_level(generators)
    ident = generators[0].identity()
    elements = [ident]
    index = {ident.key(): 0}
    parent: list = [None]
    ngen = len(generators)
    left: list[list[int]] = [[] for _ in range(ngen)]
    j = 0
    while j < len(elements):
        x = elements[j]
        for i, g in enumerate(generators):
            y = g * x
            k = index.get(y.key())
            if k is None:
                if len(elements) >= cap:
                    raise CapExceeded(f"group exceeds cap {cap}")
                k = len(elements)
                index[y.key()] = k
                elements.append(y)
                parent.append((i, j))
            left[i].append(k)
        j += 1
    n = len(elements)
    L = np.array(left, dtype=np.int64)
    table = np.empty((n, n), dtype=np.int64)
    table[0] = np.arange(n)
    for k in range(1, n):
        i, j = parent[k]
        table[k] = L[i][table[j]]
    gen_idx = [index[g.key()] for g in generators]
    return FiniteGroup(elements, table, gen_idx)


def _to_common_level(gens: Sequence) -> list:
    """Lift matrix generators to one level so canonical keys are comparable."""
    gens = list(gens)
    if not all(isinstance(g, (ExactMatrix, ProjMatrix)) for g in gens):
        return gens
    M = lcm(*(g.level for g in gens))
    out = []
    for g in gens:
        if isinstance(g, ProjMatrix):
            out.append(ProjMatrix._canonical(g.matrix.at_level(M)))
        else:
            out.append(g.at_level(M))
    return out


def structure(G: FiniteGroup) -> GroupStructure:
    return G.structure()


def normal_closure(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    return G.normal_closure(seed)


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    return G.normal_subgroups


def jordan_bruteforce(G: FiniteGroup) -> int:
    """Least index of an abelian normal subgroup."""
    return min(G.order // len(N) for N in G.abelian_normal_subgroups)


def fingerprint(G: FiniteGroup) -> Fingerprint:
    return G.fingerprint()


def project_to_pgl(G: FiniteGroup, cap: int | None = None) -> FiniteGroup:
    gens = [ProjMatrix(G.elements[i]) for i in G.generators]
    return close(gens, cap)


# ---------------------------------------------------------------------------
# relations


_TOKEN = re.compile(r"\s*(?:([A-Za-z])|(\()|(\))|\^(-?\d+))")


def parse_word(word, names: str = "abcdefghijklmnopqrstuvwxyz") -> list[tuple[int, int]]:
    """Parse a relator into ``[(generator, exponent), ...]``.

    Accepts letters (``names[k]`` is generator ``k``), parentheses and
    ``^n`` powers, e.g. ``"(xy)^3"``; or a sequence of nonzero ints where
    ``k`` stands for generator ``k-1`` and ``-k`` for its inverse.
    """
    if not isinstance(word, str):
        out = []
        for k in word:
            if not isinstance(k, int) or k == 0:
                raise BadWord(f"bad letter {k!r}")
            out.append((abs(k) - 1, 1 if k > 0 else -1))
        return out
    pos = 0
    stack: list[list] = [[]]
    text = word.replace(" ", "")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise BadWord(f"cannot parse {word!r} at {pos}")
        letter, lpar, rpar, power = m.groups()
        pos = m.end()
        if letter:
            if letter.lower() not in names:
                raise BadWord(f"unknown generator {letter!r}")
            k = names.index(letter.lower())
            stack[-1].append([(k, -1 if letter.isupper() else 1)])
        elif lpar:
            stack.append([])
        elif rpar:
            if len(stack) == 1:
                raise BadWord(f"unbalanced ')' in {word!r}")
            group = [t for piece in stack.pop() for t in piece]
            stack[-1].append(group)
        else:
            if not stack[-1]:
                raise BadWord(f"power without base in {word!r}")
            base = stack[-1].pop()
            e = int(power)
            if e < 0:
                base = [(g, -s) for g, s in reversed(base)]
                e = -e
            stack[-1].append(base * e)
    if len(stack) != 1:
        raise BadWord(f"unbalanced '(' in {word!r}")
    return [t for piece in stack[0] for t in piece]


def evaluate_word(gens: Sequence, word, names: str = "abcdefghijklmnopqrstuvwxyz"):
    letters = parse_word(word, names)
    gens = _to_common_level(gens)
    result = gens[0].identity()
    invs = {}
    for k, s in letters:
        if k >= len(gens):
            raise BadWord(f"generator index {k} out of range")
        if s > 0:
            result = result * gens[k]
        else:
            if k not in invs:
                invs[k] = gens[k].inverse()
            result = result * invs[k]
    return result


def satisfies_relations(gens: Sequence, relations: Iterable, names: str = "abcdefghijklmnopqrstuvwxyz") -> bool:
    gens = _to_common_level(gens)
    ident_key = gens[0].identity().key()
    return all(evaluate_word(gens, w, names).key() == ident_key for w in relations)


def element_order(g, cap: int = 100_000) -> int:
    ident = g.identity().key()
    x = g
    for k in range(1, cap + 1):
        if x.key() == ident:
            return k
        x = x * g
    raise CapExceeded("element order exceeds cap")


# ---------------------------------------------------------------------------
# standard permutation groups


def symmetric_group(n: int) -> FiniteGroup:
    if n < 2:
        return close([Permutation(range(max(n, 1)))])
    return close([
        Permutation.from_cycles(n, [0, 1]),
        Permutation.from_cycles(n, list(range(n))),
    ])


def alternating_group(n: int) -> FiniteGroup:
    if n < 3:
        return close([Permutation(range(max(n, 1)))])
    gens = [Permutation.from_cycles(n, [0, 1, 2])]
    if n > 3:
        cyc = list(range(n)) if n % 2 else list(range(1, n))
        gens.append(Permutation.from_cycles(n, cyc))
    return close(gens)


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order ``2n``."""
    rot = Permutation.from_cycles(n, list(range(n)))
    ref = Permutation([(-i) % n for i in range(n)])
    return close([rot, ref])


def cyclic_group(n: int) -> FiniteGroup:
    return close([Permutation.from_cycles(n, list(range(n)))])
