"""Closed-form Jordan constants of GL2, SL2, PGL2 and PGL3.

Each ``jordan_*`` function is an ordered cascade from the largest value
down, so it returns an answer for any property vector.  ``clauses`` lists
the full condition of every clause, negations included, which lets
callers check that exactly one clause fires.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

from .errors import MissingOrder, NotPrimitiveTag, OutOfRange, UnrealizableVector
from .fields import FieldDescriptor
from .oracle import (
    PropertyVector,
    has_real_cyclotomic,
    has_sqrt,
    has_zeta,
    minus_one_sum_two_squares,
)


class AmbientGroup(enum.Enum):
    GL2 = "gl2"
    SL2 = "sl2"
    PGL2 = "pgl2"
    PGL3 = "pgl3"

    def __str__(self):
        return self.name

    @classmethod
    def parse(cls, text: str) -> "AmbientGroup":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown group {text!r}; expected one of gl2, sl2, pgl2, pgl3") from None


class SubgroupTypeTag(enum.Enum):
    # finite subgroups of PGL2
    CYCLIC = "Cyclic"
    DIHEDRAL = "Dihedral"
    A4 = "A4"
    S4 = "S4"
    A5 = "A5"
    # finite subgroups of PGL3 up to isomorphism
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"
    H = "H"
    I = "I"
    L = "L"

    def __str__(self):
        return self.value


PGL2_TAGS = (SubgroupTypeTag.CYCLIC, SubgroupTypeTag.DIHEDRAL, SubgroupTypeTag.A4,
             SubgroupTypeTag.S4, SubgroupTypeTag.A5)
PGL3_TAGS = tuple(SubgroupTypeTag(x) for x in "ABCDEFGHIL")
PRIMITIVE_TAGS = tuple(SubgroupTypeTag(x) for x in "EFGHIL")


@dataclass(frozen=True)
class JordanAnswer:
    value: int
    witness_family: SubgroupTypeTag
    name: str
    branch: str

    def as_dict(self) -> dict:
        return {"value": self.value, "branch": self.branch,
                "family": str(self.witness_family), "name": self.name}


def _require_realizable(p: PropertyVector) -> None:
    bad = p.violations()
    if bad:
        raise UnrealizableVector("; ".join(bad))


# ---------------------------------------------------------------------------
# clause tables: (branch, value, tag, name, full condition)

Clause = tuple[str, int, SubgroupTypeTag, str, Callable[[PropertyVector], bool]]
T = SubgroupTypeTag

_PGL3: list[Clause] = [
    ("PGL3:(i)", 360, T.L, "A6",
     lambda p: p.has_omega and p.has_sqrt5),
    ("PGL3:(ii)", 168, T.I, "PSL2(F7)",
     lambda p: not (p.has_omega and p.has_sqrt5) and p.has_sqrt_minus7),
    ("PGL3:(iii)", 60, T.H, "A5",
     lambda p: p.has_sqrt5 and not p.has_omega and not p.has_sqrt_minus7),
    ("PGL3:(iv)(a)", 24, T.G, "Hessian group",
     lambda p: not p.has_sqrt5 and not p.has_sqrt_minus7 and p.has_omega),
    ("PGL3:(iv)(b)", 24, T.B, "GL2 lift of S4",
     lambda p: not p.has_sqrt5 and not p.has_sqrt_minus7 and not p.has_omega
     and p.sum_two_squares and p.has_2zeta2_rou),
    ("PGL3:(v)", 12, T.B, "GL2 lift of A4",
     lambda p: p.sum_two_squares and not (p.has_omega or p.has_sqrt5 or p.has_sqrt_minus7)
     and not p.has_2zeta2_rou),
    ("PGL3:(vi)", 6, T.D, "S4",
     lambda p: not p.sum_two_squares and not (p.has_omega or p.has_sqrt5 or p.has_sqrt_minus7)),
]

_GL2: list[Clause] = [
    ("GL2:(i)", 60, T.A5, "GL2 lift of A5",
     lambda p: p.sum_two_squares and p.has_sqrt5),
    ("GL2:(ii)", 24, T.S4, "GL2 lift of S4",
     lambda p: p.sum_two_squares and not p.has_sqrt5 and p.has_2zeta2_rou),
    ("GL2:(iii)", 12, T.A4, "GL2 lift of A4",
     lambda p: p.sum_two_squares and not p.has_sqrt5 and not p.has_2zeta2_rou),
    ("GL2:(iv)", 2, T.DIHEDRAL, "D3",
     lambda p: not p.sum_two_squares),
]

_SL2: list[Clause] = [
    ("SL2:(i)", 60, T.A5, "binary icosahedral",
     lambda p: p.sum_two_squares and p.has_sqrt5),
    ("SL2:(ii)", 24, T.S4, "binary octahedral",
     lambda p: p.sum_two_squares and not p.has_sqrt5 and (p.has_sqrt2 or p.has_sqrt_minus2)),
    ("SL2:(iii)", 12, T.A4, "binary tetrahedral",
     lambda p: p.sum_two_squares and not (p.has_sqrt5 or p.has_sqrt2 or p.has_sqrt_minus2)),
    ("SL2:(iv)", 2, T.DIHEDRAL, "dicyclic",
     lambda p: not p.sum_two_squares),
]

_PGL2: list[Clause] = [
    ("PGL2:(i)", 60, T.A5, "A5",
     lambda p: p.sum_two_squares and p.has_sqrt5),
    ("PGL2:(ii)", 6, T.S4, "S4",
     lambda p: p.sum_two_squares and not p.has_sqrt5),
    ("PGL2:(iii)", 2, T.DIHEDRAL, "D3",
     lambda p: not p.sum_two_squares),
]

_TABLES = {
    AmbientGroup.PGL3: _PGL3,
    AmbientGroup.GL2: _GL2,
    AmbientGroup.SL2: _SL2,
    AmbientGroup.PGL2: _PGL2,
}

# The cascades test the shortest sufficient condition, largest value first.
_CASCADES: dict[AmbientGroup, list[tuple[str, Callable[[PropertyVector], bool]]]] = {
    AmbientGroup.PGL3: [
        ("PGL3:(i)", lambda p: p.has_omega and p.has_sqrt5),
        ("PGL3:(ii)", lambda p: p.has_sqrt_minus7),
        ("PGL3:(iii)", lambda p: p.has_sqrt5),
        ("PGL3:(iv)(a)", lambda p: p.has_omega),
        ("PGL3:(iv)(b)", lambda p: p.sum_two_squares and p.has_2zeta2_rou),
        ("PGL3:(v)", lambda p: p.sum_two_squares),
        ("PGL3:(vi)", lambda p: True),
    ],
    AmbientGroup.GL2: [
        ("GL2:(i)", lambda p: p.sum_two_squares and p.has_sqrt5),
        ("GL2:(ii)", lambda p: p.sum_two_squares and p.has_2zeta2_rou),
        ("GL2:(iii)", lambda p: p.sum_two_squares),
        ("GL2:(iv)", lambda p: True),
    ],
    AmbientGroup.SL2: [
        ("SL2:(i)", lambda p: p.sum_two_squares and p.has_sqrt5),
        ("SL2:(ii)", lambda p: p.sum_two_squares and (p.has_sqrt2 or p.has_sqrt_minus2)),
        ("SL2:(iii)", lambda p: p.sum_two_squares),
        ("SL2:(iv)", lambda p: True),
    ],
    AmbientGroup.PGL2: [
        ("PGL2:(i)", lambda p: p.sum_two_squares and p.has_sqrt5),
        ("PGL2:(ii)", lambda p: p.sum_two_squares),
        ("PGL2:(iii)", lambda p: True),
    ],
}


def _answer(ambient: AmbientGroup, branch: str) -> JordanAnswer:
    for b, value, tag, name, _ in _TABLES[ambient]:
        if b == branch:
            return JordanAnswer(value, tag, name, branch)
    raise AssertionError(branch)  # pragma: no cover


def jordan(p: PropertyVector, ambient: AmbientGroup, strict: bool = False) -> JordanAnswer:
    """Jordan constant of ``ambient`` over a field with property vector ``p``.

    With ``strict`` the full clause condition of the fired branch is
    re-checked and must be the only clause that holds.
    """
    _require_realizable(p)
    for branch, cond in _CASCADES[ambient]:
        if cond(p):
            ans = _answer(ambient, branch)
            break
    if strict:
        fired = satisfied_clauses(p, ambient)
        if fired != [_clause_root(ans.branch)]:
            raise AssertionError(f"{ans.branch}: satisfied clauses {fired}")
    return ans


def jordan_pgl3(p: PropertyVector, strict: bool = False) -> JordanAnswer:
    return jordan(p, AmbientGroup.PGL3, strict)


def jordan_gl2(p: PropertyVector, strict: bool = False) -> JordanAnswer:
    return jordan(p, AmbientGroup.GL2, strict)


def jordan_sl2(p: PropertyVector, strict: bool = False) -> JordanAnswer:
    return jordan(p, AmbientGroup.SL2, strict)


def jordan_pgl2(p: PropertyVector, strict: bool = False) -> JordanAnswer:
    return jordan(p, AmbientGroup.PGL2, strict)


def jordan_all(p: PropertyVector, strict: bool = False) -> dict[AmbientGroup, JordanAnswer]:
    return {g: jordan(p, g, strict) for g in AmbientGroup}


def _clause_root(branch: str) -> str:
    # "(iv)(a)" and "(iv)(b)" are two halves of one clause
    head, _, rest = branch.partition(":")
    return head + ":" + rest.split(")")[0] + ")"


def clauses(ambient: AmbientGroup) -> list[Clause]:
    return list(_TABLES[ambient])


def satisfied_clauses(p: PropertyVector, ambient: AmbientGroup) -> list[str]:
    """Clause labels whose complete condition holds for ``p``."""
    out: list[str] = []
    for branch, _, _, _, cond in _TABLES[ambient]:
        root = _clause_root(branch)
        if cond(p) and root not in out:
            out.append(root)
    return out


# ---------------------------------------------------------------------------
# existence criteria


def pgl2_subgroup_exists(K: FieldDescriptor, tag: SubgroupTypeTag, r: int | None = None) -> bool:
    """Whether ``PGL2(K)`` contains a subgroup of the given type."""
    if tag in (SubgroupTypeTag.CYCLIC, SubgroupTypeTag.DIHEDRAL):
        if r is None:
            raise MissingOrder(f"{tag} needs an order r")
        if r < 3:
            return True  # C1, C2, D1 = C2 and D2 = V4 always exist
        return has_real_cyclotomic(K, r)
    if tag in (SubgroupTypeTag.A4, SubgroupTypeTag.S4):
        return minus_one_sum_two_squares(K)
    if tag is SubgroupTypeTag.A5:
        return minus_one_sum_two_squares(K) and has_sqrt(K, 5)
    raise ValueError(f"{tag} is not a PGL2 subgroup type")


def pgl3_primitive_exists(K: FieldDescriptor, tag: SubgroupTypeTag) -> bool:
    """Whether ``PGL3(K)`` contains a primitive subgroup of the given type."""
    if tag in (SubgroupTypeTag.E, SubgroupTypeTag.F, SubgroupTypeTag.G):
        return has_zeta(K, 3)
    if tag is SubgroupTypeTag.H:
        return has_sqrt(K, 5)
    if tag is SubgroupTypeTag.I:
        return has_sqrt(K, -7)
    if tag is SubgroupTypeTag.L:
        return has_sqrt(K, 5) and has_zeta(K, 3)
    raise NotPrimitiveTag(f"{tag} is not a primitive PGL3 type")


# ---------------------------------------------------------------------------
# Jordan constants of specific finite groups

_FIXED = {
    "central-ext-A5": 60,
    "GL2-over-A4": 12,
    "GL2-over-S4": 24,
    "Hessian": 24,
    "S4": 6,
    "A4": 3,
}


def finite_jordan_formula(name: str, n: int | None = None) -> int:
    """Known Jordan constant of a named finite group family."""
    if name in _FIXED:
        return _FIXED[name]
    if name in ("S_n", "A_n"):
        if n is None or n < 4:
            raise OutOfRange(f"{name} needs n >= 4")
        if n == 4:
            return 6 if name == "S_n" else 3
        return math.factorial(n) // (1 if name == "S_n" else 2)
    if name in ("D_n", "central-ext-D_n"):
        if n is None or n < 3:
            raise OutOfRange(f"{name} needs n >= 3")
        return 2
    raise OutOfRange(f"unknown family {name!r}")
