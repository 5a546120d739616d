import random

import pytest

from jordanum.arith import reduce_unit, units
from jordanum.cli import field_from_text
from jordanum.fields import Abelian, canonicalize

# Expected Jordan constants per field text: (GL2, SL2, PGL2, PGL3).
BATTERY = {
    "CC": (60, 60, 60, 360),
    "RR": (2, 2, 2, 60),
    "QQ": (2, 2, 2, 6),
    "QQ(omega, sqrt(5))": (60, 60, 60, 360),
    "QQ(sqrt(-7))": (2, 2, 2, 168),
    "QQ(sqrt(5))": (2, 2, 2, 60),
    "QQ(omega)": (12, 12, 6, 24),
    "QQ(i)": (24, 12, 6, 24),
    "QQ(zeta(8))": (24, 24, 6, 24),
    "QQ(sqrt(-5))": (12, 12, 6, 12),
    "QQ(sqrt(5), t)": (2, 2, 2, 60),
}

GROUP_ORDER = ("gl2", "sl2", "pgl2", "pgl3")


@pytest.fixture(scope="session")
def battery():
    return {text: field_from_text(text) for text in BATTERY}


def random_descriptors(count: int, max_m: int = 120, seed: int = 20240611):
    """Distinct canonical abelian descriptors from subgroups generated by one or two units."""
    rng = random.Random(seed)
    out: dict = {}
    while len(out) < count:
        m = rng.randint(1, max_m)
        U = units(m)
        gens = rng.sample(U, k=min(len(U), rng.randint(0, 2)))
        out.setdefault(canonicalize(Abelian(m, tuple(sorted(generated_units(gens, m))))), None)
    return list(out)


def generated_units(gens, m: int) -> set:
    """Subgroup of ``(Z/m)^x`` generated by ``gens``."""
    S = {reduce_unit(1, m)}
    frontier = list(S)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = reduce_unit(x * g, m)
                if y not in S:
                    S.add(y)
                    nxt.append(y)
        frontier = nxt
    return S
