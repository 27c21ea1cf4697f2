"""Built-in Coxeter matrices for the systems exercised by the test suite."""

from __future__ import annotations

from .coxeter import CoxeterMatrix


def dihedral(m: int) -> CoxeterMatrix:
    """I2(m); pass 0 for the infinite dihedral group."""
    return CoxeterMatrix(("s", "t"), ((1, m), (m, 1)))


A2 = dihedral(3)
B2 = dihedral(4)
H2 = dihedral(5)
I2_7 = dihedral(7)
INF_DIHEDRAL = dihedral(0)

A3 = CoxeterMatrix(
    ("s", "t", "u"),
    ((1, 3, 2), (3, 1, 3), (2, 3, 1)),
)

B3 = CoxeterMatrix(
    ("s", "t", "u"),
    ((1, 4, 2), (4, 1, 3), (2, 3, 1)),
)

H3 = CoxeterMatrix(
    ("s", "t", "u"),
    ((1, 5, 2), (5, 1, 3), (2, 3, 1)),
)

BUILTIN = {
    "a2": A2,
    "b2": B2,
    "h2": H2,
    "a3": A3,
    "b3": B3,
    "h3": H3,
    "i2_7": I2_7,
    "infinite_dihedral": INF_DIHEDRAL,
}
