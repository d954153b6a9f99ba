"""Shared fixtures: a small zoo of algebras reused across test modules."""

import pytest

from artinv.algebra import ArtinianAlgebra
from artinv.fields import QQ, PrimeField


@pytest.fixture(scope="session")
def cube_f2():
    """F2[x,y,z] mod the three squares; length 8, Hilbert function (1,3,3,1)."""
    return ArtinianAlgebra.from_strings(
        PrimeField(2), ("x", "y", "z"), ("x^2", "y^2", "z^2"))


@pytest.fixture(scope="session")
def six_quadrics():
    """Q[x,y,z,w] mod four squares and two products; length 9, socle dimension 4."""
    return ArtinianAlgebra.from_strings(
        QQ, ("x", "y", "z", "w"), ("x^2", "y^2", "z^2", "w^2", "x*y", "z*w"))


@pytest.fixture(scope="session")
def apolar12():
    """Five-variable length-12 algebra with Hilbert function (1,5,5,1)."""
    gens = ("z^2", "y*z", "x*z", "u*z", "y^2", "x*y", "2*u*y - v*z", "x^2",
            "v*x", "u*x - 2*v*y", "v^3", "u*v^2", "u^2*v", "u^3")
    return ArtinianAlgebra.from_strings(QQ, ("u", "v", "x", "y", "z"), gens)


@pytest.fixture(scope="session")
def ten_quadrics():
    """Ten quadric relations in five variables; length 12, Hilbert function (1,5,5,1)."""
    gens = ("x1*x3 + x2*x3", "x1*x4 + x2*x4", "x3^2 + x1*x5 - x2*x5",
            "x4^2 + x1*x5 - x2*x5", "x1^2", "x2^2", "x3*x4", "x3*x5",
            "x4*x5", "x5^2")
    return ArtinianAlgebra.from_strings(QQ, ("x1", "x2", "x3", "x4", "x5"), gens)


@pytest.fixture(scope="session")
def tail13311():
    """Three variables, Hilbert function (1,3,3,1,1); not homogeneous."""
    gens = ("x1*x2", "x2*x3", "x1^2", "x1*x3^2 - x2^4", "x3^3 - x2^4")
    return ArtinianAlgebra.from_strings(QQ, ("x1", "x2", "x3"), gens)


@pytest.fixture(scope="session")
def chain4():
    """Q[t] mod t^4, the length-4 chain."""
    return ArtinianAlgebra.from_strings(QQ, ("t",), ("t^4",))
