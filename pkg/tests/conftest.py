import pytest

from powmon.ambient import GroupSignature
from powmon.monoids import (
    ComplementSpec,
    QuadraticSurd,
    composite,
    full_n0,
    half_plane_lex,
    irrational_cone,
    numerical,
)

Z4 = GroupSignature(4)


@pytest.fixture(scope="session")
def n0():
    return full_n0()


@pytest.fixture(scope="session")
def num23():
    return numerical([2, 3])


@pytest.fixture(scope="session")
def halfplane():
    return half_plane_lex()


@pytest.fixture(scope="session")
def sqrt2():
    return QuadraticSurd(0, 1, 1, 2)


@pytest.fixture(scope="session")
def cone_sqrt2(sqrt2):
    return irrational_cone(sqrt2)


@pytest.fixture(scope="session")
def rank4_complement():
    return ComplementSpec(
        Z4,
        base_subgroup=(Z4.basis_element(0), Z4.basis_element(1)),
        positive_generators=(Z4.basis_element(2), Z4.basis_element(3)),
    )


@pytest.fixture(scope="session")
def rank4_h(rank4_complement):
    valuation = half_plane_lex(Z4, (0, 1), label="rank4-halfplane")
    return composite(valuation, rank4_complement, label="rank4-H")


@pytest.fixture(scope="session")
def rank4_k(rank4_complement, sqrt2):
    valuation = irrational_cone(sqrt2, Z4, (0, 1), label="rank4-cone")
    return composite(valuation, rank4_complement, label="rank4-K")
