from fractions import Fraction

import pytest
import sympy

from jetclasses import (
    Ideal,
    MultiGrading,
    NotAChainError,
    PolynomialRing,
    RingTooSmallError,
    SubvarietyChain,
    contact_ideal,
    determinantal_chain,
    elementary_symmetric,
    ideal_dimension,
    ideal_multidegree,
    jet_ideal,
    jet_ring,
    lambda_of_m,
    lattice_ring,
    lct_estimate,
    matrix_grading,
    multidegree_of_polynomial,
    parse_polynomials,
    prolong,
)

from oracles import prolong_by_substitution, random_polynomial, to_sympy

(CUSP,) = parse_polynomials(["x^3 - y^2"])


def test_first_prolongation_of_cusp():
    J = jet_ring(CUSP.ring, 1)
    assert str(prolong(CUSP.map_to(J), 1)) == "3*x^2*x_1 - 2*y*y_1"


def test_second_prolongation_of_cusp():
    J = jet_ring(CUSP.ring, 2)
    f2 = prolong(CUSP.map_to(J), 2)
    assert str(f2) == "6*x*x_1^2 + 3*x^2*x_2 - 2*y_1^2 - 2*y*y_2"
    assert sympy.expand(to_sympy(f2) - prolong_by_substitution(CUSP, 2)) == 0


def test_zeroth_prolongation_is_identity():
    J = jet_ring(CUSP.ring, 2)
    assert prolong(CUSP.map_to(J), 0) == CUSP.map_to(J)


def test_ring_too_small():
    with pytest.raises(RingTooSmallError):
        prolong(CUSP.map_to(jet_ring(CUSP.ring, 1)), 2)


def test_jet_ring_shape():
    J = jet_ring(CUSP.ring, 3)
    assert J.nvars == 8
    assert [str(v) for v in J.variables[:4]] == ["x", "x_1", "x_2", "x_3"]


def test_jet_ideal_generators():
    J1 = jet_ideal(Ideal([CUSP]), 1)
    assert [str(g) for g in J1.generators] == ["x^3 - y^2", "3*x^2*x_1 - 2*y*y_1"]
    J0 = jet_ideal(Ideal([CUSP]), 0)
    assert [str(g) for g in J0.generators] == ["x^3 - y^2"]
    assert len(jet_ideal(determinantal_chain(3).ideals[1], 2).generators) == 9


def test_jets_of_the_2x2_determinant():
    V1 = determinantal_chain(2).ideals[0]
    J = jet_ideal(V1, 1)
    t1, t2 = lattice_ring(2).gens
    assert ideal_multidegree(J, matrix_grading(J.ring, 2)) == (t1 + t2) ** 2


def test_substitution_oracle(rng):
    R = PolynomialRing.from_names(["x", "y", "z"])
    for _ in range(25):
        f = random_polynomial(rng, R, terms=3, degree=3)
        k = rng.randint(0, 4)
        got = prolong(f.map_to(jet_ring(R, k)), k)
        assert sympy.expand(to_sympy(got) - prolong_by_substitution(f, k)) == 0


def test_prolongation_keeps_the_class():
    R = CUSP.ring
    for k in range(4):
        J = jet_ring(R, k)
        g = MultiGrading(J, {str(v): ((2,) if v.name == "x" else (3,)) for v in J.variables})
        fk = prolong(CUSP.map_to(J), k)
        assert multidegree_of_polynomial(fk, g) == (6,)


def test_lambda_of_m():
    assert lambda_of_m((1, 0, 2)) == (3, 2, 2)
    assert lambda_of_m((0, 0, 0)) == (0, 0, 0)
    assert lambda_of_m((4,)) == (4,)


def test_contact_ideal_examples():
    chain = determinantal_chain(2)
    C = contact_ideal(chain, (1, 1))
    assert [str(g) for g in C.generators][:2] == ["a11", "a21"]
    assert len(C.generators) == 3
    T = lattice_ring(2)
    assert ideal_multidegree(C, matrix_grading(C.ring, 2)) == elementary_symmetric(1, T) * elementary_symmetric(2, T)
    assert C.ring.nvars - ideal_dimension(C) == sum(lambda_of_m((1, 1)))

    single = SubvarietyChain([chain.ideals[0]])
    assert contact_ideal(single, (3,)).generators == jet_ideal(chain.ideals[0], 2).generators
    assert contact_ideal(chain, (0, 0)).generators == ()


def test_chain_checks():
    chain = determinantal_chain(2)
    with pytest.raises(NotAChainError):
        SubvarietyChain([chain.ideals[1], chain.ideals[0]])
    with pytest.raises(RingTooSmallError):
        contact_ideal(chain, (1, 1), order=0)


def test_complete_intersection_product():
    # the codimension hypothesis is checked before the product is compared
    chain = determinantal_chain(3)
    base = [ideal_multidegree(I, matrix_grading(I.ring, 3)) for I in chain.ideals]
    r = [I.ring.nvars - ideal_dimension(I) for I in chain.ideals]
    for mult in [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (2, 0, 0)]:
        C = contact_ideal(chain, mult)
        if C.ring.nvars - ideal_dimension(C) != sum(m * ri for m, ri in zip(mult, r)):
            continue
        want = lattice_ring(3).one()
        for cls, m in zip(base, mult):
            want = want * cls**m
        assert ideal_multidegree(C, matrix_grading(C.ring, 3)) == want


def test_lct_examples():
    est = lct_estimate(Ideal([CUSP]), 2, 5)
    assert est.value == Fraction(5, 6)
    assert est.dimensions == (1, 2, 3, 4, 5, 7)
    assert not est.exact
    R = PolynomialRing.from_names(["x", "y"])
    x, y = R.gens
    assert lct_estimate(Ideal([x]), 2, 4).value == 1
    node = lct_estimate(Ideal([x * y]), 2, 3)
    assert node.value == 1
    assert node.dimensions == (1, 2, 3, 4)
    assert lct_estimate(Ideal([x]), 2, 2, sufficiently_divisible=True).exact


def test_lct_in_larger_ambient_space():
    (line,) = parse_polynomials(["x"])
    assert lct_estimate(Ideal([line]), 2, 3).value == 1
    with pytest.raises(ValueError):
        lct_estimate(Ideal([CUSP]), 1, 1)
