import pytest

from jetclasses import (
    EmptyVarietyError,
    GradingError,
    Ideal,
    MultiGrading,
    OracleScaleError,
    PolynomialRing,
    TermOrder,
    brute_force_multidegree,
    determinantal_chain,
    determinantal_generators,
    elementary_symmetric,
    ideal_dimension,
    ideal_multidegree,
    jet_ideal,
    contact_ideal,
    lattice_ring,
    matrix_grading,
    monomial_ideal_multidegree,
    multidegree_of_polynomial,
    parse_grading,
    parse_polynomials,
)

from oracles import random_monomial_generators

XY = PolynomialRing.from_names(["x", "y"])
x, y = XY.gens
UNIT = MultiGrading(XY, {"x": (1,), "y": (1,)})


def test_principal_monomial():
    g = MultiGrading(XY, {"x": (2,), "y": (3,)})
    assert str(monomial_ideal_multidegree(Ideal([x**3]), g)) == "6*t1"
    assert str(brute_force_multidegree(Ideal([x**2]), UNIT)) == "2*t1"


def test_two_reduced_components():
    g = MultiGrading(XY, {"x": (1, 0), "y": (0, 1)})
    assert str(monomial_ideal_multidegree(Ideal([x * y]), g)) == "t1 + t2"


def test_embedded_component_is_discarded():
    # (x^2, xy) = (x) cap (x^2, y): only the line counts, and y is a unit
    # at the generic point of the line, so its multiplicity is 1
    I = Ideal([x**2, x * y])
    assert str(monomial_ideal_multidegree(I, UNIT)) == "t1"
    assert str(brute_force_multidegree(I, UNIT)) == "t1"
    assert str(monomial_ideal_multidegree(I, UNIT)) != "2*t1 + t1^2"


def test_artinian_count():
    I = Ideal([x**2, x * y, y**3])
    assert str(monomial_ideal_multidegree(I, UNIT)) == "4*t1^2"
    assert str(brute_force_multidegree(I, UNIT)) == "4*t1^2"


def test_cusp_classes():
    (f,) = parse_polynomials(["x^3 - y^2"])
    V = Ideal([f])
    assert str(ideal_multidegree(V, parse_grading("x:2;y:3", V.ring))) == "6*t1"
    TV = jet_ideal(V, 1)
    assert str(ideal_multidegree(TV, parse_grading("x:2;y:3", TV.ring))) == "36*t1^2"


def test_e2_of_three():
    I = determinantal_generators(3, 2)
    assert ideal_multidegree(I, matrix_grading(I.ring, 3)) == elementary_symmetric(2, lattice_ring(3))
    assert str(elementary_symmetric(2, lattice_ring(3))) == "t1*t2 + t1*t3 + t2*t3"


def test_inhomogeneous_generator_is_named():
    with pytest.raises(GradingError, match=r"x \+ y\^2|y\^2 \+ x"):
        ideal_multidegree(Ideal([x + y**2]), UNIT)


def test_unit_ideal():
    with pytest.raises(EmptyVarietyError):
        monomial_ideal_multidegree(Ideal([XY.one()]), UNIT)
    with pytest.raises(EmptyVarietyError):
        brute_force_multidegree(Ideal([XY.one()]), UNIT)


def test_oracle_scale():
    big = PolynomialRing.from_names([f"v{i}" for i in range(21)])
    g = MultiGrading(big, {f"v{i}": (1,) for i in range(21)})
    with pytest.raises(OracleScaleError):
        brute_force_multidegree(Ideal([big.gens[0]]), g)


def test_oracle_agreement_small_sample(rng):
    for _ in range(100):
        n = rng.randint(1, 5)
        R = PolynomialRing.from_names([f"v{i}" for i in range(n)])
        g = MultiGrading(R, {f"v{i}": (rng.randint(1, 2), rng.randint(0, 1)) for i in range(n)})
        I = Ideal([R.monomial(e) for e in random_monomial_generators(rng, n)], R)
        assert monomial_ideal_multidegree(I, g) == brute_force_multidegree(I, g)


@pytest.mark.parametrize("n, r", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)])
def test_term_order_independence(n, r):
    I = determinantal_generators(n, r)
    g = matrix_grading(I.ring, n)
    assert ideal_multidegree(I, g, TermOrder.lex()) == ideal_multidegree(I, g, TermOrder.grevlex())


def test_hypersurface_consistency():
    g = MultiGrading(XY, {"x": (2, 2), "y": (3, 3)})
    f = x**3 - 5 * y**2
    T = g.class_ring()
    deg = multidegree_of_polynomial(f, g)
    expected = sum((d * T.gen(f"t{i + 1}") for i, d in enumerate(deg)), T.zero())
    assert ideal_multidegree(Ideal([f]), g) == expected
    assert str(expected) == "6*t1 + 6*t2"


def test_degree_equals_codimension():
    for n, r in [(2, 1), (3, 2), (3, 3)]:
        I = determinantal_generators(n, r)
        cls = ideal_multidegree(I, matrix_grading(I.ring, n))
        codim = I.ring.nvars - ideal_dimension(I)
        assert {sum(e) for e in cls.as_dict()} == {codim}


def test_multiplicative_on_contact_ideal():
    chain = determinantal_chain(2)
    C = contact_ideal(chain, (1, 1))
    g = matrix_grading(C.ring, 2)
    assert C.ring.nvars - ideal_dimension(C) == 3
    T = lattice_ring(2)
    V1, V2 = chain.ideals
    product = ideal_multidegree(V1, matrix_grading(V1.ring, 2)) * ideal_multidegree(V2, matrix_grading(V2.ring, 2))
    assert ideal_multidegree(C, g) == product == elementary_symmetric(1, T) * elementary_symmetric(2, T)
