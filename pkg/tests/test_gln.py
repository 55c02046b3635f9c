import pytest
from hypothesis import given, settings, strategies as st

from jetclasses import (
    ContactProfile,
    InsufficientTruncationError,
    TruncatedSeries,
    TruncatedSeriesMatrix,
    ParseError,
    cell_dimension,
    conjecture_class,
    contact_profile,
    determinantal_chain,
    determinantal_generators,
    e_lambda,
    elementary_symmetric,
    flag_conjecture_class,
    format_factored,
    ideal_multidegree,
    is_normal_form,
    lambda_of_m,
    lambda_prime,
    lambda_tilde,
    lattice_ring,
    matrix_grading,
    normal_form,
    verify_conjecture_case,
)

from oracles import random_invertible, random_normal_form, random_partition

WORKED = "m=3\nt+t^2, 1+2*t; t, 1+t^2"


def diag(n, m, entry):
    return TruncatedSeriesMatrix([[entry if i == j else 0 for j in range(n)] for i in range(n)], m)


def test_parse_and_format():
    x = TruncatedSeriesMatrix.parse(WORKED)
    assert str(x) == "m=3\nt+t^2, 1+2*t; t, 1+t^2"
    assert TruncatedSeriesMatrix.parse("m=3; t+t^2, 1+2*t; t, 1+t^2") == x
    assert x.det() == TruncatedSeries([0, 0, -1, 1], 3)
    with pytest.raises(ParseError):
        TruncatedSeriesMatrix.parse("t, 1; 0, t")
    with pytest.raises(ParseError):
        TruncatedSeriesMatrix.parse("m=2; t, 1; 0")


def test_determinantal_generators():
    assert [str(g) for g in determinantal_generators(2, 2).generators] == ["a11", "a21"]
    assert [str(g) for g in determinantal_generators(2, 1).generators] == ["-a12*a21 + a11*a22"]
    assert len(determinantal_generators(3, 2).generators) == 3
    assert len(determinantal_generators(4, 2).generators) == 4
    with pytest.raises(ValueError):
        determinantal_generators(2, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_base_classes(n):
    T = lattice_ring(n)
    for r in range(1, n + 1):
        I = determinantal_generators(n, r)
        assert ideal_multidegree(I, matrix_grading(I.ring, n)) == elementary_symmetric(r, T)


def test_profiles():
    x = TruncatedSeriesMatrix.parse(WORKED)
    assert str(contact_profile(x)) == "(2, 1)"
    assert contact_profile(TruncatedSeriesMatrix.identity(3, 2)).partition() == (0, 0, 0)
    t = TruncatedSeries([0, 1], 3)
    assert contact_profile(diag(3, 3, t)).partition() == (3, 2, 1)


def test_saturated_profile():
    t2 = TruncatedSeries([0, 0, 1], 2)
    p = contact_profile(diag(2, 2, t2))
    assert p == ContactProfile((3, 2), (True, False), 2)
    assert str(p) == "(>=3, 2)"
    assert not p.certified
    with pytest.raises(InsufficientTruncationError):
        normal_form(diag(2, 2, t2))


def test_truncation_must_exceed_lambda1():
    t = TruncatedSeries([0, 1], 2)
    with pytest.raises(InsufficientTruncationError):
        normal_form(diag(2, 2, t))


def test_worked_normal_form():
    x = TruncatedSeriesMatrix.parse(WORKED)
    p = normal_form(x)
    assert str(p) == "m=3\nt, 1; 0, t"
    assert is_normal_form(p)
    assert normal_form(p) == p


def test_normal_form_properties(rng):
    for n in (2, 3):
        for _ in range(30):
            lam = random_partition(rng, n, 3)
            m = lam[0] + rng.randint(1, 2)
            L = random_normal_form(rng, n, m, lam)
            x = random_invertible(rng, n, m) @ L
            p = normal_form(x)
            assert p == L
            assert is_normal_form(p)
            assert normal_form(p) == p
            assert contact_profile(p) == contact_profile(x)


def test_cell_dimension_matches_shape(rng):
    for n in (2, 3, 4):
        for _ in range(10):
            lam = random_partition(rng, n, 4)
            L = random_normal_form(rng, n, lam[0] + 1, lam)
            free = sum(L[j, j].order() for j in range(n) for i in range(j))
            assert cell_dimension(lam) == free
    assert cell_dimension((2, 1)) == 1


def test_lambda_transforms_examples():
    assert lambda_prime((3, 2, 1), (1,)) == (1, 1, 0)
    assert lambda_tilde((3, 2, 1), (1,)) == (2, 1, 1)
    assert e_lambda((3, 2, 1), (1,)) == 2
    assert lambda_prime((0, 0, 0), (1,)) == (0, 0, 0)
    assert e_lambda((0, 0, 0), (1, 2)) == 0


def test_full_flag_recovers_m():
    for mult in [(1, 0, 2), (2, 2, 1), (0, 0, 3), (1, 1, 1, 1)]:
        n = len(mult)
        assert lambda_tilde(lambda_of_m(mult), tuple(range(1, n))) == mult


@st.composite
def partition_and_flag(draw):
    n = draw(st.integers(2, 8))
    lam = tuple(sorted(draw(st.lists(st.integers(0, 6), min_size=n, max_size=n)), reverse=True))
    r = tuple(sorted(draw(st.sets(st.integers(1, n - 1), min_size=1))))
    return lam, r


@settings(max_examples=300, deadline=None)
@given(partition_and_flag())
def test_lambda_identities(case):
    lam, r = case
    prime, tilde = lambda_prime(lam, r), lambda_tilde(lam, r)
    assert tuple(a + b for a, b in zip(prime, tilde)) == lam
    assert all(prime[i] >= prime[i + 1] for i in range(len(prime) - 1))
    # e_lambda raises if its two formulas disagree
    assert e_lambda(lam, r) == sum(prime)


def test_full_flag_classes():
    T = lattice_ring(3)
    t1, t2, t3 = T.gens
    assert flag_conjecture_class((1, 0, 0), (1, 2)) == -t3
    assert flag_conjecture_class((0, 2, 1), (1, 2)) == t2**2 * -t1


def test_format_factored():
    assert format_factored((1, 1)) == "(t1+t2)*(t1*t2)"
    assert format_factored((0, 3, 0)) == "(t1*t2+t1*t3+t2*t3)^3"
    assert format_factored((0, 0)) == "1"
    assert conjecture_class((0, 0)) == lattice_ring(2).one()


def test_verdicts():
    v = verify_conjecture_case(2, (1, 1))
    assert v.summary() == "EQUAL (t1+t2)*(t1*t2)"
    assert v.codimension == v.expected_codimension == 3
    v = verify_conjecture_case(3, (0, 3, 0))
    assert v.equal and v.status == "EQUAL"
    assert verify_conjecture_case(3, (0, 0, 0)).summary() == "EQUAL 1"
    assert verify_conjecture_case(3, (0, 3, 0), budget=0).summary() == "BUDGET n=3 m=0,3,0"


def test_chain_is_nested():
    chain = determinantal_chain(3)
    assert len(chain) == 3
