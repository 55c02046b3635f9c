import itertools
from fractions import Fraction

import pytest

from jetclasses import (
    DeformedRingElement,
    Fan,
    InvalidFanError,
    NotARefinementError,
    OutsideSupportError,
    affine_space,
    blowup_a2,
    deformed_product,
    hirzebruch,
    lattice_points,
    locate_cone,
    monomial_of_point,
    p1xp1,
    pl_value,
    precedes,
    projective_space,
    refinement_compare,
    sr_ideal,
)

FANS = {
    "P2": projective_space(2),
    "P1xP1": p1xp1(),
    "F1": hirzebruch(1),
    "Bl": blowup_a2(),
}


def gens(ideal):
    return sorted(str(g) for g in ideal.generators)


def test_locate_cone_examples():
    assert locate_cone(affine_space(2), (1, 1)).coefficients == (1, 1)
    loc = locate_cone(projective_space(2), (-2, -1))
    assert [projective_space(2).rays[i] for i in loc.rays] == [(0, 1), (-1, -1)]
    assert loc.coefficients == (1, 2)
    with pytest.raises(OutsideSupportError):
        locate_cone(affine_space(1), (-1,))


def test_tie_break_is_lowest_cone():
    # (1, 0) lies on the wall between the first two cones of P^2
    assert locate_cone(projective_space(2), (1, 0)).cone == 0


def test_monomials():
    assert str(monomial_of_point(projective_space(2), (2, 1))) == "x1^2*x2"
    assert str(monomial_of_point(hirzebruch(1), (0, 0))) == "1"
    assert str(monomial_of_point(projective_space(1), (-3,))) == "x2^3"


def test_sr_ideals():
    assert gens(sr_ideal(projective_space(1))) == ["x1*x2"]
    assert gens(sr_ideal(affine_space(2))) == []
    assert gens(sr_ideal(projective_space(2))) == ["x1*x2*x3"]
    assert gens(sr_ideal(p1xp1())) == ["x1*x3", "x2*x4"]
    assert gens(sr_ideal(blowup_a2())) == ["x1*x2"]


def test_deformed_products():
    P1 = projective_space(1)
    assert str(deformed_product(P1, (2,), (3,))) == "y^(5)"
    assert not deformed_product(P1, (1,), (-1,))
    assert str(deformed_product(projective_space(2), (1, 0), (0, 1))) == "y^(1,1)"
    with pytest.raises(OutsideSupportError):
        DeformedRingElement.basis(affine_space(1), (-1,))


def test_pl_values():
    for fan in FANS.values():
        for r in fan.rays:
            assert pl_value(fan, r) == 1
    assert pl_value(affine_space(2), (1, 1)) == 2
    assert pl_value(blowup_a2(), (1, 1)) == 1


def test_refinement_examples():
    fine, coarse = blowup_a2(), affine_space(2)
    assert str(refinement_compare(fine, coarse, (1, 1))) == "psi=1 phi=2 e=1"
    assert str(refinement_compare(fine, coarse, (0, 1))) == "psi=1 phi=1 e=0"
    r = refinement_compare(fine, coarse, (2, 3))
    assert (r.psi, r.phi, r.e) == (3, 5, 2)


def test_not_a_refinement():
    with pytest.raises(NotARefinementError):
        refinement_compare(affine_space(2), blowup_a2(), (1, 1))
    half = Fan(2, [[1, 0], [1, 1]], [[0, 1]])
    with pytest.raises(NotARefinementError):
        refinement_compare(half, affine_space(2), (1, 0))


@pytest.mark.parametrize(
    "rays, cones",
    [
        ([[2, 0], [0, 1]], [[0, 1]]),  # not primitive
        ([[1, 0], [1, 0]], [[0], [1]]),  # repeated ray
        ([[1, 0], [0, 1], [-1, 0]], [[0, 2]]),  # dependent, ray 1 unused
        ([[1, 0], [0, 1], [1, 1]], [[0, 1], [1, 2]]),  # overlapping cones
        ([[1, 0], [0, 1]], [[0, 1], [0]]),  # non-maximal cone
        ([[1, 0], [0, 1]], [[0, 5]]),  # missing ray
    ],
)
def test_invalid_fans(rays, cones):
    with pytest.raises(InvalidFanError):
        Fan(2, rays, cones)


def test_smoothness():
    assert all(f.smooth for f in FANS.values())
    weighted = Fan(2, [[1, 0], [1, 2]], [[0, 1]])
    assert not weighted.smooth
    with pytest.raises(InvalidFanError):
        pl_value(weighted, (1, 1))
    assert locate_cone(weighted, (1, 1)).coefficients == (Fraction(1, 2), Fraction(1, 2))


def test_serialization_is_canonical(tmp_path):
    a = Fan(2, [[1, 0], [0, 1], [1, 1]], [[2, 1], [2, 0]])
    b = blowup_a2()
    assert a == b
    assert a.dumps() == '{"rank": 2, "rays": [[1, 0], [0, 1], [1, 1]], "cones": [[0, 2], [1, 2]]}\n'
    path = tmp_path / "bl.fan"
    a.dump(path)
    assert Fan.load(path) == b
    assert Fan.loads(a.dumps()).dumps() == a.dumps()
    with pytest.raises(InvalidFanError):
        Fan.loads("{not json")
    with pytest.raises(InvalidFanError):
        Fan.loads('{"rank": 2}')


@pytest.mark.parametrize("name", sorted(FANS))
def test_sr_correspondence(name):
    fan = FANS[name]
    sr = [next(iter(g.as_dict())) for g in sr_ideal(fan).generators]
    pts = lattice_points(fan, 4)
    for u, v in itertools.product(pts, repeat=2):
        mono = monomial_of_point(fan, u) * monomial_of_point(fan, v)
        e = next(iter(mono.as_dict()))
        killed = any(all(a <= b for a, b in zip(g, e)) for g in sr)
        prod = deformed_product(fan, u, v)
        if prod:
            (w,) = prod.terms
            assert not killed
            assert monomial_of_point(fan, w) == mono
        else:
            assert killed


@pytest.mark.parametrize("name", sorted(FANS))
def test_degree_is_pl_value(name):
    fan = FANS[name]
    for v in lattice_points(fan, 4):
        assert monomial_of_point(fan, v).total_degree() == pl_value(fan, v)


@pytest.mark.parametrize("name", sorted(FANS))
def test_partial_order_divisibility(name):
    fan = FANS[name]
    pts = lattice_points(fan, 3)
    for v, w in itertools.product(pts, repeat=2):
        k = precedes(fan, v, w)
        if k is None:
            continue
        mv = next(iter(monomial_of_point(fan, v).as_dict()))
        mw = next(iter(monomial_of_point(fan, w).as_dict()))
        assert all(a <= b for a, b in zip(mv, mw))
        assert set(i for i, a in enumerate(mv) if a) <= set(fan.cones[k])


def test_refinement_positivity():
    fine, coarse = blowup_a2(), affine_space(2)
    for v in lattice_points(fine, 6):
        assert refinement_compare(fine, coarse, v).e >= 0


def test_lattice_points_bound():
    assert lattice_points(affine_space(1), 3) == [(0,), (1,), (2,), (3,)]
    assert len(lattice_points(projective_space(2), 1)) == 4
