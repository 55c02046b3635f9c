"""
Fans, Stanley–Reisner ideals and the deformed group ring of a fan.

A fan is given by its primitive rays and its maximal cones (sets of ray
indices).  All cones are simplicial; faces of a cone are the subsets of its
rays.  For a smooth fan every lattice point ``v`` of the support is a unique
non-negative integer combination of the rays of any cone containing it, which
gives the Stanley–Reisner monomial ``x^v`` and the piecewise linear function
``phi(v)`` (sum of the coefficients).
"""

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog

from .algebra import PolynomialRing, Variable
from .errors import InvalidFanError, NotARefinementError, OutsideSupportError
from .groebner import Ideal

__all__ = [
    "Fan",
    "ConeLocation",
    "DeformedRingElement",
    "RefinementComparison",
    "locate_cone",
    "monomial_of_point",
    "sr_ideal",
    "deformed_product",
    "pl_value",
    "refinement_compare",
    "precedes",
    "lattice_points",
    "affine_space",
    "projective_space",
    "p1xp1",
    "hirzebruch",
    "blowup_a2",
]

# tolerance for the floating point face test; fan data are small integers
_LP_TOL = 1e-9


def _solve(columns, v):
    """Exact solution ``a`` of ``sum a_j columns[j] = v`` or ``None``.

    ``columns`` must be linearly independent.
    """
    d = len(v)
    k = len(columns)
    rows = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(v[i])] for i in range(d)]
    r = 0
    for c in range(k):
        p = next((i for i in range(r, d) if rows[i][c]), None)
        if p is None:
            return None
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(d):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    if any(rows[i][k] for i in range(r, d)):
        return None
    return [rows[i][k] for i in range(k)]


def _rank(vectors):
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _det(matrix):
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def _inverse(matrix):
    n = len(matrix)
    rows = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        p = next(i for i in range(c, n) if rows[i][c])
        rows[c], rows[p] = rows[p], rows[c]
        inv = 1 / rows[c][c]
        rows[c] = [x * inv for x in rows[c]]
        for i in range(n):
            if i != c and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return [row[n:] for row in rows]


def _unimodular(vectors, d):
    """Do the (independent) integer ``vectors`` extend to a basis of ``Z^d``?

    Equivalent to the maximal minors of the ``d x k`` matrix having gcd 1.
    """
    k = len(vectors)
    if k == 0:
        return True
    g = 0
    for rows in itertools.combinations(range(d), k):
        g = math.gcd(g, int(_det([[vec[r] for vec in vectors] for r in rows])))
        if g == 1:
            return True
    return g == 1


@dataclass(frozen=True)
class ConeLocation:
    """A maximal cone containing a point and the point's coordinates in its rays."""

    cone: int
    rays: tuple
    coefficients: tuple


class Fan:
    """Simplicial fan in ``Z^rank`` given by rays and maximal cones.

    Cones are stored canonically: ray indices sorted within each cone and the
    cones sorted, so cone indices refer to that order.  Construction checks
    primitivity, independence, maximality and that any two cones meet in a
    common face.
    """

    def __init__(self, rank, rays, cones):
        if rank < 0:
            raise InvalidFanError("rank must be non-negative")
        rays = [tuple(int(a) for a in r) for r in rays]
        for i, r in enumerate(rays):
            if len(r) != rank:
                raise InvalidFanError(f"ray {i} has length {len(r)}, expected {rank}")
            if math.gcd(*r) != 1:
                raise InvalidFanError(f"ray {i} = {list(r)} is not primitive")
        if len(set(rays)) != len(rays):
            raise InvalidFanError("repeated ray")
        cones = sorted({tuple(sorted(set(c))) for c in cones})
        if not cones:
            raise InvalidFanError("a fan needs at least one cone")
        for c in cones:
            for i in c:
                if not 0 <= i < len(rays):
                    raise InvalidFanError(f"cone {list(c)} refers to missing ray {i}")
            if c and _rank([rays[i] for i in c]) != len(c):
                raise InvalidFanError(f"rays of cone {list(c)} are linearly dependent")
        for a, b in itertools.permutations(cones, 2):
            if set(a) <= set(b):
                raise InvalidFanError(f"cone {list(a)} is a face of cone {list(b)}, not maximal")
        used = {i for c in cones for i in c}
        for i in range(len(rays)):
            if i not in used:
                raise InvalidFanError(f"ray {i} lies in no cone")
        self.rank = rank
        self.rays = tuple(rays)
        self.cones = tuple(cones)
        for a, b in itertools.combinations(self.cones, 2):
            if not self._meet_in_face(a, b):
                raise InvalidFanError(f"cones {list(a)} and {list(b)} do not meet in a common face")
        self.smooth = all(_unimodular([self.rays[i] for i in c], rank) for c in self.cones)
        self.ring = PolynomialRing([Variable(f"x{i + 1}", i) for i in range(len(rays))])
        self._faces = None
        self._coeff_cache = {}
        self._inverses = [
            _inverse([[self.rays[i][r] for i in c] for r in range(rank)]) if c and len(c) == rank else None
            for c in self.cones
        ]

    def _meet_in_face(self, a, b):
        # maximize the weight outside the common face over points of both cones
        outside = [i for i in a if i not in b]
        na, nb = len(a), len(b)
        if not outside or not b:
            return True
        A_eq = np.zeros((self.rank, na + nb))
        for j, i in enumerate(a):
            A_eq[:, j] = self.rays[i]
        for j, i in enumerate(b):
            A_eq[:, na + j] = [-x for x in self.rays[i]]
        cost = np.zeros(na + nb)
        A_ub = np.zeros((1, na + nb))
        for j, i in enumerate(a):
            if i in outside:
                cost[j] = -1
                A_ub[0, j] = 1
        res = linprog(cost, A_ub=A_ub, b_ub=[1], A_eq=A_eq, b_eq=np.zeros(self.rank), bounds=(0, None), method="highs")
        return res.status == 0 and -res.fun <= _LP_TOL

    @property
    def nrays(self):
        return len(self.rays)

    def faces(self):
        """All cones of the fan (as sorted ray-index tuples), including the zero cone."""
        if self._faces is None:
            out = set()
            for c in self.cones:
                for k in range(len(c) + 1):
                    out.update(itertools.combinations(c, k))
            self._faces = frozenset(out)
        return self._faces

    def coefficients_in(self, cone_index, v):
        """Coordinates of ``v`` in the rays of a maximal cone, or ``None`` if ``v`` is outside it."""
        key = (cone_index, tuple(v))
        if key not in self._coeff_cache:
            self._coeff_cache[key] = self._coefficients(cone_index, v)
        a = self._coeff_cache[key]
        return None if a is None else list(a)

    def _coefficients(self, cone_index, v):
        cone = self.cones[cone_index]
        if not cone:
            return () if not any(v) else None
        inv = self._inverses[cone_index]
        if inv is not None:
            a = [sum(row[j] * v[j] for j in range(self.rank)) for row in inv]
        else:
            a = _solve([self.rays[i] for i in cone], v)
        if a is None or any(x < 0 for x in a):
            return None
        return tuple(a)

    def contains(self, v):
        return any(self.coefficients_in(k, v) is not None for k in range(len(self.cones)))

    def require_smooth(self, what):
        if not self.smooth:
            raise InvalidFanError(f"{what} needs a smooth fan")

    # -- file format ------------------------------------------------------

    def to_dict(self):
        return {"rank": self.rank, "rays": [list(r) for r in self.rays], "cones": [list(c) for c in self.cones]}

    def dumps(self):
        """Canonical JSON text (one line, trailing newline)."""
        return json.dumps(self.to_dict()) + "\n"

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(int(data["rank"]), data["rays"], data["cones"])
        except (KeyError, TypeError) as exc:
            raise InvalidFanError(f"malformed fan description: {exc}") from None

    @classmethod
    def loads(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidFanError(f"fan file is not valid JSON: {exc}") from None
        return cls.from_dict(data)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.loads(fh.read())

    def dump(self, path):
        with open(path, "w") as fh:
            fh.write(self.dumps())

    def __eq__(self, other):
        return isinstance(other, Fan) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash((self.rank, self.rays, self.cones))

    def __repr__(self):
        return f"Fan(rank={self.rank}, rays={[list(r) for r in self.rays]}, cones={[list(c) for c in self.cones]})"


def _point(v):
    return tuple(int(a) for a in v)


def locate_cone(fan, v):
    """Lowest-index maximal cone containing ``v`` with the coordinates of ``v`` in it.

    Coordinates are integers for a smooth fan and fractions otherwise.
    """
    v = _point(v)
    if len(v) != fan.rank:
        raise ValueError(f"point has length {len(v)}, expected {fan.rank}")
    for k, cone in enumerate(fan.cones):
        a = fan.coefficients_in(k, v)
        if a is not None:
            a = tuple(int(x) if x.denominator == 1 else x for x in a)
            return ConeLocation(k, cone, a)
    raise OutsideSupportError(f"{list(v)} is not in the support of the fan")


def monomial_of_point(fan, v):
    """Stanley–Reisner monomial ``x^v`` in ``x1, ..., xr``."""
    fan.require_smooth("monomial_of_point")
    loc = locate_cone(fan, v)
    e = [0] * fan.nrays
    for i, a in zip(loc.rays, loc.coefficients):
        e[i] = a
    return fan.ring.monomial(e)


def pl_value(fan, v):
    """Piecewise linear function with value 1 on every ray generator."""
    fan.require_smooth("pl_value")
    return sum(locate_cone(fan, v).coefficients)


def sr_ideal(fan):
    """Stanley–Reisner ideal: one squarefree monomial per minimal non-face."""
    faces = fan.faces()
    gens = []
    for k in range(1, min(fan.rank + 1, fan.nrays) + 1):
        for subset in itertools.combinations(range(fan.nrays), k):
            if subset in faces:
                continue
            if all(sub in faces for sub in itertools.combinations(subset, k - 1)):
                e = [0] * fan.nrays
                for i in subset:
                    e[i] = 1
                gens.append(fan.ring.monomial(e))
    return Ideal(gens, fan.ring)


def _share_cone(fan, u, v):
    return any(
        fan.coefficients_in(k, u) is not None and fan.coefficients_in(k, v) is not None
        for k in range(len(fan.cones))
    )


class DeformedRingElement:
    """Integer combination of basis elements ``y^v`` for lattice points ``v`` of the support."""

    __slots__ = ("fan", "terms")

    def __init__(self, fan, terms=None):
        clean = {}
        for v, c in (terms or {}).items():
            v = _point(v)
            if not fan.contains(v):
                raise OutsideSupportError(f"{list(v)} is not in the support of the fan")
            c = int(c)
            if c:
                clean[v] = clean.get(v, 0) + c
        self.fan = fan
        self.terms = {v: c for v, c in clean.items() if c}

    @classmethod
    def basis(cls, fan, v):
        return cls(fan, {_point(v): 1})

    def _check(self, other):
        if other.fan != self.fan:
            raise ValueError("elements of different deformed rings")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for v, c in other.terms.items():
            out[v] = out.get(v, 0) + c
        return DeformedRingElement(self.fan, out)

    def __neg__(self):
        return DeformedRingElement(self.fan, {v: -c for v, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                if _share_cone(self.fan, u, v):
                    w = tuple(x + y for x, y in zip(u, v))
                    out[w] = out.get(w, 0) + a * b
        return DeformedRingElement(self.fan, out)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, DeformedRingElement):
            return NotImplemented
        return self.fan == other.fan and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for v in sorted(self.terms):
            c = self.terms[v]
            base = "y^(" + ",".join(str(a) for a in v) + ")"
            if c == 1:
                parts.append(base)
            elif c == -1:
                parts.append("-" + base)
            else:
                parts.append(f"{c}*{base}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"DeformedRingElement({self})"


def deformed_product(fan, u, v):
    """``y^u * y^v``: ``y^(u+v)`` when one cone holds both points, else zero."""
    return DeformedRingElement.basis(fan, u) * DeformedRingElement.basis(fan, v)


def precedes(fan, v, w):
    """Lowest index of a maximal cone containing ``v``, ``w`` and ``w - v``; ``None`` if ``v`` does not precede ``w``."""
    v, w = _point(v), _point(w)
    for p in (v, w):
        if not fan.contains(p):
            raise OutsideSupportError(f"{list(p)} is not in the support of the fan")
    diff = tuple(b - a for a, b in zip(v, w))
    for k in range(len(fan.cones)):
        if all(fan.coefficients_in(k, p) is not None for p in (v, w, diff)):
            return k
    return None


def lattice_points(fan, bound):
    """All lattice points of the support with ``pl_value <= bound``, sorted."""
    fan.require_smooth("lattice_points")
    points = set()
    for cone in fan.cones:
        for a in itertools.product(range(bound + 1), repeat=len(cone)):
            if sum(a) > bound:
                continue
            points.add(tuple(sum(c * fan.rays[i][r] for c, i in zip(a, cone)) for r in range(fan.rank)))
    return sorted(points)


@dataclass(frozen=True)
class RefinementComparison:
    psi: int
    phi: int
    e: int

    def __str__(self):
        return f"psi={self.psi} phi={self.phi} e={self.e}"


def _check_refinement(fine, coarse):
    if fine.rank != coarse.rank:
        raise NotARefinementError("fans live in lattices of different rank")
    placement = {}
    for k, cone in enumerate(fine.cones):
        home = next(
            (
                j for j in range(len(coarse.cones))
                if all(coarse.coefficients_in(j, fine.rays[i]) is not None for i in cone)
            ),
            None,
        )
        if home is None:
            raise NotARefinementError(f"fine cone {list(cone)} lies in no cone of the coarse fan")
        placement[k] = home
    # equal supports: inside each coarse cone the fine cones of full dimension must
    # fill it; in the coarse cone's ray coordinates the volumes of the unit-simplex
    # slices add up to that of the standard simplex
    for j, ccone in enumerate(coarse.cones):
        dim = len(ccone)
        total = Fraction(0)
        for k, fcone in enumerate(fine.cones):
            if len(fcone) != dim or not all(coarse.coefficients_in(j, fine.rays[i]) is not None for i in fcone):
                continue
            cols = []
            for i in fcone:
                a = coarse.coefficients_in(j, fine.rays[i])
                s = sum(a)
                cols.append([x / s for x in a])
            total += abs(_det([[col[r] for col in cols] for r in range(dim)]))
        if total != 1:
            raise NotARefinementError(f"fine fan does not cover coarse cone {list(ccone)}")
    return placement


def refinement_compare(fine, coarse, v):
    """``(psi, phi, e)`` at ``v`` for a refinement ``fine`` of ``coarse``.

    ``psi`` and ``phi`` are the piecewise linear functions of the two fans and
    ``e = phi - psi`` is the order of contact with the relative canonical divisor.
    """
    fine.require_smooth("refinement_compare")
    coarse.require_smooth("refinement_compare")
    _check_refinement(fine, coarse)
    psi = pl_value(fine, v)
    phi = pl_value(coarse, v)
    return RefinementComparison(psi, phi, phi - psi)


# -- standard fans ----------------------------------------------------------


def _unit(d, i, sign=1):
    e = [0] * d
    e[i] = sign
    return e


def affine_space(d):
    return Fan(d, [_unit(d, i) for i in range(d)], [list(range(d))])


def projective_space(d):
    rays = [_unit(d, i) for i in range(d)] + [[-1] * d]
    return Fan(d, rays, [list(c) for c in itertools.combinations(range(d + 1), d)])


def p1xp1():
    return Fan(2, [[1, 0], [0, 1], [-1, 0], [0, -1]], [[0, 1], [1, 2], [2, 3], [0, 3]])


def hirzebruch(a):
    """Hirzebruch surface ``F_a``."""
    return Fan(2, [[1, 0], [0, 1], [-1, a], [0, -1]], [[0, 1], [1, 2], [2, 3], [0, 3]])


def blowup_a2():
    """Blow-up of the affine plane at the origin: the cone of ``A^2`` split by ``(1,1)``."""
    return Fan(2, [[1, 0], [0, 1], [1, 1]], [[0, 2], [1, 2]])
