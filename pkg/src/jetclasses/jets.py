"""
Jet rings, prolongation of equations, contact ideals and the log canonical
threshold estimate.

The jet ring of order ``m`` over base coordinates ``x_1..x_n`` has the
coordinates ``x_i^(k)`` for ``0 <= k <= m``.  The derivation ``D`` with
``D(x_i^(k)) = x_i^(k+1)`` produces the equations of the jet scheme:
``D^k f`` is the coefficient of ``t^k`` in ``f(sum_j x^(j) t^j)``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Polynomial, PolynomialRing, Variable
from .errors import NotAChainError, RingTooSmallError
from .groebner import Ideal, reduce, stratified_dimension

__all__ = [
    "jet_ring",
    "prolong",
    "jet_ideal",
    "SubvarietyChain",
    "lambda_of_m",
    "contact_ideal",
    "LctEstimate",
    "lct_estimate",
]


def jet_ring(base, m, order=None):
    """Jet ring of order ``m`` over the base coordinates of ``base``.

    Variables sort by ``(base index, jet order)`` and keep the base ring's
    term order kind unless ``order`` is given.
    """
    if m < 0:
        raise ValueError("jet order must be non-negative")
    bases = {}
    for v in base.variables:
        bases.setdefault((v.index, v.name), v)
    variables = [Variable(name, index, k) for (index, name) in bases for k in range(m + 1)]
    return PolynomialRing(variables, order if order is not None else base.order)


def _derivation(f, successor):
    ring = f.ring
    out = {}
    for e, c in f.as_dict().items():
        for i, a in enumerate(e):
            if not a:
                continue
            j = successor[i]
            if j is None:
                raise RingTooSmallError(
                    f"{ring.variables[i]} has no successor {ring.variables[i].shifted()} in the ring"
                )
            ne = list(e)
            ne[i] -= 1
            ne[j] += 1
            ne = tuple(ne)
            v = out.get(ne, 0) + c * a
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
    return Polynomial._raw(ring, out)


def _successors(ring):
    return [
        ring.position(v.shifted()) if v.shifted() in ring else None
        for v in ring.variables
    ]


def prolong(f, k):
    """``D^k f``: the ``k``-th prolongation of ``f`` inside ``f``'s jet ring."""
    if k < 0:
        raise ValueError("k must be non-negative")
    succ = _successors(f.ring)
    for _ in range(k):
        f = _derivation(f, succ)
    return f


def jet_ideal(ideal, m):
    """Equations ``D^k f_i`` (``0 <= k <= m``) of the ``m``-th jet scheme, in the jet ring."""
    J = jet_ring(ideal.ring, m)
    gens = []
    for f in ideal.generators:
        f = f.map_to(J)
        for k in range(m + 1):
            gens.append(prolong(f, k))
    return Ideal(gens, J)


def lambda_of_m(mult):
    """Suffix sums ``lambda_i = m_i + ... + m_s``."""
    out = []
    acc = 0
    for a in reversed(tuple(mult)):
        if a < 0:
            raise ValueError("multiplicities must be non-negative")
        acc += a
        out.append(acc)
    return tuple(reversed(out))


class SubvarietyChain:
    """Nested subvarieties ``V_s ⊆ ... ⊆ V_1`` given by ideals ``I_1 ⊆ ... ⊆ I_s``.

    Containment is verified on construction by reducing the generators of
    each ``I_i`` modulo a Gröbner basis of ``I_{i+1}``.
    """

    def __init__(self, ideals):
        ideals = list(ideals)
        if not ideals:
            raise NotAChainError("a chain needs at least one subvariety")
        ring = ideals[0].ring
        for I in ideals:
            if I.ring.variables != ring.variables:
                raise NotAChainError("chain ideals live in different rings")
        for i in range(len(ideals) - 1):
            gb = ideals[i + 1].groebner_basis()
            for f in ideals[i].generators:
                if reduce(f, gb):
                    raise NotAChainError(
                        f"V_{i + 2} is not contained in V_{i + 1}: {f} is not in I_{i + 2}"
                    )
        self.ring = ring
        self.ideals = tuple(ideals)
        self.generator_counts = tuple(len(I.generators) for I in ideals)

    def __len__(self):
        return len(self.ideals)

    def codimensions(self):
        return tuple(I.codimension() for I in self.ideals)


def contact_ideal(chain, mult, order=None):
    """Ideal of ``Cont^{>= lambda(mult)}(V_.)`` in the jet ring of order ``order``.

    Uses the nested generator set: ``D^k f_{s,j}`` for ``k < lambda_s`` and
    ``D^k f_{i,j}`` for ``lambda_{i+1} <= k < lambda_i`` when ``i < s``.  The
    lower prolongations of the larger varieties are redundant because the
    chain is nested.  ``order`` defaults to ``lambda_1 - 1``.
    """
    mult = tuple(mult)
    if len(mult) != len(chain):
        raise ValueError(f"expected {len(chain)} multiplicities, got {len(mult)}")
    lam = lambda_of_m(mult)
    top = lam[0] if lam else 0
    if order is None:
        order = max(top - 1, 0)
    if order < top - 1:
        raise RingTooSmallError(f"jet order {order} is below lambda_1 - 1 = {top - 1}")
    J = jet_ring(chain.ring, order)
    gens = []
    s = len(chain)
    for i in range(s - 1, -1, -1):
        lower = lam[i + 1] if i + 1 < s else 0
        for f in chain.ideals[i].generators:
            f = f.map_to(J)
            for k in range(lower, lam[i]):
                gens.append(prolong(f, k))
    return Ideal(gens, J)


@dataclass(frozen=True)
class LctEstimate:
    """``d - max_m dim J_m V / (m + 1)`` over ``0 <= m <= max_order``."""

    value: Fraction
    max_ratio: Fraction
    argmax: int
    dimensions: tuple
    exact: bool

    def __str__(self):
        tag = "" if self.exact else " (upper bound)"
        return f"lct={self.value} max_ratio={self.max_ratio} at m={self.argmax}{tag}"


def lct_estimate(ideal, ambient_dim=None, max_order=0, sufficiently_divisible=False, budget=None):
    """Log canonical threshold estimate from jet-scheme dimensions.

    Each term ``dim J_m V / (m+1)`` bounds the maximum from below, so the
    value is an upper bound on the threshold.  It is exact once the range
    contains a sufficiently divisible ``m``, which only the caller can
    assert via ``sufficiently_divisible``.

    Jet-scheme dimensions are found stratum by stratum, splitting on the
    jet coordinates in increasing jet order.  ``ambient_dim`` defaults to
    the number of ring variables; extra ambient coordinates are treated as
    a product with affine space.
    """
    n = ideal.ring.nvars
    d = n if ambient_dim is None else ambient_dim
    if d < n:
        raise ValueError(f"ambient dimension {d} is below the {n} ring variables")
    dims = []
    best = None
    argmax = 0
    for m in range(max_order + 1):
        # unused ambient coordinates contribute a free factor J_m A^(d-n)
        dim = stratified_dimension(jet_ideal(ideal, m), budget=budget) + (d - n) * (m + 1)
        dims.append(dim)
        ratio = Fraction(dim, m + 1)
        if best is None or ratio > best:
            best, argmax = ratio, m
    return LctEstimate(d - best, best, argmax, tuple(dims), bool(sufficiently_divisible))
