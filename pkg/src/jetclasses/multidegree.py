"""
Multidegrees of multigraded ideals.

For a torus-invariant subscheme of affine space the equivariant class is the
multidegree of its ideal.  We compute it by Gröbner degeneration to the
initial monomial ideal and then sum, over the minimal coordinate primes of
maximal dimension, the multiplicity of the component times the product of
the linear forms of the variables in the prime.
"""

import itertools

from ._hypergraph import bits, mask_of, min_covers
from .algebra import multidegree_of_polynomial
from .errors import EmptyVarietyError, GradingError, IncompatibleRingError, OracleScaleError
from .groebner import initial_ideal

__all__ = [
    "monomial_ideal_multidegree",
    "ideal_multidegree",
    "brute_force_multidegree",
    "elementary_symmetric",
    "standard_monomial_count",
]

ORACLE_MAX_VARIABLES = 20


def _monomial_exponents(ideal):
    exps = []
    for g in ideal.generators:
        if not g.is_monomial():
            raise ValueError(f"{g} is not a monomial")
        exps.append(next(iter(g.as_dict())))
    return exps


def _minimal_monomials(exps):
    exps = sorted(set(exps), key=lambda e: (sum(e), e))
    kept = []
    for e in exps:
        if not any(all(a <= b for a, b in zip(k, e)) for k in kept):
            kept.append(e)
    return kept


def standard_monomial_count(gens):
    """Number of monomials outside the ideal generated by ``gens``.

    ``gens`` are exponent tuples of an Artinian monomial ideal (every
    variable has a pure power among them); the count is found by growing
    standard monomials one variable step at a time.
    """
    gens = _minimal_monomials(gens)
    if not gens:
        raise ValueError("the zero ideal is not Artinian")
    n = len(gens[0])
    for i in range(n):
        if not any(g[i] > 0 and sum(g) == g[i] for g in gens):
            raise ValueError("monomial ideal is not Artinian")

    def standard(e):
        return not any(all(a <= b for a, b in zip(g, e)) for g in gens)

    start = (0,) * n
    if not standard(start):
        return 0
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for e in frontier:
            for i in range(n):
                f = e[:i] + (e[i] + 1,) + e[i + 1:]
                if f not in seen and standard(f):
                    seen.add(f)
                    nxt.append(f)
        frontier = nxt
    return len(seen)


def _prime_class(grading, positions):
    T = grading.class_ring()
    out = T.one()
    for i in positions:
        out = out * grading.linear_form(i)
    return out


def monomial_ideal_multidegree(ideal, grading):
    """Multidegree of a monomial ideal.

    Only the minimal primes of maximal dimension contribute; the multiplicity
    of a prime ``P`` is the number of standard monomials of the ideal
    localised at ``P`` (variables outside ``P`` set to 1).
    """
    if grading.ring.variables != ideal.ring.variables:
        raise IncompatibleRingError("grading belongs to another ring")
    T = grading.class_ring()
    exps = _minimal_monomials(_monomial_exponents(ideal))
    if not exps:
        return T.one()
    if any(not any(e) for e in exps):
        raise EmptyVarietyError("the unit ideal defines the empty variety")
    total = T.zero()
    for cover in min_covers([mask_of(e) for e in exps]):
        prime = bits(cover)
        local = [tuple(e[i] for i in prime) for e in exps]
        mult = standard_monomial_count(local)
        total = total + mult * _prime_class(grading, prime)
    return total


def ideal_multidegree(ideal, grading, order=None, budget=None):
    """Multidegree of a homogeneous ideal via its initial ideal.

    Every generator must be homogeneous for ``grading``; otherwise a
    :class:`GradingError` names the offending generator.
    """
    if grading.ring.variables != ideal.ring.variables:
        raise IncompatibleRingError("grading belongs to another ring")
    for g in ideal.generators:
        if multidegree_of_polynomial(g.map_to(grading.ring), grading) is None:
            raise GradingError(f"generator {g} is not homogeneous for the grading")
    if not ideal.generators:
        return grading.class_ring().one()
    initial = initial_ideal(ideal, order, budget)
    return monomial_ideal_multidegree(initial, grading)


def brute_force_multidegree(ideal, grading):
    """Multidegree of a monomial ideal by exhaustive enumeration.

    Independent check on :func:`monomial_ideal_multidegree`: all coordinate
    subspaces inside the zero set are listed, the maximal ones of largest
    dimension are kept, and multiplicities are counted in a bounding box.
    """
    n = ideal.ring.nvars
    if n > ORACLE_MAX_VARIABLES:
        raise OracleScaleError(f"{n} variables exceed the oracle limit of {ORACLE_MAX_VARIABLES}")
    T = grading.class_ring()
    exps = list(set(_monomial_exponents(ideal)))
    if not exps:
        return T.one()
    if any(not any(e) for e in exps):
        raise EmptyVarietyError("the unit ideal defines the empty variety")
    # subspace {x_i = 0 : i in S} lies in V(M) iff S meets every generator support
    inside = [
        S for k in range(n + 1) for S in itertools.combinations(range(n), k)
        if all(any(e[i] for i in S) for e in exps)
    ]
    codim = min(len(S) for S in inside)
    top = [S for S in inside if len(S) == codim]
    bound = max(max(e) for e in exps)
    total = T.zero()
    for S in top:
        local = [tuple(e[i] for i in S) for e in exps]
        count = 0
        for a in itertools.product(range(bound + 1), repeat=len(S)):
            if not any(all(x <= y for x, y in zip(g, a)) for g in local):
                count += 1
        total = total + count * _prime_class(grading, S)
    return total


def elementary_symmetric(k, ring, variables=None):
    """``e_k`` of the given variables (default: all variables of ``ring``)."""
    gens = ring.gens if variables is None else list(variables)
    out = ring.zero()
    for combo in itertools.combinations(gens, k):
        term = ring.one()
        for v in combo:
            term = term * v
        out = out + term
    return out
