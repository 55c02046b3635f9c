"""
Gröbner bases over Q: Buchberger's algorithm with the Gebauer–Möller pair
criteria, normal forms, initial ideals, Krull dimension, elimination,
intersection and saturation.

Internally a polynomial is a list of ``(exponent, coefficient)`` pairs sorted
by the ring's term order, largest first; the public surface speaks
:class:`~jetclasses.algebra.Polynomial`.
"""

import heapq
from fractions import Fraction

from ._hypergraph import mask_of, min_cover_size
from .algebra import Polynomial, PolynomialRing, TermOrder, Variable
from .errors import EmptyVarietyError, IncompatibleRingError, ResourceExhaustedError

__all__ = [
    "DEFAULT_PAIR_BUDGET",
    "Ideal",
    "reduce",
    "buchberger",
    "initial_ideal",
    "ideal_dimension",
    "stratified_dimension",
    "eliminate",
    "intersect",
    "saturate",
    "quotient_by_power",
]

#: Maximum number of S-pairs reduced before a computation is abandoned.
DEFAULT_PAIR_BUDGET = 500_000


class _MaxFirst:
    """Heap entry ordering larger keys first."""

    __slots__ = ("key", "exp")

    def __init__(self, key, exp):
        self.key = key
        self.exp = exp

    def __lt__(self, other):
        return self.key > other.key


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


class _Element:
    __slots__ = ("lm", "mask", "terms")

    def __init__(self, terms):
        # terms sorted descending, made monic
        lc = terms[0][1]
        if lc != 1:
            terms = [(e, c / lc) for e, c in terms]
        self.terms = terms
        self.lm = terms[0][0]
        self.mask = mask_of(self.lm)


def _sorted_terms(d, key):
    return sorted(d.items(), key=lambda t: key(t[0]), reverse=True)


def _normal_form(poly, basis, key, tail=True):
    """Remainder of ``poly`` (a dict) on division by ``basis`` (list of _Element)."""
    p = dict(poly)
    heap = [_MaxFirst(key(e), e) for e in p]
    heapq.heapify(heap)
    rem = {}
    while heap:
        m = heapq.heappop(heap).exp
        c = p.pop(m, None)
        if c is None:
            continue
        mm = mask_of(m)
        for g in basis:
            if g.mask & ~mm == 0 and _divides(g.lm, m):
                shift = tuple(a - b for a, b in zip(m, g.lm))
                for e, cf in g.terms[1:]:
                    ne = tuple(a + b for a, b in zip(e, shift))
                    old = p.get(ne)
                    if old is None:
                        p[ne] = -c * cf
                        heapq.heappush(heap, _MaxFirst(key(ne), ne))
                    else:
                        v = old - c * cf
                        if v:
                            p[ne] = v
                        else:
                            del p[ne]
                break
        else:
            rem[m] = c
            if not tail:
                rem.update(p)
                return rem
    return rem


class _Pair:
    __slots__ = ("i", "j", "lcm", "sort_key")

    def __init__(self, i, j, lcm, key):
        self.i, self.j, self.lcm = i, j, lcm
        self.sort_key = (sum(lcm), key(lcm), i, j)

    def __lt__(self, other):
        return self.sort_key < other.sort_key


def _coprime(a, b):
    return not any(x and y for x, y in zip(a, b))


def _groebner(polys, key, budget):
    """Reduced Gröbner basis of ``polys`` (list of dicts), as a list of _Element."""
    elems = []  # every element ever added, indexed by position
    active = []  # indices of elements currently in the basis
    pairs = []
    processed = 0

    def update(h_index):
        nonlocal pairs
        h = elems[h_index]
        cand = [(g, _lcm(elems[g].lm, h.lm)) for g in active]
        kept = []
        for idx, (g, l) in enumerate(cand):
            if _coprime(elems[g].lm, h.lm):
                kept.append((g, l, True))
                continue
            others = cand[idx + 1:]
            if any(_divides(l2, l) for _, l2 in others):
                continue
            if any(_divides(l2, l) for _, l2, _ in kept):
                continue
            kept.append((g, l, False))
        new_pairs = [_Pair(g, h_index, l, key) for g, l, coprime in kept if not coprime]
        lcm_with_h = {g: _lcm(elems[g].lm, h.lm) for g in active}
        survivors = []
        for p in pairs:
            if (
                _divides(h.lm, p.lcm)
                and lcm_with_h.get(p.i) != p.lcm
                and lcm_with_h.get(p.j) != p.lcm
            ):
                continue
            survivors.append(p)
        pairs = survivors + new_pairs
        heapq.heapify(pairs)
        active[:] = [g for g in active if not _divides(h.lm, elems[g].lm)]
        active.append(h_index)

    def add(d):
        r = _normal_form(d, [elems[g] for g in active], key)
        if r:
            elems.append(_Element(_sorted_terms(r, key)))
            update(len(elems) - 1)

    for d in polys:
        if d:
            add(d)
    while pairs:
        p = heapq.heappop(pairs)
        if processed >= budget:
            raise ResourceExhaustedError(f"Gröbner pair budget of {budget} exhausted")
        processed += 1
        gi, gj = elems[p.i], elems[p.j]
        si = tuple(a - b for a, b in zip(p.lcm, gi.lm))
        sj = tuple(a - b for a, b in zip(p.lcm, gj.lm))
        s = {}
        for e, c in gi.terms[1:]:
            ne = tuple(a + b for a, b in zip(e, si))
            s[ne] = s.get(ne, 0) + c
        for e, c in gj.terms[1:]:
            ne = tuple(a + b for a, b in zip(e, sj))
            s[ne] = s.get(ne, 0) - c
        s = {e: c for e, c in s.items() if c}
        if s:
            add(s)
    basis = [elems[g] for g in active]
    reduced = []
    for g in basis:
        others = [h for h in basis if h is not g]
        tail = _normal_form(dict(g.terms), others, key)
        reduced.append(_Element(_sorted_terms(tail, key)))
    reduced.sort(key=lambda g: key(g.lm))
    return reduced


def _to_poly(ring, elem):
    return Polynomial._raw(ring, dict(elem.terms))


def _check_same_ring(ring, polys):
    for f in polys:
        if f.ring.variables != ring.variables:
            raise IncompatibleRingError("polynomials live in different rings")


def buchberger(generators, order=None, budget=None):
    """Reduced Gröbner basis of the ideal generated by ``generators``.

    ``generators`` is an :class:`Ideal` or a sequence of polynomials sharing a
    ring.  The basis is returned in the ring re-equipped with ``order``
    (default: the ring's own order), sorted by increasing leading monomial.
    Raises :class:`ResourceExhaustedError` after ``budget`` S-pair reductions.
    """
    if isinstance(generators, Ideal):
        return generators.groebner_basis(order, budget)
    gens = list(generators)
    if not gens:
        return []
    ring = gens[0].ring
    _check_same_ring(ring, gens)
    if order is not None:
        ring = ring.with_order(order)
    if budget is None:
        budget = DEFAULT_PAIR_BUDGET
    basis = _groebner([f.as_dict() for f in gens], ring.key, budget)
    return [_to_poly(ring, g) for g in basis]


def reduce(f, basis):
    """Fully reduced remainder of ``f`` on division by ``basis``.

    Division follows the term order of ``f``'s ring and tries the divisors in
    the given sequence order.
    """
    ring = f.ring
    elems = []
    for g in basis:
        if g.ring.variables != ring.variables:
            raise IncompatibleRingError("polynomials live in different rings")
        if g:
            elems.append(_Element(_sorted_terms(g.as_dict(), ring.key)))
    return Polynomial._raw(ring, _normal_form(f.as_dict(), elems, ring.key))


class Ideal:
    """Ideal of a :class:`PolynomialRing` with cached Gröbner bases."""

    def __init__(self, generators, ring=None):
        gens = [g for g in generators]
        if ring is None:
            if not gens:
                raise ValueError("an empty generator list needs an explicit ring")
            ring = gens[0].ring
        self.ring = ring
        self.generators = tuple(g.map_to(ring) for g in gens if g)
        self._gb = {}

    def __repr__(self):
        return f"Ideal([{', '.join(str(g) for g in self.generators)}])"

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def groebner_basis(self, order=None, budget=None):
        order = order or self.ring.order
        if order not in self._gb:
            ring = self.ring.with_order(order)
            self._gb[order] = tuple(
                buchberger([g.map_to(ring) for g in self.generators], budget=budget)
            )
        return self._gb[order]

    def reduced(self):
        """The same ideal with its reduced Gröbner basis as generators."""
        return Ideal(self.groebner_basis(), self.ring)

    def contains(self, f):
        return not reduce(f.map_to(self.ring), self.groebner_basis())

    def is_unit(self):
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def is_monomial(self):
        return all(g.is_monomial() for g in self.generators)

    def __add__(self, other):
        if other.ring.variables != self.ring.variables:
            raise IncompatibleRingError("ideals live in different rings")
        return Ideal(list(self.generators) + [g.map_to(self.ring) for g in other.generators], self.ring)

    def __mul__(self, other):
        if other.ring.variables != self.ring.variables:
            raise IncompatibleRingError("ideals live in different rings")
        return Ideal([f * g.map_to(self.ring) for f in self.generators for g in other.generators], self.ring)

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.ring.variables != self.ring.variables:
            return NotImplemented
        mine = self.groebner_basis(TermOrder.grevlex())
        theirs = other.groebner_basis(TermOrder.grevlex())
        return [g.as_dict() for g in mine] == [g.as_dict() for g in theirs]

    def __hash__(self):
        return hash(self.ring.variables)

    def map_to(self, ring):
        return Ideal([g.map_to(ring) for g in self.generators], ring)

    def initial_ideal(self, order=None):
        return initial_ideal(self, order)

    def dimension(self):
        return ideal_dimension(self)

    def codimension(self):
        return self.ring.nvars - ideal_dimension(self)


def initial_ideal(ideal, order=None, budget=None):
    """Monomial ideal of leading monomials of the reduced Gröbner basis."""
    order = order or ideal.ring.order
    gb = ideal.groebner_basis(order, budget)
    return Ideal([Polynomial._raw(ideal.ring, {g.leading_monomial(): Fraction(1)}) for g in gb], ideal.ring)


def ideal_dimension(ideal, order=None, method="groebner", budget=None):
    """Krull dimension of ``R/I``.

    The size of a largest set of variables containing the support of no
    leading monomial, i.e. ``nvars`` minus a minimum vertex cover of the
    leading-monomial supports.  ``method="strata"`` applies the same count
    piece by piece (see :func:`stratified_dimension`), which is much faster
    on jet schemes of singular varieties.
    """
    if method == "strata":
        return stratified_dimension(ideal, budget=budget)
    if method != "groebner":
        raise ValueError(f"unknown method {method!r}")
    gb = ideal.groebner_basis(order, budget)
    if len(gb) == 1 and gb[0].is_constant():
        raise EmptyVarietyError("the unit ideal defines the empty variety")
    if not gb:
        return ideal.ring.nvars
    edges = [mask_of(g.leading_monomial()) for g in gb]
    return ideal.ring.nvars - min_cover_size(edges)


def _grevlex_key(e):
    return (sum(e), tuple(-a for a in reversed(e)))


def _piece_dimension(polys, n, zeros, unit, budget):
    # V(I) ∩ {x_i = 0 for i in zeros} ∩ {x_unit != 0}, via an extra coordinate z
    # with z*x_unit = 1 (or z = 0 when there is no unit); the graph has the same dimension
    gens = []
    for d in polys:
        kept = {e + (0,): c for e, c in d.items() if not any(e[i] for i in zeros)}
        if kept:
            gens.append(kept)
    for i in zeros:
        e = [0] * (n + 1)
        e[i] = 1
        gens.append({tuple(e): Fraction(1)})
    z = [0] * (n + 1)
    z[n] = 1
    if unit is None:
        gens.append({tuple(z): Fraction(1)})
    else:
        z[unit] = 1
        gens.append({tuple(z): Fraction(-1), (0,) * (n + 1): Fraction(1)})
    basis = _groebner(gens, _grevlex_key, budget)
    if len(basis) == 1 and not any(basis[0].lm):
        return None
    return n + 1 - min_cover_size([g.mask for g in basis])


def stratified_dimension(ideal, variables=None, budget=None):
    """Krull dimension of ``R/I`` by splitting the zero set into strata.

    With the variables listed as ``v_1, v_2, ...`` the pieces are
    ``V(I) ∩ {v_1 = ... = v_{k-1} = 0, v_k != 0}`` plus the origin.  Each
    piece usually has a much smaller Gröbner basis than ``I`` itself, e.g.
    for jet schemes of singular varieties where the strata separate the
    smooth part from the fibre over the singular point.  Pieces that cannot
    beat the current maximum are skipped.  By default the variables are
    taken in increasing jet order.
    """
    ring = ideal.ring
    n = ring.nvars
    if variables is None:
        # lowest jet order first: base coordinates, then their derivatives
        variables = sorted(ring.variables, key=lambda v: (v.order, v.index, v.name))
    order = [ring.position(v) for v in variables]
    if sorted(order) != list(range(n)):
        raise ValueError("variables must list every ring variable exactly once")
    if budget is None:
        budget = DEFAULT_PAIR_BUDGET
    polys = [g.as_dict() for g in ideal.generators]
    best = None
    for k in range(n + 1):
        if best is not None and n - k <= best:
            break
        dim = _piece_dimension(polys, n, order[:k], order[k] if k < n else None, budget)
        if dim is not None and (best is None or dim > best):
            best = dim
    if best is None:
        raise EmptyVarietyError("the unit ideal defines the empty variety")
    return best


# -- elimination-based constructions --------------------------------------


def _extend(ring, names):
    """Ring with auxiliary variables in front; names start with '_' so they never clash."""
    extra = [Variable(nm, -len(names) + i) for i, nm in enumerate(names)]
    big = PolynomialRing(list(ring.variables) + extra)
    front = [big.position(v) for v in extra]
    return big.with_order(TermOrder.elimination(front)), extra


def _eliminated(big, polys, positions, budget):
    gb = buchberger(polys, budget=budget)
    keep = []
    for g in gb:
        if not any(g_exp[i] for g_exp in g.as_dict() for i in positions):
            keep.append(g)
    return keep


def _restrict(polys, big, ring):
    out = []
    positions = [big.position(v) for v in ring.variables]
    for g in polys:
        terms = {tuple(e[i] for i in positions): c for e, c in g.as_dict().items()}
        out.append(Polynomial._raw(ring, terms))
    return out


def eliminate(ideal, variables, budget=None):
    """``I ∩ k[remaining variables]``, returned as an ideal of the same ring."""
    ring = ideal.ring
    front = [ring.position(v) for v in variables]
    elim_ring = ring.with_order(TermOrder.elimination(front))
    gb = buchberger([g.map_to(elim_ring) for g in ideal.generators], budget=budget)
    keep = [g.map_to(ring) for g in gb if not any(e[i] for e in g.as_dict() for i in front)]
    return Ideal(keep, ring)


def quotient_by_power(ideal, g, budget=None):
    """``I : g^∞`` by eliminating ``z`` from ``I + (1 - z*g)``."""
    ring = ideal.ring
    big, (z,) = _extend(ring, ["_z"])
    zp = big.gen(z)
    polys = [f.map_to(big) for f in ideal.generators] + [big.one() - zp * g.map_to(big)]
    kept = _eliminated(big, polys, [big.position(z)], budget)
    return Ideal(_restrict(kept, big, ring), ring)


def intersect(first, second, budget=None):
    """``I ∩ J`` by eliminating ``s`` from ``s*I + (1 - s)*J``."""
    ring = first.ring
    big, (s,) = _extend(ring, ["_s"])
    sp = big.gen(s)
    polys = [sp * f.map_to(big) for f in first.generators]
    polys += [(big.one() - sp) * f.map_to(big) for f in second.generators]
    kept = _eliminated(big, polys, [big.position(s)], budget)
    return Ideal(_restrict(kept, big, ring), ring)


def saturate(ideal, by, budget=None):
    """``I : J^∞`` as the intersection of ``I : g^∞`` over generators ``g`` of ``J``.

    The result carries its reduced Gröbner basis (ring order) as generators,
    so it does not depend on how ``I`` or ``J`` were presented.
    """
    ring = ideal.ring
    gens = [g.map_to(ring) for g in by.generators]
    if not gens:
        return Ideal([ring.one()], ring)
    result = None
    for g in gens:
        part = quotient_by_power(ideal, g, budget)
        result = part if result is None else intersect(result, part, budget)
    return Ideal(result.groebner_basis(budget=budget), ring)
