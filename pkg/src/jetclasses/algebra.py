"""
Exact multivariate polynomials over the rationals.

A :class:`PolynomialRing` is an ordered table of :class:`Variable` objects
together with a :class:`TermOrder`.  Polynomials store their terms as a
dictionary from dense exponent tuples to :class:`fractions.Fraction`
coefficients; iteration and printing always follow the ring's term order,
largest monomial first.

Variables carry a jet order, so ``Variable("x", 0, 2)`` is the second
jet coordinate of ``x`` and prints as ``x_2``.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import GradingError, IncompatibleRingError, UndefinedDegreeError

__all__ = [
    "Variable",
    "TermOrder",
    "PolynomialRing",
    "Polynomial",
    "MultiGrading",
    "multidegree_of_polynomial",
    "lattice_ring",
]


@dataclass(frozen=True, order=True, init=False, repr=False)
class Variable:
    """A coordinate ``name`` of jet order ``order``.

    ``index`` fixes the position of the base coordinate inside a ring;
    variables sort by ``(index, order)``.
    """

    index: int
    order: int
    name: str

    def __init__(self, name, index=0, order=0):
        if order < 0:
            raise ValueError("jet order must be non-negative")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "order", order)

    def __str__(self):
        return self.name if self.order == 0 else f"{self.name}_{self.order}"

    def __repr__(self):
        return f"Variable({self.name!r}, {self.index}, {self.order})"

    def shifted(self, k=1):
        return Variable(self.name, self.index, self.order + k)


def _grevlex_key(e):
    return (sum(e), tuple(-a for a in reversed(e)))


def _lex_key(e):
    return e


@dataclass(frozen=True)
class TermOrder:
    """Monomial order.

    ``kind`` is ``"lex"``, ``"grevlex"`` or ``"block"``.  A block order ranks
    by grevlex on the variable positions in ``block`` first, then grevlex on
    the remaining positions, so it eliminates the front block.
    """

    kind: str = "grevlex"
    block: frozenset = frozenset()

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown term order {self.kind!r}")

    @classmethod
    def lex(cls):
        return cls("lex")

    @classmethod
    def grevlex(cls):
        return cls("grevlex")

    @classmethod
    def elimination(cls, positions):
        return cls("block", frozenset(positions))

    def key_function(self, nvars):
        """Return ``key(exponent) -> sortable`` realising this order."""
        if self.kind == "lex":
            return _lex_key
        if self.kind == "grevlex":
            return _grevlex_key
        front = tuple(i for i in range(nvars) if i in self.block)
        rest = tuple(i for i in range(nvars) if i not in self.block)

        def key(e):
            a = tuple(e[i] for i in front)
            b = tuple(e[i] for i in rest)
            return (_grevlex_key(a), _grevlex_key(b))

        return key

    def __str__(self):
        if self.kind == "block":
            return f"block{sorted(self.block)}"
        return self.kind


class PolynomialRing:
    """Polynomial ring over Q on an ordered set of variables."""

    def __init__(self, variables, order=None):
        variables = tuple(sorted(variables))
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variables")
        names = [str(v) for v in variables]
        if len(set(names)) != len(names):
            raise ValueError(f"variable names collide: {names}")
        self.variables = variables
        self.order = order if order is not None else TermOrder.grevlex()
        self.nvars = len(variables)
        self._position = {v: i for i, v in enumerate(variables)}
        self._by_name = {s: i for i, s in enumerate(names)}
        self.key = self.order.key_function(self.nvars)

    @classmethod
    def from_names(cls, names, order=None):
        """Ring on base variables named in ``names`` (a list or a space-separated string)."""
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        return cls([Variable(nm, i) for i, nm in enumerate(names)], order)

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.variables, self.order))

    def __repr__(self):
        names = ", ".join(str(v) for v in self.variables)
        return f"PolynomialRing([{names}], {self.order})"

    def with_order(self, order):
        return PolynomialRing(self.variables, order)

    def position(self, var):
        """Position of a :class:`Variable` or variable name; ``KeyError`` if absent."""
        if isinstance(var, Variable):
            return self._position[var]
        return self._by_name[var]

    def __contains__(self, var):
        if isinstance(var, Variable):
            return var in self._position
        return var in self._by_name

    def gen(self, var):
        i = var if isinstance(var, int) else self.position(var)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    @property
    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exponent, coeff=1):
        exponent = tuple(exponent)
        if len(exponent) != self.nvars:
            raise ValueError("exponent length does not match ring")
        return Polynomial(self, {exponent: Fraction(coeff)})

    def __call__(self, value):
        if isinstance(value, Polynomial):
            return value.map_to(self)
        return self.constant(value)


def _mono_str(ring, e):
    parts = []
    for v, a in zip(ring.variables, e):
        if a == 1:
            parts.append(str(v))
        elif a > 1:
            parts.append(f"{v}^{a}")
    return "*".join(parts)


def _coeff_str(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Polynomial:
    """Immutable polynomial; terms are ``{exponent tuple: Fraction}``."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        clean = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(e)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, ring, terms):
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        return p

    # -- inspection -----------------------------------------------------

    def terms(self):
        """``[(exponent, coefficient), ...]`` in decreasing term order."""
        key = self.ring.key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def as_dict(self):
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def is_monomial(self):
        return len(self._terms) == 1

    def coefficient(self, exponent):
        return self._terms.get(tuple(exponent), Fraction(0))

    def leading_monomial(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=self.ring.key)

    def leading_coefficient(self):
        return self._terms[self.leading_monomial()]

    def leading_term(self):
        e = self.leading_monomial()
        return Polynomial._raw(self.ring, {e: self._terms[e]})

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def support(self):
        """Positions of variables that occur in some term."""
        used = set()
        for e in self._terms:
            used.update(i for i, a in enumerate(e) if a)
        return sorted(used)

    def variables(self):
        return [self.ring.variables[i] for i in self.support()]

    def monic(self):
        if not self._terms:
            return self
        lc = self.leading_coefficient()
        return Polynomial._raw(self.ring, {e: c / lc for e, c in self._terms.items()})

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise IncompatibleRingError(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Rational)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            other = Fraction(other)
            return Polynomial._raw(self.ring, {e: c / other for e, c in self._terms.items()})
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == self.ring.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    # -- ring changes -------------------------------------------------------

    def map_to(self, ring):
        """The same polynomial viewed in ``ring`` (variables matched by identity)."""
        if ring == self.ring:
            return self
        try:
            perm = [ring.position(v) for v in self.ring.variables]
        except KeyError as exc:
            raise IncompatibleRingError(f"variable {exc.args[0]} missing from target ring") from None
        out = {}
        for e, c in self._terms.items():
            ne = [0] * ring.nvars
            for i, a in enumerate(e):
                if a:
                    ne[perm[i]] = a
            out[tuple(ne)] = c
        return Polynomial._raw(ring, out)

    def substitute(self, images):
        """Evaluate at ``images`` (one polynomial per variable, all in one ring)."""
        images = list(images)
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        target = images[0].ring if images else self.ring
        result = target.zero()
        cache = {}
        for e, c in self._terms.items():
            term = target.constant(c)
            for i, a in enumerate(e):
                if a:
                    key = (i, a)
                    if key not in cache:
                        cache[key] = images[i] ** a
                    term = term * cache[key]
            result = result + term
        return result

    # -- text -----------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for k, (e, c) in enumerate(self.terms()):
            mono = _mono_str(self.ring, e)
            mag = abs(c)
            if not mono:
                body = _coeff_str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_coeff_str(mag)}*{mono}"
            if k == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def lattice_ring(rank, name="t"):
    """Ring ``Z[t1, ..., tr]`` that receives multidegrees."""
    return PolynomialRing([Variable(f"{name}{i + 1}", i) for i in range(rank)])


class MultiGrading:
    """Assignment of an integer degree vector to each variable of a ring.

    ``degrees`` maps variable names to vectors.  A jet variable ``x_k`` with
    no entry of its own inherits the degree of its base name ``x``.
    """

    def __init__(self, ring, degrees, rank=None):
        self.ring = ring
        resolved = []
        for v in ring.variables:
            d = degrees.get(str(v), degrees.get(v.name))
            if d is None:
                raise GradingError(f"no degree given for variable {v}")
            if isinstance(d, int):
                d = (d,)
            resolved.append(tuple(int(a) for a in d))
        if rank is None:
            rank = len(resolved[0]) if resolved else 1
        if any(len(d) != rank for d in resolved):
            raise GradingError("degree vectors of unequal length")
        if rank < 1:
            raise GradingError("lattice rank must be positive")
        self.rank = rank
        self.degrees = tuple(resolved)
        self._base = {str(v): d for v, d in zip(ring.variables, resolved)}

    def for_ring(self, ring):
        """Extend this grading to ``ring`` through base names (for jet rings)."""
        table = {}
        for v, d in zip(self.ring.variables, self.degrees):
            table.setdefault(v.name, d)
            table[str(v)] = d
        return MultiGrading(ring, table, self.rank)

    def degree(self, exponent):
        out = [0] * self.rank
        for d, a in zip(self.degrees, exponent):
            if a:
                for j in range(self.rank):
                    out[j] += a * d[j]
        return tuple(out)

    def class_ring(self):
        return lattice_ring(self.rank)

    def linear_form(self, position):
        """``sum_j deg(x)_j * t_j`` for the variable at ``position``."""
        T = self.class_ring()
        return Polynomial(
            T, {tuple(1 if k == j else 0 for k in range(self.rank)): a for j, a in enumerate(self.degrees[position]) if a}
        )

    def __repr__(self):
        body = "; ".join(f"{v}:{','.join(map(str, d))}" for v, d in zip(self.ring.variables, self.degrees))
        return f"MultiGrading({body})"


def multidegree_of_polynomial(f, grading):
    """Common degree vector of the terms of ``f``, or ``None`` if they differ."""
    if not f:
        raise UndefinedDegreeError("the zero polynomial has no degree")
    if f.ring != grading.ring:
        raise IncompatibleRingError("grading belongs to another ring")
    degs = {grading.degree(e) for e in f.as_dict()}
    if len(degs) == 1:
        return degs.pop()
    return None
