"""Univariate power series truncated modulo ``t^(m+1)``."""

import math
from fractions import Fraction

from .errors import IncompatibleRingError, NonUnitError

__all__ = ["TruncatedSeries"]


class TruncatedSeries:
    """Element of ``Q[t]/(t^(m+1))``.

    ``coefficients[j]`` is the coefficient of ``t^j``; there are exactly
    ``m + 1`` of them.
    """

    __slots__ = ("m", "coefficients")

    def __init__(self, coefficients, m=None):
        coeffs = [Fraction(c) for c in coefficients]
        if m is None:
            m = max(len(coeffs) - 1, 0)
        if m < 0:
            raise ValueError("truncation order must be non-negative")
        coeffs = (coeffs + [Fraction(0)] * (m + 1))[: m + 1]
        self.m = m
        self.coefficients = tuple(coeffs)

    @classmethod
    def _raw(cls, coeffs, m):
        # trusted path: ``coeffs`` already holds m+1 Fractions
        self = object.__new__(cls)
        self.m = m
        self.coefficients = tuple(coeffs)
        return self

    @classmethod
    def zero(cls, m):
        return cls([], m)

    @classmethod
    def one(cls, m):
        return cls([1], m)

    @classmethod
    def monomial(cls, k, m, coeff=1):
        """``coeff * t^k``, which is zero once ``k > m``."""
        c = [0] * (m + 1)
        if k <= m:
            c[k] = coeff
        return cls(c, m)

    @classmethod
    def from_polynomial(cls, p, m):
        """Truncate a univariate :class:`~jetclasses.algebra.Polynomial` in ``t``."""
        if p.ring.nvars > 1:
            raise IncompatibleRingError("expected a polynomial in a single variable")
        c = [0] * (m + 1)
        for e, a in p.as_dict().items():
            k = e[0] if e else 0
            if k <= m:
                c[k] = a
        return cls(c, m)

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], self.m)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.m != self.m:
            raise IncompatibleRingError(f"truncation orders differ: {self.m} vs {other.m}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries._raw([a + b for a, b in zip(self.coefficients, other.coefficients)], self.m)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw([-a for a in self.coefficients], self.m)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries._raw([a - b for a, b in zip(self.coefficients, other.coefficients)], self.m)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b, m = self.coefficients, other.coefficients, self.m
        out = [Fraction(0)] * (m + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(m + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return TruncatedSeries._raw(out, m)

    __rmul__ = __mul__

    def invert(self):
        """Multiplicative inverse; the constant term must be nonzero."""
        a = self.coefficients
        if not a[0]:
            raise NonUnitError(f"{self} is not a unit")
        inv = [Fraction(0)] * (self.m + 1)
        inv[0] = 1 / a[0]
        for k in range(1, self.m + 1):
            s = sum((a[j] * inv[k - j] for j in range(1, k + 1)), Fraction(0))
            inv[k] = -s * inv[0]
        return TruncatedSeries._raw(inv, self.m)

    def order(self):
        """Least ``j`` with a nonzero coefficient; ``math.inf`` for zero."""
        for j, c in enumerate(self.coefficients):
            if c:
                return j
        return math.inf

    def shift_down(self, k):
        """Quotient by ``t^k`` of a series of order at least ``k`` (top coefficients set to 0)."""
        if self.order() < k:
            raise ValueError(f"series of order {self.order()} is not divisible by t^{k}")
        return TruncatedSeries(self.coefficients[k:], self.m)

    def truncate_below(self, k):
        """Part of degree ``< k``."""
        return TruncatedSeries(self.coefficients[:k], self.m)

    def degree(self):
        for j in range(self.m, -1, -1):
            if self.coefficients[j]:
                return j
        return -1

    def __bool__(self):
        return any(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries([other], self.m)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.m == other.m and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.m, self.coefficients))

    def __str__(self):
        pieces = []
        for j, c in enumerate(self.coefficients):
            if not c:
                continue
            mag = abs(c)
            num = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if j == 0:
                body = num
            else:
                mono = "t" if j == 1 else f"t^{j}"
                body = mono if mag == 1 else f"{num}*{mono}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("-" if c < 0 else "+") + body)
        return "".join(pieces) or "0"

    def __repr__(self):
        return f"TruncatedSeries({str(self)!r}, m={self.m})"
