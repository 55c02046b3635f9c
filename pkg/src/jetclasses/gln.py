"""
The determinantal tower ``V_n ⊆ ... ⊆ V_1`` in ``n x n`` matrices.

``V_r`` is the locus where the first ``n+1-r`` columns have rank below
``n+1-r``.  The jet group acts on matrix jets by row operations; each orbit
with a given contact profile has a unique upper triangular representative
(the normal form), with ``t``-powers on the diagonal and low-degree
polynomials above it.  The module also holds the partition transforms used
for partial flag varieties and a harness that checks the conjectured
classes of contact loci against computed multidegrees.
"""

import itertools
import math
import re
from dataclasses import dataclass

from .algebra import MultiGrading, Polynomial, PolynomialRing, Variable, lattice_ring
from .errors import InsufficientTruncationError, ParseError, ResourceExhaustedError
from .groebner import Ideal, ideal_dimension
from .jets import SubvarietyChain, contact_ideal, lambda_of_m
from .multidegree import elementary_symmetric, ideal_multidegree
from .parsing import parse_series
from .series import TruncatedSeries

__all__ = [
    "TruncatedSeriesMatrix",
    "ContactProfile",
    "matrix_ring",
    "matrix_grading",
    "determinantal_generators",
    "determinantal_chain",
    "contact_profile",
    "normal_form",
    "is_normal_form",
    "cell_dimension",
    "check_partition",
    "check_flag_type",
    "lambda_prime",
    "lambda_tilde",
    "e_lambda",
    "flag_conjecture_class",
    "conjecture_class",
    "format_factored",
    "ConjectureVerdict",
    "verify_conjecture_case",
]


# -- matrices of truncated series ---------------------------------------------


class TruncatedSeriesMatrix:
    """Square matrix whose entries are series truncated modulo ``t^(m+1)``."""

    __slots__ = ("n", "m", "rows")

    def __init__(self, rows, m=None):
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        if m is None:
            m = next((e.m for r in rows for e in r if isinstance(e, TruncatedSeries)), None)
            if m is None:
                raise ValueError("truncation order m is required")
        out = []
        for r in rows:
            row = []
            for e in r:
                if not isinstance(e, TruncatedSeries):
                    e = parse_series(e, m) if isinstance(e, str) else TruncatedSeries([e], m)
                if e.m != m:
                    raise ValueError("entries have different truncation orders")
                row.append(e)
            out.append(tuple(row))
        self.n = n
        self.m = m
        self.rows = tuple(out)

    @classmethod
    def identity(cls, n, m):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], m)

    @classmethod
    def parse(cls, text):
        """Read ``"m=3\\nt+t^2, 1+2*t; t, 1+t^2"``: an ``m=`` header, rows split by ``;``."""
        match = re.match(r"\s*m\s*=\s*(\d+)\s*[;\n]?(.*)\Z", text, re.S)
        if not match:
            raise ParseError("matrix text must start with an 'm=' header")
        m = int(match.group(1))
        body = match.group(2)
        rows = [r for r in re.split(r"[;\n]", body) if r.strip()]
        if not rows:
            raise ParseError("matrix has no rows")
        entries = [[e for e in r.split(",")] for r in rows]
        n = len(entries)
        for i, r in enumerate(entries):
            if len(r) != n:
                raise ParseError(f"row {i + 1} has {len(r)} entries, expected {n}")
        return cls([[parse_series(e, m) for e in r] for r in entries], m)

    def __str__(self):
        return f"m={self.m}\n" + "; ".join(", ".join(str(e) for e in r) for r in self.rows)

    def __repr__(self):
        return f"TruncatedSeriesMatrix({str(self)!r})"

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeriesMatrix):
            return NotImplemented
        return self.m == other.m and self.rows == other.rows

    def __hash__(self):
        return hash((self.m, self.rows))

    def __matmul__(self, other):
        if self.n != other.n or self.m != other.m:
            raise ValueError("matrix shapes or truncation orders differ")
        n = self.n
        zero = TruncatedSeries.zero(self.m)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return TruncatedSeriesMatrix(out, self.m)

    def minor(self, rows, cols):
        """Determinant of the submatrix on the given row and column indices."""
        rows, cols = list(rows), list(cols)
        if len(rows) != len(cols):
            raise ValueError("minor needs as many rows as columns")
        if not rows:
            return TruncatedSeries.one(self.m)
        if len(rows) == 1:
            return self.rows[rows[0]][cols[0]]
        total = TruncatedSeries.zero(self.m)
        c0, rest = cols[0], cols[1:]
        for k, r in enumerate(rows):
            entry = self.rows[r][c0]
            if not entry:
                continue
            sub = self.minor(rows[:k] + rows[k + 1:], rest)
            term = entry * sub
            total = total - term if k % 2 else total + term
        return total

    def det(self):
        return self.minor(range(self.n), range(self.n))

    def is_invertible(self):
        return bool(self.det().coefficients[0])


# -- determinantal ideals -----------------------------------------------------


def matrix_ring(n):
    """Ring on the entries ``a{i}{j}`` of a generic ``n x n`` matrix, row-major."""
    if not 1 <= n <= 9:
        raise ValueError("matrix size must be between 1 and 9")
    return PolynomialRing([Variable(f"a{i + 1}{j + 1}", i * n + j) for i in range(n) for j in range(n)])


def matrix_grading(ring, n):
    """``deg a_ij = e_i``: the torus acts by scaling rows."""
    table = {f"a{i + 1}{j + 1}": tuple(1 if k == i else 0 for k in range(n)) for i in range(n) for j in range(n)}
    return MultiGrading(ring, table, n)


def _poly_det(M):
    k = len(M)
    if k == 1:
        return M[0][0]
    total = None
    for j in range(k):
        sub = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _poly_det(sub)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def determinantal_generators(n, r, ring=None):
    """Ideal of ``V_r``: the ``(n+1-r)``-minors on the first ``n+1-r`` columns."""
    if not 1 <= r <= n:
        raise ValueError(f"r must satisfy 1 <= r <= n, got r={r}, n={n}")
    ring = ring or matrix_ring(n)
    a = [[ring.gen(f"a{i + 1}{j + 1}") for j in range(n)] for i in range(n)]
    k = n + 1 - r
    gens = [_poly_det([[a[i][j] for j in range(k)] for i in rows]) for rows in itertools.combinations(range(n), k)]
    return Ideal(gens, ring)


def determinantal_chain(n):
    """The chain ``V_n ⊆ ... ⊆ V_1`` (ideals ordered ``I_1, ..., I_n``)."""
    ring = matrix_ring(n)
    return SubvarietyChain([determinantal_generators(n, r, ring) for r in range(1, n + 1)])


# -- contact profiles and the normal form ---------------------------------------


@dataclass(frozen=True)
class ContactProfile:
    """Contact orders ``lambda_r = ord V_r``; saturated entries are only known to be ``>= m+1``."""

    values: tuple
    saturated: tuple
    m: int

    @property
    def certified(self):
        return not any(self.saturated)

    def partition(self):
        if not self.certified:
            raise InsufficientTruncationError(f"profile {self} is not certified at m={self.m}")
        return self.values

    def __str__(self):
        parts = [f">={v}" if s else str(v) for v, s in zip(self.values, self.saturated)]
        return "(" + ", ".join(parts) + ")"


def contact_profile(x):
    """Orders of vanishing of ``V_1, ..., V_n`` along the matrix jet ``x``."""
    n, m = x.n, x.m
    values, saturated = [], []
    for r in range(1, n + 1):
        k = n + 1 - r
        order = min(x.minor(rows, range(k)).order() for rows in itertools.combinations(range(n), k))
        if order == math.inf:
            values.append(m + 1)
            saturated.append(True)
        else:
            values.append(order)
            saturated.append(False)
    return ContactProfile(tuple(values), tuple(saturated), m)


def _multiplicities(lam):
    lam = tuple(lam) + (0,)
    return tuple(lam[i] - lam[i + 1] for i in range(len(lam) - 1))


def normal_form(x):
    """Unique representative of the row-operation orbit of ``x`` in upper triangular form.

    The diagonal is ``t^(m_n), ..., t^(m_1)`` with ``m_i = lambda_i - lambda_(i+1)``
    and the entries above the diagonal in column ``j`` have degree below the
    diagonal exponent of that column.  Column by column: bring a row of
    minimal order to the diagonal (lowest row on ties), divide it by the unit
    part, clear below, then reduce the entries above.
    """
    profile = contact_profile(x)
    if not profile.certified:
        raise InsufficientTruncationError(f"contact profile {profile} is saturated at m={x.m}")
    lam = profile.values
    if x.m <= lam[0]:
        raise InsufficientTruncationError(f"need m > lambda_1 = {lam[0]}, got m={x.m}")
    n, m = x.n, x.m
    mult = _multiplicities(lam)
    rows = [list(r) for r in x.rows]
    for j in range(n):
        orders = [rows[i][j].order() for i in range(j, n)]
        d = min(orders)
        p = j + orders.index(d)
        if d != mult[n - 1 - j]:
            raise AssertionError(f"pivot order {d} in column {j + 1} contradicts profile {lam}")
        rows[j], rows[p] = rows[p], rows[j]
        unit = rows[j][j].shift_down(d).invert()
        rows[j] = [e * unit for e in rows[j]]
        rows[j][j] = TruncatedSeries.monomial(d, m)
        for i in range(j + 1, n):
            if rows[i][j]:
                c = rows[i][j].shift_down(d)
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[j])]
        for i in range(j):
            high = TruncatedSeries(rows[i][j].coefficients[d:], m)
            if high:
                rows[i] = [a - high * b for a, b in zip(rows[i], rows[j])]
    return TruncatedSeriesMatrix(rows, m)


def is_normal_form(x):
    """Does ``x`` have the shape of a normal form (for its own profile)?"""
    n = x.n
    for j in range(n):
        diag = x[j, j]
        d = diag.order()
        if d == math.inf or diag != TruncatedSeries.monomial(d, x.m):
            return False
        for i in range(j + 1, n):
            if x[i, j]:
                return False
        for i in range(j):
            if x[i, j].degree() >= d:
                return False
    return True


def cell_dimension(lam):
    """Number of free coefficients above the diagonal of a normal form with profile ``lam``.

    Column ``j`` contributes ``j - 1`` entries of degree below ``m_(n+1-j)``.
    """
    lam = check_partition(lam)
    n = len(lam)
    mult = _multiplicities(lam)
    return sum(j * mult[n - 1 - j] for j in range(n))


# -- partition transforms for partial flags -------------------------------------


def check_partition(lam):
    lam = tuple(int(a) for a in lam)
    if any(a < 0 for a in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not a weakly decreasing tuple of non-negative integers")
    return lam


def check_flag_type(r, n):
    r = tuple(int(a) for a in r)
    if any(not 0 < a < n for a in r) or any(r[i] >= r[i + 1] for i in range(len(r) - 1)):
        raise ValueError(f"flag type {r} must be strictly increasing inside 1..{n - 1}")
    return r


def _lambda_at(lam, p):
    # lambda_p with 1-based p; lambda_(n+1) = 0
    return lam[p - 1] if p <= len(lam) else 0


def lambda_prime(lam, r):
    """Subpartition ``lambda'``: blocks of ``lambda_(n+1-r_i)`` read from the top flag step down."""
    lam = check_partition(lam)
    n = len(lam)
    r = check_flag_type(r, n)
    steps = (0,) + r + (n,)
    out = []
    # the block for r_(i-1) < r' <= r_i (positions n+1-r') repeats lambda_(n+1-r_(i-1))
    for i in range(len(steps) - 1, 0, -1):
        size = steps[i] - steps[i - 1]
        value = _lambda_at(lam, n + 1 - steps[i - 1])
        out.extend([value] * size)
    return tuple(out)


def lambda_tilde(lam, r):
    """``lambda - lambda'`` componentwise."""
    lam = check_partition(lam)
    return tuple(a - b for a, b in zip(lam, lambda_prime(lam, r)))


def e_lambda(lam, r):
    """Contact order with the relative canonical divisor, ``sum lambda'_i``.

    Cross-checked against ``sum_i (n - r_i)(lambda_(n+1-r_i) - lambda_(n+1-r_(i-1)))``.
    """
    lam = check_partition(lam)
    n = len(lam)
    r = check_flag_type(r, n)
    total = sum(lambda_prime(lam, r))
    steps = (0,) + r
    other = sum(
        (n - steps[i]) * (_lambda_at(lam, n + 1 - steps[i]) - _lambda_at(lam, n + 1 - steps[i - 1]))
        for i in range(1, len(steps))
    )
    if total != other:
        raise AssertionError(f"e_lambda formulas disagree: {total} != {other}")
    return total


def flag_conjecture_class(mult, r):
    """Conjectured class ``(-1)^(sum lambda~) prod_j c_(j,r)^(m_j)`` on a partial flag variety.

    ``c_(j,r)`` is the elementary symmetric function of degree ``r_(i+1) - n + j``
    in ``t_(r_i + 1), ..., t_(r_(i+1))`` for the block with
    ``r_i + 1 <= n + 1 - j <= r_(i+1)``.
    """
    mult = tuple(int(a) for a in mult)
    n = len(mult)
    r = check_flag_type(r, n)
    lam = lambda_of_m(mult)
    sign = -1 if sum(lambda_tilde(lam, r)) % 2 else 1
    T = lattice_ring(n)
    steps = (0,) + r + (n,)
    out = T.constant(sign)
    for j in range(1, n + 1):
        if not mult[j - 1]:
            continue
        p = n + 1 - j
        i = next(i for i in range(len(steps) - 1) if steps[i] + 1 <= p <= steps[i + 1])
        block = [T.gen(f"t{q}") for q in range(steps[i] + 1, steps[i + 1] + 1)]
        c = elementary_symmetric(steps[i + 1] - n + j, T, block)
        out = out * c ** mult[j - 1]
    return out


# -- conjecture harness -----------------------------------------------------------


def conjecture_class(mult):
    """``prod_i e_i(t_1..t_n)^(m_i)``."""
    n = len(mult)
    T = lattice_ring(n)
    out = T.one()
    for i, a in enumerate(mult):
        if a:
            out = out * elementary_symmetric(i + 1, T) ** a
    return out


def _compact(p):
    return str(p).replace(" ", "")


def format_factored(mult):
    """``"(t1+t2)*(t1*t2)"``-style text for ``prod e_i^(m_i)``; ``"1"`` for the empty product."""
    n = len(mult)
    T = lattice_ring(n)
    parts = []
    for i, a in enumerate(mult):
        if a:
            body = "(" + _compact(elementary_symmetric(i + 1, T)) + ")"
            parts.append(body if a == 1 else f"{body}^{a}")
    return "*".join(parts) or "1"


@dataclass
class ConjectureVerdict:
    """Outcome of comparing ``[Cont^{>=lambda}]`` with ``prod c_i^(m_i)``.

    ``status`` is ``EQUAL``, ``DIFFERENT`` or ``BUDGET``.  Only the first class
    of the conjecture (the one cut out by the contact ideal) is tested.
    """

    n: int
    mult: tuple
    lam: tuple
    computed: Polynomial
    expected: Polynomial
    equal: bool
    codimension: int
    expected_codimension: int
    status: str
    tested: str = "[Cont^{>=lambda}(V.)]"

    @property
    def codimension_ok(self):
        return self.codimension is not None and self.codimension == self.expected_codimension

    def summary(self):
        if self.status == "EQUAL":
            return f"EQUAL {format_factored(self.mult)}"
        if self.status == "BUDGET":
            return f"BUDGET n={self.n} m={','.join(map(str, self.mult))}"
        return (
            f"DIFFERENT computed={_compact(self.computed)} expected={_compact(self.expected)} "
            f"codim={self.codimension} expected_codim={self.expected_codimension}"
        )


def verify_conjecture_case(n, mult, budget=None):
    """Multidegree of the contact ideal of the determinantal chain against ``prod e_i^(m_i)``.

    The codimension is compared with ``sum lambda_i``; a mismatch there makes
    the verdict ``DIFFERENT`` even if the classes agree.  Budget exhaustion
    yields a ``BUDGET`` verdict instead of an exception.
    """
    mult = tuple(int(a) for a in mult)
    if len(mult) != n:
        raise ValueError(f"expected {n} multiplicities, got {len(mult)}")
    lam = lambda_of_m(mult)
    expected = conjecture_class(mult)
    want_codim = sum(lam)
    try:
        chain = determinantal_chain(n)
        ideal = contact_ideal(chain, mult)
        grading = matrix_grading(ideal.ring, n)
        if ideal.generators:
            # the cached basis is reused by the multidegree and the dimension
            ideal.groebner_basis(budget=budget)
            computed = ideal_multidegree(ideal, grading)
            codim = ideal.ring.nvars - ideal_dimension(ideal)
        else:
            computed, codim = lattice_ring(n).one(), 0
    except ResourceExhaustedError:
        return ConjectureVerdict(n, mult, lam, None, expected, False, None, want_codim, "BUDGET")
    equal = computed == expected and codim == want_codim
    return ConjectureVerdict(n, mult, lam, computed, expected, equal, codim, want_codim, "EQUAL" if equal else "DIFFERENT")
