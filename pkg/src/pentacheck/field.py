"""Exact arithmetic in the real quartic field Q(alpha), alpha = sqrt(10+2*sqrt(5)).

Elements are stored as rational coordinate vectors in the power basis
{1, alpha, alpha^2, alpha^3}.  The minimal polynomial x^4 - 20x^2 + 80 is
hard-wired (and re-derived by minimal_polynomial in the test suite).  The
distinguished real embedding sends alpha to the positive root in [3.8, 3.9];
real_value produces certified rational intervals for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Rational = Fraction

# x^4 - 20 x^2 + 80, ascending coefficients
MINPOLY_COEFFS = (Fraction(80), Fraction(0), Fraction(-20), Fraction(0), Fraction(1))


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to a rational")


class AlgebraicNumber:
    """An element c0 + c1*alpha + c2*alpha^2 + c3*alpha^3 with rational ci."""

    __slots__ = ("coords",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.coords = (
            _as_fraction(c0),
            _as_fraction(c1),
            _as_fraction(c2),
            _as_fraction(c3),
        )

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, q) -> "AlgebraicNumber":
        return cls(_as_fraction(q))

    @classmethod
    def alpha(cls) -> "AlgebraicNumber":
        return cls(0, 1)

    @classmethod
    def sqrt5(cls) -> "AlgebraicNumber":
        # alpha^2 = 10 + 2*sqrt(5)  =>  sqrt(5) = (alpha^2 - 10)/2
        return cls(Fraction(-5), 0, Fraction(1, 2), 0)

    @classmethod
    def from_coords(cls, coords: Sequence) -> "AlgebraicNumber":
        if len(coords) != 4:
            raise ValueError("need exactly 4 coordinates")
        return cls(*coords)

    # -- predicates ---------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.coords[1] == 0 and self.coords[2] == 0 and self.coords[3] == 0

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __bool__(self) -> bool:
        return any(c != 0 for c in self.coords)

    # -- ring operations ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, AlgebraicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return AlgebraicNumber(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicNumber(*(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(*(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicNumber(*(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = [Fraction(0)] * 7
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(o.coords):
                if b != 0:
                    prod[i + j] += a * b
        # reduce modulo alpha^4 = 20*alpha^2 - 80
        for k in range(6, 3, -1):
            c = prod[k]
            if c != 0:
                prod[k - 2] += 20 * c
                prod[k - 4] -= 80 * c
                prod[k] = Fraction(0)
        return AlgebraicNumber(*prod[:4])

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicNumber":
        """Multiplicative inverse via a rational 4x4 linear solve."""
        if not self:
            raise ZeroDivisionError("inverse of zero algebraic number")
        cols = []
        for k in range(4):
            e = [0, 0, 0, 0]
            e[k] = 1
            cols.append((self * AlgebraicNumber(*e)).coords)
        # solve sum_k x_k * (a * alpha^k) = 1
        rows = [[cols[k][i] for k in range(4)] for i in range(4)]
        rhs = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
        sol = solve_linear(rows, rhs)
        assert sol is not None, "field element has no inverse (impossible)"
        return AlgebraicNumber(*sol)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = AlgebraicNumber(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"AlgebraicNumber{self.coords}"

    def __str__(self):
        if self.is_rational:
            return str(self.coords[0])
        parts = []
        names = ["", "a", "a^2", "a^3"]
        for c, n in zip(self.coords, names):
            if c == 0:
                continue
            parts.append(f"{c}{'*' + n if n else ''}")
        return " + ".join(parts) if parts else "0"

    # -- serialization ------------------------------------------------

    def to_json(self) -> list:
        return [f"{c.numerator}/{c.denominator}" for c in self.coords]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "AlgebraicNumber":
        if len(data) != 4:
            raise ValueError("expected 4 coordinate strings")
        return cls(*(Fraction(s) for s in data))


def _as_number(x):
    """Coerce ints to Fraction; pass exact field elements through."""
    if isinstance(x, int):
        return Fraction(x)
    return x


def solve_linear(rows, rhs):
    """Solve an exact linear system by Gaussian elimination.

    Entries may be Fraction or AlgebraicNumber (any exact field elements
    supporting +, -, *, / and == 0).  rows is a list of m rows of length n,
    rhs has length m; returns one solution (free variables set to 0) or None
    if inconsistent.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [[_as_number(x) for x in row] + [_as_number(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][n] != 0:
            return None
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = a[i][n]
    return sol


def minimal_polynomial(a: AlgebraicNumber) -> list:
    """Monic minimal polynomial of a over Q, ascending coefficient list.

    Found by exact linear algebra on the power vectors 1, a, a^2, ...: the
    first power lying in the span of the previous ones determines the degree.
    """
    powers = [AlgebraicNumber(1)]
    for k in range(1, 5):
        powers.append(powers[-1] * a)
        # is powers[k] a combination of powers[0..k-1]?
        rows = [[powers[j].coords[i] for j in range(k)] for i in range(4)]
        rhs = list(powers[k].coords)
        sol = solve_linear(rows, rhs)
        if sol is not None:
            # a^k - sum sol_j a^j = 0
            coeffs = [-s for s in sol] + [Fraction(1)]
            return coeffs
    raise AssertionError("no relation of degree <= 4 (field is degree 4)")


def eval_poly(coeffs, x):
    """Evaluate an ascending coefficient list at x (Horner)."""
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class GaloisElement:
    """Field automorphism of Q(alpha) determined by the image of alpha."""

    index: int
    image_of_alpha: AlgebraicNumber

    def apply(self, a: AlgebraicNumber) -> AlgebraicNumber:
        img = self.image_of_alpha
        acc = AlgebraicNumber(0)
        pw = AlgebraicNumber(1)
        for c in a.coords:
            if c != 0:
                acc = acc + pw * c
            pw = pw * img
        return acc

    def __call__(self, a: AlgebraicNumber) -> AlgebraicNumber:
        return self.apply(a)

    @property
    def name(self) -> str:
        return f"sigma{self.index}"


_GALOIS_CACHE = None


def galois_group() -> list:
    """The four automorphisms of Q(alpha), identity first.

    The roots of the minimal polynomial of alpha inside the field are
    +-alpha and +-beta with beta = 2*(alpha^2-10)/alpha; each candidate is
    verified exactly against the quartic, and the composition table is
    checked to be closed.
    """
    global _GALOIS_CACHE
    if _GALOIS_CACHE is not None:
        return _GALOIS_CACHE
    alpha = AlgebraicNumber.alpha()
    # beta = sqrt(10 - 2*sqrt(5)) = 2*(alpha^2 - 10)/alpha
    beta = (alpha * alpha - 10) * alpha.inverse() * 2
    candidates = [alpha, -alpha, beta, -beta]
    roots = []
    for r in candidates:
        if eval_poly(MINPOLY_COEFFS, r):
            continue
        if r not in roots:
            roots.append(r)
    if len(roots) != 4:
        raise RuntimeError(
            "expected 4 roots of the quartic inside the field, found "
            f"{len(roots)}; normality would be falsified"
        )
    elements = [GaloisElement(i, r) for i, r in enumerate(roots)]
    # closure of the composition table
    images = {e.image_of_alpha.coords: e for e in elements}
    for s in elements:
        for t in elements:
            composed = s.apply(t.image_of_alpha)
            if composed.coords not in images:
                raise RuntimeError("Galois composition table is not closed")
    _GALOIS_CACHE = elements
    return elements


def galois_orbit(a: AlgebraicNumber) -> list:
    return [g.apply(a) for g in galois_group()]


# -- certified real embedding -----------------------------------------


@dataclass(frozen=True)
class Interval:
    """Closed rational interval [lo, hi] certified to contain a real value."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other):
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __mul__(self, other):
        prods = [
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        ]
        return Interval(min(prods), max(prods))

    def scale(self, q: Fraction) -> "Interval":
        if q >= 0:
            return Interval(self.lo * q, self.hi * q)
        return Interval(self.hi * q, self.lo * q)

    def __float__(self) -> float:
        return float(self.mid)


def _alpha_bracket(n_bisections: int) -> Interval:
    # x^4 - 20x^2 + 80 is negative at 3.8, positive at 3.9
    lo, hi = Fraction(38, 10), Fraction(39, 10)
    for _ in range(n_bisections):
        mid = (lo + hi) / 2
        if eval_poly(MINPOLY_COEFFS, mid) < 0:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)


def real_value(a: AlgebraicNumber, precision: int) -> Interval:
    """Certified interval of width <= 10^-precision around the real value of a."""
    if precision <= 0:
        raise ValueError("precision must be positive")
    target = Fraction(1, 10**precision)
    n = 8
    while True:
        alpha_iv = _alpha_bracket(n)
        acc = Interval(a.coords[0], a.coords[0])
        pw = Interval(Fraction(1), Fraction(1))
        for c in a.coords[1:]:
            pw = pw * alpha_iv
            if c != 0:
                acc = acc + pw.scale(c)
        if acc.width <= target:
            return acc
        n *= 2


def to_float(a: AlgebraicNumber, precision: int = 12) -> float:
    return float(real_value(a, precision))
