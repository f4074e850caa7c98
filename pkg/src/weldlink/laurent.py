"""Exact integer Laurent polynomials in one variable.

Coefficients are Python ints keyed by integer exponents; all arithmetic is
exact.  The normal form used for Alexander invariants shifts the lowest
exponent to 0 and makes the leading (highest-degree) coefficient positive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True, eq=False)
class LaurentPolynomial:
    coeffs: dict = field(default_factory=dict)  # exponent -> nonzero int

    def __post_init__(self):
        clean = {int(e): int(c) for e, c in self.coeffs.items() if c}
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def t(cls, exponent=1, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def from_coeffs(cls, coeffs, shift=0):
        """Dense constructor: coeffs[i] is the coefficient of t**(i + shift)."""
        return cls({i + shift: c for i, c in enumerate(coeffs)})

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out)

    __radd__ = __add__
    __rmul__ = __mul__

    def min_exponent(self):
        return min(self.coeffs) if self.coeffs else 0

    def max_exponent(self):
        return max(self.coeffs) if self.coeffs else 0

    def shifted(self, by):
        return LaurentPolynomial({e + by: c for e, c in self.coeffs.items()})

    def normalized(self):
        """Lowest exponent 0 and positive leading coefficient; zero stays zero."""
        if not self.coeffs:
            return self
        p = self.shifted(-self.min_exponent())
        if p.coeffs[p.max_exponent()] < 0:
            p = -p
        return p

    def dense(self):
        """(coeff list from the lowest exponent up, lowest exponent)."""
        if not self.coeffs:
            return [], 0
        lo, hi = self.min_exponent(), self.max_exponent()
        return [self.coeffs.get(e, 0) for e in range(lo, hi + 1)], lo

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else "t^%d" % e
                body = var if mag == 1 else "%d*%s" % (mag, var)
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms)


def determinant(matrix):
    """Exact determinant of a square matrix of Laurent polynomials.

    Cofactor expansion along the first row; matrices here are small (one row
    per Wirtinger relation).
    """
    n = len(matrix)
    if n == 0:
        return LaurentPolynomial.one()
    if n == 1:
        return matrix[0][0]
    total = LaurentPolynomial.zero()
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = entry * determinant(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def _poly_divmod(a, b):
    """Euclidean division of dense Fraction coefficient lists (low to high)."""
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        coef = a[i + len(b) - 1] * inv
        q[i] = coef
        if coef:
            for j, bc in enumerate(b):
                a[i + j] -= coef * bc
    r = a[: len(b) - 1]
    while r and not r[-1]:
        r.pop()
    return q, r


def _trim(coeffs):
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def polynomial_gcd(polys):
    """Primitive integer gcd of Laurent polynomials, up to units t**k and -1.

    Works over the rationals via the Euclidean algorithm, then clears
    denominators and divides out integer content.  Returns a
    :class:`LaurentPolynomial` with lowest exponent 0.
    """
    dense_polys = []
    for p in polys:
        coeffs, _ = p.dense()
        coeffs = _trim(coeffs)
        while coeffs and not coeffs[0]:
            coeffs.pop(0)  # strip powers of t: a unit in the Laurent ring
        if coeffs:
            dense_polys.append(coeffs)
    if not dense_polys:
        return LaurentPolynomial.zero()
    g = dense_polys[0]
    for p in dense_polys[1:]:
        a, b = g, p
        while b:
            _, r = _poly_divmod(a, b)
            a, b = b, r
        g = a
        if len(g) == 1:
            break
    denominators = [c.denominator for c in g]
    lcm = 1
    for d in denominators:
        lcm = lcm * d // _gcd_int(lcm, d)
    ints = [int(c * lcm) for c in g]
    content = 0
    for c in ints:
        content = _gcd_int(content, c)
    ints = [c // content for c in ints]
    return LaurentPolynomial.from_coeffs(ints).normalized()


def _gcd_int(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a
