"""Exact coefficient rings: arbitrary-precision rationals and Laurent polynomials in q.

Every quantity this package manipulates is an integer, a rational number, or a
Laurent polynomial in a single parameter q with rational coefficients.  Working
over the rationals instead of floating point turns every downstream check
(ranks, commutators, eigenvalue equations) into an exact yes/no question with
zero tolerance.

``Rational`` is gmpy2's ``mpq`` when available (much faster inside Gaussian
elimination) and otherwise the stdlib ``fractions.Fraction``; both keep
numerator and denominator coprime with positive denominator, and the two types
hash and compare identically.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rational = Fraction

RATIONAL_ZERO = Rational(0)
RATIONAL_ONE = Rational(1)


def rational(value, den=None) -> Rational:
    """Coerce ints, Fractions, "num/den" strings, or Rationals to Rational."""
    if den is not None:
        return Rational(value, den)
    if isinstance(value, str):
        return rational_from_str(value)
    return Rational(value)


def rational_from_str(text: str) -> Rational:
    """Parse "num/den" (or a bare integer string) into a Rational."""
    body = text.strip()
    if "/" in body:
        num, _, den = body.partition("/")
        return Rational(int(num), int(den))
    return Rational(int(body))


def rational_to_str(value) -> str:
    """Serialize a rational as "num/den", always including the denominator."""
    value = rational(value)
    return "%d/%d" % (value.numerator, value.denominator)


class LaurentPoly:
    """A Laurent polynomial in q, stored sparsely as {exponent: coefficient}.

    The zero polynomial is the empty map, and arithmetic never leaves a zero
    coefficient stored, so equality is plain map equality.  Coefficients are
    Rational; exponents are arbitrary (possibly negative) integers.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for exp, c in coeffs.items():
                c = c if isinstance(c, Rational) else Rational(c)
                if c:
                    data[int(exp)] = c
        self.coeffs = data

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def constant(cls, value) -> "LaurentPoly":
        return cls({0: rational(value)})

    @classmethod
    def q(cls, exp: int = 1) -> "LaurentPoly":
        """The monomial q**exp (exp may be negative)."""
        return cls({exp: 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Rational, Fraction)):
            return LaurentPoly.constant(other)
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        data = dict(self.coeffs)
        for exp, c in other.coeffs.items():
            total = data.get(exp, 0) + c
            if total:
                data[exp] = total
            elif exp in data:
                del data[exp]
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = data
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {exp: -c for exp, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational, Fraction)):
            if not other:
                return LaurentPoly.zero()
            out = LaurentPoly.__new__(LaurentPoly)
            out.coeffs = {exp: c * other for exp, c in self.coeffs.items()}
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        # full convolution of the exponent maps
        data = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                exp = e1 + e2
                total = data.get(exp, 0) + c1 * c2
                if total:
                    data[exp] = total
                elif exp in data:
                    del data[exp]
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = data
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("LaurentPoly powers must be nonnegative integers")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, q0) -> Rational:
        """Substitute q := q0 exactly.  q0 must be a nonzero rational."""
        q0 = rational(q0)
        if not q0:
            raise ValueError("cannot evaluate a Laurent polynomial at q = 0")
        total = Rational(0)
        for exp, c in self.coeffs.items():
            total += c * q0**exp
        return total

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else None

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for exp in sorted(self.coeffs, reverse=True):
            c = self.coeffs[exp]
            if exp == 0:
                body = str(c)
            else:
                power = "q" if exp == 1 else "q^%d" % exp
                if c == 1:
                    body = power
                elif c == -1:
                    body = "-" + power
                elif c.denominator == 1:
                    body = "%d*%s" % (c.numerator, power)
                else:
                    body = "(%s)*%s" % (c, power)
            if parts and not body.startswith("-"):
                parts.append("+ " + body)
            elif parts:
                parts.append("- " + body[1:])
            else:
                parts.append(body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return "LaurentPoly(%r)" % ({e: str(c) for e, c in sorted(self.coeffs.items())},)

    def to_json(self) -> dict:
        """JSON form: exponents as string keys, coefficients as "num/den"."""
        return {str(exp): rational_to_str(self.coeffs[exp]) for exp in sorted(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        return cls({int(exp): rational_from_str(c) for exp, c in data.items()})


def q_power(exp: int) -> LaurentPoly:
    return LaurentPoly.q(exp)


def q_integer(k: int) -> LaurentPoly:
    """The q-integer [k] = q^(k-1) + q^(k-3) + ... + q^(1-k), with [0] = 0.

    This is the closed form of (q^k - q^-k)/(q - q^-1).
    """
    if k < 0:
        raise ValueError("q_integer requires k >= 0")
    return LaurentPoly({k - 1 - 2 * i: 1 for i in range(k)})


def eval_laurent(p: LaurentPoly, q0) -> Rational:
    """Evaluate p at a nonzero rational point q0."""
    return p.evaluate(q0)
