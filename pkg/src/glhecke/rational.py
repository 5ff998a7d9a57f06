"""Exact rational scalars.

Everything in this package computes over Q with arbitrary precision; there is
no floating point anywhere.  The scalar type is gmpy2's mpq (stored in lowest
terms with positive denominator), falling back to fractions.Fraction when
gmpy2 is unavailable.
"""

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rational

ZERO = Rational(0)
ONE = Rational(1)
HALF = Rational(1, 2)


def rat(x) -> Rational:
    """Coerce an int, string like "p/q", or Rational into a Rational."""
    if isinstance(x, str):
        return Rational(x)
    return Rational(x)


def rat_str(x) -> str:
    """Serialize a Rational as "p/q", or "p" when the denominator is 1."""
    x = Rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%s/%s" % (x.numerator, x.denominator)


def is_integral(x) -> bool:
    return Rational(x).denominator == 1


def as_int(x) -> int:
    q = Rational(x)
    if q.denominator != 1:
        raise ValueError("not an integer: %s" % (q,))
    return int(q.numerator)


def rat_vector(xs) -> tuple:
    return tuple(rat(x) for x in xs)
