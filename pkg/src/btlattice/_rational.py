"""Small helpers for exact rational arithmetic."""

from fractions import Fraction
from math import ceil, lcm
from numbers import Rational

from .errors import InvalidInput


def as_fraction(value):
    """Convert `value` to a `Fraction` without ever going through floats.

    Accepts integers, fractions and strings such as ``"3/4"`` or ``"-2"``.

      >>> as_fraction("6/8")
      Fraction(3, 4)
      >>> as_fraction(2)
      Fraction(2, 1)
    """
    if isinstance(value, bool):
        raise InvalidInput("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as err:
            raise InvalidInput(f"not a rational: {value!r}") from err
    raise InvalidInput(f"expected an exact rational, got {type(value).__name__}")


def fractions(values):
    return tuple(as_fraction(v) for v in values)


def ceil_div(n, f):
    """Smallest integer >= n/f, for integers `n` and positive `f`."""
    return -((-n) // f)


def denominators_lcm(values):
    """Least common multiple of the denominators of `values` (1 if empty)."""
    result = 1
    for v in values:
        result = lcm(result, as_fraction(v).denominator)
    return result


def residue(x):
    """Fractional part of `x` in [0, 1)."""
    return x - (x.numerator // x.denominator)


def fmt(x):
    """Render a rational as ``"p/q"`` in lowest terms, or ``"p"`` if integral."""
    return str(as_fraction(x))


__all__ = ["as_fraction", "fractions", "ceil", "ceil_div", "denominators_lcm", "residue", "fmt"]
