"""Exact scalar arithmetic over the rationals and over odd prime fields.

A Field object is a context; a Scalar is an immutable value tagged with its
context.  Rational values are stdlib Fractions, prime field values are ints
reduced to [0, p).  Characteristic 2 is rejected everywhere because the
bilinear form machinery divides by 2.
"""

from fractions import Fraction
from math import isqrt

from .errors import DivisionByZero, MixedContexts, UnsupportedContext, ZeroScalar


def _is_prime(n):
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def _mod_sqrt(a, p):
    """Square root of a quadratic residue a mod an odd prime p (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


class Field:
    """Abstract field context.  Instances compare by mathematical identity."""

    def scalar(self, value):
        """Coerce value (int, Fraction, str like '3/4', or Scalar) into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise MixedContexts(f"scalar from {value.field} used in {self}")
            return value
        return Scalar(self, self._canon(value))

    @property
    def zero(self):
        return self.scalar(0)

    @property
    def one(self):
        return self.scalar(1)

    def _canon(self, value):
        raise NotImplementedError

    def _inv(self, value):
        raise NotImplementedError


class Rationals(Field):
    """The field of rational numbers, characteristic 0."""

    characteristic = 0

    def _canon(self, value):
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into Q")

    def _inv(self, value):
        if value == 0:
            raise DivisionByZero("division by zero in Q")
        return 1 / value

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    """The field with p elements, p an odd prime."""

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise UnsupportedContext(f"{p} is not prime")
        if p == 2:
            raise UnsupportedContext("characteristic 2 is not supported")
        self.p = p

    @property
    def characteristic(self):
        return self.p

    def _canon(self, value):
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"denominator divisible by {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, int):
            return value % self.p
        raise TypeError(f"cannot coerce {value!r} into F_{self.p}")

    def _inv(self, value):
        if value % self.p == 0:
            raise DivisionByZero(f"division by zero in F_{self.p}")
        return pow(value, -1, self.p)

    def elements(self):
        """All field elements as Scalars, in the order 0, 1, ..., p-1."""
        return [Scalar(self, v) for v in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F_{self.p}"


QQ = Rationals()


def GF(p):
    """Prime field constructor, mirroring the usual computer algebra spelling."""
    return PrimeField(p)


class Scalar:
    """An immutable field element: a Fraction over Q, an int in [0, p) over F_p."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *a):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise MixedContexts(f"cannot mix {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction, str)):
            return self.field.scalar(other)
        return None  # defer to the other operand

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.scalar(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.scalar(self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.scalar(self.value * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.scalar(self.value * self.field._inv(o.value))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return self.field.scalar(-self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar) and other.field != self.field:
            return False
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    @property
    def key(self):
        """Sort key; total order inside one field context."""
        return self.value

    def __repr__(self):
        return f"{self.value}"


def is_square(a):
    """Squareness test with witness for nonzero prime field scalars.

    Returns (True, root) with the smaller of the two roots, or (False, None).
    Not defined over Q; raises UnsupportedContext there.
    """
    if not isinstance(a.field, PrimeField):
        raise UnsupportedContext("square testing is only supported over prime fields")
    p = a.field.p
    v = a.value % p
    if v == 0:
        raise ZeroScalar("squareness of zero is excluded")
    if pow(v, (p - 1) // 2, p) != 1:
        return False, None
    r = _mod_sqrt(v, p)
    return True, a.field.scalar(min(r, p - r))
