"""Coefficient backends.

Two interchangeable coefficient fields sit behind every series object in the
library: exact Gaussian rationals (the default and the source of truth) and
double-precision complex numbers with a global tolerance.  Values are
immutable; mixing backends in one operation raises ``BackendMismatch``.
"""

from __future__ import annotations

import math
from fractions import Fraction

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _Q

from .errors import BackendMismatch, DivisionByZero, NonFiniteValue

__all__ = [
    "GaussianRational",
    "ComplexFloat",
    "field_arith",
    "classify_index",
    "classify_ratio",
    "reconstruct_rational",
    "coeff_to_json",
    "coeff_from_json",
    "IN_Q_GE0",
    "NOT_IN_Q_GE0",
    "IN_Q_GT0",
    "NOT_IN_Q_GT0",
    "INDETERMINATE",
]

# Classification labels used in reports and certificates.
IN_Q_GE0 = "InQGe0"
NOT_IN_Q_GE0 = "NotInQGe0"
IN_Q_GT0 = "InQGt0"
NOT_IN_Q_GT0 = "NotInQGt0"
INDETERMINATE = "Indeterminate"

_Q0 = _Q(0)
_Q1 = _Q(1)


def _as_mpq(value):
    if type(value) is type(_Q0):
        return value
    if isinstance(value, Fraction):
        return _Q(value.numerator, value.denominator)
    return _Q(value)


class GaussianRational:
    """An element of Q(i): exact rational real and imaginary parts."""

    __slots__ = ("re", "im")
    backend = "exact"

    def __init__(self, re=0, im=0):
        self.re = _as_mpq(re)
        self.im = _as_mpq(im)

    @classmethod
    def zero(cls):
        return cls(0, 0)

    @classmethod
    def one(cls):
        return cls(1, 0)

    @classmethod
    def from_int(cls, n):
        return cls(n, 0)

    def is_zero(self):
        return not (self.re or self.im)

    # Exact backend: negligible means exactly zero.
    is_negligible = is_zero

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def to_complex(self):
        return complex(float(self.re), float(self.im))

    def to_float(self):
        return ComplexFloat(float(self.re), float(self.im))

    def sort_key(self):
        return (self.re, self.im)

    def __add__(self, other):
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if b or d:
            return GaussianRational(a * c - b * d, a * d + b * c)
        return GaussianRational(a * c, _Q0)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        c, d = other.re, other.im
        norm = c * c + d * d
        if not norm:
            raise DivisionByZero("division by zero Gaussian rational")
        a, b = self.re, self.im
        return GaussianRational((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GaussianRational(1) / self.__pow__(-n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if not self.im:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"


def _coerce_exact(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)) or type(value) is type(_Q0):
        return GaussianRational(value, 0)
    return NotImplemented


class ComplexFloat:
    """A finite double-precision complex number.

    ``tol`` is the global comparison tolerance of the float backend (zero
    tests, division guards, classification).  ``zero_eps`` is the much
    smaller threshold used to prune arithmetic noise out of stored series
    coefficients; keeping the two apart lets small but legitimate
    coefficients (e.g. 1/12!) survive storage while 1e-16 cancellation
    residue does not.
    """

    __slots__ = ("z",)
    backend = "float"
    tol = 1e-9
    zero_eps = 1e-12

    def __init__(self, re=0.0, im=0.0):
        z = complex(re, im)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise NonFiniteValue(f"non-finite complex value {z!r}")
        self.z = z

    @classmethod
    def zero(cls):
        return cls(0.0, 0.0)

    @classmethod
    def one(cls):
        return cls(1.0, 0.0)

    @classmethod
    def from_int(cls, n):
        return cls(float(n), 0.0)

    @classmethod
    def from_complex(cls, z):
        return cls(z.real, z.imag)

    @property
    def re(self):
        return self.z.real

    @property
    def im(self):
        return self.z.imag

    def is_zero(self):
        return abs(self.z) <= ComplexFloat.tol

    def is_negligible(self):
        return abs(self.z) <= ComplexFloat.zero_eps

    def conjugate(self):
        return ComplexFloat.from_complex(self.z.conjugate())

    def to_complex(self):
        return self.z

    def to_exact(self):
        """Exact lift: every float is a rational number."""
        return GaussianRational(Fraction(self.z.real), Fraction(self.z.imag))

    def sort_key(self):
        return (self.z.real, self.z.imag)

    def __add__(self, other):
        other = _coerce_float(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexFloat.from_complex(self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_float(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexFloat.from_complex(self.z - other.z)

    def __rsub__(self, other):
        other = _coerce_float(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return ComplexFloat.from_complex(-self.z)

    def __mul__(self, other):
        other = _coerce_float(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexFloat.from_complex(self.z * other.z)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_float(other)
        if other is NotImplemented:
            return NotImplemented
        if abs(other.z) <= ComplexFloat.tol:
            raise DivisionByZero("division by a float below tolerance")
        return ComplexFloat.from_complex(self.z / other.z)

    def __rtruediv__(self, other):
        other = _coerce_float(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return ComplexFloat.from_complex(self.z ** n)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.z == complex(other)
        if isinstance(other, ComplexFloat):
            return self.z == other.z
        return NotImplemented

    def __hash__(self):
        return hash(self.z)

    def __bool__(self):
        return not self.is_negligible()

    def isclose(self, other, tol=None):
        tol = ComplexFloat.tol if tol is None else tol
        return abs(self.z - _coerce_float(other).z) <= tol

    def __repr__(self):
        return f"ComplexFloat({self.z.real!r}, {self.z.imag!r})"


def _coerce_float(value):
    if isinstance(value, ComplexFloat):
        return value
    if isinstance(value, (int, float)):
        return ComplexFloat(float(value), 0.0)
    if isinstance(value, complex):
        return ComplexFloat.from_complex(value)
    if isinstance(value, Fraction) or type(value) is type(_Q0):
        return ComplexFloat(float(value), 0.0)
    return NotImplemented


def same_field(*values):
    """The common backend class of the given coefficients."""
    field = type(values[0])
    for v in values[1:]:
        if type(v) is not field:
            raise BackendMismatch(
                f"mixed coefficient backends: {field.__name__} vs {type(v).__name__}"
            )
    return field


def coerce(field, value):
    """Convert an int/Fraction/float/complex scalar into the given field."""
    if isinstance(value, field):
        return value
    if field is GaussianRational:
        got = _coerce_exact(value)
    else:
        got = _coerce_float(value)
    if got is NotImplemented:
        raise BackendMismatch(f"cannot coerce {value!r} into {field.__name__}")
    return got


def field_arith(a, b, op):
    """Apply one of ``+ - * /`` to two coefficients of the same backend."""
    same_field(a, b)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def reconstruct_rational(x, den_bound=10 ** 6, tol=None):
    """Best rational approximation of a real by continued fractions.

    Returns a ``Fraction`` with denominator <= den_bound when one lies
    within ``tol`` of ``x``, else ``None``.
    """
    tol = ComplexFloat.tol if tol is None else tol
    cand = Fraction(x).limit_denominator(den_bound)
    if abs(cand - Fraction(x)) <= tol:
        return cand
    return None


def _classify(value, strict, den_bound, tol):
    if isinstance(value, GaussianRational):
        if value.im != 0:
            return NOT_IN_Q_GT0 if strict else NOT_IN_Q_GE0
        if strict:
            return IN_Q_GT0 if value.re > 0 else NOT_IN_Q_GT0
        return IN_Q_GE0 if value.re >= 0 else NOT_IN_Q_GE0
    if isinstance(value, ComplexFloat):
        tol = ComplexFloat.tol if tol is None else tol
        if abs(value.im) > tol:
            return NOT_IN_Q_GT0 if strict else NOT_IN_Q_GE0
        re = value.re
        if strict and re <= tol:
            return NOT_IN_Q_GT0
        if not strict and re < -tol:
            return NOT_IN_Q_GE0
        cand = reconstruct_rational(re, den_bound, tol)
        if cand is None:
            return INDETERMINATE
        if strict:
            return IN_Q_GT0 if cand > 0 else NOT_IN_Q_GT0
        return IN_Q_GE0 if cand >= 0 else NOT_IN_Q_GE0
    raise TypeError(f"not a coefficient: {value!r}")


def classify_index(value, den_bound=10 ** 6, tol=None):
    """Decide membership of an index value in Q>=0.

    Exact inputs are decided outright.  Float inputs try continued-fraction
    reconstruction of the real part (denominator bound ``den_bound``) when
    the imaginary part is below tolerance, and return ``Indeterminate``
    when reconstruction fails on a nonnegative real.
    """
    return _classify(value, False, den_bound, tol)


def classify_ratio(value, den_bound=10 ** 6, tol=None):
    """Decide membership in Q>0 (used for the ratio mu/lambda)."""
    return _classify(value, True, den_bound, tol)


def coeff_to_json(c):
    """Encode a coefficient: exact as four decimal strings, float as [re, im]."""
    if isinstance(c, GaussianRational):
        return [
            str(c.re.numerator),
            str(c.re.denominator),
            str(c.im.numerator),
            str(c.im.denominator),
        ]
    if isinstance(c, ComplexFloat):
        return [c.re, c.im]
    raise TypeError(f"not a coefficient: {c!r}")


def coeff_from_json(data, field):
    if field is GaussianRational:
        if len(data) != 4:
            raise ValueError(f"exact coefficient needs 4 entries, got {data!r}")
        rn, rd, im_n, im_d = (int(s) for s in data)
        return GaussianRational(Fraction(rn, rd), Fraction(im_n, im_d))
    if field is ComplexFloat:
        re, im = data
        return ComplexFloat(float(re), float(im))
    raise TypeError(f"unknown field {field!r}")
