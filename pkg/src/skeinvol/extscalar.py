"""Extended-range scalars.

Invariant values at level r grow like exp(c*r), which overflows IEEE
doubles somewhere around r ~ 150.  Everything that can get large is
therefore carried either as a complex mantissa times a power of two
(ExtScalar) or, for real products of quantum integers, in sign-log form
(SignLogReal).
"""

from __future__ import annotations

import math

# Beyond this exponent gap the smaller addend cannot move the mantissa of
# the larger one (doubles hold 53 bits), so addition returns the larger
# operand unchanged.
_ADD_GAP = 64

_LN2 = math.log(2.0)


class ExtScalar:
    """A complex number stored as mantissa * 2**exponent.

    Nonzero values are normalized so that max(|re|, |im|) of the mantissa
    lies in [1/2, 1).  Zero is canonical: mantissa 0j, exponent 0.
    """

    __slots__ = ("m", "e")

    def __init__(self, mantissa=0j, exponent=0):
        m = complex(mantissa)
        a = max(abs(m.real), abs(m.imag))
        if a == 0.0:
            self.m = 0j
            self.e = 0
            return
        # frexp(a) = (f, k) with f in [1/2, 1) and a = f * 2**k
        _, k = math.frexp(a)
        if k != 0:
            m = complex(math.ldexp(m.real, -k), math.ldexp(m.imag, -k))
        self.m = m
        self.e = exponent + k

    # ---- constructors -------------------------------------------------

    @classmethod
    def from_complex(cls, z):
        return cls(complex(z), 0)

    @classmethod
    def from_log(cls, log_magnitude, sign=1.0, quadrant=0):
        """Build sign * (-i)**quadrant * exp(log_magnitude).

        The quadrant argument covers the values produced by products of
        vertex weights: an even count of negative thetas gives a real
        result, an odd count an imaginary one.
        """
        if sign == 0:
            return cls()
        e = int(math.floor(log_magnitude / _LN2))
        frac = log_magnitude - e * _LN2
        m = math.exp(frac) * (1.0 if sign > 0 else -1.0)
        m *= (1, -1j, -1, 1j)[quadrant % 4]
        return cls(m, e)

    # ---- queries ------------------------------------------------------

    def is_zero(self):
        return self.m == 0j

    def to_complex(self):
        """Collapse to an ordinary complex (inf on overflow)."""
        try:
            return complex(
                math.ldexp(self.m.real, self.e), math.ldexp(self.m.imag, self.e)
            )
        except OverflowError:
            re = math.copysign(math.inf, self.m.real) if self.m.real else 0.0
            im = math.copysign(math.inf, self.m.imag) if self.m.imag else 0.0
            return complex(re, im)

    def to_float(self):
        """Real part as a float; use only on values known to be real."""
        return self.to_complex().real

    def log_abs(self):
        """Natural log of |value|; -inf for zero."""
        if self.is_zero():
            return -math.inf
        return math.log(abs(self.m)) + self.e * _LN2

    def log10_abs(self):
        return self.log_abs() / math.log(10.0)

    def real_ratio(self):
        """|im| / max(|re|,|im|) of the mantissa (0 for exactly real)."""
        a = max(abs(self.m.real), abs(self.m.imag))
        if a == 0:
            return 0.0
        return abs(self.m.imag) / a

    # ---- arithmetic ---------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, ExtScalar):
            return ExtScalar(self.m * other.m, self.e + other.e)
        return ExtScalar(self.m * complex(other), self.e)

    __rmul__ = __mul__

    def __neg__(self):
        return ExtScalar(-self.m, self.e)

    def __add__(self, other):
        if not isinstance(other, ExtScalar):
            other = ExtScalar.from_complex(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        big, small = (self, other) if self.e >= other.e else (other, self)
        gap = big.e - small.e
        if gap > _ADD_GAP:
            return big
        shifted = complex(
            math.ldexp(small.m.real, -gap), math.ldexp(small.m.imag, -gap)
        )
        return ExtScalar(big.m + shifted, big.e)

    def __sub__(self, other):
        if not isinstance(other, ExtScalar):
            other = ExtScalar.from_complex(other)
        return self + (-other)

    def abs2(self):
        """|value|^2, exactly real."""
        return ExtScalar(self.m.real * self.m.real + self.m.imag * self.m.imag,
                         2 * self.e)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise TypeError("ExtScalar only supports nonnegative integer powers")
        out = ExtScalar(1.0, 0)
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # ---- formatting ---------------------------------------------------

    def _part_str(self, x):
        if x == 0.0:
            return "0"
        l10 = math.log10(abs(x)) + self.e * math.log10(2.0)
        d = int(math.floor(l10))
        mant = math.copysign(10.0 ** (l10 - d), x)
        return f"{mant:.9f}e{d:+d}"

    def __repr__(self):
        if self.is_zero():
            return "ExtScalar(0)"
        return f"ExtScalar({self._part_str(self.m.real)} {self._part_str(self.m.imag)}j)"


def rel_diff(a, b):
    """Relative difference of two ExtScalars (or numbers), scale-free.

    |a - b| / max(|a|, |b|); zero when both are zero.
    """
    if not isinstance(a, ExtScalar):
        a = ExtScalar.from_complex(a)
    if not isinstance(b, ExtScalar):
        b = ExtScalar.from_complex(b)
    diff = a - b
    if diff.is_zero():
        return 0.0
    scale = max(a.log_abs(), b.log_abs())
    if scale == -math.inf:
        return 0.0
    return math.exp(diff.log_abs() - scale)


class SignLogReal:
    """A real number as (sign, log|value|); sign 0 means exact zero."""

    __slots__ = ("sign", "log")

    def __init__(self, sign, log=0.0):
        if sign == 0:
            self.sign = 0
            self.log = 0.0
        else:
            self.sign = 1 if sign > 0 else -1
            self.log = float(log)

    @classmethod
    def from_float(cls, x):
        if x == 0.0:
            return cls(0)
        return cls(1 if x > 0 else -1, math.log(abs(x)))

    def __mul__(self, other):
        if self.sign == 0 or other.sign == 0:
            return SignLogReal(0)
        return SignLogReal(self.sign * other.sign, self.log + other.log)

    def __truediv__(self, other):
        if other.sign == 0:
            raise ZeroDivisionError("SignLogReal division by zero")
        if self.sign == 0:
            return SignLogReal(0)
        return SignLogReal(self.sign * other.sign, self.log - other.log)

    def __pow__(self, n):
        if self.sign == 0:
            return SignLogReal(0) if n else SignLogReal(1)
        s = self.sign if n % 2 else 1
        return SignLogReal(s, self.log * n)

    def to_float(self):
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log)

    def to_ext(self):
        if self.sign == 0:
            return ExtScalar()
        return ExtScalar.from_log(self.log, sign=self.sign)

    def __repr__(self):
        if self.sign == 0:
            return "SignLogReal(0)"
        return f"SignLogReal({'+' if self.sign > 0 else '-'}exp({self.log:.6f}))"
