"""Exact scalars for the sphere algebras

Three kinds of scalar are used throughout qsphere:

* rationals, as :class:`fractions.Fraction`;
* Gaussian rationals ``a + b*i``, which appear only as unit scalars;
* elements of the rational function field Q(q), as :class:`QRat`, a thin
  wrapper over the rational function fields of :mod:`sympy.polys`.

A :class:`QMode` records whether the deformation parameter q is kept
symbolic or is fixed to a rational value.
"""

from fractions import Fraction
from functools import lru_cache
import logging
import numbers
import operator

import attr
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.fields import FracElement, field

from qsphere.errors import DivisionByZero, InvalidQ, PoleAtPoint


log = logging.getLogger(__name__)

_ZERO = Fraction(0)
_ONE = Fraction(1)


def is_scalar(value):
    """True if value is an exact rational or Gaussian rational."""
    return isinstance(value, (numbers.Rational, GaussianRational))


def as_scalar(value):
    """Convert a value to an exact scalar.

    Parameters
    ----------
    value : int, Fraction, GaussianRational, or str
        Strings are read as rationals, e.g. "1/3".

    Returns
    -------
    Fraction or GaussianRational
    """
    if isinstance(value, (Fraction, GaussianRational)):
        return value
    elif isinstance(value, (numbers.Rational, str)):
        return Fraction(value)
    else:
        raise TypeError("Not an exact scalar: {!r}".format(value))


def reciprocal(value):
    """Exact multiplicative inverse of a scalar."""
    if not value:
        raise DivisionByZero("division by zero")
    if isinstance(value, GaussianRational):
        norm = value.norm()
        return GaussianRational(value.real / norm, -value.imag / norm)
    return _ONE / value


class GaussianRational(object):
    """A complex number a + b*i with rational parts.

    Values with a zero imaginary part are never constructed: the
    constructor returns a plain Fraction instead, so that equality of
    scalars is structural.
    """

    __slots__ = ('real', 'imag')

    def __new__(cls, real, imag=0):
        real = Fraction(real)
        imag = Fraction(imag)
        if not imag:
            return real
        self = super(GaussianRational, cls).__new__(cls)
        self.real = real
        self.imag = imag
        return self

    def conjugate(self):
        return GaussianRational(self.real, -self.imag)

    def norm(self):
        """The squared modulus, a rational."""
        return self.real * self.real + self.imag * self.imag

    def __add__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return GaussianRational(self.real + other.real, self.imag + other.imag)

    __radd__ = __add__

    def __sub__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return GaussianRational(self.real - other.real, self.imag - other.imag)

    def __rsub__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return GaussianRational(other.real - self.real, other.imag - self.imag)

    def __mul__(self, other):
        if not is_scalar(other):
            return NotImplemented
        a, b, c, d = self.real, self.imag, other.real, other.imag
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return self * reciprocal(other)

    def __rtruediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return reciprocal(self) * other

    def __neg__(self):
        return GaussianRational(-self.real, -self.imag)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, numbers.Integral):
            return NotImplemented
        base = self if k >= 0 else reciprocal(self)
        result = _ONE
        for _ in range(abs(k)):
            result = result * base
        return result

    def __bool__(self):
        return True

    def __eq__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return self.real == other.real and self.imag == other.imag

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.real, self.imag))

    def __repr__(self):
        return "GaussianRational({!r}, {!r})".format(
            str(self.real), str(self.imag))

    def __str__(self):
        if self.imag == 1:
            imag = "i"
        elif self.imag == -1:
            imag = "-i"
        else:
            imag = "{}*i".format(self.imag)
        if not self.real:
            return imag
        if not imag.startswith('-'):
            imag = '+' + imag
        return "{}{}".format(self.real, imag)


# Q(q) and Q(i)(q). Elements of the Gaussian field always have a
# coefficient with a nonzero imaginary part.
_REAL, _Q = field("q", QQ)
_GAUSSIAN = field("q", QQ_I)[0]


def _qq(value):
    return QQ(value.numerator, value.denominator)


def _to_domain(value, ring):
    if isinstance(value, GaussianRational):
        return QQ_I(_qq(value.real), _qq(value.imag))
    value = _qq(Fraction(value))
    return QQ_I(value) if ring.domain == QQ_I else value


def _from_domain(c):
    if QQ_I.of_type(c):
        return GaussianRational(_from_domain(c.x), _from_domain(c.y))
    return Fraction(int(c.numerator), int(c.denominator))


def _poly(coeffs, ring):
    """The polynomial with coefficients coeffs, lowest degree first."""
    return ring.from_dict({(k,): _to_domain(c, ring)
                           for k, c in enumerate(coeffs) if c})


def _terms(poly):
    """Nonzero (exponent, scalar) pairs in ascending order."""
    return sorted((m[0], _from_domain(c)) for m, c in poly.items())


def _poly_eval(poly, x):
    total = _ZERO
    for (k,), c in poly.items():
        total = total + _from_domain(c) * x ** k
    return total


def _to_gaussian(frac):
    if frac.field == _GAUSSIAN:
        return frac
    ring = _GAUSSIAN.ring
    return _GAUSSIAN.new(
        ring.from_dict({m: QQ_I(c) for m, c in frac.numer.items()}),
        ring.from_dict({m: QQ_I(c) for m, c in frac.denom.items()}))


def _lift(value, K):
    """value, a scalar or field element, as an element of K."""
    if is_scalar(value):
        return K.ground_new(_to_domain(value, K.ring))
    return _to_gaussian(value) if K == _GAUSSIAN else value


def _normalize(value):
    """Canonical stored value: exact scalars for constants, sympy field
    elements otherwise. Gaussian elements with real coefficients move
    to Q(q)."""
    if is_scalar(value):
        return as_scalar(value)
    if isinstance(value, QRat):
        return value.value
    if not isinstance(value, FracElement):
        raise TypeError("Not a Q(q) value: {!r}".format(value))
    numer, denom = value.numer, value.denom
    if numer.is_ground and denom.is_ground:
        return _from_domain(numer.LC) / _from_domain(denom.LC)
    if value.field == _GAUSSIAN and not any(
            c.y for poly in (numer, denom) for c in poly.values()):
        ring = _REAL.ring
        return _REAL.new(ring.from_dict({m: c.x for m, c in numer.items()}),
                         ring.from_dict({m: c.x for m, c in denom.items()}))
    return value


def _field_of(*values):
    for value in values:
        if isinstance(value, GaussianRational) or (
                isinstance(value, FracElement) and value.field == _GAUSSIAN):
            return _GAUSSIAN
    return _REAL


def _apply(op, a, b):
    if is_scalar(a) and is_scalar(b):
        return QRat(op(a, b))
    K = _field_of(a, b)
    return QRat(op(_lift(a, K), _lift(b, K)))


@attr.s(slots=True, frozen=True, eq=False, repr=False)
class QRat(object):
    """An element of the rational function field Q(q).

    Constants are held as exact scalars and everything else as an
    element of sympy's rational function field over QQ, or over QQ_I
    when a coefficient is not real. sympy keeps the numerator and
    denominator coprime with a canonical denominator, so equal values
    have equal representations.

    Parameters
    ----------
    value : scalar, QRat, or sympy FracElement
    """

    value = attr.ib(converter=_normalize)

    @classmethod
    def q(cls, k=1):
        """The monomial q**k, for any integer k."""
        return cls(_Q ** k)

    @classmethod
    def from_coeffs(cls, num, den=(1,)):
        """The quotient of two polynomials given by their coefficients,
        lowest degree first.

        Raises
        ------
        DivisionByZero
            If every coefficient of den is zero.
        """
        K = _field_of(*(list(num) + list(den)))
        denom = _poly(den, K.ring)
        if not denom:
            raise DivisionByZero("division by zero in Q(q)")
        return cls(K.new(_poly(num, K.ring), denom))

    def is_zero(self):
        return is_scalar(self.value) and not self.value

    def is_one(self):
        return is_scalar(self.value) and self.value == 1

    def is_constant(self):
        return is_scalar(self.value)

    def is_real(self):
        return not isinstance(self.value, GaussianRational) and (
            is_scalar(self.value) or self.value.field == _REAL)

    def constant(self):
        """The scalar value of a constant element."""
        if not self.is_constant():
            raise ValueError("{} is not a constant".format(self))
        return self.value

    def evaluate(self, x):
        """Substitute q = x and return the exact scalar value.

        Raises
        ------
        PoleAtPoint
            If x is a root of the denominator.
        """
        if self.is_constant():
            return self.value
        x = as_scalar(x)
        d = _poly_eval(self.value.denom, x)
        if not d:
            raise PoleAtPoint("{} has a pole at q = {}".format(self, x))
        return _poly_eval(self.value.numer, x) / d

    def conjugate(self):
        if self.is_real():
            return self
        if self.is_constant():
            return QRat(self.value.conjugate())
        ring = _GAUSSIAN.ring
        numer, denom = self.value.numer, self.value.denom
        return QRat(_GAUSSIAN.new(
            ring.from_dict({m: QQ_I(c.x, -c.y) for m, c in numer.items()}),
            ring.from_dict({m: QQ_I(c.x, -c.y) for m, c in denom.items()})))

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("division by zero in Q(q)")
        if self.is_constant():
            return QRat(reciprocal(self.value))
        return QRat(self.value.field.new(self.value.denom, self.value.numer))

    def sign(self):
        """Sign of the lowest-degree numerator coefficient, used for
        printing."""
        if self.is_zero():
            return 0
        if self.is_constant():
            c = self.value
        else:
            c = _terms(self.value.numer)[0][1]
            if self.value.denom.is_ground:
                c = c / _from_domain(self.value.denom.LC)
        lead = c.real if c.real else c.imag
        return -1 if lead < 0 else 1

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _apply(operator.add, self.value, other.value)

    __radd__ = __add__

    def __neg__(self):
        return QRat(-self.value)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _apply(operator.sub, self.value, other.value)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _apply(operator.mul, self.value, other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by zero in Q(q)")
        if self.is_constant() and other.is_constant():
            return QRat(self.value * reciprocal(other.value))
        return _apply(operator.truediv, self.value, other.value)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if not isinstance(k, numbers.Integral):
            return NotImplemented
        if k < 0:
            return self.inverse() ** -k
        # Powers of a canonical fraction stay canonical.
        return QRat(self.value ** k)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.value, other.value
        if is_scalar(a) or is_scalar(b):
            return is_scalar(a) and is_scalar(b) and a == b
        return a.field == b.field and a == b

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "QRat({!r})".format(str(self))

    def __str__(self):
        if self.is_constant():
            return _poly_text([(0, self.value)]) if self.value else "0"
        numer, denom = _terms(self.value.numer), _terms(self.value.denom)
        if len(denom) == 1 and denom[0][0] == 0:
            # Polynomials print with their coefficients.
            d = denom[0][1]
            return _poly_text([(k, c / d) for k, c in numer])
        num = _poly_text(numer)
        den = _poly_text(denom)
        if len(numer) > 1:
            num = "({})".format(num)
        if not (len(denom) == 1 and denom[0][1] == 1):
            den = "({})".format(den)
        return "{}/{}".format(num, den)


def _term_text(k, c):
    ctext = str(c)
    if isinstance(c, GaussianRational):
        ctext = "({})".format(ctext)
    if k == 0:
        return ctext
    mono = "q" if k == 1 else "q^{}".format(k)
    if c == 1:
        return mono
    elif c == -1:
        return '-' + mono
    else:
        return "{}*{}".format(ctext, mono)


def _poly_text(terms):
    parts = []
    for k, c in terms:
        text = _term_text(k, c)
        if parts and not text.startswith('-'):
            text = '+' + text
        parts.append(text)
    return ''.join(parts)


def as_qrat(value):
    """Coerce a QRat or exact scalar to a QRat."""
    result = _coerce(value)
    if result is None:
        raise TypeError("Not a Q(q) value: {!r}".format(value))
    return result


def _coerce(value):
    if isinstance(value, QRat):
        return value
    if is_scalar(value):
        return QRat(value)
    return None


ZERO = QRat(0)
ONE = QRat(1)


_OPS = {
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
    'div': operator.truediv,
}


def qrat_arith(a, b, op):
    """Field operation op in {'add', 'sub', 'mul', 'div'} on QRat values.

    Raises
    ------
    DivisionByZero
        If op is 'div' and b is zero.
    """
    try:
        func = _OPS[op]
    except KeyError:
        raise ValueError("Unknown operation: {!r}".format(op))
    return func(QRat(0) + a, b)


def qrat_eval(a, q0):
    """Value of a at q = q0."""
    return _coerce(a).evaluate(as_scalar(q0))


def qrat_is_zero(a):
    return _coerce(a).is_zero()


def qrat_conj(a):
    return _coerce(a).conjugate()


def qrat_pow(a, k):
    return _coerce(a) ** k


def _optional_fraction(value):
    if value is None or isinstance(value, Fraction):
        return value
    try:
        return Fraction(value)
    except (TypeError, ValueError):
        raise InvalidQ("Not a rational deformation parameter: {!r}".format(value))


def _validate_q(instance, attribute, value):
    if value is not None and not 0 <= value < 1:
        raise InvalidQ("q must lie in [0, 1), got {}".format(value))


@attr.s(slots=True, frozen=True)
class QMode(object):
    """The deformation parameter q.

    Parameters
    ----------
    value : Fraction or None
        A fixed value in [0, 1), or None for symbolic q.
    """

    value = attr.ib(default=None, converter=_optional_fraction,
                    validator=_validate_q)

    @classmethod
    def symbolic(cls):
        return cls(None)

    @classmethod
    def fixed(cls, value):
        return cls(value)

    @classmethod
    def parse(cls, text):
        """Read "q", "symbolic", or a rational such as "1/3"."""
        if text is None or str(text).strip() in ('q', 'symbolic', ''):
            return cls.symbolic()
        return cls(str(text).strip())

    @property
    def is_symbolic(self):
        return self.value is None

    @property
    def is_zero(self):
        return self.value is not None and self.value == 0

    @property
    def q(self):
        """The parameter as a QRat."""
        return self.power(1)

    def power(self, k):
        """q**k as a QRat; negative k is undefined at q = 0."""
        return _qpower(self, k)

    def specialize(self, value):
        """Evaluate a QRat at the fixed parameter; identity when symbolic."""
        value = _coerce(value)
        if self.is_symbolic or value.is_constant():
            return value
        return _coerce(value.evaluate(self.value))

    def __str__(self):
        return "q" if self.is_symbolic else str(self.value)


@lru_cache(maxsize=1024)
def _qpower(mode, k):
    if mode.is_symbolic:
        return QRat.q(k)
    if k < 0 and mode.value == 0:
        raise DivisionByZero("q**{} is undefined at q = 0".format(k))
    return _coerce(mode.value ** k)
