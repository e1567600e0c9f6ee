"""A(SU_q(2)) in the basis e(j,k,l)

With alpha = z0 and beta = z1 of the n = 1 sphere algebra, the elements::

    e(j,k,l) = alpha^j beta^k beta*^l        j >= 0
    e(j,k,l) = beta^k beta*^l alpha*^-j      j < 0

form a basis for q != 0. Products are computed term by term from the
commutation rules, with alpha^j alpha*^k and alpha*^d alpha^e expanded as
products of factors (1 - c * beta beta*).

The filtration V_m is spanned by the e(j,k,l) with k + l >= m.
"""

from collections import namedtuple
from functools import lru_cache
import logging
import math

from qsphere.coeffq import ONE, QMode, QRat, ZERO, as_qrat, is_scalar
from qsphere.errors import QModeMismatch, QZeroUnsupported
from qsphere.ncpoly import Letter, NCPoly


log = logging.getLogger(__name__)


BasisTerm = namedtuple('BasisTerm', ['j', 'k', 'l'])
BasisTerm.__doc__ = """Index of the basis element e(j,k,l)."""


def term_key(term):
    """Print order: filtration degree first."""
    return (term.k + term.l, term.j, term.k, term.l)


def _check_qmode(qmode):
    if qmode is None:
        return QMode.symbolic()
    if not isinstance(qmode, QMode):
        qmode = QMode(qmode)
    if qmode.is_zero:
        raise QZeroUnsupported(
            "The basis e(j,k,l) is not linearly independent at q = 0")
    return qmode


class BasisVector(object):
    """A finite linear combination of basis elements e(j,k,l).

    Parameters
    ----------
    terms : dict, optional
        Mapping of (j, k, l) to coefficients.
    qmode : QMode, optional
        Symbolic by default. q = 0 is rejected.
    """

    __slots__ = ('qmode', '_terms')

    def __init__(self, terms=None, qmode=None):
        self.qmode = _check_qmode(qmode)
        self._terms = {}
        for term, coeff in (terms or {}).items():
            term = BasisTerm(*term)
            if term.k < 0 or term.l < 0:
                raise ValueError("Invalid basis term {}".format(term))
            coeff = self.qmode.specialize(as_qrat(coeff))
            total = self._terms.get(term, ZERO) + coeff
            if total:
                self._terms[term] = total
            else:
                self._terms.pop(term, None)

    @classmethod
    def _from_dict(cls, terms, qmode):
        vector = object.__new__(cls)
        vector.qmode = qmode
        vector._terms = terms
        return vector

    @classmethod
    def zero(cls, qmode=None):
        return cls({}, qmode)

    @classmethod
    def term(cls, j, k, l, qmode=None, coeff=ONE):
        return cls({BasisTerm(j, k, l): coeff}, qmode)

    @classmethod
    def scalar(cls, coeff, qmode=None):
        return cls.term(0, 0, 0, qmode, coeff)

    @classmethod
    def one(cls, qmode=None):
        return cls.term(0, 0, 0, qmode)

    @classmethod
    def generator(cls, index, qmode=None):
        """alpha for index 0, beta for index 1."""
        if index == 0:
            return cls.term(1, 0, 0, qmode)
        elif index == 1:
            return cls.term(0, 1, 0, qmode)
        raise ValueError("A(SU_q(2)) has generators z0 and z1 only")

    def terms(self):
        return sorted(self._terms.items(), key=lambda item: term_key(item[0]))

    def items(self):
        return self._terms.items()

    def support(self):
        return sorted(self._terms, key=term_key)

    def coeff(self, j, k, l):
        return self._terms.get(BasisTerm(j, k, l), ZERO)

    def is_zero(self):
        return not self._terms

    def degree(self):
        """Filtration degree: min k + l over the support, inf for zero."""
        if not self._terms:
            return math.inf
        return min(t.k + t.l for t in self._terms)

    def _check(self, other):
        if self.qmode != other.qmode:
            raise QModeMismatch(
                "Basis vectors at q = {} and q = {} can't be combined".format(
                    self.qmode, other.qmode))

    def _lift(self, other):
        if isinstance(other, BasisVector):
            self._check(other)
            return other
        if is_scalar(other) or isinstance(other, QRat):
            return BasisVector.scalar(other, self.qmode)
        return None

    def _select(self, keep):
        return BasisVector._from_dict(
            {t: c for t, c in self._terms.items() if keep(t)}, self.qmode)

    def truncate(self, m):
        """Drop the part in V_m."""
        return self._select(lambda t: t.k + t.l < m)

    def degree_part(self, m):
        """The terms with k + l = m."""
        return self._select(lambda t: t.k + t.l == m)

    def circle_part(self):
        """The coefficients of e(j,0,0), by j."""
        return {t.j: c for t, c in self._terms.items() if t.k == t.l == 0}

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for term, coeff in other._terms.items():
            total = terms.get(term, ZERO) + coeff
            if total:
                terms[term] = total
            else:
                del terms[term]
        return BasisVector._from_dict(terms, self.qmode)

    __radd__ = __add__

    def __neg__(self):
        return BasisVector._from_dict(
            {t: -c for t, c in self._terms.items()}, self.qmode)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, coeff):
        coeff = self.qmode.specialize(as_qrat(coeff))
        if not coeff:
            return BasisVector.zero(self.qmode)
        return BasisVector._from_dict(
            {t: coeff * c for t, c in self._terms.items()}, self.qmode)

    def __mul__(self, other):
        if is_scalar(other) or isinstance(other, QRat):
            return self.scale(other)
        if not isinstance(other, BasisVector):
            return NotImplemented
        return basis_product(self, other)

    def __rmul__(self, other):
        if is_scalar(other) or isinstance(other, QRat):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError("Negative power of a basis vector")
        result = BasisVector.one(self.qmode)
        for _ in range(k):
            result = result * self
        return result

    def star(self):
        return basis_star(self)

    def __eq__(self, other):
        if not isinstance(other, BasisVector):
            other = self._lift(other)
            if other is None:
                return NotImplemented
        return self.qmode == other.qmode and self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.qmode, frozenset(self._terms.items())))

    def __repr__(self):
        return "BasisVector({!r}, q={})".format(str(self), self.qmode)

    def __str__(self):
        from qsphere.parser import format_basis
        return format_basis(self)

    def to_json(self):
        return {
            'q': str(self.qmode),
            'terms': [{'j': t.j, 'k': t.k, 'l': t.l, 'coeff': str(c)}
                      for t, c in self.terms()]}

    @classmethod
    def from_json(cls, obj):
        from qsphere.parser import parse_qrat
        qmode = QMode.parse(obj.get('q'))
        terms = {}
        for term in obj['terms']:
            key = BasisTerm(int(term['j']), int(term['k']), int(term['l']))
            terms[key] = terms.get(key, ZERO) + parse_qrat(
                term['coeff'], gaussian_mode=True, qmode=qmode)
        return cls(terms, qmode)


def _expand(factors):
    """Coefficients c_r of prod(1 - t * P) over t in factors, by r."""
    coeffs = [ONE]
    for t in factors:
        nxt = coeffs + [ZERO]
        for r, c in enumerate(coeffs):
            nxt[r + 1] = nxt[r + 1] - t * c
        coeffs = nxt
    return coeffs


def _alpha_alpha_star(j, k, qmode):
    """alpha^j alpha*^k as (sign of result index, |index|, c_r) pieces.

    Returns (D, coeffs) meaning alpha^D P^r for D >= 0 and alpha*^-D P^r
    for D < 0, where P = beta beta*.
    """
    if j >= k:
        return j - k, _expand([qmode.power(-2 * p) for p in range(k)])
    d = k - j
    return -d, _expand([qmode.power(-2 * p) for p in range(d, k)])


def _alpha_star_alpha(d, e, qmode):
    """alpha*^d alpha^e in the same encoding."""
    if d >= e:
        return -(d - e), _expand([qmode.power(2 * s) for s in range(1, e + 1)])
    return e - d, _expand(
        [qmode.power(2 * s) for s in range(e - d + 1, e + 1)])


def _place(index, coeffs, k, l, qmode):
    """sum_r c_r (alpha or alpha*)^|index| P^r beta^k beta*^l in the basis.

    alpha*^D commutes past beta^a beta*^b at the cost of q^(D (a + b)).
    """
    terms = {}
    for r, c in enumerate(coeffs):
        if not c:
            continue
        if index < 0:
            c = c * qmode.power(-index * (k + l + 2 * r))
        terms[BasisTerm(index, k + r, l + r)] = c
    return terms


def alpha_power_product(j, k, qmode=None):
    """alpha^j alpha*^k expanded in the basis.

    For j >= k this is alpha^(j-k) prod_{p=0}^{k-1} (1 - q^-2p beta beta*),
    and alpha*^(k-j) prod_{p=k-j}^{k-1} (1 - q^-2p beta beta*) otherwise.
    """
    qmode = _check_qmode(qmode)
    index, coeffs = _alpha_alpha_star(j, k, qmode)
    return BasisVector._from_dict(_place(index, coeffs, 0, 0, qmode), qmode)


def alpha_star_power_product(d, e, qmode=None):
    """alpha*^d alpha^e expanded in the basis."""
    qmode = _check_qmode(qmode)
    index, coeffs = _alpha_star_alpha(d, e, qmode)
    return BasisVector._from_dict(_place(index, coeffs, 0, 0, qmode), qmode)


@lru_cache(maxsize=65536)
def term_product(t1, t2, qmode):
    """e(t1) e(t2) as a tuple of (BasisTerm, coeff) pairs."""
    j, k, l = t1
    j2, k2, l2 = t2
    K, L = k + k2, l + l2
    if j >= 0 and j2 >= 0:
        return ((BasisTerm(j + j2, K, L), qmode.power((k + l) * j2)),)
    if j <= 0 and j2 <= 0:
        return ((BasisTerm(j + j2, K, L), qmode.power((k2 + l2) * -j)),)
    if j > 0:
        # alpha^j B alpha*^d2 = q^-(K+L)d2 alpha^j alpha*^d2 B
        index, coeffs = _alpha_alpha_star(j, -j2, qmode)
        pre = qmode.power(-(K + L) * -j2)
        terms = _place(index, coeffs, K, L, qmode)
        return tuple((t, pre * c) for t, c in terms.items())
    # B1 alpha*^d alpha^e B2
    index, coeffs = _alpha_star_alpha(-j, j2, qmode)
    if index < 0:
        terms = {}
        for r, c in enumerate(coeffs):
            if c:
                shift = qmode.power(-index * (2 * r + k2 + l2))
                terms[BasisTerm(index, K + r, L + r)] = c * shift
    else:
        pre = qmode.power(index * (k + l))
        terms = {BasisTerm(index, K + r, L + r): pre * c
                 for r, c in enumerate(coeffs) if c}
    return tuple(terms.items())


def basis_product(x, y):
    """Exact product of two basis vectors.

    Raises
    ------
    QModeMismatch
    """
    x._check(y)
    qmode = x.qmode
    terms = {}
    for t1, c1 in x.items():
        for t2, c2 in y.items():
            for t, c in term_product(t1, t2, qmode):
                total = terms.get(t, ZERO) + c1 * c2 * c
                if total:
                    terms[t] = total
                else:
                    terms.pop(t, None)
    return BasisVector._from_dict(terms, qmode)


def basis_star(x):
    """(e(j,k,l))* = e(-j,l,k), with conjugated coefficients."""
    return BasisVector._from_dict(
        {BasisTerm(-t.j, t.l, t.k): c.conjugate() for t, c in x.items()},
        x.qmode)


def filtration_degree(x):
    return x.degree()


def truncate(x, m):
    return x.truncate(m)


def degree_part(x, m):
    return x.degree_part(m)


def basis_word(term):
    """The canonical word of e(j,k,l) in z0 = alpha, z1 = beta."""
    j, k, l = term
    body = (Letter(1, False),) * k + (Letter(1, True),) * l
    if j >= 0:
        return (Letter(0, False),) * j + body
    return body + (Letter(0, True),) * -j


def basis_to_word(x):
    """The n = 1 polynomial of a basis vector."""
    return NCPoly(1, {basis_word(t): c for t, c in x.items()})


def word_to_basis(poly, qmode=None):
    """Expand an n = 1 polynomial in the basis.

    The polynomial is first brought to normal form; normal words
    alpha^a beta^b beta*^c alpha*^d have min(a, d) = 0 and are exactly the
    canonical words of basis elements.

    Raises
    ------
    QZeroUnsupported
    """
    from qsphere.rewrite import get_rules
    qmode = _check_qmode(qmode)
    normal = get_rules(1, qmode).normalize(poly)
    terms = {}
    for word, coeff in normal.items():
        a = sum(1 for x in word if x == Letter(0, False))
        d = sum(1 for x in word if x == Letter(0, True))
        b = sum(1 for x in word if x == Letter(1, False))
        c = sum(1 for x in word if x == Letter(1, True))
        terms[BasisTerm(a - d, b, c)] = coeff
    return BasisVector._from_dict(terms, qmode)
