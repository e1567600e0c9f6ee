"""The free *-algebra on the generators z_0, ..., z_n and their stars

Elements are :class:`NCPoly` values: finite linear combinations of words
with coefficients in Q(q). No relations are applied here; see
:mod:`qsphere.rewrite` for normal forms.
"""

from collections import namedtuple
import logging

from qsphere.coeffq import ONE, ZERO, as_qrat, is_scalar, QRat
from qsphere.errors import ArityMismatch


log = logging.getLogger(__name__)


Letter = namedtuple('Letter', ['index', 'starred'])
Letter.__doc__ = """A generator z_index, or its star when starred is True."""


def letter_text(letter):
    return "z{}{}".format(letter.index, "'" if letter.starred else "")


def word_text(word):
    """Space separated letters, with runs collapsed to powers."""
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        text = letter_text(word[i])
        if j - i > 1:
            text = "{}^{}".format(text, j - i)
        parts.append(text)
        i = j
    return ' '.join(parts)


def word_key(word):
    """Total order on words: length, then letters."""
    return (len(word), word)


def star_word(word):
    """Reverse a word and toggle every star."""
    return tuple(Letter(a.index, not a.starred) for a in reversed(word))


class NCPoly(object):
    """A polynomial in noncommuting variables z_i, z_i*, i = 0..n.

    Parameters
    ----------
    n : int
        The arity: generators are z_0 through z_n.
    terms : dict, optional
        Mapping of words (tuples of Letter) to coefficients.
    """

    __slots__ = ('n', '_terms')

    def __init__(self, n, terms=None):
        self.n = n
        self._terms = {}
        for word, coeff in (terms or {}).items():
            word = tuple(Letter(*a) for a in word)
            for a in word:
                if not 0 <= a.index <= n:
                    raise ArityMismatch(
                        "Generator {} is not in an algebra of arity {}".format(
                            letter_text(a), n))
            total = self._terms.get(word, ZERO) + as_qrat(coeff)
            if total:
                self._terms[word] = total
            else:
                self._terms.pop(word, None)

    @classmethod
    def _from_dict(cls, n, terms):
        poly = object.__new__(cls)
        poly.n = n
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls, n):
        return cls._from_dict(n, {})

    @classmethod
    def scalar(cls, n, coeff=ONE):
        coeff = as_qrat(coeff)
        return cls._from_dict(n, {(): coeff} if coeff else {})

    @classmethod
    def one(cls, n):
        return cls.scalar(n, ONE)

    @classmethod
    def generator(cls, n, index, starred=False):
        return cls(n, {(Letter(index, starred),): ONE})

    @classmethod
    def monomial(cls, n, word, coeff=ONE):
        return cls(n, {tuple(word): coeff})

    def terms(self):
        """(word, coefficient) pairs in the fixed word order."""
        return sorted(self._terms.items(), key=lambda item: word_key(item[0]))

    def items(self):
        return self._terms.items()

    def words(self):
        return sorted(self._terms, key=word_key)

    def coeff(self, word):
        return self._terms.get(tuple(word), ZERO)

    def is_zero(self):
        return not self._terms

    def is_scalar(self):
        return all(not word for word in self._terms)

    def degree(self):
        """Length of the longest word, -1 for zero."""
        return max((len(w) for w in self._terms), default=-1)

    def __len__(self):
        return len(self._terms)

    def _check(self, other):
        if self.n != other.n:
            raise ArityMismatch(
                "Arities differ: {} and {}".format(self.n, other.n))

    def _lift(self, other):
        if isinstance(other, NCPoly):
            self._check(other)
            return other
        if is_scalar(other) or isinstance(other, QRat):
            return NCPoly.scalar(self.n, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for word, coeff in other._terms.items():
            total = terms.get(word, ZERO) + coeff
            if total:
                terms[word] = total
            else:
                del terms[word]
        return NCPoly._from_dict(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._from_dict(
            self.n, {w: -c for w, c in self._terms.items()})

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
        coeff = as_qrat(coeff)
        if not coeff:
            return NCPoly.zero(self.n)
        return NCPoly._from_dict(
            self.n, {w: coeff * c for w, c in self._terms.items()})

    def map_coeffs(self, func):
        """Apply func to every coefficient, dropping resulting zeros."""
        terms = {}
        for word, coeff in self._terms.items():
            value = func(coeff)
            if value:
                terms[word] = value
        return NCPoly._from_dict(self.n, terms)

    def __mul__(self, other):
        if is_scalar(other) or isinstance(other, QRat):
            return self.scale(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        self._check(other)
        terms = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                word = w1 + w2
                total = terms.get(word, ZERO) + c1 * c2
                if total:
                    terms[word] = total
                else:
                    terms.pop(word, None)
        return NCPoly._from_dict(self.n, terms)

    def __rmul__(self, other):
        if is_scalar(other) or isinstance(other, QRat):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError("Words have no negative powers")
        result = NCPoly.one(self.n)
        for _ in range(k):
            result = result * self
        return result

    def star(self):
        """The involution: reverse words, toggle stars, conjugate
        coefficients."""
        return NCPoly._from_dict(
            self.n,
            {star_word(w): c.conjugate() for w, c in self._terms.items()})

    def __eq__(self, other):
        other = self._lift(other) if not isinstance(other, NCPoly) else other
        if other is None:
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self):
        return "NCPoly(n={}, {!r})".format(self.n, str(self))

    def __str__(self):
        from qsphere.parser import format_poly
        return format_poly(self)

    def to_json(self):
        """JSON-ready mapping of the polynomial."""
        return {
            'n': self.n,
            'terms': [
                {'coeff': str(c), 'word': [[a.index, a.starred] for a in w]}
                for w, c in self.terms()]}

    @classmethod
    def from_json(cls, obj):
        from qsphere.parser import parse_qrat
        terms = {}
        for term in obj['terms']:
            word = tuple(Letter(int(i), bool(s)) for i, s in term['word'])
            terms[word] = terms.get(word, ZERO) + parse_qrat(term['coeff'])
        return cls(int(obj['n']), terms)


def poly_mul(a, b):
    """Product in the free algebra."""
    return a * b


def involution(a):
    return a.star()


def q_commutator(a, b, t=ONE):
    """a*b - t*b*a, unreduced."""
    return a * b - (b * a).scale(t)


def commutator(a, b):
    return q_commutator(a, b, ONE)


def substitute(a, images, one):
    """Evaluate a free-algebra polynomial on generator images.

    Parameters
    ----------
    a : NCPoly
    images : sequence
        images[i] is the image of z_i. Images of stars are the stars of
        images.
    one : object
        The unit of the target algebra.

    Returns
    -------
    An element of the target algebra: any type supporting ``+``, ``*``,
    multiplication by QRat scalars, and ``star()``.
    """
    if len(images) != a.n + 1:
        raise ArityMismatch(
            "Expected {} generator images, got {}".format(a.n + 1, len(images)))
    stars = [None] * len(images)
    products = {(): one}
    result = one * ZERO
    for word, coeff in a.terms():
        for k in range(1, len(word) + 1):
            prefix = word[:k]
            if prefix in products:
                continue
            letter = word[k - 1]
            if letter.starred:
                if stars[letter.index] is None:
                    stars[letter.index] = images[letter.index].star()
                image = stars[letter.index]
            else:
                image = images[letter.index]
            products[prefix] = products[word[:k - 1]] * image
        result = result + products[word] * coeff
    return result
