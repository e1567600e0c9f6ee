"""Commutator ideals, the circle quotient, and homomorphism checks

The commutator ideal I_n of A(S^{2n+1}_q) is generated by z_1, ..., z_n
and the quotient by it is the circle algebra A(S^1) of Laurent
polynomials in a unitary u. Membership certificates are built only by the
explicit recipe for the generators; membership is not decided in general.
"""

import json
import logging

import attr

from qsphere.coeffq import (
    ONE, QMode, QRat, ZERO, as_qrat, as_scalar, is_scalar, reciprocal)
from qsphere.errors import (
    ArityMismatch, NotCertifiable, NotUnit, QModeMismatch, QSphereError)
from qsphere.ncpoly import (
    Letter, NCPoly, commutator, star_word, substitute, word_text)
from qsphere.rewrite import get_rules
from qsphere.suq2 import BasisVector, word_to_basis


log = logging.getLogger(__name__)

TARGETS = ('sphere', 'suq2', 'circle')


class LaurentPoly(object):
    """An element sum_k c_k u^k of the circle algebra, u* = u^-1."""

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        self._terms = {}
        for k, coeff in (terms or {}).items():
            total = self._terms.get(int(k), ZERO) + as_qrat(coeff)
            if total:
                self._terms[int(k)] = total
            else:
                self._terms.pop(int(k), None)

    @classmethod
    def _from_dict(cls, terms):
        laurent = object.__new__(cls)
        laurent._terms = terms
        return laurent

    @classmethod
    def monomial(cls, k, coeff=ONE):
        return cls({k: coeff})

    @classmethod
    def unitary(cls):
        return cls.monomial(1)

    @classmethod
    def scalar(cls, coeff):
        return cls.monomial(0, coeff)

    def terms(self):
        return sorted(self._terms.items())

    def items(self):
        return self._terms.items()

    def coeff(self, k):
        return self._terms.get(k, ZERO)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if is_scalar(other) or isinstance(other, QRat):
            return LaurentPoly.scalar(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for k, c in other._terms.items():
            total = terms.get(k, ZERO) + c
            if total:
                terms[k] = total
            else:
                del terms[k]
        return LaurentPoly._from_dict(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._from_dict({k: -c for k, c in self._terms.items()})

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
            return LaurentPoly()
        return LaurentPoly._from_dict(
            {k: coeff * c for k, c in self._terms.items()})

    def __mul__(self, other):
        if is_scalar(other) or isinstance(other, QRat):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                total = terms.get(k1 + k2, ZERO) + c1 * c2
                if total:
                    terms[k1 + k2] = total
                else:
                    terms.pop(k1 + k2, None)
        return LaurentPoly._from_dict(terms)

    def __rmul__(self, other):
        if is_scalar(other) or isinstance(other, QRat):
            return self.scale(other)
        return NotImplemented

    def inverse(self):
        """Inverse of a monomial c u^k."""
        if len(self._terms) != 1:
            raise ValueError("Only monomials are invertible")
        (k, c), = self._terms.items()
        return LaurentPoly.monomial(-k, c.inverse())

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** -k
        result = LaurentPoly.scalar(ONE)
        for _ in range(k):
            result = result * self
        return result

    def star(self):
        return LaurentPoly._from_dict(
            {-k: c.conjugate() for k, c in self._terms.items()})

    def evaluate(self, value):
        """Substitute u = value, a nonzero exact scalar."""
        value = as_scalar(value)
        inverse = reciprocal(value)
        total = ZERO
        for k, c in self._terms.items():
            total = total + c * (value ** k if k >= 0 else inverse ** -k)
        return total

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            other = self._lift(other)
            if other is None:
                return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return "LaurentPoly({!r})".format(str(self))

    def __str__(self):
        from qsphere.parser import format_laurent
        return format_laurent(self)

    def to_json(self):
        return {'terms': [{'k': k, 'coeff': str(c)} for k, c in self.terms()]}

    @classmethod
    def from_json(cls, obj):
        from qsphere.parser import parse_qrat
        return cls({int(t['k']): parse_qrat(t['coeff'], gaussian_mode=True)
                    for t in obj['terms']})


def relations(n, qmode=None):
    """The defining relations of A(S^{2n+1}_q), as (label, lhs - rhs).

    Labels are commute(i,j) for z_j z_i - q z_i z_j, cross(i,j) for
    z_i* z_j - q z_j z_i*, normal(i) for the z_i* z_i relation, and sphere
    for sum z_j z_j* - 1.
    """
    qmode = qmode or QMode.symbolic()
    q = qmode.q
    z = [NCPoly.generator(n, i) for i in range(n + 1)]
    zs = [NCPoly.generator(n, i, True) for i in range(n + 1)]
    found = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            found.append(("commute({},{})".format(i, j), z[j] * z[i] - z[i] * z[j] * q))
    for i in range(n + 1):
        for j in range(n + 1):
            if i != j:
                found.append(
                    ("cross({},{})".format(i, j), zs[i] * z[j] - z[j] * zs[i] * q))
    for i in range(n + 1):
        tail = NCPoly.zero(n)
        for j in range(i + 1, n + 1):
            tail = tail + z[j] * zs[j]
        found.append(("normal({})".format(i),
                      zs[i] * z[i] - z[i] * zs[i] - tail * (ONE - qmode.power(2))))
    total = NCPoly.zero(n)
    for i in range(n + 1):
        total = total + z[i] * zs[i]
    found.append(("sphere", total - NCPoly.one(n)))
    return found


@attr.s(slots=True, frozen=True)
class HomSpec(object):
    """A candidate *-homomorphism given by the images of z_0, ..., z_n.

    Attributes
    ----------
    n : int
        Source arity.
    qmode : QMode
        Source parameter.
    target : str
        'sphere', 'suq2', or 'circle'.
    target_qmode : QMode
    images : tuple
        Target elements: NCPoly, BasisVector, or LaurentPoly.
    target_n : int
        Target arity when the target is a sphere algebra.
    """

    n = attr.ib()
    qmode = attr.ib()
    target = attr.ib(validator=attr.validators.in_(TARGETS))
    target_qmode = attr.ib()
    images = attr.ib(converter=tuple)
    target_n = attr.ib(default=None)

    def __attrs_post_init__(self):
        if len(self.images) != self.n + 1:
            raise ArityMismatch(
                "Expected images of z0..z{}, got {}".format(
                    self.n, len(self.images)))
        if self.qmode.is_symbolic and not self.target_qmode.is_symbolic:
            raise QModeMismatch(
                "A symbolic source needs a symbolic target parameter")

    def one(self):
        if self.target == 'sphere':
            return NCPoly.one(self.target_n)
        elif self.target == 'suq2':
            return BasisVector.one(self.target_qmode)
        return LaurentPoly.scalar(ONE)

    def reduce(self, value):
        """Canonical form of a target element."""
        if self.target == 'sphere':
            return get_rules(self.target_n, self.target_qmode).normalize(value)
        return value

    def apply(self, poly):
        """phi(poly), in canonical form."""
        if poly.n != self.n:
            raise ArityMismatch(
                "Source arity is {}, got {}".format(self.n, poly.n))
        return self.reduce(substitute(poly, self.images, self.one()))

    @classmethod
    def from_json(cls, obj):
        """Read the JSON form; images may be JSON objects or text."""
        from qsphere.parser import (
            ExprContext, parse_basis, parse_laurent, parse_poly)
        source = obj['source']
        n = int(source['n'])
        qmode = QMode.parse(source.get('q'))
        target = obj.get('target', 'sphere')
        target_qmode = QMode.parse(obj.get('target_q', source.get('q')))
        target_n = obj.get('target_n')
        if target == 'sphere' and target_n is None:
            target_n = n
        gaussian = bool(obj.get('gaussian', False))
        images = []
        for i in range(n + 1):
            key = 'z{}'.format(i)
            if key not in obj['images']:
                raise ArityMismatch("No image given for {}".format(key))
            value = obj['images'][key]
            if target == 'sphere':
                if isinstance(value, dict):
                    image = NCPoly.from_json(value)
                    image = target_qmode_poly(image, target_qmode)
                else:
                    image = parse_poly(value, ExprContext(
                        arity=int(target_n), gaussian_mode=gaussian,
                        qmode=target_qmode))
            elif target == 'suq2':
                if isinstance(value, dict) and 'n' in value:
                    image = word_to_basis(NCPoly.from_json(value), target_qmode)
                elif isinstance(value, dict):
                    image = BasisVector.from_json(
                        dict(value, q=str(target_qmode)))
                else:
                    image = parse_basis(value, target_qmode, gaussian)
            else:
                if isinstance(value, dict):
                    image = LaurentPoly.from_json(value)
                else:
                    image = parse_laurent(value, target_qmode, gaussian)
            images.append(image)
        return cls(n, qmode, target, target_qmode, images,
                   None if target_n is None else int(target_n))

    @classmethod
    def load(cls, path):
        with open(path) as f:
            return cls.from_json(json.load(f))

    def to_json(self):
        obj = {
            'source': {'n': self.n, 'q': str(self.qmode)},
            'target': self.target,
            'target_q': str(self.target_qmode),
            'images': {'z{}'.format(i): str(image)
                       for i, image in enumerate(self.images)}}
        if self.target == 'sphere':
            obj['target_n'] = self.target_n
        return obj


def target_qmode_poly(poly, qmode):
    """Specialize a polynomial's coefficients to a fixed parameter."""
    if qmode.is_symbolic:
        return poly
    return poly.map_coeffs(qmode.specialize)


@attr.s(slots=True, frozen=True)
class HomCheck(object):
    """Outcome of :func:`check_homomorphism`.

    violations is a list of (relation label, residue) in relation order;
    the candidate is a homomorphism iff it is empty.
    """

    violations = attr.ib(default=attr.Factory(list))

    @property
    def ok(self):
        return not self.violations

    @property
    def first(self):
        return self.violations[0] if self.violations else None

    def to_json(self):
        return {
            'ok': self.ok,
            'violations': [{'relation': label, 'residue': str(residue)}
                           for label, residue in self.violations]}


def check_homomorphism(hom):
    """Substitute the images into every defining relation of the source.

    Returns
    -------
    HomCheck
    """
    violations = []
    for label, relation in relations(hom.n, hom.qmode):
        residue = hom.apply(relation)
        if not residue.is_zero():
            log.debug("Relation %s violated with residue %s", label, residue)
            violations.append((label, residue))
    return HomCheck(violations)


@attr.s(slots=True, frozen=True)
class CertTerm(object):
    """coeff * left [x, y] right, with left and right words."""

    coeff = attr.ib()
    left = attr.ib()
    x = attr.ib()
    y = attr.ib()
    right = attr.ib()

    def evaluate(self):
        n = self.x.n
        left = NCPoly.monomial(n, self.left)
        right = NCPoly.monomial(n, self.right)
        return left * commutator(self.x, self.y) * right * self.coeff

    def star(self):
        return CertTerm(self.coeff.conjugate(), star_word(self.right),
                        self.y.star(), self.x.star(), star_word(self.left))

    def wrap(self, left=(), right=(), coeff=ONE):
        return CertTerm(self.coeff * coeff, tuple(left) + self.left,
                        self.x, self.y, self.right + tuple(right))

    def __str__(self):
        parts = []
        if self.left:
            parts.append(word_text(self.left))
        parts.append("[{}, {}]".format(self.x, self.y))
        if self.right:
            parts.append(word_text(self.right))
        return "({}) {}".format(self.coeff, ' '.join(parts))


@attr.s(slots=True, frozen=True)
class IdealCertificate(object):
    """Evidence that target lies in the commutator ideal."""

    target = attr.ib()
    terms = attr.ib(converter=tuple)
    qmode = attr.ib(default=attr.Factory(QMode.symbolic))

    def evaluate(self):
        total = NCPoly.zero(self.target.n)
        for term in self.terms:
            total = total + term.evaluate()
        return total

    def verify(self, rules=None):
        """Whether the expression normalizes to the target.

        A vanishing residue proves the identity for any rule set. Without
        the gap rule (q = 0) normal forms are not canonical, so a residue
        that survives decides nothing and None is returned.

        Returns
        -------
        bool or None
        """
        rules = rules or get_rules(self.target.n, self.qmode)
        residue = rules.normalize(self.evaluate() - self.target)
        if residue.is_zero():
            return True
        if not rules.has_gap_rule:
            log.info("Residue %s is undecided without the gap rule", residue)
            return None
        return False

    def star(self):
        return IdealCertificate(
            self.target.star(), [t.star() for t in self.terms], self.qmode)

    def to_json(self):
        return {
            'target': str(self.target),
            'terms': [{'coeff': str(t.coeff), 'left': word_text(t.left),
                       'x': str(t.x), 'y': str(t.y),
                       'right': word_text(t.right)} for t in self.terms]}

    def __str__(self):
        return ' + '.join(str(t) for t in self.terms) or "0"


class _Recipe(object):
    """Certificates for the generators of I_n.

    z_i is written as sum_j z_j z_j* z_i with every factor certified.
    """

    def __init__(self, n, qmode):
        self.n = n
        self.qmode = qmode
        q = qmode.q
        self.inv1 = (ONE - q).inverse()
        self.inv2 = (ONE - qmode.power(2)).inverse()

    def z(self, i, starred=False):
        return NCPoly.generator(self.n, i, starred)

    def mixed(self, j, i):
        """z_j z_i* for i != j."""
        return [CertTerm(self.inv1, (), self.z(j), self.z(i, True), ())]

    def mixed_reversed(self, i, j):
        """z_i* z_j for i != j."""
        return [t.wrap(coeff=self.qmode.q) for t in self.mixed(j, i)]

    def tail(self, i):
        """x_i = sum_{j >= i} z_j z_j*, i >= 1."""
        return [CertTerm(self.inv2, (), self.z(i - 1, True), self.z(i - 1), ())]

    def diagonal(self, i):
        """z_i z_i* for i >= 1."""
        terms = list(self.tail(i))
        if i < self.n:
            terms += [t.wrap(coeff=-ONE) for t in self.tail(i + 1)]
        return terms

    def generator(self, i, starred=False):
        """z_i = sum_j z_j z_j* z_i for i >= 1; z_i* by the involution."""
        if starred:
            return [t.star() for t in self.generator(i)]
        terms = []
        for j in range(self.n + 1):
            if j == i:
                terms += [t.wrap(right=(Letter(i, False),))
                          for t in self.diagonal(i)]
            else:
                terms += [t.wrap(left=(Letter(j, False),))
                          for t in self.mixed_reversed(j, i)]
        return terms

    def named(self):
        """(name, element, certificate terms) for every recipe target."""
        n = self.n
        found = []
        for i in range(1, n + 1):
            found.append(("z{}".format(i), self.z(i), self.generator(i)))
            found.append(("z{}'".format(i), self.z(i, True),
                          self.generator(i, True)))
            tail = NCPoly.zero(n)
            for j in range(i, n + 1):
                tail = tail + self.z(j) * self.z(j, True)
            found.append(("x{}".format(i), tail, self.tail(i)))
            found.append(("z{} z{}'".format(i, i),
                          self.z(i) * self.z(i, True), self.diagonal(i)))
        for i in range(n + 1):
            for j in range(n + 1):
                if i != j:
                    found.append(("z{} z{}'".format(j, i),
                                  self.z(j) * self.z(i, True),
                                  self.mixed(j, i)))
        return found


def _scalar_multiple(value, base):
    """c with value = c * base, or None."""
    if base.is_zero() or len(value) != len(base):
        return None
    word, coeff = base.terms()[0]
    ratio = value.coeff(word) / coeff
    if not ratio or base.scale(ratio) != value:
        return None
    return ratio


def commutator_ideal_certificate(n, target, qmode=None):
    """Write target as a combination of terms A [x, y] B.

    Targets that are scalar multiples of z_i, z_i*, z_j z_i*, x_i, or
    z_i z_i* get the recipe certificate directly. Otherwise every normal
    word of the target is split at its first letter of index >= 1, whose
    certificate is then wrapped by the rest of the word.

    Raises
    ------
    NotCertifiable
        If the target has a nonzero part in pure z_0 words.
    """
    qmode = qmode or QMode.symbolic()
    if target.n != n:
        raise ArityMismatch("Target arity {} differs from {}".format(target.n, n))
    rules = get_rules(n, qmode)
    recipe = _Recipe(n, qmode)
    normal = rules.normalize(target)
    if normal.is_zero():
        return IdealCertificate(target, [], qmode)
    for name, element, terms in recipe.named():
        ratio = _scalar_multiple(normal, rules.normalize(element))
        if ratio is not None:
            log.debug("Target is %s times the recipe element %s", ratio, name)
            return IdealCertificate(
                target, [t.wrap(coeff=ratio) for t in terms], qmode)
    terms = []
    for word, coeff in normal.terms():
        for p, letter in enumerate(word):
            if letter.index >= 1:
                break
        else:
            raise NotCertifiable(
                "{} has the pure z0 term {} outside the commutator "
                "ideal".format(target, word_text(word)))
        inner = recipe.generator(letter.index, letter.starred)
        terms += [t.wrap(word[:p], word[p + 1:], coeff) for t in inner]
    return IdealCertificate(target, terms, qmode)


def project_to_circle(a, rules=None):
    """The image of a sphere polynomial in A(S^1).

    Normal words with a letter of index >= 1 lie in the commutator ideal
    and are deleted; z_0^a maps to u^a and z_0*^b to u^-b.
    """
    rules = rules or get_rules(a.n, QMode.symbolic())
    terms = {}
    for word, coeff in rules.normalize(a).items():
        if any(x.index for x in word):
            continue
        k = sum(-1 if x.starred else 1 for x in word)
        terms[k] = terms.get(k, ZERO) + coeff
    return LaurentPoly({k: c for k, c in terms.items() if c})


def project_basis_to_circle(x):
    """The image of an A(SU_q(2)) element modulo V_1."""
    return LaurentPoly._from_dict(dict(x.circle_part()))


@attr.s(slots=True, frozen=True)
class Unitary(object):
    """coeff * u^exponent with |coeff| = 1."""

    coeff = attr.ib()
    exponent = attr.ib()
    unitary = True

    def to_json(self):
        return {'unitary': True, 'lambda': str(self.coeff),
                'exponent': self.exponent}


@attr.s(slots=True, frozen=True)
class NotUnitary(object):
    """A nonzero coefficient of a a* - 1, at the given exponent."""

    exponent = attr.ib()
    coeff = attr.ib()
    unitary = False

    def to_json(self):
        return {'unitary': False, 'witness': {
            'exponent': self.exponent, 'coeff': str(self.coeff)}}


def is_unitary_laurent(a):
    """Decide a a* = 1 exactly.

    Returns
    -------
    Unitary or NotUnitary
    """
    defect = a * a.star() - ONE
    if defect.is_zero():
        (k, c), = a.terms()
        return Unitary(c, k)
    # The top term of a a* - 1 can't cancel.
    k, c = defect.terms()[-1]
    return NotUnitary(k, c)


def is_unit(value):
    """Whether an exact scalar or constant QRat has modulus 1."""
    if isinstance(value, QRat):
        if not value.is_constant():
            return False
        value = value.constant()
    return value * value.conjugate() == 1


def character_eval(a, lam, rules=None):
    """chi_lambda(a): the circle image of a evaluated at u = lambda.

    Raises
    ------
    NotUnit
        If |lambda| != 1.
    """
    lam = as_scalar(lam)
    if not is_unit(lam):
        raise NotUnit("|{}| != 1".format(lam))
    return project_to_circle(a, rules).evaluate(lam)


def factor_through_beta(term, qmode=None):
    """Factor e(j,k,l), k + l >= 1, through beta or beta*.

    Returns
    -------
    tuple
        (coeff, (j, k', l'), generator) with e(j,k,l) equal to
        coeff * e(j,k',l') * generator, generator 'beta' or "beta'".
    """
    qmode = qmode or QMode.symbolic()
    j, k, l = term
    if k + l < 1:
        raise QSphereError("e({},{},{}) is not in V_1".format(j, k, l))
    coeff = ONE if j >= 0 else qmode.power(j)
    if k >= 1:
        return coeff, (j, k - 1, l), 'beta'
    return coeff, (j, k, l - 1), "beta'"


def factor_element(generator, qmode):
    """The basis vector of a factor_through_beta generator name."""
    beta = BasisVector.generator(1, qmode)
    return beta if generator == 'beta' else beta.star()


@attr.s(slots=True, frozen=True)
class CircleMap(object):
    """The map on A(S^1) induced by a homomorphism: u -> image."""

    image = attr.ib()

    def __call__(self, laurent):
        total = LaurentPoly()
        for k, c in laurent.items():
            base = self.image if k >= 0 else self.image.star()
            total = total + (base ** abs(k)) * c
        return total


def induced_circle_map(hom):
    """[phi] on A(S^1), defined by u -> [phi(z_0)]."""
    image = hom.images[0]
    if hom.target == 'sphere':
        image = project_to_circle(
            image, get_rules(hom.target_n, hom.target_qmode))
    elif hom.target == 'suq2':
        image = project_basis_to_circle(image)
    return CircleMap(image)


def quotient_map(n, target='suq2', qmode=None):
    """The surjection z_0 -> alpha, z_1 -> beta, z_i -> 0 for i >= 2."""
    qmode = qmode or QMode.symbolic()
    if target == 'suq2':
        images = [BasisVector.generator(0, qmode), BasisVector.generator(1, qmode)]
        images += [BasisVector.zero(qmode)] * (n - 1)
        return HomSpec(n, qmode, 'suq2', qmode, images)
    images = [NCPoly.generator(1, 0), NCPoly.generator(1, 1)]
    images += [NCPoly.zero(1)] * (n - 1)
    return HomSpec(n, qmode, 'sphere', qmode, images, 1)