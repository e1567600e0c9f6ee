"""Normal forms in the quantum sphere algebras

The defining relations of A(S^{2n+1}_q) are oriented into rewrite rules
on words in z_i and z_i*::

    R1  z_j z_i    -> q z_i z_j                           (i < j)
    R2  z_i* z_j   -> q z_j z_i*                          (i != j)
    R3  z_i* z_j*  -> q z_j* z_i*                         (i < j)
    R4  z_i* z_i   -> z_i z_i* + (1 - q^2) sum_{j>i} z_j z_j*
    R5  z_0 z_0*   -> 1 - sum_{j>=1} z_j z_j*
    R6  z_0 W z_0* -> q^-|W| W (1 - sum_{j>=1} z_j z_j*)

R4 for i = 0 is stored composed with R5, as z_0* z_0 -> 1 - q^2 sum z_j z_j*.
R6, the gap rule, applies to words W over letters of index >= 1 and only
once a word admits no R1-R5 redex. Irreducible words have the shape
z_0^a0 ... z_n^an z_n*^bn ... z_0*^b0 with min(a0, b0) = 0.

Every rule strictly decreases the measure returned by :func:`measure`,
which is checked when a :class:`RuleSet` is built.
"""

from functools import lru_cache
import heapq
import itertools
import logging
import warnings

import attr

from qsphere.coeffq import ONE, QMode, ZERO
from qsphere.errors import (
    ArityMismatch, InvalidQ, NonCanonicalWarning, TerminationError)
from qsphere.ncpoly import Letter, NCPoly, word_text


log = logging.getLogger(__name__)

# Words memoized per rule set, for rewrite steps and normal forms each.
CACHE_SIZE = 1 << 16


def _z(i):
    return Letter(i, False)


def _zs(i):
    return Letter(i, True)


def measure(word, n):
    """The termination measure of a word.

    Returns
    -------
    tuple
        (length, min(#z0, #z0*), star inversions, sum of (n - index),
        block inversions), compared lexicographically.
    """
    z0 = z0s = 0
    star_inv = block_inv = index_sum = 0
    stars_seen = 0
    for p, a in enumerate(word):
        index_sum += n - a.index
        if a.starred:
            stars_seen += 1
            if a.index == 0:
                z0s += 1
        else:
            star_inv += stars_seen
            if a.index == 0:
                z0 += 1
        for b in word[p + 1:]:
            if a.starred == b.starred:
                if (not a.starred and a.index > b.index) or (
                        a.starred and a.index < b.index):
                    block_inv += 1
    return (len(word), min(z0, z0s), star_inv, index_sum, block_inv)


@attr.s(slots=True, frozen=True)
class Rule(object):
    """An oriented relation lhs -> sum of coeff * word."""

    name = attr.ib()
    lhs = attr.ib()
    rhs = attr.ib()

    def apply_at(self, word, pos):
        """Replace the occurrence of lhs starting at pos."""
        head, tail = word[:pos], word[pos + len(self.lhs):]
        return [(head + w + tail, c) for w, c in self.rhs]

    def as_poly(self, n):
        """lhs - rhs as a free-algebra polynomial."""
        return NCPoly.monomial(n, self.lhs) - NCPoly(n, dict(self.rhs))

    def __str__(self):
        letters = self.lhs + sum((w for w, _ in self.rhs), ())
        rhs = NCPoly(max(a.index for a in letters), dict(self.rhs))
        return "{}: {} -> {}".format(self.name, word_text(self.lhs), rhs)


def _rule(name, lhs, rhs):
    return Rule(name, tuple(lhs), tuple((tuple(w), c) for w, c in rhs if c))


def _base_rules(n, qmode):
    q = qmode.q
    q2 = qmode.power(2)
    rules = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            rules.append(_rule('R1', (_z(j), _z(i)), [((_z(i), _z(j)), q)]))
        for j in range(n + 1):
            if i != j:
                rules.append(
                    _rule('R2', (_zs(i), _z(j)), [((_z(j), _zs(i)), q)]))
        for j in range(i + 1, n + 1):
            rules.append(
                _rule('R3', (_zs(i), _zs(j)), [((_zs(j), _zs(i)), q)]))
    for i in range(n + 1):
        if i == 0:
            rhs = [((), ONE)]
            rhs += [((_z(j), _zs(j)), -q2) for j in range(1, n + 1)]
        else:
            rhs = [((_z(i), _zs(i)), ONE)]
            rhs += [((_z(j), _zs(j)), ONE - q2) for j in range(i + 1, n + 1)]
        rules.append(_rule('R4', (_zs(i), _z(i)), rhs))
    rhs = [((), ONE)] + [((_z(j), _zs(j)), -ONE) for j in range(1, n + 1)]
    rules.append(_rule('R5', (_z(0), _zs(0)), rhs))
    return rules


def gap_words(n, length):
    """Irreducible words of the given length over letters of index >= 1."""
    if n < 1 or length < 1:
        return []
    letters = [_z(i) for i in range(1, n + 1)]
    letters += [_zs(i) for i in range(n, 0, -1)]
    words = []
    for cuts in itertools.combinations_with_replacement(
            range(length + 1), len(letters) - 1):
        bounds = (0,) + cuts + (length,)
        word = ()
        for a, lo, hi in zip(letters, bounds, bounds[1:]):
            word += (a,) * (hi - lo)
        words.append(word)
    return words


class RuleSet(object):
    """The rewrite system of A(S^{2n+1}_q) for one arity and parameter.

    Parameters
    ----------
    n : int
        Arity; generators are z_0 through z_n.
    qmode : QMode
    schema_check_bound : int
        Gap rule instances with |W| up to this bound are checked against
        the termination measure at construction.
    cache_size : int
        Bound on the memoized rewrite steps and normal forms of words.

    Attributes
    ----------
    rules : list of Rule
        The base rules R1-R5.
    has_gap_rule : bool
        False only at fixed q = 0, where q^-|W| is undefined.
    """

    def __init__(self, n, qmode, schema_check_bound=3, cache_size=CACHE_SIZE):
        self.n = n
        self.qmode = qmode
        self.rules = _base_rules(n, qmode)
        self._by_lhs = {rule.lhs: rule for rule in self.rules}
        self.has_gap_rule = not qmode.is_zero
        self._reduce_cached = lru_cache(maxsize=cache_size)(self._reduce)
        self._normal_cached = lru_cache(maxsize=cache_size)(self._normal_form)
        self._check_measure(schema_check_bound)
        if not self.has_gap_rule and n >= 1:
            warnings.warn(
                "The gap rule does not exist at q = 0; normal forms for "
                "n = {} are not certified canonical".format(n),
                NonCanonicalWarning)
        log.debug("Built %d base rules for n=%d, q=%s", len(self.rules), n,
                  qmode)

    def _check_measure(self, bound):
        checked = list(self.rules)
        if self.has_gap_rule:
            for length in range(1, bound + 1):
                checked.extend(self.gap_rule(w) for w in gap_words(self.n, length))
        for rule in checked:
            top = measure(rule.lhs, self.n)
            for word, _ in rule.rhs:
                if not measure(word, self.n) < top:
                    raise TerminationError(
                        "{} does not decrease the measure: {} >= {}".format(
                            rule, measure(word, self.n), top))

    def lhs_rule(self, a, b):
        """The base rule with left-hand side a b, or None."""
        return self._by_lhs.get((a, b))

    def gap_rule(self, middle):
        """The gap rule instance z_0 W z_0* for an irreducible W."""
        if not self.has_gap_rule:
            raise InvalidQ("The gap rule is undefined at q = 0")
        scale = self.qmode.power(-len(middle))
        rhs = [(middle, scale)]
        rhs += [(middle + (_z(j), _zs(j)), -scale)
                for j in range(1, self.n + 1)]
        return _rule('R6', (_z(0),) + tuple(middle) + (_zs(0),), rhs)

    def find_redex(self, word):
        """Position and rule of the redex the strategy rewrites, or None.

        Base rules are tried leftmost first; the gap rule only when no
        base rule applies.
        """
        for p in range(len(word) - 1):
            rule = self._by_lhs.get((word[p], word[p + 1]))
            if rule is not None:
                return p, rule
        if not self.has_gap_rule:
            return None
        a0 = 0
        while a0 < len(word) and word[a0] == _z(0):
            a0 += 1
        b0 = 0
        while b0 < len(word) - a0 and word[-1 - b0] == _zs(0):
            b0 += 1
        if a0 and b0:
            return a0 - 1, self.gap_rule(word[a0:len(word) - b0])
        return None

    def reduce_once(self, word):
        """One rewrite step, as a list of (word, coeff); None if the word
        is irreducible."""
        return self._reduce_cached(tuple(word))

    def _reduce(self, word):
        found = self.find_redex(word)
        return None if found is None else found[1].apply_at(word, found[0])

    def normalize_word(self, word):
        """Normal form of a single word, as a dict of word to coeff."""
        return self._normal_cached(tuple(word))

    def _normal_form(self, word):
        def key(w):
            return tuple(-m for m in measure(w, self.n)), w

        pending = {word: ONE}
        heap = [key(word)]
        result = {}
        while heap:
            _, current = heapq.heappop(heap)
            coeff = pending.pop(current)
            if not coeff:
                continue
            reduct = self.reduce_once(current)
            if reduct is None:
                total = result.get(current, ZERO) + coeff
                if total:
                    result[current] = total
                else:
                    result.pop(current, None)
                continue
            for w, c in reduct:
                if w in pending:
                    pending[w] = pending[w] + coeff * c
                else:
                    pending[w] = coeff * c
                    heapq.heappush(heap, key(w))
        return result

    def normalize(self, poly):
        if poly.n != self.n:
            raise ArityMismatch(
                "Polynomial of arity {} can't be normalized by rules for "
                "arity {}".format(poly.n, self.n))
        terms = {}
        for word, coeff in poly.items():
            if not self.qmode.is_symbolic:
                coeff = self.qmode.specialize(coeff)
            for w, c in self.normalize_word(word).items():
                total = terms.get(w, ZERO) + coeff * c
                if total:
                    terms[w] = total
                else:
                    terms.pop(w, None)
        return NCPoly._from_dict(self.n, terms)

    def is_normal(self, poly):
        return all(self.reduce_once(w) is None for w, _ in poly.items())

    def cache_info(self):
        """lru_cache statistics of the rewrite step and normal form memos."""
        return {'reduce': self._reduce_cached.cache_info(),
                'normal': self._normal_cached.cache_info()}

    def __repr__(self):
        return "<RuleSet n={} q={}>".format(self.n, self.qmode)


def build_rules(n, qmode=None, schema_check_bound=3):
    """Build and validate the rule set for A(S^{2n+1}_q).

    Parameters
    ----------
    n : int
        n >= 0.
    qmode : QMode, str, Fraction, or None
        None means symbolic q.

    Raises
    ------
    InvalidQ
        If a fixed q is outside [0, 1).
    TerminationError
        If a rule fails to decrease the termination measure.
    """
    if not isinstance(n, int) or n < 0:
        raise ArityMismatch("Arity must be a non-negative integer: {!r}".format(n))
    if not isinstance(qmode, QMode):
        qmode = QMode.symbolic() if qmode is None else QMode(qmode)
    return RuleSet(n, qmode, schema_check_bound)


@lru_cache(maxsize=32)
def get_rules(n, qmode=None):
    """Memoized :func:`build_rules`."""
    return build_rules(n, qmode)


def normalize(poly, rules=None):
    """Normal form of a polynomial; rules default to symbolic q."""
    rules = rules or get_rules(poly.n, QMode.symbolic())
    return rules.normalize(poly)


def is_zero(poly, rules=None):
    """Whether a polynomial vanishes in the sphere algebra."""
    return normalize(poly, rules).is_zero()


@attr.s(slots=True, frozen=True)
class CriticalPairReport(object):
    """Joinability of one overlap of two rules."""

    overlap = attr.ib()
    rules = attr.ib()
    left = attr.ib()
    right = attr.ib()
    left_nf = attr.ib()
    right_nf = attr.ib()

    @property
    def joined(self):
        return self.left_nf == self.right_nf

    def to_json(self):
        return {
            'overlap': word_text(self.overlap),
            'rules': list(self.rules),
            'left': str(self.left),
            'right': str(self.right),
            'left_nf': str(self.left_nf),
            'right_nf': str(self.right_nf),
            'joined': self.joined}


def _report(rules, overlap, first, first_pos, second, second_pos):
    n = rules.n
    left = NCPoly(n, dict(first.apply_at(overlap, first_pos)))
    right = NCPoly(n, dict(second.apply_at(overlap, second_pos)))
    return CriticalPairReport(
        overlap, (first.name, second.name), left, right,
        rules.normalize(left), rules.normalize(right))


def critical_overlaps(rules, schema_bound=3):
    """Generate (overlap word, rule, position, rule, position) tuples."""
    n = rules.n
    letters = [Letter(i, s) for i in range(n + 1) for s in (False, True)]
    for a, b, c in itertools.product(letters, repeat=3):
        first = rules.lhs_rule(a, b)
        second = rules.lhs_rule(b, c)
        if first is not None and second is not None:
            yield (a, b, c), first, 0, second, 1
    if not rules.has_gap_rule:
        return
    for length in range(1, schema_bound + 1):
        for middle in gap_words(n, length):
            gap = rules.gap_rule(middle)
            for b in letters:
                base = rules.lhs_rule(_zs(0), b)
                if base is not None:
                    yield gap.lhs + (b,), gap, 0, base, len(gap.lhs) - 1
            for a in letters:
                base = rules.lhs_rule(a, _z(0))
                if base is not None:
                    yield (a,) + gap.lhs, base, 0, gap, 1


def check_local_confluence(rules, schema_bound=3):
    """Report the joinability of every critical pair.

    Base rules overlap with each other in words of length 3; gap rule
    instances with 1 <= |W| <= schema_bound overlap base rules at their
    first and last letters. Gap rule instances never overlap each other.

    Returns
    -------
    list of CriticalPairReport
    """
    reports = [_report(rules, *found)
               for found in critical_overlaps(rules, schema_bound)]
    log.debug("Checked %d critical pairs for %r, %d unjoined", len(reports),
              rules, sum(1 for r in reports if not r.joined))
    return reports
