"""Seeded property suites

Each suite checks one family of identities of the sphere algebras on
exhaustive small grids and on seeded random samples, and returns a
:class:`SuiteResult`. The suites back ``qs verify-lemmas``.
"""

from collections import OrderedDict
from fractions import Fraction
import itertools
import logging
import random

import attr

from qsphere.coeffq import GaussianRational, QMode
from qsphere.config import RunConfig
from qsphere.descent import (
    NotOfForm, Stalled, descent_factor, is_power, run_descent,
    verify_nonvanishing_obstruction)
from qsphere.errors import QSphereError
from qsphere.ncpoly import Letter, NCPoly
from qsphere.quotients import (
    HomSpec, LaurentPoly, character_eval, check_homomorphism,
    commutator_ideal_certificate, factor_element, factor_through_beta,
    is_unitary_laurent, project_to_circle, quotient_map, relations)
from qsphere.rewrite import build_rules, check_local_confluence, get_rules
from qsphere.suq2 import (
    BasisVector, alpha_power_product, alpha_star_power_product,
    word_to_basis)


log = logging.getLogger(__name__)

PASS = 'PASS'
FAIL = 'FAIL'
SKIPPED = 'SKIPPED'

# Failure messages kept per suite.
MAX_FAILURES = 20

BASIS_AT_ZERO = "q = 0 unsupported for basis"
NORMAL_FORMS_AT_ZERO = "no canonical normal forms at q = 0"

_COEFFS = (1, -1, 2, -3, Fraction(1, 2), Fraction(-2, 3))


@attr.s(slots=True, frozen=True)
class SuiteResult(object):
    """Verdict of one suite."""

    name = attr.ib()
    status = attr.ib()
    checked = attr.ib(default=0)
    failures = attr.ib(default=attr.Factory(list))
    reason = attr.ib(default=None)

    @property
    def passed(self):
        return self.status != FAIL

    def to_json(self):
        return attr.asdict(self)


class _Tally(object):
    """Counts checks and collects failure messages."""

    def __init__(self):
        self.checked = 0
        self.failures = []

    def check(self, ok, message):
        self.checked += 1
        if not ok:
            self.failures.append(message)
        return ok

    def result(self, name):
        status = FAIL if self.failures else PASS
        return SuiteResult(name, status, self.checked,
                           self.failures[:MAX_FAILURES])


SUITES = OrderedDict()


def _suite(name, zero_reason=None):
    def register(func):
        func.zero_reason = zero_reason
        SUITES[name] = func
        return func
    return register


def _random_word(rng, n, length):
    return tuple(Letter(rng.randint(0, n), rng.random() < 0.5)
                 for _ in range(length))


def _random_poly(rng, n, terms=3, length=3):
    return NCPoly(n, {_random_word(rng, n, rng.randint(0, length)):
                      rng.choice(_COEFFS) for _ in range(terms)})


def _random_basis(rng, qmode, terms=3, top=3, low=0):
    found = {}
    for _ in range(terms):
        k = rng.randint(0, top)
        l = rng.randint(max(0, low - k), top)
        found[(rng.randint(-3, 3), k, l)] = rng.choice(_COEFFS)
    return BasisVector(found, qmode)


def _basis_grid(jmax=3, kmax=3):
    return [(j, k, l) for j in range(-jmax, jmax + 1)
            for k in range(kmax + 1) for l in range(kmax + 1)]


def _letter_images(qmode):
    alpha = BasisVector.generator(0, qmode)
    beta = BasisVector.generator(1, qmode)
    return {Letter(0, False): alpha, Letter(0, True): alpha.star(),
            Letter(1, False): beta, Letter(1, True): beta.star()}


@_suite('relations')
def relations_suite(config, rng, tally):
    """Every defining relation and its star normalize to zero."""
    for n in range(1, config.n + 1):
        rules = get_rules(n, config.q)
        for label, relation in relations(n, config.q):
            tally.check(rules.normalize(relation).is_zero(),
                        "n={} {} does not vanish".format(n, label))
            tally.check(rules.normalize(relation.star()).is_zero(),
                        "n={} star of {} does not vanish".format(n, label))


@_suite('confluence')
def confluence_suite(config, rng, tally):
    """Every critical pair joins."""
    for n in range(1, config.n + 1):
        rules = build_rules(n, config.q, config.schema_bound)
        for report in check_local_confluence(rules, config.schema_bound):
            tally.check(report.joined, "n={} overlap {} of {}: {} != {}".format(
                n, report.to_json()['overlap'], ', '.join(report.rules),
                report.left_nf, report.right_nf))


@_suite('basis', zero_reason=BASIS_AT_ZERO)
def basis_suite(config, rng, tally):
    """Normal forms of words agree with products of basis images."""
    qmode = config.q
    images = _letter_images(qmode)
    for _ in range(config.samples):
        word = _random_word(rng, 1, rng.randint(0, 6))
        expected = BasisVector.one(qmode)
        for letter in word:
            expected = expected * images[letter]
        found = word_to_basis(NCPoly.monomial(1, word), qmode)
        tally.check(found == expected,
                    "{}: {} != {}".format(NCPoly.monomial(1, word), found,
                                          expected))


@_suite('alpha-powers', zero_reason=BASIS_AT_ZERO)
def alpha_powers_suite(config, rng, tally):
    """Closed forms of alpha^j alpha*^k and alpha*^d alpha^e."""
    qmode = config.q
    for j, k in itertools.product(range(6), repeat=2):
        word = (Letter(0, False),) * j + (Letter(0, True),) * k
        tally.check(
            alpha_power_product(j, k, qmode) ==
            word_to_basis(NCPoly.monomial(1, word), qmode),
            "alpha^{} alpha*^{}".format(j, k))
        word = (Letter(0, True),) * j + (Letter(0, False),) * k
        tally.check(
            alpha_star_power_product(j, k, qmode) ==
            word_to_basis(NCPoly.monomial(1, word), qmode),
            "alpha*^{} alpha^{}".format(j, k))


@_suite('filtration', zero_reason=BASIS_AT_ZERO)
def filtration_suite(config, rng, tally):
    """V_m V_m' lies in V_(m+m'), star preserves V_m, and the
    alpha power identities hold modulo V_2."""
    qmode = config.q
    table = [BasisVector.term(j, k, l, qmode) for j, k, l in _basis_grid()]
    grid = [x for x in table if x.degree() <= 3]
    for x, y in itertools.product(grid, repeat=2):
        product = x * y
        tally.check(product.degree() >= x.degree() + y.degree(),
                    "deg({} * {}) = {}".format(x, y, product.degree()))
        tally.check(product.star() == y.star() * x.star(),
                    "star of {} * {}".format(x, y))
    for x in table:
        tally.check(x.star().degree() == x.degree(), "deg of {}*".format(x))
    alpha = BasisVector.generator(0, qmode)
    alpha_star = alpha.star()
    for j in range(1, 6):
        pairs = [
            ("alpha alpha*^{}".format(j), alpha * alpha_star ** j,
             alpha_star ** (j - 1)),
            ("alpha*^{} alpha".format(j), alpha_star ** j * alpha,
             alpha_star ** (j - 1)),
            ("alpha^{} alpha*".format(j), alpha ** j * alpha_star,
             alpha ** (j - 1)),
            ("alpha* alpha^{}".format(j), alpha_star * alpha ** j,
             alpha ** (j - 1))]
        for name, lhs, rhs in pairs:
            tally.check((lhs - rhs).degree() >= 2,
                        "{} is not congruent mod V_2".format(name))
    for _ in range(config.samples):
        x = _random_basis(rng, qmode)
        m = rng.randint(0, 4)
        tally.check((x - x.truncate(m)).degree() >= m,
                    "truncation of {} at {}".format(x, m))


@_suite('ideal', zero_reason=NORMAL_FORMS_AT_ZERO)
def ideal_suite(config, rng, tally):
    """Generator certificates verify and the circle projection is a
    *-homomorphism that kills the ideal."""
    characters = [1, -1]
    if config.gaussian_mode:
        characters.append(GaussianRational(Fraction(3, 5), Fraction(4, 5)))
    for n in range(1, config.n + 1):
        rules = get_rules(n, config.q)
        for i in range(1, n + 1):
            for starred in (False, True):
                z = NCPoly.generator(n, i, starred)
                cert = commutator_ideal_certificate(n, z, config.q)
                tally.check(cert.verify(rules),
                            "n={} certificate of {}".format(n, z))
                tally.check(project_to_circle(z, rules).is_zero(),
                            "n={} {} survives in the circle".format(n, z))
        for _ in range(config.samples):
            a = _random_poly(rng, n)
            b = _random_poly(rng, n)
            pa = project_to_circle(a, rules)
            pb = project_to_circle(b, rules)
            tally.check(project_to_circle(a * b, rules) == pa * pb,
                        "n={} projection of ({}) ({})".format(n, a, b))
            tally.check(project_to_circle(a.star(), rules) == pa.star(),
                        "n={} projection of ({})*".format(n, a))
            lam = rng.choice(characters)
            tally.check(
                character_eval(a * b, lam, rules) ==
                character_eval(a, lam, rules) * character_eval(b, lam, rules),
                "n={} character {} on ({}) ({})".format(n, lam, a, b))
            word = _random_word(rng, n, rng.randint(0, 2))
            i = rng.randint(1, n)
            target = (NCPoly.monomial(n, word) *
                      NCPoly.generator(n, i, rng.random() < 0.5) * a)
            cert = commutator_ideal_certificate(n, target, config.q)
            tally.check(cert.verify(rules),
                        "n={} certificate of {}".format(n, target))


@_suite('beta-factor', zero_reason=BASIS_AT_ZERO)
def beta_factor_suite(config, rng, tally):
    """V_1 elements factor through beta or beta*, and I_1 lies in V_1."""
    qmode = config.q
    for term in _basis_grid():
        if term[1] + term[2] < 1:
            continue
        coeff, rest, generator = factor_through_beta(term, qmode)
        found = (BasisVector.term(*rest, qmode=qmode) *
                 factor_element(generator, qmode) * coeff)
        tally.check(found == BasisVector.term(*term, qmode=qmode),
                    "e{} through {}".format(term, generator))
    for _ in range(config.samples):
        word = _random_word(rng, 1, rng.randint(0, 3))
        target = (NCPoly.monomial(1, word) *
                  NCPoly.generator(1, 1, rng.random() < 0.5) *
                  _random_poly(rng, 1))
        image = word_to_basis(target, qmode)
        tally.check(image.degree() >= 1,
                    "{} maps to {} outside V_1".format(target, image))


@_suite('unitary')
def unitary_suite(config, rng, tally):
    """The unitarity decision agrees with the single-term criterion."""
    units = [1, -1]
    if config.gaussian_mode:
        units += [GaussianRational(Fraction(3, 5), Fraction(4, 5)),
                  GaussianRational(0, 1)]
    for _ in range(config.samples):
        if rng.random() < 0.4:
            a = LaurentPoly.monomial(rng.randint(-6, 6), rng.choice(units))
        else:
            a = LaurentPoly({rng.randint(-6, 6): rng.choice(_COEFFS)
                             for _ in range(rng.randint(1, 5))})
        expected = (len(a) == 1 and
                    a.terms()[0][1] * a.terms()[0][1].conjugate() == 1)
        verdict = is_unitary_laurent(a)
        tally.check(verdict.unitary == expected,
                    "{} decided {}".format(a, verdict.unitary))
        if verdict.unitary:
            tally.check(LaurentPoly.monomial(verdict.exponent,
                                             verdict.coeff) == a,
                        "{} witness {}".format(a, verdict))


# Parameter pairs (q, q') with q not a power of q'.
DESCENT_PAIRS = (
    (Fraction(1, 3), Fraction(1, 2)),
    (Fraction(0), Fraction(1, 2)),
    (Fraction(2, 3), Fraction(1, 3)))


@_suite('descent')
def descent_suite(config, rng, tally):
    """Descent steps match direct products and certify zero when q is
    not a power of q'."""
    for q, qp in DESCENT_PAIRS:
        qmode = QMode(qp)
        tally.check(not is_power(q, qp).found,
                    "{} is a power of {}".format(q, qp))
        for m in range(1, 9):
            for j in range(-3, 4):
                for case in ('A', 'B'):
                    factor = qmode.specialize(
                        descent_factor((j, m, 0), q, case, qmode))
                    tally.check(bool(factor), "zero factor at q={} q'={} "
                                "j={} m={} case {}".format(q, qp, j, m, case))
        for _ in range(config.samples // 10 + 1):
            y = _random_basis(rng, qmode, low=1)
            for case in ('A', 'B'):
                result = run_descent(y, q, case, config.depth)
                tally.check(result.certified,
                            "q={} q'={} case {}: {} not certified".format(
                                q, qp, case, y))
                tally.check(all(s.consistent for s in result.steps),
                            "q={} q'={} case {}: inconsistent step for "
                            "{}".format(q, qp, case, y))
    for qp, level, term in ((Fraction(1, 2), 1, (0, 1, 0)),
                            (Fraction(1, 2), 2, (0, 2, 0))):
        q = qp ** level
        y = BasisVector.term(*term, qmode=QMode(qp))
        result = run_descent(y, q, 'A', config.depth)
        tally.check(isinstance(result, Stalled) and result.m == level,
                    "q={} q'={}: e{} should stall at m={}".format(
                        q, qp, term, level))


def _candidate(n, q, qp, images):
    qmode = QMode(qp)
    return HomSpec(n, QMode(q), 'suq2', qmode,
                   [BasisVector(terms, qmode) for terms in images])


@_suite('obstruction')
def obstruction_suite(config, rng, tally):
    """The obstruction pipeline on known maps."""
    half = Fraction(1, 2)
    for n in (1, 2):
        hom = quotient_map(n, 'suq2', QMode(half))
        tally.check(check_homomorphism(hom).ok,
                    "n={} quotient map is not a homomorphism".format(n))
        report = verify_nonvanishing_obstruction(hom, config.depth)
        tally.check(report.power.m == 1 and not report.obstructed,
                    "n={} identity parameters obstructed".format(n))

    naive = _candidate(1, Fraction(1, 3), half,
                       [{(1, 0, 0): 1}, {(0, 1, 0): 1}])
    check = check_homomorphism(naive)
    labels = [label for label, _ in check.violations]
    for label in ('commute(0,1)', 'cross(1,0)', 'normal(0)'):
        tally.check(label in labels, "naive map satisfies {}".format(label))
    residues = dict(check.violations)
    tally.check(
        residues.get('normal(0)') ==
        BasisVector.term(0, 1, 1, QMode(half), Fraction(-5, 36)),
        "normal(0) residue {}".format(residues.get('normal(0)')))

    for n, images in ((1, [{(1, 0, 0): 1}, {(0, 1, 0): 1}]),
                      (2, [{(1, 0, 0): 1}, {(0, 1, 0): 1},
                           {(0, 1, 1): 1}])):
        report = verify_nonvanishing_obstruction(
            _candidate(n, Fraction(1, 3), half, images), config.depth)
        tally.check(report.obstructed,
                    "n={} candidate not obstructed: {}".format(
                        n, report.conclusion))

    report = verify_nonvanishing_obstruction(
        _candidate(1, Fraction(1, 3), half,
                   [{(1, 0, 0): 2}, {(0, 1, 0): 1}]), config.depth)
    tally.check(isinstance(report.decomposition, NotOfForm) and
                not report.obstructed, "2 alpha decomposed")


def run_suite(name, config=None):
    """Run one suite by name.

    Suites that need the basis of A(SU_q(2)) or canonical normal forms
    are skipped at q = 0.

    Raises
    ------
    KeyError
        If no suite has the name.
    """
    config = config or RunConfig()
    func = SUITES[name]
    if func.zero_reason and config.q.is_zero:
        return SuiteResult(name, SKIPPED, reason=func.zero_reason)
    rng = random.Random("{}:{}".format(config.seed, name))
    tally = _Tally()
    try:
        func(config, rng, tally)
    except QSphereError as err:
        log.exception("Suite %s raised", name)
        tally.failures.append("error: {}".format(err))
    result = tally.result(name)
    log.info("Suite %s: %s (%d checks)", name, result.status, result.checked)
    return result


def run_suites(names=None, config=None):
    """Run the named suites, all of them by default, in registry order."""
    config = config or RunConfig()
    names = list(SUITES) if not names else names
    return [run_suite(name, config) for name in names]
