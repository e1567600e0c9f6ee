"""Filtration descent and the non-isomorphism obstruction

Let phi be a homomorphism from A(S^{2n+1}_q) to A(SU_q'(2)). Modulo V_1,
phi(z_0) is a unitary generator of the circle algebra, so
phi(z_0) = lambda alpha + x (case A) or lambda alpha* + x (case B) with x
in V_1. The relation z_i z_0 = q z_0 z_i then gives, for y = phi(z_i),

    y alpha - q alpha y = 0 mod V_{m+1}      (case A)

whenever y is in V_m. Modulo V_{m+2} the left side is a sum of
factor * y_{j,k,l} e(j+1,k,l) over the terms of y, so every coefficient
of degree m whose factor is nonzero must vanish, and y descends to
V_{m+1}. The factors are nonzero unless q is a power of q'.
"""

from fractions import Fraction
import logging

import attr

from qsphere.coeffq import ONE, as_qrat
from qsphere.errors import FiltrationViolation, InvalidRange, QSphereError
from qsphere.quotients import (
    check_homomorphism, is_unitary_laurent, project_basis_to_circle)
from qsphere.suq2 import BasisTerm, BasisVector


log = logging.getLogger(__name__)

CASES = ('A', 'B')

IDENTITY_FAILED = "y phi(z0) - q phi(z0) y disagrees with the forced terms"


@attr.s(slots=True, frozen=True)
class PowerWitness(object):
    """m with q = q'^m, or None."""

    m = attr.ib(default=None)

    @property
    def found(self):
        return self.m is not None

    def to_json(self):
        return {'power': self.m}


def is_power(q, qp):
    """Search for m >= 1 with qp**m == q.

    Parameters
    ----------
    q : Fraction
        In [0, 1).
    qp : Fraction
        In (0, 1).

    Raises
    ------
    InvalidRange
    """
    q, qp = Fraction(q), Fraction(qp)
    if not 0 <= q < 1 or not 0 < qp < 1:
        raise InvalidRange(
            "Need 0 <= q < 1 and 0 < q' < 1, got q = {}, q' = {}".format(q, qp))
    if q == 0:
        return PowerWitness()
    m = 1
    power = qp
    while power >= q:
        if power == q:
            return PowerWitness(m)
        power *= qp
        m += 1
    return PowerWitness()


def _generator(case, qmode):
    alpha = BasisVector.generator(0, qmode)
    return alpha if case == 'A' else alpha.star()


@attr.s(slots=True, frozen=True)
class GeneratorForm(object):
    """phi(z_0) = lam * alpha + x (case A) or lam * alpha* + x (case B)."""

    case = attr.ib(validator=attr.validators.in_(CASES))
    lam = attr.ib()
    x = attr.ib()

    def recompose(self):
        return _generator(self.case, self.x.qmode) * self.lam + self.x

    def to_json(self):
        return {'case': self.case, 'lambda': str(self.lam), 'x': str(self.x)}


@attr.s(slots=True, frozen=True)
class NotOfForm(object):
    """The circle part of phi(z_0), which is not lambda u^{+-1}."""

    witness = attr.ib()

    def to_json(self):
        return {'case': None, 'circle_part': str(self.witness)}


def decompose_generator_image(image):
    """Split phi(z_0) into its circle generator and a V_1 remainder.

    Returns
    -------
    GeneratorForm or NotOfForm
    """
    circle = project_basis_to_circle(image)
    verdict = is_unitary_laurent(circle)
    if not verdict.unitary or verdict.exponent not in (1, -1):
        return NotOfForm(circle)
    case = 'A' if verdict.exponent == 1 else 'B'
    lam = verdict.coeff
    x = image - _generator(case, image.qmode) * lam
    return GeneratorForm(case, lam, x)


def descent_factor(term, q, case, qmode):
    """The factor multiplying y_{j,k,l} in y a - q a y, a = alpha or alpha*.

    Case A: q'^(k+l) - q for j >= 0 and 1 - q q'^-(k+l) for j < 0.
    Case B: 1 - q q'^(k+l) for j <= 0 and q'^-(k+l) - q for j > 0.
    """
    j, k, l = term
    s = k + l
    if case == 'A':
        if j >= 0:
            return qmode.power(s) - q
        return ONE - qmode.power(-s) * q
    if j <= 0:
        return ONE - qmode.power(s) * q
    return qmode.power(-s) - q


@attr.s(slots=True, frozen=True)
class DescentReport(object):
    """One descent step at filtration level m.

    Attributes
    ----------
    conditions : list
        ((j, k, l), factor) for the terms of y with k + l = m.
    consistent : bool
        Whether the predicted factors reproduce y a - q a y modulo V_{m+2}.
    identity_ok : bool or None
        When phi(z0) is known, whether y phi(z0) - q phi(z0) y agrees with
        lam times the forced terms modulo V_{m+1}.
    """

    m = attr.ib()
    case = attr.ib()
    conditions = attr.ib()
    consistent = attr.ib()
    y = attr.ib()
    updated = attr.ib()
    identity_ok = attr.ib(default=None)

    @property
    def forced_zero(self):
        return (all(factor for _, factor in self.conditions) and
                self.identity_ok is not False)

    @property
    def zero_factors(self):
        return [term for term, factor in self.conditions if not factor]

    def to_json(self):
        return {
            'm': self.m,
            'case': self.case,
            'conditions': [{'term': list(t), 'factor': str(f)}
                           for t, f in self.conditions],
            'forced_zero': self.forced_zero,
            'consistent': self.consistent,
            'identity_ok': self.identity_ok,
            'updated': str(self.updated)}


def twisted_commutator(y, a, q):
    """y a - q a y."""
    return y * a - (a * y) * q


def descent_step(y, m, q, case, form=None):
    """Apply the level-m descent to y.

    Parameters
    ----------
    y : BasisVector
        In V_m, at the target parameter q'.
    m : int
    q : Fraction
        The source parameter.
    case : str
        'A' or 'B'.
    form : GeneratorForm, optional
        When given, the step also checks y phi(z0) - q phi(z0) y against
        the forced terms, and forces nothing if they disagree.

    Raises
    ------
    FiltrationViolation
        If y is not in V_m.
    """
    if case not in CASES:
        raise ValueError("Case must be 'A' or 'B'")
    if y.degree() < m:
        raise FiltrationViolation(
            "{} is not in V_{} (degree {})".format(y, m, y.degree()))
    q = as_qrat(Fraction(q))
    qmode = y.qmode
    shift = 1 if case == 'A' else -1
    a = _generator(case, qmode)
    direct = twisted_commutator(y, a, q).truncate(m + 2)
    predicted = {}
    conditions = []
    for term, coeff in y.terms():
        if term.k + term.l >= m + 2:
            continue
        factor = qmode.specialize(descent_factor(term, q, case, qmode))
        if term.k + term.l == m:
            conditions.append((tuple(term), factor))
        if factor:
            predicted[BasisTerm(term.j + shift, term.k, term.l)] = factor * coeff
    consistent = direct == BasisVector(predicted, qmode)
    identity_ok = None
    if form is not None:
        # y phi(z0) - q phi(z0) y = lam (y a - q a y) + (y x - q x y), and
        # the second part lies in V_{m+1} when x is in V_1.
        leading = BasisVector(
            {t: c for t, c in predicted.items() if t.k + t.l == m}, qmode)
        full = twisted_commutator(y, form.recompose(), q) - leading * form.lam
        identity_ok = full.degree() >= m + 1
        if not identity_ok:
            log.info("y phi(z0) - q phi(z0) y leaves lam times the forced "
                     "terms outside V_%d: %s", m + 1, full.truncate(m + 1))
    forced = (all(factor for _, factor in conditions) and
              identity_ok is not False)
    updated = y - y.degree_part(m) if forced else y
    log.debug("Descent step m=%d case %s: %d conditions, forced=%s", m, case,
              len(conditions), forced)
    return DescentReport(m, case, conditions, consistent, y, updated,
                         identity_ok)


@attr.s(slots=True, frozen=True)
class ZeroCertificate(object):
    """Every coefficient of degree <= depth is forced to vanish.

    remainder is the untested part of y, of degree > depth.
    """

    depth = attr.ib()
    steps = attr.ib()
    remainder = attr.ib()
    certified = True

    @property
    def conditions(self):
        return [c for step in self.steps for c in step.conditions]

    def to_json(self):
        return {
            'verdict': 'zero',
            'depth': self.depth,
            'conditions': [{'term': list(t), 'factor': str(f)}
                           for t, f in self.conditions],
            'consistent': all(s.consistent for s in self.steps),
            'remainder': str(self.remainder)}


@attr.s(slots=True, frozen=True)
class Stalled(object):
    """The descent stopped at level m.

    term is the basis term whose factor vanished, or None when the step's
    identity for phi(z0) failed; reason says which.
    """

    m = attr.ib()
    term = attr.ib()
    steps = attr.ib()
    reason = attr.ib(default="zero factor")
    certified = False

    def to_json(self):
        return {'verdict': 'stalled', 'm': self.m,
                'term': None if self.term is None else list(self.term),
                'reason': self.reason,
                'steps': [s.to_json() for s in self.steps]}


def run_descent(y, q, case, depth, form=None):
    """Iterate descent_step for m = 1, ..., depth.

    Returns
    -------
    ZeroCertificate or Stalled

    Raises
    ------
    FiltrationViolation
        If y is not in V_1.
    """
    if y.is_zero():
        return ZeroCertificate(depth, [], y)
    if y.degree() < 1:
        raise FiltrationViolation(
            "{} is not in the commutator ideal V_1".format(y))
    steps = []
    current = y
    for m in range(1, depth + 1):
        step = descent_step(current, m, q, case, form)
        steps.append(step)
        if step.identity_ok is False:
            return Stalled(m, None, steps, IDENTITY_FAILED)
        if not step.forced_zero:
            return Stalled(m, step.zero_factors[0], steps)
        current = step.updated
    return ZeroCertificate(depth, steps, current)


def _stage_json(stage):
    return None if stage is None else stage.to_json()


@attr.s(slots=True)
class ObstructionReport(object):
    """Stage by stage verdicts of the obstruction pipeline."""

    depth = attr.ib()
    homomorphism = attr.ib(default=None)
    power = attr.ib(default=None)
    decomposition = attr.ib(default=None)
    descents = attr.ib(default=attr.Factory(list))
    obstructed = attr.ib(default=False)
    failing_stage = attr.ib(default=None)
    conclusion = attr.ib(default='')

    def to_json(self):
        descents = []
        for i, result in self.descents:
            if isinstance(result, QSphereError):
                descents.append({'generator': 'z{}'.format(i),
                                 'verdict': 'error', 'reason': str(result)})
            else:
                descents.append(dict(result.to_json(),
                                     generator='z{}'.format(i)))
        return {
            'stages': {
                'homomorphism': _stage_json(self.homomorphism),
                'power': _stage_json(self.power),
                'decomposition': _stage_json(self.decomposition),
                'descent': descents},
            'depth': self.depth,
            'obstructed': self.obstructed,
            'failing_stage': self.failing_stage,
            'conclusion': self.conclusion}


def _not_applicable(hom):
    if hom.target != 'suq2':
        return "the obstruction applies to maps into A(SU_q'(2))"
    if hom.qmode.is_symbolic or hom.target_qmode.is_symbolic:
        return "the obstruction needs fixed values of q and q'"
    return None


def verify_nonvanishing_obstruction(hom, depth):
    """Run the obstruction pipeline on a candidate map into A(SU_q'(2)).

    The stages are the relation check, the power test, the decomposition
    of phi(z_0), and the descent on phi(z_1), ..., phi(z_n). Every stage
    runs and records its verdict; the conclusion names the first failing
    stage. Maps into another algebra, or with a symbolic parameter, get
    only the relation check and a report whose failing stage is
    'applicability'.
    """
    report = ObstructionReport(depth)
    report.homomorphism = check_homomorphism(hom)
    reason = _not_applicable(hom)
    if reason is not None:
        report.failing_stage = 'applicability'
        report.conclusion = "not applicable: {}".format(reason)
        log.info("Obstruction pipeline: %s", report.conclusion)
        return report
    q, qp = hom.qmode.value, hom.target_qmode.value
    report.power = is_power(q, qp)
    report.decomposition = decompose_generator_image(hom.images[0])
    form = report.decomposition
    if not isinstance(form, GeneratorForm):
        form = None

    stages = []
    if not report.homomorphism.ok:
        stages.append('homomorphism')

    if form is None:
        stages.append('decomposition')
    elif not report.power.found:
        for i in range(1, hom.n + 1):
            try:
                result = run_descent(hom.images[i], q, form.case, depth, form)
            except FiltrationViolation as err:
                result = err
            report.descents.append((i, result))
        if not all(getattr(r, 'certified', False) for _, r in report.descents):
            stages.append('descent')
    report.failing_stage = stages[0] if stages else None
    report.obstructed = (
        form is not None and not report.power.found and
        all(getattr(r, 'certified', False) for _, r in report.descents))

    if report.power.found:
        report.conclusion = (
            "no obstruction: q = q'^{}, so the descent does not "
            "apply".format(report.power.m))
    elif report.obstructed:
        report.conclusion = (
            "images of z1..z{} certified zero to depth {}; surjectivity onto "
            "the noncommutative target is obstructed, since "
            "A(S^{}_q)/I_n is commutative".format(
                hom.n, depth, 2 * hom.n + 1))
        if not report.homomorphism.ok:
            label, _ = report.homomorphism.first
            report.conclusion += (
                "; the candidate also violates relation {}".format(label))
    elif form is None:
        report.conclusion = (
            "phi(z0) is not of the form lambda alpha + x or "
            "lambda alpha* + x: circle part {}".format(
                report.decomposition.witness))
    else:
        i, result = next((i, r) for i, r in report.descents
                         if not getattr(r, 'certified', False))
        if isinstance(result, Stalled) and result.term is None:
            report.conclusion = "descent of z{} stalled at m = {}: {}".format(
                i, result.m, result.reason)
        elif isinstance(result, Stalled):
            report.conclusion = (
                "descent of z{} stalled at m = {} on e{}".format(
                    i, result.m, tuple(result.term)))
        else:
            report.conclusion = "descent of z{} failed: {}".format(i, result)
    log.info("Obstruction pipeline: %s", report.conclusion)
    return report
