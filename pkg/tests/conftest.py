"""``pytest`` fixtures."""


from fractions import Fraction
import json

from click.testing import CliRunner
import pytest

from qsphere.coeffq import QMode, QRat
from qsphere.ncpoly import NCPoly


@pytest.fixture(scope='function')
def runner():
    return CliRunner()


@pytest.fixture
def q():
    """The symbolic parameter as an element of Q(q)."""
    return QRat.q()


@pytest.fixture
def half():
    return QMode(Fraction(1, 2))


@pytest.fixture
def third():
    return QMode(Fraction(1, 3))


@pytest.fixture
def gens():
    """z0, z1 and their stars in the n = 1 free algebra."""
    return (NCPoly.generator(1, 0), NCPoly.generator(1, 1),
            NCPoly.generator(1, 0, True), NCPoly.generator(1, 1, True))


def _write_spec(tmpdir, name, obj):
    path = tmpdir.join(name)
    path.write(json.dumps(obj))
    return str(path)


@pytest.fixture(scope='function')
def naive_spec(tmpdir):
    """z0 -> alpha, z1 -> beta from q = 1/3 to q' = 1/2, which breaks
    three families of relations."""
    return _write_spec(tmpdir, 'naive.json', {
        'source': {'n': 1, 'q': '1/3'},
        'target': 'suq2',
        'target_q': '1/2',
        'images': {'z0': 'z0', 'z1': 'z1'}})


@pytest.fixture(scope='function')
def quotient_spec(tmpdir):
    """The quotient map A(S^5_q) -> A(SU_q(2)) at q = 1/2."""
    return _write_spec(tmpdir, 'quotient.json', {
        'source': {'n': 2, 'q': '1/2'},
        'target': 'suq2',
        'target_q': '1/2',
        'images': {'z0': 'e(1,0,0)', 'z1': 'e(0,1,0)', 'z2': '0'}})


@pytest.fixture(scope='function')
def config_file(tmpdir):
    """Factory of JSON run configuration files."""
    def make(obj, name='qs.json'):
        path = tmpdir.join(name)
        path.write(obj if isinstance(obj, str) else json.dumps(obj))
        return str(path)
    return make
