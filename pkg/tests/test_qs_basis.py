import json

from qsphere.qs.main import main_group


def test_basis(runner):
    result = runner.invoke(main_group, ['basis', "z0' z0"])
    assert result.exit_code == 0
    assert result.output.strip() == "e(0,0,0) - q^2 e(0,1,1)"


def test_basis_word(runner):
    result = runner.invoke(main_group, [
        'basis', '--q', '1/2', '--word', "e(-1,1,0) + 2"])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "2 e(0,0,0) + e(-1,1,0)", "2 + z1 z0'"]


def test_basis_json(runner):
    result = runner.invoke(main_group, [
        'basis', '--q', '1/2', '--json', "z1 z0"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['basis']['terms'] == [
        {'j': 1, 'k': 1, 'l': 0, 'coeff': '1/2'}]


def test_basis_q_zero(runner):
    result = runner.invoke(main_group, ['basis', '--q', '0', "z0"])
    assert result.exit_code == 2
    assert "q = 0 unsupported for basis" in result.output


def test_filtration(runner):
    result = runner.invoke(main_group, [
        'filtration', 'e(0,1,2) + e(3,2,0)', '--truncate', '3',
        '--part', '2'])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "degree: 2", "mod V_3: e(3,2,0)", "degree 2 part: e(3,2,0)"]


def test_filtration_of_zero(runner):
    result = runner.invoke(main_group, ['filtration', '0'])
    assert result.exit_code == 0
    assert result.output.strip() == "degree: inf"


def test_filtration_json(runner):
    result = runner.invoke(main_group, ['filtration', '--json', "z0 z1'"])
    assert result.exit_code == 0
    assert json.loads(result.output)['degree'] == 1
