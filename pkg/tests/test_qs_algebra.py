import json

from qsphere.qs.main import main_group


def test_normalize_fixed_q(runner):
    result = runner.invoke(main_group, [
        'normalize', '--n', '1', '--q', '1/3', "z0' z0"])
    assert result.exit_code == 0
    assert result.output.strip() == "1 - (1/9) z1 z1'"


def test_normalize_symbolic(runner):
    result = runner.invoke(main_group, ['normalize', "z0' z0"])
    assert result.exit_code == 0
    assert result.output.strip() == "1 - q^2 z1 z1'"


def test_normalize_json(runner):
    result = runner.invoke(main_group, [
        'normalize', '--n', '2', '--json', "z2 z0"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['text'] == "q z0 z2"
    assert data['normal_form']['n'] == 2
    assert data['q'] == "q"


def test_normalize_config_file(runner, config_file):
    path = config_file({'q': '1/3'})
    result = runner.invoke(main_group, [
        '--config', path, 'normalize', "z0' z0"])
    assert result.exit_code == 0
    assert result.output.strip() == "1 - (1/9) z1 z1'"


def test_option_beats_config_file(runner, config_file):
    path = config_file({'q': '1/3'})
    result = runner.invoke(main_group, [
        '--config', path, 'normalize', '--q', '1/2', "z0' z0"])
    assert result.exit_code == 0
    assert result.output.strip() == "1 - (1/4) z1 z1'"


def test_bad_config_file(runner, config_file):
    path = config_file("{not json")
    result = runner.invoke(main_group, [
        '--config', path, 'normalize', "z0"])
    assert result.exit_code == 2


def test_unknown_config_key(runner, config_file):
    path = config_file({'colour': 'red'})
    result = runner.invoke(main_group, [
        '--config', path, 'normalize', "z0"])
    assert result.exit_code == 2
    assert "colour" in result.output


def test_syntax_error(runner):
    result = runner.invoke(main_group, ['normalize', 'z0 + * z1'])
    assert result.exit_code == 2
    assert "Expression Error:" in result.output
    assert "  z0 + * z1" in result.output
    assert "  " + " " * 5 + "^" in result.output


def test_unknown_generator(runner):
    result = runner.invoke(main_group, ['normalize', '--n', '1', 'z3'])
    assert result.exit_code == 2
    assert "Unknown generator z3" in result.output


def test_invalid_q(runner):
    result = runner.invoke(main_group, ['normalize', '--q', '3/2', 'z0'])
    assert result.exit_code == 2


def test_star_sphere(runner):
    result = runner.invoke(main_group, ['star', "z0' z1"])
    assert result.exit_code == 0
    assert result.output.strip() == "q z0 z1'"


def test_star_suq2(runner):
    result = runner.invoke(main_group, [
        'star', '--algebra', 'suq2', 'e(1,2,0)'])
    assert result.exit_code == 0
    assert result.output.strip() == "e(-1,0,2)"


def test_star_circle(runner):
    result = runner.invoke(main_group, [
        'star', '--algebra', 'circle', 'u^2 + 3'])
    assert result.exit_code == 0
    assert result.output.strip() == "u^-2 + 3"


def test_confluence(runner):
    result = runner.invoke(main_group, [
        'confluence', '--n', '1', '--schema-bound', '2'])
    assert result.exit_code == 0
    assert "0 unjoined" in result.output


def test_confluence_json(runner):
    result = runner.invoke(main_group, [
        'confluence', '--n', '2', '--q', '1/2', '--schema-bound', '1',
        '--json'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['pairs'] > 0
    assert data['unjoined'] == []
