from click.testing import CliRunner

import qsphere
from qsphere.qs.main import main_group, plugin_entry_points


COMMANDS = [
    'normalize', 'star', 'confluence', 'basis', 'filtration', 'ideal-cert',
    'circle', 'unitary', 'check-hom', 'descent', 'obstruct', 'verify-lemmas']


def test_version():
    runner = CliRunner()
    result = runner.invoke(main_group, ['--version'])
    assert result.exit_code == 0
    assert qsphere.__version__ in result.output


def test_all_registered():
    for name in COMMANDS:
        assert name in main_group.commands


def test_plugins_registered():
    # Subcommands installed by other packages under the
    # qsphere.qs_plugins entry point group are added to the main group.
    for ep in plugin_entry_points():
        assert ep.name in main_group.commands


def test_help_lists_commands():
    runner = CliRunner()
    result = runner.invoke(main_group, ['--help'])
    assert result.exit_code == 0
    assert 'verify-lemmas' in result.output


def test_missing_config_file(tmpdir):
    runner = CliRunner()
    result = runner.invoke(main_group, [
        '--config', str(tmpdir.join('missing.json')), 'normalize', 'z0'])
    assert result.exit_code == 2


def test_subcommand_help():
    runner = CliRunner()
    for name in COMMANDS:
        result = runner.invoke(main_group, [name, '--help'])
        assert result.exit_code == 0, name
        assert 'Usage' in result.output


def test_suites_importable():
    from qsphere import suites
    assert 'relations' in suites.SUITES
    assert 'filtration' in suites.SUITES
