import json

import pytest
from click.testing import CliRunner

from padejacobi.cli import load_spec, main
from padejacobi.errors import ConfigError

ARCSINE_INI = """\
[measure]
density   = arcsine
intervals = -1:1

[run]
depth = 6
precision_bits = 192
"""

GAP_INI = """\
[measure]
density   = lebesgue
intervals = -1:-2/5, 3/10:1

[run]
depth = 8
"""

ATOM_INI = """\
[measure]
atoms = 1/2:1

[perturbation]
q2 = 1
w2 = -3 1
"""


@pytest.fixture
def runner():
    return CliRunner()


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_load_spec_full(tmp_path):
    spec, run = load_spec(_write(tmp_path, "a.ini", ARCSINE_INI))
    assert spec.measure.density == "arcsine"
    assert run["depth"] == "6"
    assert spec.perturbation is None


def test_load_spec_perturbation(tmp_path):
    spec, _ = load_spec(_write(tmp_path, "p.ini", ATOM_INI))
    assert spec.perturbation is not None
    assert spec.perturbation.w2.degree == 1


def test_load_spec_errors(tmp_path):
    with pytest.raises(ConfigError):
        load_spec(str(tmp_path / "missing.ini"))
    with pytest.raises(ConfigError):
        load_spec(_write(tmp_path, "bad.ini", "[measure]\nintervals = 1-2\n"))


def test_moments_command(tmp_path, runner):
    cfg = _write(tmp_path, "a.ini", ARCSINE_INI)
    res = runner.invoke(main, ["moments", cfg, "--count", "4"])
    assert res.exit_code == 0, res.output
    assert "s_0 = 1" in res.output
    assert "s_2 = 1/2" in res.output


def test_pfraction_command_json(tmp_path, runner):
    cfg = _write(tmp_path, "a.ini", ARCSINE_INI)
    out = tmp_path / "gjm.json"
    res = runner.invoke(main, ["pfraction", cfg, "--depth", "4",
                               "--out", str(out)])
    assert res.exit_code == 0, res.output
    doc = json.loads(out.read_text())
    assert len(doc["blocks"]) == 4
    assert doc["blocks"][0]["b_sq"] == "1/2"


def test_pade_command_kinds(tmp_path, runner):
    cfg = _write(tmp_path, "a.ini", ARCSINE_INI)
    for kind in ("diagonal", "modified"):
        res = runner.invoke(main, ["pade", cfg, "--kind", kind,
                                   "--at", "2"])
        assert res.exit_code == 0, res.output
        assert f"kind: {kind}" in res.output
        assert "value at 2" in res.output


def test_converge_command_pass_and_fail(tmp_path, runner):
    cfg = _write(tmp_path, "a.ini", ARCSINE_INI)
    res = runner.invoke(main, ["converge", cfg, "--depth", "12",
                               "--grid", "2, -3", "--tol", "1e-8"])
    assert res.exit_code == 0, res.output
    assert "PASS" in res.output
    res = runner.invoke(main, ["converge", cfg, "--depth", "3",
                               "--grid", "2", "--tol", "1e-40"])
    assert res.exit_code == 1
    assert "FAIL" in res.output


def test_gap_command_from_config_and_flags(tmp_path, runner):
    cfg = _write(tmp_path, "g.ini", GAP_INI)
    res = runner.invoke(main, ["gap", "--config", cfg])
    assert res.exit_code == 0, res.output
    assert "omega(infinity)" in res.output
    res = runner.invoke(main, ["gap", "--alpha", "-1/2", "--beta", "1/2"])
    assert res.exit_code == 0, res.output
    assert "rational" in res.output
    res = runner.invoke(main, ["gap"])
    assert res.exit_code != 0


def test_scenario_list_and_run(tmp_path, runner):
    res = runner.invoke(main, ["scenario", "list"])
    assert res.exit_code == 0
    assert "markov-arcsine" in res.output
    out = tmp_path / "reports"
    res = runner.invoke(main, ["scenario", "run", "atom-pair",
                               "--out", str(out), "--format", "json"])
    assert res.exit_code == 0, res.output
    assert "[ok]" in res.output
    assert (out / "atom-pair.json").exists()


def test_scenario_run_unknown_name(runner):
    res = runner.invoke(main, ["scenario", "run", "nope"])
    assert res.exit_code != 0


def test_precision_flag_applies(tmp_path, runner):
    cfg = _write(tmp_path, "a.ini", ARCSINE_INI)
    res = runner.invoke(main, ["--precision-bits", "128",
                               "moments", cfg, "--count", "3"])
    assert res.exit_code == 0, res.output
