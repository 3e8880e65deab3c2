import os
import xml.etree.ElementTree as ET

import pytest

from minvan.cli import BOOTSTRAP_FIXTURE, main
from minvan.store import load_db

from helpers import WEIGHT21_TYPE_TEXT


@pytest.fixture(scope="module")
def db_path(tmp_path_factory):
    path = str(tmp_path_factory.mktemp("cli") / "minvan.db")
    assert main(["bootstrap", "--db", path]) == 0
    return path


def test_bootstrap_creates_21_records(db_path):
    db = load_db(db_path)
    assert len(db.records) == 21
    assert db.max_complete_weight == 12


def test_bootstrap_idempotent(db_path, capsys):
    assert main(["bootstrap", "--db", db_path]) == 0
    assert load_db(db_path).max_complete_weight == 12


def test_bootstrap_fixture_tamper_detected(tmp_path, monkeypatch):
    import minvan.cli as cli

    tampered = dict(BOOTSTRAP_FIXTURE)
    tampered[12] = frozenset(set(tampered[12]) - {next(iter(tampered[12]))})
    monkeypatch.setattr(cli, "BOOTSTRAP_FIXTURE", tampered)
    with pytest.raises(SystemExit, match="mismatch"):
        main(["bootstrap", "--db", str(tmp_path / "x.db")])


def test_extend_to_13(db_path, capsys):
    assert main(["extend", "--db", db_path, "--to", "13"]) == 0
    out = capsys.readouterr().out
    assert "weight 13: 8 types" in out
    db = load_db(db_path)
    assert db.max_complete_weight == 13
    assert len(db.records) == 29
    assert os.path.exists(db_path + ".cache")


def test_extend_gap_rejected(tmp_path):
    with pytest.raises(SystemExit):
        main(["extend", "--db", str(tmp_path / "none.db"), "--to", "13"])


def test_verify_minimal(capsys):
    assert main(["verify", "1:0+2:1"]) == 0
    out = capsys.readouterr().out
    assert "vanishing: True" in out
    assert "minimal: True" in out
    assert "type: (R2;1:0)" in out


def test_verify_weight21(capsys):
    from minvan.sorou import render_sorou

    from helpers import weight21_height2_sorou

    assert main(["verify", render_sorou(weight21_height2_sorou())]) == 0
    out = capsys.readouterr().out
    assert "weight: 21" in out
    assert "height: 2" in out
    assert f"type: {WEIGHT21_TYPE_TEXT}" in out


def test_verify_non_vanishing_exit_code(capsys):
    assert main(["verify", "1:0+3:1"]) == 1
    assert "minimal: False (not-vanishing)" in capsys.readouterr().out


def test_verify_parse_error_exit_code(capsys):
    assert main(["verify", "nonsense"]) == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["extend"])  # --to is required
    assert err.value.code == 2


def test_enumerate_command(db_path, capsys):
    assert main(["enumerate", "(R5;1:0;(R3;1:0))", "--db", db_path]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 1
    from minvan.sorou import parity, parse_sorou

    assert all(parity(parse_sorou(line)) == (4, 2) for line in out)


def test_report_csv_stdout(db_path, capsys):
    assert main(["report", "--db", db_path, "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("Weight,\tTop Prime")
    assert "6,\t5,\t30,\t(2;1;1;1;1),\t(R_5:R_3),\t1,\t(4;2),\tFalse" in out


def test_report_latex_out_file(db_path, tmp_path, capsys):
    out_path = str(tmp_path / "table.tex")
    assert main(["report", "--db", db_path, "--format", "latex", "--out", out_path]) == 0
    with open(out_path) as fh:
        assert "\\begin{longtable}" in fh.read()


def test_phi_command(capsys):
    assert main(["phi", "6"]) == 0
    assert capsys.readouterr().out == "1, -1, 1\n"
    assert main(["phi", "105"]) == 0
    out = capsys.readouterr().out
    assert "coefficient -2 at x^7" in out
    assert "coefficient -2 at x^41" in out


def test_plot_command(tmp_path, capsys):
    out_path = str(tmp_path / "plot.svg")
    doubled = "2:1+2:1+3:1+3:2+5:1"
    assert main(["plot", doubled, "--out", out_path]) == 0
    tree = ET.parse(out_path)  # well-formed XML
    root = tree.getroot()
    assert root.tag.endswith("svg")
    circles = [el for el in root.iter() if el.tag.endswith("circle")]
    assert len(circles) >= 6  # dashed rings + stacked term dots


def test_env_var_default_db(db_path, monkeypatch, capsys):
    monkeypatch.setenv("MINVAN_DB", db_path)
    assert main(["report", "--format", "csv"]) == 0
    assert "R_2" in capsys.readouterr().out


def test_verify_agrees_with_stored_statistics(db16, capsys):
    from minvan.sorou import height, parity, render_sorou, weight
    from minvan.types import representative_sorou

    for record in db16.records:
        rep = representative_sorou(record.type)
        assert main(["verify", render_sorou(rep)]) == 0
        out = capsys.readouterr().out
        assert f"weight: {record.weight}" in out
        assert f"top prime: {record.top_prime}" in out
        a, b = parity(rep)
        assert (a, b) in record.parities
        assert height(rep) in record.heights
