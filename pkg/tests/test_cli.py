"""Command line behavior: output shapes, exit codes, config merging."""

import json

import pytest

from qgl11.cli import main


def test_nf_prints_normal_form(capsys):
    rc = main(["nf", "E[0]*F[0]"])
    out = capsys.readouterr().out.strip()
    assert rc == 0
    assert out == ("(q^2 - 1)/(q)*k1^-1*k2 - (q^2 - 1)/(q)*k1*k2^-1"
                   " - F[0]*E[0]")


def test_nf_parse_error_exits_2(capsys):
    rc = main(["nf", "h[0]"])
    err = capsys.readouterr().err
    assert rc == 2
    assert "parse error" in err


def test_coproduct_primitive(capsys):
    rc = main(["coproduct", "C[1]"])
    out = capsys.readouterr().out.strip()
    assert rc == 0
    assert out == "1 # C[1] + C[1] # 1"


def test_coproduct_flip(capsys):
    main(["coproduct", "C[1]", "--cop"])
    flipped = capsys.readouterr().out.strip()
    assert flipped == "1 # C[1] + C[1] # 1"
    main(["coproduct", "E[0]"])
    plain = capsys.readouterr().out.strip()
    main(["coproduct", "E[0]", "--cop"])
    cop = capsys.readouterr().out.strip()
    assert plain != cop


def test_coproduct_z_graded(capsys):
    rc = main(["coproduct", "E[0]", "--z", "--order", "2"])
    out = capsys.readouterr().out
    assert rc == 0
    lines = [ln for ln in out.splitlines() if ln.strip()]
    assert lines[0].startswith("z^0:")
    assert all(":" in ln for ln in lines)


def test_coproduct_rejects_tensor_input(capsys):
    rc = main(["coproduct", "E[0] # F[0]"])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_pair_oracle_and_closed_agree(capsys):
    rc = main(["pair", "E[0]", "F[0]"])
    oracle = capsys.readouterr().out.strip()
    assert rc == 0
    rc = main(["pair", "--closed", "E[0]", "F[0]"])
    closed = capsys.readouterr().out.strip()
    assert rc == 0
    assert oracle == closed == "(q^2 - 1)/(q)"


def test_pair_q_specialization(capsys):
    rc = main(["--q", "3", "pair", "E[0]", "F[0]"])
    out = capsys.readouterr().out.strip()
    assert rc == 0
    assert out == "8/3"


def test_rmatrix_leading_block(capsys):
    rc = main(["rmatrix", "--left", "rho", "--right", "rho", "--order", "0"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "z^0:" in out
    assert "[1/(q^2), 0, 0, 0]" in out


def test_rmatrix_coupled_prefactor_note(capsys):
    rc = main(["rmatrix", "--left", "pi_cd:2,3", "--right", "pi_cd:3,5",
               "--order", "0"])
    captured = capsys.readouterr()
    assert rc == 0
    assert "projective factor" in captured.err


def test_verify_json_report(capsys):
    rc = main(["verify", "--suite", "braid"])
    out = capsys.readouterr().out
    assert rc == 0
    doc = json.loads(out)
    assert doc["suite"] == "braid"
    assert set(doc) == {"suite", "order", "params", "checks", "elapsed_ms"}
    assert all(c["status"] == "pass" for c in doc["checks"])
    assert all(c["witness"] is None for c in doc["checks"])


def test_verify_text_format(capsys):
    rc = main(["verify", "--suite", "braid", "--format", "text"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.startswith("suite braid")
    assert "PASS" in out and "checks passed" in out


def test_verify_report_stable_across_runs(capsys):
    main(["verify", "--suite", "drinfeld-coproduct", "--seed", "5"])
    doc1 = json.loads(capsys.readouterr().out)
    main(["verify", "--suite", "drinfeld-coproduct", "--seed", "5"])
    doc2 = json.loads(capsys.readouterr().out)
    for doc in (doc1, doc2):
        doc.pop("elapsed_ms")
    assert doc1 == doc2


def test_verify_requires_suite():
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_config_presets_and_flag_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"suite": "braid", "seed": 7, "format": "text"}))
    rc = main(["--config", str(cfg), "verify"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.startswith("suite braid")
    rc = main(["--config", str(cfg), "verify", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert doc["params"]["seed"] == 7


def test_failing_suite_exits_1(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"params": {"signed": False}}))
    rc = main(["--config", str(cfg), "verify", "--suite", "braid"])
    doc = json.loads(capsys.readouterr().out)
    assert rc == 1
    assert any(c["status"] == "fail" for c in doc["checks"])


def test_report_out_file(tmp_path, capsys):
    dest = tmp_path / "report.json"
    rc = main(["verify", "--suite", "braid", "--out", str(dest)])
    assert rc == 0
    assert capsys.readouterr().out == ""
    doc = json.loads(dest.read_text())
    assert doc["suite"] == "braid"


def test_transfer_command(capsys):
    rc = main(["transfer", "--chain", "(2,3)", "--order", "3",
               "--format", "text"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.startswith("suite transfer")
    assert "FAIL" not in out


def test_baxter_command(capsys):
    rc = main(["baxter", "--chain", "(2,3)", "--order", "4",
               "--format", "text"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "FAIL" not in out and "checks passed" in out


def test_unknown_representation_errors(capsys):
    rc = main(["rmatrix", "--left", "nope", "--right", "rho", "--order", "0"])
    assert rc == 2
    assert "unknown representation" in capsys.readouterr().err
