"""CLI subcommands, exit codes and emitted artifacts."""

import json

import pytest

from harmdist.cli import (
    EXIT_CONFIG,
    EXIT_HYPOTHESIS,
    EXIT_OK,
    EXIT_VIOLATIONS,
    main,
)

PAIRS = ["--pairs", "400"]


def test_catalog_lists_maps(capsys):
    assert main(["catalog"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    names = {e["name"] for e in data}
    assert {"identity", "koebe", "halfplane", "shear-identity-0.3z"} <= names


def test_analyze_writes_report(tmp_path, capsys):
    code = main(["analyze", "--map", "shear-identity-0.3z",
                 "--grid", "16,48", "--out", str(tmp_path)])
    assert code == EXIT_OK
    report = json.loads((tmp_path / "analyze.json").read_text())
    assert report["map"] == "shear(identity,0.3z)"
    assert {"norms", "order", "criteria", "pointwise"} <= set(report)
    crits = {c["criterion"] for c in report["criteria"]}
    assert "becker_harmonic" in crits and "theorem_d" in crits


def test_verify_ok_exit_and_artifacts(tmp_path, capsys):
    code = main(["verify", "--bound", "dhk", "--map", "shear-identity-0.3z",
                 "--out", str(tmp_path), *PAIRS])
    assert code == EXIT_OK
    for strategy in ("uniform-in-disc", "boundary-biased", "near-diagonal"):
        assert (tmp_path / f"dhk-{strategy}.json").exists()
        assert (tmp_path / f"dhk-{strategy}.csv").exists()
    rep = json.loads((tmp_path / "dhk-uniform-in-disc.json").read_text())
    assert rep["violations"] == 0 and rep["pairs"] == 400


def test_verify_violations_exit(tmp_path):
    # the exact-identity check on a genuine shear cannot hold
    code = main(["verify", "--bound", "mobius_exact", "--map", "shear-halfplane-0.4z",
                 "--out", str(tmp_path), *PAIRS])
    assert code == EXIT_VIOLATIONS


def test_verify_hypothesis_exit_and_override(tmp_path):
    args = ["verify", "--bound", "becker_analytic", "--map", "halfplane",
            "--out", str(tmp_path), *PAIRS]
    assert main(args) == EXIT_HYPOTHESIS
    assert main(args + ["--allow-unmet"]) == EXIT_OK  # gated: nothing scored


def test_config_errors(tmp_path, capsys):
    assert main(["verify", "--bound", "dhk", "--map", "no-such-map"]) == EXIT_CONFIG
    assert main(["verify", "--bound", "nope", "--map", "identity"]) == EXIT_CONFIG
    assert main(["analyze", "--map", "identity", "--grid", "x,y"]) == EXIT_CONFIG
    assert main(["frobnicate"]) == EXIT_CONFIG
    capsys.readouterr()


def test_verify_descriptor_map(tmp_path):
    desc = tmp_path / "m.json"
    desc.write_text(json.dumps({"h": {"name": "identity"}, "omega": {"expr": "0.3z"}}))
    code = main(["verify", "--bound", "becker_harmonic", "--map", str(desc),
                 "--out", str(tmp_path), *PAIRS])
    assert code == EXIT_OK


def test_verify_deterministic_bytes(tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    for out in (out1, out2):
        code = main(["verify", "--bound", "nehari_harmonic",
                     "--map", "harmonic-mobius-identity-0.3",
                     "--seed", "11", "--out", str(out), *PAIRS])
        assert code == EXIT_OK
    for strategy in ("uniform-in-disc", "boundary-biased", "near-diagonal"):
        name = f"nehari_harmonic-{strategy}.json"
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


def test_plot_emits_svg_and_csv(tmp_path):
    code = main(["plot", "--map", "koebe", "--bound", "dhk",
                 "--out", str(tmp_path), *PAIRS])
    assert code == EXIT_OK
    svg = (tmp_path / "image.svg").read_text()
    assert svg.startswith("<svg") and "polyline" in svg
    assert (tmp_path / "image.csv").exists()
    scatter = (tmp_path / "dhk-margins.csv").read_text().splitlines()
    assert scatter[0] == "rho,lower_margin,upper_margin"
    assert len(scatter) == 401


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
