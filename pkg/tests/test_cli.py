import json

import numpy as np
import pytest

import invariant_states as iv
from invariant_states import formats
from invariant_states.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- build ------------------------------------------------------------------


def test_build_writes_descriptor(tmp_path, capsys):
    out = tmp_path / "w.json"
    code, _, _ = run(capsys, "build", "--d", "2", "--K", "1", "--sigma", "0",
                     "--fid", "0.5,0.5", "--out", str(out))
    assert code == 0
    data = json.loads(out.read_text())
    assert data == {"K": 1, "d": 2, "fidelities": [0.5, 0.5], "sigma": [0], "version": 1}


def test_build_vertex_to_stdout(capsys):
    code, out, _ = run(capsys, "build", "--d", "2", "--K", "2", "--sigma", "00",
                       "--vertex", "11")
    assert code == 0
    assert json.loads(out)["fidelities"] == [0, 0, 0, 1]


def test_build_rejects_bad_simplex_point(capsys):
    code, _, err = run(capsys, "build", "--d", "2", "--K", "1", "--sigma", "0",
                       "--fid", "0.6,0.6")
    assert code == 2
    assert "fidelities must sum to 1" in err


def test_build_sigma_length_mismatch(capsys):
    code, _, err = run(capsys, "build", "--d", "2", "--K", "2", "--sigma", "0",
                       "--fid", "0.25,0.25,0.25,0.25")
    assert code == 2 and "--sigma" in err


def test_build_dense_writes_matrix(tmp_path, capsys):
    out = tmp_path / "q.json"
    code, _, _ = run(capsys, "build", "--d", "2", "--K", "2", "--sigma", "00",
                     "--fid", "0.4,0.3,0.3,0.0", "--out", str(out), "--dense")
    assert code == 0
    op = formats.qopb_decode((tmp_path / "q.qopb").read_bytes())
    desc = formats.parse_descriptor(out.read_text())
    assert iv.frobenius_distance(op, iv.synthesize(desc)) <= 1e-12


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["build", "--d", "2"])
    assert exc.value.code == 2


# --- twirl ------------------------------------------------------------------


@pytest.fixture
def basis_state_file(tmp_path):
    rho = iv.projector_onto(2, iv.basis_ket(2, "01"))
    path = tmp_path / "rho.qopb"
    path.write_bytes(formats.qopb_encode(rho))
    return path


def test_twirl_exact(basis_state_file, capsys):
    code, out, _ = run(capsys, "twirl", "--in", str(basis_state_file), "--sigma", "0")
    assert code == 0
    assert json.loads(out)["fidelities"] == [0.5, 0.5]


def test_twirl_mc(basis_state_file, tmp_path, capsys):
    out_path = tmp_path / "mc.qopb"
    code, out, _ = run(capsys, "twirl", "--in", str(basis_state_file), "--sigma", "0",
                       "--mc", "5000", "--seed", "7", "--out", str(out_path))
    assert code == 0
    report = json.loads(out)
    assert report["samples"] == 5000 and report["seed"] == 7
    assert report["frobenius_distance"] <= 0.05
    estimate = formats.qopb_decode(out_path.read_bytes())
    assert abs(estimate.trace() - 1.0) <= 1e-12


def test_twirl_of_invariant_state_round_trips(tmp_path, capsys):
    desc = iv.StateDescriptor(2, (0, 1), [0.1, 0.2, 0.3, 0.4])
    path = tmp_path / "inv.qopb"
    path.write_bytes(formats.qopb_encode(iv.synthesize(desc)))
    code, out, _ = run(capsys, "twirl", "--in", str(path), "--sigma", "01")
    assert code == 0
    back = formats.parse_descriptor(out)
    np.testing.assert_allclose(back.fidelities, desc.fidelities, atol=1e-12)
    # the emitted JSON is canonical: parsing and re-emitting is the identity
    assert formats.dumps_descriptor(back) == out


def test_twirl_shape_mismatch(basis_state_file, capsys):
    code, _, err = run(capsys, "twirl", "--in", str(basis_state_file), "--sigma", "01")
    assert code == 2 and "pairs" in err


def test_twirl_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "twirl", "--in", str(tmp_path / "none.qopb"), "--sigma", "0")
    assert code == 2


# --- check ------------------------------------------------------------------


@pytest.fixture
def disagreement_file(tmp_path):
    desc = iv.StateDescriptor(2, (0, 0), [0.4, 0.3, 0.3, 0.0])
    path = tmp_path / "q.json"
    path.write_text(formats.dumps_descriptor(desc))
    return path


def test_check_polytope_vs_ppt(disagreement_file, capsys):
    code, out, _ = run(capsys, "check", "--in", str(disagreement_file),
                       "--criterion", "polytope")
    assert code == 0 and json.loads(out)["outcome"] == "satisfied"
    code, out, _ = run(capsys, "check", "--in", str(disagreement_file),
                       "--criterion", "ppt:11")
    assert code == 0 and json.loads(out)["outcome"] == "violated"


def test_check_strict_exit_code(disagreement_file, capsys):
    code, out, _ = run(capsys, "check", "--in", str(disagreement_file),
                       "--criterion", "ppt:11", "--strict")
    assert code == 1 and json.loads(out)["outcome"] == "violated"
    code, _, _ = run(capsys, "check", "--in", str(disagreement_file),
                     "--criterion", "polytope", "--strict")
    assert code == 0


def test_check_bisep_vs_ppt_all(tmp_path, capsys):
    desc = iv.StateDescriptor(2, (0, 0), [0.75, 0.0, 0.0, 0.25])
    path = tmp_path / "b.json"
    path.write_text(formats.dumps_descriptor(desc))
    code, out, _ = run(capsys, "check", "--in", str(path), "--criterion", "bisep")
    assert code == 0 and json.loads(out)["outcome"] == "satisfied"
    code, out, _ = run(capsys, "check", "--in", str(path), "--criterion", "ppt-all")
    assert code == 0 and json.loads(out)["outcome"] == "violated"


def test_check_every_criterion_on_separable_vertex(tmp_path, capsys):
    desc = iv.StateDescriptor(2, (0,), [1.0, 0.0])
    path = tmp_path / "v.json"
    path.write_text(formats.dumps_descriptor(desc))
    for criterion in ("ppt:1", "ppt-all", "polytope", "bisep"):
        code, out, _ = run(capsys, "check", "--in", str(path),
                           "--criterion", criterion, "--strict")
        assert code == 0 and json.loads(out)["outcome"] == "satisfied"


def test_check_unknown_criterion(disagreement_file, capsys):
    code, _, err = run(capsys, "check", "--in", str(disagreement_file),
                       "--criterion", "magic")
    assert code == 2 and "unknown criterion" in err


def test_check_malformed_descriptor(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{}")
    code, _, _ = run(capsys, "check", "--in", str(path), "--criterion", "polytope")
    assert code == 2


# --- reduce -----------------------------------------------------------------


def test_reduce_pair_cli(tmp_path, capsys):
    desc = iv.StateDescriptor(2, (0, 1), [0.1, 0.2, 0.3, 0.4])
    path = tmp_path / "d.json"
    path.write_text(formats.dumps_descriptor(desc))
    code, out, _ = run(capsys, "reduce", "--in", str(path), "--pair", "1")
    assert code == 0
    data = json.loads(out)
    assert data["sigma"] == [1]
    np.testing.assert_allclose(data["fidelities"], [0.4, 0.6])

    code, out, _ = run(capsys, "reduce", "--in", str(path), "--mixed", "1,2")
    assert code == 0
    data = json.loads(out)
    assert data["sigma"] == [0]
    np.testing.assert_allclose(data["fidelities"], [0.75, 0.25])


def test_reduce_bad_mixed_argument(tmp_path, capsys):
    desc = iv.StateDescriptor(2, (0, 0), [0.25, 0.25, 0.25, 0.25])
    path = tmp_path / "d.json"
    path.write_text(formats.dumps_descriptor(desc))
    code, _, err = run(capsys, "reduce", "--in", str(path), "--mixed", "1")
    assert code == 2


# --- verify -----------------------------------------------------------------


def test_verify_quick_passes_and_is_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--level", "quick")
    code2, out2, _ = run(capsys, "verify", "--level", "quick")
    assert code1 == code2 == 0
    assert out1 == out2
    lines = out1.strip().splitlines()
    assert all(line.startswith("PASS ") for line in lines[:-1])
    assert lines[-1] == "6/6 checks passed"


def test_verify_reports_every_named_check(capsys):
    _, out, _ = run(capsys, "verify", "--level", "quick")
    for name in ("transfer-inverse", "flip-partial-transpose", "trace-formulas",
                 "pair-thresholds", "criterion-disagreement", "biseparable-construction"):
        assert f"PASS {name}" in out


# --- pipeline round trip -------------------------------------------------------


def test_build_twirl_check_pipeline_stable(tmp_path, capsys):
    """build -> dense -> exact twirl recovers the point; the descriptor
    bytes are stable under every parse/re-emit step of the pipeline."""
    out = tmp_path / "s.json"
    code, _, _ = run(capsys, "build", "--d", "3", "--K", "2", "--sigma", "10",
                     "--fid", "0.5,0.2,0.2,0.1", "--out", str(out), "--dense")
    assert code == 0
    original = out.read_text()
    assert formats.dumps_descriptor(formats.parse_descriptor(original)) == original

    code, twirled, _ = run(capsys, "twirl", "--in", str(tmp_path / "s.qopb"),
                           "--sigma", "10")
    assert code == 0
    back = formats.parse_descriptor(twirled)
    np.testing.assert_allclose(back.fidelities, [0.5, 0.2, 0.2, 0.1], atol=1e-12)
    assert formats.dumps_descriptor(back) == twirled
