"""End-to-end command line behaviour, driven in process through main()."""

import json

import pytest

from wqhopf.catalog import builtin
from wqhopf.cli import RunConfig, UsageError, main
from wqhopf.files import category_to_json, load_json, save_json

MACHINE_KEYS = {"id", "status", "worst_deviation", "witness_indices"}


def machine_lines(capsys):
    out = capsys.readouterr().out
    return [json.loads(line) for line in out.splitlines() if line]


def test_verify_builtin_passes(capsys):
    assert main(["verify", "--builtin", "fibonacci"]) == 0
    out = capsys.readouterr().out
    assert "OK:" in out and "category: fibonacci" in out


def test_verify_file_roundtrip(tmp_path, capsys):
    path = tmp_path / "fib.json"
    save_json(str(path), category_to_json(builtin("fibonacci").category))
    assert main(["verify", str(path), "--report", "machine"]) == 0
    rows = machine_lines(capsys)
    assert rows and all(set(r) == MACHINE_KEYS for r in rows)
    assert all(r["status"] == "pass" for r in rows)


def test_verify_detects_broken_data(tmp_path, capsys):
    obj = category_to_json(builtin("fibonacci").category)
    for entry in obj["F"]:
        if entry["labels"] == ["tau", "tau", "tau", "tau"]:
            entry["matrix"][0][0] = {"conductor": 1, "coeffs": ["1"]}
    path = tmp_path / "bad.json"
    save_json(str(path), obj)
    assert main(["verify", str(path)]) == 1
    assert "VIOLATIONS" in capsys.readouterr().out


def test_malformed_json_is_input_error(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    assert main(["verify", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_builtin_is_input_error(capsys):
    assert main(["verify", "--builtin", "nosuch"]) == 2
    assert main(["verify", "--builtin", "vec_zn"]) == 2  # missing --n


def test_builtin_and_path_are_exclusive(tmp_path, capsys):
    path = tmp_path / "x.json"
    save_json(str(path), category_to_json(builtin("svec").category))
    assert main(["verify", str(path), "--builtin", "svec"]) == 2
    assert main(["verify"]) == 2


def test_tolerance_backend_invariant(capsys):
    assert main(["verify", "--builtin", "svec", "--tol", "0.5"]) == 2
    assert main(["verify", "--builtin", "svec", "--backend", "approx",
                 "--tol", "0"]) == 2
    with pytest.raises(UsageError):
        RunConfig(command="verify", backend="approx", tolerance=0.0)


def test_missing_subcommand_exits_via_argparse():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_dims_minimal_output(capsys):
    assert main(["dims", "--builtin", "fibonacci", "--minimal", "4"]) == 0
    out = capsys.readouterr().out
    assert "D(tau) = 2" in out
    assert "objective = 5" in out
    assert "exact: no" in out


def test_dims_from_file_and_dump(tmp_path, capsys):
    dfile = tmp_path / "d.json"
    save_json(str(dfile), {"D": [1, 2], "exact": False})
    rfile = tmp_path / "dims.json"
    assert main(["dims", "--builtin", "fibonacci", "--dim", str(dfile),
                 "-o", str(rfile)]) == 0
    capsys.readouterr()
    obj = load_json(str(rfile))
    assert obj["objective"] == 5 and obj["D"] == [1, 2]


def test_dims_infeasible_bound(capsys):
    assert main(["dims", "--builtin", "fibonacci", "--minimal", "1"]) == 2


def test_reconstruct_check_hopf_round_trip(tmp_path, capsys):
    dump = tmp_path / "h.json"
    assert main(["reconstruct", "--builtin", "fibonacci", "--minimal", "4",
                 "--report", "machine", "-o", str(dump)]) == 0
    first = machine_lines(capsys)
    assert main(["check-hopf", str(dump), "--report", "machine"]) == 0
    second = machine_lines(capsys)
    assert first == second
    assert all(set(r) == MACHINE_KEYS for r in first)
    ids = [r["id"] for r in first]
    assert "blocks-match-dimension" in ids and "phi-pentagon" in ids


def test_check_hopf_rejects_tampered_provenance(tmp_path, capsys):
    dump = tmp_path / "h.json"
    assert main(["reconstruct", "--builtin", "vec_zn", "--n", "2", "--q", "1",
                 "-o", str(dump)]) == 0
    capsys.readouterr()
    obj = load_json(str(dump))
    obj["provenance"]["category_sha256"] = "0" * 64
    save_json(str(dump), obj)
    assert main(["check-hopf", str(dump)]) == 2
    assert "hash" in capsys.readouterr().err


def test_twist_command_and_dump(tmp_path, capsys):
    out = tmp_path / "t.json"
    assert main(["twist", "--builtin", "fibonacci", "--minimal", "4",
                 "--seeds", "canonical,7", "-o", str(out)]) == 0
    text = capsys.readouterr().out
    assert "twist canonical -> 7" in text
    obj = load_json(str(out))
    assert set(obj) == {"T", "T_inv", "report"}
    pairs = {tuple(e["pair"]) for e in obj["T"]}
    assert ("tau", "tau") in pairs


def test_twist_seed_parse_error(capsys):
    assert main(["twist", "--builtin", "svec", "--seeds", "canonical"]) == 2


def test_approx_backend_flow(tmp_path, capsys):
    assert main(["verify", "--builtin", "ising", "--backend", "approx"]) == 0
    dump = tmp_path / "ha.json"
    assert main(["reconstruct", "--builtin", "vec_zn", "--n", "3", "--q", "1",
                 "--backend", "approx", "-o", str(dump)]) == 0
    capsys.readouterr()
    assert main(["check-hopf", str(dump), "--backend", "approx",
                 "--report", "machine"]) == 0
    rows = machine_lines(capsys)
    assert rows and all(r["status"] == "pass" for r in rows)
    assert any(r["worst_deviation"] > 0 for r in rows)


def test_verify_report_dump(tmp_path, capsys):
    out = tmp_path / "rep.json"
    assert main(["verify", "--builtin", "svec", "-o", str(out)]) == 0
    capsys.readouterr()
    obj = load_json(str(out))
    assert isinstance(obj, list) and all(set(r) == MACHINE_KEYS for r in obj)
