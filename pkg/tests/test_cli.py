import json
import shutil

import pytest

from grouptype.cli import build_parser, main


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("GROUPTYPE_DATA", raising=False)
    monkeypatch.delenv("GROUPTYPE_CONFIG", raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def broken_data(tmp_path, data_dir):
    """Data directory whose s3.grp lost its last generator."""
    target = tmp_path / "broken"
    shutil.copytree(data_dir, target)
    path = target / "s3.grp"
    lines = path.read_text().splitlines()
    last_gen = max(i for i, line in enumerate(lines) if line.startswith("gen"))
    path.write_text("\n".join(lines[:last_gen] + lines[last_gen + 1:]) + "\n")
    return target


def test_verify_text(capsys, data_dir):
    code, out = run(capsys, "verify", "--data", str(data_dir))
    assert code == 0
    assert "|G| = 227598336, |H| = 227598336" in out
    assert "exp(G) = 168, exp(H) = 168" in out
    assert "G solvable: yes, H solvable: no" in out
    assert "result: order types agree; G is solvable and H is not" in out


def test_verify_json_is_stable_and_matches_text(capsys, data_dir):
    code, first = run(capsys, "verify", "--json", "--data", str(data_dir))
    assert code == 0
    _, second = run(capsys, "verify", "--json", "--data", str(data_dir))
    assert first == second

    report = json.loads(first)
    assert report["success"] is True
    assert report["conclusion"] is True
    assert report["order_types_equal"] is True
    assert report["divisors"] == [1, 2, 3, 4, 6, 7, 8, 12, 14, 21, 24, 28, 42, 56, 84, 168]
    assert report["first_failing_divisor"] is None
    assert [f["label"] for f in report["left_factors"]] == ["S1", "S2", "S3"]
    assert [f["solvable"] for f in report["right_factors"]] == [True, True, True, False]
    assert report["right_factors"][3]["derived_series"] == [336, 168, 168]

    _, text = run(capsys, "verify", "--data", str(data_dir))
    for row in report["per_divisor"]:
        assert row["left_product"] == row["right_product"]
        assert str(row["left_product"]) in text


def test_verify_rejects_broken_data(capsys, broken_data):
    code, out = run(capsys, "verify", "--data", str(broken_data))
    assert code == 2
    assert out == ""


def test_verify_with_skipped_fingerprints_names_first_failure(capsys, broken_data):
    code, out = run(capsys, "verify", "--skip-fingerprints", "--json", "--data", str(broken_data))
    assert code == 1
    report = json.loads(out)
    assert report["success"] is False
    assert report["first_failing_divisor"] in report["divisors"]
    assert report["left_order"] != report["right_order"]


def test_verify_text_with_skipped_fingerprints(capsys, broken_data):
    code, out = run(capsys, "verify", "--skip-fingerprints", "--data", str(broken_data))
    assert code == 1
    assert "first failing divisor:" in out


def test_spectrum_of_c12(capsys):
    code, out = run(capsys, "spectrum", "c12", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["order"] == 12
    assert report["order_type"] == {"1": 1, "2": 1, "3": 2, "4": 2, "6": 2, "12": 4}
    assert report["exponent_type"]["12"] == 12
    assert bytes.fromhex(report["fingerprint"]) == b"E|12|1:1,2:2,3:3,4:4,6:6,12:12"


def test_spectrum_of_pgl2_7(capsys):
    code, out = run(capsys, "spectrum", "pgl2_7")
    assert code == 0
    assert "order 336, exponent 168" in out
    assert "solvable: no" in out


def test_spectrum_of_a_generator_file(capsys, data_dir):
    code, out = run(capsys, "spectrum", str(data_dir / "s1.grp"), "--json")
    assert code == 0
    report = json.loads(out)
    assert report["order"] == 168
    assert report["group_id"] == "(168, 43)"
    assert report["degree"] == 8


def test_spectrum_of_unknown_target(capsys):
    code, out = run(capsys, "spectrum", "x9")
    assert code == 2
    assert out == ""


@pytest.mark.parametrize("target", ["c0", "d7", "q10", "q4", "a9", "pgl2_37", "pgl2_9"])
def test_spectrum_of_invalid_builtin_parameter(capsys, target):
    code, out = run(capsys, "spectrum", target)
    assert code == 2
    assert out == ""


def test_spectrum_catalog_group_uses_data_env(capsys, monkeypatch, data_dir):
    monkeypatch.setenv("GROUPTYPE_DATA", str(data_dir))
    code, out = run(capsys, "spectrum", "s1", "--json")
    assert code == 0
    assert json.loads(out)["order"] == 168


def test_compare_equal_products(capsys):
    code, out = run(capsys, "compare", "--left", "c2", "c3", "--right", "c6", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["equal"] is True
    assert report["left_order"] == report["right_order"] == 6


def test_compare_different_products(capsys):
    code, out = run(capsys, "compare", "--left", "c4", "--right", "c2", "c2")
    assert code == 1
    assert "differ at divisor 2" in out


def test_compare_catalog_factors(capsys, data_dir):
    code, out = run(
        capsys, "compare", "--left", "s1", "s2", "s3", "--right", "s4", "s5", "s6", "s7",
        "--json", "--data", str(data_dir),
    )
    assert code == 0
    report = json.loads(out)
    assert report["left_solvable"] is True
    assert report["right_solvable"] is False
    assert report["modulus"] == 168


def test_compare_overflow(capsys):
    code, out = run(capsys, "compare", "--left", *(["c2"] * 64), "--right", "c2")
    assert code == 3
    assert out == ""


def test_collide_finds_isomorphic_presentations(capsys, tmp_path):
    path = tmp_path / "c2xc3.grp"
    path.write_text("degree 5\ngen (1 2)\ngen (3 4 5)\n")
    code, out = run(capsys, "collide", "c6", str(path), "--json")
    assert code == 0
    report = json.loads(out)
    assert len(report["collisions"]) == 1
    assert report["collisions"][0]["members"] == ["c6", str(path)]
    assert report["collisions"][0]["mixed_solvability"] is False


def test_collide_without_collisions(capsys):
    code, out = run(capsys, "collide", "c4", "q8", "d8", "--json")
    assert code == 0
    assert json.loads(out)["collisions"] == []


def test_collide_needs_two_targets(capsys):
    code, _ = run(capsys, "collide", "c4")
    assert code == 2


def test_catalog_listing(capsys, data_dir):
    code, out = run(capsys, "catalog", "--data", str(data_dir), "--json")
    assert code == 0
    report = json.loads(out)
    assert [e["label"] for e in report["entries"]] == ["S1", "S2", "S3", "S4", "S5", "S6", "S7"]
    assert all(e["fingerprint_ok"] for e in report["entries"])
    assert [e["solvable"] for e in report["entries"]] == [True] * 6 + [False]


def test_catalog_listing_flags_broken_data(capsys, broken_data):
    code, out = run(capsys, "catalog", "--data", str(broken_data), "--json")
    assert code == 2
    rows = {e["label"]: e for e in json.loads(out)["entries"]}
    assert rows["S3"]["fingerprint_ok"] is False
    assert rows["S1"]["fingerprint_ok"] is True


def test_export_and_read_back(capsys, tmp_path):
    code, _ = run(capsys, "export", "pgl2_5", "pgl2_5.grp")
    assert code == 0
    assert (tmp_path / "pgl2_5.grp").read_text().startswith("# pgl2_5: order 120")
    code, out = run(capsys, "spectrum", "pgl2_5.grp", "--json")
    assert code == 0
    assert json.loads(out)["order"] == 120


def test_export_rejects_non_permutation_groups(capsys):
    code, _ = run(capsys, "export", "q8", "q8.grp")
    assert code == 1


def test_malformed_config(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code = main(["spectrum", "c2", "--config", str(path)])
    captured = capsys.readouterr()
    assert code == 2
    assert "grouptype:" in captured.err


def test_invalid_config_values(capsys, tmp_path, monkeypatch):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"enumeration": {"cap": 0}}))
    monkeypatch.setenv("GROUPTYPE_CONFIG", str(path))
    assert main(["spectrum", "c2"]) == 2


def test_cap_flag_is_applied(capsys, data_dir):
    code, _ = run(capsys, "spectrum", str(data_dir / "s2.grp"), "--cap", "500")
    assert code == 1


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


@pytest.mark.parametrize("cap", ["0", "-5", "many"])
def test_cap_flag_rejects_non_positive_values(cap):
    with pytest.raises(SystemExit) as excinfo:
        main(["spectrum", "c2", "--cap", cap])
    assert excinfo.value.code == 2
