"""CLI: exit codes, JSON payloads, determinism."""

import json

from fuchsian.cli import main
from fuchsian.model import (
    FuchsianInstance,
    instance_from_json_obj,
    instance_to_json_obj,
)
from fuchsian.scalars import GaussianRational


EXAMPLE_A = FuchsianInstance([(0, (0, -3)), (1, (0, 1))], (1, 2))
N2N1_BAD = FuchsianInstance([(0, (0, 1)), (1, (0, 1))], (-1, -1), [(2, 3)])
N2N1_GOOD = N2N1_BAD.with_momenta([GaussianRational(1)])
UNDER3 = FuchsianInstance([(0, (0, 1)), (1, (0, 1)), (2, (0, 2))], (-1, -1))


def _write_instance(path, instance):
    path.write_text(json.dumps(instance_to_json_obj(instance)), encoding="utf-8")


def test_construct_example_a(tmp_path, capsys):
    src = tmp_path / "a.json"
    _write_instance(src, EXAMPLE_A)
    assert main(["construct", "-i", str(src)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {
        "G": [["-4", "0"], ["4", "0"]],
        "H": [["0", "0"], ["-2", "0"], ["2", "0"]],
    }


def test_construct_verify_round_trip(tmp_path):
    src = tmp_path / "a.json"
    eq_path = tmp_path / "eq.json"
    rep_path = tmp_path / "rep.json"
    _write_instance(src, EXAMPLE_A)
    assert main(["construct", "-i", str(src), "-o", str(eq_path)]) == 0
    assert main(["verify", "-i", str(src), "-e", str(eq_path), "-o", str(rep_path)]) == 0
    report = json.loads(rep_path.read_text(encoding="utf-8"))
    assert report["overall"] is True


def test_verify_tampered_exits_3(tmp_path):
    src = tmp_path / "a.json"
    eq_path = tmp_path / "eq.json"
    _write_instance(src, EXAMPLE_A)
    main(["construct", "-i", str(src), "-o", str(eq_path)])
    payload = json.loads(eq_path.read_text(encoding="utf-8"))
    payload["H"][0] = ["1", "0"]
    bad_path = tmp_path / "tampered.json"
    bad_path.write_text(json.dumps(payload), encoding="utf-8")
    assert main(["verify", "-i", str(src), "-e", str(bad_path)]) == 3


def test_fuchs_violation_exits_2(tmp_path):
    bad = FuchsianInstance([(0, (0, -3)), (1, (0, 1))], (1, 1))
    src = tmp_path / "bad.json"
    _write_instance(src, bad)
    assert main(["construct", "-i", str(src)]) == 2


def test_over_case_routing(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    good = tmp_path / "good.json"
    _write_instance(bad, N2N1_BAD)
    _write_instance(good, N2N1_GOOD)
    assert main(["construct", "-i", str(bad)]) == 2
    assert main(["construct", "-i", str(good)]) == 0
    capsys.readouterr()


def test_under_case_defaults_to_zero_free_values(tmp_path, capsys):
    src = tmp_path / "under.json"
    _write_instance(src, UNDER3)
    assert main(["construct", "-i", str(src)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["H"][3] == ["0", "0"]  # pinned free coefficient


def test_analyze_payload(tmp_path, capsys):
    src = tmp_path / "over.json"
    _write_instance(src, N2N1_BAD)
    assert main(["analyze", "-i", str(src)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["case"] == "over"
    assert payload["constraint_count"] == 1
    assert payload["total_dimension"] == 0


def test_constraints_payload(tmp_path, capsys):
    src = tmp_path / "over.json"
    _write_instance(src, N2N1_BAD)
    assert main(["constraints", "-i", str(src)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["constraints"][0]["quad"] == {"1": ["-8", "0"]}
    assert payload["float_roots"][0]["j"] == 1
    assert payload["tolerance"] == 1e-9


def test_constraints_requires_over_case(tmp_path):
    src = tmp_path / "a.json"
    _write_instance(src, EXAMPLE_A)
    assert main(["constraints", "-i", str(src)]) == 1


def test_det_check(tmp_path, capsys):
    assert main(["det-check", "--n", "3", "--trials", "3", "--seed", "5"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ratio_constant"] is True
    assert payload["nonzero"] is True
    assert len(payload["results"]) == 3
    assert main(["det-check", "--n", "1"]) == 1


def test_gen_deterministic_and_constructible(tmp_path, capsys):
    assert main(["gen", "--n", "3", "--seed", "7"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--n", "3", "--seed", "7"]) == 0
    second = capsys.readouterr().out
    assert first == second
    src = tmp_path / "gen.json"
    src.write_text(first, encoding="utf-8")
    instance = instance_from_json_obj(json.loads(first))
    assert instance.n == 3
    assert main(["construct", "-i", str(src), "-o", str(tmp_path / "eq.json")]) == 0


def test_gen_rejects_small_n():
    assert main(["gen", "--n", "1"]) == 1


def test_construct_output_byte_stable(tmp_path):
    src = tmp_path / "a.json"
    _write_instance(src, EXAMPLE_A)
    out1 = tmp_path / "one.json"
    out2 = tmp_path / "two.json"
    assert main(["construct", "-i", str(src), "-o", str(out1)]) == 0
    assert main(["construct", "-i", str(src), "-o", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_malformed_inputs(tmp_path):
    missing = tmp_path / "missing.json"
    assert main(["construct", "-i", str(missing)]) == 1
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{not json", encoding="utf-8")
    assert main(["construct", "-i", str(garbled)]) == 1
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"finite_points": "nope"}), encoding="utf-8")
    assert main(["construct", "-i", str(wrong)]) == 1
    assert main(["construct"]) == 1  # --input required
    src = tmp_path / "a.json"
    _write_instance(src, EXAMPLE_A)
    assert main(["verify", "-i", str(src)]) == 1  # --equation required
    assert main(["bogus-subcommand"]) == 1


def test_text_format(tmp_path, capsys):
    src = tmp_path / "a.json"
    _write_instance(src, EXAMPLE_A)
    assert main(["construct", "-i", str(src), "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith("G = ")
    eq_path = tmp_path / "eq.json"
    main(["construct", "-i", str(src), "-o", str(eq_path)])
    assert main(["verify", "-i", str(src), "-e", str(eq_path), "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "overall: pass" in out


def test_invalid_instance_structure(tmp_path):
    dup = FuchsianInstance([(0, (0, 1)), (0, (0, 1))], (0, 0))
    src = tmp_path / "dup.json"
    _write_instance(src, dup)
    assert main(["construct", "-i", str(src)]) == 1


def test_generated_round_trips_exit_zero(tmp_path):
    # construct output fed back to verify succeeds for every generated instance
    for n, seed in ((2, 1), (3, 2), (4, 3), (5, 4)):
        inst = tmp_path / f"i{n}_{seed}.json"
        eq = tmp_path / f"e{n}_{seed}.json"
        assert main(["gen", "--n", str(n), "--seed", str(seed), "-o", str(inst)]) == 0
        assert main(["construct", "-i", str(inst), "-o", str(eq)]) == 0
        assert main(["verify", "-i", str(inst), "-e", str(eq), "-o", str(tmp_path / "r.json")]) == 0


def test_gen_requires_n():
    assert main(["gen"]) == 1
    assert main(["det-check"]) == 1
