import json

import pytest

from cli import EXIT_FAIL, EXIT_INPUT, EXIT_PASS, EXIT_UNKNOWN, main
from src.config import reload_config
from tests.conftest import fixture_path


def test_eval_prints_the_value_set(capsys):
    assert main(["eval", "--group", fixture_path("c5arc.json"), "--word", "1,1,4"]) == EXIT_PASS
    assert capsys.readouterr().out.strip() == "{1}"


def test_eval_on_an_instance(capsys):
    code = main(["eval", "--instance", fixture_path("interval.json"), "--word", "1/2,7/10,-9/10"])
    assert code == EXIT_PASS
    assert capsys.readouterr().out.strip() == "{3/10}"


def test_assoc_exit_codes(capsys):
    assert main(["assoc", "--group", fixture_path("c5arc.json"), "--max-len", "5"]) == EXIT_PASS
    assert json.loads(capsys.readouterr().out)["status"] == "pass"
    assert main(["assoc", "--group", fixture_path("nonglobal5.json"), "--max-len", "5"]) == EXIT_FAIL
    result = json.loads(capsys.readouterr().out)
    assert result["witness"]["word"] == ["x", "x", "x", "x"]


def test_check_axioms(capsys):
    assert main(["check-axioms", "--group", fixture_path("z5.json")]) == EXIT_PASS
    capsys.readouterr()


def test_globalize_then_normal_form(tmp_path, capsys):
    rules = tmp_path / "c5arc.rules.json"
    assert main(["globalize", "--group", fixture_path("c5arc.json"), "--out", str(rules)]) == EXIT_PASS
    assert json.loads(rules.read_text(encoding="utf-8"))["complete"] is True
    assert main(["nf", "--rules", str(rules), "--word", ""]) == EXIT_PASS
    assert capsys.readouterr().out.strip() == "ε"
    assert main(["nf", "--rules", str(rules), "--word", "1 1 4 1"]) == EXIT_PASS
    assert capsys.readouterr().out.strip() == "1 1"


def test_extend_to_z5(capsys):
    code = main(["extend", "--group", fixture_path("c5arc.json"), "--morphism", fixture_path("c5arc_to_z5.json"),
                 "--word", "1,1,1,1,1"])
    assert code == EXIT_PASS
    result = json.loads(capsys.readouterr().out)
    assert result["value"] == 0
    assert result["in_kernel"] is True
    assert result["normal_form"] == "1 1 1 1 1"


def test_normalize_trace(capsys):
    code = main(["normalize-trace", "--group", fixture_path("c5arc.json"), "--trace", fixture_path("c5arc_trace.json")])
    assert code == EXIT_PASS
    trace = json.loads(capsys.readouterr().out)
    assert trace["start"] == [1, 4]


def test_contract_check(capsys):
    code = main(["contract-check", "--group", fixture_path("c5arc.json"), "--phi", fixture_path("c5arc_swap.json")])
    assert code == EXIT_FAIL
    capsys.readouterr()
    code = main(["contract-check", "--instance", fixture_path("padic3.json"),
                 "--endo", fixture_path("times_p.json"), "--samples", "40"])
    assert code == EXIT_PASS


def test_shrink(capsys):
    code = main(["shrink", "--instance", fixture_path("interval.json"), "--endo", fixture_path("halving.json"),
                 "--ball", fixture_path("half_ball.json"), "--depth", "3"])
    assert code == EXIT_PASS
    result = json.loads(capsys.readouterr().out)
    assert result["U"] == {"family": "interval", "radius": "1/2", "closed": False}


def test_pipeline(capsys):
    code = main(["pipeline", "--instance", fixture_path("padic3.json"), "--samples", "40", "--max-len", "4"])
    assert code == EXIT_PASS
    out = capsys.readouterr().out
    assert "P: Z_3" in out
    assert out.rstrip().endswith("Status: pass")


def test_pipeline_json(capsys):
    code = main(["pipeline", "--instance", fixture_path("product.json"), "--samples", "40", "--max-len", "4",
                 "--format", "json"])
    assert code == EXIT_PASS
    report = json.loads(capsys.readouterr().out)
    assert report["summary"]["L"] == "R"
    assert report["summary"]["P"] == "Z_3"


def test_missing_file_is_an_input_error(tmp_path, capsys):
    assert main(["eval", "--group", str(tmp_path / "absent.json"), "--word", "1"]) == EXIT_INPUT
    assert main(["eval", "--group", fixture_path("c5arc.json"), "--word", "2"]) == EXIT_INPUT


def test_no_command_prints_help(capsys):
    assert main([]) == EXIT_INPUT


def test_pipeline_out_of_budget_exits_unknown(tmp_path, monkeypatch, capsys):
    path = tmp_path / "tight.yaml"
    path.write_text("defaults:\n  contraction_budget: 1\n", encoding="utf-8")
    monkeypatch.setenv("WORKBENCH_CONFIG", str(path))
    reload_config()
    try:
        code = main(["pipeline", "--instance", fixture_path("interval.json"), "--samples", "40", "--format", "json"])
        assert code == EXIT_UNKNOWN
        report = json.loads(capsys.readouterr().out)
        assert report["status"] == "unknown"
        assert [s["stage"] for s in report["stages"]] == ["pseudo-automorphism"]
    finally:
        monkeypatch.undo()
        reload_config()


@pytest.mark.parametrize("argv", [
    ["check-axioms"],
    ["globalize"],
    ["shrink"],
    ["pipeline"],
    ["extend", "--morphism", fixture_path("c5arc_to_z5.json")],
])
def test_missing_input_flag_is_an_input_error(argv, capsys):
    assert main(argv) == EXIT_INPUT


def test_globalize_over_budget_writes_the_partial_system(z12arc, tmp_path, capsys):
    group = tmp_path / "z12arc.json"
    group.write_text(z12arc.to_json(), encoding="utf-8")
    rules = tmp_path / "z12arc.rules.json"
    code = main(["globalize", "--group", str(group), "--max-rules", "1", "--out", str(rules)])
    assert code == EXIT_UNKNOWN
    assert json.loads(rules.read_text(encoding="utf-8"))["complete"] is False


@pytest.mark.parametrize("moves", [
    [{"kind": "contract-I", "position": 1, "params": []}],
    [{"kind": "contract-II", "position": 5, "params": []}],
])
def test_trace_that_does_not_replay_is_an_input_error(tmp_path, capsys, moves):
    trace = tmp_path / "bad_trace.json"
    trace.write_text(json.dumps({"start": [1, 1], "moves": moves}), encoding="utf-8")
    code = main(["normalize-trace", "--group", fixture_path("c5arc.json"), "--trace", str(trace)])
    assert code == EXIT_INPUT
