import json

import pytest

from cli import registry
from cli.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, run
from cli.verify import POSET_MAX_NM, poset_suite, shuffle_suite
from core.config import Limits


def run_json(capsys, *argv):
    code = run([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


def test_registry_maps_every_command():
    assert set(registry.command_names()) == {
        "strata",
        "stratum",
        "dieudonne",
        "canfilt",
        "deform",
        "count",
        "derivation-demo",
        "verify",
    }
    assert registry.get_module_name("derivation-demo") == "derivation_demo"
    assert registry.supports_dot("strata") and not registry.supports_dot("count")
    with pytest.raises(ValueError):
        registry.get_command("nope")


def test_parser_builds_all_subcommands():
    parser = build_parser()
    args = parser.parse_args(["count", "--p", "3", "--n", "2", "--m", "1"])
    assert (args.command, args.p, args.format) == ("count", 3, "text")


def test_strata_dot(capsys):
    assert run(["strata", "--n", "4", "--m", "2", "--format", "dot"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("digraph")
    assert out.count("[label=") == 15


def test_strata_json(capsys):
    code, data = run_json(capsys, "strata", "--n", "4", "--m", "2")
    assert code == EXIT_OK
    assert data["schema"] == "eo-folkit/1"
    assert len(data["strata"]) == 15
    assert data["maximal"] == ["561234"] and data["minimal"] == ["123456"]
    assert data["s_sharp_minimal"] == ["125634"]
    assert data["diagram"]["closure_equal"] is True


def test_stratum_json(capsys):
    code, data = run_json(capsys, "stratum", "--n", "4", "--m", "2", "--w", "125634")
    assert code == EXIT_OK
    assert data["is_fol"] and data["in_s_sharp"]
    assert (data["length"], data["a_sigma"], data["fiber_dim"]) == (4, 2, 0)
    assert data["special"]["w_0J"] == "432165"


def test_count_json(capsys):
    code, data = run_json(capsys, "count", "--p", "3", "--n", "2", "--m", "1")
    assert code == EXIT_OK
    assert data["closed_form"] == data["brute_force"] == data["fast"] == data["oracle"] == 27
    assert data["degrees"]["deg_pi_et"] == 27
    assert data["skipped"] == []


def test_count_skips_beyond_guard(capsys):
    code, data = run_json(capsys, "count", "--p", "3", "--n", "2", "--m", "1", "--guard", "20")
    assert code == EXIT_OK
    assert data["brute_force"] is None and data["oracle"] is None
    assert data["fast"] == 27
    assert len(data["skipped"]) == 2


def test_dieudonne_json(capsys):
    code, data = run_json(capsys, "dieudonne", "--n", "4", "--m", "2", "--p", "3")
    assert code == EXIT_OK
    assert data["tables"]["F"]["e3"] == "-f1"
    assert data["hasse_zero"] is True
    assert all(data["checks"].values())
    assert data["vq_image"] == ["e1^(p)", "e2^(p)"]
    assert data["canonical_M"] == ["e1", "e2"]


def test_canfilt_json(capsys):
    code, data = run_json(capsys, "canfilt", "--n", "3", "--m", "2", "--p", "3")
    assert code == EXIT_OK
    assert data["result"] == data["expected"] == [4, 3]
    assert len(data["trace"]) == 6


def test_deform_json(capsys):
    code, data = run_json(capsys, "deform", "--n", "4", "--m", "2", "--p", "3")
    assert code == EXIT_OK
    assert data["tangent"] == {"total_dim": 8, "foliation_dim": 4, "fiber_dim": 0}
    assert data["ideal_indexed"][0] == "u_{1,3}"
    assert data["residues"]["1"]["u_1_1"] == {"e6^(p)": "2+0*t"}


def test_derivation_demo_text(capsys):
    assert run(["derivation-demo", "--p", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "passed: ✅" in out
    assert "example_p_closed: ❌" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--p", "3"],
        ["strata", "--n", "2", "--m", "2"],
        ["count", "--p", "4", "--n", "2", "--m", "1"],
        ["count", "--p", "3", "--n", "2", "--m", "1", "--guard", "0"],
        ["stratum", "--n", "4", "--m", "2", "--w", "125634", "--format", "dot"],
        ["canfilt", "--n", "4", "--m", "2", "--p", "3"],
        ["verify", "--max-nm", "1", "--p", "3"],
        ["nope"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv) == EXIT_USAGE
    assert capsys.readouterr().out == ""


def test_help_exits_0(capsys):
    assert run(["--help"]) == EXIT_OK
    assert "strata" in capsys.readouterr().out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert run(["stratum", "--n", "2", "--m", "1", "--w", "312", "--format", "json", "--out", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["is_ordinary"] is True


def test_consistency_failure_exits_1(monkeypatch, capsys):
    from core.errors import ConsistencyError
    from cli.commands import count

    def broken(*args, **kwargs):
        raise ConsistencyError("count.demo", expected=27, actual=26)

    monkeypatch.setattr(count, "gamma_count_closed", broken)
    assert run(["count", "--p", "3", "--n", "2", "--m", "1"]) == EXIT_FAILED
    data = json.loads(capsys.readouterr().out)
    assert data["check"] == "count.demo"
    assert (data["expected"], data["actual"]) == (27, 26)


def test_verify_is_deterministic(capsys):
    code, first = run_json(capsys, "verify", "--max-nm", "4", "--p", "3")
    assert code == EXIT_OK
    assert first["passed"] is True
    assert [s["name"] for s in first["suites"]][:3] == ["shuffles", "bruhat", "eo_poset"]
    _, second = run_json(capsys, "verify", "--max-nm", "4", "--p", "3")
    assert first == second


def test_bound_exceeded_becomes_skipped_entry():
    result = shuffle_suite(6, Limits(shuffle_bound=5))
    assert result["is_valid"] is True
    assert [entry.split(":")[0] for entry in result["skipped"]] == ["(4,2)", "(5,1)", "(6,0)"]
    assert result["checked"] == 9


def test_capped_suites_list_what_they_leave_out():
    result = poset_suite(POSET_MAX_NM + 1, Limits())
    assert result["is_valid"] is True
    assert all(entry.endswith(f"n+m > {POSET_MAX_NM}") for entry in result["skipped"])
    assert len(result["skipped"]) == 4


@pytest.mark.slow
def test_verify_full_range_exits_0(capsys):
    code, data = run_json(capsys, "verify", "--max-nm", "12", "--p", "3")
    assert code == EXIT_OK
    assert data["passed"] is True
    suites = {s["name"]: s for s in data["suites"]}
    assert any(entry.startswith("(7,1)") for entry in suites["eo_poset"]["skipped"])
    assert any(entry.startswith("(p=3, n=7, m=1)") for entry in suites["counting"]["skipped"])
    assert suites["canonical_word"]["skipped"] == []
