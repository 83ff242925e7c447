import json

import pytest

from helpers import hopeless_scenario
from uavfire import scenario as scen
from uavfire.cli import main


@pytest.fixture
def scenario_file(tmp_path):
    path = tmp_path / "s.json"
    assert main(["generate", "--uavs", "5", "--fires", "15", "--seed", "42", "-o", str(path)]) == 0
    return path


def test_generate(scenario_file):
    sc = scen.load(scenario_file)
    assert sc.n_uavs == 5 and sc.n_fires == 15
    doc = json.loads(scenario_file.read_text())
    assert set(doc) == {"bounds", "params", "uavs", "fires"}


def test_generate_is_deterministic(tmp_path, scenario_file):
    again = tmp_path / "again.json"
    main(["generate", "--uavs", "5", "--fires", "15", "--seed", "42", "-o", str(again)])
    assert again.read_bytes() == scenario_file.read_bytes()


def _solve(tmp_path, scenario_file, tag):
    out = {k: tmp_path / f"{tag}.{k}" for k in ("json", "csv", "svg")}
    code = main(
        ["solve", str(scenario_file), "--seed", "7", "--gens", "15",
         "-o", str(out["json"]), "--stats", str(out["csv"]), "--plot", str(out["svg"])]
    )
    return code, {k: p.read_bytes() for k, p in out.items()}


def test_solve_reproducible(tmp_path, scenario_file):
    code, first = _solve(tmp_path, scenario_file, "a")
    assert code == 0
    _, second = _solve(tmp_path, scenario_file, "b")
    assert first == second
    plan = json.loads(first["json"])
    assert plan["infeasible_count"] == 0
    assert first["csv"].decode().splitlines()[0] == "generation,best_J,avg_J,population_size,feasible_route_count"


def test_verify(tmp_path, scenario_file, capsys):
    plan = tmp_path / "plan.json"
    assert main(["baseline", str(scenario_file), "--method", "edf", "-o", str(plan)]) == 0
    capsys.readouterr()
    assert main(["verify", str(plan), str(scenario_file), "--step", "1e-2"]) == 0
    out = capsys.readouterr().out
    assert "15/15 fires mitigated" in out


@pytest.mark.parametrize("method", ["greedy", "edf"])
def test_baseline_to_stdout(scenario_file, capsys, method):
    assert main(["baseline", str(scenario_file), "--method", method]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert sorted(j for r in doc["routes"] for j in r) == list(range(1, 16))


def test_solve_infeasible_exit_1(tmp_path, capsys):
    path = tmp_path / "hopeless.json"
    scen.save(hopeless_scenario(), path)
    assert main(["solve", str(path), "--gens", "5", "-o", str(tmp_path / "p.json")]) == 1
    assert "fire 1" in capsys.readouterr().err


def test_bad_inputs_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["solve", str(bad)]) == 2
    assert main(["solve", str(tmp_path / "missing.json")]) == 2
    bad.write_text('{"bounds": {"w": 100, "h": 100}}')
    assert main(["solve", str(bad)]) == 2
    assert main(["generate", "--uavs", "5", "--fires", "3"]) == 2
    assert main(["generate", "--radius-max", "70"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--no-such-flag"])
    assert exc.value.code == 2
    assert "error" in capsys.readouterr().err


def test_montecarlo(tmp_path):
    paths = [tmp_path / f"{k}.jsonl" for k in "ab"]
    for p in paths:
        code = main(
            ["montecarlo", "--uavs", "2", "--fires", "5", "6", "--iterations", "2", "--gens", "5",
             "--master-seed", "3", "-o", str(p), "--summary", str(p.with_suffix(".json")), "--csv", str(p.with_suffix(".csv"))]
        )
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    recs = [json.loads(x) for x in paths[0].read_text().splitlines()]
    assert [(r["fires"], r["iteration"]) for r in recs] == [(5, 0), (5, 1), (6, 0), (6, 1)]
    summary = json.loads(paths[0].with_suffix(".json").read_text())
    assert [c["fires"] for c in summary["campaigns"]] == [5, 6]
