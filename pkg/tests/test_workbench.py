# -*- coding: utf-8 -*-
import pytest
from modules.errors import ConfigInvalid
from modules.workbench import HANDLERS, RunConfig, run, verify_record

SOLVE = {"mode": "g-prime", "family": "1,2", "n": 5, "scales": "-4..4", "window": "-8..8", "points": "-8..8",
         "oracle": True}


def test_solve_agrees_with_the_oracle(cache):
    result = run(RunConfig.build(command="solve", parameters=SOLVE), cache)
    assert result.exit_code == 0 and not result.cached
    assert result.record.outputs["size"] == 3
    assert result.record.outputs["oracle_size"] == 3
    assert "budget" in result.record.inputs
    assert verify_record(result.record)


def test_second_run_is_served_from_the_cache(cache):
    first = run(RunConfig.build(command="solve", parameters=SOLVE, seed=7), cache)
    second = run(RunConfig.build(command="solve", parameters=SOLVE, seed=7), cache)
    assert second.cached
    assert second.record == first.record
    assert second.record.seed == 7


def test_seed_changes_the_key(cache):
    first = run(RunConfig.build(command="solve", parameters=SOLVE, seed=1), cache)
    second = run(RunConfig.build(command="solve", parameters=SOLVE, seed=2), cache)
    assert not second.cached
    assert first.record.key != second.record.key


def test_unbudgeted_commands_leave_the_budget_out_of_the_key(cache):
    result = run(RunConfig.build(command="construct:powers", parameters={"m": 4}), cache)
    assert result.exit_code == 0
    assert "budget" not in result.record.inputs
    assert result.record.outputs["expected"] == 10


def test_invalid_config():
    with pytest.raises(ConfigInvalid):
        RunConfig.build(command="solve", seed=-1)
    with pytest.raises(ConfigInvalid):
        RunConfig.build(command="solve", budget={"nodes": 0})


def test_unknown_command_and_missing_parameter(cache):
    assert run(RunConfig.build(command="nope"), cache).exit_code == 2
    result = run(RunConfig.build(command="solve", parameters={"n": 3}), cache)
    assert result.exit_code == 2
    assert "family" in result.error["message"]


def test_infeasible_windows_exit_three(cache):
    parameters = {"mode": "g", "family": "1,2", "n": 3, "scales": "1..2", "positive": True, "points": "0..3"}
    result = run(RunConfig.build(command="solve", parameters=parameters), cache)
    assert result.exit_code == 3
    assert result.record is None


def test_strict_budget_exits_four_with_the_incumbent(cache):
    parameters = {"mode": "g", "family": "1,2", "n": 6, "scales": "1..10", "positive": True}
    config = RunConfig.build(command="solve", parameters=parameters, budget={"nodes": 1, "strict": True})
    result = run(config, cache)
    assert result.exit_code == 4
    assert result.error["incumbent"]["size"] >= 3


def test_csv_and_svg_artifacts(cache, tmp_path):
    outputs = {"csv_path": tmp_path / "boxes.csv", "json_path": tmp_path / "record.json"}
    parameters = {"base": 5, "digits": "0,2,4", "depth": 4}
    result = run(RunConfig.build(command="fractal:dim", parameters=parameters, outputs=outputs), cache)
    assert result.exit_code == 0
    assert set(result.artifacts) == {"csv", "json"}
    assert (tmp_path / "boxes.csv").read_text(encoding="utf-8").startswith("j,scale,count,slope\n")
    plot = run(RunConfig.build(command="geom:polygons", parameters={"ks": "1,2"},
                               outputs={"svg_path": tmp_path / "polygons.svg"}), cache)
    assert plot.exit_code == 0
    assert (tmp_path / "polygons.svg").read_bytes().lstrip().startswith(b"<?xml")


def test_csv_needs_a_table(cache, tmp_path):
    config = RunConfig.build(command="construct:powers", parameters={"m": 3},
                             outputs={"csv_path": tmp_path / "powers.csv"})
    assert run(config, cache).exit_code == 2


def test_every_command_is_registered():
    assert {"solve", "solve:curve", "solve:sweep", "construct:tower", "construct:powers", "construct:translates",
            "construct:amplify", "qr:build", "qr:polygon", "ff:solve", "fractal:dim", "geom:bounds", "geom:lines",
            "geom:polygons"} <= set(HANDLERS)


@pytest.mark.parametrize("command, parameters, formats", [
    ("construct:translates", {"shape": "0,1,3", "x": 120, "randomized": True}, ("json",)),
    ("solve:curve", {"family": "1,2", "ns": "2,3,5", "scales": "-4..4", "window": "-8..8", "points": "-8..8"},
     ("json", "csv")),
])
def test_seeded_runs_write_identical_artifacts(tmp_path, command, parameters, formats):
    written = []
    for attempt in ("first", "second"):
        folder = tmp_path / attempt
        folder.mkdir()
        outputs = {f"{kind}_path": folder / f"out.{kind}" for kind in formats}
        result = run(RunConfig.build(command=command, parameters=parameters, seed=11, use_cache=False,
                                     outputs=outputs))
        assert result.exit_code == 0 and not result.cached
        written.append([(folder / f"out.{kind}").read_bytes() for kind in formats])
    assert written[0] == written[1]
    assert all(written[0])
