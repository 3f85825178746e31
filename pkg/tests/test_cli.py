# -*- coding: utf-8 -*-
import json

SOLVE = ["solve", "--mode", "g-prime", "--family", "1,2", "--n", "5", "--scales=-4..4", "--window=-8..8",
         "--points=-8..8", "--oracle"]


def test_help_lists_the_exit_codes(cli):
    result = cli("--help")
    assert result.exit_code == 0
    assert "solve" in result.stdout and "cache:verify" in result.stdout


def test_solve_prints_the_record(cli):
    result = cli(*SOLVE)
    assert result.exit_code == 0
    record = json.loads(result.stdout)
    assert record["outputs"]["size"] == 3
    assert record["command"] == "solve"


def test_seed_flag_is_echoed(cli):
    record = json.loads(cli("--seed", "11", *SOLVE).stdout)
    assert record["seed"] == 11


def test_infeasible_exit_code(cli):
    result = cli("solve", "--mode", "g", "--family", "1,2", "--n", "3", "--scales", "1..2", "--positive",
                 "--points", "0..3")
    assert result.exit_code == 3


def test_family_errors(cli):
    assert cli("solve", "--family", "1,x", "--n", "3").exit_code == 2
    assert cli("solve", "--family", "1,1", "--n", "3").exit_code == 7
    assert cli("solve", "--n", "3").exit_code == 2


def test_fractal_csv(cli, tmp_path):
    target = tmp_path / "boxes.csv"
    result = cli("fractal:dim", "--base", "5", "--digits", "0,2,4", "--depth", "4", "--csv", str(target))
    assert result.exit_code == 0
    assert target.read_text(encoding="utf-8").startswith("j,scale,count,slope\n")
    assert abs(json.loads(result.stdout)["outputs"]["moran"] - 0.6826) < 1e-3


def test_polygon_svg(cli, tmp_path):
    target = tmp_path / "polygons.svg"
    assert cli("geom:polygons", "--ks", "1,2,4", "--svg", str(target)).exit_code == 0
    assert b"<svg" in target.read_bytes()


def test_geometry_bounds(cli):
    record = json.loads(cli("geom:bounds", "--polytope", "square").stdout)
    assert (record["outputs"]["bounds"]["lo"], record["outputs"]["bounds"]["hi"]) == ("17/11", "7/4")


def test_cache_lookup(cli, tmp_path):
    store = str(tmp_path / "lookup.jsonl")
    miss = cli("--cache", store, "cache:lookup", "0" * 64)
    assert miss.exit_code == 0 and miss.stdout.strip() == "null"
    record = json.loads(cli("--cache", store, *SOLVE).stdout)
    hit = cli("--cache", store, "cache:lookup", record["key"])
    assert hit.exit_code == 0
    assert json.loads(hit.stdout)["digest"] == record["digest"]
    assert cli("--cache", store, "cache:verify").exit_code == 0


def test_corrupt_cache_exit_code(cli, tmp_path):
    store = tmp_path / "corrupt.jsonl"
    record = json.loads(cli("--cache", str(store), *SOLVE).stdout)
    record["outputs"]["size"] = 2
    store.write_text(json.dumps(record) + "\n", encoding="utf-8")
    assert cli("--cache", str(store), "cache:lookup", record["key"]).exit_code == 6
