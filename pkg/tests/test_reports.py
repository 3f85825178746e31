# -*- coding: utf-8 -*-
from fractions import Fraction
import pytest
import sympy as sp
from modules.errors import ConfigInvalid, EmptyTable
from modules.reports import (
    PlotKind, Provenance, ResultRecord, Table, canonical, emit_plot, make_record, normalize, problem_key, render
)

PROVENANCE = Provenance(module="solver", anchor="exact cover search")
CURVE = Table.of([{"n": 2, "exponent": 0.5}, {"n": 4, "exponent": "3/4"}, {"n": 8, "exponent": 0.8}])
SQUARE = Table.of([{"polygon": "P_1", "x": x, "y": y} for x, y in ((1, 1), (-1, 1), (-1, -1), (1, -1))])


def test_canonical_text_ignores_key_order():
    assert canonical({"b": 1, "a": [2, 3]}) == canonical({"a": [2, 3], "b": 1}) == '{"a":[2,3],"b":1}'


def test_normalize_flattens_exact_values():
    assert normalize({"ratio": Fraction(7, 4), "root": sp.sqrt(2), "set": {3, 1}}) == \
        {"ratio": "7/4", "root": "sqrt(2)", "set": [1, 3]}


def test_problem_key_depends_on_every_part():
    key = problem_key("solve", {"family": [1, 2]}, 0)
    assert key == problem_key("solve", {"family": [1, 2]}, 0)
    assert key != problem_key("solve", {"family": [1, 2]}, 1)
    assert key != problem_key("construct", {"family": [1, 2]}, 0)
    assert len(key) == 64


def test_record_survives_json():
    record = make_record("solve", {"family": [1, 2]}, {"size": 3, "ratio": Fraction(1, 3)}, 0, PROVENANCE)
    assert record.intact()
    assert record.outputs == {"size": 3, "ratio": "1/3"}
    assert "timing" not in record.to_json()
    restored = ResultRecord.from_json(record.to_json())
    assert restored == record and restored.intact()


def test_tampered_outputs_break_the_digest():
    record = make_record("solve", {}, {"size": 3}, 0, PROVENANCE)
    assert not record.model_copy(update={"outputs": {"size": 2}}).intact()


def test_table_csv():
    assert CURVE.to_csv() == "n,exponent\n2,0.5\n4,3/4\n8,0.8\n"
    assert Table.of([{"a": 1}, {"b": 2}], columns=["a", "b"]).to_csv() == "a,b\n1,\n,2\n"
    assert CURVE.column("n") == [2, 4, 8]


def test_exponent_curve_draws_every_row():
    line = render(CURVE, PlotKind.EXPONENT_CURVE).axes[0].lines[0]
    assert list(line.get_xdata()) == [2, 4, 8]
    assert list(line.get_ydata()) == [0.5, 0.75, 0.8]


def test_polygon_overlay_has_the_circle_and_each_polygon():
    patches = render(SQUARE, "polygon-vs-circle").axes[0].patches
    assert len(patches) == 2


def test_log_log_title_carries_the_slope():
    table = Table.of([{"scale": 3, "count": 2}, {"scale": 9, "count": 4}, {"scale": 27, "count": 8}])
    assert render(table, PlotKind.LOG_LOG).axes[0].get_title().startswith("slope 0.63")


def test_plots_are_byte_identical():
    first = emit_plot(CURVE, PlotKind.EXPONENT_CURVE)
    assert first == emit_plot(CURVE, PlotKind.EXPONENT_CURVE)
    assert first.lstrip().startswith(b"<?xml")


def test_plot_errors():
    with pytest.raises(EmptyTable):
        render(Table.of([]), PlotKind.EXPONENT_CURVE)
    with pytest.raises(ConfigInvalid):
        render(CURVE, PlotKind.EXPONENT_CURVE, y="missing")
