"""
Тесты записи CSV, графиков и сводки метрик.
"""
import json
from dataclasses import replace

import matplotlib.pyplot as plt
import pytest

from config.run_config import RunConfig
from core.exceptions import OutputError, ValidationError
from core.models import SampleRecord
from geometry import E1, E3, UnitVector3
from output import CSV_HEADER, build_figure, format_csv, read_csv, write_csv, write_metrics, write_plot
from output.plot import strip_prolog
from output.summary import metrics_to_dict
from simulation import compute_run_metrics, run_batch, run_single

EXPECTED_HEADER = ("t,xi_x,xi_y,xi_z,y_x,y_y,y_z,outlier,xihat_eqv_x,xihat_eqv_y,xihat_eqv_z,"
                   "xihat_naive_x,xihat_naive_y,xihat_naive_z,angle_err_eqv,angle_err_naive,V,Vdot")


@pytest.fixture(scope="module")
def records():
    return run_single(RunConfig(duration=0.2, dt=1e-3, seed=2))


def test_header_is_exact():
    assert ",".join(CSV_HEADER) == EXPECTED_HEADER


def test_empty_sequence_writes_header_only(tmp_path):
    path = tmp_path / "empty.csv"
    write_csv([], str(path))
    assert path.read_bytes() == (EXPECTED_HEADER + "\n").encode("utf-8")


def test_one_record_gives_two_lines(tmp_path):
    record = SampleRecord(t=0.0, xi=E3, y=E1, outlier=True)
    path = tmp_path / "one.csv"
    write_csv([record], str(path))
    lines = path.read_text(encoding="utf-8").split("\n")
    assert lines[-1] == ""
    assert len(lines[:-1]) == 2
    assert lines[1] == "0,0,0,1,1,0,0,1" + "," * 10


def test_values_use_seventeen_significant_digits():
    xi = UnitVector3.normalized([1.0, 2.0, 3.0])
    row = format_csv([SampleRecord(t=0.1, xi=xi, y=xi, outlier=False)]).splitlines()[1]
    cells = row.split(",")
    assert cells[0] == "0.10000000000000001"
    assert float(cells[1]) == xi.v[0]


def test_read_back_is_identical(tmp_path, records):
    path = tmp_path / "run.csv"
    write_csv(records, str(path))
    again = read_csv(str(path))
    assert len(again) == len(records)
    for a, b in zip(records, again):
        assert a.t == b.t and a.outlier == b.outlier
        assert a.xi == b.xi and a.y == b.y
        assert a.xihat_eqv == b.xihat_eqv and a.xihat_naive == b.xihat_naive
        assert (a.angle_err_eqv, a.angle_err_naive, a.V, a.Vdot) == \
            (b.angle_err_eqv, b.angle_err_naive, b.V, b.Vdot)


def test_write_csv_reports_path(tmp_path, records):
    target = tmp_path / "missing" / "run.csv"
    with pytest.raises(OutputError) as info:
        write_csv(records, str(target))
    assert str(target) in str(info.value)


def test_csv_to_stdout(capsys, records):
    write_csv(records[:3], None)
    out = capsys.readouterr().out
    assert out.startswith(EXPECTED_HEADER + "\n")
    assert out.count("\n") == 4


def test_plot_is_deterministic_svg(tmp_path, records):
    first, second = tmp_path / "a.svg", tmp_path / "b.svg"
    write_plot(records, str(first))
    write_plot(records, str(second))
    data = first.read_bytes()
    assert data == second.read_bytes()
    text = data.decode("utf-8")
    assert text.startswith("<svg")
    assert "<?xml" not in text and "<!DOCTYPE" not in text
    assert "xlink:href=\"http" not in text


def test_strip_prolog():
    rendered = '<?xml version="1.0"?>\n<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN">\n<svg width="1"></svg>\n'
    assert strip_prolog(rendered) == '<svg width="1"></svg>\n'
    with pytest.raises(ValidationError):
        strip_prolog("<html></html>")


def test_plot_panel_curve_counts(records):
    fig = build_figure(records)
    try:
        panel_a, panel_b, panel_c = fig.axes
        assert len(panel_a.get_lines()) == 6
        assert len(panel_b.get_lines()) == 2
        styles = sorted(line.get_linestyle() for line in panel_a.get_lines())
        assert styles == ["--", "--", "--", "-", "-", "-"]
    finally:
        plt.close(fig)


def test_plot_with_single_observer_and_outliers(tmp_path):
    cfg = RunConfig(duration=0.2, seed=0, observer="naive")
    records = run_single(replace(cfg, noise=replace(cfg.noise, outlier_prob=0.5)))
    assert any(r.outlier for r in records)
    fig = build_figure(records)
    try:
        assert len(fig.axes[0].get_lines()) == 6
        assert len(fig.axes[1].get_lines()) == 1
        assert len(fig.axes[2].get_lines()) == 2
    finally:
        plt.close(fig)
    write_plot(records, str(tmp_path / "naive.svg"))


def test_plot_reports_unwritable_path(tmp_path, records):
    with pytest.raises(OutputError):
        write_plot(records, str(tmp_path / "missing" / "plot.svg"))


def test_metrics_json(tmp_path, records):
    run = compute_run_metrics(records, 2)
    path = tmp_path / "metrics.json"
    write_metrics(run, str(path))
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["kind"] == "run" and data["seed"] == 2
    batch = run_batch(RunConfig(duration=0.2, seed=0, runs=2))
    data = metrics_to_dict(batch)
    assert data["kind"] == "batch"
    assert [r["seed"] for r in data["runs"]] == [0, 1]
