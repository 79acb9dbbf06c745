import hashlib

from padovan_lab.plotting import plot_cube_counts, plot_orders, render_report_figures
from padovan_lab.report import report_rows


def _digest(path):
    return hashlib.sha256(path.read_bytes()).hexdigest()


def test_figures_are_written(tmp_path):
    rows = report_rows(14)
    paths = render_report_figures(rows, tmp_path / "out")
    assert [p.name for p in paths] == ["orders.png", "cube_counts.png"]
    for p in paths:
        assert p.stat().st_size > 1000
        assert p.read_bytes()[:4] == b"\x89PNG"


def test_figures_are_byte_identical_across_runs(tmp_path):
    rows = report_rows(12)
    a = plot_orders(rows, tmp_path / "a.png"), plot_cube_counts(rows, tmp_path / "b.png")
    b = plot_orders(rows, tmp_path / "c.png"), plot_cube_counts(rows, tmp_path / "d.png")
    assert [_digest(p) for p in a] == [_digest(p) for p in b]


def test_small_report_still_plots(tmp_path):
    # n <= 2 includes the empty family row
    paths = render_report_figures(report_rows(2), tmp_path)
    assert all(p.exists() for p in paths)
