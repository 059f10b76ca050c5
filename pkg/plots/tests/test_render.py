import math

import numpy as np
import pytest

from solwig_plots.cli import main as cli_main
from solwig_plots.render import FigureSpec, render


def write_field_csv(path, nx=21, nk=17):
    x = np.linspace(-2.0, 2.0, nx)
    k = np.linspace(-1.0, 1.0, nk)
    lines = ['# params: {"state": "gaussian"}', "x,k,re_w,im_w,abs_w"]
    for xi in x:
        for kj in k:
            w = math.exp(-xi * xi - kj * kj) / math.pi
            lines.append(f"{float(xi)!r},{float(kj)!r},{w!r},0.0,{w!r}")
    path.write_text("\n".join(lines) + "\n")


def write_profile_csv(path, nx=31):
    x = np.linspace(-3.0, 3.0, nx)
    lines = ["x,value"] + [f"{float(xi)!r},{math.exp(-float(xi) ** 2)!r}" for xi in x]
    path.write_text("\n".join(lines) + "\n")


class TestRender:
    def test_surface_written(self, tmp_path):
        csv = tmp_path / "field.csv"
        write_field_csv(csv)
        out = tmp_path / "field.png"
        summary = render(FigureSpec(str(csv), "surface3d", "abs_w", str(out)))
        assert out.exists() and out.stat().st_size > 0
        assert summary.extents["x"] == (-2.0, 2.0)
        assert summary.extents["k"] == (-1.0, 1.0)

    def test_line_written(self, tmp_path):
        csv = tmp_path / "profile.csv"
        write_profile_csv(csv)
        out = tmp_path / "profile.png"
        summary = render(FigureSpec(str(csv), "line", "value", str(out)))
        assert out.exists()
        assert summary.extents["x"] == (-3.0, 3.0)

    def test_rerender_is_idempotent_and_nonmutating(self, tmp_path):
        csv = tmp_path / "field.csv"
        write_field_csv(csv)
        csv_bytes = csv.read_bytes()
        out = tmp_path / "fig.png"
        first = render(FigureSpec(str(csv), "surface3d", "abs_w", str(out)))
        second = render(FigureSpec(str(csv), "surface3d", "abs_w", str(out)))
        assert (first.width_px, first.height_px) == (second.width_px, second.height_px)
        assert first.extents == second.extents
        assert csv.read_bytes() == csv_bytes

    def test_missing_column_names_available_ones(self, tmp_path):
        csv = tmp_path / "profile.csv"
        write_profile_csv(csv)
        with pytest.raises(ValueError, match="available columns: x, value"):
            render(FigureSpec(str(csv), "line", "abs_w", str(tmp_path / "никуда.png")))

    def test_empty_csv_leaves_no_image(self, tmp_path):
        csv = tmp_path / "empty.csv"
        csv.write_text("")
        out = tmp_path / "fig.png"
        with pytest.raises(ValueError, match="no data rows"):
            render(FigureSpec(str(csv), "line", "value", str(out)))
        assert not out.exists()

    def test_non_rectangular_grid_rejected(self, tmp_path):
        csv = tmp_path / "bad.csv"
        csv.write_text("x,k,re_w,im_w,abs_w\n0,0,1,0,1\n0,1,1,0,1\n1,0,1,0,1\n")
        with pytest.raises(ValueError, match="rectangular"):
            render(FigureSpec(str(csv), "surface3d", "abs_w", str(tmp_path / "fig.png")))

    def test_unknown_kind_rejected(self, tmp_path):
        with pytest.raises(ValueError, match="kind"):
            FigureSpec("any.csv", "heatmap", "abs_w", "out.png")


class TestCli:
    def test_cli_renders_with_inferred_defaults(self, tmp_path, capsys):
        csv = tmp_path / "field.csv"
        write_field_csv(csv)
        out = tmp_path / "fig.png"
        assert cli_main([str(csv), "--out", str(out)]) == 0
        assert out.exists()
        assert "wrote" in capsys.readouterr().out

    def test_cli_missing_column_fails_cleanly(self, tmp_path, capsys):
        csv = tmp_path / "profile.csv"
        write_profile_csv(csv)
        code = cli_main([str(csv), "--kind", "line", "--column", "re_w", "--out", str(tmp_path / "f.png")])
        assert code == 1
        assert "available columns" in capsys.readouterr().err
