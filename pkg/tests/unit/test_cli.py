"""Unit tests for the command-line interface."""

import csv
import io
import json

import pytest
from click.testing import CliRunner

from pseudodyn._version import __version__
from pseudodyn.cli import cli, main
from tests.conftest import make_scenario_text


def _run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _rows(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


class TestGroup:
    """Tests for the command group and exit codes."""

    def test_version(self, capsys):
        """--version prints the package version."""
        code, out, _ = _run(capsys, "--version")
        assert code == 0
        assert __version__ in out

    def test_unknown_command(self, capsys):
        """Unknown commands are usage errors."""
        code, _, err = _run(capsys, "frobnicate")
        assert code == 2
        assert "frobnicate" in err

    def test_bad_log_level(self, capsys):
        """Log levels are a fixed choice."""
        code, _, _ = _run(capsys, "--log-level", "chatty", "orbit", "-s", "translation", "--radius", "1")
        assert code == 2

    def test_bad_environment(self, capsys, monkeypatch):
        """A malformed environment override is a usage error."""
        monkeypatch.setenv("PSEUDODYN_NODE_CAP", "lots")
        code, _, err = _run(capsys, "orbit", "-s", "translation", "--radius", "1")
        assert code == 2
        assert err.startswith("error[config]")

    def test_unknown_scenario(self, capsys):
        """Scenario failures exit with 3."""
        code, _, err = _run(capsys, "orbit", "-s", "no_such_scenario", "--radius", "1")
        assert code == 3
        assert err.startswith("error[scenario]")

    def test_invalid_scenario_file(self, capsys, tmp_path):
        """Validation failures name the invariant."""
        path = tmp_path / "bad.json"
        path.write_text(make_scenario_text(d=8), encoding="utf-8")
        code, _, err = _run(capsys, "orbit", "-s", str(path), "--radius", "1")
        assert code == 3
        assert "field-valid" in err

    def test_computation_error(self, capsys):
        """Engine failures exit with 4."""
        code, _, err = _run(
            capsys, "--node-cap", "3", "orbit", "-s", "translation", "--radius", "10"
        )
        assert code == 4
        assert err.startswith("error[pseudogroup]")

    def test_bad_point(self, capsys):
        """Points must be exact values."""
        code, _, _ = _run(capsys, "metric", "-s", "translation", "--x", "abc", "--y", "1")
        assert code == 2


class TestOrbit:
    """Tests for the orbit command."""

    def test_radius_zero(self, capsys):
        """A radius-0 ball is the seed alone."""
        code, out, _ = _run(capsys, "orbit", "-s", "rotation_sqrt2", "--radius", "0")
        assert code == 0
        assert out == "point_p,point_q,dist,parent,label\n0,0,0,,\n"

    def test_translation_ball(self, capsys):
        """The radius-2 ball of 0 under x + 1 is -2..2."""
        _, out, _ = _run(capsys, "orbit", "-s", "translation", "--radius", "2")
        rows = _rows(out)
        assert {r["point_p"] for r in rows} == {"-2", "-1", "0", "1", "2"}
        assert {r["point_q"] for r in rows} == {"0"}
        by_point = {r["point_p"]: r for r in rows}
        assert (by_point["-2"]["dist"], by_point["-2"]["parent"]) == ("2", "-1")
        assert by_point["-2"]["label"] == "t^-1"

    def test_parent_and_label_columns(self):
        """Each node lists its exact coordinates and the tree edge reaching it."""
        result = CliRunner().invoke(cli, ["orbit", "-s", "rotation_sqrt2", "--radius", "1"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "point_p,point_q,dist,parent,label"
        assert "-1,1,1,0,r" in lines[1:]
        assert "2,-1,1,0,r^-1" in lines[1:]

    def test_deterministic(self, capsys):
        """Repeated runs print identical bytes."""
        args = ("orbit", "-s", "rotation_sqrt2", "--radius", "4")
        first = _run(capsys, *args)[1]
        assert _run(capsys, *args)[1] == first

    def test_emit_and_svg(self, capsys, tmp_path):
        """--emit and --svg write files instead of stdout."""
        table = tmp_path / "out" / "ball.csv"
        plot = tmp_path / "ball.svg"
        code, out, _ = _run(
            capsys, "orbit", "-s", "translation", "--radius", "3",
            "--emit", str(table), "--svg", str(plot),
        )
        assert code == 0
        assert out == ""
        assert table.read_text(encoding="utf-8").startswith("point_p,")
        assert "<svg" in plot.read_text(encoding="utf-8")


class TestMetricAndRecurrence:
    """Tests for metric and recur."""

    def test_metric(self, capsys):
        """d_E(0, 3) = 3 for the unit translation."""
        _, out, _ = _run(capsys, "metric", "-s", "translation", "--x", "0", "--y", "3")
        assert _rows(out) == [{"x": "0", "y": "3", "distance": "3"}]

    def test_metric_unreachable(self, capsys):
        """Points in another orbit are unreachable."""
        _, out, _ = _run(capsys, "metric", "-s", "translation", "--x", "0", "--y", "1/2")
        assert _rows(out)[0]["distance"] == "unreachable"

    def test_recur_section6(self, capsys):
        """Hitting distances equal ν along the backward orbit."""
        code, out, _ = _run(capsys, "recur", "-s", "section6", "--steps", "4")
        assert code == 0
        rows = _rows(out)
        assert list(rows[0]) == ["seed", "nu", "hit_dist"]
        assert [r["hit_dist"] for r in rows] == ["1", "2", "3", "4"]
        assert [r["nu"] for r in rows] == ["1", "2", "3", "4"]
        assert rows[0]["seed"] == "10/11"

    def test_steps_need_section6(self, capsys):
        """--steps is only meaningful for the non-recurrent example."""
        code, _, _ = _run(capsys, "recur", "-s", "translation", "--steps", "2")
        assert code == 2

    def test_geometric_seeds(self, capsys):
        """Seeds 1/2, 1/4, 1/8 accumulate at a = 0 and need ever more steps."""
        code, out, _ = _run(
            capsys, "recur", "-s", "section6", "--geometric", "1/2,0,1/2,3", "--rmax", "8"
        )
        assert code == 0
        rows = _rows(out)
        assert [r["seed"] for r in rows] == ["1/2", "1/4", "1/8"]
        nus = [int(r["nu"]) for r in rows]
        assert nus == sorted(nus)
        assert nus[0] == 3
        assert all(int(r["hit_dist"]) >= int(r["nu"]) for r in rows)

    def test_explicit_seeds_and_window(self, capsys):
        """--seeds takes comma lists; --window takes 'lo,hi' or a region name."""
        _, out, _ = _run(
            capsys, "recur", "-s", "translation", "--seeds", "0,1/2", "--seeds", "-3",
            "--window", "5,6",
        )
        rows = _rows(out)
        assert [(r["seed"], r["hit_dist"], r["nu"]) for r in rows] == [
            ("0", "", ""), ("1/2", "5", ""), ("-3", "", ""),
        ]
        _, out, _ = _run(capsys, "recur", "-s", "translation", "--seeds", "-3", "--window", "bump")
        assert _rows(out)[0]["hit_dist"] == ""

    def test_bad_geometric_ratio(self, capsys):
        """The ratio q must lie in (0, 1)."""
        code, _, _ = _run(capsys, "recur", "-s", "section6", "--geometric", "1/2,0,2,3")
        assert code == 2

    def test_seed_sources_are_exclusive(self, capsys):
        """Only one seed source may be given."""
        code, _, _ = _run(
            capsys, "recur", "-s", "section6", "--steps", "2", "--seeds", "1/2"
        )
        assert code == 2


class TestFolnerCommand:
    """Tests for the folner command."""

    def test_segment(self, capsys):
        """S_4 = {0, ..., 4} has four points in ∂_2."""
        _, out, _ = _run(
            capsys, "folner", "-s", "translation", "--n", "4", "--r", "2", "--bump", "0,2"
        )
        ratios, mus = out.split("\n\n")
        (row,) = _rows(ratios)
        assert list(row) == ["n", "r", "boundary_size", "set_size", "ratio"]
        assert (row["n"], row["set_size"], row["boundary_size"]) == ("4", "5", "4")
        assert row["ratio"] == "4/5"
        assert _rows(mus) == [{"n": "4", "mu_value": "1/5"}]

    def test_ball(self, capsys):
        """B(0, 3) = {-3, ..., 3} has four points in ∂_2."""
        _, out, _ = _run(
            capsys, "folner", "-s", "translation", "--sequence", "ball", "--n", "1", "--n", "3"
        )
        rows = _rows(out)
        assert [(r["n"], r["set_size"], r["boundary_size"]) for r in rows] == [
            ("1", "3", "4"), ("3", "7", "4"),
        ]
        assert rows[1]["ratio"] == "4/7"

    def test_sets_and_test_function_from_files(self, capsys, tmp_path):
        """Sets and a tabulated tent are read from CSV files."""
        sets = tmp_path / "sets.csv"
        sets.write_text("n,point\n1,0\n1,1\n2,0\n2,1\n2,2\n", encoding="utf-8")
        testfn = tmp_path / "tent.csv"
        testfn.write_text("x,y\n0,0\n1,1\n2,0\n", encoding="utf-8")
        mu = tmp_path / "mu.csv"
        code, out, _ = _run(
            capsys, "folner", "-s", "translation", "--sequence", str(sets),
            "--testfn", str(testfn), "--mu-emit", str(mu),
        )
        assert code == 0
        rows = _rows(out)
        assert [(r["n"], r["set_size"], r["ratio"]) for r in rows] == [
            ("1", "2", "2"), ("2", "3", "4/3"),
        ]
        assert _rows(mu.read_text(encoding="utf-8")) == [
            {"n": "1", "mu_value": "1/2"}, {"n": "2", "mu_value": "1/3"},
        ]

    def test_unknown_sequence(self, capsys):
        """--sequence is ball, g-segment or an existing file."""
        code, _, err = _run(capsys, "folner", "-s", "translation", "--sequence", "spiral")
        assert code == 2
        assert "spiral" in err

    def test_unsorted_test_function(self, capsys, tmp_path):
        """Breakpoints must increase."""
        testfn = tmp_path / "bad.csv"
        testfn.write_text("x,y\n1,0\n0,1\n", encoding="utf-8")
        code, _, _ = _run(
            capsys, "folner", "-s", "translation", "--n", "2", "--testfn", str(testfn)
        )
        assert code == 2

    def test_unknown_generator(self, capsys):
        """The iterated generator must exist."""
        code, _, _ = _run(capsys, "folner", "-s", "translation", "--generator", "zz")
        assert code == 2


class TestOtherCommands:
    """Tests for qi, equicont, density and glue."""

    def test_qi(self, capsys, tmp_path):
        """The rotation correspondence is forward-Lipschitz."""
        pairs = tmp_path / "pairs.csv"
        code, out, _ = _run(
            capsys, "qi", "-s", "rotation_sqrt2", "--x", "0", "--y", "1/7",
            "--radius", "2", "--pairs-csv", str(pairs),
        )
        assert code == 0
        report = json.loads(out)
        assert report["forward_holds"] is True
        rows = _rows(pairs.read_text(encoding="utf-8"))
        assert len(rows) == 5
        assert list(rows[0].values()) == ["0", "1/7", "0", "0"]
        assert all(r["d_source"] == r["d_target"] for r in rows)
        assert sorted(int(r["d_source"]) for r in rows) == [0, 1, 1, 2, 2]

    def test_equicont(self, capsys):
        """Rotations are isometries, so δ(ε) = ε."""
        _, out, _ = _run(
            capsys, "equicont", "-s", "rotation_sqrt2", "--maxlen", "2", "--eps", "1/10"
        )
        (row,) = _rows(out)
        assert (row["eps"], row["delta"], row["shrinking"]) == ("1/10", "1/10", "false")
        assert row["by_length"] == "1/10|1/10"

    def test_density(self, capsys):
        """{0, α, -α} is 1/4-dense on the circle."""
        _, out, _ = _run(capsys, "density", "-s", "rotation_sqrt2", "--eps", "1/4")
        (row,) = _rows(out)
        assert row["radius"] == "1"
        assert row["largest_gap"] == "-1 + sqrt(2)"

    def test_density_failure(self, capsys):
        """A finite orbit is not dense."""
        code, _, err = _run(capsys, "density", "-s", "rotation_third", "--eps", "1/100", "--rmax", "5")
        assert code == 4
        assert err.startswith("error[equicont]")

    @pytest.mark.parametrize("mode", ["local", "quasilocal"])
    def test_glue(self, capsys, mode):
        """The bundled atlas glues to the line distance."""
        _, out, _ = _run(capsys, "glue", "--atlas", "atlas_two_patch", "--mode", mode)
        lines = out.splitlines()
        assert lines[0] == "point,p0,p1,p2,p3,p4"
        assert lines[1] == "p0,0,1/8,1/4,3/8,1/2"


class TestSelftest:
    """Tests for the selftest command."""

    def test_single_criterion(self, capsys):
        """A fast criterion passes on its own."""
        code, out, _ = _run(capsys, "selftest", "--only", "3")
        assert code == 0
        assert "criterion  3: PASS" in out
        assert "1/1 passed" in out
