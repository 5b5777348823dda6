"""Test lafair.src.cli."""

import json
from pathlib import Path
from typing import Callable

import numpy as np
from click.testing import Result
from pytest import approx, mark, param, raises

from lafair.lafair import LAFAIR_VERSION
from lafair.src import testing
from lafair.src.cli import manifest
from lafair.src.cli.exceptions import DigestMismatchError, ManifestError
from lafair.src.cli.export import diverging_colors

LIB = Path(__file__).parent / "lib"


class Test_integration:
    """Run the command definitions in tests/lib/integration."""

    @staticmethod
    @testing.parametrize_from_yaml([*sorted(LIB.glob("integration/*.yaml"))])
    def test_integration(definition: dict, run_definition: Callable) -> None:
        run_definition(definition)


class Test_main:
    """Test the command group."""

    @staticmethod
    def test_version(lafair_cli: Callable[..., Result]) -> None:
        """Test --version."""
        _result = lafair_cli("--version")
        assert _result.exit_code == 0
        assert LAFAIR_VERSION in _result.output

    @staticmethod
    @mark.parametrize(
        "command",
        [
            param("gen", id="gen"),
            param("noise", id="noise"),
            param("filter", id="filter"),
            param("curvature", id="curvature"),
            param("metrics", id="metrics"),
            param("curve", id="curve"),
            param("config", id="config"),
            param("replay", id="replay"),
        ],
    )
    def test_help(lafair_cli: Callable[..., Result], command: str) -> None:
        """Test every command has help."""
        _result = lafair_cli(command, "--help")
        assert _result.exit_code == 0, _result.output

    @staticmethod
    def test_filter_help_lists_schema_options(lafair_cli: Callable[..., Result]) -> None:
        """Test the filter command exposes the filter section of the schema."""
        _result = lafair_cli("filter", "--help")
        for option in ("--iterations", "--ring_depth", "--boundary_policy", "--config_file"):
            assert option in _result.output

    @staticmethod
    def test_logfile(tmp_path: Path, lafair_cli: Callable[..., Result]) -> None:
        """Test --logfile writes the command log."""
        _log = tmp_path / "lafair.log"
        _mesh = tmp_path / "sphere.obj"
        _result = lafair_cli("--logfile", _log, "gen", "sphere", "--subdiv", "0", "-o", _mesh)
        assert _result.exit_code == 0, _result.output
        assert f"Wrote {_mesh} (12 vertices, 20 faces)" in _log.read_text()


class Test_RunManifest:
    """Test RunManifest."""

    @staticmethod
    def test_write_load(tmp_path: Path) -> None:
        """Test a written manifest loads back equal."""
        _output = tmp_path / "out.txt"
        _output.write_text("A")
        _record = manifest.RunManifest.record(
            "gen",
            ["gen", "plane", "--n", "1"],
            outputs=[_output],
            config={"kind": "plane", "size": None},
            version="1.0.0",
        )
        _path = manifest.manifest_path(_output)
        assert _path.name == "out.txt.manifest.json"
        _record.write(_path)
        assert manifest.RunManifest.load(_path) == _record
        assert json.loads(_path.read_text())["outputs"] == {
            str(_output): manifest.file_digest(_output)
        }

    @staticmethod
    def test_digest(tmp_path: Path) -> None:
        """Test digests follow the file content."""
        _a, _b = tmp_path / "a", tmp_path / "b"
        _a.write_bytes(b"lafair")
        _b.write_bytes(b"lafair")
        assert manifest.file_digest(_a) == manifest.file_digest(_b)
        _b.write_bytes(b"lafair\n")
        assert manifest.file_digest(_a) != manifest.file_digest(_b)

    @staticmethod
    def test_verify_outputs(tmp_path: Path) -> None:
        """Test changed and missing outputs are reported."""
        _output = tmp_path / "out.txt"
        _output.write_text("A")
        _record = manifest.RunManifest.record("gen", [], outputs=[_output])
        _record.verify_outputs(tmp_path / "m.json")

        _output.write_text("B")
        with raises(DigestMismatchError, match="does not match") as exc:
            _record.verify_outputs(tmp_path / "m.json")
        assert exc.value.output == str(_output)

        _output.unlink()
        with raises(DigestMismatchError, match="missing"):
            _record.verify_outputs(tmp_path / "m.json")

    @staticmethod
    @mark.parametrize(
        "content,match",
        [
            param("[]", "expected a JSON object", id="not an object"),
            param('{"schema_version": 2}', "unsupported schema version 2", id="version"),
            param('{"schema_version": 1, "command": "gen"}', "malformed", id="missing keys"),
            param("{", "unable to read", id="invalid json"),
        ],
    )
    def test_load_invalid(tmp_path: Path, content: str, match: str) -> None:
        """Test unreadable manifests raise ManifestError."""
        _path = tmp_path / "m.json"
        _path.write_text(content)
        with raises(ManifestError, match=match):
            manifest.RunManifest.load(_path)


class Test_diverging_colors:
    """Test diverging_colors."""

    @staticmethod
    def test_colors() -> None:
        """Test negative values are blue, positive red, zero white and NaN gray."""
        _colors = diverging_colors([-1.0, 0.0, 0.0, 0.0, 1.0, float("nan")])
        assert _colors.tolist() == [
            [0, 0, 255],
            *[[255, 255, 255]] * 3,
            [255, 0, 0],
            [128, 128, 128],
        ]

    @staticmethod
    def test_constant() -> None:
        """Test an all-zero field is white."""
        assert diverging_colors([0.0, 0.0]).tolist() == [[255, 255, 255]] * 2


class Test_commands:
    """Check command outputs against known geometry."""

    @staticmethod
    def test_curve_slope(tmp_path: Path, lafair_cli: Callable[..., Result]) -> None:
        """Test the printed slope of a clothoid."""
        _result = lafair_cli(
            "curve", "--alpha", "-1", "--n", "2000", "-o", tmp_path / "clothoid.csv"
        )
        assert _result.exit_code == 0, _result.output
        (_line,) = [ln for ln in _result.output.splitlines() if ln.startswith("lcg_slope:")]
        assert float(_line.split(":")[1]) == approx(-1.0, abs=1e-2)

    @staticmethod
    def test_curve_circle_closes(tmp_path: Path, lafair_cli: Callable[..., Result]) -> None:
        """Test a full turn of a circle ends where it starts."""
        _csv = tmp_path / "circle.csv"
        _args = ["--alpha", "0", "--c0", "1", "--c1", "0", "--s_max", str(2 * np.pi)]
        _result = lafair_cli("curve", *_args, "--n", "100", "-o", _csv)
        assert _result.exit_code == 0, _result.output
        _rows = np.loadtxt(_csv, delimiter=",", skiprows=1)
        assert _rows[-1, 1:3] == approx(_rows[0, 1:3], abs=1e-8)
        assert _rows[:, 4] == approx(1.0)

    @staticmethod
    @mark.parametrize(
        "kind,resolution",
        [
            param("plane", "8", id="flat grid"),
            param("sphere", "3", id="icosphere"),
        ],
    )
    def test_curvature_csv(
        tmp_path: Path,
        lafair_cli: Callable[..., Result],
        kind: str,
        resolution: str,
    ) -> None:
        """Test the K column of flat and spherical meshes."""
        _mesh, _csv = tmp_path / "mesh.obj", tmp_path / "k.csv"
        assert lafair_cli("gen", kind, "--n", resolution, "-o", _mesh).exit_code == 0
        assert lafair_cli("curvature", _mesh, "-o", _csv).exit_code == 0
        _rows = np.loadtxt(_csv, delimiter=",", skiprows=1)
        _interior = _rows[_rows[:, 7] == 0]
        if kind == "plane":
            assert np.abs(_interior[:, 6]).max() < 1e-10
        else:
            assert len(_rows) == 642
            assert _interior[:, 6].mean() == approx(1.0, rel=0.05)

    @staticmethod
    def test_noise_filter_metrics(tmp_path: Path, lafair_cli: Callable[..., Result]) -> None:
        """Test the noise amplitude, the residual decrease and the reference distance."""
        _clean, _noisy, _fair = (tmp_path / f"{n}.obj" for n in ("clean", "noisy", "fair"))
        assert lafair_cli("gen", "sphere", "--subdiv", "3", "-o", _clean).exit_code == 0
        assert (
            lafair_cli("noise", _clean, "--amplitude", "0.005", "-o", _noisy).exit_code == 0
        )

        _result = lafair_cli("filter", _noisy, "--iters", "10", "-o", _fair)
        assert _result.exit_code == 0, _result.output
        _report = json.loads((tmp_path / "fair.report.json").read_text())
        assert len(_report["steps"]) == 10
        assert _report["final_mean_k_residual"] < _report["initial_mean_k_residual"]

        _metrics = tmp_path / "noisy.json"
        assert lafair_cli("metrics", _noisy, "--ref", _clean, "-o", _metrics).exit_code == 0
        assert 0 < json.loads(_metrics.read_text())["rms_distance"] <= 0.005
