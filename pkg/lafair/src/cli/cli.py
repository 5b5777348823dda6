"""Command-line interface for lafair"""

import logging
import time
from contextlib import chdir
from functools import wraps
from pathlib import Path
from typing import Any, Callable, Sequence

import numpy as np
import psutil
import rich_click as click
from attrs import asdict
from humanfriendly import format_timespan

from lafair.lafair import LAFAIR_ROOT, LAFAIR_VERSION
from lafair.src import logs
from lafair.src.cfg import Config, ConfigError, Schema, with_options
from lafair.src.curvature import curvature_field
from lafair.src.curve import (
    ConstantCurvatureError,
    CurveError,
    LACurveParams,
    PolylineError,
    QuadConfig,
    lcg_slope,
    sample_curve,
)
from lafair.src.filter import (  # pylint: disable=redefined-builtin
    FilterConfig,
    FilterError,
    filter,
)
from lafair.src.functionals import FunctionalError, energy_report
from lafair.src.mesh import (
    MeshError,
    MeshKind,
    TriangleMesh,
    add_noise,
    gen_mesh,
    load_mesh,
    save_mesh,
)

from .exceptions import ManifestError, OutputValidationError, VertexCountMismatchError
from .export import write_curvature_csv, write_curvature_ply, write_curve_csv, write_json
from .manifest import RunManifest, manifest_path

SCHEMA = Schema.from_file(LAFAIR_ROOT / "schema.base.yaml")
ARGV_KEY = "lafair.argv"

_EXPECTED_ERRORS = (
    MeshError,
    CurveError,
    FilterError,
    FunctionalError,
    ConfigError,
    ManifestError,
    OutputValidationError,
    VertexCountMismatchError,
    OSError,
)


class ArgvGroup(click.RichGroup):
    """Group that remembers the arguments it was invoked with."""

    def parse_args(self, ctx: click.Context, args: list[str]) -> list[str]:
        ctx.meta[ARGV_KEY] = tuple(args)
        return super().parse_args(ctx, args)


def handle_errors(func: Callable) -> Callable:
    """Log library errors as critical and exit with status 1."""

    @wraps(func)
    def inner(*args: Any, **kwargs: Any) -> Any:
        _logger: logging.LoggerAdapter = click.get_current_context().obj["logger"]
        try:
            return func(*args, **kwargs)
        except click.ClickException:
            raise
        except _EXPECTED_ERRORS as exc:
            _logger.critical(exc)
            raise SystemExit(1) from exc
        except Exception as exc:
            _logger.critical(f"Unhandled exception: {exc!r}", exc_info=True)
            raise SystemExit(1) from exc

    return inner


def _record(
    ctx: click.Context,
    command: str,
    start: float,
    *,
    outputs: Sequence[Path],
    inputs: Sequence[Path] = (),
    reports: Sequence[Path] = (),
    config: dict[str, Any] | None = None,
    seed: int | None = None,
) -> None:
    elapsed = time.perf_counter() - start
    manifest = RunManifest.record(
        command,
        ctx.meta.get(ARGV_KEY, ()),
        inputs=inputs,
        outputs=outputs,
        reports=reports,
        config=config,
        seed=seed,
        version=LAFAIR_VERSION,
        elapsed_ms=1e3 * elapsed,
    )
    manifest.write(path := manifest_path(outputs[0]))
    ctx.obj["logger"].info(f"Wrote {path} ({format_timespan(elapsed)})")


def _save_checked(mesh: TriangleMesh, path: Path, logger: logging.LoggerAdapter) -> None:
    save_mesh(mesh, path)
    written = load_mesh(path, logger=logger)
    if (written.n_vertices, written.n_faces) != (mesh.n_vertices, mesh.n_faces):
        raise OutputValidationError(
            path,
            f"read back {written.n_vertices} vertices and {written.n_faces} faces,"
            f" expected {mesh.n_vertices} and {mesh.n_faces}",
        )
    logger.info(f"Wrote {path} ({mesh.n_vertices} vertices, {mesh.n_faces} faces)")


_output_option = click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Output path",
)

_input_argument = click.argument(
    "input_path",
    metavar="MESH",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
)


@click.group(
    cls=ArgvGroup,
    context_settings={
        "help_option_names": ["-h", "--help"],
        "show_default": True,
    },
)
@click.option(
    "--log_level",
    type=click.Choice(
        ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        case_sensitive=False,
    ),
    help="Log level",
    default="INFO",
    callback=lambda ctx, param, value: value.upper(),
)
@click.option(
    "--logfile",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Also write DEBUG-level logs to this file",
    default=None,
)
@click.version_option(LAFAIR_VERSION, prog_name="lafair")
@click.pass_context
def main(ctx: click.Context, log_level: str, logfile: Path | None) -> None:
    """lafair

    Log-aesthetic surface filter, curves and fairing energies for triangle meshes
    """
    ctx.ensure_object(dict)
    external_filter = logs.ExternalFilter((LAFAIR_ROOT,))
    logs.setup_console_handler(filters=(external_filter,), level=log_level)
    if logfile is not None:
        logs.setup_file_handler(logfile, filters=(external_filter,))
    logs.handle_warnings()

    ctx.obj["logger"] = logging.LoggerAdapter(logging.getLogger(), {"label": "lafair"})


@main.command()
@click.argument("kind", type=click.Choice([k.value for k in MeshKind]))
@click.option(
    "resolution",
    "--resolution",
    "--subdiv",
    "--n",
    type=click.IntRange(min=0),
    required=True,
    help="Grid cells per side (plane, saddle), rows (cylinder) or subdivision level (sphere)",
)
@click.option(
    "--size",
    type=click.FloatRange(min=0, min_open=True),
    help="Side length of plane and saddle",
)
@click.option(
    "--radius",
    type=click.FloatRange(min=0, min_open=True),
    default=1.0,
    help="Sphere and cylinder radius",
)
@click.option(
    "--height",
    type=click.FloatRange(min=0, min_open=True),
    default=2.0,
    help="Cylinder height",
)
@_output_option
@click.pass_context
@handle_errors
def gen(
    ctx: click.Context,
    kind: str,
    resolution: int,
    size: float | None,
    radius: float,
    height: float,
    output: Path | None,
) -> None:
    """Generate an analytic test mesh"""
    start = time.perf_counter()
    logger = logging.LoggerAdapter(logging.getLogger(), {"label": "gen"})
    output = output or Path(f"{kind}.obj")
    try:
        mesh = gen_mesh(kind, resolution, size=size, radius=radius, height=height)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="'--resolution'") from exc
    _save_checked(mesh, output, logger)
    _record(
        ctx,
        "gen",
        start,
        outputs=[output],
        config={
            "kind": kind,
            "resolution": resolution,
            "size": size,
            "radius": radius,
            "height": height,
        },
    )


@main.command()
@_input_argument
@click.option(
    "--amplitude",
    type=click.FloatRange(min=0),
    required=True,
    help="Largest normal displacement",
)
@click.option("--seed", type=int, default=0, help="Random seed")
@_output_option
@click.pass_context
@handle_errors
def noise(
    ctx: click.Context,
    input_path: Path,
    amplitude: float,
    seed: int,
    output: Path | None,
) -> None:
    """Displace vertices along their normals by uniform noise"""
    start = time.perf_counter()
    logger = logging.LoggerAdapter(logging.getLogger(), {"label": "noise"})
    output = output or input_path.with_name(f"{input_path.stem}.noisy.obj")
    mesh = load_mesh(input_path, logger=logger)
    _save_checked(add_noise(mesh, amplitude, seed), output, logger)
    _record(
        ctx,
        "noise",
        start,
        inputs=[input_path],
        outputs=[output],
        config={"amplitude": amplitude},
        seed=seed,
    )


@main.command("filter")
@_input_argument
@_output_option
@click.option(
    "--report",
    type=click.Path(dir_okay=False, path_type=Path),
    help="JSON run report (defaults to <output stem>.report.json)",
)
@click.pass_context
@handle_errors
@with_options(SCHEMA, "filter")
def filter_(
    ctx: click.Context,
    input_path: Path,
    output: Path | None,
    report: Path | None,
    config: Config,
) -> None:
    """Apply the log-aesthetic surface filter"""
    start = time.perf_counter()
    logger = logging.LoggerAdapter(logging.getLogger(), {"label": "filter"})
    output = output or input_path.with_name(f"{input_path.stem}.fair.obj")
    report = report or output.with_suffix(".report.json")

    threads = config.get("threads") or psutil.cpu_count(logical=False) or 1
    cfg = FilterConfig.from_config({**config, "threads": threads})
    logger.debug(f"Filter settings: {cfg}")

    mesh = load_mesh(input_path, logger=logger)
    fair, run = filter(mesh, cfg, logger)
    _save_checked(fair, output, logger)
    write_json(
        report,
        {"input": input_path, "output": output, "config": asdict(cfg), **run.as_dict()},
    )
    logger.info(
        f"Mean plane residual {run.initial_mean_k_residual:.4g} -> "
        f"{run.final_mean_k_residual:.4g}"
    )
    _record(
        ctx,
        "filter",
        start,
        inputs=[input_path],
        outputs=[output],
        reports=[report],
        config=asdict(cfg),
    )


@main.command()
@_input_argument
@_output_option
@click.option(
    "--ply",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Also write a PLY colored by Gaussian curvature",
)
@click.pass_context
@handle_errors
def curvature(
    ctx: click.Context,
    input_path: Path,
    output: Path | None,
    ply: Path | None,
) -> None:
    """Export per-vertex Gaussian curvature"""
    start = time.perf_counter()
    logger = logging.LoggerAdapter(logging.getLogger(), {"label": "curvature"})
    output = output or input_path.with_name(f"{input_path.stem}.curvature.csv")
    mesh = load_mesh(input_path, logger=logger)
    field = curvature_field(mesh)

    write_curvature_csv(output, mesh, field)
    logger.info(f"Wrote {output} ({mesh.n_vertices} rows)")
    outputs = [output]
    if ply is not None:
        write_curvature_ply(ply, mesh, field.gaussian)
        logger.info(f"Wrote {ply}")
        outputs.append(ply)
    _record(ctx, "curvature", start, inputs=[input_path], outputs=outputs)


@main.command()
@_input_argument
@click.option(
    "--ref",
    "reference",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Reference mesh; vertices are matched by index",
)
@click.option(
    "--ring_depth",
    type=click.IntRange(min=1),
    default=2,
    help="Depth of the curvature-plane fits",
)
@_output_option
@click.pass_context
@handle_errors
def metrics(
    ctx: click.Context,
    input_path: Path,
    reference: Path | None,
    ring_depth: int,
    output: Path | None,
) -> None:
    """Report fairing energies of a mesh"""
    start = time.perf_counter()
    logger = logging.LoggerAdapter(logging.getLogger(), {"label": "metrics"})
    output = output or input_path.with_suffix(".metrics.json")
    mesh = load_mesh(input_path, logger=logger)

    rms_distance = None
    inputs = [input_path]
    if reference is not None:
        ref = load_mesh(reference, logger=logger)
        if ref.n_vertices != mesh.n_vertices:
            raise VertexCountMismatchError(mesh.n_vertices, ref.n_vertices)
        offsets = mesh.vertices - ref.vertices
        rms_distance = float(np.sqrt(np.mean(np.sum(offsets**2, axis=1))))
        inputs.append(reference)

    energies = energy_report(mesh, ring_depth)
    for key, value in energies.as_dict().items():
        click.echo(f"{key}: {value}")
    if rms_distance is not None:
        click.echo(f"rms_distance: {rms_distance}")

    write_json(
        output,
        {
            "mesh": input_path,
            "reference": reference,
            "n_vertices": mesh.n_vertices,
            "n_faces": mesh.n_faces,
            "ring_depth": ring_depth,
            **energies.as_dict(),
            "rms_distance": rms_distance,
        },
    )
    _record(
        ctx,
        "metrics",
        start,
        inputs=inputs,
        outputs=[output],
        config={"ring_depth": ring_depth},
    )


@main.command()
@click.option(
    "--alpha",
    type=float,
    required=True,
    help="Slope of the logarithmic curvature graph",
)
@click.option("--c0", type=float, default=1.0, help="Radius parameter c0")
@click.option("--c1", type=float, default=1.0, help="Radius parameter c1")
@click.option("--c2", type=float, default=0.0, help="Tangent angle at s = 0")
@click.option("--p0", type=(float, float), default=(0.0, 0.0), help="Start point")
@click.option(
    "--s_max",
    type=click.FloatRange(min=0, min_open=True),
    default=1.0,
    help="Arc length",
)
@click.option(
    "-n",
    "--n",
    "n",
    type=click.IntRange(min=2),
    default=200,
    help="Number of samples",
)
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    default=Path("curve.csv"),
    help="Output CSV",
)
@click.pass_context
@handle_errors
@with_options(SCHEMA, "quadrature")
def curve(
    ctx: click.Context,
    alpha: float,
    c0: float,
    c1: float,
    c2: float,
    p0: tuple[float, float],
    s_max: float,
    n: int,
    output: Path,
    config: Config,
) -> None:
    """Sample a log-aesthetic curve"""
    start = time.perf_counter()
    logger = logging.LoggerAdapter(logging.getLogger(), {"label": "curve"})
    params = LACurveParams(alpha, c0, c1, c2, p0)
    quad_config = QuadConfig.from_config(config)

    polyline = sample_curve(params, s_max, n, quad_config)
    write_curve_csv(output, params, polyline)
    logger.info(f"Wrote {output} ({n} samples)")

    try:
        click.echo(f"lcg_slope: {lcg_slope(polyline):.6f}")
    except ConstantCurvatureError:
        click.echo("lcg_slope: undefined (constant curvature)")
    except PolylineError as exc:
        click.echo(f"lcg_slope: undefined ({exc})")

    _record(
        ctx,
        "curve",
        start,
        outputs=[output],
        config={
            "params": asdict(params),
            "s_max": s_max,
            "n": n,
            "quadrature": asdict(quad_config),
        },
    )


@main.command("config")
@click.argument("section", type=click.Choice(SCHEMA.sections), required=False)
def config_(section: str | None) -> None:
    """Print an example configuration file"""
    schema = SCHEMA
    if section is not None:
        schema = Schema(
            {"type": "object", "properties": {section: SCHEMA.section(section).as_dict()}}
        )
    click.echo(schema.example_config, nl=False)


@main.command()
@click.argument(
    "manifest",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
)
@click.pass_context
@handle_errors
def replay(ctx: click.Context, manifest: Path) -> None:
    """Re-run a recorded command and verify its outputs"""
    logger = logging.LoggerAdapter(logging.getLogger(), {"label": "replay"})
    manifest = manifest.resolve()
    recorded = RunManifest.load(manifest)
    if recorded.command == "replay":
        raise ManifestError(manifest, "a replay cannot be replayed")
    recorded.check_inputs(manifest)

    logger.info(f"Replaying 'lafair {' '.join(recorded.argv)}' in {recorded.cwd}")
    with chdir(recorded.cwd):
        main.main(args=list(recorded.argv), prog_name="lafair", standalone_mode=False)
    recorded.verify_outputs(manifest)
    logger.info(f"All {len(recorded.outputs)} outputs match")
