"""Run manifests: what a command read, wrote and with which settings."""

import json
from pathlib import Path
from typing import Any, Iterable, Mapping

from attrs import asdict, define, field
from frozendict import frozendict
from xxhash import xxh3_64

from lafair.src import util

from .exceptions import DigestMismatchError, ManifestError

MANIFEST_SCHEMA_VERSION = 1
_CHUNK = 1 << 20


def file_digest(path: Path) -> str:
    """xxh3_64 hex digest of a file's bytes."""
    digest = xxh3_64()
    with open(path, "rb") as handle:
        while chunk := handle.read(_CHUNK):
            digest.update(chunk)
    return digest.hexdigest()


def manifest_path(output: Path) -> Path:
    """`<output>.manifest.json` next to `output`."""
    return output.with_name(f"{output.name}.manifest.json")


def _digests(paths: Iterable[Path]) -> frozendict:
    return frozendict({str(p): file_digest(p) for p in paths})


@define(frozen=True)
class RunManifest:
    """Record of one command invocation.

    Attributes
    ----------
        command (str): Sub-command name.
        argv (tuple[str, ...]): Arguments after the program name.
        cwd (str): Working directory the command ran in.
        inputs (frozendict): Input path to xxh3_64 digest.
        outputs (frozendict): Deterministic output path to xxh3_64 digest.
        reports (tuple[str, ...]): Outputs holding timings, not digested.
        config (frozendict): Fully resolved settings.
        seed (int | None): Random seed, for stochastic commands.
        version (str): lafair version.
        elapsed_ms (float): Wall time of the command.

    """

    command: str
    argv: tuple[str, ...] = field(converter=tuple)
    cwd: str
    inputs: frozendict = field(converter=util.freeze, factory=frozendict)
    outputs: frozendict = field(converter=util.freeze, factory=frozendict)
    reports: tuple[str, ...] = field(converter=tuple, factory=tuple)
    config: frozendict = field(converter=util.freeze, factory=frozendict)
    seed: int | None = None
    version: str = "unknown"
    elapsed_ms: float = 0.0
    schema_version: int = MANIFEST_SCHEMA_VERSION

    @classmethod
    def record(
        cls,
        command: str,
        argv: Iterable[str],
        *,
        inputs: Iterable[Path] = (),
        outputs: Iterable[Path] = (),
        reports: Iterable[Path] = (),
        config: Mapping[str, Any] | None = None,
        seed: int | None = None,
        version: str = "unknown",
        elapsed_ms: float = 0.0,
    ) -> "RunManifest":
        """Digest `inputs` and `outputs` as they are on disk now."""
        return cls(
            command=command,
            argv=argv,
            cwd=str(Path.cwd()),
            inputs=_digests(inputs),
            outputs=_digests(outputs),
            reports=tuple(str(r) for r in reports),
            config=dict(config or {}),
            seed=seed,
            version=version,
            elapsed_ms=elapsed_ms,
        )

    def as_dict(self) -> dict[str, Any]:
        return util.unfreeze(asdict(self, recurse=False))

    def write(self, path: Path) -> None:
        path.write_text(json.dumps(self.as_dict(), indent=2) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: Path) -> "RunManifest":
        """Read a manifest written by `write`.

        Raises:
        ------
            ManifestError: The file is unreadable, malformed or from an
                unsupported schema version.

        """
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ManifestError(path, f"unable to read ({exc})") from exc
        if not isinstance(data, dict):
            raise ManifestError(path, "expected a JSON object")
        if (version := data.get("schema_version")) != MANIFEST_SCHEMA_VERSION:
            raise ManifestError(path, f"unsupported schema version {version}")
        try:
            return cls(**data)
        except TypeError as exc:
            raise ManifestError(path, f"malformed ({exc})") from exc

    def check_inputs(self, path: Path) -> None:
        """Raise if an input changed since the run was recorded."""
        for name, expected in self.inputs.items():
            source = Path(self.cwd) / name
            if not source.is_file() or file_digest(source) != expected:
                raise ManifestError(path, f"input '{name}' is missing or has changed")

    def verify_outputs(self, path: Path) -> None:
        """Raise if an output differs from the recorded digest."""
        for name, expected in self.outputs.items():
            target = Path(self.cwd) / name
            actual = file_digest(target) if target.is_file() else None
            if actual != expected:
                raise DigestMismatchError(path, name, expected, actual)
