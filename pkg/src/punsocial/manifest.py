"""Run manifests: config/input/output digests for reproducibility checks."""

from __future__ import annotations

import hashlib
import json
import time
from pathlib import Path
from typing import Mapping, Sequence

MANIFEST_NAME = "manifest.json"


def sha256_file(path: str | Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def config_digest(config: Mapping) -> str:
    """Digest of the canonical (sorted-key) JSON serialization."""
    canonical = json.dumps(config, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def write_manifest(
    out_dir: str | Path,
    tool_version: str,
    seed: int,
    config: Mapping,
    inputs: Mapping[str, str | Path],
    outputs: Sequence[str | Path],
) -> Path:
    """Write the single manifest for an output directory and return its path."""
    out_dir = Path(out_dir)
    record = {
        "tool_version": tool_version,
        "seed": seed,
        "config": dict(config),
        "config_digest": config_digest(config),
        "inputs": {name: sha256_file(path) for name, path in sorted(inputs.items())},
        "outputs": {
            str(Path(path).relative_to(out_dir)): sha256_file(path) for path in outputs
        },
        "created_at": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
    }
    path = out_dir / MANIFEST_NAME
    path.write_text(json.dumps(record, indent=2, sort_keys=True, default=str) + "\n", encoding="utf-8")
    return path
