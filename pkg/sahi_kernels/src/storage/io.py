"""Storage and I/O utilities."""

import hashlib
import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict

import pandas as pd
from loguru import logger

from sahi_kernels.src.config import Config


def dumps_payload(payload: Dict[str, Any]) -> str:
    """Canonical JSON text: sorted keys, fixed separators."""

    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def write_payload(payload: Dict[str, Any], path: Path) -> Path:
    """Write a JSON payload deterministically."""

    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps_payload(payload))
        f.write("\n")
    logger.info(f"Written payload: {path}")
    return path

def write_table_csv(frame: pd.DataFrame, path: Path) -> Path:
    """Write a region grid or scan census as CSV in its fixed column order."""

    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False)
    logger.info(f"Written table: {path} ({len(frame)} rows)")
    return path


def file_sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_manifest(files: Dict[str, Path], config: Config, command: str, manifest_path: Path) -> Path:
    """Record the settings a run used and the size and sha256 of every file it wrote."""

    entries = {}
    for name, file_path in sorted(files.items()):
        if not file_path.exists():
            logger.warning(f"Manifest entry {name} points to a missing file: {file_path}")
            continue
        entries[name] = {"file_path": str(file_path), "file_size": file_path.stat().st_size, "sha256": file_sha256(file_path)}

    manifest = {
        "generated_at": datetime.now().isoformat(),
        "command": command,
        "config": config.model_dump(mode="json"),
        "files": entries,
    }
    return write_payload(manifest, manifest_path)
