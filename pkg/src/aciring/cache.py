"""Disk cache for CLI results: one JSON file per key under a cache directory.

The key hashes the command name, its parameters, and the package version,
so results from an older code version simply never match again.  A corrupt
or unreadable file behaves like a miss and is overwritten on store.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from . import __version__

CACHE_ENV = "ACIRING_CACHE_DIR"


def cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "aciring"


def cache_key(command: str, **params) -> str:
    payload = {"command": command, "params": params, "version": __version__}
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:32]


def lookup(key: str):
    """The stored payload for the key, or None on miss/corruption."""
    path = cache_dir() / f"{key}.json"
    try:
        with open(path) as fh:
            entry = json.load(fh)
    except (OSError, json.JSONDecodeError, UnicodeDecodeError):
        return None
    if not isinstance(entry, dict) or entry.get("version") != __version__:
        return None
    return entry.get("payload")


def store(key: str, payload) -> None:
    directory = cache_dir()
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{key}.json"
    tmp = path.with_suffix(".tmp")
    with open(tmp, "w") as fh:
        json.dump({"version": __version__, "payload": payload}, fh)
    os.replace(tmp, path)
