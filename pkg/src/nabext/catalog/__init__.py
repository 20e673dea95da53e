"""Bundled example algebras, cocycles, gauge maps and sections (JSON)."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from ..formats import algebra_from_json, cocycle_from_json, loads

ALGEBRAS = ("ab1", "ab2", "ab3", "aff2", "heis3", "so3", "sl2", "bad3")


def path(name: str) -> Path:
    """Filesystem path of a bundled file, e.g. ``path("so3.json")``."""
    return Path(str(resources.files(__name__).joinpath(name)))


def load_json(name: str):
    return loads(path(name).read_text())


def algebra(name: str):
    return algebra_from_json(load_json(f"{name}.json"))


def cocycle(name: str, dg: int, dh: int):
    return cocycle_from_json(load_json(f"{name}.json"), dg, dh)
