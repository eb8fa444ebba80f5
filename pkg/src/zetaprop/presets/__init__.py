"""Bundled example presentations."""

from __future__ import annotations

from pathlib import Path

from ..presentation import MorsePresentation, parse_file

_HERE = Path(__file__).resolve().parent


def preset_names() -> list[str]:
    return sorted(p.stem for p in _HERE.glob("*.mt"))


def preset_path(name: str) -> Path:
    path = _HERE / f"{name}.mt"
    if not path.is_file():
        raise FileNotFoundError(f"no preset named {name!r}; available: {', '.join(preset_names())}")
    return path


def load_preset(name: str) -> MorsePresentation:
    return parse_file(preset_path(name))
