"""JSON input and output. Rationals travel as ``"p/q"`` strings."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .errors import ArgumentError
from .graded import GradedSpace
from .hseries import as_fraction


def read_json(source) -> dict:
    """Parse inline JSON text, or read a file."""
    text = str(source).strip()
    if text.startswith("{"):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ArgumentError(f"invalid inline JSON: {exc}") from None
    p = Path(text)
    if not p.exists():
        raise ArgumentError(f"no such file: {text}")
    try:
        return json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise ArgumentError(f"invalid JSON in {text}: {exc}") from None


def space_from_json(data: dict) -> GradedSpace:
    try:
        n = int(data["n"])
        gens = [(g["name"], int(g["degree"])) for g in data["generators"]]
    except (KeyError, TypeError, ValueError):
        raise ArgumentError("space json needs 'n' and 'generators' [{name, degree}]") from None
    pairing = data.get("pairing")
    if pairing is not None:
        try:
            pairing = [[as_fraction(x) for x in row] for row in pairing]
        except (TypeError, ValueError, ZeroDivisionError):
            raise ArgumentError("pairing entries must be rationals like \"p/q\"") from None
    return GradedSpace.build(n, gens, pairing, bool(data.get("symplectic", True)))


def space_to_json(space: GradedSpace) -> dict:
    return {
        "generators": [{"degree": d, "name": nm} for nm, d in zip(space.names, space.degrees)],
        "n": space.n,
        "pairing": [[str(x) for x in row] for row in space.pairing],
        "symplectic": space.symplectic,
    }


def load_space(source) -> GradedSpace:
    """A space from inline JSON, a file, or a catalogue name (``moyal1``, ``odd3`` ...)."""
    text = str(source).strip()
    if not text.startswith("{") and not Path(text).exists():
        try:
            text = resources.files("weylalg").joinpath("data").joinpath("spaces") \
                .joinpath(f"{text}.json").read_text()
        except FileNotFoundError:
            raise ArgumentError(f"no space file or catalogue entry {source!r}") from None
    return space_from_json(read_json(text))


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)
