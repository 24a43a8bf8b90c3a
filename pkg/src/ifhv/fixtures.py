"""Paths to data files bundled with the package."""

from importlib import resources
from pathlib import Path


def table1_path() -> Path:
    """The bundled three-set demonstration problem (2 criteria, 1 DM, identity weights)."""
    return Path(str(resources.files("ifhv").joinpath("data", "table1.problem")))
