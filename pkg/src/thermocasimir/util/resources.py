"""
Resource helpers for files bundled via importlib.resources.

Example
-------
from thermocasimir.util.resources import preset_path
toml = preset_path("afm").read_text()
"""
from importlib.resources import files
from importlib.resources.abc import Traversable

_PRESET_PACKAGE = "thermocasimir.presets"
_PRESET_SUFFIX = ".toml"


def preset_path(name: str) -> Traversable:
    """
    Return the packaged scenario file ``<name>.toml``.

    Works transparently whether the package lives on the filesystem or
    inside a wheel.  Raises ``FileNotFoundError`` for unknown names.
    """
    resource = files(_PRESET_PACKAGE).joinpath(f"{name}{_PRESET_SUFFIX}")
    if not resource.is_file():
        raise FileNotFoundError(
            f"no preset named {name!r}; available: {', '.join(available_presets())}"
        )
    return resource


def available_presets() -> list[str]:
    """Names of all packaged presets, sorted."""
    return sorted(
        entry.name[: -len(_PRESET_SUFFIX)]
        for entry in files(_PRESET_PACKAGE).iterdir()
        if entry.name.endswith(_PRESET_SUFFIX)
    )
