"""Bundled example specs."""

from importlib import resources


def fixture_text(name: str) -> str:
    return resources.files(__name__).joinpath(name).read_text(encoding="utf-8")
