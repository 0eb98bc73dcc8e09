"""Packaged example foliations used by the CLI docs and the test suite."""

from importlib import resources

from ..dsl import FoliationSpec, parse_spec

FIXTURE_NAMES = (
    "circles",
    "sl2",
    "perturbed-sl2",
    "weighted-n2",
    "weighted-n3",
    "sl2-semidirect-euler",
    "quadratic-x2dx",
    "non-involutive-pair",
)


def fixture_source(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}")
    return (
        resources.files(__package__).joinpath(f"{name}.fol").read_text("utf-8")
    )


def load_fixture(name: str) -> FoliationSpec:
    return parse_spec(fixture_source(name))
