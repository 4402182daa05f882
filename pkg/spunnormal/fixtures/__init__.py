import json
from pathlib import Path
from typing import Union

FIXTURE_DIR = Path(__file__).parent

WHL = 'whl.json'
WHL_NZ = 'whl_nz.json'
WHL_TABLE = 'whl_reference.json'
FIGURE8 = 'figure8.json'
EMPTY = 'empty.json'
ONE_TET = 'one_tet.json'

# shipped companions of a triangulation fixture, used when the command line omits them
COMPANIONS = {
    WHL: dict(nz=WHL_NZ, reference=WHL_TABLE),
}

__all__ = [
    'FIXTURE_DIR', 'WHL', 'WHL_NZ', 'WHL_TABLE', 'FIGURE8', 'EMPTY', 'ONE_TET', 'COMPANIONS', 'fixture_path',
    'load_fixture', 'companion_of'
]


def fixture_path(name: str) -> Path:
    return FIXTURE_DIR.joinpath(name)


def load_fixture(name: str) -> dict:
    with open(fixture_path(name), encoding='utf-8') as f:
        return json.load(f)


def companion_of(path: Union[str, Path], kind: str):
    """The shipped ``nz`` or ``reference`` document belonging to ``path``, if ``path`` is a shipped fixture."""
    path = Path(path).resolve()
    if path.parent != FIXTURE_DIR.resolve():
        return None
    name = COMPANIONS.get(path.name, {}).get(kind)
    return fixture_path(name) if name is not None else None
