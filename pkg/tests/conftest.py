import json

import numpy as np
import pytest
from typer.testing import CliRunner

from relmaj.core.schema import Pair
from relmaj.entangle.schema import SchmidtVector
from relmaj.main import app
from relmaj.thermo.schema import Resource

# Two-level worked instance against the uniform reference
WORKED_SOURCE = ([0.7, 0.3], [0.5, 0.5])
WORKED_TARGET = ([0.9, 0.1], [0.5, 0.5])


@pytest.fixture
def source_pair():
    return Pair.of(*WORKED_SOURCE)


@pytest.fixture
def target_pair():
    return Pair.of(*WORKED_TARGET)


@pytest.fixture
def source_resource():
    return Resource.of(*WORKED_SOURCE, label="source")


@pytest.fixture
def target_resource():
    return Resource.of(*WORKED_TARGET, label="target")


@pytest.fixture
def landauer():
    return Resource.pure_bit()


@pytest.fixture
def rng():
    return np.random.default_rng(7)


@pytest.fixture
def schmidt_pair():
    return SchmidtVector.of([0.8, 0.2], label="partial"), SchmidtVector.of([0.5, 0.5], label="bell")


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def invoke(runner):
    def call(*args):
        return runner.invoke(app, [str(arg) for arg in args])

    return call


@pytest.fixture
def documents(tmp_path):
    """Resource and Schmidt documents written to a temporary directory."""
    contents = {
        "source": {"name": "source", "p": WORKED_SOURCE[0], "q": WORKED_SOURCE[1]},
        "target": {"name": "target", "p": WORKED_TARGET[0], "q": WORKED_TARGET[1]},
        "pure_bit": {"name": "pure-bit", "p": [1, 0], "q": [0.5, 0.5]},
        "diagonal": {"name": "diagonal", "p": [0.5, 0.5], "q": [0.5, 0.5]},
        "qutrit": {"name": "qutrit", "energies": [0, 1, 2], "beta": 0.693147, "population": [0.6, 0.3, 0.1]},
        "unnormalized": {"p": [0.5, 0.6], "q": [0.5, 0.5]},
        "partial": {"name": "partial", "schmidt": [0.8, 0.2]},
        "bell": {"name": "bell", "schmidt": [0.5, 0.5]},
    }
    paths = {}
    for name, content in contents.items():
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(content))
        paths[name] = path
    return paths
