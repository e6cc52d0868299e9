"""Shared fixtures: charts and cached construction pipelines."""

import numpy as np
import pytest

from crgeo import Chart, OneForm
from crgeo.pseudohermitian import make_structure
from crgeo.verify import Pipeline


@pytest.fixture(scope="session")
def plane():
    return Chart(["x", "y"], [(-2.0, 2.0), (-2.0, 2.0)])


@pytest.fixture(scope="session")
def heisenberg():
    """Flat contact model: theta = -dt - (1/2)(y dx - x dy) reversed-sign gauge."""
    chart = Chart(["x", "y", "t"], [(-1.0, 1.0), (-1.0, 1.0), (-1.5, 1.5)])
    x, y, _ = chart.coordinate_fields()
    theta = OneForm(chart, [y * (-0.5), x * 0.5, chart.constant(-1.0)])
    base_j = np.array([[0.0, -1.0], [1.0, 0.0]])
    return make_structure(chart, theta, base_j, m=1, levi_signature=(1, 0))


_PIPELINES: dict = {}


@pytest.fixture(scope="session")
def pipeline():
    """Factory of cached verification pipelines at 32 points, seed 42."""

    def get(example: str, m: int) -> Pipeline:
        key = (example, m)
        if key not in _PIPELINES:
            _PIPELINES[key] = Pipeline(example, m, points=32, seed=42)
        return _PIPELINES[key]

    return get
