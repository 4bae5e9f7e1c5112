"""Shared fixtures: the bundled graphs and seeded random rotation systems."""

from __future__ import annotations

from random import Random

import pytest

from bicolorgame.embedded import EmbeddedGraph
from bicolorgame.fixtures import load_fixture
from bicolorgame.random_graphs import random_embedded_graph, random_planar_graph


@pytest.fixture(scope="session")
def torus_grid() -> EmbeddedGraph:
    return load_fixture("torus_grid")


@pytest.fixture(scope="session")
def square_handles() -> EmbeddedGraph:
    return load_fixture("torus_square_handles")


@pytest.fixture(scope="session")
def two_triangles() -> EmbeddedGraph:
    return load_fixture("plane_two_triangles")


@pytest.fixture(scope="session")
def torus_rose() -> EmbeddedGraph:
    return load_fixture("torus_rose")


@pytest.fixture(scope="session")
def random_batch() -> list[EmbeddedGraph]:
    """208 random connected rotation systems, |E| <= 12, mixed genus."""
    rng = Random(0xB1C0)
    return [random_embedded_graph(rng, max_vertices=6, max_edges=12) for _ in range(208)]


@pytest.fixture(scope="session")
def planar_batch() -> list[EmbeddedGraph]:
    """56 random planar rotation systems, |E| <= 12."""
    rng = Random(0x9E45)
    return [random_planar_graph(rng, max_edges=12) for _ in range(56)]


@pytest.fixture(scope="session")
def small_random_batch(random_batch) -> list[EmbeddedGraph]:
    """Subset with few enough edges for exhaustive coloring sweeps."""
    return [g for g in random_batch if g.edge_count <= 10][:40]
