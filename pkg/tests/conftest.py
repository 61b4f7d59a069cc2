"""Shared fixtures: named complexes, the random corpus, printed matrices."""

from __future__ import annotations

import math

import numpy as np
import pytest

from greenlab.complexes import (
    GraphSpec,
    SimplicialComplex,
    erdos_renyi_whitney,
    from_maximal_faces,
    whitney_complex,
)
from greenlab.derived import SphereGeometry
from greenlab.potential import GreenFunction, green_function


def icosahedron_graph() -> GraphSpec:
    """Edges between golden-ratio coordinates at squared distance 4."""
    phi = (1 + math.sqrt(5)) / 2
    pts = sorted({
        (0.0, s1 * 1.0, s2 * phi) for s1 in (1, -1) for s2 in (1, -1)
    } | {
        (s1 * 1.0, s2 * phi, 0.0) for s1 in (1, -1) for s2 in (1, -1)
    } | {
        (s2 * phi, 0.0, s1 * 1.0) for s1 in (1, -1) for s2 in (1, -1)
    })
    edges = []
    for i in range(12):
        for j in range(i + 1, 12):
            d2 = sum((a - b) ** 2 for a, b in zip(pts[i], pts[j]))
            if abs(d2 - 4.0) < 1e-9:
                edges.append((i, j))
    return GraphSpec(12, edges)


def octahedron_graph() -> GraphSpec:
    """K_{2,2,2}: all pairs except the three antipodal ones."""
    anti = {(0, 5), (1, 4), (2, 3)}
    edges = [(i, j) for i in range(6) for j in range(i + 1, 6) if (i, j) not in anti]
    return GraphSpec(6, edges)


def cycle_graph(n: int) -> GraphSpec:
    return GraphSpec(n, [(i, (i + 1) % n) for i in range(n)])


def named_complexes() -> dict[str, SimplicialComplex]:
    return {
        "K1": from_maximal_faces([[0]]),
        "K2": from_maximal_faces([[0, 1]]),
        "K3": from_maximal_faces([[0, 1, 2]]),
        "C4": whitney_complex(cycle_graph(4)),
        "octahedron": whitney_complex(octahedron_graph()),
        "icosahedron": whitney_complex(icosahedron_graph()),
    }


def er_corpus() -> list[tuple[str, SimplicialComplex]]:
    """50 seeded Erdos-Renyi Whitney complexes, n <= 10, p in {0.3, 0.5, 0.7}."""
    out = []
    for seed in range(50):
        n = 6 + seed % 5
        p = (0.3, 0.5, 0.7)[seed % 3]
        out.append((f"er_{n}_{p}_{seed}", erdos_renyi_whitney(n, p, seed)))
    return out


class CorpusCache:
    """Per-session caches of the expensive per-complex structures."""

    def __init__(self) -> None:
        self._geo: dict[str, SphereGeometry] = {}
        self._green: dict[str, GreenFunction] = {}
        self.named = named_complexes()
        self.random = er_corpus()
        self.all = list(self.named.items()) + self.random

    def geometry(self, name: str, G: SimplicialComplex) -> SphereGeometry:
        if name not in self._geo:
            self._geo[name] = SphereGeometry(G)
        return self._geo[name]

    def green(self, name: str, G: SimplicialComplex) -> GreenFunction:
        if name not in self._green:
            self._green[name] = green_function(G)
        return self._green[name]


@pytest.fixture(scope="session")
def corpus() -> CorpusCache:
    return CorpusCache()


# The printed 3x3 and 7x7 connection Laplacians and their integer inverses,
# in the source layout (top face first); perms map canonical face indices to
# printed indices.
K2_PRINTED_L = np.array([
    [1, 1, 1],
    [1, 1, 0],
    [1, 0, 1],
])
K2_PRINTED_G = np.array([
    [-1, 1, 1],
    [1, 0, -1],
    [1, -1, 0],
])
K2_PRINTED_PERM = [1, 2, 0]  # canonical (v0, v1, e01) -> printed (e01, v0, v1)

K3_PRINTED_L = np.array([
    [1, 1, 1, 1, 1, 1, 1],
    [1, 1, 0, 0, 1, 1, 0],
    [1, 0, 1, 0, 1, 0, 1],
    [1, 0, 0, 1, 0, 1, 1],
    [1, 1, 1, 0, 1, 1, 1],
    [1, 1, 0, 1, 1, 1, 1],
    [1, 0, 1, 1, 1, 1, 1],
])
K3_PRINTED_G = np.array([
    [1, 1, 1, 1, -1, -1, -1],
    [1, 0, 0, 0, 0, 0, -1],
    [1, 0, 0, 0, 0, -1, 0],
    [1, 0, 0, 0, -1, 0, 0],
    [-1, 0, 0, -1, 0, 1, 1],
    [-1, 0, -1, 0, 1, 0, 1],
    [-1, -1, 0, 0, 1, 1, 0],
])
K3_PRINTED_PERM = [1, 2, 3, 4, 5, 6, 0]  # canonical (v, v, v, e, e, e, t) -> printed


def printed_to_canonical(M: np.ndarray, perm: list[int]) -> np.ndarray:
    return M[np.ix_(perm, perm)]


# Event locations frozen from a 2000-step, 64-start (128k starts total) sweep
# with seed 123; independent 500-step/24-start runs agree to 1e-6.  Regression
# tolerance for production sweeps is 1e-4.
K2_BETA1 = 0.62616553  # pitchfork, the single K2 event
K3_BETA1 = 0.50057080  # saddle node, carries the min-F catastrophe
K3_BETA2 = 0.85871631  # pitchfork, six branches in two 3-orbits
EVENT_TOL = 1e-4


@pytest.fixture(scope="session")
def k2_sweep(corpus):
    from greenlab.thermo import sweep

    return sweep(corpus.green("K2", corpus.named["K2"]), 0.0, 1.0, 400, 12, seed=7)


@pytest.fixture(scope="session")
def k3_sweep(corpus):
    from greenlab.thermo import sweep

    return sweep(corpus.green("K3", corpus.named["K3"]), 0.0, 1.0, 500, 24, seed=7)
