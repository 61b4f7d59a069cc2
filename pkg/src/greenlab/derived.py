"""Graphs derived from a complex: refinement graph, connection graph, spheres.

Both derived graphs live on the canonical face indices of the base complex.
In the refinement graph two faces are adjacent iff one strictly contains the
other; in the connection graph iff they intersect.  Unit spheres are always
taken in the refinement graph and materialized as Whitney subcomplexes, so
their Euler characteristics run through the same code path as everything else.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .complexes import (
    GraphSpec,
    SimplicialComplex,
    euler_characteristic,
    whitney_complex,
)


@dataclass(frozen=True, eq=False)
class DerivedGraph:
    base: SimplicialComplex
    kind: str  # "refinement" | "connection"
    adjacency: np.ndarray  # symmetric 0/1 int matrix, zero diagonal

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def neighbor_lists(self) -> list[list[int]]:
        return [list(np.nonzero(row)[0]) for row in self.adjacency]

    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def graph_spec(self) -> GraphSpec:
        ii, jj = np.nonzero(np.triu(self.adjacency))
        return GraphSpec(self.n, list(zip(ii.tolist(), jj.tolist())))


def refinement_graph(G: SimplicialComplex) -> DerivedGraph:
    """Adjacency 1 iff one face strictly contains the other."""
    n = G.n
    sets = [frozenset(f) for f in G.faces]
    A = np.zeros((n, n), dtype=np.int64)
    for i, j in itertools.combinations(range(n), 2):
        if sets[i] < sets[j] or sets[j] < sets[i]:
            A[i, j] = A[j, i] = 1
    return DerivedGraph(G, "refinement", A)


def connection_graph(G: SimplicialComplex) -> DerivedGraph:
    """Adjacency 1 iff the two faces intersect (and differ)."""
    n = G.n
    sets = [frozenset(f) for f in G.faces]
    A = np.zeros((n, n), dtype=np.int64)
    for i, j in itertools.combinations(range(n), 2):
        if sets[i] & sets[j]:
            A[i, j] = A[j, i] = 1
    return DerivedGraph(G, "connection", A)


@dataclass(frozen=True)
class SphereDecomposition:
    """Unit sphere of a face in the refinement graph, split by containment.

    `sub` holds indices of faces strictly contained in the center, `super_`
    those strictly containing it; `full` is their disjoint union.
    """

    center: int
    full: tuple[int, ...]
    sub: tuple[int, ...]
    super_: tuple[int, ...]


def _induced_subcomplex(G: SimplicialComplex, refinement: DerivedGraph, members: tuple[int, ...]) -> SimplicialComplex:
    """Whitney complex of the refinement subgraph induced on `members`."""
    pos = {m: k for k, m in enumerate(members)}
    edges = []
    for a, b in itertools.combinations(members, 2):
        if refinement.adjacency[a, b]:
            edges.append((pos[a], pos[b]))
    return whitney_complex(GraphSpec(len(members), edges))


class SphereGeometry:
    """Sphere decompositions and sphere Euler characteristics of one complex.

    Computes the refinement and connection graphs once and caches per-face
    sphere data; all heavier consumers (curvature, potential checks) share an
    instance.
    """

    def __init__(self, G: SimplicialComplex) -> None:
        self.complex = G
        self.refinement = refinement_graph(G)
        self.connection = connection_graph(G)
        self._sets = [frozenset(f) for f in G.faces]
        self._sphere_chi: dict[int, int] = {}
        self._sub_chi: dict[int, int] = {}
        self._super_chi: dict[int, int] = {}

    def unit_sphere(self, x: int) -> SphereDecomposition:
        full = tuple(int(y) for y in np.nonzero(self.refinement.adjacency[x])[0])
        cx = self._sets[x]
        sub = tuple(y for y in full if self._sets[y] < cx)
        super_ = tuple(y for y in full if cx < self._sets[y])
        return SphereDecomposition(x, full, sub, super_)

    def sphere_complex(self, members: tuple[int, ...]) -> SimplicialComplex:
        return _induced_subcomplex(self.complex, self.refinement, members)

    def sphere_euler(self, x: int) -> int:
        if x not in self._sphere_chi:
            dec = self.unit_sphere(x)
            self._sphere_chi[x] = euler_characteristic(self.sphere_complex(dec.full))
        return self._sphere_chi[x]

    def sub_sphere_euler(self, x: int) -> int:
        if x not in self._sub_chi:
            dec = self.unit_sphere(x)
            self._sub_chi[x] = euler_characteristic(self.sphere_complex(dec.sub))
        return self._sub_chi[x]

    def super_sphere_euler(self, x: int) -> int:
        if x not in self._super_chi:
            dec = self.unit_sphere(x)
            self._super_chi[x] = euler_characteristic(self.sphere_complex(dec.super_))
        return self._super_chi[x]

    def connection_ball(self, x: int) -> list[int]:
        """x together with its connection-graph neighbors."""
        ball = [x] + [int(y) for y in np.nonzero(self.connection.adjacency[x])[0]]
        return sorted(ball)


def unit_sphere(G: SimplicialComplex, x: int) -> SphereDecomposition:
    return SphereGeometry(G).unit_sphere(x)


def sphere_euler(G: SimplicialComplex, x: int) -> int:
    return SphereGeometry(G).sphere_euler(x)


def connection_ball(G: SimplicialComplex, x: int) -> list[int]:
    return SphereGeometry(G).connection_ball(x)
