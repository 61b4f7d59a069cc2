"""Face curvatures, curvature pushed to graph vertices, Poincare-Hopf indices.

The stable curvature of a face is (-1)^dim; the unstable curvature weights it
by 1 - chi(S(x)) with S(x) the unit sphere in the refinement graph.  Both sum
to chi(G).  Indices of locally injective fields refine the same identity, and
pushing either curvature from the faces of a Whitney complex down to the graph
vertices reproduces the classical vertex curvature.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .complexes import (
    GraphSpec,
    SimplicialComplex,
    clique_counts,
    whitney_complex,
)
from .derived import SphereGeometry


class LocalInjectivityViolation(ValueError):
    """Raised when a field takes equal values on refinement-adjacent faces."""


def stable_curvature(G: SimplicialComplex) -> list[int]:
    """K^-(x) = (-1)^dim(x); sums to chi(G) by definition."""
    return [1 if d % 2 == 0 else -1 for d in G.dims()]


def unstable_curvature(G: SimplicialComplex, geometry: SphereGeometry | None = None) -> list[int]:
    """K^+(x) = (-1)^dim(x) (1 - chi(S(x))); sums to chi(G)."""
    geo = geometry or SphereGeometry(G)
    out = []
    for x, d in enumerate(G.dims()):
        k = 1 - geo.sphere_euler(x)
        out.append(k if d % 2 == 0 else -k)
    return out


def euler_vertex_curvature(g: GraphSpec) -> list[Fraction]:
    """K(v) = 1 - V_0/2 + V_1/3 - ... with V_j the K_{j+1} count in S(v)."""
    nbrs = g.neighbor_sets()
    out = []
    for v in range(g.vertex_count):
        sphere = sorted(nbrs[v])
        pos = {u: i for i, u in enumerate(sphere)}
        edges = [
            (pos[a], pos[b])
            for i, a in enumerate(sphere)
            for b in sphere[i + 1:]
            if b in nbrs[a]
        ]
        counts = clique_counts(GraphSpec(len(sphere), edges))
        k = Fraction(1)
        for j, vj in enumerate(counts):
            term = Fraction(vj, j + 2)
            k += -term if j % 2 == 0 else term
        out.append(k)
    return out


def unstable_euler_curvature(g: GraphSpec) -> list[Fraction]:
    """Push K^+ from the faces of the Whitney complex to the graph vertices.

    K~(v) = sum over faces x containing v of K^+(x) / |x|.
    """
    W = whitney_complex(g)
    kplus = unstable_curvature(W)
    out = [Fraction(0) for _ in range(g.vertex_count)]
    for x, face in enumerate(W.faces):
        share = Fraction(kplus[x], len(face))
        for v in face:
            out[v] += share
    return out


def check_locally_injective(G: SimplicialComplex, f, geometry: SphereGeometry | None = None) -> None:
    geo = geometry or SphereGeometry(G)
    A = geo.refinement.adjacency
    for i in range(G.n):
        for j in range(i + 1, G.n):
            if A[i, j] and f[i] == f[j]:
                raise LocalInjectivityViolation(
                    f"field equal on adjacent faces {G.faces[i]} and {G.faces[j]}"
                )


class _SphereCliques:
    """Bitmask clique counter over each face's sphere, for fast index sums."""

    def __init__(self, geo: SphereGeometry) -> None:
        self.geo = geo
        self.members: list[tuple[int, ...]] = []
        self.masks: list[list[int]] = []
        A = geo.refinement.adjacency
        for x in range(geo.complex.n):
            mem = geo.unit_sphere(x).full
            local = {m: i for i, m in enumerate(mem)}
            masks = [0] * len(mem)
            for i, a in enumerate(mem):
                for b in mem[i + 1:]:
                    if A[a, b]:
                        masks[local[a]] |= 1 << local[b]
                        masks[local[b]] |= 1 << local[a]
            self.members.append(mem)
            self.masks.append(masks)

    def chi_below(self, x: int, f) -> int:
        """chi of the sphere subcomplex induced on {y in S(x): f(y) < f(x)}."""
        mem = self.members[x]
        masks = self.masks[x]
        active = 0
        for i, y in enumerate(mem):
            if f[y] < f[x]:
                active |= 1 << i
        total = 0

        def grow(cand: int, sign: int) -> None:
            nonlocal total
            total += sign
            c = cand
            while c:
                v = (c & -c).bit_length() - 1
                c &= c - 1
                grow(cand & masks[v] & ~((1 << (v + 1)) - 1), -sign)

        a = active
        while a:
            v = (a & -a).bit_length() - 1
            a &= a - 1
            grow(active & masks[v] & ~((1 << (v + 1)) - 1), 1)
        return total


def poincare_hopf_indices(G: SimplicialComplex, f, geometry: SphereGeometry | None = None,
                          *, _cliques: _SphereCliques | None = None) -> list[int]:
    """i_f(x) = 1 - chi({y in S(x): f(y) < f(x)}) for every face; sums to chi."""
    geo = geometry or SphereGeometry(G)
    check_locally_injective(G, f, geo)
    sc = _cliques or _SphereCliques(geo)
    return [1 - sc.chi_below(x, f) for x in range(G.n)]


def poincare_hopf_index(G: SimplicialComplex, f, x: int,
                        geometry: SphereGeometry | None = None) -> int:
    return poincare_hopf_indices(G, f, geometry)[x]


def symmetric_index(G: SimplicialComplex, f, x: int,
                    geometry: SphereGeometry | None = None) -> Fraction:
    """j_f(x) = (i_f(x) + i_{-f}(x)) / 2; sums to chi(G) over faces."""
    geo = geometry or SphereGeometry(G)
    up = poincare_hopf_indices(G, f, geo)
    down = poincare_hopf_indices(G, [-v for v in f], geo)
    return Fraction(up[x] + down[x], 2)


def random_injective_field(G: SimplicialComplex, seed: int) -> list[int]:
    """Uniform random permutation of 1..n on the faces (hence locally injective)."""
    values = list(range(1, G.n + 1))
    random.Random(seed).shuffle(values)
    return values


def ball_lemma_check(G: SimplicialComplex, geometry: SphereGeometry | None = None) -> int:
    """max_x | d_{G'}(x) - sum_{y in B_{G'}(x)} chi(S_super(y)) |, exactly."""
    geo = geometry or SphereGeometry(G)
    chi_super = [geo.super_sphere_euler(y) for y in range(G.n)]
    degrees = geo.connection.degrees
    worst = 0
    for x in range(G.n):
        total = sum(chi_super[y] for y in geo.connection_ball(x))
        worst = max(worst, abs(int(degrees[x]) - total))
    return worst
