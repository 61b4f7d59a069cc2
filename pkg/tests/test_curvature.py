import random
from fractions import Fraction

import numpy as np
import pytest

from greenlab.complexes import (
    GraphSpec,
    erdos_renyi_graph,
    euler_characteristic,
    from_maximal_faces,
    whitney_complex,
)
from greenlab.curvature import (
    LocalInjectivityViolation,
    ball_lemma_check,
    euler_vertex_curvature,
    poincare_hopf_indices,
    random_injective_field,
    stable_curvature,
    symmetric_index,
    unstable_curvature,
    unstable_euler_curvature,
)

from conftest import cycle_graph, icosahedron_graph, octahedron_graph


def test_stable_k3():
    G = from_maximal_faces([[0, 1, 2]])
    assert stable_curvature(G) == [1, 1, 1, -1, -1, -1, 1]
    assert sum(stable_curvature(G)) == 1


def test_stable_sums(corpus):
    assert sum(stable_curvature(corpus.named["icosahedron"])) == 2
    assert stable_curvature(from_maximal_faces([[0]])) == [1]


def test_unstable_icosahedron(corpus):
    G = corpus.named["icosahedron"]
    k = unstable_curvature(G, corpus.geometry("icosahedron", G))
    assert k == [(-1) ** (len(f) - 1) for f in G.faces]
    assert sum(k) == 2


def test_unstable_k3_equals_green_row_sums(corpus):
    G = corpus.named["K3"]
    gf = corpus.green("K3", G)
    assert unstable_curvature(G) == gf.row_sums()


def test_unstable_facets_are_plus_one(corpus):
    for name in ("K2", "K3", "C4", "octahedron"):
        G = corpus.named[name]
        k = unstable_curvature(G, corpus.geometry(name, G))
        for face in G.facets():
            assert k[G.index[face]] == 1, (name, face)


def test_gauss_bonnet_exact(corpus):
    for name, G in list(corpus.named.items()) + corpus.random:
        if G.n == 0:
            continue
        geo = corpus.geometry(name, G)
        assert sum(unstable_curvature(G, geo)) == euler_characteristic(G), name


def test_green_times_unstable_is_ones(corpus):
    """(1 + A') K+ = 1 exactly, the vector form of the row-sum law."""
    for name in ("K2", "K3", "octahedron"):
        G = corpus.named[name]
        gf = corpus.green(name, G)
        k = np.array(unstable_curvature(G, corpus.geometry(name, G)), dtype=np.int64)
        assert np.array_equal(gf.laplacian @ k, np.ones(G.n, dtype=np.int64))


def test_euler_vertex_curvature_icosahedron():
    k = euler_vertex_curvature(icosahedron_graph())
    expected = 1 - Fraction(5, 2) + Fraction(5, 3)  # V0 = V1 = 5
    assert all(v == expected == Fraction(1, 6) for v in k)


def test_euler_vertex_curvature_small():
    assert euler_vertex_curvature(GraphSpec(1, [])) == [Fraction(1)]
    assert euler_vertex_curvature(cycle_graph(4)) == [Fraction(0)] * 4


def test_vertex_curvature_sums_to_chi():
    for g in (icosahedron_graph(), octahedron_graph(), cycle_graph(4)):
        chi = euler_characteristic(whitney_complex(g))
        assert sum(euler_vertex_curvature(g)) == chi


def test_unstable_euler_curvature_matches():
    for g in (icosahedron_graph(), octahedron_graph(), cycle_graph(4), GraphSpec(1, [])):
        assert unstable_euler_curvature(g) == euler_vertex_curvature(g)


def test_unstable_euler_curvature_random_graphs():
    for seed in range(20):
        g = erdos_renyi_graph(5 + seed % 3, (0.3, 0.5, 0.7)[seed % 3], seed + 100)
        assert unstable_euler_curvature(g) == euler_vertex_curvature(g), seed


def test_poincare_hopf_dimension_field(corpus):
    for name in ("K2", "K3", "octahedron"):
        G = corpus.named[name]
        geo = corpus.geometry(name, G)
        dims = G.dims()
        idx = poincare_hopf_indices(G, dims, geo)
        assert idx == [(-1) ** d for d in dims], name
        neg = poincare_hopf_indices(G, [-d for d in dims], geo)
        assert sum(neg) == euler_characteristic(G), name


def test_poincare_hopf_random_fields_k3(corpus):
    G = corpus.named["K3"]
    geo = corpus.geometry("K3", G)
    for seed in range(25):
        f = random_injective_field(G, seed)
        assert sum(poincare_hopf_indices(G, f, geo)) == 1


def test_local_injectivity_checked():
    G = from_maximal_faces([[0, 1]])
    with pytest.raises(LocalInjectivityViolation):
        poincare_hopf_indices(G, [1, 2, 1])


def test_symmetric_index_formulas(corpus):
    """j for f = dim: 1 - chi(S)/2 on even faces, chi(S)/2 - 1 on odd."""
    for name in ("K3", "octahedron"):
        G = corpus.named[name]
        geo = corpus.geometry(name, G)
        dims = G.dims()
        for x in range(G.n):
            j = symmetric_index(G, dims, x, geo)
            chi_s = geo.sphere_euler(x)
            if dims[x] % 2 == 0:
                assert j == 1 - Fraction(chi_s, 2)
            else:
                assert j == Fraction(chi_s, 2) - 1


def test_symmetric_index_point():
    G = from_maximal_faces([[0]])
    assert symmetric_index(G, [0], 0) == 1


def test_symmetric_index_sums_to_chi(corpus):
    G = corpus.named["C4"]
    geo = corpus.geometry("C4", G)
    rng = random.Random(2)
    f = random_injective_field(G, 77)
    total = sum(symmetric_index(G, f, x, geo) for x in range(G.n))
    assert total == euler_characteristic(G)


def test_ball_lemma_k3_center(corpus):
    G = corpus.named["K3"]
    geo = corpus.geometry("K3", G)
    center = G.index[(0, 1, 2)]
    ball = geo.connection_ball(center)
    assert geo.connection.degrees[center] == 6
    contributions = [geo.super_sphere_euler(y) for y in ball]
    assert contributions.count(1) == 6  # every member except the center itself
    assert geo.super_sphere_euler(center) == 0


def test_ball_lemma_facet_values(corpus):
    G = corpus.named["octahedron"]
    geo = corpus.geometry("octahedron", G)
    for face in G.facets():
        x = G.index[face]
        assert geo.super_sphere_euler(x) == 0


def test_ball_lemma_residual_zero(corpus):
    for name, G in list(corpus.named.items()) + corpus.random:
        if G.n == 0:
            continue
        assert ball_lemma_check(G, corpus.geometry(name, G)) == 0, name
