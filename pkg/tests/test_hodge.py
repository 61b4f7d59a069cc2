import math
from fractions import Fraction

import numpy as np

from greenlab.complexes import euler_characteristic, from_maximal_faces
from greenlab.hodge import (
    betti,
    block_spectra,
    hodge_blocks,
    hodge_pseudoinverse_diag,
    incidence,
    mckean_singer_check,
    super_trace_powers,
    supersymmetry_residual,
)


def test_incidence_k2():
    G = from_maximal_faces([[0, 1]])
    inc = incidence(G)
    d0 = inc.d[0]
    assert d0.shape == (1, 2)
    assert sorted(d0[0].tolist()) == [-1, 1]


def test_incidence_k3_exactness():
    G = from_maximal_faces([[0, 1, 2]])
    inc = incidence(G)
    assert not np.any(inc.d[1] @ inc.d[0])


def test_incidence_icosahedron_shapes(corpus):
    G = corpus.named["icosahedron"]
    inc = incidence(G)
    assert inc.d[0].shape == (30, 12)
    assert inc.d[1].shape == (20, 30)
    assert not np.any(inc.d[1] @ inc.d[0])


def test_hodge_k2_kirchhoff():
    G = from_maximal_faces([[0, 1]])
    op = hodge_blocks(G)
    assert np.array_equal(op.blocks[0], np.array([[1, -1], [-1, 1]]))
    assert np.array_equal(op.blocks[1], np.array([[2]]))


def test_hodge_icosahedron_spectra(corpus):
    G = corpus.named["icosahedron"]
    op = hodge_blocks(G)
    assert op.laplacian.shape == (62, 62)
    spec = block_spectra(op)
    s5 = math.sqrt(5)
    expected_L0 = sorted([0.0] + [5 - s5] * 3 + [5 + s5] * 3 + [6.0] * 5)
    assert np.allclose(np.sort(spec[0]), expected_L0, atol=1e-8)
    expected_L2_nonzero = sorted([3 - s5] * 3 + [3 + s5] * 3 + [5.0] * 4 + [3.0] * 4 + [2.0] * 5)
    assert np.allclose(np.sort(spec[2]), [0.0] + expected_L2_nonzero, atol=1e-8)


def test_betti_examples(corpus):
    assert betti(corpus.named["icosahedron"]) == [1, 0, 1]
    assert betti(corpus.named["C4"]) == [1, 1]
    assert betti(corpus.named["K3"]) == [1, 0, 0]


def test_euler_poincare(corpus):
    for name, G in list(corpus.named.items()) + corpus.random[:8]:
        if G.n == 0:
            continue
        b = betti(G)
        chi = sum((-1) ** k * v for k, v in enumerate(b))
        assert chi == euler_characteristic(G), name


def test_pseudoinverse_diag_icosahedron(corpus):
    G = corpus.named["icosahedron"]
    diag = hodge_pseudoinverse_diag(G)
    assert np.allclose(diag[:12], float(Fraction(7, 36)), atol=1e-9)
    assert np.allclose(diag[12:42], float(Fraction(86, 225)), atol=1e-9)
    # the printed L_2 spectrum forces (1/20) sum 1/lambda = 137/300 on triangles
    assert np.allclose(diag[42:], float(Fraction(137, 300)), atol=1e-9)


def test_pseudoinverse_point():
    G = from_maximal_faces([[0]])
    assert np.allclose(hodge_pseudoinverse_diag(G), [0.0])


def test_mckean_singer(corpus):
    for name in ("K2", "K3", "C4", "octahedron", "icosahedron"):
        res = mckean_singer_check(corpus.named[name])
        assert set(res) == {0.1, 0.5, 1.0, 2.0}
        assert max(res.values()) < 1e-8, name


def test_supersymmetry_and_power_traces(corpus):
    for name in ("K3", "octahedron", "icosahedron"):
        G = corpus.named[name]
        assert supersymmetry_residual(G) < 1e-8
        assert super_trace_powers(G, 3) == [0, 0, 0]


def test_exactness_all_corpus(corpus):
    for name, G in list(corpus.named.items()) + corpus.random[:10]:
        if G.n == 0:
            continue
        inc = incidence(G)
        for k in range(len(inc.d) - 1):
            if inc.d[k + 1].size and inc.d[k].size:
                assert not np.any(inc.d[k + 1] @ inc.d[k]), name
