"""Exterior derivative, Dirac/Hodge operators, Betti numbers, heat-trace checks.

Orientation is fixed by the ascending vertex order of each face: the entry of
d_k pairing a (k+1)-face x with x minus its i-th smallest vertex is (-1)^i.
Any consistent choice yields the same Laplacian, which is what the tests pin.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .complexes import SimplicialComplex
from .exactmat import rank_exact, sym_eigen


@dataclass(frozen=True, eq=False)
class IncidenceSet:
    """Signed incidence matrices d_k mapping k-faces to (k+1)-faces."""

    complex: SimplicialComplex
    d: tuple[np.ndarray, ...]  # d[k] has shape (n_{k+1}, n_k), entries -1/0/1

    @property
    def blocks(self) -> tuple[int, ...]:
        return self.complex.fvector


@dataclass(frozen=True, eq=False)
class HodgeOperator:
    complex: SimplicialComplex
    dirac: np.ndarray  # D = d + d^T on the full face space
    laplacian: np.ndarray  # L = D^2, block diagonal by dimension
    blocks: tuple[np.ndarray, ...]  # L_k per dimension


def _faces_by_dim(G: SimplicialComplex) -> list[list[tuple[int, ...]]]:
    out: list[list[tuple[int, ...]]] = [[] for _ in range(G.dim + 1)]
    for f in G.faces:
        out[len(f) - 1].append(f)
    return out


def incidence(G: SimplicialComplex) -> IncidenceSet:
    """Exterior derivative matrices; verifies d_{k+1} d_k = 0 exactly."""
    by_dim = _faces_by_dim(G)
    index = [{f: i for i, f in enumerate(faces)} for faces in by_dim]
    ds: list[np.ndarray] = []
    for k in range(len(by_dim)):
        rows = by_dim[k + 1] if k + 1 < len(by_dim) else []
        d = np.zeros((len(rows), len(by_dim[k])), dtype=np.int64)
        for r, face in enumerate(rows):
            for i in range(len(face)):
                sub = face[:i] + face[i + 1:]
                d[r, index[k][sub]] = -1 if i % 2 else 1
        ds.append(d)
    for k in range(len(ds) - 1):
        if ds[k + 1].size and ds[k].size and np.any(ds[k + 1] @ ds[k]):
            raise AssertionError(f"d_{k + 1} d_{k} != 0")
    return IncidenceSet(G, tuple(ds))


def hodge_blocks(G: SimplicialComplex) -> HodgeOperator:
    """Dirac operator D = d + d^T and Hodge Laplacian L = D^2 with its blocks."""
    inc = incidence(G)
    n = G.n
    fv = G.fvector
    offsets = [0]
    for c in fv:
        offsets.append(offsets[-1] + c)
    D = np.zeros((n, n), dtype=np.int64)
    for k, d in enumerate(inc.d):
        if d.size == 0:
            continue
        r0, c0 = offsets[k + 1], offsets[k]
        D[r0:r0 + d.shape[0], c0:c0 + d.shape[1]] = d
        D[c0:c0 + d.shape[1], r0:r0 + d.shape[0]] = d.T
    L = D @ D
    blocks = tuple(
        L[offsets[k]:offsets[k + 1], offsets[k]:offsets[k + 1]].copy()
        for k in range(len(fv))
    )
    return HodgeOperator(G, D, L, blocks)


def block_spectra(op: HodgeOperator, tol: float = 1e-8) -> list[np.ndarray]:
    """Ascending eigenvalues of each L_k."""
    return [sym_eigen(Lk.astype(float), tol) for Lk in op.blocks]


def mckean_singer_check(G: SimplicialComplex, t_values=(0.1, 0.5, 1.0, 2.0)) -> dict[float, float]:
    """Residual |str(exp(-tL)) - chi(G)| per t, via the block spectra."""
    chi = sum(c if k % 2 == 0 else -c for k, c in enumerate(G.fvector))
    spectra = block_spectra(hodge_blocks(G)) if G.n else []
    out: dict[float, float] = {}
    for t in t_values:
        s = 0.0
        for k, eigs in enumerate(spectra):
            term = float(np.exp(-t * eigs).sum()) if eigs.size else 0.0
            s += term if k % 2 == 0 else -term
        out[float(t)] = abs(s - chi)
    return out


def betti(G: SimplicialComplex) -> list[int]:
    """Betti numbers b_k = n_k - rank d_k - rank d_{k-1}, exact ranks over Q."""
    if G.n == 0:
        return []
    inc = incidence(G)
    fv = G.fvector
    ranks = [rank_exact(d) if d.size else 0 for d in inc.d]
    out = []
    for k, nk in enumerate(fv):
        up = ranks[k] if k < len(ranks) else 0
        down = ranks[k - 1] if k >= 1 else 0
        out.append(nk - up - down)
    return out


def hodge_pseudoinverse_diag(G: SimplicialComplex, kernel_rtol: float = 1e-9) -> np.ndarray:
    """Diagonal of the Moore-Penrose pseudo-inverse of L, block by block."""
    op = hodge_blocks(G)
    pieces = []
    for Lk in op.blocks:
        if Lk.size == 0:
            pieces.append(np.zeros(0))
            continue
        w, V = sym_eigen(Lk.astype(float), vectors=True)
        lam_max = float(w.max(initial=0.0))
        keep = w > kernel_rtol * max(lam_max, 1e-300)
        if not np.any(keep):
            pieces.append(np.zeros(Lk.shape[0]))
            continue
        diag = (V[:, keep] ** 2 / w[keep]).sum(axis=1)
        pieces.append(diag)
    return np.concatenate(pieces) if pieces else np.zeros(0)


def supersymmetry_residual(G: SimplicialComplex, zero_tol: float = 1e-9) -> float:
    """Multiset distance between the nonzero even and odd block spectra.

    Returns the largest per-rank gap after sorting; exact super symmetry means
    the two multisets agree, so the residual should vanish to eigensolver
    accuracy.
    """
    spectra = block_spectra(hodge_blocks(G)) if G.n else []
    even, odd = [], []
    for k, eigs in enumerate(spectra):
        nz = [float(x) for x in eigs if x > zero_tol * max(float(eigs.max(initial=0.0)), 1.0)]
        (even if k % 2 == 0 else odd).extend(nz)
    if len(even) != len(odd):
        return math.inf
    if not even:
        return 0.0
    return float(np.abs(np.sort(even) - np.sort(odd)).max())


def super_trace_powers(G: SimplicialComplex, max_power: int = 3) -> list[int]:
    """Exact str(L^m) for m = 1..max_power (all zero by super symmetry)."""
    op = hodge_blocks(G)
    signs = np.array([1 if d % 2 == 0 else -1 for d in G.dims()], dtype=np.int64)
    out = []
    P = np.eye(G.n, dtype=np.int64)
    for _ in range(max_power):
        P = P @ op.laplacian
        out.append(int((signs * np.diag(P)).sum()))
    return out
