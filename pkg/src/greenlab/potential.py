"""Integer Green function of the connection Laplacian and derived energies.

L' = 1 + A' is unimodular for every complex, so g = L'^{-1} is an integer
matrix.  The float fast path inverts L' in double precision, rounds, and
certifies g L' = 1 in exact integer arithmetic, falling back to exact rational
elimination when certification fails; either way the stored g is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .complexes import SimplicialComplex
from .derived import SphereGeometry, connection_graph
from .exactmat import (
    ExactMatrix,
    charpoly_fredholm,
    det_exact,
    eval_poly,
    inverse_exact,
    to_object,
)


@dataclass(frozen=True, eq=False)
class GreenFunction:
    complex: SimplicialComplex
    laplacian: np.ndarray  # L' = 1 + A', int64
    g: ExactMatrix  # exact integer inverse, object dtype
    det_sign: int  # det(L'), always +1 or -1

    @property
    def n(self) -> int:
        return self.complex.n

    def g_float(self) -> np.ndarray:
        return self.g.astype(float)

    def diagonal(self) -> list[int]:
        return [int(self.g[i, i]) for i in range(self.n)]

    def row_sums(self) -> list[int]:
        return [int(sum(self.g[i, :])) for i in range(self.n)]


def connection_laplacian(G: SimplicialComplex) -> np.ndarray:
    """L' = 1 + A' on the canonical face order."""
    A = connection_graph(G).adjacency
    return A + np.eye(G.n, dtype=np.int64)


def inverse_residual(L: np.ndarray, g) -> int:
    """Exact max |g L' - 1|, in int64 when provably overflow-free."""
    n = L.shape[0]
    if n == 0:
        return 0
    max_entry = max(abs(int(x)) for x in np.asarray(g).flat)
    if max_entry * n < 2**62:
        g64 = np.asarray([[int(x) for x in row] for row in np.asarray(g)], dtype=np.int64)
        return int(np.abs(g64 @ L - np.eye(n, dtype=np.int64)).max())
    prod = to_object(np.asarray(g)) @ to_object(L)
    return int(max(abs(prod[i, j] - (1 if i == j else 0)) for i in range(n) for j in range(n)))


def green_function(G: SimplicialComplex) -> GreenFunction:
    """Exact integer inverse of the connection Laplacian."""
    L = connection_laplacian(G)
    n = G.n
    if n == 0:
        return GreenFunction(G, L, np.zeros((0, 0), dtype=object), 1)
    inv = np.linalg.inv(L.astype(float))
    R = np.rint(inv)
    if np.abs(inv - R).max() < 0.25 and inverse_residual(L, R.astype(np.int64)) == 0:
        g = to_object(R.astype(np.int64))
    else:
        g = inverse_exact(to_object(L))
        if not all(isinstance(x, int) for x in g.flat):
            raise ArithmeticError("connection Laplacian inverse is not integral")
    sign = 1 if np.linalg.slogdet(L.astype(float))[0] > 0 else -1
    return GreenFunction(G, L, g, sign)


def potential(gf: GreenFunction, x: int, weights) -> Fraction | int | float:
    """V_x(p) = sum_y p(y) g(x, y); weights need not be normalized."""
    return sum(w * gf.g[x, y] for y, w in enumerate(weights))


def total_energy(gf: GreenFunction) -> int:
    """sum_{x,y} g(x,y); equals chi(G)."""
    return int(sum(gf.g.flat)) if gf.n else 0


def energy_quadratic(gf: GreenFunction, weights) -> Fraction | int | float:
    """U(p) = sum_{x,y} g(x,y) p(x) p(y), exact for exact weights."""
    if len(weights) != gf.n:
        raise ValueError(f"weight vector has length {len(weights)}, need {gf.n}")
    gp = [sum(gf.g[x, y] * weights[y] for y in range(gf.n)) for x in range(gf.n)]
    return sum(w * v for w, v in zip(weights, gp))


@dataclass(frozen=True)
class ZetaFunction:
    """Bowen-Lanford zeta 1 / det(1 + z A'), held as the exact polynomial."""

    poly: tuple[int, ...]  # coefficients of det(1 + z A'), ascending

    def det_at(self, z) -> Fraction | int:
        return eval_poly(list(self.poly), z)

    def __call__(self, z) -> Fraction:
        value = self.det_at(Fraction(z))
        if value == 0:
            raise ZeroDivisionError(f"zeta pole at z={z}")
        return 1 / Fraction(value)


def zeta(G: SimplicialComplex) -> ZetaFunction:
    A = connection_graph(G).adjacency
    return ZetaFunction(tuple(charpoly_fredholm(A)))


def offdiag_support_report(gf: GreenFunction, G: SimplicialComplex) -> list[tuple[int, int, int]]:
    """Disjoint face pairs with nonzero g, as (x, y, g(x,y)) with x < y.

    Exploratory diagnostic: disjointness does not force g to vanish (K_2
    already has a nonzero entry for its two disjoint vertices).
    """
    sets = [frozenset(f) for f in G.faces]
    out = []
    for x in range(G.n):
        for y in range(x + 1, G.n):
            if not (sets[x] & sets[y]) and gf.g[x, y] != 0:
                out.append((x, y, int(gf.g[x, y])))
    return out


def verify_green_identities(gf: GreenFunction, geometry: SphereGeometry | None = None) -> dict[str, int]:
    """Exact residuals of the core Green-function identities.

    Keys: inverse (max |g L' - 1|), diagonal (max |g(x,x) - (1 - chi S(x))|),
    row_sum (max |sum_y g(x,y) - (-1)^dim g(x,x)|), supertrace (|str g - chi|),
    energy (|sum g - chi|), unimodularity (| |det| - 1 |).
    """
    G = gf.complex
    geo = geometry or SphereGeometry(G)
    n = G.n
    if n == 0:
        return {k: 0 for k in ("inverse", "diagonal", "row_sum", "supertrace", "energy", "unimodularity")}
    inverse_res = inverse_residual(gf.laplacian, gf.g)
    dims = G.dims()
    chi = sum(1 if d % 2 == 0 else -1 for d in dims)
    diag_res = max(abs(int(gf.g[x, x]) - (1 - geo.sphere_euler(x))) for x in range(n))
    row_res = 0
    str_g = 0
    for x in range(n):
        row = int(sum(gf.g[x, :]))
        sign = 1 if dims[x] % 2 == 0 else -1
        row_res = max(row_res, abs(row - sign * int(gf.g[x, x])))
        str_g += sign * int(gf.g[x, x])
    det = det_exact(gf.laplacian)
    return {
        "inverse": inverse_res,
        "diagonal": diag_res,
        "row_sum": row_res,
        "supertrace": abs(str_g - chi),
        "energy": abs(total_energy(gf) - chi),
        "unimodularity": abs(abs(int(det)) - 1),
    }
