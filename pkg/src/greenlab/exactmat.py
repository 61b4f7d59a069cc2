"""Exact dense linear algebra on Python ints / Fractions, plus a float eigensolver.

Matrices are numpy arrays of dtype=object holding exact scalars.  Everything
that feeds an identity check stays exact; floating point is confined to
`sym_eigen` (and its consumers).  Determinants use fraction-free Bareiss
elimination on integer input; inverses use rational Gauss-Jordan with exact
pivoting (first nonzero pivot in canonical order).
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

ExactMatrix = np.ndarray  # dtype=object, entries int or Fraction


class ShapeError(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


class AsymmetricMatrix(ValueError):
    pass


def exact_matrix(rows) -> ExactMatrix:
    """Object-dtype matrix from nested ints/Fractions (no float entries)."""
    mat = [[_exact_scalar(x) for x in row] for row in rows]
    ncols = {len(r) for r in mat}
    if len(ncols) > 1:
        raise ShapeError("ragged rows")
    out = np.empty((len(mat), ncols.pop() if ncols else 0), dtype=object)
    for i, row in enumerate(mat):
        out[i, :] = row
    return out


def _exact_scalar(x):
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    raise TypeError(f"not an exact scalar: {x!r}")


def exact_identity(n: int) -> ExactMatrix:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def to_object(M) -> ExactMatrix:
    """Coerce an integer numpy matrix to exact object dtype."""
    if isinstance(M, np.ndarray) and M.dtype == object:
        return M
    A = np.asarray(M)
    if not np.issubdtype(A.dtype, np.integer):
        raise TypeError("only integer matrices can be coerced to exact")
    out = np.empty(A.shape, dtype=object)
    out[...] = [[int(x) for x in row] for row in A] if A.ndim == 2 else A.tolist()
    return out


def _require_square(M: np.ndarray) -> int:
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ShapeError(f"square matrix required, got {M.shape}")
    return M.shape[0]


def det_exact(M) -> int | Fraction:
    """Exact determinant; Bareiss on integers, rational elimination otherwise."""
    A = M if (isinstance(M, np.ndarray) and M.dtype == object) else to_object(M)
    n = _require_square(A)
    if n == 0:
        return 1
    if all(isinstance(x, int) for x in A.flat):
        return _det_bareiss(A.copy())
    return _det_rational(A.copy())


def _det_bareiss(A: ExactMatrix) -> int:
    n = A.shape[0]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k, k] == 0:
            for r in range(k + 1, n):
                if A[r, k] != 0:
                    A[[k, r]] = A[[r, k]]
                    sign = -sign
                    break
            else:
                return 0
        pivot = A[k, k]
        # fraction-free update: entries stay integral (Sylvester identity)
        A[k + 1:, k + 1:] = (A[k + 1:, k + 1:] * pivot - np.outer(A[k + 1:, k], A[k, k + 1:])) // prev
        prev = pivot
    return sign * A[n - 1, n - 1]


def _det_rational(A: ExactMatrix) -> Fraction:
    n = A.shape[0]
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if A[r, k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            A[[k, pivot_row]] = A[[pivot_row, k]]
            det = -det
        pivot = Fraction(A[k, k])
        det *= pivot
        for r in range(k + 1, n):
            if A[r, k] != 0:
                A[r, k:] = A[r, k:] - (Fraction(A[r, k]) / pivot) * A[k, k:]
    return det


def solve_exact(M, rhs) -> ExactMatrix:
    """Exact solution X of M X = rhs via rational Gauss-Jordan."""
    A = (M if (isinstance(M, np.ndarray) and M.dtype == object) else to_object(M)).copy()
    n = _require_square(A)
    B = rhs if (isinstance(rhs, np.ndarray) and rhs.dtype == object) else to_object(rhs)
    B = B.reshape(n, -1).copy()
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if A[r, k] != 0), None)
        if pivot_row is None:
            raise SingularMatrix("matrix is singular")
        if pivot_row != k:
            A[[k, pivot_row]] = A[[pivot_row, k]]
            B[[k, pivot_row]] = B[[pivot_row, k]]
        pivot = Fraction(A[k, k])
        if pivot != 1:
            A[k, :] = A[k, :] * (1 / pivot)
            B[k, :] = B[k, :] * (1 / pivot)
        for r in range(n):
            if r != k and A[r, k] != 0:
                factor = A[r, k]
                A[r, :] = A[r, :] - factor * A[k, :]
                B[r, :] = B[r, :] - factor * B[k, :]
    return _normalize_exact(B)


def inverse_exact(M) -> ExactMatrix:
    """Exact inverse; integer result whenever |det| = 1 and M is integral."""
    A = M if (isinstance(M, np.ndarray) and M.dtype == object) else to_object(M)
    n = _require_square(A)
    return solve_exact(A, exact_identity(n))


def _normalize_exact(M: ExactMatrix) -> ExactMatrix:
    for idx, x in np.ndenumerate(M):
        if isinstance(x, Fraction) and x.denominator == 1:
            M[idx] = int(x)
    return M


def super_trace(M, dims) -> int | Fraction:
    """str(M) = sum_x (-1)^dim(x) M_xx over the canonical face order."""
    A = np.asarray(M)
    n = _require_square(A)
    if len(dims) != n:
        raise ShapeError(f"dims has length {len(dims)}, matrix is {n}x{n}")
    total = 0
    for i, d in enumerate(dims):
        total += A[i, i] if d % 2 == 0 else -A[i, i]
    return _exact_scalar(total) if not isinstance(total, float) else total


def charpoly_fredholm(A_prime) -> list[int]:
    """Coefficients c_0..c_n of det(1 + z A'), ascending powers; c_0 = 1.

    Faddeev-LeVerrier on the (integer) matrix, run in Fractions and returned
    as exact integers.  Evaluating at z=1 gives det(1 + A').
    """
    A = A_prime if (isinstance(A_prime, np.ndarray) and A_prime.dtype == object) else to_object(A_prime)
    n = _require_square(A)
    if n == 0:
        return [1]
    # charpoly of A: det(tI - A) = t^n + a_{n-1} t^{n-1} + ... + a_0
    frac = np.empty_like(A)
    frac[...] = [[Fraction(x) for x in row] for row in A]
    coeffs = [Fraction(1)]  # descending: t^n coefficient first
    Mk = np.zeros_like(frac)
    ident = exact_identity(n)
    for k in range(1, n + 1):
        Mk = frac @ Mk + coeffs[-1] * ident
        c = Fraction(-1, k) * np.trace(frac @ Mk)
        coeffs.append(c)
    # det(I + zA) = sum_k (-1)^k a_{n-k} ... = sum over descending coeffs:
    # det(I + zA) = z^n * charpoly_at(1/z) * (-1)^n with charpoly(t) = det(tI - A)
    out = []
    for k in range(n + 1):
        # coefficient of z^k in det(I + zA) equals (-1)^k * coeffs[k]
        c = coeffs[k] if k % 2 == 0 else -coeffs[k]
        assert c.denominator == 1
        out.append(int(c))
    assert out[0] == 1
    return out


def eval_poly(coeffs: list[int], z: Fraction | int) -> Fraction | int:
    acc: Fraction | int = 0
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def rank_exact(M) -> int:
    """Rank over the rationals, by exact row echelon."""
    A = (M if (isinstance(M, np.ndarray) and M.dtype == object) else to_object(M)).copy()
    if A.size == 0:
        return 0
    rows, cols = A.shape
    rank = 0
    for col in range(cols):
        pivot_row = next((r for r in range(rank, rows) if A[r, col] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            A[[rank, pivot_row]] = A[[pivot_row, rank]]
        pivot = Fraction(A[rank, col])
        for r in range(rank + 1, rows):
            if A[r, col] != 0:
                A[r, col:] = A[r, col:] - (Fraction(A[r, col]) / pivot) * A[rank, col:]
        rank += 1
        if rank == rows:
            break
    return rank


def sym_eigen(M, tol: float = 1e-8, *, vectors: bool = False):
    """Ascending eigenvalues of a symmetric float matrix (optionally vectors).

    Raises AsymmetricMatrix if M deviates from symmetry beyond tol * |M|_inf,
    and asserts the reconstruction residual |MV - V diag(w)|_inf below
    1e-8 * |M|_inf.
    """
    A = np.asarray(M, dtype=float)
    n = _require_square(A)
    if n == 0:
        return (np.zeros(0), np.zeros((0, 0))) if vectors else np.zeros(0)
    scale = max(np.abs(A).max(), 1.0)
    if np.abs(A - A.T).max() > tol * scale:
        raise AsymmetricMatrix("input matrix is not symmetric within tolerance")
    w, V = np.linalg.eigh((A + A.T) / 2.0)
    residual = np.abs(A @ V - V @ np.diag(w)).max()
    if residual > 1e-8 * scale:
        raise ArithmeticError(f"eigendecomposition residual {residual:.3e} too large")
    return (w, V) if vectors else w
