"""Helmholtz free energy on the face simplex: critical points across temperature.

The functional is F(p, beta) = beta * U(p) + (1 - beta) * S(p) with
U(p) = p^T g p the Green-function energy and S the Shannon entropy; beta runs
from 0 (pure entropy, uniform critical point) to 1 (pure energy, the degree
formula point p = (1 + deg) / Z plus support-restricted candidates).
Stationarity on the simplex reads

    R_x = 2 beta (g p)_x - (1 - beta)(log p_x + 1) - lambda = 0,  sum p = 1.

Newton runs in u = log p, which follows branches whose support degenerates as
beta -> 1 (components like exp(-c/(1-beta))) without any probability floor.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exactmat import SingularMatrix, solve_exact
from .potential import GreenFunction

NEWTON_TOL = 1e-12
DEDUP_TOL = 1e-6
MATCH_TOL = 0.05
HESSIAN_ZERO_TOL = 1e-6
EVENT_WIDTH = 1e-6
CATASTROPHE_TOL = 1e-4
ORBIT_TOL = 1e-5


def entropy(p) -> float:
    """Shannon entropy -sum p log p (natural log, zero terms skipped)."""
    total = 0.0
    for v in p:
        v = float(v)
        if v > 0.0:
            total -= v * math.log(v)
    return total


def free_energy(gf: GreenFunction, p, beta: float) -> tuple[float, float, float]:
    """(U, S, F) with F = beta * U + (1 - beta) * S."""
    pf = np.asarray([float(v) for v in p])
    U = float(pf @ gf.g_float() @ pf)
    S = entropy(pf)
    return U, S, beta * U + (1.0 - beta) * S


@dataclass(frozen=True)
class CriticalPoint:
    beta: float
    p: tuple[float, ...]
    lam: float
    U: float
    S: float
    F: float
    residual: float
    hessian_signature: tuple[int, int, int]  # (n_neg, n_zero, n_pos)
    kind: str  # minimum | saddle | maximum | degenerate
    min_hessian_abs_eig: float
    support: tuple[int, ...]  # indices with positive mass
    exact_p: tuple[Fraction, ...] | None = None
    u: tuple[float, ...] | None = field(default=None, repr=False, compare=False)


@dataclass(frozen=True)
class SupportMinimizer:
    support: tuple[int, ...]
    admissible: bool
    reason: str | None
    point: CriticalPoint | None


@dataclass
class Branch:
    branch_id: int
    betas: list[float]
    points: list[CriticalPoint]
    born_beta: float
    died_beta: float | None = None


@dataclass(frozen=True)
class BifurcationEvent:
    kind: str  # saddle_node | pitchfork | unclassified
    direction: str  # birth | death
    beta: float
    bracket: tuple[float, float]
    branch_ids: tuple[int, ...]
    continuing_branch: int | None
    min_hessian_abs_eig: float


@dataclass(frozen=True)
class CatastropheEvent:
    beta: float
    bracket: tuple[float, float]
    jump: float  # F(new minimum) - F(old minimum), negative for a drop


@dataclass
class SweepReport:
    beta_grid: list[float]
    branches: list[Branch]
    bifurcations: list[BifurcationEvent]
    catastrophes: list[CatastropheEvent]
    min_curve: list[dict]
    endpoint_candidates: list[CriticalPoint]
    config: dict


def stationarity_residual(gf: GreenFunction, p, lam: float, beta: float, u=None) -> float:
    """max(|R|_inf, |sum p - 1|), recomputed from scratch.

    For support-degenerate points (some p_x = 0) the residual is taken over
    the support, matching the restricted Lagrange system.
    """
    g = gf.g_float()
    pf = np.asarray([float(v) for v in p])
    gp = g @ pf
    worst = abs(float(pf.sum()) - 1.0)
    for x in range(len(pf)):
        if pf[x] > 0.0 or (u is not None and u[x] > -math.inf):
            logp = u[x] if u is not None else math.log(pf[x]) if pf[x] > 0 else None
            if logp is None:
                continue
            r = 2.0 * beta * gp[x] - (1.0 - beta) * (logp + 1.0) - lam
            worst = max(worst, abs(r))
        # zero-mass coordinates only constrain the limiting system
    return worst


def _tangent_basis(n: int) -> np.ndarray:
    """Deterministic orthonormal basis of {v : sum v = 0} (Helmert columns)."""
    B = np.zeros((n, n - 1))
    for j in range(1, n):
        B[:j, j - 1] = 1.0 / math.sqrt(j * (j + 1))
        B[j, j - 1] = -j / math.sqrt(j * (j + 1))
    return B


def _classify(g: np.ndarray, beta: float, p: np.ndarray,
              ztol: float = HESSIAN_ZERO_TOL) -> tuple[tuple[int, int, int], str, float]:
    n = len(p)
    if n <= 1:
        return (0, 0, 0), "minimum", math.inf
    safe = np.maximum(p, 1e-15)
    H = 2.0 * beta * g - (1.0 - beta) * np.diag(1.0 / safe)
    B = _tangent_basis(n)
    eigs = np.linalg.eigvalsh(B.T @ H @ B)
    n_neg = int((eigs < -ztol).sum())
    n_pos = int((eigs > ztol).sum())
    n_zero = len(eigs) - n_neg - n_pos
    if n_zero:
        kind = "degenerate"
    elif n_neg == 0:
        kind = "minimum"
    elif n_pos == 0:
        kind = "maximum"
    else:
        kind = "saddle"
    return (n_neg, n_zero, n_pos), kind, float(np.abs(eigs).min())


def _make_point(gf: GreenFunction, beta: float, u: np.ndarray, lam: float,
                residual: float) -> CriticalPoint:
    p = np.exp(u)
    U, S, F = free_energy(gf, p, beta)
    signature, kind, min_eig = _classify(gf.g_float(), beta, p)
    support = tuple(int(i) for i in range(len(p)) if p[i] > 0.0)
    return CriticalPoint(
        beta=float(beta), p=tuple(float(v) for v in p), lam=float(lam),
        U=U, S=S, F=F, residual=float(residual),
        hessian_signature=signature, kind=kind, min_hessian_abs_eig=min_eig,
        support=support, u=tuple(float(v) for v in u),
    )


def _newton(g: np.ndarray, beta: float, u0: np.ndarray, tol: float = NEWTON_TOL,
            max_iter: int = 200) -> tuple[np.ndarray, float, float, bool]:
    """Damped Newton on (u, lambda); returns (u, lambda, residual, converged)."""
    n = len(u0)
    u = np.asarray(u0, dtype=float).copy()
    p = np.exp(u)
    lam = float(np.mean(2.0 * beta * (g @ p) - (1.0 - beta) * (u + 1.0)))

    def residual(u_, lam_):
        p_ = np.exp(u_)
        R = 2.0 * beta * (g @ p_) - (1.0 - beta) * (u_ + 1.0) - lam_
        return R, p_.sum() - 1.0

    R, C = residual(u, lam)
    res = max(float(np.abs(R).max()), abs(C))
    for _ in range(max_iter):
        if res < tol:
            return u, lam, res, True
        p = np.exp(u)
        J = np.empty((n + 1, n + 1))
        J[:n, :n] = 2.0 * beta * g * p[None, :] - (1.0 - beta) * np.eye(n)
        J[:n, n] = -1.0
        J[n, :n] = p
        J[n, n] = 0.0
        try:
            step = np.linalg.solve(J, -np.concatenate([R, [C]]))
        except np.linalg.LinAlgError:
            return u, lam, res, False
        du, dlam = step[:n], step[n]
        # cap only upward moves: e^u explodes upward but merely underflows down
        biggest_up = float(du.max(initial=0.0))
        alpha = min(1.0, 20.0 / biggest_up) if biggest_up > 20.0 else 1.0
        improved = False
        for _ in range(50):
            u_try = u + alpha * du
            lam_try = lam + alpha * dlam
            R_try, C_try = residual(u_try, lam_try)
            res_try = max(float(np.abs(R_try).max()), abs(C_try))
            if res_try < res:
                u, lam, R, C, res = u_try, lam_try, R_try, C_try, res_try
                improved = True
                break
            alpha *= 0.5
        if not improved:
            return u, lam, res, False
    return u, lam, res, res < tol


def _dedup(points: list[tuple[np.ndarray, float, float]], tol: float = DEDUP_TOL):
    kept: list[tuple[np.ndarray, float, float]] = []
    for u, lam, res in points:
        p = np.exp(u)
        if not any(np.abs(p - np.exp(k[0])).max() < tol for k in kept):
            kept.append((u, lam, res))
    return kept


def critical_points(gf: GreenFunction, beta: float, n_starts: int, seed: int,
                    *, warm=(), tol: float = NEWTON_TOL) -> list[CriticalPoint]:
    """All distinct converged critical points from warm seeds + fresh starts.

    Results are deduplicated at |dp|_inf < 1e-6 and sorted by (F, p); every
    returned point satisfies the stationarity system to `tol`.
    """
    if not 0.0 < beta < 1.0:
        raise ValueError("critical_points requires beta strictly inside (0, 1)")
    if gf.n == 0:
        return []
    g = gf.g_float()
    rng = np.random.default_rng(seed)
    seeds = [np.asarray(w, dtype=float) for w in warm]
    for _ in range(n_starts):
        seeds.append(np.log(rng.dirichlet(np.ones(gf.n))))
    solved = []
    for u0 in seeds:
        u, lam, res, ok = _newton(g, beta, u0, tol)
        if ok:
            solved.append((u, lam, res))
    kept = _dedup(solved)
    pts = [_make_point(gf, beta, u, lam, res) for u, lam, res in kept]
    pts.sort(key=lambda c: (c.F, c.p))
    return pts


def uniform_point(gf: GreenFunction) -> CriticalPoint:
    """The beta = 0 critical point: the uniform distribution."""
    n = gf.n
    u = np.full(n, -math.log(n))
    lam = math.log(n) - 1.0
    return _make_point(gf, 0.0, u, lam, 0.0)


def interior_energy_minimizer(gf: GreenFunction) -> CriticalPoint:
    """The beta = 1 interior point p = (1 + deg_G') / Z, exact in rationals.

    Verifies g (1 + deg) = 1 entrywise (equivalently 2 g p = (2/Z) 1) before
    returning; Z = |V(G')| + 2|E(G')| and U = 1/Z.
    """
    n = gf.n
    if n == 0:
        raise ValueError("empty complex has no energy minimizer")
    degrees = (gf.laplacian.sum(axis=1) - 1).astype(np.int64)
    weights = degrees + 1
    Z = int(weights.sum())
    check = [sum(int(gf.g[x, y]) * int(weights[y]) for y in range(n)) for x in range(n)]
    if any(c != 1 for c in check):
        raise ArithmeticError("degree formula point failed the exact Lagrange check")
    exact_p = tuple(Fraction(int(w), Z) for w in weights)
    p = np.array([float(q) for q in exact_p])
    U, S, F = free_energy(gf, p, 1.0)
    signature, kind, min_eig = _classify(gf.g_float(), 1.0, p)
    return CriticalPoint(
        beta=1.0, p=tuple(float(v) for v in p), lam=2.0 / Z,
        U=float(Fraction(1, Z)), S=S, F=float(Fraction(1, Z)),
        residual=0.0, hessian_signature=signature, kind=kind,
        min_hessian_abs_eig=min_eig, support=tuple(range(n)),
        exact_p=exact_p, u=tuple(math.log(float(q)) for q in exact_p),
    )


def support_restricted_minimizer(gf: GreenFunction, W) -> SupportMinimizer:
    """Solve the restricted Lagrange system 2 g_W p = lambda 1, sum p = 1.

    Returns an inadmissible record when the bordered system is singular or the
    solution leaves the open simplex on W.  U = lambda / 2 exactly.
    """
    W = tuple(sorted(int(x) for x in W))
    if not W:
        return SupportMinimizer(W, False, "empty support", None)
    m = len(W)
    bordered = np.zeros((m + 1, m + 1), dtype=object)
    for a, x in enumerate(W):
        for b, y in enumerate(W):
            bordered[a, b] = 2 * int(gf.g[x, y])
        bordered[a, m] = -1
        bordered[m, a] = 1
    bordered[m, m] = 0
    rhs = np.zeros((m + 1, 1), dtype=object)
    rhs[m, 0] = 1
    try:
        sol = solve_exact(bordered, rhs)
    except SingularMatrix:
        return SupportMinimizer(W, False, "singular restricted system", None)
    p_W = [Fraction(sol[a, 0]) for a in range(m)]
    lam = Fraction(sol[m, 0])
    if any(q <= 0 for q in p_W):
        return SupportMinimizer(W, False, "solution leaves the open simplex", None)
    n = gf.n
    exact_p = [Fraction(0)] * n
    for a, x in enumerate(W):
        exact_p[x] = p_W[a]
    p = np.array([float(q) for q in exact_p])
    U = lam / 2
    S = entropy(p)
    g_sub = gf.g_float()[np.ix_(W, W)]
    signature, kind, min_eig = _classify(g_sub, 1.0, p[list(W)])
    point = CriticalPoint(
        beta=1.0, p=tuple(float(v) for v in p), lam=float(lam),
        U=float(U), S=S, F=float(U), residual=0.0,
        hessian_signature=signature, kind=kind, min_hessian_abs_eig=min_eig,
        support=W, exact_p=tuple(exact_p), u=None,
    )
    return SupportMinimizer(W, True, None, point)


def support_candidates(gf: GreenFunction, exhaustive_limit: int = 12) -> list[CriticalPoint]:
    """Admissible support-restricted points at beta = 1.

    Exhaustive over all nonempty supports for n <= exhaustive_limit; greedy
    support shrinking (drop the most negative component, re-solve) above it.
    """
    n = gf.n
    found: list[CriticalPoint] = []
    if n == 0:
        return found
    if n <= exhaustive_limit:
        for m in range(1, n + 1):
            for W in itertools.combinations(range(n), m):
                res = support_restricted_minimizer(gf, W)
                if res.admissible:
                    found.append(res.point)
    else:
        W = list(range(n))
        while W:
            res = support_restricted_minimizer(gf, W)
            if res.admissible:
                found.append(res.point)
                break
            m = len(W)
            bordered = np.zeros((m + 1, m + 1), dtype=object)
            for a, x in enumerate(W):
                for b, y in enumerate(W):
                    bordered[a, b] = 2 * int(gf.g[x, y])
                bordered[a, m] = -1
                bordered[m, a] = 1
            rhs = np.zeros((m + 1, 1), dtype=object)
            rhs[m, 0] = 1
            try:
                sol = solve_exact(bordered, rhs)
            except SingularMatrix:
                break
            values = [Fraction(sol[a, 0]) for a in range(m)]
            drop = min(range(m), key=lambda a: values[a])
            if values[drop] > 0:
                break
            W.pop(drop)
    found.sort(key=lambda c: (c.U, c.support))
    return found


def free_energy_gradient(gf: GreenFunction, p, beta: float) -> np.ndarray:
    """Unconstrained gradient dF/dp_x = 2 beta (g p)_x - (1 - beta)(log p_x + 1)."""
    pf = np.asarray([float(v) for v in p])
    return 2.0 * beta * (gf.g_float() @ pf) - (1.0 - beta) * (np.log(pf) + 1.0)


def projected_hessian(gf: GreenFunction, p, beta: float) -> np.ndarray:
    """Hessian 2 beta g - (1-beta) diag(1/p) projected onto {v : sum v = 0}."""
    pf = np.asarray([float(v) for v in p])
    H = 2.0 * beta * gf.g_float() - (1.0 - beta) * np.diag(1.0 / pf)
    B = _tangent_basis(len(pf))
    return B.T @ H @ B


def tangent_basis(n: int) -> np.ndarray:
    return _tangent_basis(n)


def graph_automorphisms(A: np.ndarray, node_budget: int = 200000) -> list[tuple[int, ...]] | None:
    """Adjacency-preserving permutations of a small graph, or None over budget.

    Color refinement first, then backtracking within color classes; used only
    to confirm the mutual symmetry of pitchfork branches.
    """
    n = A.shape[0]
    if n == 0:
        return [()]
    if n > 40:
        return None
    colors = [int(A[i].sum()) for i in range(n)]
    for _ in range(n):
        sig = [(colors[i], tuple(sorted(colors[j] for j in np.nonzero(A[i])[0]))) for i in range(n)]
        palette = {s: k for k, s in enumerate(sorted(set(sig)))}
        fresh = [palette[s] for s in sig]
        if fresh == colors:
            break
        colors = fresh
    order = sorted(range(n), key=lambda i: (colors[i], i))
    perms: list[tuple[int, ...]] = []
    assign = [-1] * n
    used = [False] * n
    budget = [node_budget]

    def backtrack(k: int) -> None:
        if budget[0] <= 0:
            return
        budget[0] -= 1
        if k == n:
            perms.append(tuple(assign))
            return
        v = order[k]
        for w in range(n):
            if used[w] or colors[w] != colors[v]:
                continue
            if all(A[v, order[i]] == A[w, assign[order[i]]] for i in range(k)):
                assign[v] = w
                used[w] = True
                backtrack(k + 1)
                used[w] = False
                assign[v] = -1

    backtrack(0)
    return None if budget[0] <= 0 else perms


class _SweepEngine:
    def __init__(self, gf: GreenFunction, beta_from: float, beta_to: float,
                 steps: int, n_starts: int, seed: int, tol: float = NEWTON_TOL):
        if not (0.0 <= beta_from < beta_to <= 1.0):
            raise ValueError("need 0 <= beta_from < beta_to <= 1")
        self.gf = gf
        self.g = gf.g_float()
        self.grid = [beta_from + k * (beta_to - beta_from) / steps for k in range(steps + 1)]
        self.n_starts = n_starts
        self.seed = seed
        self.tol = tol
        self.rng = np.random.default_rng(seed)
        self.branches: list[Branch] = []
        self.pending_births: list[tuple[int, int]] = []  # (branch_id, grid index)
        self.pending_deaths: list[tuple[int, int]] = []

    # -- grid pass ---------------------------------------------------------

    def solve_grid_point(self, beta: float, warm_us: list[np.ndarray]) -> list[CriticalPoint]:
        if beta == 0.0:
            return [uniform_point(self.gf)]
        seeds = list(warm_us)
        for _ in range(self.n_starts):
            seeds.append(np.log(self.rng.dirichlet(np.ones(self.gf.n))))
        solved = []
        for u0 in seeds:
            u, lam, res, ok = _newton(self.g, beta, u0, self.tol)
            if ok:
                solved.append((u, lam, res))
        kept = _dedup(solved)
        pts = [_make_point(self.gf, beta, u, lam, res) for u, lam, res in kept]
        pts.sort(key=lambda c: (c.F, c.p))
        return pts

    def run_grid(self) -> None:
        active: dict[int, CriticalPoint] = {}
        for gi, beta in enumerate(self.grid):
            if beta == 1.0:
                break  # endpoint handled separately
            warm = [np.asarray(active[b].u) for b in sorted(active)]
            pts = self.solve_grid_point(beta, warm)
            pool = list(pts)
            assigned: dict[int, CriticalPoint] = {}
            for bid in sorted(active):
                prev = np.asarray(active[bid].p)
                best, best_d = None, MATCH_TOL
                for cand in pool:
                    d = float(np.abs(np.asarray(cand.p) - prev).max())
                    if d < best_d:
                        best, best_d = cand, d
                if best is not None:
                    assigned[bid] = best
                    pool.remove(best)
                else:
                    self.branches[bid].died_beta = beta
                    if gi > 0:
                        self.pending_deaths.append((bid, gi))
            for bid, cand in assigned.items():
                self.branches[bid].betas.append(beta)
                self.branches[bid].points.append(cand)
            active = dict(assigned)
            for cand in pool:
                bid = len(self.branches)
                self.branches.append(Branch(bid, [beta], [cand], born_beta=beta))
                active[bid] = cand
                if gi > 0:
                    self.pending_births.append((bid, gi))
        self.final_active = active

    def close_endpoint(self) -> list[CriticalPoint]:
        """Handle an exact beta = 1 grid endpoint: exact candidate matching."""
        if self.grid[-1] != 1.0:
            return []
        candidates = [interior_energy_minimizer(self.gf)] + support_candidates(self.gf)
        dedup: list[CriticalPoint] = []
        for c in candidates:
            if not any(np.abs(np.asarray(c.p) - np.asarray(d.p)).max() < 1e-9 for d in dedup):
                dedup.append(c)
        pool = list(dedup)
        for bid in sorted(self.final_active):
            prev = np.asarray(self.final_active[bid].p)
            best, best_d = None, MATCH_TOL
            for cand in pool:
                d = float(np.abs(np.asarray(cand.p) - prev).max())
                if d < best_d:
                    best, best_d = cand, d
            if best is not None:
                self.branches[bid].betas.append(1.0)
                self.branches[bid].points.append(best)
                pool.remove(best)
        return dedup

    # -- event localization ------------------------------------------------

    def _solve_from(self, beta: float, u0: np.ndarray):
        u, lam, res, ok = _newton(self.g, beta, np.asarray(u0, dtype=float), self.tol)
        return (u, lam, res) if ok else None

    def _continuing_seeds(self, bracket_lo: float, bracket_hi: float,
                          exclude: set[int]) -> dict[int, np.ndarray]:
        seeds = {}
        for br in self.branches:
            if br.branch_id in exclude or not br.points:
                continue
            if br.born_beta <= bracket_lo and (br.died_beta is None or br.died_beta > bracket_hi):
                k = min(range(len(br.betas)), key=lambda i: abs(br.betas[i] - bracket_hi))
                if br.points[k].u is not None:
                    seeds[br.branch_id] = np.asarray(br.points[k].u)
        return seeds

    def _present(self, beta: float, seed_u: np.ndarray,
                 continuing: dict[int, np.ndarray]):
        """Solve from seed; present iff distinct from every continuing branch."""
        sol = self._solve_from(beta, seed_u)
        if sol is None:
            return None
        p = np.exp(sol[0])
        if np.abs(p - np.exp(np.asarray(seed_u, dtype=float))).max() > 0.2:
            return None
        cont_sols = {}
        for bid, cu in continuing.items():
            csol = self._solve_from(beta, cu)
            if csol is not None:
                cont_sols[bid] = csol
                if np.abs(p - np.exp(csol[0])).max() < DEDUP_TOL:
                    return None
        return sol, cont_sols

    def locate_birth(self, bid: int, gi: int):
        """Walk the birth grid cell down past discovery lag, then bisect."""
        br = self.branches[bid]
        seed = np.asarray(br.points[0].u)
        continuing = self._continuing_seeds(self.grid[gi - 1], self.grid[gi], {bid})
        lo_idx = gi - 1
        hi = self.grid[gi]
        # discovery lag: follow the branch down while it still exists
        while lo_idx > 0:
            got = self._present(self.grid[lo_idx], seed, continuing)
            if got is None:
                break
            seed = got[0][0]
            hi = self.grid[lo_idx]
            for cbid, csol in got[1].items():
                continuing[cbid] = csol[0]
            lo_idx -= 1
        else:
            if lo_idx == 0 and self.grid[0] > 0.0:
                got = self._present(self.grid[0], seed, continuing)
                if got is not None:
                    br.born_beta = self.grid[0]
                    return None  # existed from the start; not an event
        lo = self.grid[lo_idx]
        while hi - lo > EVENT_WIDTH:
            mid = 0.5 * (lo + hi)
            got = self._present(mid, seed, continuing)
            if got is not None:
                hi = mid
                seed = got[0][0]
                for cbid, csol in got[1].items():
                    continuing[cbid] = csol[0]
            else:
                lo = mid
        br.born_beta = 0.5 * (lo + hi)
        return {"bid": bid, "beta": br.born_beta, "bracket": (lo, hi),
                "seed": seed, "side": hi, "continuing": continuing}

    def locate_death(self, bid: int, gi: int):
        """Mirror of locate_birth: follow the dying branch upward, bisect."""
        br = self.branches[bid]
        seed = np.asarray(br.points[-1].u)
        continuing = self._continuing_seeds(self.grid[gi - 1], self.grid[gi], {bid})
        hi_idx = gi
        lo = self.grid[gi - 1]
        last_interior = len(self.grid) - 1
        while self.grid[last_interior] == 1.0:
            last_interior -= 1
        while hi_idx <= last_interior:
            got = self._present(self.grid[hi_idx], seed, continuing)
            if got is None:
                break
            seed = got[0][0]
            lo = self.grid[hi_idx]
            for cbid, csol in got[1].items():
                continuing[cbid] = csol[0]
            hi_idx += 1
        else:
            br.died_beta = None
            return None  # survived to the end after all; not an event
        hi = self.grid[hi_idx]
        while hi - lo > EVENT_WIDTH:
            mid = 0.5 * (lo + hi)
            got = self._present(mid, seed, continuing)
            if got is not None:
                lo = mid
                seed = got[0][0]
                for cbid, csol in got[1].items():
                    continuing[cbid] = csol[0]
            else:
                hi = mid
        br.died_beta = 0.5 * (lo + hi)
        return {"bid": bid, "beta": br.died_beta, "bracket": (lo, hi),
                "seed": seed, "side": lo, "continuing": continuing}

    # -- classification ----------------------------------------------------

    def _aut(self):
        if not hasattr(self, "_aut_cache"):
            A = (self.gf.laplacian - np.eye(self.gf.n, dtype=np.int64))
            self._aut_cache = graph_automorphisms(A)
        return self._aut_cache

    def classify_cluster(self, cluster: list[dict], direction: str) -> BifurcationEvent:
        beta_c = max(rec["side"] for rec in cluster)
        sols = []
        for rec in cluster:
            got = self._solve_from(beta_c, rec["seed"])
            sols.append(np.exp(got[0]) if got else np.exp(np.asarray(rec["seed"], dtype=float)))
        continuing: dict[int, np.ndarray] = {}
        for rec in cluster:
            for cbid, cu in rec["continuing"].items():
                if cbid not in continuing:
                    csol = self._solve_from(beta_c, cu)
                    if csol is not None:
                        continuing[cbid] = np.exp(csol[0])
        min_eig = math.inf
        for rec, p in zip(cluster, sols):
            _, _, me = _classify(self.g, beta_c, p)
            min_eig = min(min_eig, me)
        cont_bid = None
        if continuing:
            # nearest surviving branch, recorded as a diagnostic
            dists = {bid: min(float(np.abs(p - q).max()) for p in sols)
                     for bid, q in continuing.items()}
            cont_bid = min(dists, key=lambda b: (dists[b], b))
        if self._orbital(sols):
            kind = "pitchfork"
        elif len(sols) == 2 and float(np.abs(sols[0] - sols[1]).max()) < MATCH_TOL \
                and min_eig < 0.1:
            kind = "saddle_node"
        else:
            kind = "unclassified"
        return BifurcationEvent(
            kind=kind, direction=direction,
            beta=float(np.mean([rec["beta"] for rec in cluster])),
            bracket=(min(rec["bracket"][0] for rec in cluster),
                     max(rec["bracket"][1] for rec in cluster)),
            branch_ids=tuple(sorted(rec["bid"] for rec in cluster)),
            continuing_branch=cont_bid,
            min_hessian_abs_eig=float(min_eig),
        )

    def _orbital(self, sols: list[np.ndarray]) -> bool:
        """True iff every new branch has an automorphic partner among the others."""
        perms = self._aut()
        if perms is None or len(sols) < 2:
            return False
        paired = [False] * len(sols)
        for i, pi in enumerate(sols):
            for j, pj in enumerate(sols):
                if i == j:
                    continue
                for perm in perms:
                    if float(np.abs(pi[list(perm)] - pj).max()) < ORBIT_TOL:
                        paired[i] = True
                        break
                if paired[i]:
                    break
        return all(paired)

    def detect_catastrophe(self, event: BifurcationEvent, cluster: list[dict],
                           direction: str) -> CatastropheEvent | None:
        beta_c = event.bracket[1] if direction == "birth" else event.bracket[0]
        new_F = []
        for rec in cluster:
            got = self._solve_from(beta_c, rec["seed"])
            if got is not None:
                new_F.append(_make_point(self.gf, beta_c, got[0], got[1], got[2]).F)
        cont_F = []
        for rec in cluster:
            for cbid, cu in rec["continuing"].items():
                got = self._solve_from(beta_c, cu)
                if got is not None:
                    cont_F.append(_make_point(self.gf, beta_c, got[0], got[1], got[2]).F)
        if not new_F or not cont_F:
            return None
        if direction == "birth" and min(new_F) < min(cont_F) - CATASTROPHE_TOL:
            return CatastropheEvent(event.beta, event.bracket, float(min(new_F) - min(cont_F)))
        if direction == "death" and min(new_F) < min(cont_F) - CATASTROPHE_TOL:
            # the minimum branch dies; the curve jumps up to the survivors
            return CatastropheEvent(event.beta, event.bracket, float(min(cont_F) - min(new_F)))
        return None


def sweep(gf: GreenFunction, beta_from: float, beta_to: float, steps: int,
          n_starts: int, seed: int, tol: float = NEWTON_TOL) -> SweepReport:
    """Track critical points across a beta grid; localize and classify events.

    Branch links use nearest-p matching (|dp|_inf < 0.05); each branch birth or
    death strictly inside the grid is walked back through discovery lag and
    bisected to a 1e-6 bracket, then clustered (1e-5) and classified.  At an
    exact beta = 1 endpoint the tracked branches are matched to the exact
    degree-formula point and the admissible support-restricted candidates.
    """
    if gf.n == 0:
        return SweepReport([], [], [], [], [], [], {
            "beta_from": beta_from, "beta_to": beta_to, "steps": steps,
            "n_starts": n_starts, "seed": seed, "newton_tol": tol,
        })
    engine = _SweepEngine(gf, beta_from, beta_to, steps, n_starts, seed, tol)
    engine.run_grid()
    endpoint = engine.close_endpoint()

    birth_recs = []
    for bid, gi in engine.pending_births:
        rec = engine.locate_birth(bid, gi)
        if rec is not None:
            birth_recs.append(rec)
    death_recs = []
    for bid, gi in engine.pending_deaths:
        rec = engine.locate_death(bid, gi)
        if rec is not None:
            death_recs.append(rec)

    events: list[BifurcationEvent] = []
    catastrophes: list[CatastropheEvent] = []
    for direction, recs in (("birth", birth_recs), ("death", death_recs)):
        recs = sorted(recs, key=lambda r: r["beta"])
        cluster: list[dict] = []
        for rec in recs + [None]:
            if rec is not None and (not cluster or rec["beta"] - cluster[-1]["beta"] < 1e-5):
                cluster.append(rec)
                continue
            if cluster:
                event = engine.classify_cluster(cluster, direction)
                events.append(event)
                cat = engine.detect_catastrophe(event, cluster, direction)
                if cat is not None:
                    catastrophes.append(cat)
            cluster = [rec] if rec is not None else []
    events.sort(key=lambda e: e.beta)
    catastrophes.sort(key=lambda c: c.beta)

    by_beta: dict[float, list[tuple[int, CriticalPoint]]] = {}
    for br in engine.branches:
        for b, pt in zip(br.betas, br.points):
            by_beta.setdefault(b, []).append((br.branch_id, pt))
    min_curve = []
    prev_beta = None
    for b in engine.grid:
        pts = by_beta.get(b, [])
        if b == 1.0:
            pts = pts + [(-1, c) for c in endpoint]
        if not pts:
            prev_beta = b
            continue
        bid, best = min(pts, key=lambda t: (t[1].F, t[0]))
        flag = any(prev_beta is not None and prev_beta < c.beta <= b for c in catastrophes)
        min_curve.append({
            "beta": b, "min_F": best.F,
            "branch_id": None if bid < 0 else bid,
            "discontinuity": flag,
        })
        prev_beta = b

    return SweepReport(
        beta_grid=list(engine.grid),
        branches=engine.branches,
        bifurcations=events,
        catastrophes=catastrophes,
        min_curve=min_curve,
        endpoint_candidates=endpoint,
        config={
            "beta_from": beta_from, "beta_to": beta_to, "steps": steps,
            "n_starts": n_starts, "seed": seed, "newton_tol": tol,
            "match_tol": MATCH_TOL, "dedup_tol": DEDUP_TOL,
            "event_width": EVENT_WIDTH,
            "endpoint_note": "support-restricted candidates included at beta=1 only; "
                             "they do not participate in event or catastrophe detection",
        },
    )


def san_diego_check(gf: GreenFunction) -> dict:
    """Degree-normalized Laplacian checks at the interior energy point.

    (a) 1 + deg = Z p and g (1 + deg) = 1, exactly in rationals;
    (b) the top eigenvalue of diag(1/sqrt p) L' diag(1/sqrt p) equals Z;
    (c) sum_xy conj(g)(x,y) / (psi(x) psi(y)) = chi(G), psi = sqrt p.
    """
    point = interior_energy_minimizer(gf)
    n = gf.n
    degrees = (gf.laplacian.sum(axis=1) - 1).astype(np.int64)
    Z = int((degrees + 1).sum())
    exact_ok = all(point.exact_p[x] * Z == int(degrees[x]) + 1 for x in range(n))
    check = [sum(int(gf.g[x, y]) * (int(degrees[y]) + 1) for y in range(n)) for x in range(n)]
    exact_ok = exact_ok and all(c == 1 for c in check)
    p = np.asarray(point.p)
    P = np.diag(1.0 / np.sqrt(p))
    Lt = P @ gf.laplacian.astype(float) @ P
    eigs = np.linalg.eigvalsh((Lt + Lt.T) / 2.0)
    top_residual = abs(float(eigs.max()) - Z) / Z
    gt = np.linalg.inv(Lt)
    psi = np.sqrt(p)
    chi_val = float((gt / np.outer(psi, psi)).sum())
    dims = gf.complex.dims()
    chi = sum(1 if d % 2 == 0 else -1 for d in dims)
    return {
        "Z": Z,
        "exact_eigenvector": bool(exact_ok),
        "top_eigenvalue_residual": top_residual,
        "chi": chi,
        "chi_identity_residual": abs(chi_val - chi),
    }


def monotonicity_check(gf: GreenFunction, p, T_grid) -> dict:
    """Slope of T -> U(p) - T S(p): constant -S(p), strictly negative for S > 0."""
    pf = np.asarray([float(v) for v in p])
    U = float(pf @ gf.g_float() @ pf)
    S = entropy(pf)
    values = [U - T * S for T in T_grid]
    monotone = all(b < a for a, b in zip(values, values[1:]))
    return {
        "slope": -S,
        "monotone": bool(monotone) if S > 0 else False,
        "boundary_case": S == 0.0,
        "slope_bound": math.log(gf.n) if gf.n else 0.0,
    }


def conjecture_probe(report: SweepReport) -> dict:
    """Sign counts for F > 0 and dF/dbeta = U - S <= 0 at all tracked points.

    Exploratory only: counts are reported, never asserted.
    """
    points = 0
    fbeta_positive = 0
    f_nonpositive = 0
    for br in report.branches:
        for pt in br.points:
            points += 1
            if pt.U - pt.S > 0:
                fbeta_positive += 1
            if pt.F <= 0:
                f_nonpositive += 1
    return {
        "points": points,
        "fbeta_positive": fbeta_positive,
        "f_nonpositive": f_nonpositive,
    }
