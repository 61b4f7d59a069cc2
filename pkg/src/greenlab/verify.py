"""The identity suite behind `greenlab verify`.

Nine checks per complex: unimodularity, the Green-function diagonal law,
Gauss-Bonnet for the unstable curvature, str(g) = chi, the ball lemma, the
row-sum law, the energy theorem, McKean-Singer heat traces, and the even/odd
super-symmetry of the Hodge spectra.  Exact identities report integer
residuals and pass only at zero; floating checks pass below their tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex, euler_characteristic
from .curvature import ball_lemma_check, unstable_curvature
from .derived import SphereGeometry
from .exactmat import det_exact
from .hodge import mckean_singer_check, supersymmetry_residual
from .potential import GreenFunction, green_function, total_energy, verify_green_identities

EIG_TOL = 1e-8


@dataclass(frozen=True)
class IdentityResult:
    name: str
    passed: bool
    residual: float
    tolerance: float  # 0.0 marks an exact check

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "residual": self.residual,
            "tolerance": self.tolerance,
        }


def run_identity_suite(G: SimplicialComplex, eig_tol: float = EIG_TOL) -> list[IdentityResult]:
    geo = SphereGeometry(G)
    gf: GreenFunction = green_function(G)
    chi = euler_characteristic(G)
    results: list[IdentityResult] = []

    def exact(name: str, residual: int) -> None:
        results.append(IdentityResult(name, residual == 0, float(residual), 0.0))

    def approx(name: str, residual: float, tol: float) -> None:
        results.append(IdentityResult(name, residual < tol, float(residual), tol))

    green_res = verify_green_identities(gf, geo)
    det = det_exact(gf.laplacian) if G.n else 1
    exact("unimodularity", abs(abs(int(det)) - 1))
    exact("diagonal_law", green_res["diagonal"])
    exact("gauss_bonnet", abs(sum(unstable_curvature(G, geo)) - chi))
    exact("supertrace_green", green_res["supertrace"])
    exact("ball_lemma", ball_lemma_check(G, geo))
    exact("row_sum_law", green_res["row_sum"])
    exact("energy_theorem", abs(total_energy(gf) - chi))
    ms = mckean_singer_check(G)
    approx("mckean_singer", max(ms.values(), default=0.0), eig_tol)
    approx("supersymmetry", supersymmetry_residual(G), eig_tol)
    return results


def suite_report(G: SimplicialComplex, eig_tol: float = EIG_TOL) -> dict:
    results = run_identity_suite(G, eig_tol)
    return {
        "n_faces": G.n,
        "fvector": list(G.fvector),
        "euler_characteristic": euler_characteristic(G),
        "identities": [r.to_dict() for r in results],
        "passed": all(r.passed for r in results),
    }
