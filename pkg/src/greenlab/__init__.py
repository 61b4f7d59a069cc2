"""greenlab: exact potential theory and free-energy bifurcations on complexes."""

from .complexes import (
    ComplexTooLarge,
    Face,
    GraphSpec,
    InvalidFace,
    SimplicialComplex,
    barycentric_refinement,
    cartesian_product,
    erdos_renyi_whitney,
    euler_characteristic,
    from_maximal_faces,
    join,
    whitney_complex,
)
from .curvature import (
    LocalInjectivityViolation,
    ball_lemma_check,
    euler_vertex_curvature,
    poincare_hopf_index,
    poincare_hopf_indices,
    stable_curvature,
    symmetric_index,
    unstable_curvature,
    unstable_euler_curvature,
)
from .derived import (
    DerivedGraph,
    SphereDecomposition,
    SphereGeometry,
    connection_ball,
    connection_graph,
    refinement_graph,
    sphere_euler,
    unit_sphere,
)
from .exactmat import (
    AsymmetricMatrix,
    ShapeError,
    SingularMatrix,
    charpoly_fredholm,
    det_exact,
    inverse_exact,
    solve_exact,
    super_trace,
    sym_eigen,
)
from .hodge import betti, hodge_blocks, hodge_pseudoinverse_diag, incidence, mckean_singer_check
from .potential import (
    GreenFunction,
    ZetaFunction,
    energy_quadratic,
    green_function,
    offdiag_support_report,
    potential,
    total_energy,
    zeta,
)
from .thermo import (
    CriticalPoint,
    SweepReport,
    conjecture_probe,
    critical_points,
    entropy,
    free_energy,
    interior_energy_minimizer,
    monotonicity_check,
    san_diego_check,
    support_restricted_minimizer,
    sweep,
)

__version__ = "0.1.0"
