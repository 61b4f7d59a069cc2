"""Command-line interface.

Subcommands: verify, random, refine, graph, green, curvature, hodge,
minimize, sweep, zeta.  Exit codes: 0 success, 1 identity/assertion failure,
2 input error.  Every command is deterministic given (input bytes, flags,
seed); report paths also render matplotlib figures next to the delimited
output (sweep does so by default, others via --plot).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .complexes import (
    ComplexTooLarge,
    InvalidFace,
    SimplicialComplex,
    barycentric_refinement,
    erdos_renyi_whitney,
    euler_characteristic,
    whitney_complex,
)
from .curvature import euler_vertex_curvature, stable_curvature, unstable_curvature, unstable_euler_curvature
from .derived import connection_graph, refinement_graph
from .hodge import betti, block_spectra, hodge_blocks, mckean_singer_check, supersymmetry_residual
from .potential import green_function, total_energy, zeta as zeta_fn
from .thermo import interior_energy_minimizer, support_candidates, sweep as run_sweep
from .verify import suite_report

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _common(parser: argparse.ArgumentParser, needs_input: bool = True) -> None:
    if needs_input:
        parser.add_argument("--input", required=True, help="complex or graph JSON file")
    parser.add_argument("--out", help="output JSON path (default: stdout)")
    parser.add_argument("--csv", help="CSV output path where applicable")
    parser.add_argument("--seed", type=int, default=0, help="random seed")
    parser.add_argument("--tol-newton", type=float, default=1e-12, dest="tol_newton")
    parser.add_argument("--tol-eig", type=float, default=1e-8, dest="tol_eig")


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> SimplicialComplex:
    return io.load_complex_or_graph(path)


def cmd_verify(args) -> int:
    G = _load(args.input)
    report = suite_report(G, eig_tol=args.tol_eig)
    _emit(report, args.out)
    for item in report["identities"]:
        status = "pass" if item["passed"] else "FAIL"
        print(f"{status}  {item['name']}  residual={item['residual']:g}")
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_random(args) -> int:
    G = erdos_renyi_whitney(args.n, args.p, args.seed)
    text = io.complex_to_json(G) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_refine(args) -> int:
    G = _load(args.input)
    for _ in range(args.times):
        G = barycentric_refinement(G)
    text = io.complex_to_json(G) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_graph(args) -> int:
    G = _load(args.input)
    dg = refinement_graph(G) if args.kind == "refinement" else connection_graph(G)
    doc = {
        "kind": args.kind,
        "n": dg.n,
        "adjacency": dg.adjacency.tolist(),
        "degrees": dg.degrees.tolist(),
    }
    _emit(doc, args.out)
    return EXIT_OK


def cmd_green(args) -> int:
    G = _load(args.input)
    gf = green_function(G)
    doc = {
        "n": gf.n,
        "det": gf.det_sign,
        "euler_characteristic": euler_characteristic(G),
        "total_energy": total_energy(gf),
        "g": [[str(int(x)) for x in row] for row in gf.g],
    }
    _emit(doc, args.out)
    if args.csv:
        Path(args.csv).write_text(io.matrix_to_csv(gf.g))
    if args.plot:
        from .plots import save_matrix_figure

        save_matrix_figure(gf.g, args.plot, title="Green function")
    return EXIT_OK


def cmd_curvature(args) -> int:
    doc = json.loads(Path(args.input).read_text())
    graph = None
    if isinstance(doc, dict) and "edges" in doc and "n" in doc:
        graph = io.graph_from_json(Path(args.input).read_text())
        G = whitney_complex(graph)
    else:
        G = io.complex_from_json(Path(args.input).read_text())
    kminus = stable_curvature(G)
    kplus = unstable_curvature(G)
    lines = ["face,dim,k_minus,k_plus"]
    for i, f in enumerate(G.faces):
        label = "-".join(str(v) for v in f)
        lines.append(f"{label},{len(f) - 1},{kminus[i]},{kplus[i]}")
    csv_text = "\n".join(lines) + "\n"
    if args.csv:
        Path(args.csv).write_text(csv_text)
    else:
        sys.stdout.write(csv_text)
    if graph is not None:
        kv = euler_vertex_curvature(graph)
        kt = unstable_euler_curvature(graph)
        vlines = ["vertex,euler_curvature,unstable_euler_curvature"]
        for v in range(graph.vertex_count):
            vlines.append(f"{v},{kv[v]},{kt[v]}")
        vtext = "\n".join(vlines) + "\n"
        if args.csv:
            stem = Path(args.csv)
            stem.with_name(stem.stem + "_vertices" + stem.suffix).write_text(vtext)
        else:
            sys.stdout.write(vtext)
    return EXIT_OK


def cmd_hodge(args) -> int:
    G = _load(args.input)
    op = hodge_blocks(G)
    spectra = block_spectra(op, args.tol_eig)
    doc = {
        "fvector": list(G.fvector),
        "betti": betti(G),
        "spectra": [[float(x) for x in eigs] for eigs in spectra],
        "mckean_singer_residuals": {str(t): r for t, r in mckean_singer_check(G).items()},
        "supersymmetry_residual": supersymmetry_residual(G),
    }
    _emit(doc, args.out)
    if args.plot:
        from .plots import save_spectra_figure

        save_spectra_figure(spectra, args.plot)
    return EXIT_OK


def cmd_minimize(args) -> int:
    G = _load(args.input)
    gf = green_function(G)
    point = interior_energy_minimizer(gf)
    candidates = support_candidates(gf)

    def exact_energy(c):
        return sum(
            c.exact_p[x] * c.exact_p[y] * int(gf.g[x, y])
            for x in c.support for y in c.support
        )

    doc = {
        "interior": {
            "p": [str(q) for q in point.exact_p],
            "U": io.scalar_string(exact_energy(point)),
            "kind": point.kind,
        },
        "support_candidates": [
            {
                "support": list(c.support),
                "p": [str(c.exact_p[x]) for x in c.support],
                "U": io.scalar_string(exact_energy(c)),
                "kind": c.kind,
            }
            for c in candidates
        ],
    }
    _emit(doc, args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    G = _load(args.input)
    gf = green_function(G)
    report = run_sweep(gf, args.beta_from, args.beta_to, args.steps, args.starts,
                       args.seed, tol=args.tol_newton)
    events = [
        {
            "event": ev.kind,
            "direction": ev.direction,
            "beta": ev.beta,
            "bracket": list(ev.bracket),
            "branches": list(ev.branch_ids),
            "continuing_branch": ev.continuing_branch,
            "min_hessian_abs_eig": ev.min_hessian_abs_eig,
        }
        for ev in report.bifurcations
    ] + [
        {"event": "catastrophe", "beta": c.beta, "bracket": list(c.bracket), "jump": c.jump}
        for c in report.catastrophes
    ]
    doc = {
        "config": report.config,
        "events": sorted(events, key=lambda e: (e["beta"], e["event"])),
        "min_curve": report.min_curve,
        "branches": [
            {
                "branch_id": br.branch_id,
                "born_beta": br.born_beta,
                "died_beta": br.died_beta,
                "points": len(br.points),
            }
            for br in report.branches
        ],
        "endpoint_candidates": [
            {"support": list(c.support), "F": c.F, "U": c.U, "kind": c.kind}
            for c in report.endpoint_candidates
        ],
    }
    _emit(doc, args.out)
    if args.csv:
        _write_branch_csv(report, args.csv)
        if not args.no_plot:
            from .plots import save_sweep_figure

            target = args.plot or str(Path(args.csv).with_suffix(".png"))
            save_sweep_figure(report, target)
    elif args.plot:
        from .plots import save_sweep_figure

        save_sweep_figure(report, args.plot)
    return EXIT_OK


def _write_branch_csv(report, path) -> None:
    n = len(report.branches[0].points[0].p) if report.branches else 0
    header = "beta,branch_id,kind,F,U,S,lambda,min_hessian_eig," + ",".join(
        f"p_{i}" for i in range(n)
    )
    rows = [header]
    for br in report.branches:
        for b, pt in zip(br.betas, br.points):
            cells = [repr(float(b)), str(br.branch_id), pt.kind, repr(pt.F), repr(pt.U),
                     repr(pt.S), repr(pt.lam), repr(pt.min_hessian_abs_eig)]
            cells += [repr(v) for v in pt.p]
            rows.append(",".join(cells))
    Path(path).write_text("\n".join(rows) + "\n")


def cmd_zeta(args) -> int:
    G = _load(args.input)
    zf = zeta_fn(G)
    doc = {
        "coefficients": [str(c) for c in zf.poly],
        "det_at_1": str(zf.det_at(1)),
    }
    _emit(doc, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="greenlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the identity suite on a complex")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", help="write a seeded random Whitney complex")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    _common(p, needs_input=False)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("refine", help="barycentric refinement, k times")
    p.add_argument("--times", type=int, default=1)
    _common(p)
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("graph", help="emit a derived graph as JSON")
    p.add_argument("--kind", choices=["refinement", "connection"], required=True)
    _common(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("green", help="exact integer Green function")
    p.add_argument("--plot", help="render a heatmap PNG")
    _common(p)
    p.set_defaults(func=cmd_green)

    p = sub.add_parser("curvature", help="per-face and per-vertex curvatures (CSV)")
    _common(p)
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("hodge", help="Hodge spectra, Betti numbers, heat traces")
    p.add_argument("--plot", help="render a spectra PNG")
    _common(p)
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("minimize", help="energy minimizers at beta = 1")
    _common(p)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("sweep", help="trace free-energy critical points over beta")
    p.add_argument("--beta-from", type=float, default=0.0, dest="beta_from")
    p.add_argument("--beta-to", type=float, default=1.0, dest="beta_to")
    p.add_argument("--steps", type=int, default=2000)
    p.add_argument("--starts", type=int, default=64)
    p.add_argument("--plot", help="bifurcation diagram PNG (default: next to --csv)")
    p.add_argument("--no-plot", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("zeta", help="Bowen-Lanford zeta polynomial")
    _common(p)
    p.set_defaults(func=cmd_zeta)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (io.InputFormatError, InvalidFace, ComplexTooLarge, FileNotFoundError,
            IsADirectoryError, PermissionError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
