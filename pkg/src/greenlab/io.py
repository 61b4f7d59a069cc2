"""File formats: complexes, graphs, exact matrices and report serialization.

Complex files are single JSON documents, either `{"faces": [[...], ...]}`
listing every face in canonical order or `{"maximal": [[...], ...]}` which
triggers downward closure on load.  Graph files are `{"n": N, "edges":
[[a, b], ...]}`.  Exact matrices serialize as arrays of integer strings (or
"p/q" rational strings in CSV), so nothing is ever rounded.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .complexes import GraphSpec, SimplicialComplex, from_maximal_faces


class InputFormatError(ValueError):
    pass


def complex_to_json(G: SimplicialComplex) -> str:
    return json.dumps({"faces": [list(f) for f in G.faces]})


def complex_from_json(text: str) -> SimplicialComplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputFormatError("complex document must be a JSON object")
    if "maximal" in doc:
        return from_maximal_faces(doc["maximal"])
    if "faces" in doc:
        try:
            return SimplicialComplex(doc["faces"])
        except (ValueError, TypeError) as exc:
            raise InputFormatError(str(exc)) from exc
    raise InputFormatError("complex document needs a 'faces' or 'maximal' key")


def graph_to_json(g: GraphSpec) -> str:
    edges = sorted(list(e) for e in g.edges)
    return json.dumps({"n": g.vertex_count, "edges": edges})


def graph_from_json(text: str) -> GraphSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise InputFormatError("graph document needs 'n' and 'edges' keys")
    try:
        return GraphSpec(doc["n"], doc["edges"])
    except (ValueError, TypeError) as exc:
        raise InputFormatError(str(exc)) from exc


def load_complex(path) -> SimplicialComplex:
    return complex_from_json(Path(path).read_text())


def load_graph(path) -> GraphSpec:
    return graph_from_json(Path(path).read_text())


def load_complex_or_graph(path) -> SimplicialComplex:
    """Complex file, or graph file interpreted through its Whitney complex."""
    from .complexes import whitney_complex

    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"not valid JSON: {exc}") from exc
    if isinstance(doc, dict) and "edges" in doc and "n" in doc:
        return whitney_complex(graph_from_json(text))
    return complex_from_json(text)


def matrix_to_json(M) -> str:
    """Array-of-arrays of integer strings; exact."""
    rows = [[str(int(x)) for x in row] for row in np.asarray(M)]
    return json.dumps(rows)


def matrix_from_json(text: str) -> np.ndarray:
    rows = json.loads(text)
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        out[i, :] = [int(x) for x in row]
    return out


def scalar_string(x) -> str:
    """Exact 'p/q' (or integer) string for ints and Fractions, repr for floats."""
    if isinstance(x, bool):
        return str(x)
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, Fraction):
        return str(x)
    return repr(float(x))


def matrix_to_csv(M) -> str:
    lines = []
    for row in np.asarray(M):
        lines.append(",".join(scalar_string(x) for x in row))
    return "\n".join(lines) + "\n"
