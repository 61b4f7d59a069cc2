"""Finite abstract simplicial complexes and their combinatorial invariants.

A complex is a finite collection of nonempty vertex sets (faces) closed under
taking nonempty subsets.  Faces are stored in a fixed canonical order,
ascending by (dimension, lexicographic vertex tuple); every matrix produced
elsewhere in this package indexes rows and columns by that order, which makes
all fixtures reproducible bit for bit.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

Face = tuple[int, ...]

DEFAULT_FACE_CAP = 5000


class InvalidFace(ValueError):
    """Raised for empty faces, negative vertex ids or broken closure."""


class ComplexTooLarge(ValueError):
    """Raised when a construction would exceed the configured face cap."""


def canonical_key(face: Face) -> tuple[int, Face]:
    return (len(face), face)


def _as_face(vertices) -> Face:
    face = tuple(sorted(set(int(v) for v in vertices)))
    if not face:
        raise InvalidFace("faces must be nonempty vertex sets")
    if face[0] < 0:
        raise InvalidFace(f"negative vertex id in face {face}")
    return face


@dataclass(frozen=True)
class GraphSpec:
    """Simple undirected graph given by a vertex count and an edge set."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, vertex_count: int, edges) -> None:
        pairs = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < vertex_count and 0 <= b < vertex_count):
                raise ValueError(f"edge ({a},{b}) out of range for n={vertex_count}")
            pairs.add((min(a, b), max(a, b)))
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "edges", frozenset(pairs))

    def neighbor_sets(self) -> list[set[int]]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for a, b in self.edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return nbrs


class SimplicialComplex:
    """Immutable complex; `faces` is the canonically ordered face tuple."""

    __slots__ = ("faces", "index")

    def __init__(self, faces, *, check_closure: bool = True) -> None:
        cleaned = sorted({_as_face(f) for f in faces}, key=canonical_key)
        object.__setattr__(self, "faces", tuple(cleaned))
        object.__setattr__(self, "index", {f: i for i, f in enumerate(cleaned)})
        if check_closure:
            present = set(cleaned)
            for face in cleaned:
                if len(face) == 1:
                    continue
                for sub in itertools.combinations(face, len(face) - 1):
                    if sub not in present:
                        raise InvalidFace(f"missing subset {sub} of face {face}")

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.faces == other.faces

    def __hash__(self) -> int:
        return hash(self.faces)

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, fvector={self.fvector})"

    @property
    def n(self) -> int:
        return len(self.faces)

    @property
    def dim(self) -> int:
        return max((len(f) - 1 for f in self.faces), default=-1)

    @property
    def fvector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for f in self.faces:
            counts[len(f) - 1] += 1
        return tuple(counts)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.faces for v in f}))

    def dims(self) -> list[int]:
        """Per-face dimensions, aligned with the canonical order."""
        return [len(f) - 1 for f in self.faces]

    def facets(self) -> list[Face]:
        present = set(self.faces)
        out = []
        for f in self.faces:
            verts = set(self.vertices) - set(f)
            if not any(tuple(sorted(set(f) | {v})) in present for v in verts):
                out.append(f)
        return out


def from_maximal_faces(maximal, *, cap: int = DEFAULT_FACE_CAP) -> SimplicialComplex:
    """Downward closure of the given faces.

    Idempotent: re-closing the output's faces returns the same complex.
    """
    closed: set[Face] = set()
    for raw in maximal:
        face = _as_face(raw)
        for k in range(1, len(face) + 1):
            closed.update(itertools.combinations(face, k))
        if len(closed) > cap:
            raise ComplexTooLarge(f"closure exceeds {cap} faces")
    return SimplicialComplex(closed, check_closure=False)


def euler_characteristic(G: SimplicialComplex) -> int:
    """chi(G) = sum over faces of (-1)^dim."""
    return sum(-1 if len(f) % 2 == 0 else 1 for f in G.faces)


def _maximal_cliques(nbrs: list[set[int]]):
    """Bron-Kerbosch with pivoting; yields maximal cliques as sets."""
    n = len(nbrs)

    def expand(R: set[int], P: set[int], X: set[int]):
        if not P and not X:
            yield set(R)
            return
        pivot = max(P | X, key=lambda u: len(P & nbrs[u]))
        for v in list(P - nbrs[pivot]):
            yield from expand(R | {v}, P & nbrs[v], X & nbrs[v])
            P.remove(v)
            X.add(v)

    yield from expand(set(), set(range(n)), set())


def whitney_complex(g: GraphSpec, *, cap: int = DEFAULT_FACE_CAP) -> SimplicialComplex:
    """All cliques of the graph (every size >= 1), as a complex."""
    if g.vertex_count == 0:
        return SimplicialComplex([], check_closure=False)
    nbrs = g.neighbor_sets()
    faces: set[Face] = set()
    for clique in _maximal_cliques(nbrs):
        cl = tuple(sorted(clique))
        for k in range(1, len(cl) + 1):
            faces.update(itertools.combinations(cl, k))
        if len(faces) > cap:
            raise ComplexTooLarge(f"Whitney complex exceeds {cap} faces")
    return SimplicialComplex(faces, check_closure=False)


def clique_counts(g: GraphSpec) -> list[int]:
    """Number of cliques per size: entry k is the count of (k+1)-cliques.

    Counts without materializing faces, so it stays usable on dense graphs
    (e.g. connection graphs) whose Whitney complexes would blow the cap.
    """
    n = g.vertex_count
    nbrs = [0] * n
    for a, b in g.edges:
        nbrs[a] |= 1 << b
        nbrs[b] |= 1 << a
    counts: list[int] = []

    def grow(cand: int, size: int) -> None:
        while len(counts) <= size:
            counts.append(0)
        counts[size] += 1
        c = cand
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            # restrict to later vertices to count each clique once
            grow(cand & nbrs[v] & ~((1 << (v + 1)) - 1), size + 1)

    for v in range(n):
        grow(nbrs[v] & ~((1 << (v + 1)) - 1), 1)
    return counts[1:]


def whitney_euler_characteristic(g: GraphSpec) -> int:
    """chi of the Whitney complex, via clique counts only."""
    return sum(c if k % 2 == 0 else -c for k, c in enumerate(clique_counts(g)))


def containment_graph(G: SimplicialComplex) -> GraphSpec:
    """Graph on face indices with edges for strict containment."""
    faces = G.faces
    sets = [frozenset(f) for f in faces]
    edges = []
    for i, j in itertools.combinations(range(len(faces)), 2):
        if sets[i] < sets[j] or sets[j] < sets[i]:
            edges.append((i, j))
    return GraphSpec(len(faces), edges)


def barycentric_refinement(G: SimplicialComplex, *, cap: int = DEFAULT_FACE_CAP) -> SimplicialComplex:
    """Whitney complex of the containment graph on the faces of G.

    Vertices of the result are the canonical face indices of G; cliques of
    the containment graph are chains of faces, so chi is preserved.
    """
    return whitney_complex(containment_graph(G), cap=cap)


def join(G: SimplicialComplex, H: SimplicialComplex, *, cap: int = DEFAULT_FACE_CAP) -> SimplicialComplex:
    """Zykov join: all faces of G, of (relabeled) H, and all unions x | y.

    H's vertices are relabeled to start above G's largest vertex id, so the
    two vertex sets are disjoint.  Satisfies i(G+H) = i(G) i(H) with
    i = 1 - chi.
    """
    offset = (max(G.vertices) + 1) if G.n else 0
    h_faces = [tuple(v + offset for v in f) for f in H.faces]
    faces = set(G.faces) | set(h_faces)
    for x in G.faces:
        for y in h_faces:
            faces.add(tuple(sorted(x + y)))
            if len(faces) > cap:
                raise ComplexTooLarge(f"join exceeds {cap} faces")
    return SimplicialComplex(faces, check_closure=False)


def cartesian_product(G: SimplicialComplex, H: SimplicialComplex, *, cap: int = DEFAULT_FACE_CAP) -> SimplicialComplex:
    """Order complex of the product poset of faces.

    Vertices are pairs (face of G, face of H), relabeled to the dense range
    i * H.n + j over canonical indices; faces are chains under coordinatewise
    containment.  Multiplicative: chi(G x H) = chi(G) chi(H).
    """
    if G.n == 0 or H.n == 0:
        return SimplicialComplex([], check_closure=False)
    gs = [frozenset(f) for f in G.faces]
    hs = [frozenset(f) for f in H.faces]
    m = len(hs)
    pairs = [(i, j) for i in range(len(gs)) for j in range(m)]
    if len(pairs) > cap:
        raise ComplexTooLarge(f"product has {len(pairs)} vertices, cap {cap}")
    edges = []
    for a, b in itertools.combinations(range(len(pairs)), 2):
        (i1, j1), (i2, j2) = pairs[a], pairs[b]
        if gs[i1] <= gs[i2] and hs[j1] <= hs[j2]:
            edges.append((a, b))
        elif gs[i2] <= gs[i1] and hs[j2] <= hs[j1]:
            edges.append((a, b))
    return whitney_complex(GraphSpec(len(pairs), edges), cap=cap)


def erdos_renyi_graph(n: int, p: float, seed: int) -> GraphSpec:
    """Deterministic G(n, p) sample: pairs scanned in lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return GraphSpec(n, edges)


def erdos_renyi_whitney(n: int, p: float, seed: int, *, cap: int = DEFAULT_FACE_CAP) -> SimplicialComplex:
    """Whitney complex of a seeded Erdos-Renyi graph; deterministic per (n, p, seed)."""
    return whitney_complex(erdos_renyi_graph(n, p, seed), cap=cap)
