"""Geometry of the d-dimensional diamond lattice and its finite torus quotients.

The lattice lives in the zero-sum hyperplane W of R^(d+1).  The translation
group is generated by alpha_i = e_i - e_{d+1}; the two sublattices are the
lattice points themselves and their translate by the centering vector p.
Every vertex has d+1 nearest neighbours, reached along the bond vectors
beta_0, ..., beta_d which sum to zero and share a common length.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np


@dataclass(frozen=True)
class LatticeBasis:
    """Basis data for the d-dimensional diamond lattice embedded in R^(d+1).

    Attributes
    ----------
    d : dimension of the lattice (>= 1)
    alpha : (d, d+1) array, translation generators alpha_i = e_i - e_{d+1}
    p : (d+1,) array, sublattice offset p = (alpha_1 + ... + alpha_d)/(d+1)
    beta : (d+1, d+1) array, bond vectors; row 0 is -p, row i is alpha_i - p
    dual_b : (d, d+1) array, vectors in the hyperplane with <b_j, alpha_i> = delta_ij
    """

    d: int
    alpha: np.ndarray
    p: np.ndarray
    beta: np.ndarray
    dual_b: np.ndarray


def make_basis(d: int) -> LatticeBasis:
    """Construct the translation generators, bond vectors and dual basis.

    All vectors lie in the zero-sum hyperplane of R^(d+1).  The dual basis is
    obtained by solving the Gram system of the alpha_i inside that hyperplane,
    so no pseudo-inverse of the ambient embedding is needed.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    alpha = np.zeros((d, d + 1))
    for i in range(d):
        alpha[i, i] = 1.0
        alpha[i, d] = -1.0
    p = alpha.sum(axis=0) / (d + 1)
    beta = np.empty((d + 1, d + 1))
    beta[0] = -p
    beta[1:] = alpha - p
    # dual_b[j] = sum_i (G^-1)_{ji} alpha_i with G the Gram matrix of the alphas;
    # the result automatically lies in the span of the alphas (the hyperplane).
    gram = alpha @ alpha.T
    dual_b = np.linalg.solve(gram, alpha)
    return LatticeBasis(d=d, alpha=alpha, p=p, beta=beta, dual_b=dual_b)


class Vertex(NamedTuple):
    """Torus vertex: integer coordinates mod N plus a sublattice bit.

    s = 0 is the sublattice at the lattice points, s = 1 the translate by p.
    """

    mu: tuple[int, ...]
    s: int


class Edge(NamedTuple):
    """Directed torus edge from the s=1 endpoint to the s=0 endpoint.

    `direction` in 0..d selects the bond vector beta_direction;
    `label` = direction + 1 is the coupling index the edge carries.
    """

    frm: int
    to: int
    direction: int
    label: int


@dataclass(frozen=True)
class BaseGraph:
    """Quotient multigraph: two vertices joined by d+1 parallel labelled edges."""

    d: int
    vertices: tuple[int, int]
    labels: tuple[int, ...]


def base_graph(d: int) -> BaseGraph:
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    return BaseGraph(d=d, vertices=(0, 1), labels=tuple(i + 1 for i in range(d + 1)))


@dataclass(frozen=True)
class DiamondTorus:
    """Finite quotient of the diamond lattice by N times the translation lattice.

    Vertices are ordered lexicographically by (s, mu); edges are generated per
    s=1 vertex in lex order, direction 0..d.  Both orderings are load-bearing:
    they fix the JSON export and the row/column order of quadratic forms.
    """

    d: int
    N: int
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    def index(self, v: Vertex) -> int:
        """Index of a vertex in the stable ordering."""
        if v.s not in (0, 1) or len(v.mu) != self.d:
            raise KeyError(f"not a vertex of this torus: {v}")
        rank = 0
        for c in v.mu:
            if not 0 <= c < self.N:
                raise KeyError(f"not a vertex of this torus: {v}")
            rank = rank * self.N + c
        return v.s * self.N**self.d + rank

    @property
    def n_cells(self) -> int:
        return self.N**self.d


def build_torus(d: int, N: int) -> DiamondTorus:
    """Build the torus with 2*N^d vertices and (d+1)*N^d directed edges.

    Direction 0 joins (mu, 1) to (mu, 0); direction i >= 1 joins (mu, 1) to
    (mu + e_i mod N, 0).  With N = 1 this leaves d+1 distinct parallel edges
    between the two remaining vertices.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if N < 1:
        raise ValueError(f"torus size must be >= 1, got {N}")
    cells = list(itertools.product(range(N), repeat=d))
    vertices = [Vertex(mu, s) for s in (0, 1) for mu in cells]
    L = N**d
    edges = []
    for rank, mu in enumerate(cells):
        frm = L + rank
        edges.append(Edge(frm, rank, 0, 1))
        for i in range(d):
            shifted = list(mu)
            shifted[i] = (shifted[i] + 1) % N
            to_rank = 0
            for c in shifted:
                to_rank = to_rank * N + c
            edges.append(Edge(frm, to_rank, i + 1, i + 2))
    return DiamondTorus(d=d, N=N, vertices=tuple(vertices), edges=tuple(edges))


def covering_map(torus: DiamondTorus, item: Vertex | Edge) -> int:
    """Project a torus vertex to its base vertex (the s bit) or a torus edge
    to its base edge (the direction)."""
    if isinstance(item, Vertex):
        torus.index(item)  # raises on foreign vertices
        return item.s
    if isinstance(item, Edge):
        if item not in torus.edges:
            raise KeyError(f"not an edge of this torus: {item}")
        return item.direction
    raise TypeError(f"expected Vertex or Edge, got {type(item).__name__}")


def vertex_position(basis: LatticeBasis, v: Vertex, N: int) -> np.ndarray:
    """Embedded position sum_i mu_i alpha_i + s*p of a torus-orbit representative."""
    if len(v.mu) != basis.d:
        raise ValueError(f"vertex has {len(v.mu)} coordinates, expected {basis.d}")
    if v.s not in (0, 1):
        raise ValueError(f"sublattice bit must be 0 or 1, got {v.s}")
    if any(not 0 <= c < N for c in v.mu):
        raise ValueError(f"coordinates of {v} not reduced mod {N}")
    mu = np.asarray(v.mu, dtype=float)
    return mu @ basis.alpha + v.s * basis.p


@dataclass(frozen=True)
class FundamentalDomainCheck:
    """Coefficients placing the two sublattice seeds inside the unit cell."""

    t1: float
    t2: float
    residual1: float
    residual2: float


def check_fundamental_domain(basis: LatticeBasis, i: int) -> FundamentalDomainCheck:
    """Express the two seed points along bond i in the edge-difference frame.

    The points -(d/2)*beta_i and -(d/2+1)*beta_i are written as
    -t * sum_{j != i} (beta_i - beta_j); both coefficients must land strictly
    inside (0, 1), which certifies the seeds sit in the open fundamental cell.
    """
    d = basis.d
    if not 0 <= i <= d:
        raise ValueError(f"bond index must be in 0..{d}, got {i}")
    beta_i = basis.beta[i]
    frame = -sum(beta_i - basis.beta[j] for j in range(d + 1) if j != i)
    denom = frame @ frame
    p1 = -(d / 2.0) * beta_i
    p2 = p1 - beta_i
    t1 = float(p1 @ frame) / denom
    t2 = float(p2 @ frame) / denom
    res1 = float(np.linalg.norm(p1 - t1 * frame))
    res2 = float(np.linalg.norm(p2 - t2 * frame))
    if not (0.0 < t1 < 1.0 and 0.0 < t2 < 1.0):
        raise AssertionError(
            f"fundamental-domain coefficients escaped (0,1): t1={t1}, t2={t2}"
        )
    return FundamentalDomainCheck(t1=t1, t2=t2, residual1=res1, residual2=res2)


def torus_to_dict(torus: DiamondTorus, basis: LatticeBasis | None = None) -> dict:
    """JSON-ready description of the torus with embedded vertex positions."""
    if basis is None:
        basis = make_basis(torus.d)
    if basis.d != torus.d:
        raise ValueError(f"basis dimension {basis.d} != torus dimension {torus.d}")
    return {
        "d": torus.d,
        "N": torus.N,
        "vertices": [
            {
                "mu": list(v.mu),
                "s": v.s,
                "pos": vertex_position(basis, v, torus.N).tolist(),
            }
            for v in torus.vertices
        ],
        "edges": [
            {"from": e.frm, "to": e.to, "direction": e.direction, "label": e.label}
            for e in torus.edges
        ],
    }


def torus_to_json(torus: DiamondTorus, basis: LatticeBasis | None = None) -> str:
    return json.dumps(torus_to_dict(torus, basis), indent=2)
