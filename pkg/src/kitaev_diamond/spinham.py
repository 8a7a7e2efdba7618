"""Exact many-body spin Hamiltonian on small diamond tori.

Each vertex carries a copy of the Cl_{d+2} representation space; the model
couples the two endpoints of every edge through the spin component matching
the edge label.  Operators are assembled as sparse Kronecker products -- the
generators are monomial matrices, so every conserved-quantity identity below
holds exactly, not just to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import norm as _sparse_norm

from .clifford import d_operator, majorana_rep, spin_ops
from .lattice import DiamondTorus
from .spectrum import as_couplings

DEFAULT_DIM_CAP = 2**16


@dataclass(frozen=True)
class SpinSystem:
    """Hamiltonian and its commuting frame on one torus.

    link_ops[k] is the involution attached to torus.edges[k]; parity is the
    site-wise tensor power of the single-site parity operator.
    """

    torus: DiamondTorus
    couplings: np.ndarray
    site_dim: int
    total_dim: int
    hamiltonian: sparse.csr_matrix
    link_ops: tuple[sparse.csr_matrix, ...]
    parity: sparse.csr_matrix


def _embed(site_ops: dict[int, sparse.csr_matrix], n_sites: int, site_dim: int):
    """Kronecker chain acting with the given operators on selected sites."""
    out = None
    for site in range(n_sites):
        factor = site_ops.get(site)
        if factor is None:
            factor = sparse.identity(site_dim, dtype=complex, format="csr")
        out = factor if out is None else sparse.kron(out, factor, format="csr")
    return out


def tensor_dims(torus: DiamondTorus, dim_cap: int = DEFAULT_DIM_CAP) -> tuple[int, int]:
    site_dim = 2 ** (torus.d // 2 + 1)
    n_sites = len(torus.vertices)
    total_dim = site_dim**n_sites
    if total_dim > dim_cap:
        raise ValueError(
            f"total dimension {site_dim}^{n_sites} exceeds the cap {dim_cap}"
        )
    return site_dim, total_dim


def link_operators(
    torus: DiamondTorus, dim_cap: int = DEFAULT_DIM_CAP
) -> tuple[sparse.csr_matrix, ...]:
    """Edge involutions u_e = c_l(s=1 end) c_l(s=0 end), one per edge.

    The two generators act on different tensor factors, so they commute and
    their plain product is already Hermitian with square one (the familiar
    i c c' normalisation applies to anticommuting pairs and would square to
    minus one here).  Each operator has eigenvalues +-1 of equal multiplicity
    and commutes with the Hamiltonian for any couplings: edges meeting at a
    vertex carry distinct labels, and distinct single-site generators always
    appear an even number of shared slots apart.
    """
    site_dim, _ = tensor_dims(torus, dim_cap)
    rep = majorana_rep(torus.d + 2)
    c_sparse = [sparse.csr_matrix(c) for c in rep.c]
    n_sites = len(torus.vertices)
    ops = []
    for e in torus.edges:
        c_l = c_sparse[e.label - 1]
        ops.append(_embed({e.frm: c_l, e.to: c_l}, n_sites, site_dim))
    return tuple(ops)


def build_spin_hamiltonian(
    torus: DiamondTorus, J, dim_cap: int = DEFAULT_DIM_CAP
) -> SpinSystem:
    """H = -sum_edges J_l sigma^l(s=1 end) sigma^l(s=0 end), densely exact.

    Refuses tori whose tensor-product dimension exceeds dim_cap.
    """
    J = as_couplings(J, d=torus.d)
    site_dim, total_dim = tensor_dims(torus, dim_cap)
    sigmas = [sparse.csr_matrix(s) for s in spin_ops(torus.d)]
    n_sites = len(torus.vertices)
    H = sparse.csr_matrix((total_dim, total_dim), dtype=complex)
    for e in torus.edges:
        sig = sigmas[e.label - 1]
        H = H - J[e.label - 1] * _embed({e.frm: sig, e.to: sig}, n_sites, site_dim)
    D_site = sparse.csr_matrix(d_operator(torus.d))
    parity = _embed({v: D_site for v in range(n_sites)}, n_sites, site_dim)
    return SpinSystem(
        torus=torus,
        couplings=J,
        site_dim=site_dim,
        total_dim=total_dim,
        hamiltonian=H.tocsr(),
        link_ops=link_operators(torus, dim_cap),
        parity=parity.tocsr(),
    )


def plus_sector_dimension(system: SpinSystem, dim_cap: int = 1024) -> int:
    """Dimension of the joint (+1)-eigenspace of every link operator and parity.

    Dense sequential kernel intersection, so it is restricted to small tori
    (raises above dim_cap).  On one-cell tori all link operators are parallel
    edges and commute pairwise, which makes the joint eigenspace meaningful;
    a nonzero answer exhibits the sector the free-fermion picture lives in.
    """
    if system.total_dim > dim_cap:
        raise ValueError(
            f"joint sector intersection capped at {dim_cap},"
            f" system has {system.total_dim}"
        )
    basis = np.eye(system.total_dim, dtype=complex)
    for op in (*system.link_ops, system.parity):
        if basis.shape[1] == 0:
            break
        residual = op.toarray() @ basis - basis
        _, s, vh = np.linalg.svd(residual)
        tol = 1e-9 * max(1.0, s[0] if s.size else 0.0)
        null_mask = np.zeros(basis.shape[1], dtype=bool)
        null_mask[s.size :] = True
        null_mask[: s.size] = s < tol
        basis = basis @ vh.conj().T[:, null_mask]
        basis, _ = np.linalg.qr(basis)
    return basis.shape[1]


def _fro(X) -> float:
    return float(_sparse_norm(X)) if X.nnz else 0.0


def verify_operator_identities(system: SpinSystem) -> dict:
    """Residuals of the conserved-quantity identities, plus exactness flags.

    Returns commutator norms of H with the parity operator and every link
    operator, involution residuals, and exact (bitwise) checks that each link
    operator is Hermitian, traceless and squares to the identity -- together
    these force eigenvalues exactly +-1 with equal multiplicity.
    """
    H = system.hamiltonian
    P = system.parity
    eye = sparse.identity(system.total_dim, dtype=complex, format="csr")
    comm_parity = _fro(H @ P - P @ H)
    comm_links = 0.0
    link_inv = 0.0
    exact_links = True
    for u in system.link_ops:
        comm_links = max(comm_links, _fro(H @ u - u @ H))
        diff = (u @ u - eye).tocsr()
        diff.eliminate_zeros()
        herm = (u - u.conj().T).tocsr()
        herm.eliminate_zeros()
        link_inv = max(link_inv, _fro(diff))
        if diff.nnz or herm.nnz or u.diagonal().sum() != 0:
            exact_links = False
    parity_diff = (P @ P - eye).tocsr()
    parity_diff.eliminate_zeros()
    residuals = {
        "commutator_parity": comm_parity,
        "commutator_links_max": comm_links,
        "parity_involution": _fro(parity_diff),
        "link_involution_max": link_inv,
    }
    residuals["max_residual"] = max(residuals.values())
    residuals["links_exact_pm_one"] = exact_links
    residuals["parity_diagonal_pm_one"] = bool(
        np.all(np.abs(P.diagonal()) == 1.0) and parity_diff.nnz == 0
    )
    return residuals
