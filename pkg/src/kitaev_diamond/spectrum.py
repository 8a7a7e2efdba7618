"""Free-fermion band structure of the diamond-lattice model.

Momenta are handled as the d phases phi_i picked up along the translation
generators, so the Brillouin zone is the standard torus [0, 2pi)^d and no
reciprocal-lattice embedding ever enters the numerics.  Two independent
routes to the spectrum are kept side by side: the closed-form dispersion
+-|f(phi)| evaluated on the discrete phase grid, and the eigenvalues of the
antisymmetric hopping form assembled edge by edge on the torus.  Their
multiset agreement is the main correctness gate for both.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .lattice import DiamondTorus

TWO_PI = 2.0 * np.pi


def as_couplings(J, d: int | None = None) -> np.ndarray:
    """Validate a coupling vector J_1..J_{d+1} (indexed by edge label)."""
    J = np.asarray(J, dtype=float)
    if J.ndim != 1 or J.size < 2:
        raise ValueError("couplings must be a 1-d sequence with at least two entries")
    if d is not None and J.size != d + 1:
        raise ValueError(f"expected {d + 1} couplings for d={d}, got {J.size}")
    if not np.all(np.isfinite(J)):
        raise ValueError("couplings must be finite")
    return J


def as_phases(phi, d: int | None = None) -> np.ndarray:
    """Wrap phases into [0, 2pi).  Accepts shape (..., d)."""
    phi = np.asarray(phi, dtype=float)
    if d is not None and (phi.ndim == 0 or phi.shape[-1] != d):
        raise ValueError(f"expected {d} phases, got shape {phi.shape}")
    if not np.all(np.isfinite(phi)):
        raise ValueError("phases must be finite")
    return np.mod(phi, TWO_PI)


def f_of_q(J, phi) -> complex | np.ndarray:
    """Complex band amplitude f = 2*(J_1 + sum_i J_{i+1} e^{i phi_i}).

    phi may be a single phase vector or an array of shape (..., d); the
    result is scalar or shaped (...) accordingly.
    """
    J = as_couplings(J)
    phi = as_phases(phi, d=J.size - 1)
    val = 2.0 * (J[0] + np.exp(1j * phi) @ J[1:])
    return complex(val) if val.ndim == 0 else val


class DispersionResult(NamedTuple):
    phi: np.ndarray
    xi_plus: float | np.ndarray
    xi_minus: float | np.ndarray


def dispersion(J, phi) -> DispersionResult:
    """Two-band energies xi = +-|f(phi)|."""
    phi = as_phases(phi, d=len(J) - 1)
    xi = np.abs(f_of_q(J, phi))
    return DispersionResult(phi=phi, xi_plus=xi, xi_minus=-xi)


def bloch_hamiltonian(J, phi) -> np.ndarray:
    """Momentum-space 2x2 block [[0, i f], [-i conj(f), 0]]."""
    f = f_of_q(J, phi)
    if not np.isscalar(f) and getattr(f, "ndim", 0) > 0:
        raise ValueError("bloch_hamiltonian expects a single phase vector")
    return np.array([[0.0, 1j * f], [-1j * np.conj(f), 0.0]])


def bz_grid(d: int, N: int) -> np.ndarray:
    """All N^d grid phases phi_i = 2 pi m_i / N, row-major in (m_1, ..., m_d)."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if N < 1:
        raise ValueError(f"grid size must be >= 1, got {N}")
    axes = np.indices((N,) * d).reshape(d, -1).T
    return TWO_PI * axes / N


def bloch_multiset(J, N: int) -> np.ndarray:
    """Sorted multiset of the 2*N^d dispersion values +-|f| over the grid."""
    J = as_couplings(J)
    absf = np.abs(f_of_q(J, bz_grid(J.size - 1, N)))
    return np.sort(np.concatenate([-absf, absf]))


def quadratic_form(torus: DiamondTorus, J) -> np.ndarray:
    """Antisymmetric hopping form of the model in the uniform link gauge.

    Row/column order follows the torus vertex ordering.  Each edge with label
    l contributes +2*J_l in the (s=1, s=0) orientation; parallel edges of an
    N=1 torus accumulate onto the same entry.
    """
    J = as_couplings(J, d=torus.d)
    n = len(torus.vertices)
    A = np.zeros((n, n))
    for e in torus.edges:
        w = 2.0 * J[e.label - 1]
        A[e.frm, e.to] += w
        A[e.to, e.frm] -= w
    return A


def majorana_spectrum(A: np.ndarray) -> np.ndarray:
    """Eigenvalues of i*A in ascending order, for antisymmetric real A."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.allclose(A, -A.T, atol=1e-12 * (1.0 + np.abs(A).max())):
        raise ValueError("matrix is not antisymmetric")
    return np.linalg.eigvalsh(1j * A)


def verify_bloch_equivalence(torus: DiamondTorus, J) -> float:
    """Max deviation between the grid dispersion multiset and the exact
    spectrum of the hopping form.  Zero (to rounding) certifies both routes."""
    matrix_eigs = majorana_spectrum(quadratic_form(torus, J))
    grid_eigs = bloch_multiset(J, torus.N)
    if matrix_eigs.size != grid_eigs.size:
        raise ValueError(
            f"multiset sizes differ: {matrix_eigs.size} matrix eigenvalues "
            f"vs {grid_eigs.size} grid values"
        )
    return float(np.abs(matrix_eigs - grid_eigs).max())


def band_csv_lines(J, grid_n: int, hoppings=None):
    """Rows of the band table over the full phase grid.

    Yields the header then one line per grid point, row-major, with 17
    significant digits.  With `hoppings` given, the tight-binding energies
    are appended as extra columns.
    """
    J = as_couplings(J)
    d = J.size - 1
    phis = bz_grid(d, grid_n)
    xi = np.abs(f_of_q(J, phis))
    cols = [f"phi_{i + 1}" for i in range(d)] + ["xi_plus", "xi_minus"]
    extra = None
    if hoppings is not None:
        from .tightbinding import tb_energy

        extra = tb_energy(hoppings, phis)[0]
        cols += ["E_plus", "E_minus"]
    yield ",".join(cols)
    for row in range(phis.shape[0]):
        vals = [*phis[row], xi[row], -xi[row]]
        if extra is not None:
            vals += [extra[row], -extra[row]]
        yield ",".join(f"{v:.17g}" for v in vals)
