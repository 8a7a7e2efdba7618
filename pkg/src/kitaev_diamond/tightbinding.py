"""Two-band tight-binding model on the diamond lattice.

One orbital per sublattice, hopping t_l across the bonds with label l.  The
band amplitude r(phi) = t_1 + sum_i t_{i+1} e^{i phi_i} mirrors the spin
model's f up to the substitution t = 2J, which makes the two spectra agree
identically; `compare_models` measures exactly that.
"""

from __future__ import annotations

import numpy as np

from .spectrum import as_couplings, as_phases, f_of_q


def as_hoppings(t, d: int | None = None) -> np.ndarray:
    """Validate a hopping vector t_1..t_{d+1}; complex amplitudes allowed."""
    t = np.asarray(t)
    if not np.issubdtype(t.dtype, np.complexfloating):
        t = t.astype(float).astype(complex)
    if t.ndim != 1 or t.size < 2:
        raise ValueError("hoppings must be a 1-d sequence with at least two entries")
    if d is not None and t.size != d + 1:
        raise ValueError(f"expected {d + 1} hoppings for d={d}, got {t.size}")
    if not np.all(np.isfinite(t)):
        raise ValueError("hoppings must be finite")
    return t


def r_of_q(t, phi) -> complex | np.ndarray:
    """Off-diagonal Bloch amplitude r = t_1 + sum_i t_{i+1} e^{i phi_i}."""
    t = as_hoppings(t)
    phi = as_phases(phi, d=t.size - 1)
    val = t[0] + np.exp(1j * phi) @ t[1:]
    return complex(val) if val.ndim == 0 else val


def tb_energy(t, phi) -> tuple:
    """Particle-hole symmetric bands E = +-|r(phi)|."""
    e = np.abs(r_of_q(t, phi))
    return e, -e


def compare_models(J, phi_samples) -> float:
    """Max |xi_plus - E_plus| over the samples under the matching t = 2J.

    The doubling commutes exactly with floating-point evaluation, so the
    returned deviation is zero up to (at most) one rounding unit.
    """
    J = as_couplings(J)
    phi_samples = np.atleast_2d(np.asarray(phi_samples, dtype=float))
    xi = np.abs(f_of_q(J, phi_samples))
    e_plus, _ = tb_energy(2.0 * J, phi_samples)
    return float(np.abs(xi - e_plus).max())
