"""Majorana representations of small Clifford algebras and derived spin operators.

The k generators c_1..c_k obey {c_i, c_j} = 2*delta_ij and are realised by
Jordan-Wigner strings on m = floor(k/2) qubits, so every matrix entry is one
of 0, +-1, +-i and all algebraic identities below hold exactly in float
arithmetic.  For odd k the last generator is a full Z string whose sign is
fixed by the chirality condition i^m c_1 ... c_{2m+1} = +Id, selecting one of
the two inequivalent irreducible representations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

# Highest generator count built without an explicit override; k = 17 is the
# largest a two-site torus at the default tensor cap ever needs (d = 15).
DEFAULT_K_CAP = 18


@dataclass(frozen=True)
class MajoranaRep:
    """Generators of Cl_k on 2^floor(k/2) dimensions."""

    k: int
    dim: int
    c: tuple[np.ndarray, ...]


@dataclass(frozen=True)
class LadderOps:
    """Fermionic ladder operators a_i = (c_{2i-1} + i c_{2i})/2 and the vacuum.

    b is the leftover odd generator (present only for odd k).  vac is the
    unique joint kernel vector of the a_i, normalised so its largest entry is
    real positive.
    """

    a: tuple[np.ndarray, ...]
    a_dag: tuple[np.ndarray, ...]
    b: np.ndarray | None
    vac: np.ndarray


def _kron_chain(factors: list[np.ndarray]) -> np.ndarray:
    out = factors[0]
    for f in factors[1:]:
        out = np.kron(out, f)
    return out


def majorana_rep(k: int, cap: int = DEFAULT_K_CAP) -> MajoranaRep:
    """Jordan-Wigner representation of Cl_k.

    c_{2j-1} = Z^(j-1) X I^(m-j), c_{2j} = Z^(j-1) Y I^(m-j); for odd k the
    extra generator is (+-) Z^m with the sign that makes the chirality
    product i^m c_1 ... c_{2m+1} equal +Id.
    """
    if k < 1:
        raise ValueError(f"need at least one generator, got k={k}")
    if k > cap:
        raise ValueError(f"k={k} exceeds the representation cap {cap}")
    m = k // 2
    if m == 0:
        # Cl_1 on one dimension: the single generator is the 1x1 identity
        # times the chirality-fixed sign (i^0 c_1 = +Id).
        return MajoranaRep(k=1, dim=1, c=(np.eye(1, dtype=complex),))
    eye = np.eye(2, dtype=complex)
    c = []
    for j in range(1, m + 1):
        head = [PAULI_Z] * (j - 1)
        tail = [eye] * (m - j)
        c.append(_kron_chain(head + [PAULI_X] + tail))
        c.append(_kron_chain(head + [PAULI_Y] + tail))
    if k % 2 == 1:
        z_string = _kron_chain([PAULI_Z] * m)
        chirality = (1j) ** m * np.linalg.multi_dot(c + [z_string])
        ident = np.eye(2**m, dtype=complex)
        if np.array_equal(chirality, -ident):
            z_string = -z_string
        elif not np.array_equal(chirality, ident):
            raise AssertionError("chirality product is not +-Id; broken construction")
        c.append(z_string)
    return MajoranaRep(k=k, dim=2**m, c=tuple(c))


def ladder_ops(rep: MajoranaRep) -> LadderOps:
    """Pair the generators into ladder operators and locate the Fock vacuum.

    The vacuum is found as the joint kernel of all annihilators via SVD; a
    kernel of dimension other than one signals a broken representation.
    """
    m = rep.k // 2
    a = tuple(0.5 * (rep.c[2 * i] + 1j * rep.c[2 * i + 1]) for i in range(m))
    a_dag = tuple(0.5 * (rep.c[2 * i] - 1j * rep.c[2 * i + 1]) for i in range(m))
    b = rep.c[-1] if rep.k % 2 == 1 else None
    if m == 0:
        vac = np.ones(1, dtype=complex)
    else:
        stacked = np.vstack(a)
        _, sing, vh = np.linalg.svd(stacked)
        null_mask = np.concatenate([sing, np.zeros(rep.dim - len(sing))]) < 1e-10
        if np.count_nonzero(null_mask) != 1:
            raise AssertionError(
                f"joint kernel of the annihilators has dimension "
                f"{np.count_nonzero(null_mask)}, expected 1"
            )
        vac = vh[-1].conj()
        pivot = np.argmax(np.abs(vac))
        vac = vac * (np.abs(vac[pivot]) / vac[pivot])
    return LadderOps(a=a, a_dag=a_dag, b=b, vac=vac)


def d_operator(d: int, cap: int = DEFAULT_K_CAP) -> np.ndarray:
    """Sublattice-site parity operator on the Cl_{d+2} representation space.

    D = (-1)^(floor(d/2)+1) * prod_i (1 - 2 a_i' a_i), a Hermitian involution
    whose +1 eigenspace has dimension 2^floor(d/2), half the representation.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    rep = majorana_rep(d + 2, cap=cap)
    m = rep.k // 2
    out = float((-1) ** m) * np.eye(rep.dim, dtype=complex)
    for i in range(m):
        # 1 - 2 a_i' a_i = -i c_{2i-1} c_{2i}, exact in this representation
        out = out @ (-1j * rep.c[2 * i] @ rep.c[2 * i + 1])
    return out


def d_operator_pair_product(d: int, cap: int = DEFAULT_K_CAP) -> np.ndarray:
    """Same operator assembled from the bond-Majorana pairs c_i c_{d+2}.

    The prefactor carries an extra (-1)^(floor(d/2)+1) relative to the naive
    exponent bookkeeping; the sign is anchored by the d=2 requirement
    D = -c_1 c_2 c_3 c_4 and by agreement with `d_operator` for every d.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    rep = majorana_rep(d + 2, cap=cap)
    half = d // 2 + 1
    sign = (-1.0) ** ((d + 1) // 2 + half)
    pref = sign * (1 / 1j) ** half
    out = pref * np.eye(rep.dim, dtype=complex)
    for i in range(d + 1):
        out = out @ rep.c[i] @ rep.c[d + 1]
    return out


def spin_ops(d: int, cap: int = DEFAULT_K_CAP) -> tuple[np.ndarray, ...]:
    """Spin operators sigma^k = i c_k c_{d+2} for k = 1..d+1.

    Each is a Hermitian involution.  They commute with the parity operator D
    for even d and anticommute with it for odd d (the parity product then
    involves every pairwise generator except c_{d+2}); two-site products
    sigma (x) sigma always commute with D (x) D.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    rep = majorana_rep(d + 2, cap=cap)
    last = rep.c[d + 1]
    return tuple(1j * rep.c[k] @ last for k in range(d + 1))
