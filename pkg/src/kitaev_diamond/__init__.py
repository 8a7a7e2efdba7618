"""Kitaev-type spin models on d-dimensional diamond lattices."""

from .clifford import (
    LadderOps,
    MajoranaRep,
    d_operator,
    ladder_ops,
    majorana_rep,
    spin_ops,
)
from .gap import (
    GapReport,
    find_zero,
    gap_report,
    gapped_region,
    has_zero,
    min_gap_numeric,
    polygon_angles,
    polygon_exists,
)
from .lattice import (
    BaseGraph,
    DiamondTorus,
    Edge,
    LatticeBasis,
    Vertex,
    base_graph,
    build_torus,
    check_fundamental_domain,
    covering_map,
    make_basis,
    torus_to_dict,
    torus_to_json,
    vertex_position,
)
from .spectrum import (
    DispersionResult,
    bloch_hamiltonian,
    bloch_multiset,
    bz_grid,
    dispersion,
    f_of_q,
    majorana_spectrum,
    quadratic_form,
    verify_bloch_equivalence,
)
from .spinham import (
    SpinSystem,
    build_spin_hamiltonian,
    link_operators,
    plus_sector_dimension,
    verify_operator_identities,
)
from .tightbinding import compare_models, r_of_q, tb_energy

__version__ = "0.1.0"

__all__ = [
    "BaseGraph",
    "DiamondTorus",
    "DispersionResult",
    "Edge",
    "GapReport",
    "LadderOps",
    "LatticeBasis",
    "MajoranaRep",
    "SpinSystem",
    "Vertex",
    "base_graph",
    "bloch_hamiltonian",
    "bloch_multiset",
    "build_spin_hamiltonian",
    "build_torus",
    "bz_grid",
    "check_fundamental_domain",
    "compare_models",
    "covering_map",
    "d_operator",
    "dispersion",
    "f_of_q",
    "find_zero",
    "gap_report",
    "gapped_region",
    "has_zero",
    "ladder_ops",
    "link_operators",
    "majorana_rep",
    "majorana_spectrum",
    "make_basis",
    "min_gap_numeric",
    "plus_sector_dimension",
    "polygon_angles",
    "polygon_exists",
    "quadratic_form",
    "r_of_q",
    "spin_ops",
    "tb_energy",
    "torus_to_dict",
    "torus_to_json",
    "verify_bloch_equivalence",
    "verify_operator_identities",
    "vertex_position",
]
