"""Bredon homology of dihedral Artin groups with coefficients in algebraic K-theory.

Typical use::

    from dihedral_bredon import ArtinParameters, builtin, bredon_vc, render

    report = bredon_vc(builtin("Z"), 1, ArtinParameters(3))
    print(render(report.cell(0, 1)))   # (+)_{w} Z (+) Z/2
"""

from .abelian import (
    OMEGA, ZERO, AbelianGroup, Bounded, ExtNat, GroupValue, SymbolicRank, bounded, countable_sum,
    cyclic, direct_sum, free, is_exact, n_torsion, normalize, parse_group, render, tensor, tor,
)
from .artin import (
    ArtinParameters, ClassCatalog, ClassKind, CommensuratorShape, TreeModel, classify_commensurator,
    default_class_catalog, load_catalog, ordinary_homology, ordinary_homology_z2, tree_model,
)
from .bhs import big_c, big_c_bar, ind_kernel, k_of_laurent, n_q_class_term
from .engine import (
    HomologyReport, bredon_vc, coker_g2_0, coker_g2_1, e2_page, h_fh, h_fin_an, h_fin_comm,
    k0_corollary_check, ker_g2_1, ker_g2_2, tree_mayer_vietoris, uct,
)
from .errors import BredonError, HypothesisError, OutOfRangeError, ProfileError, SymbolicRankError
from .ktheory import KTheoryProfile, builtin, dump_profile, get_k, get_nk, load_profile
from .oracle import finite_group_map_check, stability_scan, truncated_g_matrices
from .report import parse_records, render_latex, render_records, render_text
from .snf import matrix_ker_coker, smith_normal_form

__version__ = "0.1.0"
