"""Exact index computations for anti-self-dual orbifolds with cyclic quotient singularities."""

__version__ = "0.1.0"

from .correction import (
    football_defect,
    n_closed,
    n_dedekind,
    n_float,
    r_minus,
    r_plus,
)
from .dedekind import (
    dedekind_exact,
    dedekind_fast,
    dedekind_float,
    eta_invariant,
    reciprocity_defect,
    triple_reciprocity_defect,
)
from .numtheory import (
    Conjugacy,
    CyclicAction,
    DomainError,
    HJExpansion,
    InvariantError,
    canonical_action,
    conjugacy,
    frac,
    hj_expansion,
    mod_inverse,
    sawtooth,
)
from .spaces import (
    OrbifoldData,
    WpsTriple,
    classify_wps,
    index_calderbank_singer,
    index_cs_via_orbifold,
    index_orbifold,
    index_wps,
    moduli_calderbank_singer,
    moduli_wps,
    scan_h,
)
