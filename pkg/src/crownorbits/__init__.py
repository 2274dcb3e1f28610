"""Exact-arithmetic engine for crown-domain boundary orbit classification.

Everything is computed over the rationals (or Gaussian rationals): restricted
root systems, Weyl orbits, crown polytope extreme points, the flip involution
on matrix realizations, stabilizer subalgebras with Killing fingerprints, and
Jordan-algebra signature strata.  No floating point anywhere.
"""

from __future__ import annotations

from .rootsys import RootDatum, build_root_system, dual_basis, highest_root, weyl_order
from .weyl import WeylOrbit, dominant_representative, orbit, reflect, same_orbit
from .crown import (
    CrownPolytope,
    ExtremeDecomposition,
    brute_force_vertices,
    extreme_candidates,
    extreme_orbits,
    is_extreme_point,
    membership,
    xi0_polytope,
)
from .causality import (
    SpectrumReport,
    ad_spectrum,
    component_flags,
    lookup_causal_pairs,
)
from .liealg import (
    BoundaryComponent,
    LieAlgebraRealization,
    RealFormFingerprint,
    build_classical,
    classify_boundary,
    classify_xi0_boundary,
    fingerprint,
    identify_real_form,
    restricted_roots,
    stabilizer_subalgebra,
    tau_endomorphism,
)
from .chevalley import (
    ChevalleyAlgebra,
    build_chevalley,
    complex_as_real,
    exceptional_boundary,
    split_real_form,
)
from .jordan import (
    JordanAlgebra,
    StratumLabel,
    build_jordan,
    frame_point,
    jordan_det,
    signature_stratum,
    stratum_stabilizer_algebra,
    stratum_transitivity_check,
    xi0_extreme_orbits,
)


__all__ = [
    "RootDatum",
    "build_root_system",
    "dual_basis",
    "highest_root",
    "weyl_order",
    "WeylOrbit",
    "reflect",
    "orbit",
    "dominant_representative",
    "same_orbit",
    "CrownPolytope",
    "ExtremeDecomposition",
    "membership",
    "extreme_candidates",
    "is_extreme_point",
    "extreme_orbits",
    "brute_force_vertices",
    "xi0_polytope",
    "SpectrumReport",
    "ad_spectrum",
    "component_flags",
    "lookup_causal_pairs",
    "LieAlgebraRealization",
    "RealFormFingerprint",
    "BoundaryComponent",
    "build_classical",
    "restricted_roots",
    "tau_endomorphism",
    "stabilizer_subalgebra",
    "fingerprint",
    "identify_real_form",
    "classify_boundary",
    "classify_xi0_boundary",
    "ChevalleyAlgebra",
    "build_chevalley",
    "split_real_form",
    "complex_as_real",
    "exceptional_boundary",
    "JordanAlgebra",
    "StratumLabel",
    "build_jordan",
    "jordan_det",
    "signature_stratum",
    "frame_point",
    "xi0_extreme_orbits",
    "stratum_stabilizer_algebra",
    "stratum_transitivity_check",
]

__version__ = "0.1.0"
