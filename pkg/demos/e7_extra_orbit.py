"""The overlooked second extreme orbit of the E7 crown polytope.

Classical expectation: the extreme points of {X : |<alpha,X>| <= 1} for E7
form the single Weyl orbit of the (minuscule) last fundamental coweight, 56
points.  Exact enumeration says otherwise.  This script walks through the
certificates and then classifies the resulting boundary component of e7(7).

Run from the repository root:  python demos/e7_extra_orbit.py
"""

from __future__ import annotations

from fractions import Fraction as Q

from crownorbits.causality import ad_spectrum
from crownorbits.chevalley import exceptional_boundary
from crownorbits.crown import CrownPolytope, active_roots, extreme_orbits, membership
from crownorbits.linalg import dot, rank
from crownorbits.rootsys import build_root_system, dual_basis
from crownorbits.weyl import orbit


def fmt(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


def main():
    e7 = build_root_system("E7", 7)
    P = CrownPolytope(e7)

    print("extreme orbits of the E7 unit-pairing polytope:")
    dec = extreme_orbits(P)
    for i, o in enumerate(dec.orbits, 1):
        print(f"  [{i}] rep = {fmt(o.representative)}  size = {o.size}")

    omega2 = dual_basis(e7)[1]
    y = tuple(c / 2 for c in omega2)
    print(f"\nthe surprise point is half the second coweight, Y = {fmt(y)}")
    print(f"  membership: {membership(P, y)}")
    act = active_roots(P, y)
    print(f"  active roots (|<alpha,Y>| = 1): {len(act)}, "
          f"rank {rank([list(a) for a in act])} of 7 -> vertex test passes")

    # hull separation: Y cannot be a convex combination of the 56 points
    phi = tuple(Q(c) for c in (2, 2, 2, 2, 2, 2, -4, 4))
    minuscule = orbit(e7, dual_basis(e7)[6])
    best = max(dot(phi, w) for w in minuscule.elements)
    print(f"\nseparating functional phi = {fmt(phi)}:")
    print(f"  <phi, Y> = {dot(phi, y)},  max over the 56-point orbit = {best}")

    spec = ad_spectrum(e7, y)
    print(f"\nad-spectrum at Y: {[str(v) for v in spec.values]}")
    print(f"  half-integral: {spec.is_half_integral},  "
          f"involutive: {spec.is_involutive}")
    print("  so the boundary endomorphism at Y has order 4, not 2:")
    print("  this component of the distinguished boundary is not symmetric.")

    print("\nclassifying the e7(7) boundary (takes a few seconds)...")
    for c in exceptional_boundary("e7(7)"):
        fp = c.stabilizer_fingerprint
        tag = c.identified_name
        sym = "symmetric" if c.symmetric else "non-symmetric"
        print(f"  orbit size {c.orbit_size:4d}  {sym:13s}  h dim {fp.dim:3d}  "
              f"killing {fp.killing_signature}  -> {tag}")


if __name__ == "__main__":
    main()
