"""From the refinement census to the gap, then the degree bookkeeping that closes the argument."""

from slicegap.classes import (build_D, build_omega, certified_periodicity, divisibility_certificate,
                              format_degree, skeleton_deduction)
from slicegap.slices import gap_check, hmu_series, refinement_census

cen = refinement_census(3, 16)
print("slice cells of the C8 refinement up to dimension 16")
for dim, wedge in cen.items():
    print(f"  {dim:3d}: {len(wedge):3d} cells, {wedge.underlying_count():4d} underlying spheres")
print("generating function check:", hmu_series(3, 8))

rep = gap_check(3, 19, 16, census=cen)
print(f"\ngap check: ok={rep.ok} over {rep.cells} distinct cell types and {rep.twists} twisted cells")

D = build_D()
print("\nD has degree", format_degree(D.degree), "and divisibility data", divisibility_certificate(D))
k = certified_periodicity()
print("periodicity exponent k =", k, "so omega has degree", format_degree(build_omega(k).degree))
print("dimensions 2^j - 2 moved onto -2 by that period:",
      [2 ** j - 2 for j in range(1, 12) if skeleton_deduction(j)])
