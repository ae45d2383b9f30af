"""Walk through S^{rho_8}: its cells, its Bredon homology, and the vanishing range for induced spheres."""

from slicegap.bredon import bredon, cell_census, chain_model, format_groups, slice_sphere_homology, sphere_checks
from slicegap.equivariant import MackeyCoefficient, RealRep, divisors

rho8 = RealRep.rho(8)
print("cells of S^rho_8 (dimension: isotropy order, orbits)")
for dim, (iso, n) in sorted(cell_census(rho8).items()):
    print(f"  {dim}: C_{iso} x{n}")

print("\nfixed points are spheres:", sphere_checks(rho8))

for kind in ("ConstantZ", "Burnside"):
    groups = bredon(chain_model(rho8), MackeyCoefficient(kind, 8))
    print(f"H_*^C8(S^rho_8; {kind}) =", format_groups(groups))

print("\nH_j for j in -3..-1 of Ind_K^8 S^{m rho_K}")
for K in divisors(8):
    row = []
    for m in range(-4, 0):
        g = slice_sphere_homology(8, K, m)
        row.append("0" if all(b == 0 and not t for b, t in g.values()) else "*")
    print(f"  K = C_{K}: m=-4..-1 -> {' '.join(row)}")
print("(the free row K = C_1 is the only one allowed to be nonzero)")
