"""Cross-check the closed forms against explicit matrices.

The oracle truncates the set of conjugacy classes of maximal cyclic
subgroups to k classes, writes down the maps as integer matrices and takes
kernels and cokernels with the Smith form.  When every truncation agrees
with the closed form on the same k classes, we call the cell stable.

Run: python demos/oracle_crosscheck.py
"""

from dihedral_bredon import ArtinParameters, builtin
from dihedral_bredon.abelian import cyclic
from dihedral_bredon.oracle import finite_group_map_check, stability_scan, truncated_g_matrices

maps = truncated_g_matrices(builtin("Z"), 0, ArtinParameters(3), None, 2)
print("g2^1 for n = 3 and two classes (columns: u, v of <a>, then the center):")
for row in maps.g21:
    print("  ", row)

print("\nStability scans, k = 1..8:")
for ring in ("Z", "F2", "Z[C2]", "Z[C4]"):
    for n in (3, 4):
        result = stability_scan(builtin(ring), 1, ArtinParameters(n), range(1, 9), seed=7)
        verdict = "all cells stable" if result.all_match else "MISMATCH"
        print(f"  {ring:9} n={n} q=1: {verdict}")
        for note in result.notes:
            print(f"      ({note})")

print("\nA case the oracle disagrees with: F2, q = 4, n = 3.")
result = stability_scan(builtin("F2"), 4, ArtinParameters(3), range(1, 5))
for cell in result.cells:
    print(f"  H_{cell.i}: {cell.verdict}")
print("K_3(F2) = Z/3 has 3-torsion, but (2, -3) is injective on it, so nothing lands in H_1.")

print("\nSmith form against enumeration on a finite group:")
check = finite_group_map_check([[2, 0], [0, 3]], cyclic(6))
print(f"  kernel {check.kernel}, cokernel {check.cokernel}, agree: {bool(check)}")
