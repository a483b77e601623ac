"""Group rings with Nil terms, custom profiles and bounded answers.

Run: python demos/non_regular_rings.py
"""

from dihedral_bredon import ArtinParameters, builtin, bredon_vc
from dihedral_bredon.abelian import OMEGA, ExtNat, render
from dihedral_bredon.artin import CatalogEntry, ClassCatalog
from dihedral_bredon.ktheory import load_profile
from dihedral_bredon.report import render_records

for ring in ("Z[C2]", "Z[C2xC2]", "Z[C4]"):
    p = builtin(ring)
    print(f"{ring}: K_1 = {render(p.k_table[1])}, NK_1 = {render(p.nk_table[1])}")
    rep = bredon_vc(p, 1, ArtinParameters(5))
    for i in (3, 2, 1, 0):
        print(f"   H_{i} = {render(rep.cell(i, 1))}")

print("\nZ[C2] has no recorded K_2, so asking for q = 2 is a range error:")
try:
    bredon_vc(builtin("Z[C2]"), 2, ArtinParameters(3))
except Exception as exc:  # OutOfRangeError
    print(f"   {type(exc).__name__}: {exc}")

print("\nA made-up profile with K_0 = Z/4 and a class catalog where the center pairing")
print("is 2 shows a cell the closed forms can only bound:")
quad = load_profile("""
[meta]
name = quad
regular = true
q_range = 0..0
[K]
0 = Z/4
""")
catalog = ClassCatalog((
    CatalogEntry("Z(A_4)", (2, 2), ExtNat(1), True),
    CatalogEntry("x", (2, 0), ExtNat(1)),
    CatalogEntry("ab-trivial", (0, 0), OMEGA),
))
rep = bredon_vc(quad, 0, ArtinParameters(4), catalog)
print(render_records(rep))
