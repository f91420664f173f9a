"""The coproduct, counit and antipode, and which automorphisms respect them.

Run: python demos/05_hopf.py
"""

from spinalg.algebra import make_spin_algebra
from spinalg.hopf import antipode, coalgebra_deformation_check, coproduct, counit, verify_hopf_axioms
from spinalg.spin import gl2_aut, inner_aut, j_aut, nev_aut

A = make_spin_algebra()
print("Δ(e1e2) =", coproduct(A.e(1, 2)))
print("Δ(e1e3) =", coproduct(A.e(1, 3)))
x = A.one().scale(3) + A.gen(1) + A.e(1, 3)
print("ε(3 + e1 + e1e3) =", counit(x), "   S(3 + e1 + e1e3) =", antipode(x))

print("\naxiom checks:")
for name, res in verify_hopf_axioms().items():
    print(f"  {name:<28} {'ok' if res['pass'] else 'FAILS at ' + str(res['witness'])}")

print("\nwhich automorphisms keep the coproduct?")
for label, op in [
    ("gl [[1,2],[0,3]]", gl2_aut([[1, 2], [0, 3]])),
    ("J", j_aut()),
    ("nev(e1e3e4, 0)", nev_aut(A.e(1, 3, 4), A.zero())),
    ("inner(e1 + e3)", inner_aut(A.gen(1) + A.gen(3))),
]:
    r = coalgebra_deformation_check(op)
    print(f"  {label:<18} {r['status']:<10} first moved monomial: {r['witness']}")
