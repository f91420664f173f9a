"""The spin algebra and Grassmann algebras as concrete 2^n-dimensional objects.

Run: python demos/02_algebras.py
"""

from spinalg.algebra import center, commutator, exp_nilpotent, ideal_power, make_grassmann, make_spin_algebra

A = make_spin_algebra()
e = A.e
print("spin algebra: dimension", A.dim)
print("e2 e1   =", e(2) * e(1), "   (e1, e2 anticommute)")
print("e3 e1   =", e(3) * e(1), "     (the two families commute)")
print("e1 e1   =", e(1) * e(1), "              (generators are nilpotent)")
print("(e1e2)+ =", e(1, 2).plus(), "   (the + involution swaps families, keeps order)")
print("[e1e3, e2] =", commutator(e(1, 3), e(2)))

print("\nbigrades of the 16 basis monomials:")
for m in A.basis:
    print(f"  {str(A.mono(m)):>6}  {A.bigrade(m)}")

z = center(A)
print("\ncenter of the spin algebra:", sorted(str(v) for v in z.vectors))
for l in range(1, 5):
    print(f"dim M^{l} =", ideal_power(A, l).dim)

x = e(1, 3) + e(2)
print("\nexp(e1e3 + e2) =", exp_nilpotent(x))

G = make_grassmann(3)
print("\nGrassmann algebra on 3 generators, center:", sorted(str(v) for v in center(G).vectors))
