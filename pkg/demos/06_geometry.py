"""Metric, Pauli operators, gamma matrices and the inner product.

Run: python demos/06_geometry.py
"""

from spinalg.geometry import (
    canonical_orientation,
    clifford_check,
    conformal_action_check,
    default_pauli_injection,
    dirac_gram_scan,
    metric_G,
    psd_check,
    signature,
    spacetime_metric,
)
from spinalg.sampling import rng_for
from spinalg.scalar import RealScalar
from spinalg.spin import compose_spin_factors, gl2_aut, random_spin_factors

om = canonical_orientation()
print("orientation: omega =", om.omega)
G = metric_G(om)
print("G(omega) on the default injection:", [[str(c) for c in row] for row in G])
print("inertia:", signature(G))

sigma = default_pauli_injection()
print("\nthe four injected functionals:")
for a, s in enumerate(sigma.injection):
    print(f"  s{a} = {s}")
met = spacetime_metric(sigma, om)
print("g_ab = ε(σ_a σ_b ω):", [[str(c) for c in row] for row in met.g])

r = clifford_check(sigma, om)
print(f"\nClifford relations: {r['checked']} identities checked, all hold = {r['pass']}")
print("Dirac adjoint Gram ranks:", {k: v["rank"] for k, v in dirac_gram_scan(sigma, om).items()})

u = (RealScalar(2), RealScalar(1), RealScalar(0), RealScalar(1))
print("\ninner product for u = (2, 1, 0, 1):", psd_check(u))

print("\nconformal factors:")
print("  gl diag(2, 1)        ->", conformal_action_check(gl2_aut([[2, 0], [0, 1]])))
alpha = compose_spin_factors(random_spin_factors(rng_for(3), "full"))
print("  a sampled automorphism ->", conformal_action_check(alpha))
