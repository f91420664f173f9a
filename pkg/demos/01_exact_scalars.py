"""Arithmetic in Q(i, sqrt2) stays exact, including signs of real numbers.

Run: python demos/01_exact_scalars.py
"""

from spinalg.scalar import HALF, I, ONE, SQRT2, RealScalar, real_sign, to_float

x = ONE + SQRT2
print("x = 1 + sqrt2        ->", x)
print("1/x                  ->", x.inv(), "(that is sqrt2 - 1)")
print("1/sqrt2              ->", SQRT2.inv(), "which equals sqrt2/2:", SQRT2.inv() == SQRT2 * HALF)

z = I * x
print("z = i(1 + sqrt2)     ->", z, "  conj(z) =", z.conj(), "  |z|^2 =", z.abs2())

# 99 - 70 sqrt2 is about 0.005; the sign is decided without floating point.
tiny = RealScalar(99, -70)
print("sign(99 - 70 sqrt2)  ->", real_sign(tiny), "  float value", float(tiny))
print("as a complex double  ->", to_float(z))
print("JSON form of z       ->", z.to_json())
