"""
Pre-images and I-invertibility
==============================

Every residue b of R/I splits as r*delta with gcd(r, k) = 1 and delta | k,
k being the gcd of the ideal.  b is I-invertible when some such r is a unit
modulo I.
"""
from imatrix import (Ring, TermIdeal, geometric_inverse, i_preimage, is_i_invertible,
                     semi_divisor_solve, try_inverse)

Z, ZX = Ring.integers(), Ring.z_x()

# 9 = 7 * 3 in Z_12
I12 = TermIdeal(Z, [12])
pre = i_preimage(I12.residue(9))
print("9 mod 12:  r =", pre.r, " delta =", pre.delta)
print("  I-invertible:", is_i_invertible(I12.residue(9)).verdict)

# a polynomial example, k = 8x^3
I = TermIdeal(ZX, ["40x^3", "16x^4"])
f = ZX("24x^5+8x^4+4x^2")
pre = i_preimage(I.residue(f), f)
print("f mod I:   r =", pre.r, " delta =", pre.delta)
v = is_i_invertible(I.residue(f), f)
print("  I-invertible:", v.verdict, "via", v.reason)

# the relative prime part is inverted by a telescoping product; the residual lands in I
cert = geometric_inverse(I.residue(pre.r), pre.r)
print("  certificate: l =", cert.l, " factors =", [str(x) for x in cert.factors],
      " residual =", cert.residual, " verified:", cert.verify())

# a negative answer, with a semi-divisor that still exists
I5 = TermIdeal(ZX, ["5x^2"])
b = I5.residue("3x^2")
v = is_i_invertible(b)
sd = semi_divisor_solve(b)
print("3x^2 mod 5x^2:", v.verdict, "(" + v.reason + ");  c =", sd.c, " c*b =", sd.c * b)

# pre-image choice matters for non-principal elements: x = 1*x = 3*x modulo 2x
I2x = TermIdeal(ZX, ["2x"])
print("mod 2x: 1 invertible:", try_inverse(I2x.residue(1)).found,
      " 3 invertible:", try_inverse(I2x.residue(3)).found,
      " x I-invertible:", is_i_invertible(I2x.residue("x")).verdict)
