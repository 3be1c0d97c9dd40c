"""
A centralizer over Z[x]/<40x^3, 16x^4>
======================================

For an I-matrix the centralizer is {w*B'' + v*E + K} with K drawn from a grid
of annihilator intersections.  decompose() recovers w, v, K for any member.
"""
from imatrix import (Ring, TermIdeal, decompose, ideal_equals, mat, reduce_matrix,
                     sample_commuting, theorem41_description)

ZX = Ring.z_x()
I = TermIdeal(ZX, ["40x^3", "16x^4"])
L = mat([["7x^2", "24x^5+8x^4+4x^2"], ["14x", "0"]], ZX)
desc = theorem41_description(reduce_matrix(L, I), lift=L)
print("case:", desc.case, " m =", desc.m_R)
print("B'' =", [[str(x) for x in row] for row in desc.B_doubleprime])
for name in ("diag", "upper", "lower"):
    print(f"{name:>5} block:", [str(g) for g in desc.blocks[name].closed_form.generators])
print("upper block = <40x^2, 16x^3>:", ideal_equals(desc.blocks["upper"],
                                                    TermIdeal(ZX, ["40x^2", "16x^3"])))

# round trip through sampled members
ok = 0
for A in sample_commuting(desc, 200, seed=1):
    cert = decompose(A, desc)
    ok += cert.verify()
print(ok, "of 200 sampled members decompose with a verified certificate")

A = next(sample_commuting(desc, 1, seed=7))
cert = decompose(A, desc)
print("example member:", [[str(x) for x in row] for row in A])
print("  v =", cert.v_hat, " d =", cert.d_hat, " K =", [[str(x) for x in r] for r in cert.K_hat])
