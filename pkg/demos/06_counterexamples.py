"""
Where the description breaks down
=================================

Without the I-matrix property the block description can miss members, and
for n >= 3 the annihilator grid misses some too.
"""
from imatrix import counterexample_44, counterexample_45

fx = counterexample_44()
print("F2[x,y]/<x^2>, B =", [[str(x) for x in r] for r in fx.B])
print("  witness", [[str(x) for x in r] for r in fx.witness], "commutes:",
      fx.checks["witness_commutes"])
print("  classifier:", fx.verdict.status, " decompose:", fx.decomposition)

for n in (3, 4):
    fx = counterexample_45(n)
    print(f"Z/<4>, n = {n}: witness (2,1) entry = {fx.witness[1][0]}, checks {fx.checks}")
