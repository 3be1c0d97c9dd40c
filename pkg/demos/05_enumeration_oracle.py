"""
Checking descriptions against brute force
=========================================

Over Z_n the centralizer can be enumerated outright: all n^4 matrices are
tested with numpy lookup tables and the result compared to the description.
"""
import random

from imatrix import FiniteRingSpec, Ring, compare, mat, reduce_matrix, theorem41_description
from imatrix.ideals import zero_block

Z = Ring.integers()
rng = random.Random(3)
for n in (4, 6, 9, 12):
    spec = FiniteRingSpec.zn(n)
    sizes, bad = [], 0
    for _ in range(10):
        B = reduce_matrix(mat([[rng.randrange(n) for _ in range(2)] for _ in range(2)], Z),
                          spec.ideal)
        rep = compare(theorem41_description(B), spec)
        sizes.append(rep.centralizer_size)
        bad += len(rep.mismatches)
    print(f"Z_{n}: 10 matrices, centralizer sizes {sorted(set(sizes))}, mismatches {bad}")

# negative control: drop a block and the oracle notices
spec = FiniteRingSpec.zn(12)
desc = theorem41_description(reduce_matrix(mat([[8, 3], [6, 2]], Z), spec.ideal))
desc.blocks["lower"] = zero_block(spec.ideal)
print("lower block removed:", len(compare(desc, spec).mismatches), "mismatches")

spec = FiniteRingSpec.fpx_trunc(2, 3)
R = spec.ideal.ring
B = reduce_matrix(mat([["x", "1+x^2"], ["x^2", "0"]], R), spec.ideal)
print(spec.name, compare(theorem41_description(B), spec).to_json())
