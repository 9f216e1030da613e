"""
Stratifying the non-simple partitions
=====================================

Non-simple partitions of n are grouped three ways: by the digit-min map f
(fibers), by the first index where they exceed n's digits (strata B(z)),
and by their multiplicities above that index (chain classes). Each chain
class contains m*r partitions whose part counts cycle through every residue
mod m exactly r times.
"""

from marypart import chain_params, nops_histogram, stratify, verify_equidistribution_N

s = stratify(60, 3)
for b, strata in s.fibers.items():
    print(f"fiber f^-1({b}): {s.fiber_size(b)} partitions")
    for z, classes in strata.items():
        for c in classes:
            r, top = chain_params(c, 60)
            counts = nops_histogram(c.members, 3).counts
            print(f"   B({z}) {c.label()}: size {len(c.members)}, r={r}, "
                  f"l_z up to {top}, nops mod 3 -> {counts}")

print("equidistributed at every level:", verify_equidistribution_N(60, 3))

# the same report is available from the command line:
#   marypart stratify 60 --base 3 --format text
