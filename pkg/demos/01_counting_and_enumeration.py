"""
Counting and listing m-ary partitions
=====================================

An m-ary partition of n uses only powers of m as parts. We store one as a
multiplicity vector [l_0, l_1, ...]: l_i parts equal to m**i.
"""

from marypart import count_bm, count_triple, enumerate_all, enumerate_simple, to_base_m

# the binary partitions of 8, largest parts first
for p in enumerate_all(8, 2):
    print(p.padded(4), "parts:", p.nops)

# the count comes from a dynamic program, so it works far past enumeration range
print("b_2(8) =", count_bm(8, 2))
print("b_2(100000) =", count_bm(10**5, 2))

# simple partitions only split powers of m they "own" in the base-m digits of n
print("60 in base 3:", to_base_m(60, 3).digits)
for p in enumerate_simple(60, 3):
    print("simple:", p.padded(4))

t = count_triple(60, 3)
print(f"all={t.all} simple={t.simple} nonsimple={t.nonsimple}")
