"""
Congruences for b_m(n) mod m
============================

The count of m-ary partitions mod m depends only on the base-m digits of n:
b_m(n) is congruent to the product of (n_i + 1) over i >= 1. The number of
parts is equidistributed mod m over all partitions exactly when some digit
n_i with i >= 1 equals m - 1.
"""

from marypart import afs_residue, count_bm, digit_criterion, verify_afs, verify_digit_criterion

for n in (60, 81, 100, 242):
    print(f"n={n}: b_3(n)={count_bm(n, 3)}, residue {count_bm(n, 3) % 3}, predicted {afs_residue(n, 3)}")

bad = [(n, m) for m in range(2, 8) for n in range(2000) if not verify_afs(n, m).holds]
print("congruence failures for n < 2000, m in 2..7:", bad)

for n in (4, 8, 26, 60):
    out = verify_digit_criterion(n, 3)
    print(f"n={n}: digit criterion {digit_criterion(n, 3)}, nops histogram {out.info['counts']}")

# command line sweep:
#   marypart verify --claims afs,digit_criterion --base 2..5 --n 0..200
