"""
The N_{m,c} families
====================

N_{m,c}(n) holds the partitions with some l_j > n_j (j >= 1) whose next c
multiplicities agree with n's digits. c = 0 gives back the non-simple
partitions. The size is conjectured to be divisible by m**(c+1); here we
tabulate it together with the complement size |S_{m,c}(n)|.
"""

from marypart import n_mc_members, verify_nmc_congruence

print(sorted(p.padded(4) for p in n_mc_members(8, 2, 1)))

for c in (0, 1, 2):
    rows = [verify_nmc_congruence(n, 3, c) for n in range(0, 121, 10)]
    print(f"c={c}:", [(o.n, o.info["nmc_count"], o.info["smc_count"]) for o in rows])
    print("   divisible by", 3 ** (c + 1), "everywhere:", all(o.holds for o in rows))
