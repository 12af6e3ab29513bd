#!/usr/bin/env python3
"""Slope brackets for fibrations with b_2^+ = 1 and for blown-up ruled spaces.

Away from ruled surfaces, b_1 = 0 pins the slope inside [4-4/g, 8+1/g] and
b_1 = 2 inside [4, 8].  For the m-fold blow-up of a sphere bundle over a
genus-k curve the slope is exactly 8 - m/(g-k), constrained to
[4 + 4(k-1)/(g-k), 8]; blowing up 4(g-2k+1) times realises the lower bound,
so the bracket is sharp.
"""

from fractions import Fraction

from lefschetz import b2plus1_bounds, fs_match, ruled_bounds

# =============================================================================
# b_2^+ = 1, b_1 = 0: the extreme b_2^- = 0 attains the upper bound 8 + 1/g.

rec = b2plus1_bounds(3, 0, 0)
print(f"g=3, b1=0, b2^-=0: slope {rec.slope} in [{rec.lower}, {rec.upper}]")
assert rec.slope == rec.upper == Fraction(25, 3)

# b_1 = 2 needs b_2^- >= 1 (nonnegative Euler characteristic); the extreme
# case attains the upper bound 8.
rec = b2plus1_bounds(3, 2, 1)
assert rec.slope == Fraction(8) and rec.constraints_ok
assert not b2plus1_bounds(3, 2, 0).constraints_ok

# Outside the constraints the formula leaves the bracket; the record says so.
rec = b2plus1_bounds(2, 0, 20)
assert not rec.constraints_ok and rec.slope < rec.lower
print("constraint flags separate bracketed from unconstrained inputs")

# =============================================================================
# Ruled case: slope falls linearly in the number of blow-ups.

g, k = 4, 1
print(f"ruled case g={g}, k={k} (rows: blowups, slope, within constraint):")
for blowups in (0, 4, 8, 12, 13):
    rec = ruled_bounds(g, k, blowups)
    print(f"  {blowups:>2}: {rec.slope}  {'ok' if rec.constraint_ok else 'outside'}")

# =============================================================================
# Sharpness: the matched blow-up count lands exactly on the lower bound.

for g in range(2, 9):
    for k in range(0, g // 2 + 1):
        rec = fs_match(g, k)
        assert rec.slope == rec.lower == 4 + Fraction(4 * (k - 1), g - k)
rec = fs_match(4, 1)
print(f"g=4, k=1: {rec.blowups} blow-ups give slope {rec.slope} = lower bound (sharp)")

# At k = 0 the ruled lower bound is the slope line itself.
assert fs_match(3, 0).slope == Fraction(4 * 3 - 4, 3)
