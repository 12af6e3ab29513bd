#!/usr/bin/env python3
"""Two parametrised families of slope-violating fibrations.

Family X fiber-sums the small-slope relator with m chain copies (l times);
its slope 4 - 4/g - 1/((m+3)g) climbs toward the line as m grows.  Family Y
iterates the whole pipeline m times; its slope decreases toward the limit
4 - 4/g - 1/2g.  Both stay strictly below the slope line for all parameters.
"""

from fractions import Fraction

from lefschetz import derive, family_X, family_Y, family_slope

g = 3
line = Fraction(4 * g - 4, g)

# =============================================================================
# Family X: slope depends on m only.

print("family X at genus 3 (rows: m, slope, sigma for l = 1):")
for m in range(0, 4):
    rec = family_X(g, m, 1, with_relator=False)
    d = derive(rec.ledger)
    assert d.slope == family_slope("X", g, m) < line
    print(f"  m={m}: slope {d.slope}  sigma {rec.ledger.sigma}  "
          f"chi_f {d.chi_f}  Kf2 {d.Kf2}")

# l only scales (chi_f, Kf2, sigma, n); the slope is untouched.
for l in (1, 2, 5):
    assert derive(family_X(g, 1, l, with_relator=False).ledger).slope == \
        family_slope("X", g, 1)
print("slope of X independent of l confirmed")

# =============================================================================
# Family Y: each iteration multiplies the twist count by 3 and adds 1.

print("family Y at genus 3 (rows: m, n, slope for l = 1):")
previous_n = None
for m in range(1, 5):
    rec = family_Y(g, m, 1)
    d = derive(rec.ledger)
    print(f"  m={m}: n {rec.relator.n}  slope {d.slope}")
    if previous_n is not None:
        assert rec.relator.n == 3 * previous_n + 1
    previous_n = rec.relator.n
    if m == 1:
        assert d.slope == line       # pure chain sums sit on the line
    else:
        assert d.slope < line

# =============================================================================
# Claims carried from the construction (metadata, never computed here).

rec = family_X(3, 1, 2, with_relator=False)
print("claims for X(3, 1, 2):", rec.claims.to_json_dict())
assert rec.claims.minimal is True and rec.claims.nonspin is True
