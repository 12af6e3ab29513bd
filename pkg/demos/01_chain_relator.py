#!/usr/bin/env python3
"""Build the chain relator and check it against the homology oracle.

The word (t_c1 t_c2 ... t_c_{2g+1}^2 ... t_c2 t_c1)^2 over the chain of
curves is trivial in the mapping class group, so its product of transvection
matrices must be the identity; the inner half is the hyperelliptic
involution, which acts on homology as minus the identity.
"""

from lefschetz import (
    SymplecticMatrix,
    chain_relator,
    derive,
    intersection,
    replay_trail,
    sp_image,
    standard_atlas,
)
from lefschetz.words import Word

# =============================================================================
# The atlas fixes names and homology classes.  Consecutive chain curves meet
# once, everything else is disjoint on the level of classes.

g = 3
atlas = standard_atlas(g)
print("curves:", ", ".join(atlas.names()))

c2, c3 = atlas.class_of("c2"), atlas.class_of("c3")
assert abs(intersection(c2, c3)) == 1
assert intersection(atlas.class_of("c1"), atlas.class_of("c4")) == 0

# =============================================================================
# The relator itself: 8g+4 right-handed twists.

h = chain_relator(g)
print(f"chain relator at genus {g}: {h.n} twists")
assert h.n == 8 * g + 4

matrix = sp_image(h.word, atlas)
assert matrix == SymplecticMatrix.identity(g)
print("homology image: identity confirmed")

# The inner half word is the hyperelliptic involution: -I on homology.
half = Word(h.word.letters[: h.n // 2], g)
minus_identity = SymplecticMatrix(
    tuple(tuple(-1 if i == j else 0 for j in range(2 * g)) for i in range(2 * g))
)
assert sp_image(half, atlas) == minus_identity
print("half word: minus identity confirmed")

# =============================================================================
# Invariants live in an exact ledger; the chain relator sits on the slope
# line 4 - 4/g with pairing quantity exactly zero.

ledger = replay_trail(h.trail)
d = derive(ledger)
print(f"(n, sigma, e) = ({ledger.n}, {ledger.sigma}, {ledger.euler})")
print(f"chi_f = {d.chi_f}, K_f^2 = {d.Kf2}, slope = {d.slope} ({d.slope_verdict.value})")
assert d.pairing == 0
