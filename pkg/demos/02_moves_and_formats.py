#!/usr/bin/env python3
"""Equivalence moves on relators and the round-tripping text format.

Hurwitz moves swap an adjacent twist pair while rewriting one curve through
the other twist; simultaneous conjugation rewrites every curve at once.
Both leave the twist count, the homology image, and the invariant ledger
untouched, and everything serializes to a line-oriented text format that
parses back to the same value.
"""

from lefschetz import (
    chain_relator,
    conjugate,
    hurwitz_left,
    hurwitz_right,
    parse,
    replay_trail,
    serialize,
    sp_image,
    standard_atlas,
)
from lefschetz.words import Base, OpaqueMap, Twist, Word

g = 3
atlas = standard_atlas(g)
h = chain_relator(g)

# =============================================================================
# A Hurwitz move and its inverse.

moved = hurwitz_left(h, 5)
assert moved.n == h.n
assert sp_image(moved.word, atlas) == sp_image(h.word, atlas)
assert hurwitz_right(moved, 5) == h          # words are equal again
print("hurwitz move: length, matrix image and invertibility confirmed")

# The displaced twist acquires an inverse-image wrapper; the serialized form
# shows it as img(...; ...).
print("position 6 after the move:", serialize(moved).splitlines()[1].split()[5])

# =============================================================================
# Conjugating by an opaque symbol with a declared curve image.  The first
# chain twist is about c1, so it becomes a twist about x1 on the nose; the
# other curves stay symbolic and the matrix image becomes unknown (None).

phi = Word((OpaqueMap("PHI1", ("c1", "x1")),), g)
conjugated = conjugate(h, phi)
assert conjugated.word.letters[0] == Twist(Base("x1"), 1)
assert sp_image(conjugated.word, atlas) is None
assert replay_trail(conjugated.trail) == replay_trail(h.trail)
print("conjugation: leading twist is about x1, ledger unchanged")

# =============================================================================
# Text format round trip.

text = serialize(conjugated)
print("--- first lines of the relator file ---")
for line in text.splitlines()[:4]:
    print(line)
assert parse(text) == conjugated
print("parse(serialize(r)) == r confirmed")
