import random

import pytest
from hypothesis import given, settings, strategies as st

from lefschetz.constructions import chain_relator
from lefschetz.surface import HomologyClass, SymplecticMatrix, intersection, standard_atlas
from lefschetz.words import (
    Base,
    Image,
    OpaqueCurve,
    OpaqueMap,
    PositiveRelator,
    Twist,
    Word,
    conjugate,
    empty_word,
    fiber_sum,
    homology_of,
    hurwitz_left,
    hurwitz_right,
    image_of,
    sp_image,
)

G = 3
ATLAS = standard_atlas(G)
NAMES = ATLAS.names()


def random_relator(rng, length=None, g=G):
    length = length or rng.randint(4, 20)
    names = standard_atlas(g).names()
    word = Word(tuple(Twist(Base(rng.choice(names)), 1) for _ in range(length)), g)
    return PositiveRelator.from_word(word, "random", sigma=rng.randint(-40, 40))


def random_word(rng, length=None, g=G):
    length = length or rng.randint(0, 12)
    names = standard_atlas(g).names()
    return Word(
        tuple(Twist(Base(rng.choice(names)), rng.choice((1, -1))) for _ in range(length)), g)


# ---------------------------------------------------------------------------
# expression normalisation


def test_image_of_empty_word_is_identity():
    assert image_of(empty_word(G), Base("c1")) == Base("c1")


def test_image_of_declared_mapping():
    phi = Word((OpaqueMap("PHI1", ("c1", "x1")),), G)
    assert image_of(phi, Base("c1")) == Base("x1")
    assert image_of(phi, Base("c2")) == Image(phi, Base("c2"))


def test_image_wrappers_merge_and_cancel():
    t = Word((Twist(Base("c2"), 1),), G)
    tinv = t.inverse()
    wrapped = image_of(t, Base("c1"))
    assert image_of(tinv, wrapped) == Base("c1")
    merged = image_of(t, image_of(t, Base("c1")))
    assert merged == Image(Word(t.letters + t.letters, G), Base("c1"))


def test_image_does_not_merge_across_opaque():
    phi = Word((OpaqueMap("PHI1", ("c1", "x1")),), G)
    inner = image_of(phi, Base("c2"))
    t = Word((Twist(Base("x2"), -1),), G)
    out = image_of(t, inner)
    assert out == Image(t, inner)


def test_twist_power_validation():
    with pytest.raises(ValueError):
        Twist(Base("c1"), 2)


# ---------------------------------------------------------------------------
# relator construction


def test_positive_relator_rejects_inverse_twists():
    bad = Word((Twist(Base("c1"), -1),), G)
    with pytest.raises(ValueError):
        PositiveRelator.from_word(bad)


def test_positive_relator_requires_trail():
    with pytest.raises(ValueError):
        PositiveRelator(Word((Twist(Base("c1"), 1),), G), ())


def test_relator_equality_ignores_trail():
    r = chain_relator(3)
    moved = hurwitz_right(hurwitz_left(r, 1), 1)
    assert moved == r
    assert moved.trail != r.trail


# ---------------------------------------------------------------------------
# conjugation


def test_conjugate_by_empty_word_is_identity():
    r = chain_relator(3)
    assert conjugate(r, empty_word(3)) == r


def test_conjugate_genus_mismatch():
    with pytest.raises(ValueError):
        conjugate(chain_relator(3), empty_word(4))


def test_conjugate_by_opaque_substitutes_declared_curve():
    r = chain_relator(3)
    phi = Word((OpaqueMap("PHI1", ("c1", "x1")),), 3)
    conj = conjugate(r, phi)
    assert conj.word.letters[0].curve == Base("x1")
    assert conj.word.letters[1].curve == Image(phi, Base("c2"))
    assert conj.n == r.n


def test_conjugate_preserves_length_random():
    rng = random.Random(7)
    for _ in range(50):
        r = random_relator(rng)
        phi = random_word(rng)
        assert conjugate(r, phi).n == r.n


def test_conjugate_conjugates_sp_image():
    rng = random.Random(11)
    for _ in range(25):
        r = random_relator(rng, length=8)
        phi = random_word(rng, length=4)
        m_phi = sp_image(phi, ATLAS)
        lhs = sp_image(conjugate(r, phi).word, ATLAS)
        rhs = m_phi @ sp_image(r.word, ATLAS) @ m_phi.inverse()
        assert lhs == rhs


# ---------------------------------------------------------------------------
# Hurwitz moves


def test_hurwitz_left_shape():
    # (t_u, t_v) at i becomes (t_v, t_{v^-1(u)})
    phi = Word((OpaqueMap("PHI1", ("c1", "x1")),), G)
    u = Twist(image_of(phi, Base("c1")), 1)   # = t_{x1}
    v = Twist(Base("x2"), 1)
    r = PositiveRelator.from_word(Word((u, v), G), "pair")
    moved = hurwitz_left(r, 1)
    assert moved.word.letters[0] == v
    assert moved.word.letters[1].curve == image_of(
        Word((v.inverse(),), G), u.curve)


def test_hurwitz_left_then_right_is_identity():
    rng = random.Random(3)
    for _ in range(50):
        r = random_relator(rng)
        i = rng.randint(1, r.n - 1)
        assert hurwitz_right(hurwitz_left(r, i), i) == r
        assert hurwitz_left(hurwitz_right(r, i), i) == r


def test_hurwitz_self_pair_keeps_class():
    u = Twist(Base("c2"), 1)
    r = PositiveRelator.from_word(Word((u, u), G), "pair")
    moved = hurwitz_left(r, 1)
    assert moved.word.letters[0] == u
    assert homology_of(moved.word.letters[1].curve, ATLAS) == homology_of(u.curve, ATLAS)


def test_hurwitz_preserves_sp_image():
    rng = random.Random(5)
    for _ in range(30):
        r = random_relator(rng, length=10)
        before = sp_image(r.word, ATLAS)
        for _ in range(6):
            i = rng.randint(1, r.n - 1)
            move = rng.choice((hurwitz_left, hurwitz_right))
            r = move(r, i)
        assert sp_image(r.word, ATLAS) == before
        assert r.n == 10


def test_hurwitz_position_range():
    r = chain_relator(3)
    with pytest.raises(IndexError):
        hurwitz_left(r, 0)
    with pytest.raises(IndexError):
        hurwitz_left(r, r.n)
    with pytest.raises(IndexError):
        hurwitz_right(r, r.n)


# ---------------------------------------------------------------------------
# fiber sum


def test_fiber_sum_concatenates():
    h = chain_relator(3)
    double = fiber_sum(h, h)
    assert double.n == 56
    assert double.word.letters == h.word.letters * 2


def test_fiber_sum_genus_mismatch():
    with pytest.raises(ValueError):
        fiber_sum(chain_relator(3), chain_relator(4))


def test_fiber_sum_multiplies_sp_image():
    rng = random.Random(13)
    for _ in range(20):
        a, b = random_relator(rng, 6), random_relator(rng, 7)
        assert sp_image(fiber_sum(a, b).word, ATLAS) == (
            sp_image(a.word, ATLAS) @ sp_image(b.word, ATLAS))


# ---------------------------------------------------------------------------
# homology evaluation


def test_homology_of_base():
    assert homology_of(Base("c1"), ATLAS) == ATLAS.class_of("c1")


def test_homology_of_single_twist_image():
    c1, c2 = ATLAS.class_of("c1"), ATLAS.class_of("c2")
    expr = image_of(Word((Twist(Base("c2"), 1),), G), Base("c1"))
    assert homology_of(expr, ATLAS) == c1 + intersection(c1, c2) * c2


def test_homology_of_opaque_curve():
    assert homology_of(OpaqueCurve("Q"), ATLAS) is None
    known = HomologyClass((1, 0, 0, 0, 0, 0))
    assert homology_of(OpaqueCurve("Q", known), ATLAS) == known


def test_homology_of_raw_opaque_image_unknown():
    phi = Word((OpaqueMap("PHI1", ("c1", "x1")),), G)
    assert homology_of(Image(phi, Base("c1")), ATLAS) is None


def test_sp_image_empty_word():
    assert sp_image(empty_word(G), ATLAS) == SymplecticMatrix.identity(G)


def test_sp_image_twist_times_inverse():
    w = Word((Twist(Base("c3"), 1), Twist(Base("c3"), -1)), G)
    assert sp_image(w, ATLAS) == SymplecticMatrix.identity(G)


def test_sp_image_opaque_unknown():
    w = Word((OpaqueMap("PHI1", ("c1", "x1")),), G)
    assert sp_image(w, ATLAS) is None
    wrapped = Word((Twist(Image(w, Base("c2")), 1),), G)
    assert sp_image(wrapped, ATLAS) is None


@settings(max_examples=60)
@given(st.lists(st.tuples(st.sampled_from(NAMES), st.sampled_from((1, -1))),
                min_size=0, max_size=10))
def test_sp_image_of_word_times_inverse(pairs):
    w = Word(tuple(Twist(Base(n), p) for n, p in pairs), G)
    product = sp_image(w, ATLAS) @ sp_image(w.inverse(), ATLAS)
    assert product == SymplecticMatrix.identity(G)


def test_word_inverse_rejects_opaque():
    w = Word((OpaqueMap("PHI1", None),), G)
    with pytest.raises(ValueError):
        w.inverse()


def test_transvection_inverse_is_opposite_transvection():
    # T(c)^-1 acts as x -> x - <x, c> c
    from lefschetz.surface import transvection_matrix

    c = ATLAS.class_of("c4")
    inv = transvection_matrix(c).inverse()
    for name in NAMES:
        x = ATLAS.class_of(name)
        assert inv.apply(x) == x - intersection(x, c) * c


def test_boundary_positions():
    r = chain_relator(3)
    assert hurwitz_right(hurwitz_left(r, 1), 1) == r
    assert hurwitz_right(hurwitz_left(r, r.n - 1), r.n - 1) == r
