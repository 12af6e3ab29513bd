import pytest

from lefschetz.constructions import build_r_prime, build_rg, front_shuffle
from lefschetz.substitution import (
    LanternConfig,
    config_matrix_check,
    lantern_backward,
    lantern_forward,
    standard_config,
)
from lefschetz.surface import SymplecticMatrix, standard_atlas
from lefschetz.words import Base, PositiveRelator, Twist, Word, sp_image


def _relator(names, g=3):
    return PositiveRelator.from_word(
        Word(tuple(Twist(Base(n), 1) for n in names), g), "test")


def test_standard_config_passes_matrix_check():
    for g in (3, 4, 5):
        atlas = standard_atlas(g)
        assert config_matrix_check(standard_config(atlas), atlas) is True


def test_standard_config_needs_genus_three():
    with pytest.raises(ValueError):
        standard_config(standard_atlas(2))


def test_config_distinctness():
    with pytest.raises(ValueError):
        LanternConfig(
            (Base("c1"), Base("c1"), Base("c5"), Base("y")),
            (Base("x1"), Base("x2"), Base("x3")),
        )


def test_bogus_config_is_rejected_by_rewrites():
    cfg = LanternConfig(
        (Base("c1"), Base("c2"), Base("c3"), Base("c4")),
        (Base("x1"), Base("x2"), Base("x3")),
    )
    atlas = standard_atlas(3)
    assert config_matrix_check(cfg, atlas) is False
    r = _relator(["c1", "c2", "c3", "c4"])
    with pytest.raises(ValueError):
        lantern_forward(r, 1, cfg)


def test_forward_and_backward_are_inverse():
    cfg = standard_config(standard_atlas(3))
    r = _relator(["c2", "x1", "x2", "x3", "c7"])
    grown = lantern_backward(r, 2, cfg)
    assert grown.n == r.n + 1
    assert tuple(t.curve for t in grown.word.letters[1:5]) == cfg.boundary
    assert lantern_forward(grown, 2, cfg) == r

    shrunk = lantern_forward(grown, 2, cfg)
    assert lantern_backward(shrunk, 2, cfg) == grown


def test_window_is_local():
    cfg = standard_config(standard_atlas(3))
    r = _relator(["c2", "x1", "x2", "x3", "c7"])
    grown = lantern_backward(r, 2, cfg)
    assert grown.word.letters[0] == r.word.letters[0]
    assert grown.word.letters[-1] == r.word.letters[-1]


def test_pattern_mismatch_and_range():
    cfg = standard_config(standard_atlas(3))
    r = _relator(["c2", "x1", "x2", "x3", "c7"])
    with pytest.raises(ValueError):
        lantern_backward(r, 1, cfg)
    with pytest.raises(ValueError):
        lantern_forward(r, 1, cfg)
    with pytest.raises(IndexError):
        lantern_backward(r, 4, cfg)
    with pytest.raises(IndexError):
        lantern_forward(r, 3, cfg)


def test_rewrites_preserve_sp_image_concrete():
    g = 3
    r_prime = build_r_prime(g, concrete=True)
    shuffled = front_shuffle(r_prime, (1, 8 * g + 5, 2 * (8 * g + 4) + 1))
    before = sp_image(shuffled.word)
    assert before == SymplecticMatrix.identity(g)

    cfg = LanternConfig(
        standard_config(standard_atlas(g)).boundary,
        tuple(t.curve for t in shuffled.word.letters[:3]),
    )
    grown = lantern_backward(shuffled, 1, cfg)
    assert sp_image(grown.word) == before
    shrunk = lantern_forward(grown, 1, cfg)
    assert shrunk == shuffled
    assert sp_image(shrunk.word) == before


def test_rewrite_on_pipeline_output():
    g = 3
    rg = build_rg(g)
    cfg = standard_config(standard_atlas(g))
    back = lantern_forward(rg, 1, cfg)
    assert back.n == rg.n - 1
    assert tuple(t.curve for t in back.word.letters[:3]) == cfg.interior
    assert lantern_backward(back, 1, cfg) == rg
