"""Lantern substitutions: trade a boundary quadruple for an interior triple.

On a four-holed sphere the twists about the boundary curves d1, d2, d3, d4
and about the interior curves x1, x2, x3 satisfy

    t_d1 t_d2 t_d3 t_d4 = t_x1 t_x2 t_x3,

so a relator containing one side as a consecutive subword may have it
replaced by the other.  Matching is positional and syntactic on curve
expressions: two distinct curves may share a homology class, and only the
exact configured tokens rewrite.  Whenever every class involved is known,
the configuration is checked against the transvection oracle first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surface import SurfaceAtlas, SymplecticMatrix, standard_atlas, transvection_matrix
from .words import Base, CurveExpr, LanternStep, PositiveRelator, Twist, Word, homology_of


@dataclass(frozen=True)
class LanternConfig:
    """Seven pairwise distinct curve expressions: four boundary, three interior."""

    boundary: tuple[CurveExpr, CurveExpr, CurveExpr, CurveExpr]
    interior: tuple[CurveExpr, CurveExpr, CurveExpr]

    def __post_init__(self):
        if len(self.boundary) != 4 or len(self.interior) != 3:
            raise ValueError("a lantern has four boundary and three interior curves")
        curves = list(self.boundary) + list(self.interior)
        if len(set(curves)) != 7:
            raise ValueError("the seven lantern curves must be distinct expressions")


def standard_config(atlas: SurfaceAtlas) -> LanternConfig:
    """Boundary (c1, c3, c5, y), interior (x1, x2, x3) in the standard atlas."""
    if atlas.genus < 3:
        raise ValueError("the standard lantern configuration needs genus at least 3")
    return LanternConfig(
        (Base("c1"), Base("c3"), Base("c5"), Base("y")),
        (Base("x1"), Base("x2"), Base("x3")),
    )


def config_matrix_check(cfg: LanternConfig, atlas: SurfaceAtlas) -> bool | None:
    """True/False when all classes are known, None when any is opaque."""
    matrices = []
    for group in (cfg.boundary, cfg.interior):
        product = SymplecticMatrix.identity(atlas.genus)
        for c in group:
            cls = homology_of(c, atlas)
            if cls is None:
                return None
            product = product @ transvection_matrix(cls)
        matrices.append(product)
    return matrices[0] == matrices[1]


def _checked(cfg: LanternConfig, r: PositiveRelator) -> None:
    verdict = config_matrix_check(cfg, standard_atlas(r.genus))
    if verdict is False:
        raise ValueError("lantern configuration fails the transvection identity")


def _window(r: PositiveRelator, pos: int, width: int) -> tuple[Twist, ...]:
    if not 1 <= pos <= r.n - width + 1:
        raise IndexError(
            f"position {pos} out of range for a {width}-twist window in {r.n} twists")
    return r.word.letters[pos - 1: pos - 1 + width]


def _match(window: tuple[Twist, ...], pattern: tuple[CurveExpr, ...], what: str, pos: int) -> None:
    actual = tuple(t.curve for t in window)
    if actual != pattern:
        raise ValueError(f"lantern {what} pattern does not match at position {pos}")


def lantern_forward(r: PositiveRelator, pos: int, cfg: LanternConfig) -> PositiveRelator:
    """Rewrite t_d1 t_d2 t_d3 t_d4 at pos..pos+3 into t_x1 t_x2 t_x3 (n drops by 1)."""
    _checked(cfg, r)
    _match(_window(r, pos, 4), cfg.boundary, "boundary", pos)
    letters = (
        r.word.letters[: pos - 1]
        + tuple(Twist(c, 1) for c in cfg.interior)
        + r.word.letters[pos + 3:]
    )
    return PositiveRelator(Word(letters, r.genus), r.trail + (LanternStep("forward", pos),))


def lantern_backward(r: PositiveRelator, pos: int, cfg: LanternConfig) -> PositiveRelator:
    """Rewrite t_x1 t_x2 t_x3 at pos..pos+2 into t_d1 t_d2 t_d3 t_d4 (n grows by 1)."""
    _checked(cfg, r)
    _match(_window(r, pos, 3), cfg.interior, "interior", pos)
    letters = (
        r.word.letters[: pos - 1]
        + tuple(Twist(c, 1) for c in cfg.boundary)
        + r.word.letters[pos + 2:]
    )
    return PositiveRelator(Word(letters, r.genus), r.trail + (LanternStep("backward", pos),))
