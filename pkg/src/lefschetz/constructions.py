"""Builders for the small-slope relator families and the slope-bound calculators.

The pipeline: start from the genus-g chain relator (8g+4 twists on the slope
line), fiber-sum three conjugated copies whose leading twists are about x1,
x2, x3, Hurwitz-shuffle those twists to the front, and trade them backward
through the lantern for the boundary quadruple.  The result drops the slope
strictly below 4 - 4/g.  Fiber sums with further chain copies and iterating
the whole pipeline give the two parametrised families.

Conjugators come in two flavours: opaque symbols PHI1..PHI3 declared to carry
c1 to x1..x3 (default, homology image unknown, ledger still exact) or
concrete twist words found by a bidirectional breadth-first search over the
transvection action (classes then stay fully known, so every step can be
checked against the matrix oracle).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .invariants import (
    DerivedInvariants,
    InvariantLedger,
    derive,
    ledger_fiber_sum,
    ledger_lantern,
    ledger_move,
    replay_trail,
    seed_hg,
)
from .substitution import LanternConfig, lantern_backward, standard_config
from .surface import HomologyClass, standard_atlas
from .words import (
    Base,
    OpaqueMap,
    PositiveRelator,
    Seed,
    Twist,
    Word,
    conjugate,
    fiber_sum,
    hurwitz_left,
    sp_image,
)


# ---------------------------------------------------------------------------
# chain relator


@lru_cache(maxsize=None)
def chain_relator(g: int) -> PositiveRelator:
    """(t_c1 t_c2 ... t_c_{2g+1}^2 ... t_c2 t_c1)^2, a relator of 8g+4 twists."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    ascent = [f"c{k}" for k in range(1, 2 * g + 2)]
    half = ascent + ascent[::-1]
    twists = tuple(Twist(Base(name), 1) for name in half * 2)
    ledger = seed_hg(g)
    seed = Seed("chain", g, len(twists), ledger.sigma, ledger.euler)
    return PositiveRelator(Word(twists, g), (seed,))


# ---------------------------------------------------------------------------
# conjugating words


def _neighbours(state: tuple[int, ...], generators, forward: bool):
    """Transvection moves applicable to a homology vector, skipping fixed points."""
    for name, power, cls in generators:
        pairing = 0
        for i in range(0, len(state), 2):
            pairing += state[i] * cls[i + 1] - state[i + 1] * cls[i]
        if pairing == 0:
            continue
        step = pairing * power
        new = tuple(v + step * c for v, c in zip(state, cls))
        yield (name, power if forward else -power), new


def _transvection_path(g: int, start: HomologyClass, target: HomologyClass,
                       depth: int) -> list[tuple[str, int]] | None:
    """Bidirectional BFS for a twist word carrying start to +-target.

    Returns the letters in word order (leftmost acts last) or None when no
    word of at most `depth` twists exists among twists about atlas curves.
    """
    atlas = standard_atlas(g)
    generators = [
        (name, power, cls.coeffs)
        for name, cls in atlas.curves
        if cls is not None and not cls.is_zero()
        for power in (1, -1)
    ]
    s0 = start.coeffs
    targets = {target.coeffs, tuple(-c for c in target.coeffs)}
    if s0 in targets:
        return []

    # forward[v] = moves applied in order taking start to v;
    # backward[v] = moves (already inverted) rebuilding target from v.
    forward: dict[tuple[int, ...], tuple] = {s0: ()}
    backward: dict[tuple[int, ...], tuple] = {t: () for t in targets}
    f_frontier, b_frontier = deque(forward), deque(backward)
    f_depth = b_depth = 0

    def meet(v):
        # Backward letters are stored pre-inverted in target-first order, so
        # the word reads: backward path, then the forward path reversed
        # (rightmost letter acts first).
        return list(backward[v]) + list(reversed(forward[v]))

    while f_depth + b_depth < depth and (f_frontier or b_frontier):
        expand_forward = len(f_frontier) <= len(b_frontier) and f_depth * 2 < depth
        if not f_frontier:
            expand_forward = False
        if not b_frontier:
            expand_forward = True
        table, frontier = (forward, f_frontier) if expand_forward else (backward, b_frontier)
        other = backward if expand_forward else forward
        next_frontier = deque()
        while frontier:
            state = frontier.popleft()
            path = table[state]
            for move, new in _neighbours(state, generators, expand_forward):
                if new in table:
                    continue
                table[new] = path + (move,)
                if new in other:
                    return meet(new)
                next_frontier.append(new)
        if expand_forward:
            f_frontier, f_depth = next_frontier, f_depth + 1
        else:
            b_frontier, b_depth = next_frontier, b_depth + 1
    return None


def opaque_conjugator(g: int, i: int) -> Word:
    """The opaque symbol PHIi declared to carry c1 to xi."""
    if not 1 <= i <= 3:
        raise ValueError("lantern interior index must be 1, 2 or 3")
    return Word((OpaqueMap(f"PHI{i}", ("c1", f"x{i}")),), g)


@lru_cache(maxsize=None)
def conjugating_word(g: int, i: int, depth: int = 8) -> Word:
    """A word whose homology action carries [c1] to +-[xi].

    Found by bidirectional breadth-first search over words of atlas twists of
    at most `depth` letters; when the search fails, the opaque fallback
    PHIi (with its declared curve mapping and unknown matrix) is returned.
    """
    if g < 3:
        raise ValueError("the curves x1, x2, x3 need genus at least 3")
    if not 1 <= i <= 3:
        raise ValueError("lantern interior index must be 1, 2 or 3")
    atlas = standard_atlas(g)
    path = _transvection_path(g, atlas.class_of("c1"), atlas.class_of(f"x{i}"), depth)
    if path is None:
        return opaque_conjugator(g, i)
    word = Word(tuple(Twist(Base(name), power) for name, power in path), g)
    image = sp_image(word, atlas).apply(atlas.class_of("c1"))
    if image not in (atlas.class_of(f"x{i}"), -atlas.class_of(f"x{i}")):
        raise RuntimeError("search postcondition failed: word does not carry [c1] to [xi]")
    return word


# ---------------------------------------------------------------------------
# the small-slope pipeline


def build_r_prime(g: int, concrete: bool = False, depth: int = 8) -> PositiveRelator:
    """Fiber sum of three conjugated chain relators, 24g+12 twists in all.

    Each summand is the chain relator conjugated so that its first twist is
    about (a curve with the class of) x1, x2, x3 respectively.
    """
    if g < 3:
        raise ValueError("genus must be at least 3")
    h = chain_relator(g)
    phis = [
        conjugating_word(g, i, depth) if concrete else opaque_conjugator(g, i)
        for i in (1, 2, 3)
    ]
    r1, r2, r3 = (conjugate(h, phi) for phi in phis)
    return fiber_sum(fiber_sum(r1, r2), r3)


def front_shuffle(r: PositiveRelator, targets: tuple[int, int, int]) -> PositiveRelator:
    """Hurwitz-carry the twists at the target positions to positions 1, 2, 3.

    The first target must already sit at position 1; the other two ride left
    one slot at a time, wrapping every twist they pass in the inverse-twist
    image.  Length and ledger are untouched.
    """
    t1, t2, t3 = targets
    if t1 != 1 or not (1 < t2 < t3 <= r.n):
        raise ValueError(f"malformed shuffle targets {targets} for {r.n} twists")
    for pos in range(t2, 2, -1):
        r = hurwitz_left(r, pos - 1)
    for pos in range(t3, 3, -1):
        r = hurwitz_left(r, pos - 1)
    return r


def build_rg(g: int, concrete: bool = False, depth: int = 8) -> PositiveRelator:
    """The small-slope relator (t_c1 t_c3 t_c5 t_y) W with 24g+13 twists.

    Shuffles the three leading-block twists of the triple fiber sum to the
    front and applies a backward lantern substitution there.
    """
    if g < 3:
        raise ValueError("genus must be at least 3")
    n_block = 8 * g + 4
    r_prime = build_r_prime(g, concrete, depth)
    shuffled = front_shuffle(r_prime, (1, n_block + 1, 2 * n_block + 1))
    atlas = standard_atlas(g)
    leading = tuple(t.curve for t in shuffled.word.letters[:3])
    cfg = standard_config(atlas)
    if leading != cfg.interior:
        cfg = LanternConfig(cfg.boundary, leading)
    return lantern_backward(shuffled, 1, cfg)


@lru_cache(maxsize=None)
def _build_rg_cached(g: int) -> PositiveRelator:
    return build_rg(g)


# ---------------------------------------------------------------------------
# family records


@dataclass(frozen=True)
class Claims:
    """Statements carried as cited metadata, never computed or asserted.

    None means no claim either way; notes flag parameter corners where the
    claim's status is left open.
    """

    simply_connected: bool | None = None
    minimal: bool | None = None
    nonspin: bool | None = None
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "simply_connected": self.simply_connected,
            "minimal": self.minimal,
            "nonspin": self.nonspin,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class FamilyRecord:
    """A constructed family member: parameters, relator, ledger, predictions."""

    family: str
    g: int
    m: int | None
    l: int | None
    relator: PositiveRelator | None
    ledger: InvariantLedger
    predicted: DerivedInvariants
    claims: Claims


def _repeat_fiber_sum_ledger(ledger: InvariantLedger, copies: int) -> InvariantLedger:
    out = ledger
    for _ in range(copies - 1):
        out = ledger_fiber_sum(out, ledger)
    return out


def _repeat_fiber_sum(r: PositiveRelator, copies: int) -> PositiveRelator:
    out = r
    for _ in range(copies - 1):
        out = fiber_sum(out, r)
    return out


def _rg_ledger(g: int) -> InvariantLedger:
    """Ledger of the small-slope relator, by rule arithmetic alone."""
    s = seed_hg(g)
    triple = ledger_fiber_sum(ledger_fiber_sum(ledger_move(s, "conjugate"),
                                               ledger_move(s, "conjugate")),
                              ledger_move(s, "conjugate"))
    return ledger_lantern(triple, "backward")


def _closed_form_prediction(g: int, n: int, sigma: int) -> DerivedInvariants:
    """Derived invariants recomputed from closed-form (n, sigma) alone."""
    return derive(InvariantLedger(g, n, sigma, -4 * (g - 1) + n, ("closed-form",)))


def record_hg(g: int, with_relator: bool = True) -> FamilyRecord:
    relator = chain_relator(g) if with_relator else None
    ledger = seed_hg(g)
    predicted = _closed_form_prediction(g, 8 * g + 4, -4 * (g + 1))
    claims = Claims(simply_connected=True)
    return FamilyRecord("hg", g, None, None, relator, ledger, predicted, claims)


def record_rg(g: int, with_relator: bool = True) -> FamilyRecord:
    if g < 3:
        raise ValueError("genus must be at least 3")
    relator = _build_rg_cached(g) if with_relator else None
    ledger = replay_trail(relator.trail) if relator is not None else _rg_ledger(g)
    predicted = _closed_form_prediction(g, 24 * g + 13, -12 * (g + 1) - 1)
    claims = Claims(simply_connected=True, nonspin=True)
    return FamilyRecord("rg", g, None, None, relator, ledger, predicted, claims)


def family_X(g: int, m: int, l: int, with_relator: bool = True) -> FamilyRecord:
    """l-fold fiber sum of (small-slope relator) + m chain copies.

    Closed forms per copy: chi_f = (3+m) g and K_f^2 = (3+m)(4g-4) - 1, so the
    slope 4 - 4/g - 1/((m+3) g) does not depend on l.
    """
    if g < 3:
        raise ValueError("genus must be at least 3")
    if m < 0:
        raise ValueError("m must be nonnegative")
    if l < 1:
        raise ValueError("l must be at least 1: a 0-fold fiber sum has no total space")
    relator = None
    if with_relator:
        copy = _build_rg_cached(g)
        for _ in range(m):
            copy = fiber_sum(copy, chain_relator(g))
        relator = _repeat_fiber_sum(copy, l)
        ledger = replay_trail(relator.trail)
    else:
        copy = _rg_ledger(g)
        for _ in range(m):
            copy = ledger_fiber_sum(copy, seed_hg(g))
        ledger = _repeat_fiber_sum_ledger(copy, l)
    sigma = l * (-4 * (g + 1) * (m + 3) - 1)
    n = l * (24 * g + 13 + m * (8 * g + 4))
    predicted = _closed_form_prediction(g, n, sigma)
    notes = () if m >= 1 else ("minimality is stated only for (m, l) != (0, 0); m = 0 left unclaimed",)
    claims = Claims(
        simply_connected=True,
        minimal=True if m >= 1 else None,
        nonspin=True if l % 16 != 0 else None,
        notes=notes,
    )
    return FamilyRecord("X", g, m, l, relator, ledger, predicted, claims)


@lru_cache(maxsize=None)
def _pipeline_iterate(g: int, m: int) -> PositiveRelator:
    """m-th iterate: fiber-sum three conjugates, shuffle, lantern backward."""
    if m == 1:
        return chain_relator(g)
    prev = _pipeline_iterate(g, m - 1)
    n = prev.n
    parts = [conjugate(prev, opaque_conjugator(g, i)) for i in (1, 2, 3)]
    summed = fiber_sum(fiber_sum(parts[0], parts[1]), parts[2])
    shuffled = front_shuffle(summed, (1, n + 1, 2 * n + 1))
    return lantern_backward(shuffled, 1, standard_config(standard_atlas(g)))


def _pipeline_ledger(g: int, m: int) -> InvariantLedger:
    ledger = seed_hg(g)
    for _ in range(m - 1):
        triple = ledger_fiber_sum(ledger_fiber_sum(ledger, ledger), ledger)
        ledger = ledger_lantern(triple, "backward")
    return ledger


def family_Y(g: int, m: int, l: int, with_relator: bool = True) -> FamilyRecord:
    """l-fold fiber sum of the m-th pipeline iterate.

    Per copy: chi_f = 3^{m-1} g, K_f^2 = 3^{m-1}(4g-4) - (3^{m-1}-1)/2 and
    n obeys n_m = 3 n_{m-1} + 1 from the three-fold sum plus one lantern.
    """
    if g < 3:
        raise ValueError("genus must be at least 3")
    if m < 1:
        raise ValueError("m must be at least 1")
    if l < 1:
        raise ValueError("l must be at least 1: a 0-fold fiber sum has no total space")
    relator = None
    if with_relator:
        relator = _repeat_fiber_sum(_pipeline_iterate(g, m), l)
        ledger = replay_trail(relator.trail)
    else:
        ledger = _repeat_fiber_sum_ledger(_pipeline_ledger(g, m), l)
    p = 3 ** (m - 1)
    sigma = l * (p * (-4 * (g + 1)) - (p - 1) // 2)
    n_copy = (p * (8 * g + 4) * 2 + (p - 1)) // 2  # solves n_m = 3 n_{m-1} + 1
    predicted = _closed_form_prediction(g, l * n_copy, sigma)
    claims = Claims(
        simply_connected=True,
        minimal=True,
        nonspin=True if (m % 2 == 0 and l % 16 != 0) else None,
    )
    return FamilyRecord("Y", g, m, l, relator, ledger, predicted, claims)


def family_slope(family: str, g: int, m: int = 0) -> Fraction:
    """Closed-form slope of a family member (independent of l)."""
    if family == "hg":
        return Fraction(4 * g - 4, g)
    if family == "rg":
        return Fraction(12 * g - 13, 3 * g)
    if family == "X":
        return Fraction(4 * g - 4, g) - Fraction(1, (m + 3) * g)
    if family == "Y":
        return (Fraction(4 * g - 4, g) - Fraction(1, 2 * g)
                + Fraction(1, 2 * 3 ** (m - 1) * g))
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# slope bound calculators


@dataclass(frozen=True)
class SlopeBoundsRecord:
    """Slope with its bracket for a fibration with b_2^+ = 1, not ruled."""

    g: int
    b1: int
    b2minus: int
    slope: Fraction
    lower: Fraction
    upper: Fraction
    constraints_ok: bool


@dataclass(frozen=True)
class RuledBoundsRecord:
    """Slope data for a blown-up sphere bundle over a genus-k curve."""

    g: int
    k: int
    blowups: int
    slope: Fraction
    lower: Fraction
    upper: Fraction
    constraint_ok: bool
    sharp: bool = False


def b2plus1_bounds(g: int, b1: int, b2minus: int) -> SlopeBoundsRecord:
    """Slope bracket when b_2^+ = 1 and b_1 is 0 or 2.

    b1 = 0: chi_f = g, K_f^2 = 9 - b2minus + 8(g-1), bracket (4-4/g, 8+1/g);
    b1 = 2: chi_f = g-1, K_f^2 = 1 - b2minus + 8(g-1), bracket (4, 8).
    The bracket holds under the standing constraints K_f^2 >= 4(g-1) and, for
    b1 = 2, e >= 0 (i.e. b2minus >= 1); constraints_ok reports them.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    if b2minus < 0:
        raise ValueError("b2minus must be nonnegative")
    if b1 == 0:
        chi_f = g
        kf2 = 9 - b2minus + 8 * (g - 1)
        lower, upper = Fraction(4 * g - 4, g), Fraction(8 * g + 1, g)
        ok = kf2 >= 4 * (g - 1)
    elif b1 == 2:
        chi_f = g - 1
        kf2 = 1 - b2minus + 8 * (g - 1)
        lower, upper = Fraction(4), Fraction(8)
        ok = b2minus >= 1 and kf2 >= 4 * (g - 1)
    else:
        raise ValueError("b1 must be 0 or 2")
    return SlopeBoundsRecord(g, b1, b2minus, Fraction(kf2, chi_f), lower, upper, ok)


def ruled_bounds(g: int, k: int, blowups: int) -> RuledBoundsRecord:
    """Slope 8 - blowups/(g-k) for the blow-up of a sphere bundle over genus k.

    Valid fibrations obey 4(2k-g) + blowups <= 4, which pins the slope inside
    [4 + 4(k-1)/(g-k), 8].
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    if not 0 <= 2 * k <= g:
        raise ValueError("k must satisfy 0 <= k <= g/2")
    if blowups < 0:
        raise ValueError("blowups must be nonnegative")
    slope = 8 - Fraction(blowups, g - k)
    lower = 4 + Fraction(4 * (k - 1), g - k)
    return RuledBoundsRecord(
        g, k, blowups, slope, lower, Fraction(8),
        constraint_ok=4 * (2 * k - g) + blowups <= 4,
    )


def fs_match(g: int, k: int) -> RuledBoundsRecord:
    """The blow-up count whose genus-g fibration attains the ruled lower bound.

    Blowing up the sphere bundle over genus k exactly 4(g - 2k + 1) times
    carries a genus-(2k + m - 1) = g fibration sitting on the lower bound.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    if not 0 <= 2 * k <= g:
        raise ValueError("k must satisfy 0 <= 2k <= g")
    m = g - 2 * k + 1
    rec = ruled_bounds(g, k, 4 * m)
    if rec.slope != rec.lower:
        raise RuntimeError("sharpness arithmetic broke: slope != lower bound")
    return RuledBoundsRecord(g, k, 4 * m, rec.slope, rec.lower, rec.upper,
                             rec.constraint_ok, sharp=True)
