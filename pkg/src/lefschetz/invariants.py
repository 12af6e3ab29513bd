"""Exact invariant bookkeeping for positive relators over the 2-sphere.

A ledger holds the ambient 4-manifold data (g, n, sigma, e) and is only ever
changed by the move rules below: equivalence moves leave it alone, a fiber
sum adds signatures and Euler characteristics (plus the 4(g-1) gluing
correction), and a lantern substitution trades (sigma, e, n) by (+1, -1, -1)
forward and (-1, +1, +1) backward.  Everything derived from a ledger is
computed in integers and exact fractions; no floats anywhere in this module.

Derived quantities, all for fibrations over the sphere (base genus 0):

    K^2   = 3 sigma + 2 e          chi_h = (sigma + e) / 4
    chi_f = chi_h + (g - 1)        K_f^2 = K^2 + 8 (g - 1)
    slope = K_f^2 / chi_f          (undefined when chi_f = 0)

together with the pairing quantity (8g+4) chi_f - g n, whose sign matches
the slope inequality slope >= 4 - 4/g, and the signature residue mod 16
obstructing spin structures.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .words import Conjugated, FiberSummed, HurwitzMove, LanternStep, Seed, TrailStep


class LedgerError(ValueError):
    """An invariant ledger broke one of its integrality constraints."""


class SlopeVerdict(enum.Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    UNDEFINED = "undefined"


class RohlinVerdict(enum.Enum):
    NON_SPIN = "nonspin"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class InvariantLedger:
    """(g, n, sigma, e) with the provenance of every rule that produced it."""

    g: int
    n: int
    sigma: int
    euler: int
    provenance: tuple[str, ...] = field(default=(), compare=False, hash=False)

    def __post_init__(self):
        if self.g < 2:
            raise LedgerError("genus must be at least 2")
        if self.n < 0:
            raise LedgerError("twist count cannot be negative")
        if self.euler != -4 * (self.g - 1) + self.n:
            raise LedgerError(
                f"euler characteristic {self.euler} != -4(g-1)+n = {-4 * (self.g - 1) + self.n}"
            )


def seed_hg(g: int) -> InvariantLedger:
    """Ledger of the genus-g chain relator: (8g+4, -4(g+1), 4(g+2))."""
    if g < 2:
        raise LedgerError("genus must be at least 2")
    return InvariantLedger(g, 8 * g + 4, -4 * (g + 1), 4 * (g + 2), (f"seed:chain(g={g})",))


def ledger_move(ledger: InvariantLedger, move: str) -> InvariantLedger:
    """Conjugation and Hurwitz moves change nothing but the provenance."""
    return InvariantLedger(
        ledger.g, ledger.n, ledger.sigma, ledger.euler,
        ledger.provenance + (f"move:{move}",),
    )


def ledger_fiber_sum(l1: InvariantLedger, l2: InvariantLedger) -> InvariantLedger:
    """sigma adds, e adds with the 4(g-1) correction, n adds."""
    if l1.g != l2.g:
        raise LedgerError("genus mismatch")
    return InvariantLedger(
        l1.g, l1.n + l2.n, l1.sigma + l2.sigma,
        l1.euler + l2.euler + 4 * (l1.g - 1),
        (f"fiber_sum[{len(l1.provenance)}+{len(l2.provenance)} rules]",),
    )


def ledger_lantern(ledger: InvariantLedger, direction: str) -> InvariantLedger:
    """Forward: (sigma, e, n) += (+1, -1, -1); backward: (-1, +1, +1)."""
    if direction == "forward":
        ds, de, dn = 1, -1, -1
    elif direction == "backward":
        ds, de, dn = -1, 1, 1
    else:
        raise ValueError(f"unknown lantern direction {direction!r}")
    return InvariantLedger(
        ledger.g, ledger.n + dn, ledger.sigma + ds, ledger.euler + de,
        ledger.provenance + (f"lantern:{direction}",),
    )


@dataclass(frozen=True)
class BoundFlags:
    """Sanity bounds every honest fibration ledger satisfies; failures warn."""

    chi_f_nonnegative: bool
    kf2_at_least_4g_minus_4: bool
    slope_at_most_10: bool

    def all_ok(self) -> bool:
        return self.chi_f_nonnegative and self.kf2_at_least_4g_minus_4 and self.slope_at_most_10


@dataclass(frozen=True)
class DerivedInvariants:
    g: int
    n: int
    sigma: int
    euler: int
    K2: int
    chi_h: int
    chi_f: int
    Kf2: int
    slope: Fraction | None
    hodge_degree: int
    pairing: int
    slope_verdict: SlopeVerdict
    rohlin_residue: int
    bounds: BoundFlags


def slope_inequality(slope: Fraction | None, g: int) -> SlopeVerdict:
    """Exact comparison of the slope against 4 - 4/g."""
    if slope is None:
        return SlopeVerdict.UNDEFINED
    line = Fraction(4 * g - 4, g)
    return SlopeVerdict.HOLDS if slope >= line else SlopeVerdict.VIOLATED


def rohlin_nonspin(sigma: int) -> RohlinVerdict:
    """A spin closed 4-manifold has signature divisible by 16."""
    return RohlinVerdict.NON_SPIN if sigma % 16 != 0 else RohlinVerdict.INCONCLUSIVE


def hodge_pairing(chi_f: int, n: int, g: int) -> int:
    """(8g+4) d - g n with d the degree chi_f; nonnegative iff the slope holds."""
    return (8 * g + 4) * chi_f - g * n


def derive(ledger: InvariantLedger) -> DerivedInvariants:
    """All derived quantities of a ledger, every one an exact integer/fraction."""
    g, n, sigma, euler = ledger.g, ledger.n, ledger.sigma, ledger.euler
    if (sigma + euler) % 4 != 0:
        raise LedgerError(f"sigma + e = {sigma + euler} is not divisible by 4: corrupt ledger")
    k2 = 3 * sigma + 2 * euler
    chi_h = (sigma + euler) // 4
    chi_f = chi_h + (g - 1)
    kf2 = k2 + 8 * (g - 1)
    slope = Fraction(kf2, chi_f) if chi_f != 0 else None
    verdict = slope_inequality(slope, g)
    bounds = BoundFlags(
        chi_f_nonnegative=chi_f >= 0,
        kf2_at_least_4g_minus_4=kf2 >= 4 * g - 4,
        slope_at_most_10=(slope is None or slope <= 10),
    )
    return DerivedInvariants(
        g=g, n=n, sigma=sigma, euler=euler, K2=k2, chi_h=chi_h, chi_f=chi_f,
        Kf2=kf2, slope=slope, hodge_degree=chi_f,
        pairing=hodge_pairing(chi_f, n, g),
        slope_verdict=verdict, rohlin_residue=sigma % 16, bounds=bounds,
    )


def replay_trail(trail: tuple[TrailStep, ...], seed_sigma: int | None = None) -> InvariantLedger:
    """Rebuild a ledger by replaying a derivation trail.

    Seeds missing a signature (parsed files) need seed_sigma supplied; the
    override applies to every such seed encountered.
    """
    if not trail:
        raise LedgerError("empty derivation trail")
    first = trail[0]
    if isinstance(first, Seed):
        sigma = first.sigma if first.sigma is not None else seed_sigma
        if sigma is None:
            raise LedgerError(
                f"seed {first.name!r} carries no signature; supply one to replay its ledger")
        euler = first.euler if first.euler is not None else -4 * (first.genus - 1) + first.n
        ledger = InvariantLedger(first.genus, first.n, sigma, euler, (f"seed:{first.name}",))
    elif isinstance(first, FiberSummed):
        ledger = ledger_fiber_sum(
            replay_trail(first.left, seed_sigma), replay_trail(first.right, seed_sigma))
    else:
        raise LedgerError(f"trail must start with a seed or fiber sum, not {first!r}")
    for step in trail[1:]:
        if isinstance(step, Conjugated):
            ledger = ledger_move(ledger, "conjugate")
        elif isinstance(step, HurwitzMove):
            ledger = ledger_move(ledger, f"hurwitz_{step.direction}")
        elif isinstance(step, LanternStep):
            ledger = ledger_lantern(ledger, step.direction)
        else:
            raise LedgerError(f"unexpected trail step {step!r}")
    return ledger


# ---------------------------------------------------------------------------
# wire formats


def fraction_decimal(value: Fraction, places: int = 6) -> str:
    """Decimal rendering with round-half-away, computed in integers."""
    num, den = value.numerator, value.denominator
    sign = "-" if num < 0 else ""
    scaled = (abs(num) * 10**places * 2 + den) // (2 * den)
    whole, frac = divmod(scaled, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def to_json_dict(inv: DerivedInvariants) -> dict:
    """The ledger record: rationals as {num, den} in lowest terms, den > 0."""
    return {
        "g": inv.g,
        "n": inv.n,
        "sigma": inv.sigma,
        "euler": inv.euler,
        "K2": inv.K2,
        "chi_h": inv.chi_h,
        "chi_f": inv.chi_f,
        "Kf2": inv.Kf2,
        "lambda": None if inv.slope is None else {
            "num": inv.slope.numerator, "den": inv.slope.denominator},
        "pairing": inv.pairing,
        "slope": inv.slope_verdict.value,
        "rohlin": inv.rohlin_residue,
    }
