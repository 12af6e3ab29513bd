"""Exact calculus for Dehn-twist factorizations of surface mapping classes.

The package models positive relators (words of right-handed Dehn twists that
encode fibrations of 4-manifolds over the sphere), the moves that preserve
their diffeomorphism type, lantern substitutions, and the exact integer and
rational invariants the moves transform in known ways.
"""

from .surface import (
    HomologyClass,
    SurfaceAtlas,
    SymplecticMatrix,
    basis_class,
    intersection,
    is_separating,
    standard_atlas,
    transvection_matrix,
    zero_class,
)
from .words import (
    Base,
    Image,
    OpaqueCurve,
    OpaqueMap,
    ParseError,
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
    parse,
    serialize,
    sp_image,
)
from .substitution import (
    LanternConfig,
    config_matrix_check,
    lantern_backward,
    lantern_forward,
    standard_config,
)
from .invariants import (
    BoundFlags,
    DerivedInvariants,
    InvariantLedger,
    LedgerError,
    RohlinVerdict,
    SlopeVerdict,
    derive,
    fraction_decimal,
    hodge_pairing,
    ledger_fiber_sum,
    ledger_lantern,
    ledger_move,
    replay_trail,
    rohlin_nonspin,
    seed_hg,
    slope_inequality,
    to_json_dict,
)
from .constructions import (
    Claims,
    FamilyRecord,
    RuledBoundsRecord,
    SlopeBoundsRecord,
    b2plus1_bounds,
    build_r_prime,
    build_rg,
    chain_relator,
    conjugating_word,
    family_X,
    family_Y,
    family_slope,
    front_shuffle,
    fs_match,
    opaque_conjugator,
    record_hg,
    record_rg,
    ruled_bounds,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
