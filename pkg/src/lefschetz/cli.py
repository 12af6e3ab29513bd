"""Command line front end: construct, invariants, verify, geography, bounds.

Exit codes form a stable contract: 0 on success, 1 when a verification check
fails, 2 on usage, parameter, or parse errors.  All output is deterministic
for fixed inputs; rationals travel as {num, den} in lowest terms.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import constructions as cons
from .invariants import (
    InvariantLedger,
    LedgerError,
    derive,
    fraction_decimal,
    replay_trail,
    to_json_dict,
)
from .substitution import LanternConfig, config_matrix_check
from .surface import standard_atlas
from .words import Base, ParseError, PositiveRelator, parse, serialize, sp_image


class UsageError(Exception):
    pass


def _fraction_json(f: Fraction | None) -> dict | None:
    return None if f is None else {"num": f.numerator, "den": f.denominator}


def _parse_range(text: str, what: str) -> range:
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
    else:
        lo_s = hi_s = text
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise UsageError(f"bad {what} range {text!r}; use A..B or a single integer") from None
    if lo > hi:
        raise UsageError(f"empty {what} range {text!r}")
    return range(lo, hi + 1)


# ---------------------------------------------------------------------------
# construct


def _record_json(record: cons.FamilyRecord, embed_relator: bool) -> dict:
    inv = derive(record.ledger)
    return {
        "family": record.family,
        "g": record.g,
        "m": record.m,
        "l": record.l,
        "invariants": to_json_dict(inv),
        "lambda_decimal": None if inv.slope is None else fraction_decimal(inv.slope),
        "claims": record.claims.to_json_dict(),
        "relator": serialize(record.relator) if embed_relator and record.relator else None,
    }


def cmd_construct(args) -> int:
    family = args.family
    if family in ("hg", "rg") and (args.m is not None or args.l is not None):
        raise UsageError(f"family {family} takes no --m or --l")
    if family == "hg":
        record = cons.record_hg(args.g)
    elif family == "rg":
        record = cons.record_rg(args.g)
    elif family == "X":
        record = cons.family_X(args.g, args.m if args.m is not None else 0,
                               args.l if args.l is not None else 1)
    else:
        record = cons.family_Y(args.g, args.m if args.m is not None else 1,
                               args.l if args.l is not None else 1)
    if args.emit_relator:
        with open(args.emit_relator, "w", encoding="utf-8") as fh:
            fh.write(serialize(record.relator))
    print(json.dumps(_record_json(record, args.embed_relator), indent=2))
    return 0


# ---------------------------------------------------------------------------
# invariants


def cmd_invariants(args) -> int:
    ledger = InvariantLedger(args.g, args.n, args.sigma, -4 * (args.g - 1) + args.n,
                             ("cli",))
    inv = derive(ledger)
    print(json.dumps(to_json_dict(inv), indent=2))
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    try:
        with open(args.relator_file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    parsed = parse(text)
    word = parsed.word if isinstance(parsed, PositiveRelator) else parsed

    run_sp = args.sp or not (args.ledger or args.lantern)
    failed = False

    if run_sp:
        matrix = sp_image(word)
        if matrix is None:
            print("sp: unknown")
        elif matrix == matrix.identity(word.genus):
            print("sp: identity")
        else:
            print("sp: non-identity")
            failed = True

    if args.ledger:
        if not isinstance(parsed, PositiveRelator):
            raise UsageError("ledger checks apply to positive relators only")
        if args.sigma is None:
            raise UsageError("--ledger on a relator file needs --sigma (files carry no signature)")
        try:
            ledger = replay_trail(parsed.trail, seed_sigma=args.sigma)
            inv = derive(ledger)
        except LedgerError as exc:
            print(f"ledger: corrupt ({exc})")
            failed = True
        else:
            flags = inv.bounds
            print(f"ledger: g={ledger.g} n={ledger.n} sigma={ledger.sigma} e={ledger.euler}")
            print("ledger: euler identity ok (e = -4(g-1)+n)")
            for name, ok in (
                ("chi_f >= 0", flags.chi_f_nonnegative),
                ("Kf2 >= 4g-4", flags.kf2_at_least_4g_minus_4),
                ("slope <= 10", flags.slope_at_most_10),
            ):
                print(f"ledger: bound {name}: {'ok' if ok else 'VIOLATED'}")
            if not flags.all_ok():
                failed = True

    if args.lantern:
        names = [n.strip() for n in args.lantern.split(",")]
        if len(names) != 7:
            raise UsageError("--lantern needs seven comma-separated curve names (4 boundary + 3 interior)")
        atlas = standard_atlas(word.genus)
        for n in names:
            if n not in atlas:
                raise UsageError(f"unknown atlas curve {n!r}")
        cfg = LanternConfig(tuple(Base(n) for n in names[:4]),
                            tuple(Base(n) for n in names[4:]))
        verdict = config_matrix_check(cfg, atlas)
        if verdict is True:
            print("lantern: identity")
        elif verdict is None:
            print("lantern: unknown")
        else:
            print("lantern: non-identity")
            failed = True

    return 1 if failed else 0


# ---------------------------------------------------------------------------
# geography


_CSV_COLUMNS = ["g", "family", "m", "l", "n", "sigma", "euler", "K2", "chi_h",
                "chi_f", "Kf2", "lambda_num", "lambda_den", "pairing", "slope", "rohlin"]


def _geography_rows(families, gs, ms, ls):
    for family in ("hg", "rg", "X", "Y"):
        if family not in families:
            continue
        for g in gs:
            if family == "hg":
                if g >= 2:
                    yield cons.record_hg(g, with_relator=False)
            elif family == "rg":
                if g >= 3:
                    yield cons.record_rg(g, with_relator=False)
            elif family == "X":
                if g >= 3:
                    for m in ms:
                        if m < 0:
                            continue
                        for l in ls:
                            if l >= 1:
                                yield cons.family_X(g, m, l, with_relator=False)
            else:
                if g >= 3:
                    for m in ms:
                        if m < 1:
                            continue
                        for l in ls:
                            if l >= 1:
                                yield cons.family_Y(g, m, l, with_relator=False)


def _row_dict(record: cons.FamilyRecord) -> dict:
    inv = derive(record.ledger)
    return {
        "g": record.g,
        "family": record.family,
        "m": record.m,
        "l": record.l,
        "n": inv.n,
        "sigma": inv.sigma,
        "euler": inv.euler,
        "K2": inv.K2,
        "chi_h": inv.chi_h,
        "chi_f": inv.chi_f,
        "Kf2": inv.Kf2,
        "lambda_num": None if inv.slope is None else inv.slope.numerator,
        "lambda_den": None if inv.slope is None else inv.slope.denominator,
        "pairing": inv.pairing,
        "slope": inv.slope_verdict.value,
        "rohlin": inv.rohlin_residue,
    }


def cmd_geography(args) -> int:
    families = [f.strip() for f in args.families.split(",")]
    for f in families:
        if f not in ("hg", "rg", "X", "Y"):
            raise UsageError(f"unknown family {f!r}")
    gs = _parse_range(args.g_range, "g")
    ms = _parse_range(args.m_range, "m")
    ls = _parse_range(args.l_range, "l")
    rows = [_row_dict(r) for r in _geography_rows(families, gs, ms, ls)]
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
        sys.stdout.write(buf.getvalue())
    return 0


# ---------------------------------------------------------------------------
# bounds


def cmd_bounds(args) -> int:
    chosen = [args.b1 is not None, args.k is not None]
    if sum(chosen) != 1:
        raise UsageError("choose exactly one of --b1 or --k")
    if args.b1 is not None:
        if args.fs or args.blowups is not None:
            raise UsageError("--fs/--blowups belong to the ruled case (--k)")
        rec = cons.b2plus1_bounds(args.g, args.b1, args.b2minus)
        payload = {
            "g": rec.g,
            "b1": rec.b1,
            "b2minus": rec.b2minus,
            "lambda": _fraction_json(rec.slope),
            "lambda_decimal": fraction_decimal(rec.slope),
            "lower": _fraction_json(rec.lower),
            "upper": _fraction_json(rec.upper),
            "constraints_ok": rec.constraints_ok,
        }
    else:
        if args.fs:
            if args.blowups is not None:
                raise UsageError("--fs computes its own blow-up count")
            rec = cons.fs_match(args.g, args.k)
        else:
            if args.blowups is None:
                raise UsageError("the ruled case needs --blowups or --fs")
            rec = cons.ruled_bounds(args.g, args.k, args.blowups)
        payload = {
            "g": rec.g,
            "k": rec.k,
            "blowups": rec.blowups,
            "lambda": _fraction_json(rec.slope),
            "lambda_decimal": fraction_decimal(rec.slope),
            "lower": _fraction_json(rec.lower),
            "upper": _fraction_json(rec.upper),
            "constraint_ok": rec.constraint_ok,
            "sharp": rec.sharp,
        }
    print(json.dumps(payload, indent=2))
    return 0


# ---------------------------------------------------------------------------
# wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefschetz",
        description="Exact calculus for Dehn-twist factorizations and their 4-manifold invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a family member and print its record")
    p.add_argument("family", choices=("hg", "rg", "X", "Y"))
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--emit-relator", metavar="FILE", help="write the relator text file")
    p.add_argument("--embed-relator", action="store_true",
                   help="include the relator text in the JSON record")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("invariants", help="derive invariants from (g, n, sigma)")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="check a relator file")
    p.add_argument("relator_file")
    p.add_argument("--sp", action="store_true",
                   help="check that the homology image is the identity matrix")
    p.add_argument("--ledger", action="store_true",
                   help="replay the ledger (needs --sigma) and report bound flags")
    p.add_argument("--sigma", type=int, help="signature for the ledger replay")
    p.add_argument("--lantern", metavar="D1,D2,D3,D4,X1,X2,X3",
                   help="check a lantern configuration of atlas curves")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("geography", help="sweep families and emit one row per member")
    p.add_argument("--families", default="hg,rg,X,Y")
    p.add_argument("--g-range", default="3..5")
    p.add_argument("--m-range", default="0..2")
    p.add_argument("--l-range", default="1..1")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_geography)

    p = sub.add_parser("bounds", help="slope bound calculators")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--b1", type=int, choices=(0, 2))
    p.add_argument("--b2minus", type=int, default=0)
    p.add_argument("--k", type=int)
    p.add_argument("--blowups", type=int)
    p.add_argument("--fs", action="store_true",
                   help="blow-up count attaining the ruled lower bound")
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, LedgerError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
