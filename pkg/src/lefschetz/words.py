"""Dehn-twist words, positive relators, their moves, and the text format.

A word is a finite sequence of letters, each either a twist about a curve
expression or an opaque mapping-class symbol.  Curve expressions are atlas
names, opaque curve symbols, or images of expressions under words; matching
everywhere is syntactic on normalised expressions (adjacent word/inverse
wrappers cancel), never homological.

The composition convention: in a word the rightmost letter acts first, so a
word letters (l1, ..., lk) has homology matrix M(l1) @ ... @ M(lk).

Relator text format (UTF-8, line oriented):

    genus <g>
    opaque <NAME> [maps <curve> -> <curve>] [class <2g integers>]
    T(<curve>) T(<curve>)^-1 ...

with Curve := IDENT | "img(" Word "; " Curve ")" and a Word inside img()
either a run of twists or a single opaque identifier.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .surface import HomologyClass, SurfaceAtlas, SymplecticMatrix, standard_atlas, transvection_matrix


class ParseError(ValueError):
    """Syntax or resolution failure, carrying a 1-indexed position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


# ---------------------------------------------------------------------------
# curve expressions and words


@dataclass(frozen=True)
class Base:
    """A named atlas curve."""

    name: str


@dataclass(frozen=True)
class OpaqueCurve:
    """A declared curve symbol, optionally with a known homology class."""

    name: str
    klass: HomologyClass | None = None


@dataclass(frozen=True)
class Image:
    """The image of a curve under a word, i.e. word applied as a mapping class."""

    word: "Word"
    base: "CurveExpr"


CurveExpr = Base | OpaqueCurve | Image


@dataclass(frozen=True)
class Twist:
    """A Dehn twist about a curve; power +1 is right handed, -1 its inverse."""

    curve: CurveExpr
    power: int = 1

    def __post_init__(self):
        if self.power not in (1, -1):
            raise ValueError("twist power must be +1 or -1")

    def inverse(self) -> "Twist":
        return Twist(self.curve, -self.power)


@dataclass(frozen=True)
class OpaqueMap:
    """An opaque mapping-class symbol, optionally with one declared curve image.

    sends = (u, v) records that the symbol carries atlas curve u to atlas
    curve v; image_of uses it to normalise Image(PHI, u) to v.
    """

    name: str
    sends: tuple[str, str] | None = None


Letter = Twist | OpaqueMap


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters on a genus-g surface."""

    letters: tuple[Letter, ...]
    genus: int

    def __len__(self):
        return len(self.letters)

    def is_twists_only(self) -> bool:
        return all(isinstance(l, Twist) for l in self.letters)

    def inverse(self) -> "Word":
        flipped = []
        for l in reversed(self.letters):
            if not isinstance(l, Twist):
                raise ValueError("opaque mapping symbols cannot be inverted")
            flipped.append(l.inverse())
        return Word(tuple(flipped), self.genus)

    def __mul__(self, other: "Word") -> "Word":
        if self.genus != other.genus:
            raise ValueError("genus mismatch")
        return Word(self.letters + other.letters, self.genus)


def empty_word(g: int) -> Word:
    return Word((), g)


def _reduce_twists(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    """Cancel adjacent twist/inverse pairs about syntactically equal curves."""
    out: list[Letter] = []
    for l in letters:
        if (
            out
            and isinstance(l, Twist)
            and isinstance(out[-1], Twist)
            and out[-1].curve == l.curve
            and out[-1].power == -l.power
        ):
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def image_of(word: Word, base: CurveExpr) -> CurveExpr:
    """Normalised image of a curve expression under a word.

    Empty words disappear, a declared opaque mapping applied to its source
    curve yields the target curve, and twist-word wrappers merge with (and
    cancel against) an inner twist-word wrapper.
    """
    if not word.letters:
        return base
    if len(word.letters) == 1 and isinstance(word.letters[0], OpaqueMap):
        sends = word.letters[0].sends
        if sends is not None and isinstance(base, Base) and base.name == sends[0]:
            return Base(sends[1])
    if isinstance(base, Image) and word.is_twists_only() and base.word.is_twists_only():
        merged = _reduce_twists(word.letters + base.word.letters)
        if not merged:
            return base.base
        return Image(Word(merged, word.genus), base.base)
    return Image(word, base)


# ---------------------------------------------------------------------------
# derivation trail


@dataclass(frozen=True)
class Seed:
    """Origin of a relator; sigma/euler may be unknown for parsed words."""

    name: str
    genus: int
    n: int
    sigma: int | None = None
    euler: int | None = None


@dataclass(frozen=True)
class Conjugated:
    by: Word


@dataclass(frozen=True)
class HurwitzMove:
    direction: str  # "left" | "right"
    position: int


@dataclass(frozen=True)
class FiberSummed:
    left: tuple = ()
    right: tuple = ()


@dataclass(frozen=True)
class LanternStep:
    direction: str  # "forward" | "backward"
    position: int


TrailStep = Seed | Conjugated | HurwitzMove | FiberSummed | LanternStep


@dataclass(frozen=True)
class PositiveRelator:
    """A word of right-handed twists together with how it was derived.

    The trail is provenance, not identity: two relators compare equal when
    their words do.  Nothing here checks that the word is trivial in the
    mapping class group; the trail is the certificate.
    """

    word: Word
    trail: tuple[TrailStep, ...] = field(compare=False, hash=False)

    def __post_init__(self):
        for l in self.word.letters:
            if not isinstance(l, Twist) or l.power != 1:
                raise ValueError("a positive relator contains right-handed twists only")
        if not self.trail:
            raise ValueError("derivation trail must be nonempty")

    @property
    def n(self) -> int:
        return len(self.word.letters)

    @property
    def genus(self) -> int:
        return self.word.genus

    @classmethod
    def from_word(
        cls, word: Word, label: str = "word", sigma: int | None = None
    ) -> "PositiveRelator":
        seed = Seed(label, word.genus, len(word.letters), sigma,
                    None if sigma is None else -4 * (word.genus - 1) + len(word.letters))
        return cls(word, (seed,))


# ---------------------------------------------------------------------------
# moves


def conjugate(r: PositiveRelator, phi: Word) -> PositiveRelator:
    """Replace every twist curve v by the image of v under phi."""
    if phi.genus != r.genus:
        raise ValueError("genus mismatch")
    twists = tuple(Twist(image_of(phi, t.curve), 1) for t in r.word.letters)
    return PositiveRelator(Word(twists, r.genus), r.trail + (Conjugated(phi),))


def hurwitz_left(r: PositiveRelator, i: int) -> PositiveRelator:
    """Replace the pair (t_u, t_v) at positions (i, i+1) by (t_v, t_{v^-1(u)}).

    Positions are 1-indexed with 1 <= i < n.
    """
    if not 1 <= i < r.n:
        raise IndexError(f"position {i} out of range for a word of {r.n} twists")
    letters = list(r.word.letters)
    u, v = letters[i - 1], letters[i]
    vinv = Word((v.inverse(),), r.genus)
    letters[i - 1] = v
    letters[i] = Twist(image_of(vinv, u.curve), 1)
    return PositiveRelator(Word(tuple(letters), r.genus), r.trail + (HurwitzMove("left", i),))


def hurwitz_right(r: PositiveRelator, i: int) -> PositiveRelator:
    """Replace the pair (t_u, t_v) at positions (i, i+1) by (t_{u(v)}, t_u)."""
    if not 1 <= i < r.n:
        raise IndexError(f"position {i} out of range for a word of {r.n} twists")
    letters = list(r.word.letters)
    u, v = letters[i - 1], letters[i]
    uword = Word((u,), r.genus)
    letters[i - 1] = Twist(image_of(uword, v.curve), 1)
    letters[i] = u
    return PositiveRelator(Word(tuple(letters), r.genus), r.trail + (HurwitzMove("right", i),))


def fiber_sum(r1: PositiveRelator, r2: PositiveRelator) -> PositiveRelator:
    """Concatenate two relators of the same genus."""
    if r1.genus != r2.genus:
        raise ValueError("genus mismatch")
    return PositiveRelator(r1.word * r2.word, (FiberSummed(r1.trail, r2.trail),))


# ---------------------------------------------------------------------------
# homology evaluation


def homology_of(c: CurveExpr, atlas: SurfaceAtlas) -> HomologyClass | None:
    """Class of a curve expression, or None when it cannot be computed."""
    if isinstance(c, Base):
        return atlas.class_of(c.name)
    if isinstance(c, OpaqueCurve):
        return c.klass
    m = sp_image(c.word, atlas)
    if m is None:
        return None
    inner = homology_of(c.base, atlas)
    if inner is None:
        return None
    return m.apply(inner)


def sp_image(w: Word, atlas: SurfaceAtlas | None = None) -> SymplecticMatrix | None:
    """Product of the letters' homology matrices, rightmost letter first.

    Returns None as soon as any letter involves an opaque symbol or a curve
    with unknown class.
    """
    if atlas is None:
        atlas = standard_atlas(w.genus)
    result = SymplecticMatrix.identity(w.genus)
    for l in w.letters:
        if isinstance(l, OpaqueMap):
            return None
        cls = homology_of(l.curve, atlas)
        if cls is None:
            return None
        m = transvection_matrix(cls)
        if l.power == -1:
            m = m.inverse()
        result = result @ m
    return result


# ---------------------------------------------------------------------------
# text format


_TOKEN_RE = re.compile(r"img\(|T\(|\^-1|[();]|[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class _Token:
    text: str
    line: int
    column: int


class _Decl:
    """Header declaration of an opaque name."""

    def __init__(self, sends: tuple[str, str] | None, klass: HomologyClass | None):
        self.sends = sends
        self.klass = klass


def _tokenize_body(lines: list[str], first_line_no: int) -> list[_Token]:
    tokens = []
    for offset, text in enumerate(lines):
        line_no = first_line_no + offset
        pos = 0
        for m in _TOKEN_RE.finditer(text):
            gap = text[pos:m.start()]
            if gap.strip():
                raise ParseError(f"unexpected character {gap.strip()[0]!r}", line_no, pos + 1)
            tokens.append(_Token(m.group(), line_no, m.start() + 1))
            pos = m.end()
        if text[pos:].strip():
            raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}", line_no, pos + 1)
    return tokens


class _BodyParser:
    def __init__(self, tokens: list[_Token], genus: int,
                 atlas: SurfaceAtlas, decls: dict[str, _Decl]):
        self.tokens = tokens
        self.pos = 0
        self.genus = genus
        self.atlas = atlas
        self.decls = decls

    def _peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self, expected: str | None = None) -> _Token:
        tok = self._peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else _Token("", 1, 1)
            raise ParseError(
                f"unexpected end of input{f', expected {expected!r}' if expected else ''}",
                last.line, last.column + len(last.text))
        if expected is not None and tok.text != expected:
            raise ParseError(f"expected {expected!r}, found {tok.text!r}", tok.line, tok.column)
        self.pos += 1
        return tok

    def parse_twists(self, stop_at_semicolon: bool = False) -> tuple[Twist, ...]:
        twists = []
        while True:
            tok = self._peek()
            if tok is None or (stop_at_semicolon and tok.text == ";"):
                break
            twists.append(self.parse_twist())
        return tuple(twists)

    def parse_twist(self) -> Twist:
        self._next("T(")
        curve = self.parse_curve()
        self._next(")")
        power = 1
        tok = self._peek()
        if tok is not None and tok.text == "^-1":
            self._next()
            power = -1
        return Twist(curve, power)

    def parse_curve(self) -> CurveExpr:
        tok = self._peek()
        if tok is not None and tok.text == "img(":
            self._next()
            word = self.parse_inner_word()
            self._next(";")
            base = self.parse_curve()
            self._next(")")
            return image_of(word, base)
        ident = self._next()
        return self._resolve_curve(ident)

    def parse_inner_word(self) -> Word:
        tok = self._peek()
        if tok is not None and tok.text == "T(":
            twists = self.parse_twists(stop_at_semicolon=True)
            if not twists:
                raise ParseError("empty word inside img()", tok.line, tok.column)
            return Word(twists, self.genus)
        ident = self._next()
        decl = self.decls.get(ident.text)
        if decl is None:
            raise ParseError(f"unknown opaque word {ident.text!r}", ident.line, ident.column)
        return Word((OpaqueMap(ident.text, decl.sends),), self.genus)

    def _resolve_curve(self, tok: _Token) -> CurveExpr:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok.text):
            raise ParseError(f"expected a curve name, found {tok.text!r}", tok.line, tok.column)
        if tok.text in self.atlas:
            return Base(tok.text)
        decl = self.decls.get(tok.text)
        if decl is not None:
            return OpaqueCurve(tok.text, decl.klass)
        raise ParseError(f"unknown curve name {tok.text!r}", tok.line, tok.column)


def _parse_header_opaque(parts: list[str], g: int, line_no: int) -> tuple[str, _Decl]:
    if len(parts) < 2:
        raise ParseError("opaque declaration needs a name", line_no, 1)
    name = parts[1]
    if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
        raise ParseError(f"bad opaque name {name!r}", line_no, 1)
    sends = None
    klass = None
    rest = parts[2:]
    while rest:
        if rest[0] == "maps":
            if len(rest) < 4 or rest[2] != "->":
                raise ParseError("maps clause must read: maps <curve> -> <curve>", line_no, 1)
            sends = (rest[1], rest[3])
            rest = rest[4:]
        elif rest[0] == "class":
            ints = rest[1:]
            rest = []
            try:
                coeffs = tuple(int(x) for x in ints)
            except ValueError:
                raise ParseError("class clause must list integers", line_no, 1) from None
            if len(coeffs) != 2 * g:
                raise ParseError(
                    f"genus mismatch: class has {len(coeffs)} coefficients, expected {2 * g}",
                    line_no, 1)
            klass = HomologyClass(coeffs)
        else:
            raise ParseError(f"unexpected token {rest[0]!r} in opaque declaration", line_no, 1)
    return name, _Decl(sends, klass)


def parse(text: str) -> PositiveRelator | Word:
    """Parse relator text; all-positive bodies come back as PositiveRelator."""
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx == len(lines):
        raise ParseError("missing 'genus <g>' header", 1, 1)
    head = lines[idx].split()
    if len(head) != 2 or head[0] != "genus":
        raise ParseError("first line must read 'genus <g>'", idx + 1, 1)
    try:
        g = int(head[1])
    except ValueError:
        raise ParseError(f"bad genus {head[1]!r}", idx + 1, len("genus ") + 1) from None
    if g < 2:
        raise ParseError("genus must be at least 2", idx + 1, len("genus ") + 1)
    atlas = standard_atlas(g)
    idx += 1

    decls: dict[str, _Decl] = {}
    while idx < len(lines):
        parts = lines[idx].split()
        if not parts or parts[0] != "opaque":
            break
        name, decl = _parse_header_opaque(parts, g, idx + 1)
        if name in atlas:
            raise ParseError(f"opaque name {name!r} collides with an atlas curve", idx + 1, 1)
        if name in decls:
            raise ParseError(f"duplicate opaque declaration {name!r}", idx + 1, 1)
        decls[name] = decl
        idx += 1

    tokens = _tokenize_body(lines[idx:], idx + 1)
    parser = _BodyParser(tokens, g, atlas, decls)
    twists = parser.parse_twists()
    if parser.pos != len(tokens):
        tok = parser.tokens[parser.pos]
        raise ParseError(f"unexpected token {tok.text!r}", tok.line, tok.column)
    word = Word(twists, g)
    if twists and all(t.power == 1 for t in twists):
        return PositiveRelator(word, (Seed("parsed", g, len(twists)),))
    return word


_TWISTS_PER_LINE = 8


def _collect_decls(letters: tuple[Letter, ...], decls: dict[str, _Decl]) -> None:
    for l in letters:
        if isinstance(l, OpaqueMap):
            known = decls.get(l.name)
            if known is None:
                decls[l.name] = _Decl(l.sends, None)
            elif known.sends is None:
                known.sends = l.sends
            elif l.sends is not None and known.sends != l.sends:
                raise ValueError(f"conflicting declarations for opaque word {l.name!r}")
        else:
            _collect_curve_decls(l.curve, decls)


def _collect_curve_decls(c: CurveExpr, decls: dict[str, _Decl]) -> None:
    if isinstance(c, OpaqueCurve):
        known = decls.get(c.name)
        if known is None:
            decls[c.name] = _Decl(None, c.klass)
        elif known.klass is None:
            known.klass = c.klass
        elif c.klass is not None and known.klass != c.klass:
            raise ValueError(f"conflicting classes for opaque curve {c.name!r}")
    elif isinstance(c, Image):
        _collect_decls(c.word.letters, decls)
        _collect_curve_decls(c.base, decls)


def _word_text(w: Word) -> str:
    if len(w.letters) == 1 and isinstance(w.letters[0], OpaqueMap):
        return w.letters[0].name
    if not w.is_twists_only():
        raise ValueError("a word inside img() is either twists or one opaque symbol")
    return " ".join(_twist_text(t) for t in w.letters)


def _curve_text(c: CurveExpr) -> str:
    if isinstance(c, (Base, OpaqueCurve)):
        return c.name
    return f"img({_word_text(c.word)}; {_curve_text(c.base)})"


def _twist_text(t: Twist) -> str:
    return f"T({_curve_text(t.curve)})" + ("^-1" if t.power == -1 else "")


def serialize(obj: PositiveRelator | Word) -> str:
    """Deterministic text for a relator or twist word (see module docstring)."""
    word = obj.word if isinstance(obj, PositiveRelator) else obj
    if not word.is_twists_only():
        raise ValueError("only twist words serialize; opaque letters appear inside img()")
    decls: dict[str, _Decl] = {}
    _collect_decls(word.letters, decls)
    lines = [f"genus {word.genus}"]
    for name in sorted(decls):
        decl = decls[name]
        parts = [f"opaque {name}"]
        if decl.sends is not None:
            parts.append(f"maps {decl.sends[0]} -> {decl.sends[1]}")
        if decl.klass is not None:
            parts.append("class " + " ".join(str(c) for c in decl.klass.coeffs))
        lines.append(" ".join(parts))
    twists = [_twist_text(t) for t in word.letters]
    for start in range(0, len(twists), _TWISTS_PER_LINE):
        lines.append(" ".join(twists[start:start + _TWISTS_PER_LINE]))
    return "\n".join(lines) + "\n"
