"""Genus-g curve atlas: integer homology, intersection form, twist matrices.

Curve classes live in Z^{2g} with symplectic basis a1, b1, ..., ag, bg.  A
Dehn twist about a curve with class c acts on homology by the transvection
x -> x + <x, c> c; the resulting integer matrices preserve the intersection
form and serve as the oracle used everywhere else to certify that a word of
twists acts trivially on homology.

The standard atlas names a chain c1, ..., c_{2g+1} whose consecutive classes
pair to +-1 and, for genus >= 3, the four-holed-sphere curves x1, x2, x3, y.
Classes for the latter are pinned by a sign search so that the twist word
about (c1, c3, c5, y) and the one about (x1, x2, x3) induce the same matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd


@dataclass(frozen=True)
class HomologyClass:
    """Integer vector in the basis a1, b1, ..., ag, bg."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) % 2 != 0:
            raise ValueError("homology vector must have even length")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def genus(self) -> int:
        return len(self.coeffs) // 2

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_primitive(self) -> bool:
        """True when the gcd of the coefficients is 1."""
        d = 0
        for c in self.coeffs:
            d = gcd(d, c)
        return d == 1

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("length mismatch")
        return HomologyClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        return self + (-other)

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(tuple(-c for c in self.coeffs))

    def __rmul__(self, k: int) -> "HomologyClass":
        return HomologyClass(tuple(k * c for c in self.coeffs))

    def __repr__(self):
        return f"HomologyClass({list(self.coeffs)})"


def zero_class(g: int) -> HomologyClass:
    return HomologyClass((0,) * (2 * g))


def basis_class(g: int, kind: str, i: int) -> HomologyClass:
    """The basis vector a_i or b_i (1-indexed) on a genus-g surface."""
    if kind not in ("a", "b") or not 1 <= i <= g:
        raise ValueError(f"no basis vector {kind}{i} at genus {g}")
    v = [0] * (2 * g)
    v[2 * (i - 1) + (0 if kind == "a" else 1)] = 1
    return HomologyClass(tuple(v))


def intersection(u: HomologyClass, v: HomologyClass) -> int:
    """Algebraic intersection number <u, v> = sum(u_ai*v_bi - u_bi*v_ai)."""
    if len(u.coeffs) != len(v.coeffs):
        raise ValueError("length mismatch")
    total = 0
    for i in range(0, len(u.coeffs), 2):
        total += u.coeffs[i] * v.coeffs[i + 1] - u.coeffs[i + 1] * v.coeffs[i]
    return total


def is_separating(c: HomologyClass) -> bool:
    """Homological separation test: a separating curve has zero class."""
    return c.is_zero()


@dataclass(frozen=True)
class SymplecticMatrix:
    """2g x 2g integer matrix acting on column vectors of HomologyClass."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n % 2 != 0 or any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square of even size")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def genus(self) -> int:
        return len(self.rows) // 2

    @classmethod
    def identity(cls, g: int) -> "SymplecticMatrix":
        n = 2 * g
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def standard_form(cls, g: int) -> "SymplecticMatrix":
        """The pairing matrix J with J[a_i, b_i] = 1, J[b_i, a_i] = -1."""
        n = 2 * g
        rows = [[0] * n for _ in range(n)]
        for i in range(g):
            rows[2 * i][2 * i + 1] = 1
            rows[2 * i + 1][2 * i] = -1
        return cls(tuple(tuple(r) for r in rows))

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        cols = tuple(zip(*other.rows))
        return SymplecticMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            )
        )

    def transpose(self) -> "SymplecticMatrix":
        return SymplecticMatrix(tuple(zip(*self.rows)))

    def apply(self, x: HomologyClass) -> HomologyClass:
        if len(x.coeffs) != self.dim:
            raise ValueError("dimension mismatch")
        return HomologyClass(
            tuple(sum(a * b for a, b in zip(row, x.coeffs)) for row in self.rows)
        )

    def is_symplectic(self) -> bool:
        j = SymplecticMatrix.standard_form(self.genus)
        return self.transpose() @ j @ self == j

    def inverse(self) -> "SymplecticMatrix":
        """Inverse via M^-1 = J^-1 M^T J, valid exactly when M preserves J."""
        j = SymplecticMatrix.standard_form(self.genus)
        jinv = SymplecticMatrix(tuple(tuple(-e for e in row) for row in j.rows))
        return jinv @ self.transpose() @ j

    def __repr__(self):
        return f"SymplecticMatrix({[list(r) for r in self.rows]})"


@lru_cache(maxsize=None)
def transvection_matrix(c: HomologyClass) -> SymplecticMatrix:
    """Matrix of the twist x -> x + <x, c> c.

    Depends on c only up to sign and fixes c itself.  The zero class gives
    the identity, matching the trivial homology action of a twist about a
    separating curve.
    """
    n = len(c.coeffs)
    # <x, c> = (Jc)^T x with the convention above, hence T = I + c (Jc)^T.
    jc = SymplecticMatrix.standard_form(n // 2).apply(c)
    return SymplecticMatrix(
        tuple(
            tuple((1 if r == k else 0) + c.coeffs[r] * jc.coeffs[k] for k in range(n))
            for r in range(n)
        )
    )


@dataclass(frozen=True)
class SurfaceAtlas:
    """Named curves on a closed genus-g surface with their homology classes.

    Besides the standard names an atlas may carry opaque curve symbols; these
    have class None and every homology computation involving them degrades to
    an unknown (None) result.
    """

    genus: int
    curves: tuple[tuple[str, HomologyClass | None], ...]

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError("genus must be at least 2")

    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.curves)

    def __contains__(self, name: str) -> bool:
        return any(n == name for n, _ in self.curves)

    def class_of(self, name: str) -> HomologyClass | None:
        for n, cls in self.curves:
            if n == name:
                return cls
        raise KeyError(f"unknown curve name {name!r}")

    def with_opaque(self, name: str, klass: HomologyClass | None = None) -> "SurfaceAtlas":
        if name in self:
            raise ValueError(f"curve name {name!r} already present")
        if klass is not None and len(klass.coeffs) != 2 * self.genus:
            raise ValueError("class length does not match atlas genus")
        return SurfaceAtlas(self.genus, self.curves + ((name, klass),))


def _chain_classes(g: int) -> list[HomologyClass]:
    """Classes of c1..c_{2g+1}: [c_{2i}] = b_i, [c_{2i-1}] = a_{i-1} + a_i."""
    out = []
    zero = zero_class(g)
    for k in range(1, 2 * g + 2):
        if k % 2 == 0:
            out.append(basis_class(g, "b", k // 2))
        else:
            i = (k + 1) // 2
            prev = basis_class(g, "a", i - 1) if i - 1 >= 1 else zero
            this = basis_class(g, "a", i) if i <= g else zero
            out.append(prev + this)
    return out


def _pin_lantern_classes(g: int, chain: list[HomologyClass]) -> dict[str, HomologyClass]:
    """Sign-search x1, x2, x3, y so the two sides of the lantern word agree.

    Candidates are signed sums of [c1], [c3], [c5]; the first sign assignment
    whose boundary product T(c1)T(c3)T(c5)T(y) equals the interior product
    T(x1)T(x2)T(x3) wins.  Iteration starts at the all-plus choice, which is
    the one realised by the usual embedding of the four-holed sphere.
    """
    c1, c3, c5 = chain[0], chain[2], chain[4]
    boundary_fixed = (
        transvection_matrix(c1) @ transvection_matrix(c3) @ transvection_matrix(c5)
    )
    for s in itertools.product((1, -1), repeat=9):
        x1 = s[0] * c1 + s[1] * c3
        x2 = s[2] * c3 + s[3] * c5
        x3 = s[4] * c1 + s[5] * c5
        y = s[6] * c1 + s[7] * c3 + s[8] * c5
        lhs = boundary_fixed @ transvection_matrix(y)
        rhs = (
            transvection_matrix(x1)
            @ transvection_matrix(x2)
            @ transvection_matrix(x3)
        )
        if lhs == rhs:
            return {"x1": x1, "x2": x2, "x3": x3, "y": y}
    raise RuntimeError("no sign assignment satisfies the lantern identity")


@lru_cache(maxsize=None)
def standard_atlas(g: int) -> SurfaceAtlas:
    """Atlas with the chain c1..c_{2g+1} and, for g >= 3, x1, x2, x3, y."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    chain = _chain_classes(g)
    curves: list[tuple[str, HomologyClass | None]] = [
        (f"c{k}", cls) for k, cls in enumerate(chain, start=1)
    ]
    if g >= 3:
        pinned = _pin_lantern_classes(g, chain)
        curves.extend((name, pinned[name]) for name in ("x1", "x2", "x3", "y"))
    atlas = SurfaceAtlas(g, tuple(curves))
    _check_atlas(atlas, chain)
    return atlas


def _check_atlas(atlas: SurfaceAtlas, chain: list[HomologyClass]) -> None:
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            pairing = intersection(chain[i], chain[j])
            expected = 1 if j == i + 1 else 0
            if abs(pairing) != expected:
                raise RuntimeError(f"chain pairing broken at c{i + 1}, c{j + 1}")
    for name, cls in atlas.curves:
        if cls is not None and not (cls.is_zero() or cls.is_primitive()):
            raise RuntimeError(f"atlas class for {name} is imprimitive")
