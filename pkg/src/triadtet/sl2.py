"""Finite-dimensional sl2 actions and equitable triples.

`make_vd` builds the irreducible (d+1)-dimensional action in the weight
basis; `equitable_from_standard` and `standard_from_equitable` convert
between the Chevalley presentation [h,e] = 2e, [h,f] = -2f, [e,f] = h and
the symmetric presentation whose three pairwise brackets all read
[X,Y] = 2X + 2Y.  Construction validates the defining relations, so holding
one of these objects is itself a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from triadtet.linalg import RMatrix, commutator, eigen_decompose


@dataclass(frozen=True, eq=False)
class Sl2Action:
    """Matrices h, e, f satisfying the Chevalley sl2 relations."""

    h: RMatrix
    e: RMatrix
    f: RMatrix

    def __post_init__(self) -> None:
        h, e, f = self.h, self.e, self.f
        if not (h.is_square() and h.rows == e.rows == f.rows):
            raise ValueError("h, e, f must be square matrices of equal size")
        if commutator(h, e) != 2 * e:
            raise ValueError("sl2 relation violated: [h,e] != 2e")
        if commutator(h, f) != -2 * f:
            raise ValueError("sl2 relation violated: [h,f] != -2f")
        if commutator(e, f) != h:
            raise ValueError("sl2 relation violated: [e,f] != h")

    @property
    def dimension(self) -> int:
        return self.h.rows


@dataclass(frozen=True, eq=False)
class EquitableTriple:
    """Matrices X, Y, Z with [X,Y] = 2X+2Y, [Y,Z] = 2Y+2Z, [Z,X] = 2Z+2X."""

    x: RMatrix
    y: RMatrix
    z: RMatrix

    def __post_init__(self) -> None:
        x, y, z = self.x, self.y, self.z
        if not (x.is_square() and x.rows == y.rows == z.rows):
            raise ValueError("X, Y, Z must be square matrices of equal size")
        for label, lhs, rhs in (
            ("[X,Y] != 2X+2Y", commutator(x, y), 2 * x + 2 * y),
            ("[Y,Z] != 2Y+2Z", commutator(y, z), 2 * y + 2 * z),
            ("[Z,X] != 2Z+2X", commutator(z, x), 2 * z + 2 * x),
        ):
            if lhs != rhs:
                raise ValueError(f"equitable relation violated: {label}")

    @property
    def dimension(self) -> int:
        return self.x.rows


def make_vd(d: int) -> Sl2Action:
    """The irreducible sl2 action on a (d+1)-dimensional space.

    In the weight basis v_0, ..., v_d: h v_i = (d-2i) v_i,
    f v_i = (i+1) v_{i+1}, e v_i = (d-i+1) v_{i-1}.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    n = d + 1
    h = RMatrix.diagonal([d - 2 * i for i in range(n)])
    f_rows = [[0] * n for _ in range(n)]
    e_rows = [[0] * n for _ in range(n)]
    for i in range(d):
        f_rows[i + 1][i] = i + 1
        e_rows[i][i + 1] = d - i
    return Sl2Action(h=h, e=RMatrix(e_rows), f=RMatrix(f_rows))


def equitable_from_standard(action: Sl2Action) -> EquitableTriple:
    """Convert h, e, f to the symmetric triple X = 2e - h, Y = -2f - h, Z = h."""
    return EquitableTriple(
        x=2 * action.e - action.h,
        y=-2 * action.f - action.h,
        z=action.h,
    )


def standard_from_equitable(triple: EquitableTriple) -> Sl2Action:
    """Convert X, Y, Z back to h = Z, e = (X+Z)/2, f = -(Y+Z)/2."""
    half = Fraction(1, 2)
    return Sl2Action(
        h=triple.z,
        e=half * (triple.x + triple.z),
        f=-half * (triple.y + triple.z),
    )


def segregation(h: RMatrix) -> str:
    """Parity class of a diagonalizable integer spectrum: even, odd, or mixed."""
    decomp = eigen_decompose(h)
    if not decomp.diagonalizable:
        raise ValueError("segregation needs a diagonalizable matrix")
    parities = set()
    for value in decomp.eigenvalues:
        if value.denominator != 1:
            raise ValueError(f"eigenvalue {value} is not an integer")
        parities.add(value.numerator % 2)
    if parities == {0}:
        return "even"
    if parities == {1}:
        return "odd"
    return "mixed"
