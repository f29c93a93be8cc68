"""Modules for the six-edge Lie presentation on four vertices.

A TetModule holds twelve generator matrices X_ij (i != j in {0,1,2,3}) with
X_ji = -X_ij built into the storage.  The defining relations are checked
exhaustively: 6 antisymmetry identities, 24 corner identities
[X_hi, X_ij] = 2 X_hi + 2 X_ij, and 24 Dolan-Grady identities
[X_hi, [X_hi, [X_hi, X_jk]]] = 4 [X_hi, X_jk].  Corner triads, face
triples, conforming spectra, and a sufficient irreducibility check give the
structural views used by the synthesis pipeline.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from triadtet.bdverify import TriadCertificate, verify_bd_triad
from triadtet.linalg import (
    RMatrix,
    commutator,
    eigen_decompose,
    generated_algebra_dimension,
)
from triadtet.sl2 import EquitableTriple

VERTICES = (0, 1, 2, 3)
CANONICAL_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


class NonConformingSpectrum(ValueError):
    """Some generator's spectrum is not {d, d-2, ..., -d} for a common d."""


class CornerTriadRefuted(ValueError):
    """A corner triad of a module failed bidiagonal-triad verification."""

    def __init__(self, vertex: int, refutation: object):
        self.vertex = vertex
        self.refutation = refutation
        super().__init__(f"corner triad at vertex {vertex}: {refutation}")


class TetModule:
    """Twelve generator matrices with antisymmetry built in.

    Construct from a mapping {(i, j): matrix}; keys may use either
    orientation, both orientations may be given when consistent, and all six
    edges must be covered.
    """

    __slots__ = ("_dim", "_gens")

    def __init__(self, generators: Mapping[tuple[int, int], RMatrix]):
        stored: dict[tuple[int, int], RMatrix] = {}
        dim = None
        for (i, j), m in generators.items():
            if i == j or i not in VERTICES or j not in VERTICES:
                raise ValueError(f"invalid edge ({i},{j})")
            if not m.is_square():
                raise ValueError(f"generator ({i},{j}) must be square")
            if dim is None:
                dim = m.rows
            elif m.rows != dim:
                raise ValueError("generators must act on the same space")
            key, value = ((i, j), m) if i < j else ((j, i), -m)
            if key in stored:
                if stored[key] != value:
                    raise ValueError(
                        f"generators for edge {key} given in both orientations "
                        "but not antisymmetric"
                    )
            else:
                stored[key] = value
        if set(stored) != set(CANONICAL_EDGES):
            missing = sorted(set(CANONICAL_EDGES) - set(stored))
            raise ValueError(f"missing generators for edges {missing}")
        self._dim = dim
        self._gens = stored

    @classmethod
    def zero(cls, dim: int) -> "TetModule":
        z = RMatrix.zero(dim, dim)
        return cls({edge: z for edge in CANONICAL_EDGES})

    @property
    def dim(self) -> int:
        return self._dim

    def gen(self, i: int, j: int) -> RMatrix:
        """Generator X_ij; the reversed orientation is negated on the fly."""
        if i == j or i not in VERTICES or j not in VERTICES:
            raise ValueError(f"invalid edge ({i},{j})")
        return self._gens[(i, j)] if i < j else -self._gens[(j, i)]

    @property
    def gens(self) -> dict[tuple[int, int], RMatrix]:
        """All twelve generators keyed by ordered vertex pair."""
        out = {}
        for i, j in itertools.permutations(VERTICES, 2):
            out[(i, j)] = self.gen(i, j)
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TetModule):
            return self._dim == other._dim and self._gens == other._gens
        return NotImplemented


@dataclass(frozen=True, eq=False)
class RelationReport:
    """Outcome of the exhaustive 54-relation check.

    violations holds (relation id, defect matrix) pairs in deterministic
    lexicographic order of the vertex tuples.
    """

    antisymmetry_ok: bool
    corner_ok: bool
    dolan_grady_ok: bool
    violations: tuple[tuple[str, RMatrix], ...]

    @property
    def passed(self) -> bool:
        return self.antisymmetry_ok and self.corner_ok and self.dolan_grady_ok

    def __bool__(self) -> bool:
        return self.passed


def verify_tet_relations(module: TetModule) -> RelationReport:
    """Check all 6 + 24 + 24 defining relations, collecting every violation."""
    violations = []

    anti_ok = True
    for i, j in CANONICAL_EDGES:
        defect = module.gen(i, j) + module.gen(j, i)
        if not defect.is_zero():
            anti_ok = False
            violations.append((f"antisymmetry ({i},{j})", defect))

    corner_ok = True
    for h, i, j in itertools.permutations(VERTICES, 3):
        xhi = module.gen(h, i)
        xij = module.gen(i, j)
        defect = commutator(xhi, xij) - 2 * xhi - 2 * xij
        if not defect.is_zero():
            corner_ok = False
            violations.append((f"corner ({h},{i},{j})", defect))

    dg_ok = True
    for h, i, j, k in itertools.permutations(VERTICES, 4):
        xhi = module.gen(h, i)
        inner = commutator(xhi, module.gen(j, k))
        defect = commutator(xhi, commutator(xhi, commutator(xhi, module.gen(j, k)))) - 4 * inner
        if not defect.is_zero():
            dg_ok = False
            violations.append((f"dolan-grady ({h},{i})x({j},{k})", defect))

    return RelationReport(
        antisymmetry_ok=anti_ok,
        corner_ok=corner_ok,
        dolan_grady_ok=dg_ok,
        violations=tuple(violations),
    )


def spectrum_diameter(module: TetModule) -> int:
    """The common d with every generator spectrum exactly {d-2i: 0 <= i <= d}.

    Raises NonConformingSpectrum when some generator is not diagonalizable
    or its eigenvalue set is not such a ladder, or when the ladders disagree.
    """
    diameters = set()
    for i, j in itertools.permutations(VERTICES, 2):
        decomp = eigen_decompose(module.gen(i, j))
        values = decomp.eigenvalues
        if not decomp.diagonalizable:
            raise NonConformingSpectrum(
                f"generator ({i},{j}) is not diagonalizable"
            )
        top = values[-1]
        if top.denominator != 1 or top < 0:
            raise NonConformingSpectrum(
                f"generator ({i},{j}) has top eigenvalue {top}"
            )
        d = top.numerator
        expected = tuple(Fraction(-d + 2 * k) for k in range(d + 1))
        if values != expected:
            raise NonConformingSpectrum(
                f"generator ({i},{j}) has spectrum "
                f"{tuple(map(str, values))}, not the ladder for d={d}"
            )
        diameters.add(d)
    if len(diameters) != 1:
        raise NonConformingSpectrum(
            f"generators disagree on the diameter: {sorted(diameters)}"
        )
    return diameters.pop()


def corner_triad(module: TetModule, u: int) -> tuple[RMatrix, RMatrix, RMatrix]:
    """The three generators pointing into vertex u, sources ascending."""
    if u not in VERTICES:
        raise ValueError(f"invalid vertex {u}")
    r, s, t = (v for v in VERTICES if v != u)
    return module.gen(r, u), module.gen(s, u), module.gen(t, u)


def face_triple(module: TetModule, h: int, i: int, j: int) -> EquitableTriple:
    """The cyclic generators X_hi, X_ij, X_jh of a face, as a validated triple."""
    if len({h, i, j}) != 3 or not {h, i, j} <= set(VERTICES):
        raise ValueError(f"invalid face ({h},{i},{j})")
    return EquitableTriple(
        x=module.gen(h, i), y=module.gen(i, j), z=module.gen(j, h)
    )


def irreducible_sufficient(module: TetModule) -> tuple[bool, int]:
    """Whether the generators provably act irreducibly, plus the algebra dim.

    Certifies via the full-matrix-algebra criterion: the unital algebra
    generated by the six canonical generators has dimension (dim V)^2 exactly
    when no proper nonzero invariant subspace exists.  A False flag means
    "not certified", never "reducible".
    """
    dim = generated_algebra_dimension(
        module.dim, [module.gen(i, j) for i, j in CANONICAL_EDGES]
    )
    return dim == module.dim ** 2, dim


def corner_triads_are_bd_triads(
    module: TetModule,
) -> tuple[TriadCertificate, TriadCertificate, TriadCertificate, TriadCertificate]:
    """Certify all four corner triads as reduced bidiagonal triads.

    Raises CornerTriadRefuted at the first corner whose triad fails
    verification or lands off the canonical eigenvalue sequences.
    """
    certificates = []
    for u in VERTICES:
        result = verify_bd_triad(*corner_triad(module, u))
        if not result:
            raise CornerTriadRefuted(u, result)
        if not result.reduced:
            raise CornerTriadRefuted(
                u, f"certified but with non-canonical sequences {result.sequences}"
            )
        certificates.append(result)
    return tuple(certificates)
