"""Exact-rational matrix documents and their JSON serialization.

Matrix entries travel as strings ("7", "-3/4") so the format itself
guarantees exactness; decimals never parse.  A triad document carries the
three matrices of a candidate triad, a module document carries the six
independent edge matrices of a candidate tetrahedron module (the other six
follow by antisymmetry).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from triadtet.linalg import RMatrix

ENTRY_RE = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?\Z")


class DocumentFormatError(ValueError):
    """A document or entry does not conform to the matrix-file format."""


def parse_rational(text: object) -> Fraction:
    """Parse an entry string; only "p" and "p/q" forms are accepted."""
    if not isinstance(text, str):
        raise DocumentFormatError(f"entry must be a string, got {text!r}")
    if ENTRY_RE.match(text) is None:
        raise DocumentFormatError(f"not an exact rational: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _parse_matrix(name: str, data: object, dim: int) -> RMatrix:
    if not isinstance(data, list):
        raise DocumentFormatError(f"{name}: expected an array of rows")
    if len(data) != dim:
        raise DocumentFormatError(
            f"{name}: expected {dim} rows, found {len(data)}"
        )
    rows = []
    for i, raw_row in enumerate(data):
        if not isinstance(raw_row, list):
            raise DocumentFormatError(f"{name}: row {i} is not an array")
        if len(raw_row) != dim:
            raise DocumentFormatError(
                f"{name}: row {i} has {len(raw_row)} entries, expected {dim}"
            )
        row = []
        for j, entry in enumerate(raw_row):
            try:
                row.append(parse_rational(entry))
            except DocumentFormatError as exc:
                raise DocumentFormatError(
                    f"{name}: row {i}, column {j}: {exc}"
                ) from None
        rows.append(row)
    return RMatrix(rows)


def _format_matrix(matrix: RMatrix) -> list[list[str]]:
    return [[format_rational(e) for e in row] for row in matrix.entries]


def _check_square(name: str, matrix: RMatrix, dim: int) -> None:
    if matrix.rows != dim or matrix.cols != dim:
        raise DocumentFormatError(
            f"{name}: expected a {dim}x{dim} matrix, got "
            f"{matrix.rows}x{matrix.cols}"
        )


@dataclass(frozen=True)
class TriadDocument:
    """Three named matrices of one candidate triad, plus free-form metadata."""

    dim: int
    a: RMatrix
    a_prime: RMatrix
    a_dprime: RMatrix
    metadata: dict | None = field(default=None)

    def __post_init__(self) -> None:
        for name, matrix in (
            ("A", self.a),
            ("Aprime", self.a_prime),
            ("Adprime", self.a_dprime),
        ):
            _check_square(name, matrix, self.dim)

    def matrices(self) -> tuple[RMatrix, RMatrix, RMatrix]:
        return (self.a, self.a_prime, self.a_dprime)

    def to_json_dict(self) -> dict:
        out = {
            "dim": self.dim,
            "A": _format_matrix(self.a),
            "Aprime": _format_matrix(self.a_prime),
            "Adprime": _format_matrix(self.a_dprime),
        }
        if self.metadata is not None:
            out["metadata"] = self.metadata
        return out

    @classmethod
    def from_json_dict(cls, data: object) -> "TriadDocument":
        dim = _read_dim(data)
        matrices = {}
        for key in ("A", "Aprime", "Adprime"):
            if key not in data:
                raise DocumentFormatError(f"missing matrix {key}")
            matrices[key] = _parse_matrix(key, data[key], dim)
        metadata = data.get("metadata")
        if metadata is not None and not isinstance(metadata, dict):
            raise DocumentFormatError("metadata must be an object")
        return cls(
            dim=dim,
            a=matrices["A"],
            a_prime=matrices["Aprime"],
            a_dprime=matrices["Adprime"],
            metadata=metadata,
        )


TET_DOCUMENT_KEYS = ("X01", "X02", "X03", "X12", "X13", "X23")


@dataclass(frozen=True)
class TetModuleDocument:
    """The six independent edge matrices of a candidate tetrahedron module."""

    dim: int
    x01: RMatrix
    x02: RMatrix
    x03: RMatrix
    x12: RMatrix
    x13: RMatrix
    x23: RMatrix

    def __post_init__(self) -> None:
        for name, matrix in zip(TET_DOCUMENT_KEYS, self._matrices()):
            _check_square(name, matrix, self.dim)

    def _matrices(self) -> tuple[RMatrix, ...]:
        return (self.x01, self.x02, self.x03, self.x12, self.x13, self.x23)

    def to_module(self):
        from triadtet.tet import CANONICAL_EDGES, TetModule

        return TetModule(dict(zip(CANONICAL_EDGES, self._matrices())))

    @classmethod
    def from_module(cls, module) -> "TetModuleDocument":
        from triadtet.tet import CANONICAL_EDGES

        x = tuple(module.gen(i, j) for i, j in CANONICAL_EDGES)
        return cls(module.dim, *x)

    def to_json_dict(self) -> dict:
        out = {"dim": self.dim}
        for key, matrix in zip(TET_DOCUMENT_KEYS, self._matrices()):
            out[key] = _format_matrix(matrix)
        return out

    @classmethod
    def from_json_dict(cls, data: object) -> "TetModuleDocument":
        dim = _read_dim(data)
        matrices = []
        for key in TET_DOCUMENT_KEYS:
            if key not in data:
                raise DocumentFormatError(f"missing matrix {key}")
            matrices.append(_parse_matrix(key, data[key], dim))
        return cls(dim, *matrices)


def _read_dim(data: object) -> int:
    if not isinstance(data, dict):
        raise DocumentFormatError("top level must be an object")
    if "dim" not in data:
        raise DocumentFormatError("missing dim")
    dim = data["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise DocumentFormatError(f"dim must be a positive integer, got {dim!r}")
    return dim


def _load_json(path: str | Path) -> object:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentFormatError(f"not valid JSON: {exc}") from None


def _save_json(data: dict, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(data, indent=1) + "\n", encoding="utf-8"
    )


def load_triad(path: str | Path) -> TriadDocument:
    return TriadDocument.from_json_dict(_load_json(path))


def save_triad(doc: TriadDocument, path: str | Path) -> None:
    _save_json(doc.to_json_dict(), path)


def load_tet_module(path: str | Path) -> TetModuleDocument:
    return TetModuleDocument.from_json_dict(_load_json(path))


def save_tet_module(doc: TetModuleDocument, path: str | Path) -> None:
    _save_json(doc.to_json_dict(), path)


def save_named_matrix(path: str | Path, name: str, matrix: RMatrix) -> None:
    """Write a single matrix under the given key, e.g. a lone X02."""
    _save_json({"dim": matrix.rows, name: _format_matrix(matrix)}, path)
