"""Coincidence isometries and coincidence site lattices.

An isometry is an exact rational orthogonal matrix. One convention holds
everywhere: points are row vectors and the matrix acts by right
multiplication, so the rows of the matrix are the images of the ambient
basis vectors. The isometry is stored in ambient coordinates; per-lattice
coordinates are derived on demand, which lets a single isometry serve
several lattices at once.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Sequence, Union

from .exact import IntMatrix, RatMatrix
from .lattice import Lattice, Vector, as_vector, index, intersect, is_sublattice, row_times

__all__ = ["Isometry", "is_coincidence", "csl_lattice", "sigma", "denominator"]


class Isometry:
    """Exact orthogonal map; ``kind`` is "rotation" or "rotoreflection".

    Orthogonality is checked exactly at construction; there is no tolerance,
    so near-orthogonal floating-point input has no way in. ``source``
    optionally records the quaternion parametrization (a 1- or 2-tuple) and
    plays no part in equality.
    """

    __slots__ = ("matrix", "det", "kind", "source")

    def __init__(self, matrix: RatMatrix, source: Optional[tuple] = None):
        if matrix.rows != matrix.cols:
            raise ValueError("isometry matrix must be square")
        if matrix.transpose() @ matrix != RatMatrix.identity(matrix.rows):
            raise ValueError("matrix is not orthogonal (exact check)")
        d = matrix.det()
        assert d in (1, -1)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "det", int(d))
        object.__setattr__(self, "kind", "rotation" if d == 1 else "rotoreflection")
        object.__setattr__(self, "source", source)

    def __setattr__(self, name, value):
        raise AttributeError("Isometry is immutable")

    @classmethod
    def from_rows(cls, rows, source: Optional[tuple] = None) -> "Isometry":
        return cls(RatMatrix.from_fractions(rows), source=source)

    @classmethod
    def identity(cls, dim: int) -> "Isometry":
        return cls(RatMatrix.identity(dim))

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def apply(self, p: Sequence[Union[Fraction, int]]) -> Vector:
        return row_times(as_vector(p), self.matrix)

    def inverse(self) -> "Isometry":
        return Isometry(self.matrix.transpose(), source=None)

    def __mul__(self, other: "Isometry") -> "Isometry":
        """Composition ``self ∘ other`` (apply ``other`` first)."""
        if not isinstance(other, Isometry):
            return NotImplemented
        return Isometry(other.matrix @ self.matrix)

    def __neg__(self) -> "Isometry":
        return Isometry(-self.matrix, source=self.source)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Isometry) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"Isometry({self.matrix.num.entries!r}, den={self.matrix.den}, kind={self.kind})"

    def to_json_dict(self) -> dict:
        data = {
            "denominator": str(self.matrix.den),
            "numerator_rows": [[str(x) for x in row] for row in self.matrix.num.entries],
            "kind": self.kind,
        }
        if self.source is not None:
            data["quaternion"] = ";".join(str(q) for q in self.source)
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "Isometry":
        num = IntMatrix.from_rows([[int(x) for x in row] for row in data["numerator_rows"]])
        iso = cls(RatMatrix(num, int(data["denominator"])))
        if "kind" in data and data["kind"] != iso.kind:
            raise ValueError("kind field does not match the determinant")
        return iso

    @classmethod
    def from_json(cls, text: str) -> "Isometry":
        return cls.from_json_dict(json.loads(text))


def _check(lat: Lattice, iso: Isometry) -> None:
    if lat.dim != iso.dim:
        raise ValueError(f"dimension mismatch: lattice {lat.dim}, isometry {iso.dim}")


def is_coincidence(lat: Lattice, iso: Isometry) -> bool:
    """True iff the lattice and its image are commensurate.

    With exact rational data this always holds once the dimensions match:
    the basis-coordinate matrix of the isometry is rational, so the
    intersection has full rank.
    """
    _check(lat, iso)
    return True


def csl_lattice(lat: Lattice, iso: Isometry) -> Lattice:
    """The coincidence site lattice: the lattice meets its image."""
    _check(lat, iso)
    return intersect(lat, lat.transformed(iso.matrix))


def sigma(lat: Lattice, iso: Isometry) -> int:
    """Coincidence index: the index of the CSL in the lattice.

    Computed as a determinant ratio; the CSL is also verified to sit inside
    the rotated copy, where its index is the same (the transform preserves
    the covolume, so the two determinant ratios agree identically).
    """
    _check(lat, iso)
    image = lat.transformed(iso.matrix)
    csl = intersect(lat, image)
    s = index(lat, csl)
    assert is_sublattice(csl, image) and s == index(image, csl)
    return s


def denominator(lat: Lattice, iso: Isometry) -> int:
    """Least k >= 1 such that k times the isometry is integral in lattice
    coordinates."""
    _check(lat, iso)
    coords = lat.basis @ iso.matrix @ lat.inverse()
    return coords.den
