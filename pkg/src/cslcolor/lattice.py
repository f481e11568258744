"""Full-rank rational lattices: sublattices, indices, sums, intersections,
duals, quotient/coset structure, and affine coset intersection.

A lattice is stored as the row span of a canonical basis: clear denominators,
bring the integer matrix to Hermite normal form, restore the scalar. Two
Lattice values are equal as point sets iff their canonical bases are equal,
so lattices can be deduplicated, hashed, and compared directly. Only exact
rational bases are representable; irrational lattices are out of scope by
construction.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from math import floor, lcm, prod
from typing import Iterable, Optional, Sequence, Union

from .exact import IntMatrix, RatMatrix, hnf, hnf_basis, left_kernel, snf, solve_integer

__all__ = [
    "Lattice",
    "QuotientStructure",
    "CosetLabel",
    "Vector",
    "make_lattice",
    "is_sublattice",
    "index",
    "intersect",
    "lattice_sum",
    "commensurate",
    "affine_intersect",
    "reduce_mod",
    "quotient",
]

# A coset label is the tuple of residues (r_1, ..., r_d) with 0 <= r_i < d_i
# in the Smith coordinates of the quotient.
CosetLabel = tuple[int, ...]
Vector = tuple[Fraction, ...]


def as_vector(v: Sequence[Union[Fraction, int]]) -> Vector:
    return tuple(Fraction(x) for x in v)


def vec_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_is_zero(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


def row_times(v: Sequence[Union[Fraction, int]], m: RatMatrix) -> Vector:
    """Row vector times matrix, exactly."""
    cols = m.num.transpose().entries
    return tuple(
        Fraction(sum(a * b for a, b in zip(v, col)), m.den) for col in cols
    )


class Lattice:
    """Row span of a canonical (scaled-HNF) rational basis of full rank."""

    __slots__ = ("dim", "basis", "_det", "_inv")

    def __init__(self, basis: RatMatrix, _canonical: bool = False):
        if not _canonical:
            lat = make_lattice(basis)
            basis = lat.basis
        if basis.rows != basis.cols:
            raise ValueError("lattice basis must be square")
        object.__setattr__(self, "dim", basis.rows)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_det", None)
        object.__setattr__(self, "_inv", None)

    def __setattr__(self, name, value):
        raise AttributeError("Lattice is immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Lattice) and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"Lattice({self.basis.num.entries!r}, den={self.basis.den})"

    def det(self) -> Fraction:
        if self._det is None:
            object.__setattr__(self, "_det", self.basis.det())
        return self._det

    def inverse(self) -> RatMatrix:
        if self._inv is None:
            object.__setattr__(self, "_inv", self.basis.inverse())
        return self._inv

    def contains(self, p: Sequence[Union[Fraction, int]]) -> bool:
        """Membership: the coordinates of p in this basis are all integers."""
        coords = row_times(as_vector(p), self.inverse())
        return all(x.denominator == 1 for x in coords)

    def coordinates(self, p: Sequence[Union[Fraction, int]]) -> tuple[int, ...]:
        coords = row_times(as_vector(p), self.inverse())
        if any(x.denominator != 1 for x in coords):
            raise ValueError(f"{tuple(p)} is not a lattice point")
        return tuple(int(x) for x in coords)

    def point(self, z: Sequence[int]) -> Vector:
        return row_times(z, self.basis)

    def dual(self) -> "Lattice":
        """Vectors with integer scalar product against every lattice point."""
        return make_lattice(self.inverse().transpose())

    def transformed(self, matrix: RatMatrix) -> "Lattice":
        """Image under a linear map acting on row vectors from the right."""
        return make_lattice(self.basis @ matrix)

    def scaled(self, k: Union[Fraction, int]) -> "Lattice":
        k = Fraction(k)
        if k == 0:
            raise ValueError("scale factor must be nonzero")
        return make_lattice(self.basis.scale(k))

    def __and__(self, other: "Lattice") -> "Lattice":
        return intersect(self, other)

    def __add__(self, other: "Lattice") -> "Lattice":
        return lattice_sum(self, other)

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "denominator": str(self.basis.den),
            "numerator_rows": [[str(x) for x in row] for row in self.basis.num.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "Lattice":
        num = IntMatrix.from_rows([[int(x) for x in row] for row in data["numerator_rows"]])
        den = int(data["denominator"])
        lat = make_lattice(RatMatrix(num, den))
        if lat.dim != int(data["dim"]):
            raise ValueError("dim field does not match the basis")
        return lat

    @classmethod
    def from_json(cls, text: str) -> "Lattice":
        return cls.from_json_dict(json.loads(text))


GeneratorInput = Union[RatMatrix, IntMatrix, Iterable[Sequence[Union[Fraction, int]]]]


def _as_ratmatrix(generators: GeneratorInput) -> RatMatrix:
    if isinstance(generators, RatMatrix):
        return generators
    if isinstance(generators, IntMatrix):
        return RatMatrix(generators)
    return RatMatrix.from_fractions(generators)


def make_lattice(generators: GeneratorInput) -> Lattice:
    """Canonical lattice spanned by the given generator rows.

    More generators than the dimension are fine (the stack is reduced by
    HNF); fewer independent ones than the dimension are an error, since only
    full-rank lattices are supported.
    """
    mat = _as_ratmatrix(generators)
    d = mat.cols
    h = hnf_basis(mat.num)
    rows = [row for row in h.entries if any(row)]
    if len(rows) < d:
        raise ValueError(f"generators span rank {len(rows)} < dimension {d}")
    basis = RatMatrix(IntMatrix.from_rows(rows), mat.den)
    return Lattice(basis, _canonical=True)


def _check_dims(g1: Lattice, g2: Lattice) -> None:
    if g1.dim != g2.dim:
        raise ValueError(f"dimension mismatch: {g1.dim} vs {g2.dim}")


def commensurate(g1: Lattice, g2: Lattice) -> bool:
    """True iff the two lattices share a finite-index common sublattice.

    Full-rank lattices with exact rational bases are always commensurate
    (the change-of-basis matrix is rational by construction); the dimension
    check is the only thing that can fail.
    """
    _check_dims(g1, g2)
    return True


def is_sublattice(sub: Lattice, parent: Lattice) -> bool:
    """True iff every point of ``sub`` lies in ``parent``."""
    _check_dims(sub, parent)
    return (sub.basis @ parent.inverse()).is_integral()


def index(parent: Lattice, sub: Lattice) -> int:
    """Group index [parent : sub], the volume ratio of fundamental domains."""
    if not is_sublattice(sub, parent):
        raise ValueError("not a sublattice")
    return _index_unchecked(parent, sub)


def _index_unchecked(parent: Lattice, sub: Lattice) -> int:
    # determinant ratio only; callers guarantee containment structurally
    ratio = abs(sub.det() / parent.det())
    if ratio.denominator != 1:
        raise ValueError("not a sublattice (non-integral determinant ratio)")
    return int(ratio)


def _common_scale(g1: Lattice, g2: Lattice) -> tuple[IntMatrix, IntMatrix, int]:
    d = lcm(g1.basis.den, g2.basis.den)
    n1 = g1.basis.num.scale(d // g1.basis.den)
    n2 = g2.basis.num.scale(d // g2.basis.den)
    return n1, n2, d


def intersect(g1: Lattice, g2: Lattice) -> Lattice:
    """Intersection, via the left kernel of the stacked integer system.

    A point lies in both row spans iff it is x @ B1 = y @ B2 for integer
    rows x, y; the kernel of [B1; -B2] yields all such pairs, and the x
    parts applied to B1 generate the intersection.
    """
    _check_dims(g1, g2)
    if g1 == g2:
        return g1
    n1, n2, den = _common_scale(g1, g2)
    kernel = left_kernel(n1.vstack(-n2))
    assert kernel is not None and kernel.rows == g1.dim
    x_part = IntMatrix(tuple(row[: g1.dim] for row in kernel.entries))
    return make_lattice(RatMatrix(x_part @ n1, den))


def lattice_sum(g1: Lattice, g2: Lattice) -> Lattice:
    """Smallest lattice containing both (all sums of points)."""
    _check_dims(g1, g2)
    if g1 == g2:
        return g1
    n1, n2, den = _common_scale(g1, g2)
    return make_lattice(RatMatrix(n1.vstack(n2), den))


def reduce_mod(p: Sequence[Union[Fraction, int]], lat: Lattice) -> Vector:
    """Canonical representative of ``p`` modulo the lattice.

    The result is the unique point of ``p + lat`` whose coordinates in the
    canonical basis lie in [0, 1).
    """
    coords = row_times(as_vector(p), lat.inverse())
    frac = tuple(x - floor(x) for x in coords)
    return row_times(frac, lat.basis)


def _solve_coset_point(
    c: Vector, g2: Lattice, gp: Lattice
) -> Optional[Vector]:
    den = lcm(g2.basis.den, gp.basis.den, *(x.denominator for x in c))
    n2 = g2.basis.num.scale(den // g2.basis.den)
    np_ = gp.basis.num.scale(den // gp.basis.den)
    b = tuple(-int(x * den) for x in c)
    zw = solve_integer(n2.vstack(np_).transpose(), b)
    if zw is None:
        return None
    z = zw[: g2.dim]
    offset = row_times(z, g2.basis)
    return vec_add(c, offset)


def affine_intersect(
    c: Sequence[Union[Fraction, int]],
    g2: Lattice,
    gp: Lattice,
    modulo: Optional[Lattice] = None,
) -> Optional[Vector]:
    """A point of ``(c + g2) & gp``, or None if the coset misses ``gp``.

    When a point x is returned the whole intersection equals
    ``x + (g2 & gp)``; x is made canonical by reduction modulo that common
    sublattice (pass it as ``modulo`` if already at hand).
    """
    _check_dims(g2, gp)
    x = _solve_coset_point(as_vector(c), g2, gp)
    if x is None:
        return None
    if modulo is None:
        modulo = intersect(g2, gp)
    return reduce_mod(x, modulo)


class QuotientStructure:
    """The finite abelian group parent/sub with canonical coset labels.

    Invariant factors d_1 | d_2 | ... | d_d come from the Smith normal form
    of the matrix expressing the sublattice basis in parent coordinates.
    Labels are residue tuples in the Smith coordinates, enumerated in
    lexicographic order; the zero label is represented by the zero vector.
    """

    __slots__ = (
        "parent",
        "sub",
        "invariant_factors",
        "labels",
        "coset_reps",
        "label_index",
        "_coords",
        "_rep_basis",
    )

    def __init__(self, parent: Lattice, sub: Lattice):
        if not is_sublattice(sub, parent):
            raise ValueError("not a sublattice")
        coords = (sub.basis @ parent.inverse()).to_int()
        s, _, v = snf(coords)
        factors = tuple(s.entries[i][i] for i in range(s.rows))
        assert all(f > 0 for f in factors)
        v_rat = RatMatrix(v)
        v_inv = v_rat.inverse().to_int()
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "sub", sub)
        object.__setattr__(self, "invariant_factors", factors)
        object.__setattr__(self, "_coords", parent.inverse() @ v_rat)
        object.__setattr__(self, "_rep_basis", v_inv @ parent.basis)
        labels = tuple(itertools.product(*(range(f) for f in factors)))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(
            self, "label_index", {label: i for i, label in enumerate(labels)}
        )
        reps = tuple(row_times(label, self._rep_basis) for label in labels)
        object.__setattr__(self, "coset_reps", reps)
        assert prod(factors) == index(parent, sub)
        assert vec_is_zero(reps[0])

    def __setattr__(self, name, value):
        raise AttributeError("QuotientStructure is immutable")

    @property
    def m(self) -> int:
        return prod(self.invariant_factors)

    def coset_of(self, p: Sequence[Union[Fraction, int]]) -> CosetLabel:
        """Label of the coset of ``sub`` containing ``p`` (p must be in parent)."""
        smith = row_times(as_vector(p), self._coords)
        if any(x.denominator != 1 for x in smith):
            raise ValueError(f"{tuple(p)} is not a point of the parent lattice")
        return tuple(int(x) % f for x, f in zip(smith, self.invariant_factors))

    def rep(self, label: CosetLabel) -> Vector:
        return self.coset_reps[self.label_index[label]]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QuotientStructure)
            and self.parent == other.parent
            and self.sub == other.sub
        )

    def __hash__(self) -> int:
        return hash((self.parent, self.sub))


def quotient(parent: Lattice, sub: Lattice) -> QuotientStructure:
    return QuotientStructure(parent, sub)
