"""Built-in lattice catalog.

The embeddings are fixed once and shared by the CLI and the verification
suites: the primitive cubic lattice sits at the imaginary Lipschitz
quaternions with basis (i, j, k), the body-centered cubic lattice at the
imaginary Hurwitz quaternions, the face-centered one as its dual; in four
dimensions the primitive hypercubic lattice is the Lipschitz ring with the
standard basis and the centered hypercubic lattice is the Hurwitz ring.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import IntMatrix
from .lattice import Lattice, make_lattice

__all__ = ["integer_lattice", "cubic_p", "cubic_b", "cubic_f", "hypercubic_l", "hypercubic_j", "by_name", "NAMES"]

HALF = Fraction(1, 2)


def integer_lattice(dim: int) -> Lattice:
    return make_lattice(IntMatrix.identity(dim))


def cubic_p() -> Lattice:
    """Primitive cubic: the integer lattice in three dimensions."""
    return integer_lattice(3)


def cubic_b() -> Lattice:
    """Body-centered cubic: integers plus the half-half-half shift."""
    return make_lattice([(HALF, HALF, HALF), (1, 0, 0), (0, 1, 0)])


def cubic_f() -> Lattice:
    """Face-centered cubic: the dual of the body-centered lattice
    (integer vectors with even coordinate sum)."""
    return cubic_b().dual()


def hypercubic_l() -> Lattice:
    """Primitive hypercubic: the Lipschitz quaternions."""
    return integer_lattice(4)


def hypercubic_j() -> Lattice:
    """Centered hypercubic: the Hurwitz quaternions."""
    return make_lattice(
        [(HALF, HALF, HALF, HALF), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    )


def _two_im_j() -> Lattice:
    return cubic_b().scaled(2)


# Builders, not instances, so importing this module stays cheap.
_BUILDERS = {
    "Z2": lambda: integer_lattice(2),
    "Z3": cubic_p,
    "P": cubic_p,
    "ImL": cubic_p,
    "B": cubic_b,
    "ImJ": cubic_b,
    "F": cubic_f,
    "Z4": hypercubic_l,
    "L": hypercubic_l,
    "D4": hypercubic_j,
    "J": hypercubic_j,
    "2ImJ": _two_im_j,
}

NAMES = tuple(_BUILDERS)


def by_name(name: str) -> Lattice:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise ValueError(
            f"unknown lattice name {name!r}; known names: {', '.join(NAMES)}"
        ) from None
