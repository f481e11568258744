"""Hurwitz quaternion arithmetic and the quaternion parametrization of
rational isometries in three and four dimensions.

Quaternions are stored as doubled integer components, so half-integers stay
in integer arithmetic: the tuple ``(2q0, 2q1, 2q2, 2q3)`` is all even for a
Lipschitz quaternion and all odd for the half-integer ones. Rotations come
from ``x -> q x q̄ / |q|²`` (3d, acting on imaginary quaternions) and
``x -> q x p̄ / |qp|`` (4d, admissible pairs); rotoreflections conjugate the
argument first. Matrices are emitted in the package-wide row convention:
row b of the matrix is the image of basis vector b.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterator, Optional, Sequence, Union

from .csl import Isometry
from .exact import RatMatrix

__all__ = [
    "Quaternion",
    "AdmissiblePair",
    "odd_part",
    "inner",
    "cayley_so3",
    "rotoreflection_so3",
    "so4_from_pair",
    "rotoreflection_from_pair",
    "sigma_so3",
    "sigma_d4",
    "sigma_z4",
    "example2_class",
    "prop64_condition",
    "enumerate_primitive",
    "enumerate_admissible_pairs",
    "ideal_membership",
]


def odd_part(n: int) -> int:
    """Largest odd divisor of a positive integer."""
    if n <= 0:
        raise ValueError("odd part needs a positive integer")
    while n % 2 == 0:
        n //= 2
    return n


@dataclass(frozen=True)
class Quaternion:
    """Hurwitz quaternion, stored via doubled components."""

    doubled: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        parities = {x & 1 for x in self.doubled}
        if len(parities) != 1:
            raise ValueError(
                "components must be all integers or all half-integers"
            )

    @classmethod
    def lipschitz(cls, q0: int, q1: int, q2: int, q3: int) -> "Quaternion":
        return cls((2 * q0, 2 * q1, 2 * q2, 2 * q3))

    @classmethod
    def from_components(
        cls, components: Sequence[Union[Fraction, int]]
    ) -> "Quaternion":
        doubled = []
        for x in components:
            f = 2 * Fraction(x)
            if f.denominator != 1:
                raise ValueError(f"component {x} is not an integer or half-integer")
            doubled.append(int(f))
        return cls(tuple(doubled))

    @classmethod
    def parse(cls, text: str) -> "Quaternion":
        """Parse "(a,b,c,d)" with integer or half-integer entries like 1/2."""
        stripped = text.strip()
        if stripped.startswith("(") and stripped.endswith(")"):
            stripped = stripped[1:-1]
        parts = stripped.split(",")
        if len(parts) != 4:
            raise ValueError(f"expected four components, got {text!r}")
        return cls.from_components([Fraction(p.strip()) for p in parts])

    def __str__(self) -> str:
        if self.is_lipschitz:
            return "(" + ",".join(str(x // 2) for x in self.doubled) + ")"
        return "(" + ",".join(f"{x}/2" for x in self.doubled) + ")"

    @property
    def is_lipschitz(self) -> bool:
        return self.doubled[0] % 2 == 0

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.doubled)

    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def integer_components(self) -> tuple[int, int, int, int]:
        if not self.is_lipschitz:
            raise ValueError("not a Lipschitz quaternion")
        return tuple(x // 2 for x in self.doubled)

    def real(self) -> Fraction:
        return Fraction(self.doubled[0], 2)

    def imaginary(self) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(Fraction(x, 2) for x in self.doubled[1:])

    def conj(self) -> "Quaternion":
        a, b, c, d = self.doubled
        return Quaternion((a, -b, -c, -d))

    def norm(self) -> int:
        total = sum(x * x for x in self.doubled)
        assert total % 4 == 0
        return total // 4

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self) -> "Quaternion":
        return Quaternion(tuple(-a for a in self.doubled))

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        """Hamilton product, exact on the doubled representation."""
        if not isinstance(other, Quaternion):
            return NotImplemented
        a0, a1, a2, a3 = self.doubled
        b0, b1, b2, b3 = other.doubled
        e0 = a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3
        e1 = a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2
        e2 = a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1
        e3 = a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0
        # doubled product of two Hurwitz quaternions is always even
        assert e0 % 2 == 0 and e1 % 2 == 0 and e2 % 2 == 0 and e3 % 2 == 0
        return Quaternion((e0 // 2, e1 // 2, e2 // 2, e3 // 2))

    def scale(self, k: int) -> "Quaternion":
        return Quaternion(tuple(k * a for a in self.doubled))

    @property
    def is_primitive(self) -> bool:
        if not self.is_lipschitz:
            return False
        return gcd(*self.integer_components()) == 1

    def primitive_part(self) -> "Quaternion":
        """The quaternion divided by the gcd of its integer components."""
        if self.is_zero:
            raise ValueError("the zero quaternion has no primitive part")
        comps = self.integer_components()
        g = gcd(*comps)
        return Quaternion.lipschitz(*(x // g for x in comps))

    def sign_normalized(self) -> "Quaternion":
        """Representative of {q, -q} whose first nonzero component is positive."""
        for x in self.doubled:
            if x > 0:
                return self
            if x < 0:
                return -self
        raise ValueError("the zero quaternion has no sign normalization")


E = Quaternion.lipschitz(1, 0, 0, 0)
I = Quaternion.lipschitz(0, 1, 0, 0)
J = Quaternion.lipschitz(0, 0, 1, 0)
K = Quaternion.lipschitz(0, 0, 0, 1)
OMEGA = Quaternion((1, 1, 1, 1))  # (1+i+j+k)/2


def inner(q: Quaternion, p: Quaternion) -> Fraction:
    """Standard scalar product; equals the real part of q·p̄."""
    return Fraction(sum(a * b for a, b in zip(q.doubled, p.doubled)), 4)


def _require_primitive(q: Quaternion) -> None:
    if not q.is_primitive:
        raise ValueError(f"{q} is not a primitive Lipschitz quaternion")


def cayley_so3(q: Quaternion) -> Isometry:
    """Rotation x -> q x q̄ / |q|² on imaginary quaternions, as a 3x3 isometry.

    The same rotation comes from q and -q.
    """
    _require_primitive(q)
    n = q.norm()
    qc = q.conj()
    rows = []
    for basis in (I, J, K):
        w = q * basis * qc
        assert w.doubled[0] == 0  # conjugation preserves the imaginary space
        rows.append([Fraction(x, 2 * n) for x in w.doubled[1:]])
    return Isometry(RatMatrix.from_fractions(rows), source=(q,))


def rotoreflection_so3(q: Quaternion) -> Isometry:
    """The det -1 isometry -R_q paired with the rotation R_q."""
    r = cayley_so3(q)
    return Isometry(-r.matrix, source=(q,))


def sigma_so3(q: Quaternion) -> int:
    """Coincidence index of the 3d rotation of q on the primitive cubic
    lattice: the odd part of the norm."""
    _require_primitive(q)
    return odd_part(q.norm())


@dataclass(frozen=True)
class AdmissiblePair:
    """Primitive quaternion pair with |q·p| integral, parametrizing a
    rational 4d rotation."""

    q: Quaternion
    p: Quaternion
    root_norm: int

    @classmethod
    def make(cls, q: Quaternion, p: Quaternion) -> "AdmissiblePair":
        _require_primitive(q)
        _require_primitive(p)
        product = q.norm() * p.norm()
        root = isqrt(product)
        if root * root != product:
            raise ValueError(
                f"pair {q}, {p} is not admissible: |q|^2 |p|^2 = {product} is not a square"
            )
        return cls(q, p, root)

    def __str__(self) -> str:
        return f"{self.q};{self.p}"

    @classmethod
    def parse(cls, text: str) -> "AdmissiblePair":
        parts = text.split(";")
        if len(parts) != 2:
            raise ValueError(f"expected 'QUAT;QUAT', got {text!r}")
        return cls.make(Quaternion.parse(parts[0]), Quaternion.parse(parts[1]))


def so4_from_pair(pair: AdmissiblePair) -> Isometry:
    """Rotation x -> q x p̄ / |qp| as a 4x4 isometry."""
    pc = pair.p.conj()
    rows = []
    for basis in (E, I, J, K):
        w = pair.q * basis * pc
        rows.append([Fraction(x, 2 * pair.root_norm) for x in w.doubled])
    return Isometry(RatMatrix.from_fractions(rows), source=(pair.q, pair.p))


def rotoreflection_from_pair(pair: AdmissiblePair) -> Isometry:
    """Rotoreflection x -> q x̄ p̄ / |qp| (the rotation composed with
    quaternion conjugation)."""
    pc = pair.p.conj()
    rows = []
    for basis in (E, I, J, K):
        w = pair.q * basis.conj() * pc
        rows.append([Fraction(x, 2 * pair.root_norm) for x in w.doubled])
    iso = Isometry(RatMatrix.from_fractions(rows), source=(pair.q, pair.p))
    assert iso.det == -1
    return iso


def sigma_d4(pair: AdmissiblePair) -> int:
    """Coincidence index on the centered hypercubic (Hurwitz) lattice:
    lcm of the odd parts of the two norms."""
    return lcm(odd_part(pair.q.norm()), odd_part(pair.p.norm()))


def denominator_z4(pair: AdmissiblePair) -> int:
    """Least common denominator of the rotation's matrix entries (its
    denominator in standard coordinates)."""
    return so4_from_pair(pair).matrix.den


def sigma_z4(pair: AdmissiblePair) -> int:
    """Coincidence index on the primitive hypercubic lattice:
    lcm of the centered index and the matrix denominator."""
    return lcm(sigma_d4(pair), denominator_z4(pair))


def prop64_condition(pair: AdmissiblePair) -> bool:
    """True iff the primitive and centered hypercubic indices agree.

    Holds exactly when (i) both norms are odd, (ii) both are 2 mod 4 with
    even scalar product, or (iii) both are 0 mod 4 with scalar product
    divisible by 4.
    """
    nq, np_ = pair.q.norm(), pair.p.norm()
    ip = inner(pair.q, pair.p)
    assert ip.denominator == 1
    ip_int = int(ip)
    if nq % 2 == 1 and np_ % 2 == 1:
        return True
    if nq % 4 == 2 and np_ % 4 == 2 and ip_int % 2 == 0:
        return True
    if nq % 4 == 0 and np_ % 4 == 0 and ip_int % 4 == 0:
        return True
    return False


# Color permutations of the four-coloring of the primitive cubic lattice by
# the doubled body-centered sublattice, predicted from the quaternion alone.
# Permutations are index tuples over the colors (0,1,2,3), where color j > 0
# is the coset of the j-th standard basis vector.
_IDENTITY4 = (0, 1, 2, 3)


def example2_class(q: Quaternion) -> tuple[int, int, int, int]:
    """Predicted color permutation for the cubic four-coloring.

    Odd norm: every color is fixed. Norm 2 mod 4: colors 0 and j are fixed,
    where component j has the same parity as component 0, and the other two
    swap. Norm 0 mod 4: a 3-cycle on colors 1,2,3 whose direction depends on
    the parity of the number of components congruent to 1 mod 4.
    """
    _require_primitive(q)
    comps = q.integer_components()
    n = q.norm()
    if n % 2 == 1:
        return _IDENTITY4
    if n % 4 == 2:
        j = next(k for k in (1, 2, 3) if (comps[k] - comps[0]) % 2 == 0)
        others = [k for k in (1, 2, 3) if k != j]
        perm = [0, 1, 2, 3]
        perm[others[0]], perm[others[1]] = others[1], others[0]
        return tuple(perm)
    ones = sum(1 for x in comps if x % 4 == 1)
    if ones % 2 == 0:
        return (0, 2, 3, 1)  # the cycle 1 -> 2 -> 3 -> 1
    return (0, 3, 1, 2)  # the cycle 1 -> 3 -> 2 -> 1


def ideal_membership(q: Quaternion, r: int) -> bool:
    """Membership in the two-sided ideal of Hurwitz quaternions whose norm
    is divisible by 2^r."""
    if r < 0:
        raise ValueError("exponent must be nonnegative")
    return q.norm() % (1 << r) == 0


def enumerate_primitive(norm_bound: int) -> Iterator[Quaternion]:
    """All primitive Lipschitz quaternions with norm at most the bound, one
    per sign class (first nonzero component positive), in lexicographic
    order of the component tuples."""
    if norm_bound < 1:
        raise ValueError("bound must be at least 1")
    top = isqrt(norm_bound)
    for q0 in range(0, top + 1):
        r0 = norm_bound - q0 * q0
        lim1 = isqrt(r0)
        start1 = 0 if q0 == 0 else -lim1
        for q1 in range(start1, lim1 + 1):
            r1 = r0 - q1 * q1
            lim2 = isqrt(r1)
            start2 = 0 if q0 == 0 and q1 == 0 else -lim2
            for q2 in range(start2, lim2 + 1):
                r2 = r1 - q2 * q2
                lim3 = isqrt(r2)
                start3 = 1 if q0 == 0 and q1 == 0 and q2 == 0 else -lim3
                for q3 in range(start3, lim3 + 1):
                    if gcd(q0, q1, q2, q3) == 1:
                        yield Quaternion.lipschitz(q0, q1, q2, q3)


def _squarefree_part(n: int) -> int:
    sf = 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2 == 1:
            sf *= d
        d += 1
    return sf * n


def enumerate_admissible_pairs(sigma_bound: int) -> Iterator[AdmissiblePair]:
    """All admissible primitive pairs (up to overall sign of each member)
    whose centered hypercubic index is at most the bound.

    Primitive norms have 2-adic valuation at most 2, so the norm itself is
    bounded by four times the bound on the odd part.
    """
    if sigma_bound < 1:
        raise ValueError("bound must be at least 1")
    shells: dict[int, list[Quaternion]] = {}
    for q in enumerate_primitive(4 * sigma_bound):
        n = q.norm()
        if odd_part(n) <= sigma_bound:
            shells.setdefault(n, []).append(q)
    by_class: dict[int, list[int]] = {}
    for n in sorted(shells):
        by_class.setdefault(_squarefree_part(n), []).append(n)
    # partner lists per (squarefree class, norm), respecting the lcm bound
    partners: dict[tuple[int, int], list[Quaternion]] = {}
    for sf, norms in by_class.items():
        for nq in norms:
            allowed = [
                np_
                for np_ in norms
                if lcm(odd_part(nq), odd_part(np_)) <= sigma_bound
            ]
            pool = [shells[np_] for np_ in allowed]
            partners[(sf, nq)] = sorted(
                itertools.chain.from_iterable(pool), key=lambda x: x.doubled
            )
    all_q = sorted(
        itertools.chain.from_iterable(shells.values()), key=lambda x: x.doubled
    )
    for q in all_q:
        nq = q.norm()
        for p in partners[(_squarefree_part(nq), nq)]:
            yield AdmissiblePair(q, p, isqrt(nq * p.norm()))
